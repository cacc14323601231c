#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "hyperoct/index_set.hpp"

namespace hyperoct {

/// Dense polynomial in X with int64 coefficients; index = exponent. Always
/// normalized (no trailing zeros; zero polynomial is empty). All arithmetic
/// is overflow-checked and throws ErrorCode::Overflow.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<std::int64_t> coeffs);
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);

  static IntPolynomial constant(std::int64_t c);
  /// c X^k.
  static IntPolynomial monomial(unsigned k, std::int64_t c = 1);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(unsigned k) const noexcept {
    return k < coeffs_.size() ? coeffs_[k] : 0;
  }
  const std::vector<std::int64_t>& coefficients() const noexcept {
    return coeffs_;
  }

  IntPolynomial& operator+=(const IntPolynomial& other);
  IntPolynomial& operator-=(const IntPolynomial& other);
  IntPolynomial& operator*=(const IntPolynomial& other);
  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) {
    return a += b;
  }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) {
    return a -= b;
  }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) {
    return a *= b;
  }
  IntPolynomial operator-() const;

  /// p(X^k).
  IntPolynomial dilate(unsigned k) const;
  /// p(1) as the coefficient sum.
  std::int64_t coefficient_sum() const;
  std::int64_t evaluate(std::int64_t x) const;

  /// "1 - X + X^3"; "0" for the zero polynomial.
  std::string to_string() const;
  /// "[1,-1,0,1]"; "[]" for zero.
  std::string to_json() const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  void normalize();
  std::vector<std::int64_t> coeffs_;
};

/// r with divisor * r = dividend. NotDivisible on a nonzero remainder or a
/// non-integral quotient coefficient; InvalidArgument for a zero divisor.
IntPolynomial exact_div(const IntPolynomial& dividend,
                        const IntPolynomial& divisor);

/// (k) = 1 - X^k, with (0) = 1.
IntPolynomial q_int(unsigned k);
/// (n)! = (1)(2)...(n).
IntPolynomial q_factorial(unsigned n);
/// (a)! / ((a-b)! (b)!), by exact division.
IntPolynomial q_binomial(unsigned a, unsigned b);
/// binom(n, i_l) binom(i_l, i_{l-1}) ... binom(i_2, i_1); 1 for I = ∅.
IntPolynomial q_multinomial(unsigned n, const IndexSet& I);

/// f_{n,I} = (n)!/(i_1)! · Π_r Π_{σ=1}^{⌊(i_{r+1}-i_r)/2⌋} (2σ)^{-1}, with
/// i_1 = min(I ∪ {n}) and i_{l+1} = n. Divisions are exact; a failure would
/// mean f_{n,I} ∉ Z[X] and throws NotDivisible.
IntPolynomial f_poly(unsigned n, const IndexSet& I);

/// q^e p(1/q) = Σ_d coeff_d q^{e-d}. Requires e >= deg p.
std::int64_t eval_reciprocal_power(const IntPolynomial& p, std::int64_t q,
                                   unsigned e);

namespace closed_form {

// Product formulas built by multiplication and the X-Pascal recurrence only,
// with no polynomial division.

/// Gaussian binomial via binom(a,b) = binom(a-1,b-1) + X^b binom(a-1,b).
IntPolynomial pascal_binomial(unsigned a, unsigned b);
/// (1)(3)...(ñ), ñ the largest odd number <= n; 1 for n = 0.
IntPolynomial odd_product(unsigned n);
/// (1)(2)...(n) by multiplication.
IntPolynomial factorial_product(unsigned n);
/// Even n, even I: binom(n/2, I/2)_{X^2} · (1)(3)...(n-1) / (1)(3)...(i_1-1).
IntPolynomial even_case(unsigned n, const IndexSet& I);

}  // namespace closed_form

}  // namespace hyperoct
