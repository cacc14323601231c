#include "hyperoct/polynomial.hpp"

#include <algorithm>
#include <functional>

#include "hyperoct/error.hpp"

namespace hyperoct {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) {
    fail(ErrorCode::Overflow, "integer overflow in polynomial addition");
  }
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) {
    fail(ErrorCode::Overflow, "integer overflow in polynomial subtraction");
  }
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) {
    fail(ErrorCode::Overflow, "integer overflow in polynomial product");
  }
  return r;
}

}  // namespace

IntPolynomial::IntPolynomial(std::initializer_list<std::int64_t> coeffs)
    : coeffs_(coeffs) {
  normalize();
}

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs)
    : coeffs_(std::move(coeffs)) {
  normalize();
}

IntPolynomial IntPolynomial::constant(std::int64_t c) {
  return IntPolynomial(std::vector<std::int64_t>{c});
}

IntPolynomial IntPolynomial::monomial(unsigned k, std::int64_t c) {
  std::vector<std::int64_t> v(k + 1, 0);
  v[k] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
    coeffs_[k] = checked_add(coeffs_[k], other.coeffs_[k]);
  }
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
    coeffs_[k] = checked_sub(coeffs_[k], other.coeffs_[k]);
  }
  normalize();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<std::int64_t> out(coeffs_.size() + other.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) {
      out[i + j] = checked_add(out[i + j], checked_mul(coeffs_[i], other.coeffs_[j]));
    }
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = checked_sub(0, c);
  return r;
}

IntPolynomial IntPolynomial::dilate(unsigned k) const {
  if (k == 0) {
    fail(ErrorCode::InvalidArgument, "dilation factor must be positive");
  }
  if (is_zero()) return {};
  std::vector<std::int64_t> out((coeffs_.size() - 1) * k + 1, 0);
  for (std::size_t d = 0; d < coeffs_.size(); ++d) out[d * k] = coeffs_[d];
  return IntPolynomial(std::move(out));
}

std::int64_t IntPolynomial::coefficient_sum() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s = checked_add(s, c);
  return s;
}

std::int64_t IntPolynomial::evaluate(std::int64_t x) const {
  std::int64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = checked_add(checked_mul(acc, x), *it);
  }
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    const std::int64_t c = coeffs_[d];
    if (c == 0) continue;
    const bool negative = c < 0;
    const std::uint64_t mag =
        negative ? static_cast<std::uint64_t>(-(c + 1)) + 1 : static_cast<std::uint64_t>(c);
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (d == 0 || mag != 1) out += std::to_string(mag);
    if (d >= 1) out += 'X';
    if (d >= 2) out += '^' + std::to_string(d);
  }
  return out;
}

std::string IntPolynomial::to_json() const {
  std::string out = "[";
  for (std::size_t d = 0; d < coeffs_.size(); ++d) {
    if (d) out += ',';
    out += std::to_string(coeffs_[d]);
  }
  out += ']';
  return out;
}

IntPolynomial exact_div(const IntPolynomial& dividend,
                        const IntPolynomial& divisor) {
  if (divisor.is_zero()) fail(ErrorCode::InvalidArgument, "division by zero polynomial");
  if (dividend.is_zero()) return {};
  const int dq = dividend.degree() - divisor.degree();
  if (dq < 0) {
    fail(ErrorCode::NotDivisible,
         "(" + divisor.to_string() + ") does not divide (" +
             dividend.to_string() + ")");
  }
  std::vector<std::int64_t> rem = dividend.coefficients();
  const auto& den = divisor.coefficients();
  const std::int64_t lead = den.back();
  std::vector<std::int64_t> quot(static_cast<std::size_t>(dq) + 1, 0);
  for (int k = dq; k >= 0; --k) {
    const std::int64_t top = rem[static_cast<std::size_t>(k) + den.size() - 1];
    if (top % lead != 0) {
      fail(ErrorCode::NotDivisible,
           "(" + divisor.to_string() + ") does not divide (" +
               dividend.to_string() + ")");
    }
    const std::int64_t q = top / lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < den.size(); ++j) {
      auto& slot = rem[static_cast<std::size_t>(k) + j];
      slot = checked_sub(slot, checked_mul(q, den[j]));
    }
  }
  for (auto c : rem) {
    if (c != 0) {
      fail(ErrorCode::NotDivisible,
           "(" + divisor.to_string() + ") does not divide (" +
               dividend.to_string() + ")");
    }
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial q_int(unsigned k) {
  if (k == 0) return IntPolynomial::constant(1);
  return IntPolynomial::constant(1) - IntPolynomial::monomial(k);
}

IntPolynomial q_factorial(unsigned n) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (unsigned k = 1; k <= n; ++k) p *= q_int(k);
  return p;
}

IntPolynomial q_binomial(unsigned a, unsigned b) {
  if (b > a) {
    fail(ErrorCode::InvalidArgument, "q_binomial needs b <= a");
  }
  return exact_div(exact_div(q_factorial(a), q_factorial(a - b)),
                   q_factorial(b));
}

IntPolynomial q_multinomial(unsigned n, const IndexSet& I) {
  if (I.ambient() != n) {
    fail(ErrorCode::DegreeMismatch, "subset ambient degree differs from n");
  }
  IntPolynomial p = IntPolynomial::constant(1);
  unsigned upper = n;
  const std::vector<unsigned> members = I.members();
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    p *= q_binomial(upper, *it);
    upper = *it;
  }
  return p;
}

IntPolynomial f_poly(unsigned n, const IndexSet& I) {
  if (I.ambient() != n) {
    fail(ErrorCode::DegreeMismatch, "subset ambient degree differs from n");
  }
  std::vector<unsigned> chain = I.members();
  const unsigned i1 = chain.empty() ? n : chain.front();
  std::vector<unsigned> denominators;
  for (unsigned k = 1; k <= i1; ++k) denominators.push_back(k);
  chain.push_back(n);
  for (std::size_t r = 0; r + 1 < chain.size(); ++r) {
    const unsigned gap = chain[r + 1] - chain[r];
    for (unsigned sigma = 1; sigma <= gap / 2; ++sigma) {
      denominators.push_back(2 * sigma);
    }
  }
  std::sort(denominators.begin(), denominators.end(), std::greater<>());
  IntPolynomial p = q_factorial(n);
  for (unsigned k : denominators) p = exact_div(p, q_int(k));
  return p;
}

std::int64_t eval_reciprocal_power(const IntPolynomial& p, std::int64_t q,
                                   unsigned e) {
  if (p.degree() > static_cast<int>(e)) {
    fail(ErrorCode::InvalidArgument,
         "exponent " + std::to_string(e) + " is below the degree " +
             std::to_string(p.degree()));
  }
  // Horner in 1/q scaled by q^e: Σ c_d q^{e-d}.
  std::int64_t acc = 0;
  std::int64_t power = 1;
  for (unsigned k = 0; k <= e; ++k) {
    const unsigned d = e - k;
    if (static_cast<int>(d) <= p.degree()) {
      acc = checked_add(acc, checked_mul(p.coeff(d), power));
    }
    if (k < e) power = checked_mul(power, q);
  }
  return acc;
}

namespace closed_form {

IntPolynomial pascal_binomial(unsigned a, unsigned b) {
  if (b > a) fail(ErrorCode::InvalidArgument, "pascal_binomial needs b <= a");
  // row[k] = binom(m, k) for the current m.
  std::vector<IntPolynomial> row(a + 1);
  row[0] = IntPolynomial::constant(1);
  for (unsigned m = 1; m <= a; ++m) {
    for (unsigned k = std::min(m, b); k >= 1; --k) {
      row[k] = row[k - 1] + IntPolynomial::monomial(k) * row[k];
    }
  }
  return row[b];
}

IntPolynomial odd_product(unsigned n) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (unsigned k = 1; k <= n; k += 2) p *= q_int(k);
  return p;
}

IntPolynomial factorial_product(unsigned n) {
  IntPolynomial p = IntPolynomial::constant(1);
  for (unsigned k = 1; k <= n; ++k) {
    p *= IntPolynomial::constant(1) - IntPolynomial::monomial(k);
  }
  return p;
}

IntPolynomial even_case(unsigned n, const IndexSet& I) {
  if (n % 2 != 0 || I.ambient() != n || !I.is_even()) {
    fail(ErrorCode::PreconditionViolation,
         "even_case needs even n and an even subset");
  }
  const std::vector<unsigned> members = I.members();
  IntPolynomial binom = IntPolynomial::constant(1);
  unsigned upper = n / 2;
  for (auto it = members.rbegin(); it != members.rend(); ++it) {
    binom *= pascal_binomial(upper, *it / 2);
    upper = *it / 2;
  }
  const unsigned i1 = members.empty() ? n : members.front();
  IntPolynomial odd = IntPolynomial::constant(1);
  for (unsigned k = i1 + 1; k < n; k += 2) odd *= q_int(k);
  return binom.dilate(2) * odd;
}

}  // namespace closed_form

}  // namespace hyperoct
