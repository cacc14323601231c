#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hyperoct/classes.hpp"
#include "hyperoct/index_set.hpp"
#include "hyperoct/polynomial.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

enum class SignStat { Length, Neg };

/// Exponent statistic: L, l, or length_coeff·l + neg_coeff·neg + constant.
struct WeightStat {
  enum class Kind { L, Length, Affine };
  Kind kind = Kind::L;
  int length_coeff = 0;
  int neg_coeff = 0;
  int constant = 0;

  static WeightStat L() { return {}; }
  static WeightStat length() { return {Kind::Length, 0, 0, 0}; }
  static WeightStat affine(int length_coeff, int neg_coeff, int constant = 0) {
    return {Kind::Affine, length_coeff, neg_coeff, constant};
  }
};

/// Running Σ (-1)^{sign(w)} X^{weight(w)}. Negative weights throw
/// InvalidArgument.
class GenfunAccumulator {
 public:
  GenfunAccumulator(SignStat sign, WeightStat weight)
      : sign_(sign), weight_(weight) {}

  void add(const SignedPermutation& w);
  std::uint64_t count() const noexcept { return count_; }
  IntPolynomial result() const { return IntPolynomial(coeffs_); }

 private:
  SignStat sign_;
  WeightStat weight_;
  std::vector<std::int64_t> coeffs_;
  std::uint64_t count_ = 0;
};

template <typename Range>
IntPolynomial signed_genfun(const Range& elements, SignStat sign,
                            WeightStat weight) {
  GenfunAccumulator acc(sign, weight);
  for (const auto& w : elements) acc.add(w);
  return acc.result();
}

/// g_J = Σ_{D(w) = J} (-1)^{l(w)} X^{L(w)} for every J ⊆ [n-1]_0, from a
/// single pass over B_n.
class DescentTable {
 public:
  /// jobs > 1 partitions the stream by |w(1)|; the result does not depend on
  /// jobs.
  static DescentTable build(unsigned n, unsigned jobs = 1);

  unsigned degree() const noexcept { return n_; }
  IntPolynomial bucket(const IndexSet& J) const;
  std::uint64_t bucket_count(const IndexSet& J) const;

  /// Σ_{J ⊆ I} g_J by direct submask iteration.
  IntPolynomial class_sum(const IndexSet& I) const;
  std::uint64_t class_count(const IndexSet& I) const;
  /// Class sums for every I at once via the subset-sum (zeta) transform;
  /// entry I.mask().
  std::vector<IntPolynomial> all_class_sums() const;

  void merge(const DescentTable& other);

 private:
  explicit DescentTable(unsigned n);
  std::int64_t* row(std::uint64_t mask) { return &coeffs_[mask * width_]; }
  const std::int64_t* row(std::uint64_t mask) const {
    return &coeffs_[mask * width_];
  }
  void accumulate(const SignedPermutation& w);

  unsigned n_;
  std::size_t width_;  // n(n+1)/2 + 1
  std::vector<std::int64_t> coeffs_;
  std::vector<std::uint64_t> counts_;
};

struct VerificationReport {
  unsigned n = 0;
  IndexSet subset;
  IntPolynomial lhs;
  IntPolynomial rhs;
  bool passed = false;
  std::uint64_t element_count = 0;
  double elapsed_seconds = 0.0;
};

VerificationReport verify_conjecture(unsigned n, const IndexSet& I,
                                     unsigned jobs = 1);
/// All 2^n subsets from one DescentTable, in increasing mask order.
std::vector<VerificationReport> verify_all(unsigned n, unsigned jobs = 1);
/// Reports for the given subsets from one DescentTable.
std::vector<VerificationReport> verify_subsets(
    unsigned n, std::span<const IndexSet> subsets, unsigned jobs = 1);

enum class SupportFamily { Chessboard, Diagonal, M, E };

/// Whether (n, I, family) satisfies the hypotheses of the support identity.
bool support_admissible(unsigned n, const IndexSet& I, SupportFamily family);
/// lhs: class sum over B_n^{I^c}; rhs: the same sum restricted to the family.
VerificationReport support_check(unsigned n, const IndexSet& I,
                                 SupportFamily family);

enum class IdentityKind { Stanley, Evenperm };

bool identity_admissible(unsigned n, const IndexSet& I, IdentityKind kind);
/// Stanley: Σ_{w ∈ S_n, D(w) ⊆ I} X^{l(w)} vs binom(n, I)_X.
/// Evenperm: Σ_{w ∈ S_n, D(w) ⊆ I} (-1)^l X^L vs binom(n/2, I/2)_{X^2}.
VerificationReport identity_check(unsigned n, const IndexSet& I,
                                  IdentityKind kind);

enum class FgVariant { F, G };

/// F (η ∈ {0,1}): Σ (-1)^{neg} X^{2l + (2η-1) neg};  G: Σ (-1)^{neg} X^{l};
/// both over B_n^{I^c}.
IntPolynomial fg_genfun(unsigned n, const IndexSet& I, FgVariant variant,
                        unsigned eta = 0);

// --- symmetric matrices over F_q ---------------------------------------

inline constexpr std::uint64_t kDefaultSymrankBudget = 100'000'000;

bool is_prime(std::uint64_t q);

/// Rank of a square matrix over F_q (q prime), fraction-free elimination.
unsigned rank_mod_p(std::vector<std::int64_t> entries, unsigned n,
                    std::int64_t q);

/// histogram[r] = #{symmetric x ∈ Mat_n(F_q) : rk x = r}, r = 0..n.
std::vector<std::uint64_t> sym_rank_histogram(
    unsigned n, std::int64_t q, std::uint64_t budget = kDefaultSymrankBudget);
/// Count of rank n - i.
std::uint64_t sym_rank_bruteforce(unsigned n, std::int64_t q, unsigned i,
                                  std::uint64_t budget = kDefaultSymrankBudget);
/// q^{C(n+1,2) - C(i+1,2)} f_{n,{i}}(1/q) for i < n; 1 for i = n.
std::uint64_t sym_rank_formula(unsigned n, std::int64_t q, unsigned i);

struct SymrankReport {
  unsigned n = 0;
  std::int64_t q = 0;
  unsigned i = 0;
  std::uint64_t brute = 0;
  std::uint64_t formula = 0;
  bool passed = false;
};

SymrankReport sym_rank_check(unsigned n, std::int64_t q, unsigned i,
                             std::uint64_t budget = kDefaultSymrankBudget);

}  // namespace hyperoct
