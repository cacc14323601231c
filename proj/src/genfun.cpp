#include "hyperoct/genfun.hpp"

#include <chrono>
#include <thread>

#include "hyperoct/error.hpp"
#include "hyperoct/statistics.hpp"

namespace hyperoct {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void require_ambient(unsigned n, const IndexSet& I) {
  if (I.ambient() != n) {
    fail(ErrorCode::DegreeMismatch, "subset {" + I.to_string() +
                                        "} is not a subset of [" +
                                        std::to_string(n - 1) + "]_0");
  }
}

}  // namespace

// --- accumulator ------------------------------------------------------

void GenfunAccumulator::add(const SignedPermutation& w) {
  const LengthStats l = length_stats(w);
  long long exponent = 0;
  switch (weight_.kind) {
    case WeightStat::Kind::L:
      exponent = compute_L(w);
      break;
    case WeightStat::Kind::Length:
      exponent = l.length;
      break;
    case WeightStat::Kind::Affine:
      exponent = static_cast<long long>(weight_.length_coeff) * l.length +
                 static_cast<long long>(weight_.neg_coeff) * l.neg +
                 weight_.constant;
      break;
  }
  if (exponent < 0) {
    fail(ErrorCode::InvalidArgument, "negative weight " +
                                         std::to_string(exponent) + " at " +
                                         w.to_string());
  }
  const unsigned sign_value = sign_ == SignStat::Length ? l.length : l.neg;
  const auto e = static_cast<std::size_t>(exponent);
  if (coeffs_.size() <= e) coeffs_.resize(e + 1, 0);
  coeffs_[e] += sign_value % 2 == 0 ? 1 : -1;
  ++count_;
}

// --- descent table ----------------------------------------------------

DescentTable::DescentTable(unsigned n)
    : n_(n),
      width_(std::size_t{n} * (n + 1) / 2 + 1),
      coeffs_(subset_count(n) * width_, 0),
      counts_(subset_count(n), 0) {}

void DescentTable::accumulate(const SignedPermutation& w) {
  const std::uint64_t mask = descent_set(w).mask();
  const unsigned length = coxeter_length(w);
  const unsigned L = compute_L(w);
  row(mask)[L] += length % 2 == 0 ? 1 : -1;
  ++counts_[mask];
}

DescentTable DescentTable::build(unsigned n, unsigned jobs) {
  DescentTable table(n);
  const GroupEnumerator all = GroupEnumerator::full(n);
  if (jobs <= 1) {
    for (const SignedPermutation& w : all) table.accumulate(w);
    return table;
  }
  const unsigned workers = std::min(jobs, n);
  std::vector<DescentTable> partial(workers, DescentTable(n));
  std::vector<std::thread> threads;
  for (unsigned t = 0; t < workers; ++t) {
    threads.emplace_back([&partial, t, workers, n] {
      for (unsigned first = t + 1; first <= n; first += workers) {
        for (const SignedPermutation& w : GroupEnumerator::partition(n, first)) {
          partial[t].accumulate(w);
        }
      }
    });
  }
  for (auto& th : threads) th.join();
  for (const DescentTable& p : partial) table.merge(p);
  return table;
}

void DescentTable::merge(const DescentTable& other) {
  if (other.n_ != n_) fail(ErrorCode::DegreeMismatch, "merging tables of different degree");
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  for (std::size_t k = 0; k < counts_.size(); ++k) counts_[k] += other.counts_[k];
}

IntPolynomial DescentTable::bucket(const IndexSet& J) const {
  require_ambient(n_, J);
  const std::int64_t* r = row(J.mask());
  return IntPolynomial(std::vector<std::int64_t>(r, r + width_));
}

std::uint64_t DescentTable::bucket_count(const IndexSet& J) const {
  require_ambient(n_, J);
  return counts_[J.mask()];
}

IntPolynomial DescentTable::class_sum(const IndexSet& I) const {
  require_ambient(n_, I);
  std::vector<std::int64_t> sum(width_, 0);
  const std::uint64_t m = I.mask();
  for (std::uint64_t s = m;; s = (s - 1) & m) {
    const std::int64_t* r = row(s);
    for (std::size_t k = 0; k < width_; ++k) sum[k] += r[k];
    if (s == 0) break;
  }
  return IntPolynomial(std::move(sum));
}

std::uint64_t DescentTable::class_count(const IndexSet& I) const {
  require_ambient(n_, I);
  std::uint64_t total = 0;
  const std::uint64_t m = I.mask();
  for (std::uint64_t s = m;; s = (s - 1) & m) {
    total += counts_[s];
    if (s == 0) break;
  }
  return total;
}

std::vector<IntPolynomial> DescentTable::all_class_sums() const {
  std::vector<std::int64_t> z = coeffs_;
  const std::uint64_t subsets = subset_count(n_);
  for (unsigned bit = 0; bit < n_; ++bit) {
    const std::uint64_t b = std::uint64_t{1} << bit;
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
      if ((mask & b) == 0) continue;
      std::int64_t* dst = &z[mask * width_];
      const std::int64_t* src = &z[(mask ^ b) * width_];
      for (std::size_t k = 0; k < width_; ++k) dst[k] += src[k];
    }
  }
  std::vector<IntPolynomial> out;
  out.reserve(subsets);
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    const std::int64_t* r = &z[mask * width_];
    out.emplace_back(std::vector<std::int64_t>(r, r + width_));
  }
  return out;
}

// --- conjecture verification -----------------------------------------

std::vector<VerificationReport> verify_subsets(
    unsigned n, std::span<const IndexSet> subsets, unsigned jobs) {
  for (const IndexSet& I : subsets) require_ambient(n, I);
  const auto start = Clock::now();
  const DescentTable table = DescentTable::build(n, jobs);
  const double table_seconds = seconds_since(start);
  std::vector<VerificationReport> out;
  out.reserve(subsets.size());
  for (const IndexSet& I : subsets) {
    const auto t0 = Clock::now();
    VerificationReport r;
    r.n = n;
    r.subset = I;
    r.lhs = table.class_sum(I);
    r.rhs = f_poly(n, I);
    r.passed = r.lhs == r.rhs;
    r.element_count = table.class_count(I);
    r.elapsed_seconds = table_seconds + seconds_since(t0);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<VerificationReport> verify_all(unsigned n, unsigned jobs) {
  std::vector<IndexSet> subsets;
  for (std::uint64_t m = 0; m < subset_count(n); ++m) {
    subsets.push_back(IndexSet::from_mask(n, m));
  }
  return verify_subsets(n, subsets, jobs);
}

VerificationReport verify_conjecture(unsigned n, const IndexSet& I,
                                     unsigned jobs) {
  const IndexSet one[] = {I};
  return verify_subsets(n, one, jobs).front();
}

// --- support identities ----------------------------------------------

bool support_admissible(unsigned n, const IndexSet& I, SupportFamily family) {
  if (I.ambient() != n) return false;
  switch (family) {
    case SupportFamily::Chessboard:
      return true;
    case SupportFamily::Diagonal:
      return I == IndexSet::full(n);
    case SupportFamily::M:
      return I.contains(0);
    case SupportFamily::E:
      return I.contains(0) && (n % 2 == 1 || I.is_even());
  }
  return false;
}

namespace {

bool in_family(const SignedPermutation& w, SupportFamily family) {
  switch (family) {
    case SupportFamily::Chessboard:
      return chessboard_class(w) == Chessboard::Even;
    case SupportFamily::Diagonal:
      return is_member(w, Family::Diagonal);
    case SupportFamily::M:
      return is_member(w, Family::M);
    case SupportFamily::E:
      return is_member(w, Family::E);
  }
  return false;
}

}  // namespace

VerificationReport support_check(unsigned n, const IndexSet& I,
                                 SupportFamily family) {
  require_ambient(n, I);
  if (!support_admissible(n, I, family)) {
    fail(ErrorCode::PreconditionViolation,
         "support identity hypotheses fail for n = " + std::to_string(n) +
             ", I = {" + I.to_string() + "}");
  }
  const auto start = Clock::now();
  GenfunAccumulator whole(SignStat::Length, WeightStat::L());
  GenfunAccumulator restricted(SignStat::Length, WeightStat::L());
  for (const SignedPermutation& w : GroupEnumerator::full(n)) {
    if (!descent_set(w).subset_of(I)) continue;
    whole.add(w);
    if (in_family(w, family)) restricted.add(w);
  }
  VerificationReport r;
  r.n = n;
  r.subset = I;
  r.lhs = whole.result();
  r.rhs = restricted.result();
  r.passed = r.lhs == r.rhs;
  r.element_count = whole.count();
  r.elapsed_seconds = seconds_since(start);
  return r;
}

// --- S_n identities --------------------------------------------------

bool identity_admissible(unsigned n, const IndexSet& I, IdentityKind kind) {
  if (I.ambient() != n) return false;
  if (kind == IdentityKind::Stanley) return true;
  return n % 2 == 0 && I.is_even();
}

VerificationReport identity_check(unsigned n, const IndexSet& I,
                                  IdentityKind kind) {
  require_ambient(n, I);
  if (!identity_admissible(n, I, kind)) {
    fail(ErrorCode::PreconditionViolation,
         "the even-permutation identity needs even n and even I, got n = " +
             std::to_string(n) + ", I = {" + I.to_string() + "}");
  }
  const auto start = Clock::now();
  GenfunAccumulator acc = kind == IdentityKind::Stanley
                              ? GenfunAccumulator(SignStat::Length, WeightStat::length())
                              : GenfunAccumulator(SignStat::Length, WeightStat::L());
  VerificationReport r;
  for (const SignedPermutation& w : GroupEnumerator::symmetric(n)) {
    if (descent_set(w).subset_of(I)) acc.add(w);
  }
  IntPolynomial lhs = acc.result();
  if (kind == IdentityKind::Stanley) {
    // Unsigned sum: recover Σ X^l from the signed accumulator by flipping
    // the odd-degree coefficients (the sign is (-1)^l and the exponent is l).
    std::vector<std::int64_t> c = lhs.coefficients();
    for (std::size_t d = 1; d < c.size(); d += 2) c[d] = -c[d];
    lhs = IntPolynomial(std::move(c));
    r.rhs = q_multinomial(n, I);
  } else {
    r.rhs = q_multinomial(n / 2, I.halved()).dilate(2);
  }
  r.n = n;
  r.subset = I;
  r.lhs = std::move(lhs);
  r.passed = r.lhs == r.rhs;
  r.element_count = acc.count();
  r.elapsed_seconds = seconds_since(start);
  return r;
}

// --- F / G generating functions ------------------------------------------

IntPolynomial fg_genfun(unsigned n, const IndexSet& I, FgVariant variant,
                        unsigned eta) {
  require_ambient(n, I);
  if (eta > 1) fail(ErrorCode::InvalidArgument, "eta must be 0 or 1");
  const WeightStat weight =
      variant == FgVariant::F
          ? WeightStat::affine(2, 2 * static_cast<int>(eta) - 1)
          : WeightStat::length();
  GenfunAccumulator acc(SignStat::Neg, weight);
  for (const SignedPermutation& w : GroupEnumerator::full(n)) {
    if (descent_set(w).subset_of(I)) acc.add(w);
  }
  return acc.result();
}

// --- symmetric rank counts -------------------------------------------

bool is_prime(std::uint64_t q) {
  if (q < 2) return false;
  for (std::uint64_t d = 2; d * d <= q; ++d) {
    if (q % d == 0) return false;
  }
  return true;
}

unsigned rank_mod_p(std::vector<std::int64_t> a, unsigned n, std::int64_t q) {
  auto at = [&](unsigned r, unsigned c) -> std::int64_t& { return a[r * n + c]; };
  unsigned rank = 0;
  for (unsigned col = 0; col < n && rank < n; ++col) {
    unsigned pivot = rank;
    while (pivot < n && at(pivot, col) % q == 0) ++pivot;
    if (pivot == n) continue;
    if (pivot != rank) {
      for (unsigned c = 0; c < n; ++c) std::swap(at(pivot, c), at(rank, c));
    }
    const std::int64_t p = at(rank, col) % q;
    for (unsigned r = rank + 1; r < n; ++r) {
      const std::int64_t f = at(r, col) % q;
      if (f == 0) continue;
      // row_r <- p * row_r - f * row_rank, reduced mod q.
      for (unsigned c = col; c < n; ++c) {
        at(r, c) = ((p * at(r, c) - f * at(rank, c)) % q + q) % q;
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::uint64_t> sym_rank_histogram(unsigned n, std::int64_t q,
                                              std::uint64_t budget) {
  if (n == 0) fail(ErrorCode::OutOfRange, "matrix size must be positive");
  if (q < 2 || !is_prime(static_cast<std::uint64_t>(q))) {
    fail(ErrorCode::InvalidArgument, "q = " + std::to_string(q) + " is not prime");
  }
  const unsigned cells = n * (n + 1) / 2;
  std::uint64_t total = 1;
  for (unsigned k = 0; k < cells; ++k) {
    if (total > budget / static_cast<std::uint64_t>(q)) {
      fail(ErrorCode::BudgetExceeded,
           "q^(n(n+1)/2) exceeds the enumeration budget of " +
               std::to_string(budget) + " matrices");
    }
    total *= static_cast<std::uint64_t>(q);
  }
  std::vector<std::uint64_t> hist(n + 1, 0);
  std::vector<std::int64_t> digits(cells, 0);
  std::vector<std::int64_t> matrix(std::size_t{n} * n, 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    unsigned d = 0;
    for (unsigned r = 0; r < n; ++r) {
      for (unsigned c = r; c < n; ++c, ++d) {
        matrix[r * n + c] = digits[d];
        matrix[c * n + r] = digits[d];
      }
    }
    ++hist[rank_mod_p(matrix, n, q)];
    for (unsigned k = 0; k < cells; ++k) {
      if (++digits[k] < q) break;
      digits[k] = 0;
    }
  }
  return hist;
}

std::uint64_t sym_rank_bruteforce(unsigned n, std::int64_t q, unsigned i,
                                  std::uint64_t budget) {
  if (i > n) fail(ErrorCode::OutOfRange, "corank must lie in [0, n]");
  return sym_rank_histogram(n, q, budget)[n - i];
}

std::uint64_t sym_rank_formula(unsigned n, std::int64_t q, unsigned i) {
  if (n == 0) fail(ErrorCode::OutOfRange, "matrix size must be positive");
  if (i > n) fail(ErrorCode::OutOfRange, "corank must lie in [0, n]");
  if (q < 2 || !is_prime(static_cast<std::uint64_t>(q))) {
    fail(ErrorCode::InvalidArgument, "q = " + std::to_string(q) + " is not prime");
  }
  if (i == n) return 1;
  const unsigned e = n * (n + 1) / 2 - i * (i + 1) / 2;
  const std::int64_t value = eval_reciprocal_power(f_poly(n, IndexSet(n, {i})), q, e);
  if (value < 0) fail(ErrorCode::Internal, "negative matrix count from formula");
  return static_cast<std::uint64_t>(value);
}

SymrankReport sym_rank_check(unsigned n, std::int64_t q, unsigned i,
                             std::uint64_t budget) {
  SymrankReport r;
  r.n = n;
  r.q = q;
  r.i = i;
  r.formula = sym_rank_formula(n, q, i);
  r.brute = sym_rank_bruteforce(n, q, i, budget);
  r.passed = r.brute == r.formula;
  return r;
}

}  // namespace hyperoct
