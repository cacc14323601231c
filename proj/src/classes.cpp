#include "hyperoct/classes.hpp"

#include <algorithm>
#include <cstdlib>

#include "hyperoct/error.hpp"
#include "hyperoct/statistics.hpp"

namespace hyperoct {

Chessboard chessboard_class(const SignedPermutation& w) {
  bool even = true;
  bool odd = true;
  for (unsigned j = 1; j <= w.degree(); ++j) {
    if ((w.row_of(j) + j) % 2 == 0) {
      odd = false;
    } else {
      even = false;
    }
  }
  if (even) return Chessboard::Even;
  if (odd) return Chessboard::Odd;
  return Chessboard::None;
}

namespace {

bool is_diagonal(const SignedPermutation& w) {
  for (unsigned j = 1; j <= w.degree(); ++j) {
    if (w.row_of(j) != j) return false;
  }
  return true;
}

bool is_ascending(const SignedPermutation& w) {
  for (unsigned j = 1; j < w.degree(); ++j) {
    if (w.at(j) > w.at(j + 1)) return false;
  }
  return true;
}

}  // namespace

bool is_member(const SignedPermutation& w, Family family) {
  switch (family) {
    case Family::Diagonal:
      return is_diagonal(w);
    case Family::Ascending:
      return is_ascending(w);
    case Family::E:
    case Family::M: {
      if (chessboard_class(w) != Chessboard::Even) return false;
      const unsigned n = w.degree();
      const IndexSet upper = IndexSet::full(n).without(0);
      const ParabolicFactorization f = parabolic_decompose(w, upper);
      const Chessboard q = chessboard_class(f.quotient);
      const Chessboard s = chessboard_class(f.subgroup_part);
      if (family == Family::E) {
        return q == Chessboard::Even && s == Chessboard::Even;
      }
      return q != Chessboard::None && q == s;
    }
  }
  return false;
}

std::vector<OddSandwich> odd_sandwiches(const SignedPermutation& w) {
  const unsigned n = w.degree();
  const std::vector<int> rho = row_pattern(w);
  auto at = [&](unsigned row) { return rho[row - 1]; };
  std::vector<OddSandwich> out;
  for (unsigned r = 1; r + 2 <= n; ++r) {
    bool found_proper = false;
    bool found_degenerate = false;
    // Proper: the first row after r with ρ equal to ρ(r) closes the run.
    unsigned h = 0;
    while (r + h + 1 <= n && at(r + h + 1) != at(r)) ++h;
    if (h >= 1 && h % 2 == 1 && r + h + 1 <= n) {
      out.push_back({r, h, OddSandwich::Kind::Proper});
      found_proper = true;
    }
    if (r == 1) {
      // Degenerate: ρ constant on rows 1..h+1, then a change at h+2.
      unsigned run = 0;
      while (2 + run <= n && at(2 + run) == at(1)) ++run;
      if (run >= 1 && run % 2 == 1 && run + 2 <= n) {
        out.push_back({1, run, OddSandwich::Kind::Degenerate});
        found_degenerate = true;
      }
    }
    if (found_proper && found_degenerate) {
      fail(ErrorCode::Internal,
           "proper and degenerate odd sandwich at r = 1 in " + w.to_string());
    }
  }
  return out;
}

OddSandwich topmost_sandwich(const SignedPermutation& w) {
  const std::vector<OddSandwich> all = odd_sandwiches(w);
  if (all.empty()) {
    fail(ErrorCode::PreconditionViolation,
         w.to_string() + " has no odd sandwich");
  }
  return all.front();
}

bool ascending_structure_check(const SignedPermutation& w) {
  if (chessboard_class(w) != Chessboard::Even ||
      !is_member(w, Family::Ascending)) {
    fail(ErrorCode::PreconditionViolation,
         w.to_string() + " is not an ascending even chessboard element");
  }
  const std::vector<int> rho = row_pattern(w);
  const unsigned n = w.degree();
  for (unsigned j = 1; 2 * j <= n; ++j) {
    const int lo = static_cast<int>(w.row_of(2 * j - 1));
    const int hi = static_cast<int>(w.row_of(2 * j));
    const int gap = hi - lo;
    if (std::abs(gap) % 2 != 1) return false;
    if (w.at(2 * j) > 0) {
      if (gap <= 0) return false;
      for (int e = lo + 1; e < hi; ++e) {
        if (rho[e - 1] > 0) return false;
      }
      if (w.at(2 * j - 1) < 0 && lo != 1) return false;
    } else if (lo - hi != 1) {
      return false;
    }
  }
  return true;
}

// --- enumeration ------------------------------------------------------

std::uint64_t group_order(unsigned n) {
  std::uint64_t order = 1;
  for (unsigned k = 1; k <= n; ++k) order *= 2 * k;
  return order;
}

GroupEnumerator GroupEnumerator::full(unsigned n) {
  if (n == 0 || n > kMaxEnumerationDegree) {
    fail(ErrorCode::OutOfRange, "enumeration degree must be in [1, " +
                                    std::to_string(kMaxEnumerationDegree) +
                                    "], got " + std::to_string(n));
  }
  return GroupEnumerator(n, 0, true);
}

GroupEnumerator GroupEnumerator::partition(unsigned n, unsigned first) {
  GroupEnumerator e = full(n);
  if (first == 0 || first > n) {
    fail(ErrorCode::OutOfRange, "partition key must be in [1, n]");
  }
  e.first_ = first;
  return e;
}

GroupEnumerator GroupEnumerator::symmetric(unsigned n) {
  GroupEnumerator e = full(n);
  e.signed_ = false;
  return e;
}

std::uint64_t GroupEnumerator::size() const {
  std::uint64_t perms = 1;
  for (unsigned k = 2; k <= (first_ ? n_ - 1 : n_); ++k) perms *= k;
  return signed_ ? perms << n_ : perms;
}

GroupEnumerator::iterator GroupEnumerator::begin() const {
  iterator it;
  it.n_ = n_;
  it.signed_ = signed_;
  it.done_ = false;
  it.fixed_first_ = first_ != 0;
  if (first_ != 0) {
    it.perm_[0] = static_cast<std::int8_t>(first_);
    unsigned v = 1;
    for (unsigned k = 1; k < n_; ++k, ++v) {
      if (v == first_) ++v;
      it.perm_[k] = static_cast<std::int8_t>(v);
    }
  } else {
    for (unsigned k = 0; k < n_; ++k) it.perm_[k] = static_cast<std::int8_t>(k + 1);
  }
  it.current_ = SignedPermutation::identity(n_);
  it.load();
  return it;
}

void GroupEnumerator::iterator::load() {
  std::array<std::int8_t, kMaxDegree> w = perm_;
  for (unsigned k = 0; k < n_; ++k) {
    if ((sign_mask_ >> k) & 1u) w[k] = static_cast<std::int8_t>(-w[k]);
  }
  current_ = SignedPermutation(n_, w);
}

GroupEnumerator::iterator& GroupEnumerator::iterator::operator++() {
  if (signed_ && ++sign_mask_ < (std::uint32_t{1} << n_)) {
    load();
    return *this;
  }
  sign_mask_ = 0;
  auto first = perm_.begin() + (fixed_first_ ? 1 : 0);
  if (!std::next_permutation(first, perm_.begin() + n_)) {
    done_ = true;
    return *this;
  }
  load();
  return *this;
}

std::vector<SignedPermutation> enumerate_group(unsigned n) {
  std::vector<SignedPermutation> out;
  const GroupEnumerator e = GroupEnumerator::full(n);
  out.reserve(e.size());
  for (const SignedPermutation& w : e) out.push_back(w);
  return out;
}

std::vector<SignedPermutation> enumerate_descent_bounded(unsigned n,
                                                         const IndexSet& I) {
  if (I.ambient() != n) {
    fail(ErrorCode::DegreeMismatch, "subset ambient degree differs from n");
  }
  std::vector<SignedPermutation> out;
  for (const SignedPermutation& w : GroupEnumerator::full(n)) {
    if (descent_set(w).subset_of(I)) out.push_back(w);
  }
  return out;
}

}  // namespace hyperoct
