#pragma once

#include <array>
#include <cstdint>
#include <iterator>
#include <optional>
#include <vector>

#include "hyperoct/index_set.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

enum class Chessboard { Even, Odd, None };

/// Even iff |w(j)| ≡ j (mod 2) for all j (C_{n,0}); Odd iff |w(j)| ≢ j for all
/// j (C_{n,1}).
Chessboard chessboard_class(const SignedPermutation& w);

enum class Family {
  Diagonal,   // |w(i)| = i for all i
  Ascending,  // w(1) < ... < w(n)
  E,          // even chessboard with both [n-1]-factors even chessboard
  M,          // even chessboard with both [n-1]-factors of one chessboard type
};

bool is_member(const SignedPermutation& w, Family family);

struct OddSandwich {
  enum class Kind { Proper, Degenerate };
  unsigned r = 0;
  unsigned h = 0;
  Kind kind = Kind::Proper;

  friend bool operator==(const OddSandwich&, const OddSandwich&) = default;
};

/// All odd sandwiches (r, h) sorted by r. At most one exists per r.
std::vector<OddSandwich> odd_sandwiches(const SignedPermutation& w);
/// The sandwich with minimal r; PreconditionViolation if there is none.
OddSandwich topmost_sandwich(const SignedPermutation& w);

/// Structure test for ascending even chessboard elements: every
/// column pair (2j-1, 2j) either sandwiches an even run of negative rows
/// between two positive entries, or holds two negative entries in adjacent
/// rows. PreconditionViolation unless w ∈ C_{n,0} is ascending.
bool ascending_structure_check(const SignedPermutation& w);

/// Lexicographic stream over B_n: unsigned permutations in lexicographic
/// order, and for each one the sign vectors in increasing mask order (bit k
/// negates position k+1). A partition stream fixes |w(1)|; concatenating the
/// partitions for first = 1..n reproduces the full stream.
class GroupEnumerator {
 public:
  static constexpr unsigned kMaxEnumerationDegree = 12;

  static GroupEnumerator full(unsigned n);
  static GroupEnumerator partition(unsigned n, unsigned first);
  /// Unsigned permutations only: S_n = (B_n)_{[n-1]}.
  static GroupEnumerator symmetric(unsigned n);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = SignedPermutation;
    using difference_type = std::ptrdiff_t;
    using pointer = const SignedPermutation*;
    using reference = const SignedPermutation&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.done_ == b.done_;
    }

   private:
    friend class GroupEnumerator;
    void load();

    unsigned n_ = 0;
    bool signed_ = true;
    bool fixed_first_ = false;
    bool done_ = true;
    std::uint32_t sign_mask_ = 0;
    std::array<std::int8_t, kMaxDegree> perm_{};
    SignedPermutation current_;
  };

  iterator begin() const;
  iterator end() const { return iterator{}; }

  unsigned degree() const noexcept { return n_; }
  /// Number of elements this stream yields.
  std::uint64_t size() const;

 private:
  GroupEnumerator(unsigned n, unsigned first, bool is_signed)
      : n_(n), first_(first), signed_(is_signed) {}

  unsigned n_;
  unsigned first_;  // 0 = unrestricted
  bool signed_;
};

/// |B_n| = 2^n n!.
std::uint64_t group_order(unsigned n);

std::vector<SignedPermutation> enumerate_group(unsigned n);
/// {w ∈ B_n : D(w) ⊆ I}, i.e. the descent class B_n^{I^c}.
std::vector<SignedPermutation> enumerate_descent_bounded(unsigned n,
                                                         const IndexSet& I);

}  // namespace hyperoct
