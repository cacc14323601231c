#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hyperoct/index_set.hpp"

namespace hyperoct {

inline constexpr unsigned kMaxDegree = 32;

/// Element of the hyperoctahedral group B_n in window notation
/// [w(1), ..., w(n)]. The window is the single source of truth; w(0) = 0 and
/// w(-i) = -w(i) are implied. Values are immutable after construction.
class SignedPermutation {
 public:
  /// Identity of B_1.
  SignedPermutation() : SignedPermutation(identity(1)) {}

  static SignedPermutation from_window(std::span<const int> window);
  static SignedPermutation from_window(std::initializer_list<int> window) {
    return from_window(std::span<const int>(window.begin(), window.size()));
  }
  /// Parses "[a1,a2,...,an]" with optional whitespace.
  static SignedPermutation parse(std::string_view text);

  /// n = 0 gives the trivial element of B_0.
  static SignedPermutation identity(unsigned n);
  /// Coxeter generator s_i, 0 <= i <= n-1: s_0 = [-1,2,...,n], s_i swaps
  /// positions i and i+1.
  static SignedPermutation generator(unsigned n, unsigned i);
  /// w_0 = [-1,-2,...,-n].
  static SignedPermutation longest_element(unsigned n);

  unsigned degree() const noexcept { return n_; }

  /// w(x) for x in [±n]_0.
  int operator()(int x) const noexcept {
    if (x > 0) return w_[x - 1];
    if (x < 0) return -w_[-x - 1];
    return 0;
  }
  /// Window entry w(pos), 1-based.
  int at(unsigned pos) const noexcept { return w_[pos - 1]; }

  std::vector<int> window() const;

  /// i(j) = |w(j)|: the row holding the nonzero entry of column j.
  unsigned row_of(unsigned column) const noexcept {
    const int v = w_[column - 1];
    return static_cast<unsigned>(v < 0 ? -v : v);
  }
  /// j(i) = |w^{-1}(i)|; O(n).
  unsigned column_of(unsigned row) const noexcept;
  /// Column index of every row, indexed 0..n with entry 0 fixed to 0
  /// (the j(0) := 0 convention).
  std::array<int, kMaxDegree + 1> columns_by_row() const noexcept;

  SignedPermutation inverse() const;
  /// w * s_i: acts on positions.
  SignedPermutation times_generator(unsigned i) const;
  /// s_i * w: acts on values (rows).
  SignedPermutation generator_times(unsigned i) const;

  bool is_identity() const noexcept;
  std::string to_string() const;

  friend bool operator==(const SignedPermutation& a,
                         const SignedPermutation& b) noexcept {
    return a.n_ == b.n_ && a.w_ == b.w_;
  }
  friend std::strong_ordering operator<=>(const SignedPermutation& a,
                                          const SignedPermutation& b) noexcept {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.w_ <=> b.w_;
  }

 private:
  SignedPermutation(unsigned n, const std::array<std::int8_t, kMaxDegree>& w)
      : n_(static_cast<std::uint8_t>(n)), w_(w) {}

  friend SignedPermutation compose(const SignedPermutation&,
                                   const SignedPermutation&);
  friend class GroupEnumerator;

  std::uint8_t n_ = 1;
  std::array<std::int8_t, kMaxDegree> w_{};
};

/// (u∘v)(x) = u(v(x)); agrees with the product of signed permutation
/// matrices.
SignedPermutation compose(const SignedPermutation& u,
                          const SignedPermutation& v);

/// r x s matrix over {-1, 0, 1}. Statistic-bearing columns are the ones with
/// exactly one nonzero entry. Indices are 1-based like the matrices they
/// model.
class ColumnMatrix {
 public:
  ColumnMatrix(unsigned rows, unsigned cols);
  /// Row-major entries, each in {-1, 0, 1}.
  static ColumnMatrix from_rows(unsigned rows, unsigned cols,
                                std::span<const int> entries);

  unsigned rows() const noexcept { return rows_; }
  unsigned cols() const noexcept { return cols_; }

  int at(unsigned i, unsigned j) const noexcept {
    return entries_[(i - 1) * cols_ + (j - 1)];
  }
  void set(unsigned i, unsigned j, int value);

  /// True iff column j has exactly one nonzero entry (j ∈ 𝒮).
  bool is_statistic_column(unsigned j) const noexcept;
  /// i(j), or 0 when column j is not in 𝒮.
  unsigned row_of(unsigned j) const noexcept;
  /// j(i), or 0 when row i does not have exactly one nonzero entry.
  unsigned column_of(unsigned i) const noexcept;

  friend bool operator==(const ColumnMatrix&, const ColumnMatrix&) = default;

 private:
  unsigned rows_;
  unsigned cols_;
  std::vector<std::int8_t> entries_;
};

/// Signed permutation matrix: entry sign(w(j)) at (|w(j)|, j).
ColumnMatrix matrix_view(const SignedPermutation& w);

/// σ: odd columns (with their rows, order-preserved) give w1 ∈ B_{⌈n/2⌉},
/// even columns give w2 ∈ B_{⌊n/2⌋}. For n = 1 the second factor is the
/// trivial element of B_0.
std::pair<SignedPermutation, SignedPermutation> sigma_split(
    const SignedPermutation& w);

/// w1 * w2: the unique even chessboard element of the σ fibre over
/// (w1, w2). Requires deg w1 ∈ {deg w2, deg w2 + 1}.
SignedPermutation star_merge(const SignedPermutation& w1,
                             const SignedPermutation& w2);

struct ParabolicFactorization {
  SignedPermutation whole;
  IndexSet subset;
  SignedPermutation quotient;       // w^I, minimal coset representative
  SignedPermutation subgroup_part;  // w_I ∈ <s_i : i ∈ I>
};

/// w = w^I w_I by right-descent stripping.
ParabolicFactorization parabolic_decompose(const SignedPermutation& w,
                                           const IndexSet& subset);

}  // namespace hyperoct
