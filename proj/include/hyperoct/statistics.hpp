#pragma once

#include <vector>

#include "hyperoct/index_set.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

struct LengthStats {
  unsigned inv = 0;
  unsigned neg = 0;
  unsigned nsp = 0;
  unsigned length = 0;  // inv + neg + nsp
};

struct AbcStats {
  unsigned a = 0;
  unsigned b = 0;
  unsigned c = 0;
};

struct StatRecord {
  unsigned inv = 0;
  unsigned neg = 0;
  unsigned nsp = 0;
  unsigned length = 0;
  unsigned L = 0;
  unsigned a = 0;
  unsigned b = 0;
  unsigned c = 0;
  IndexSet descents;
};

LengthStats length_stats(const SignedPermutation& w);
unsigned coxeter_length(const SignedPermutation& w);

/// D(w) = {i ∈ [n-1]_0 : w(i) > w(i+1)} with w(0) = 0.
IndexSet descent_set(const SignedPermutation& w);

/// L from its definition: half the number of pairs (i, j) in [±n]_0^2 with
/// i < j, w(i) > w(j) and i, j of opposite parity. Throws Internal if the raw
/// count is odd.
unsigned compute_L_direct(const SignedPermutation& w);

/// a, b, c over the statistic-bearing columns of M.
AbcStats abc_stats(const ColumnMatrix& m);

/// L = a + b + 2c, evaluated on the window directly in O(n^2).
unsigned compute_L(const SignedPermutation& w);

/// ρ_w(i) = sign of the nonzero entry in row i, i.e. sign(w^{-1}(i));
/// element i-1 of the result is ρ(i).
std::vector<int> row_pattern(const SignedPermutation& w);

/// All of the above in one pass over the window.
StatRecord compute_stats(const SignedPermutation& w);

}  // namespace hyperoct
