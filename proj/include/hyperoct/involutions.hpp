#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hyperoct/classes.hpp"
#include "hyperoct/signed_permutation.hpp"

namespace hyperoct {

enum class InvolutionKind { Star, Circle, Vee };

struct InvolutionReport {
  InvolutionKind kind = InvolutionKind::Star;
  SignedPermutation input;
  SignedPermutation output;
  /// Generator indices used: {i} for star and circle, {μ} for vee.
  std::vector<unsigned> pivot;
  /// Topmost odd sandwich, vee only.
  std::optional<OddSandwich> sandwich;
};

/// Domain of each involution: B_n \ C_{n,0}, C_{n,0} \ D_n, C_{n,0} \ M_n.
bool in_domain(InvolutionKind kind, const SignedPermutation& w);

/// w* = s_i w, i minimal in [n-1]_0 with j(i) ≡ j(i+1) (mod 2), j(0) := 0.
InvolutionReport star_involution(const SignedPermutation& w);

/// w° = s_{i+1} s_i s_{i+1} w. The pivot row p = i+1 is the row holding the
/// largest column m that is not fixed (i(m) ≠ m); p is a strict peak of
/// j(.) and the move leaves column m in place, so w°° = w.
InvolutionReport circle_involution(const SignedPermutation& w);

/// Smallest i ∈ [n-2]_0 with j(i+1) outside [min, max] of j(i), j(i+2).
/// This pivot rule is not stable under the move for n >= 5 and is kept for
/// comparison only.
std::optional<unsigned> circle_minimal_pivot(const SignedPermutation& w);
/// s_{i+1} s_i s_{i+1} w for a caller-chosen i.
SignedPermutation circle_move(const SignedPermutation& w, unsigned i);

/// w∨ = w^{[n-1]} s_μ w_{[n-1]}, μ from the topmost odd sandwich.
InvolutionReport vee_involution(const SignedPermutation& w);

InvolutionReport apply_involution(InvolutionKind kind,
                                  const SignedPermutation& w);

enum class ExtensionSign { Plus, Minus };

/// w+ = diag(w, 1, 1); w- places w in the top-right block with -1 at
/// (n+1, 2) and (n+2, 1). Requires n odd and w ascending even chessboard.
SignedPermutation extend_ascending(const SignedPermutation& w,
                                   ExtensionSign sign);
/// v± = diag(v, ±1). Requires v diagonal.
SignedPermutation extend_diagonal(const SignedPermutation& v,
                                  ExtensionSign sign);

struct InvolutionCheckSummary {
  InvolutionKind kind = InvolutionKind::Star;
  unsigned n = 0;
  std::uint64_t domain_size = 0;
  std::uint64_t fixed_points = 0;
  std::uint64_t leaves_domain = 0;
  std::uint64_t square_failures = 0;
  std::uint64_t L_failures = 0;
  std::uint64_t parity_failures = 0;
  std::uint64_t descent_failures = 0;
  std::optional<SignedPermutation> first_counterexample;
  std::string first_failure;

  std::uint64_t violations() const {
    return fixed_points + leaves_domain + square_failures + L_failures +
           parity_failures + descent_failures;
  }
};

/// Exhaustive property run over the involution's domain in B_n. Descent
/// requirement per kind: star preserves D; circle none; vee preserves
/// D \ {0}, and all of D when the topmost sandwich is proper.
InvolutionCheckSummary check_involution(InvolutionKind kind, unsigned n);

}  // namespace hyperoct
