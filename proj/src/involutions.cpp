#include "hyperoct/involutions.hpp"

#include <algorithm>
#include <cstdlib>

#include "hyperoct/error.hpp"
#include "hyperoct/statistics.hpp"

namespace hyperoct {

namespace {

const char* kind_name(InvolutionKind kind) {
  switch (kind) {
    case InvolutionKind::Star:
      return "star";
    case InvolutionKind::Circle:
      return "circle";
    case InvolutionKind::Vee:
      return "vee";
  }
  return "?";
}

void require_domain(InvolutionKind kind, const SignedPermutation& w) {
  if (!in_domain(kind, w)) {
    fail(ErrorCode::PreconditionViolation,
         w.to_string() + " is outside the domain of the " + kind_name(kind) +
             " involution");
  }
}

}  // namespace

bool in_domain(InvolutionKind kind, const SignedPermutation& w) {
  const bool even = chessboard_class(w) == Chessboard::Even;
  switch (kind) {
    case InvolutionKind::Star:
      return !even;
    case InvolutionKind::Circle:
      return even && !is_member(w, Family::Diagonal);
    case InvolutionKind::Vee:
      return even && !is_member(w, Family::M);
  }
  return false;
}

InvolutionReport star_involution(const SignedPermutation& w) {
  require_domain(InvolutionKind::Star, w);
  const auto cols = w.columns_by_row();
  const unsigned n = w.degree();
  for (unsigned i = 0; i < n; ++i) {
    if (cols[i] % 2 == cols[i + 1] % 2) {
      return {InvolutionKind::Star, w, w.generator_times(i), {i}, std::nullopt};
    }
  }
  fail(ErrorCode::Internal, "no star pivot for " + w.to_string());
}

SignedPermutation circle_move(const SignedPermutation& w, unsigned i) {
  return w.generator_times(i + 1).generator_times(i).generator_times(i + 1);
}

std::optional<unsigned> circle_minimal_pivot(const SignedPermutation& w) {
  const auto cols = w.columns_by_row();
  const unsigned n = w.degree();
  for (unsigned i = 0; i + 2 <= n; ++i) {
    const int left = cols[i];
    const int mid = cols[i + 1];
    const int right = cols[i + 2];
    if (mid < std::min(left, right) || mid > std::max(left, right)) return i;
  }
  return std::nullopt;
}

InvolutionReport circle_involution(const SignedPermutation& w) {
  require_domain(InvolutionKind::Circle, w);
  unsigned m = w.degree();
  while (w.row_of(m) == m) --m;
  const unsigned peak_row = w.row_of(m);
  const unsigned i = peak_row - 1;
  return {InvolutionKind::Circle, w, circle_move(w, i), {i}, std::nullopt};
}

InvolutionReport vee_involution(const SignedPermutation& w) {
  require_domain(InvolutionKind::Vee, w);
  const unsigned n = w.degree();
  const OddSandwich top = topmost_sandwich(w);
  const ParabolicFactorization f =
      parabolic_decompose(w, IndexSet::full(n).without(0));
  const auto cols = f.quotient.columns_by_row();
  const int j = cols[top.r];
  const int j_prime = cols[top.r + top.h + 1];
  if (std::abs(j - j_prime) != 1) {
    fail(ErrorCode::Internal,
         "vee: sandwich rows of the ascending factor are not in adjacent "
         "columns for w = " +
             w.to_string() + " (quotient " + f.quotient.to_string() +
             ", r = " + std::to_string(top.r) + ", h = " +
             std::to_string(top.h) + ", j = " + std::to_string(j) +
             ", j' = " + std::to_string(j_prime) + ")");
  }
  const unsigned mu = static_cast<unsigned>(std::min(j, j_prime));
  const SignedPermutation out =
      compose(f.quotient, f.subgroup_part.generator_times(mu));
  return {InvolutionKind::Vee, w, out, {mu}, top};
}

InvolutionReport apply_involution(InvolutionKind kind,
                                  const SignedPermutation& w) {
  switch (kind) {
    case InvolutionKind::Star:
      return star_involution(w);
    case InvolutionKind::Circle:
      return circle_involution(w);
    case InvolutionKind::Vee:
      return vee_involution(w);
  }
  fail(ErrorCode::InvalidArgument, "unknown involution kind");
}

SignedPermutation extend_ascending(const SignedPermutation& w,
                                   ExtensionSign sign) {
  const unsigned n = w.degree();
  if (n % 2 == 0 || chessboard_class(w) != Chessboard::Even ||
      !is_member(w, Family::Ascending)) {
    fail(ErrorCode::PreconditionViolation,
         "extend_ascending needs odd degree and an ascending even chessboard "
         "element, got " +
             w.to_string());
  }
  std::vector<int> window;
  const int big = static_cast<int>(n);
  if (sign == ExtensionSign::Plus) {
    window = w.window();
    window.push_back(big + 1);
    window.push_back(big + 2);
  } else {
    window = {-(big + 2), -(big + 1)};
    for (int v : w.window()) window.push_back(v);
  }
  return SignedPermutation::from_window(window);
}

SignedPermutation extend_diagonal(const SignedPermutation& v,
                                  ExtensionSign sign) {
  if (!is_member(v, Family::Diagonal)) {
    fail(ErrorCode::PreconditionViolation,
         v.to_string() + " is not a diagonal element");
  }
  std::vector<int> window = v.window();
  const int next = static_cast<int>(v.degree()) + 1;
  window.push_back(sign == ExtensionSign::Plus ? next : -next);
  return SignedPermutation::from_window(window);
}

InvolutionCheckSummary check_involution(InvolutionKind kind, unsigned n) {
  InvolutionCheckSummary s;
  s.kind = kind;
  s.n = n;
  auto note = [&](const SignedPermutation& w, const std::string& what) {
    if (!s.first_counterexample) {
      s.first_counterexample = w;
      s.first_failure = what;
    }
  };
  for (const SignedPermutation& w : GroupEnumerator::full(n)) {
    if (!in_domain(kind, w)) continue;
    ++s.domain_size;
    const InvolutionReport r = apply_involution(kind, w);
    const SignedPermutation& x = r.output;
    if (x == w) {
      ++s.fixed_points;
      note(w, "fixed point");
    }
    if (!in_domain(kind, x)) {
      ++s.leaves_domain;
      note(w, "image " + x.to_string() + " leaves the domain");
      continue;
    }
    if (apply_involution(kind, x).output != w) {
      ++s.square_failures;
      note(w, "image " + x.to_string() + " does not map back");
    }
    const StatRecord sw = compute_stats(w);
    const StatRecord sx = compute_stats(x);
    if (sw.L != sx.L) {
      ++s.L_failures;
      note(w, "L changes from " + std::to_string(sw.L) + " to " +
                  std::to_string(sx.L));
    }
    // star and vee move by a single generator on one side, so |Δl| = 1;
    // circle only flips the parity.
    const int dl = static_cast<int>(sx.length) - static_cast<int>(sw.length);
    const bool length_ok = kind == InvolutionKind::Circle
                               ? (std::abs(dl) % 2 == 1)
                               : (std::abs(dl) == 1);
    if (!length_ok) {
      ++s.parity_failures;
      note(w, "length changes by " + std::to_string(dl));
    }
    bool descent_ok = true;
    if (kind == InvolutionKind::Star) {
      descent_ok = sw.descents == sx.descents;
    } else if (kind == InvolutionKind::Vee) {
      descent_ok = sw.descents.without(0) == sx.descents.without(0);
      if (r.sandwich && r.sandwich->kind == OddSandwich::Kind::Proper) {
        descent_ok = descent_ok && sw.descents == sx.descents;
      }
    }
    if (!descent_ok) {
      ++s.descent_failures;
      note(w, "descent set changes from {" + sw.descents.to_string() +
                  "} to {" + sx.descents.to_string() + "}");
    }
  }
  return s;
}

}  // namespace hyperoct
