#include "helpers.hpp"

#include <map>

#include "hyperoct/classes.hpp"
#include "hyperoct/involutions.hpp"
#include "hyperoct/statistics.hpp"

using namespace hyperoct;
using testing::code_of;
using testing::perm;

TEST_CASE("star on the smallest non-chessboard permutation") {
  const SignedPermutation w = perm("[1,3,2]");
  REQUIRE(in_domain(InvolutionKind::Star, w));
  const InvolutionReport r = star_involution(w);
  CHECK(r.output != w);
  CHECK(descent_set(r.output) == descent_set(w));
  CHECK(compute_L(r.output) == compute_L(w));
  const unsigned a = coxeter_length(w);
  const unsigned b = coxeter_length(r.output);
  CHECK((a == b + 1 || b == a + 1));
  CHECK(star_involution(r.output).output == w);
  CHECK(code_of([] { star_involution(perm("[1,2,3]")); }) == ErrorCode::PreconditionViolation);
}

TEST_CASE("circle base case") {
  // C_{2,0} equals D_2, so the first nontrivial case lives in B_3.
  CHECK_FALSE(in_domain(InvolutionKind::Circle, perm("[-2,-1]")));
  CHECK(code_of([] { circle_involution(perm("[-2,-1]")); }) ==
        ErrorCode::PreconditionViolation);
  const InvolutionReport r = circle_involution(perm("[3,2,1]"));
  CHECK(r.output == perm("[3,-2,1]"));
  CHECK(r.pivot == std::vector<unsigned>{0});
  CHECK(compute_L(r.output) == compute_L(perm("[3,2,1]")));
  CHECK(circle_move(perm("[3,2,1]"), 0) == r.output);
}

TEST_CASE("the minimal circle index is not an involution") {
  // The literal smallest-index rule sends [5,4,1,2,3] to [5,2,1,4,3], whose
  // own smallest index leads elsewhere.
  const SignedPermutation w = perm("[5,4,1,2,3]");
  const auto i = circle_minimal_pivot(w);
  REQUIRE(i.has_value());
  const SignedPermutation once = circle_move(w, *i);
  CHECK(once == perm("[5,2,1,4,3]"));
  const auto k = circle_minimal_pivot(once);
  REQUIRE(k.has_value());
  CHECK(circle_move(once, *k) == perm("[5,-2,1,4,3]"));
  // the pivot rule used by circle_involution pairs them up
  CHECK(circle_involution(circle_involution(w).output).output == w);
}

TEST_CASE("vee on the worked example") {
  const SignedPermutation w = perm("[3,-2,-1]");
  REQUIRE(in_domain(InvolutionKind::Vee, w));
  const InvolutionReport r = vee_involution(w);
  CHECK(r.output == perm("[-1,-2,3]"));
  CHECK(r.pivot == std::vector<unsigned>{2});
  REQUIRE(r.sandwich.has_value());
  CHECK(r.sandwich->r == 1);
  CHECK(r.sandwich->h == 1);
  CHECK(coxeter_length(w) == 5);
  CHECK(coxeter_length(r.output) == 4);
  CHECK(compute_L(r.output) == 3);
  CHECK(descent_set(r.output) == IndexSet(3, {0, 1}));
  CHECK(code_of([] { vee_involution(perm("[1,2]")); }) == ErrorCode::PreconditionViolation);
}

TEST_CASE("apply_involution dispatches") {
  const SignedPermutation w = perm("[3,-2,-1]");
  CHECK(apply_involution(InvolutionKind::Vee, w).output == vee_involution(w).output);
  CHECK(apply_involution(InvolutionKind::Star, perm("[2,1]")).kind == InvolutionKind::Star);
}

TEST_CASE("exhaustive involution suites") {
  for (unsigned n = 1; n <= 5; ++n) {
    for (InvolutionKind k : {InvolutionKind::Star, InvolutionKind::Circle, InvolutionKind::Vee}) {
      const InvolutionCheckSummary s = check_involution(k, n);
      CAPTURE(n);
      CAPTURE(static_cast<int>(k));
      CAPTURE(s.first_failure);
      CHECK(s.violations() == 0);
      CHECK_FALSE(s.first_counterexample.has_value());
    }
  }
  // domain sizes: |B_n|-|C_{n,0}|, |C_{n,0}|-2^n, |C_{n,0}|-|M_n|
  CHECK(check_involution(InvolutionKind::Star, 4).domain_size == 384 - 64);
  CHECK(check_involution(InvolutionKind::Circle, 4).domain_size == 64 - 16);
  CHECK(check_involution(InvolutionKind::Vee, 3).domain_size == 8);
}

TEST_CASE("involution domains match their definitions") {
  for (unsigned n = 1; n <= 5; ++n) {
    std::size_t star = 0, circle = 0, vee = 0;
    for (const auto& w : GroupEnumerator::full(n)) {
      const bool even = chessboard_class(w) == Chessboard::Even;
      CHECK(in_domain(InvolutionKind::Star, w) == !even);
      CHECK(in_domain(InvolutionKind::Circle, w) == (even && !is_member(w, Family::Diagonal)));
      CHECK(in_domain(InvolutionKind::Vee, w) == (even && !is_member(w, Family::M)));
      star += !even;
      circle += even && !is_member(w, Family::Diagonal);
      vee += even && !is_member(w, Family::M);
    }
    CHECK(check_involution(InvolutionKind::Star, n).domain_size == star);
    CHECK(check_involution(InvolutionKind::Circle, n).domain_size == circle);
    CHECK(check_involution(InvolutionKind::Vee, n).domain_size == vee);
  }
}

TEST_CASE("ascending extensions") {
  CHECK(extend_ascending(perm("[1]"), ExtensionSign::Plus) == perm("[1,2,3]"));
  CHECK(extend_ascending(perm("[1]"), ExtensionSign::Minus) == perm("[-3,-2,1]"));
  CHECK(code_of([] { extend_ascending(perm("[1,2]"), ExtensionSign::Plus); }) ==
        ErrorCode::PreconditionViolation);
  CHECK(code_of([] { extend_ascending(perm("[3,2,1]"), ExtensionSign::Plus); }) ==
        ErrorCode::PreconditionViolation);

  for (unsigned n = 1; n + 2 <= 7; n += 2) {
    std::map<SignedPermutation, int> hits;
    for (const auto& w : GroupEnumerator::full(n)) {
      if (chessboard_class(w) != Chessboard::Even || !is_member(w, Family::Ascending)) continue;
      const SignedPermutation plus = extend_ascending(w, ExtensionSign::Plus);
      const SignedPermutation minus = extend_ascending(w, ExtensionSign::Minus);
      CHECK(compute_L(plus) == compute_L(w));
      CHECK(coxeter_length(plus) == coxeter_length(w));
      CHECK(compute_L(minus) == compute_L(w) + n + 2);
      CHECK(coxeter_length(minus) % 2 != coxeter_length(w) % 2);
      ++hits[plus];
      ++hits[minus];
    }
    std::size_t targets = 0;
    for (const auto& v : GroupEnumerator::full(n + 2)) {
      if (chessboard_class(v) != Chessboard::Even || !is_member(v, Family::Ascending)) continue;
      ++targets;
      CAPTURE(v.to_string());
      const auto it = hits.find(v);
      CHECK((it != hits.end() && it->second == 1));
    }
    CHECK(hits.size() == targets);
  }
}

TEST_CASE("diagonal extensions") {
  CHECK(extend_diagonal(perm("[1]"), ExtensionSign::Plus) == perm("[1,2]"));
  const SignedPermutation m = extend_diagonal(perm("[1]"), ExtensionSign::Minus);
  CHECK(m == perm("[1,-2]"));
  CHECK(coxeter_length(m) == 3);
  CHECK(compute_L(m) == 2);
  CHECK(code_of([] { extend_diagonal(perm("[2,1]"), ExtensionSign::Plus); }) ==
        ErrorCode::PreconditionViolation);

  for (unsigned n = 2; n <= 6; ++n) {
    std::map<SignedPermutation, int> hits;
    for (const auto& v : GroupEnumerator::full(n - 1)) {
      if (!is_member(v, Family::Diagonal)) continue;
      const SignedPermutation plus = extend_diagonal(v, ExtensionSign::Plus);
      const SignedPermutation minus = extend_diagonal(v, ExtensionSign::Minus);
      CHECK(compute_L(plus) == compute_L(v));
      CHECK(coxeter_length(plus) == coxeter_length(v));
      CHECK(compute_L(minus) == compute_L(v) + n);
      CHECK(coxeter_length(minus) == coxeter_length(v) + 2 * n - 1);
      ++hits[plus];
      ++hits[minus];
    }
    CHECK(hits.size() == (1u << n));
    for (const auto& [v, count] : hits) {
      CHECK(count == 1);
      CHECK(is_member(v, Family::Diagonal));
    }
  }
}
