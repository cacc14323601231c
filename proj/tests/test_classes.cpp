#include "helpers.hpp"

#include <set>

#include "hyperoct/classes.hpp"
#include "hyperoct/statistics.hpp"

using namespace hyperoct;
using testing::code_of;
using testing::perm;

namespace {

unsigned long long factorial(unsigned n) {
  unsigned long long f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

std::vector<SignedPermutation> even_chessboard(unsigned n) {
  std::vector<SignedPermutation> out;
  for (const auto& w : GroupEnumerator::full(n)) {
    if (chessboard_class(w) == Chessboard::Even) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("chessboard classes") {
  CHECK(chessboard_class(perm("[1,-4,-3,2]")) == Chessboard::Even);
  CHECK(chessboard_class(perm("[-2,1]")) == Chessboard::Odd);
  CHECK(chessboard_class(perm("[1,3,2]")) == Chessboard::None);
}

TEST_CASE("chessboard subgroup structure") {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto even = even_chessboard(n);
    CHECK(even.size() == (1ull << n) * factorial((n + 1) / 2) * factorial(n / 2));
    std::size_t odd = 0;
    for (const auto& w : GroupEnumerator::full(n)) odd += chessboard_class(w) == Chessboard::Odd;
    // C_{n,0} has index 2 in C_n exactly when C_{n,1} is nonempty (n even).
    CHECK(odd == (n % 2 == 0 ? even.size() : 0));
  }
  for (unsigned n = 1; n <= 4; ++n) {
    std::vector<SignedPermutation> cn;
    for (const auto& w : GroupEnumerator::full(n)) {
      if (chessboard_class(w) != Chessboard::None) cn.push_back(w);
    }
    for (const auto& u : cn) {
      CHECK(chessboard_class(u.inverse()) == chessboard_class(u));
      for (const auto& v : cn) {
        const Chessboard c = chessboard_class(compose(u, v));
        REQUIRE(c != Chessboard::None);
        // parity classes multiply like Z/2
        CHECK((c == Chessboard::Even) ==
              (chessboard_class(u) == chessboard_class(v)));
      }
    }
  }
}

TEST_CASE("family membership examples") {
  CHECK(is_member(perm("[1,-2]"), Family::M));
  CHECK_FALSE(is_member(perm("[1,-2]"), Family::E));
  CHECK(is_member(perm("[-5,2,1,-4,3]"), Family::E));
  CHECK(is_member(perm("[-1,-2,-3,-4]"), Family::Diagonal));
  CHECK_FALSE(is_member(perm("[2,1]"), Family::Diagonal));
  CHECK(is_member(perm("[-3,-2,1,4]"), Family::Ascending));
  CHECK_FALSE(is_member(perm("[2,1]"), Family::Ascending));
  for (unsigned n = 1; n <= 4; ++n) {
    for (const auto& w : GroupEnumerator::full(n)) {
      CHECK(is_member(w, Family::Ascending) == descent_set(w).subset_of(IndexSet(n, {0})));
      if (is_member(w, Family::E)) CHECK(is_member(w, Family::M));
      if (is_member(w, Family::M)) CHECK(chessboard_class(w) == Chessboard::Even);
    }
  }
}

TEST_CASE("odd sandwich examples") {
  const auto s = odd_sandwiches(perm("[3,-2,-1]"));
  REQUIRE_FALSE(s.empty());
  CHECK(topmost_sandwich(perm("[3,-2,-1]")) == OddSandwich{1, 1, OddSandwich::Kind::Degenerate});
  CHECK(odd_sandwiches(SignedPermutation::identity(5)).empty());
  CHECK(code_of([] { topmost_sandwich(SignedPermutation::identity(3)); }) ==
        ErrorCode::PreconditionViolation);
}

TEST_CASE("sandwich lists are well formed") {
  for (unsigned n = 1; n <= 6; ++n) {
    for (const auto& w : even_chessboard(n)) {
      const auto rho = row_pattern(w);
      const auto list = odd_sandwiches(w);
      std::set<unsigned> rs;
      for (const auto& s : list) {
        CHECK(s.h % 2 == 1);
        CHECK(s.r + s.h + 1 <= n);
        CHECK(rs.insert(s.r).second);
        if (s.kind == OddSandwich::Kind::Degenerate) {
          CHECK(s.r == 1);
          for (unsigned i = 1; i <= s.h; ++i) CHECK(rho[0] == rho[i]);
          CHECK(rho[0] != rho[s.h + 1]);
        } else {
          CHECK(rho[s.r - 1] == rho[s.r + s.h]);
          for (unsigned i = 1; i <= s.h; ++i) CHECK(rho[s.r - 1] != rho[s.r - 1 + i]);
        }
      }
      CHECK(std::is_sorted(list.begin(), list.end(),
                           [](const auto& a, const auto& b) { return a.r < b.r; }));
    }
  }
}

TEST_CASE("no odd sandwich exactly on the monochrome family") {
  for (unsigned n = 1; n <= 6; ++n) {
    for (const auto& w : even_chessboard(n)) {
      CAPTURE(w.to_string());
      CHECK(is_member(w, Family::M) == odd_sandwiches(w).empty());
    }
  }
}

TEST_CASE("ascending structure") {
  CHECK(ascending_structure_check(perm("[-3,-2,1,4]")));
  CHECK(ascending_structure_check(SignedPermutation::identity(6)));
  // not even chessboard: column 1 holds row 2
  CHECK(code_of([] { ascending_structure_check(perm("[-2,-1,3,4]")); }) ==
        ErrorCode::PreconditionViolation);
  // even chessboard but not ascending
  CHECK(code_of([] { ascending_structure_check(perm("[3,2,1]")); }) ==
        ErrorCode::PreconditionViolation);
  for (unsigned n = 1; n <= 6; ++n) {
    std::size_t checked = 0;
    for (const auto& w : even_chessboard(n)) {
      if (!is_member(w, Family::Ascending)) continue;
      CAPTURE(w.to_string());
      CHECK(ascending_structure_check(w));
      ++checked;
    }
    CHECK(checked > 0);
  }
}

TEST_CASE("even permutation blocks") {
  for (unsigned n = 2; n <= 6; n += 2) {
    for (const auto& w : GroupEnumerator::symmetric(n)) {
      if (chessboard_class(w) == Chessboard::None || !descent_set(w).is_even()) continue;
      CAPTURE(w.to_string());
      CHECK(chessboard_class(w) == Chessboard::Even);
      const auto [w1, w2] = sigma_split(w);
      CHECK(w1 == w2);
      CHECK(coxeter_length(w) == 4 * coxeter_length(w1));
    }
  }
}

TEST_CASE("monochrome and even families coincide where expected") {
  for (unsigned n = 1; n <= 6; ++n) {
    const auto even = even_chessboard(n);
    if (n % 2 == 1) {
      for (const auto& w : even) CHECK(is_member(w, Family::M) == is_member(w, Family::E));
      continue;
    }
    for (std::uint64_t m = 0; m < subset_count(n); ++m) {
      const IndexSet I = IndexSet::from_mask(n, m);
      if (!I.is_even()) continue;
      for (const auto& w : even) {
        if (!descent_set(w).subset_of(I)) continue;
        CHECK(is_member(w, Family::M) == is_member(w, Family::E));
      }
    }
  }
}

TEST_CASE("L is additive over the [n-1] factorization on E") {
  for (unsigned n = 1; n <= 6; ++n) {
    const IndexSet type_a = IndexSet::full(n).without(0);
    for (const auto& w : even_chessboard(n)) {
      if (!is_member(w, Family::E)) continue;
      const auto f = parabolic_decompose(w, type_a);
      CAPTURE(w.to_string());
      CHECK(compute_L(w) == compute_L(f.quotient) + compute_L(f.subgroup_part));
    }
  }
  const auto f = parabolic_decompose(perm("[1,-2]"), IndexSet(2, {1}));
  CHECK(f.quotient == perm("[-2,1]"));
  CHECK(f.subgroup_part == perm("[2,1]"));
  CHECK(compute_L(perm("[1,-2]")) == 2);
  CHECK(compute_L(f.quotient) + compute_L(f.subgroup_part) == 3);
}

TEST_CASE("L is additive over [e-1]_0 for even descent types") {
  for (unsigned n = 2; n <= 6; n += 2) {
    std::size_t cases = 0;
    for (const auto& w : even_chessboard(n)) {
      const IndexSet D = descent_set(w);
      if (!D.is_even() || !is_member(w, Family::E)) continue;
      unsigned bound = n;
      for (unsigned d : D.members()) {
        if (d != 0) {
          bound = d;
          break;
        }
      }
      for (unsigned e = 2; e <= std::min(bound, n - 1); e += 2) {
        IndexSet I(n);
        for (unsigned k = 0; k < e; ++k) I = I.with(k);
        const auto f = parabolic_decompose(w, I);
        CAPTURE(w.to_string());
        CAPTURE(e);
        CHECK(compute_L(w) == compute_L(f.quotient) + compute_L(f.subgroup_part));
        ++cases;
      }
    }
    if (n >= 4) CHECK(cases > 0);
  }
  // odd n, outside the hypotheses
  const auto f = parabolic_decompose(perm("[-5,2,1,-4,3]"), IndexSet(5, {0, 1}));
  CHECK(compute_L(perm("[-5,2,1,-4,3]")) == 7);
  CHECK(compute_L(f.subgroup_part) == 2);
  CHECK(compute_L(perm("[-5,2,1,-4,3]")) !=
        compute_L(f.quotient) + compute_L(f.subgroup_part));
}

TEST_CASE("enumeration") {
  CHECK(group_order(2) == 8);
  CHECK(group_order(7) == 645120);
  CHECK(enumerate_group(2).size() == 8);
  CHECK(GroupEnumerator::full(5).size() == 3840);
  const auto bounded = enumerate_descent_bounded(2, IndexSet(2, {0}));
  CHECK(bounded == std::vector<SignedPermutation>{perm("[1,2]"), perm("[-1,2]"),
                                                   perm("[-2,1]"), perm("[-2,-1]")});
  for (unsigned n = 1; n <= 5; ++n) {
    CHECK(enumerate_descent_bounded(n, IndexSet(n)) ==
          std::vector<SignedPermutation>{SignedPermutation::identity(n)});
  }
}

TEST_CASE("enumeration order and partitions") {
  for (unsigned n = 1; n <= 5; ++n) {
    std::vector<oracle::Window> got;
    for (const auto& w : GroupEnumerator::full(n)) got.push_back(w.window());
    CHECK(got == oracle::all_signed(n));
    std::vector<SignedPermutation> joined;
    for (unsigned first = 1; first <= n; ++first) {
      for (const auto& w : GroupEnumerator::partition(n, first)) {
        CHECK(w.row_of(1) == first);
        joined.push_back(w);
      }
    }
    CHECK(joined == enumerate_group(n));
    std::vector<oracle::Window> sym;
    for (const auto& w : GroupEnumerator::symmetric(n)) sym.push_back(w.window());
    CHECK(sym == oracle::all_unsigned(n));
  }
  CHECK(code_of([] { GroupEnumerator::full(13); }) == ErrorCode::OutOfRange);
}
