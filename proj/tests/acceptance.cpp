// Acceptance run: one PASS/FAIL line per criterion.
//
//   acceptance            exit 0 unless a criterion fails outside the
//                         documented discrepancy list below
//   acceptance --strict   exit 1 on any FAIL

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hyperoct/classes.hpp"
#include "hyperoct/genfun.hpp"
#include "hyperoct/involutions.hpp"
#include "hyperoct/statistics.hpp"
#include "oracle.hpp"

using namespace hyperoct;

namespace {

// Pinned thresholds.
constexpr double kVerifySmallSeconds = 5.0;   // all n <= 6 together
constexpr double kVerifySevenSeconds = 180.0;  // n = 7, one thread
constexpr double kSymrankSeconds = 60.0;

// The published worked example gives L([2,5,1,-4,3]) = 6. The definition
// gives 7, checked three independent ways below.
const std::set<int> kDocumentedDiscrepancies = {2};

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      failures.push_back(what);
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

SignedPermutation P(const char* text) { return SignedPermutation::parse(text); }

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

std::map<unsigned, std::vector<IntPolynomial>> g_class_sums;

Outcome conjecture() {
  Outcome o;
  double small = 0.0, seven = 0.0;
  std::size_t subsets = 0;
  for (unsigned n = 1; n <= 7; ++n) {
    const auto t0 = Clock::now();
    const auto reports = verify_all(n, 1);
    const double dt = seconds_since(t0);
    (n <= 6 ? small : seven) += dt;
    std::vector<IntPolynomial> sums;
    for (const auto& r : reports) {
      o.expect(r.passed, "n=" + std::to_string(n) + " I=" + r.subset.to_string());
      sums.push_back(r.lhs);
      ++subsets;
    }
    o.expect(reports.size() == subset_count(n), "subset count n=" + std::to_string(n));
    g_class_sums[n] = std::move(sums);
  }
  o.expect(small < kVerifySmallSeconds, "n<=6 took " + fmt_seconds(small));
  o.expect(seven < kVerifySevenSeconds, "n=7 took " + fmt_seconds(seven));
  o.detail = std::to_string(subsets) + " subsets, n<=6 " + fmt_seconds(small) + ", n=7 " +
             fmt_seconds(seven) + " single-threaded";
  return o;
}

Outcome worked_examples() {
  Outcome o;
  {
    const SignedPermutation w = P("[1,-4,-3,2]");
    const AbcStats s = abc_stats(matrix_view(w));
    o.expect(compute_L(w) == 5 && compute_L_direct(w) == 5, "L([1,-4,-3,2]) = 5");
    o.expect(s.a == 1 && s.b == 2 && s.c == 1, "(a,b,c) = (1,2,1)");
  }
  {
    const SignedPermutation w = P("[3,-2,-1]");
    o.expect(coxeter_length(w) == 5 && compute_L(w) == 3 && descent_set(w) == IndexSet(3, {1}),
             "[3,-2,-1] has (5, 3, {1})");
    const InvolutionReport r = vee_involution(w);
    o.expect(r.output == P("[-1,-2,3]"), "vee image [-1,-2,3]");
    o.expect(coxeter_length(r.output) == 4 && compute_L(r.output) == 3 &&
                 descent_set(r.output) == IndexSet(3, {0, 1}),
             "image has (4, 3, {0,1})");
    o.expect(r.pivot == std::vector<unsigned>{2}, "mu = 2");
  }
  {
    const SignedPermutation w = P("[-5,2,1,-4,3]");
    const auto f = parabolic_decompose(w, IndexSet(5, {0, 1}));
    o.expect(compute_L(w) == 7, "L([-5,2,1,-4,3]) = 7");
    o.expect(f.quotient == P("[2,5,1,-4,3]") && f.subgroup_part == P("[-2,1,3,4,5]"),
             "factors [2,5,1,-4,3] * [-2,1,3,4,5]");
    o.expect(compute_L(f.subgroup_part) == 2, "L(w_I) = 2");
    const unsigned direct = compute_L_direct(f.quotient);
    const AbcStats s = abc_stats(matrix_view(f.quotient));
    const unsigned naive = oracle::L(f.quotient.window());
    const bool consistent = direct == naive && s.a + s.b + 2 * s.c == naive;
    o.expect(consistent, "independent L computations disagree on the quotient");
    o.expect(direct == 6, "L(w^I) stated as 6, computed " + std::to_string(direct) +
                              " by the definition, by a+b+2c and by the oracle");
    o.expect(compute_L(w) != compute_L(f.quotient) + compute_L(f.subgroup_part),
             "additivity should fail");
  }
  {
    const SignedPermutation w = P("[1,-2]");
    o.expect(is_member(w, Family::M) && !is_member(w, Family::E), "[1,-2] in M_2 \\ E_2");
    const auto f = parabolic_decompose(w, IndexSet(2, {1}));
    o.expect(compute_L(w) == 2 && compute_L(f.quotient) == 2 && compute_L(f.subgroup_part) == 1,
             "2 != 2 + 1");
  }
  o.detail = o.pass ? "all examples exact" : std::to_string(o.failures.size()) + " sub-item(s) off";
  return o;
}

oracle::Poly odd_chain_product(unsigned from, unsigned n) {
  std::vector<unsigned> ks;
  for (unsigned k = from; k < n; k += 2) ks.push_back(k);
  return oracle::product_of(ks);
}

Outcome closed_forms() {
  Outcome o;
  std::size_t cases = 0;
  for (unsigned n = 1; n <= 7; ++n) {
    const auto& sums = g_class_sums.at(n);
    std::vector<unsigned> odds, all;
    for (unsigned k = 1; k <= n; ++k) {
      all.push_back(k);
      if (k % 2 == 1) odds.push_back(k);
    }
    o.expect(sums[IndexSet(n, {0}).mask()].coefficients() == oracle::product_of(odds),
             "I={0} n=" + std::to_string(n));
    o.expect(sums[IndexSet::full(n).mask()].coefficients() == oracle::product_of(all),
             "I=full n=" + std::to_string(n));
    cases += 2;
  }
  for (unsigned n = 2; n <= 6; n += 2) {
    const auto& sums = g_class_sums.at(n);
    for (std::uint64_t m = 0; m < subset_count(n); ++m) {
      const IndexSet I = IndexSet::from_mask(n, m);
      if (!I.is_even()) continue;
      // binom(n/2; I/2) in X^2 times the odd q-integers above min I
      const auto members = I.members();
      oracle::Poly binom{1};
      unsigned top = n / 2;
      for (auto it = members.rbegin(); it != members.rend(); ++it) {
        binom = oracle::mul(binom, oracle::gaussian(top, *it / 2));
        top = *it / 2;
      }
      const unsigned first = members.empty() ? n : members.front();
      const auto expected = oracle::mul(oracle::dilate(binom, 2), odd_chain_product(first + 1, n));
      o.expect(sums[m].coefficients() == expected, "even n=" + std::to_string(n) + " I=" + I.to_string());
      ++cases;
    }
  }
  o.detail = std::to_string(cases) + " closed forms";
  return o;
}

Outcome support_identities() {
  Outcome o;
  std::size_t cases = 0;
  for (unsigned n = 1; n <= 6; ++n) {
    for (std::uint64_t m = 0; m < subset_count(n); ++m) {
      const IndexSet I = IndexSet::from_mask(n, m);
      for (auto [f, name] : {std::pair{SupportFamily::Chessboard, "chessboard"},
                             std::pair{SupportFamily::Diagonal, "diagonal"},
                             std::pair{SupportFamily::M, "M"}, std::pair{SupportFamily::E, "E"}}) {
        if (!support_admissible(n, I, f)) continue;
        o.expect(support_check(n, I, f).passed,
                 std::string(name) + " n=" + std::to_string(n) + " I=" + I.to_string());
        ++cases;
      }
    }
  }
  o.detail = std::to_string(cases) + " identities";
  return o;
}

Outcome involution_suites() {
  Outcome o;
  std::uint64_t domain = 0;
  for (unsigned n = 1; n <= 5; ++n) {
    for (auto [k, name] : {std::pair{InvolutionKind::Star, "star"},
                           std::pair{InvolutionKind::Circle, "circle"},
                           std::pair{InvolutionKind::Vee, "vee"}}) {
      const InvolutionCheckSummary s = check_involution(k, n);
      domain += s.domain_size;
      o.expect(s.violations() == 0,
               std::string(name) + " n=" + std::to_string(n) + ": " + s.first_failure);
    }
  }
  o.detail = std::to_string(domain) + " domain elements, 0 violations";
  if (!o.pass) o.detail = "violations found";
  return o;
}

std::vector<SignedPermutation> even_chessboard(unsigned n) {
  std::vector<SignedPermutation> out;
  for (const auto& w : GroupEnumerator::full(n)) {
    if (chessboard_class(w) == Chessboard::Even) out.push_back(w);
  }
  return out;
}

Outcome lemma_suite() {
  Outcome o;
  std::uint64_t checks = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    o.expect(ok, what);
  };
  for (unsigned n = 1; n <= 5; ++n) {
    const SignedPermutation w0 = SignedPermutation::longest_element(n);
    const unsigned top = n * (n + 1) / 2;
    for (const auto& w : GroupEnumerator::full(n)) {
      const std::string tag = w.to_string();
      const unsigned L = compute_L(w);
      const AbcStats s = abc_stats(matrix_view(w));
      expect(L == oracle::L(w.window()) && compute_L_direct(w) == L && s.a + s.b + 2 * s.c == L,
             "L forms at " + tag);
      const auto [w1, w2] = sigma_split(w);
      const long long split = static_cast<long long>(length_stats(w1).neg) + coxeter_length(w) -
                              coxeter_length(w1) - (w2.degree() == 0 ? 0 : coxeter_length(w2));
      expect(split == L, "sigma-split form at " + tag);
      expect(compute_L(compose(w, w0)) == top - L && compute_L(compose(w0, w)) == top - L,
             "w0 corollary at " + tag);
      for (std::uint64_t m = 0; m < subset_count(n); ++m) {
        const IndexSet I = IndexSet::from_mask(n, m);
        const auto f = parabolic_decompose(w, I);
        expect(compose(f.quotient, f.subgroup_part) == w &&
                   coxeter_length(w) == coxeter_length(f.quotient) + coxeter_length(f.subgroup_part) &&
                   (descent_set(f.quotient).mask() & I.mask()) == 0 && descent_set(f.subgroup_part).subset_of(I),
               "factorisation at " + tag + " I=" + I.to_string());
      }
    }
  }
  for (unsigned n = 1; n <= 6; ++n) {
    const auto even = even_chessboard(n);
    const IndexSet type_a = IndexSet::full(n).without(0);
    for (const auto& w : even) {
      const std::string tag = w.to_string();
      expect(is_member(w, Family::M) == odd_sandwiches(w).empty(), "odd sandwich at " + tag);
      if (is_member(w, Family::Ascending)) expect(ascending_structure_check(w), "ascending at " + tag);
      if (is_member(w, Family::E)) {
        const auto f = parabolic_decompose(w, type_a);
        expect(compute_L(w) == compute_L(f.quotient) + compute_L(f.subgroup_part), "first at " + tag);
      }
      const IndexSet D = descent_set(w);
      if (n % 2 == 0 && D.is_even() && is_member(w, Family::E)) {
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
          expect(compute_L(w) == compute_L(f.quotient) + compute_L(f.subgroup_part),
                 "even second at " + tag + " e=" + std::to_string(e));
        }
      }
    }
    if (n % 2 == 0) {
      for (const auto& w : GroupEnumerator::symmetric(n)) {
        if (chessboard_class(w) == Chessboard::None || !descent_set(w).is_even()) continue;
        const auto [w1, w2] = sigma_split(w);
        expect(chessboard_class(w) == Chessboard::Even && w1 == w2 &&
                   coxeter_length(w) == 4 * coxeter_length(w1),
               "evenperm block at " + w.to_string());
      }
    }
  }
  o.detail = std::to_string(checks) + " checks";
  return o;
}

Outcome symrank() {
  Outcome o;
  const auto t0 = Clock::now();
  std::size_t cases = 0;
  for (unsigned n = 1; n <= 4; ++n) {
    for (std::int64_t q : {2, 3, 5}) {
      const auto hist = sym_rank_histogram(n, q);
      std::uint64_t total = 0;
      for (auto c : hist) total += c;
      std::uint64_t expected_total = 1;
      for (unsigned k = 0; k < n * (n + 1) / 2; ++k) expected_total *= static_cast<std::uint64_t>(q);
      const std::string tag = "n=" + std::to_string(n) + " q=" + std::to_string(q);
      o.expect(total == expected_total, "row sum " + tag);
      for (unsigned i = 0; i <= n; ++i) {
        o.expect(hist[n - i] == sym_rank_formula(n, q, i), tag + " i=" + std::to_string(i));
        ++cases;
      }
    }
  }
  const double dt = seconds_since(t0);
  o.expect(dt < kSymrankSeconds, "took " + fmt_seconds(dt));
  o.detail = std::to_string(cases) + " rank counts in " + fmt_seconds(dt);
  return o;
}

Outcome identities() {
  Outcome o;
  std::size_t cases = 0;
  for (unsigned n = 1; n <= 7; ++n) {
    for (std::uint64_t m = 0; m < subset_count(n); ++m) {
      const IndexSet I = IndexSet::from_mask(n, m);
      o.expect(identity_check(n, I, IdentityKind::Stanley).passed,
               "stanley n=" + std::to_string(n) + " I=" + I.to_string());
      ++cases;
    }
  }
  for (unsigned n = 2; n <= 8; n += 2) {
    for (std::uint64_t m = 0; m < subset_count(n); ++m) {
      const IndexSet I = IndexSet::from_mask(n, m);
      if (!identity_admissible(n, I, IdentityKind::Evenperm)) continue;
      o.expect(identity_check(n, I, IdentityKind::Evenperm).passed,
               "evenperm n=" + std::to_string(n) + " I=" + I.to_string());
      ++cases;
    }
  }
  o.detail = std::to_string(cases) + " identities";
  return o;
}

Outcome cayley() {
  Outcome o;
  const auto dist = oracle::cayley_distances(4);
  o.expect(dist.size() == group_order(4), "BFS reached " + std::to_string(dist.size()));
  for (const auto& [win, d] : dist) {
    o.expect(coxeter_length(SignedPermutation::from_window(win)) == d, "length at BFS node");
  }
  o.detail = std::to_string(dist.size()) + " elements";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"conjecture verification n<=7", conjecture},
      {"worked example suite", worked_examples},
      {"closed-form class sums", closed_forms},
      {"support identities n<=6", support_identities},
      {"involution suites n<=5", involution_suites},
      {"lemma suite", lemma_suite},
      {"symmetric rank counts", symrank},
      {"Stanley and even-permutation identities", identities},
      {"length vs Cayley BFS on B_4", cayley},
  };
  int hard_failures = 0, failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const int id = static_cast<int>(k + 1);
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, criteria[k].first, o.detail.c_str());
    for (std::size_t f = 0; f < o.failures.size() && f < 5; ++f) {
      std::printf("    - %s\n", o.failures[f].c_str());
    }
    if (!o.pass) {
      ++failures;
      if (kDocumentedDiscrepancies.count(id) != 0) {
        std::printf("    (documented discrepancy, see README)\n");
      } else {
        ++hard_failures;
      }
    }
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria pass\n", criteria.size() - failures, criteria.size());
  return (strict ? failures : hard_failures) == 0 ? 0 : 1;
}
