#include "hyperoct/hyperoct.h"

#include <algorithm>
#include <cstring>
#include <new>
#include <string>
#include <vector>

#include "hyperoct/classes.hpp"
#include "hyperoct/error.hpp"
#include "hyperoct/genfun.hpp"
#include "hyperoct/involutions.hpp"
#include "hyperoct/polynomial.hpp"
#include "hyperoct/signed_permutation.hpp"
#include "hyperoct/statistics.hpp"

struct hyperoct_perm {
  hyperoct::SignedPermutation w;
};

struct hyperoct_poly {
  hyperoct::IntPolynomial p;
};

struct hyperoct_report_list {
  std::vector<hyperoct::VerificationReport> reports;
};

namespace {

using namespace hyperoct;

thread_local std::string last_error;

hyperoct_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return HYPEROCT_INVALID_ARGUMENT;
    case ErrorCode::DegreeMismatch: return HYPEROCT_DEGREE_MISMATCH;
    case ErrorCode::OutOfRange: return HYPEROCT_OUT_OF_RANGE;
    case ErrorCode::PreconditionViolation: return HYPEROCT_PRECONDITION_VIOLATION;
    case ErrorCode::NotDivisible: return HYPEROCT_NOT_DIVISIBLE;
    case ErrorCode::Overflow: return HYPEROCT_OVERFLOW;
    case ErrorCode::BudgetExceeded: return HYPEROCT_BUDGET_EXCEEDED;
    case ErrorCode::Internal: return HYPEROCT_INTERNAL;
  }
  return HYPEROCT_INTERNAL;
}

hyperoct_status failure(hyperoct_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
hyperoct_status guarded(F&& body) {
  try {
    const hyperoct_status s = body();
    if (s == HYPEROCT_OK) last_error.clear();
    return s;
  } catch (const Error& e) {
    return failure(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return failure(HYPEROCT_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return failure(HYPEROCT_INTERNAL, e.what());
  }
}

#define REQUIRE_ARG(ptr)                                                \
  do {                                                                  \
    if ((ptr) == nullptr)                                               \
      return failure(HYPEROCT_INVALID_ARGUMENT, #ptr " must not be null"); \
  } while (0)

template <typename T>
hyperoct_status copy_out(const std::vector<T>& values, T* buf, size_t cap,
                         size_t* len) {
  REQUIRE_ARG(len);
  *len = values.size();
  if (cap < values.size()) {
    return failure(HYPEROCT_BUFFER_TOO_SMALL,
                   "buffer holds " + std::to_string(cap) + ", need " +
                       std::to_string(values.size()));
  }
  if (!values.empty()) {
    REQUIRE_ARG(buf);
    std::copy(values.begin(), values.end(), buf);
  }
  return HYPEROCT_OK;
}

hyperoct_status copy_string(const std::string& s, char* buf, size_t cap,
                            size_t* len) {
  REQUIRE_ARG(len);
  *len = s.size();
  if (cap < s.size() + 1) {
    return failure(HYPEROCT_BUFFER_TOO_SMALL,
                   "buffer holds " + std::to_string(cap) + " bytes, need " +
                       std::to_string(s.size() + 1));
  }
  REQUIRE_ARG(buf);
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return HYPEROCT_OK;
}

template <size_t N>
void copy_truncated(const std::string& s, char (&dst)[N]) {
  const size_t m = std::min(s.size(), N - 1);
  std::memcpy(dst, s.data(), m);
  dst[m] = '\0';
}

hyperoct_status emit(SignedPermutation w, hyperoct_perm** out) {
  *out = new hyperoct_perm{std::move(w)};
  return HYPEROCT_OK;
}

hyperoct_status emit(IntPolynomial p, hyperoct_poly** out) {
  *out = new hyperoct_poly{std::move(p)};
  return HYPEROCT_OK;
}

hyperoct_status emit(std::vector<VerificationReport> r,
                     hyperoct_report_list** out) {
  *out = new hyperoct_report_list{std::move(r)};
  return HYPEROCT_OK;
}

InvolutionKind to_kind(hyperoct_involution k) {
  switch (k) {
    case HYPEROCT_INVOLUTION_STAR: return InvolutionKind::Star;
    case HYPEROCT_INVOLUTION_CIRCLE: return InvolutionKind::Circle;
    case HYPEROCT_INVOLUTION_VEE: return InvolutionKind::Vee;
  }
  fail(ErrorCode::InvalidArgument, "unknown involution kind");
}

Family to_family(hyperoct_family f) {
  switch (f) {
    case HYPEROCT_FAMILY_DIAGONAL: return Family::Diagonal;
    case HYPEROCT_FAMILY_ASCENDING: return Family::Ascending;
    case HYPEROCT_FAMILY_E: return Family::E;
    case HYPEROCT_FAMILY_M: return Family::M;
  }
  fail(ErrorCode::InvalidArgument, "unknown family");
}

SupportFamily to_support(hyperoct_support_family f) {
  switch (f) {
    case HYPEROCT_SUPPORT_CHESSBOARD: return SupportFamily::Chessboard;
    case HYPEROCT_SUPPORT_DIAGONAL: return SupportFamily::Diagonal;
    case HYPEROCT_SUPPORT_M: return SupportFamily::M;
    case HYPEROCT_SUPPORT_E: return SupportFamily::E;
  }
  fail(ErrorCode::InvalidArgument, "unknown support family");
}

IdentityKind to_identity(hyperoct_identity k) {
  switch (k) {
    case HYPEROCT_IDENTITY_STANLEY: return IdentityKind::Stanley;
    case HYPEROCT_IDENTITY_EVENPERM: return IdentityKind::Evenperm;
  }
  fail(ErrorCode::InvalidArgument, "unknown identity");
}

ExtensionSign to_sign(hyperoct_extension_sign s) {
  switch (s) {
    case HYPEROCT_EXTEND_PLUS: return ExtensionSign::Plus;
    case HYPEROCT_EXTEND_MINUS: return ExtensionSign::Minus;
  }
  fail(ErrorCode::InvalidArgument, "unknown extension sign");
}

const VerificationReport* report_at(const hyperoct_report_list* list,
                                    size_t index) {
  if (list == nullptr) fail(ErrorCode::InvalidArgument, "list must not be null");
  if (index >= list->reports.size()) {
    fail(ErrorCode::OutOfRange, "report index " + std::to_string(index) +
                                    " out of range");
  }
  return &list->reports[index];
}

}  // namespace

extern "C" {

const char* hyperoct_last_error(void) { return last_error.c_str(); }

const char* hyperoct_status_name(hyperoct_status status) {
  switch (status) {
    case HYPEROCT_OK: return "ok";
    case HYPEROCT_INVALID_ARGUMENT: return "invalid argument";
    case HYPEROCT_DEGREE_MISMATCH: return "degree mismatch";
    case HYPEROCT_OUT_OF_RANGE: return "out of range";
    case HYPEROCT_PRECONDITION_VIOLATION: return "precondition violation";
    case HYPEROCT_NOT_DIVISIBLE: return "not divisible";
    case HYPEROCT_OVERFLOW: return "overflow";
    case HYPEROCT_BUDGET_EXCEEDED: return "budget exceeded";
    case HYPEROCT_BUFFER_TOO_SMALL: return "buffer too small";
    case HYPEROCT_INTERNAL: return "internal error";
  }
  return "unknown status";
}

// ---- permutations ------------------------------------------------------

hyperoct_status hyperoct_perm_parse(const char* text, hyperoct_perm** out) {
  REQUIRE_ARG(text);
  REQUIRE_ARG(out);
  return guarded([&] { return emit(SignedPermutation::parse(text), out); });
}

hyperoct_status hyperoct_perm_from_window(const int* window, unsigned n,
                                          hyperoct_perm** out) {
  REQUIRE_ARG(out);
  if (n > 0) REQUIRE_ARG(window);
  return guarded([&] {
    return emit(SignedPermutation::from_window(std::span<const int>(window, n)),
                out);
  });
}

hyperoct_status hyperoct_perm_identity(unsigned n, hyperoct_perm** out) {
  REQUIRE_ARG(out);
  return guarded([&] { return emit(SignedPermutation::identity(n), out); });
}

hyperoct_status hyperoct_perm_generator(unsigned n, unsigned i,
                                        hyperoct_perm** out) {
  REQUIRE_ARG(out);
  return guarded([&] { return emit(SignedPermutation::generator(n, i), out); });
}

hyperoct_status hyperoct_perm_longest(unsigned n, hyperoct_perm** out) {
  REQUIRE_ARG(out);
  return guarded(
      [&] { return emit(SignedPermutation::longest_element(n), out); });
}

hyperoct_status hyperoct_perm_clone(const hyperoct_perm* w,
                                    hyperoct_perm** out) {
  REQUIRE_ARG(w);
  REQUIRE_ARG(out);
  return guarded([&] { return emit(w->w, out); });
}

void hyperoct_perm_free(hyperoct_perm* w) { delete w; }

unsigned hyperoct_perm_degree(const hyperoct_perm* w) {
  return w == nullptr ? 0 : w->w.degree();
}

hyperoct_status hyperoct_perm_window(const hyperoct_perm* w, int* buf,
                                     size_t cap, size_t* len) {
  REQUIRE_ARG(w);
  return guarded([&] {
    const auto win = w->w.window();
    return copy_out(std::vector<int>(win.begin(), win.end()), buf, cap, len);
  });
}

hyperoct_status hyperoct_perm_format(const hyperoct_perm* w, char* buf,
                                     size_t cap, size_t* len) {
  REQUIRE_ARG(w);
  return guarded([&] { return copy_string(w->w.to_string(), buf, cap, len); });
}

int hyperoct_perm_equal(const hyperoct_perm* a, const hyperoct_perm* b) {
  return a != nullptr && b != nullptr && a->w == b->w;
}

hyperoct_status hyperoct_perm_compose(const hyperoct_perm* a,
                                      const hyperoct_perm* b,
                                      hyperoct_perm** out) {
  REQUIRE_ARG(a);
  REQUIRE_ARG(b);
  REQUIRE_ARG(out);
  return guarded([&] { return emit(compose(a->w, b->w), out); });
}

hyperoct_status hyperoct_perm_inverse(const hyperoct_perm* w,
                                      hyperoct_perm** out) {
  REQUIRE_ARG(w);
  REQUIRE_ARG(out);
  return guarded([&] { return emit(w->w.inverse(), out); });
}

hyperoct_status hyperoct_perm_stats(const hyperoct_perm* w,
                                    hyperoct_stats* out) {
  REQUIRE_ARG(w);
  REQUIRE_ARG(out);
  return guarded([&] {
    const StatRecord s = compute_stats(w->w);
    *out = hyperoct_stats{s.inv, s.neg, s.nsp, s.length, s.L,
                          s.a,   s.b,   s.c,   s.descents.mask()};
    return HYPEROCT_OK;
  });
}

hyperoct_status hyperoct_perm_L_direct(const hyperoct_perm* w, unsigned* out) {
  REQUIRE_ARG(w);
  REQUIRE_ARG(out);
  return guarded([&] {
    *out = compute_L_direct(w->w);
    return HYPEROCT_OK;
  });
}

hyperoct_status hyperoct_perm_row_pattern(const hyperoct_perm* w, int* buf,
                                          size_t cap, size_t* len) {
  REQUIRE_ARG(w);
  return guarded([&] { return copy_out(row_pattern(w->w), buf, cap, len); });
}

hyperoct_status hyperoct_perm_chessboard(const hyperoct_perm* w,
                                         hyperoct_chessboard* out) {
  REQUIRE_ARG(w);
  REQUIRE_ARG(out);
  return guarded([&] {
    switch (chessboard_class(w->w)) {
      case Chessboard::Even: *out = HYPEROCT_CHESSBOARD_EVEN; break;
      case Chessboard::Odd: *out = HYPEROCT_CHESSBOARD_ODD; break;
      case Chessboard::None: *out = HYPEROCT_CHESSBOARD_NONE; break;
    }
    return HYPEROCT_OK;
  });
}

hyperoct_status hyperoct_perm_is_member(const hyperoct_perm* w,
                                        hyperoct_family family, int* out) {
  REQUIRE_ARG(w);
  REQUIRE_ARG(out);
  return guarded([&] {
    *out = is_member(w->w, to_family(family)) ? 1 : 0;
    return HYPEROCT_OK;
  });
}

hyperoct_status hyperoct_perm_sigma_split(const hyperoct_perm* w,
                                          hyperoct_perm** odd,
                                          hyperoct_perm** even) {
  REQUIRE_ARG(w);
  REQUIRE_ARG(odd);
  REQUIRE_ARG(even);
  return guarded([&] {
    auto [a, b] = sigma_split(w->w);
    emit(std::move(a), odd);
    return emit(std::move(b), even);
  });
}

hyperoct_status hyperoct_perm_star_merge(const hyperoct_perm* odd,
                                         const hyperoct_perm* even,
                                         hyperoct_perm** out) {
  REQUIRE_ARG(odd);
  REQUIRE_ARG(even);
  REQUIRE_ARG(out);
  return guarded([&] { return emit(star_merge(odd->w, even->w), out); });
}

hyperoct_status hyperoct_perm_decompose(const hyperoct_perm* w,
                                        uint64_t subset_mask,
                                        hyperoct_perm** quotient,
                                        hyperoct_perm** part) {
  REQUIRE_ARG(w);
  REQUIRE_ARG(quotient);
  REQUIRE_ARG(part);
  return guarded([&] {
    const ParabolicFactorization f = parabolic_decompose(
        w->w, IndexSet::from_mask(w->w.degree(), subset_mask));
    emit(f.quotient, quotient);
    return emit(f.subgroup_part, part);
  });
}

hyperoct_status hyperoct_perm_odd_sandwiches(const hyperoct_perm* w,
                                             hyperoct_sandwich* buf,
                                             size_t cap, size_t* len) {
  REQUIRE_ARG(w);
  return guarded([&] {
    std::vector<hyperoct_sandwich> out;
    for (const OddSandwich& s : odd_sandwiches(w->w)) {
      out.push_back({s.r, s.h, s.kind == OddSandwich::Kind::Degenerate});
    }
    return copy_out(out, buf, cap, len);
  });
}

hyperoct_status hyperoct_perm_ascending_structure(const hyperoct_perm* w,
                                                  int* out) {
  REQUIRE_ARG(w);
  REQUIRE_ARG(out);
  return guarded([&] {
    *out = ascending_structure_check(w->w) ? 1 : 0;
    return HYPEROCT_OK;
  });
}

hyperoct_status hyperoct_perm_extend_ascending(const hyperoct_perm* w,
                                               hyperoct_extension_sign sign,
                                               hyperoct_perm** out) {
  REQUIRE_ARG(w);
  REQUIRE_ARG(out);
  return guarded(
      [&] { return emit(extend_ascending(w->w, to_sign(sign)), out); });
}

hyperoct_status hyperoct_perm_extend_diagonal(const hyperoct_perm* v,
                                              hyperoct_extension_sign sign,
                                              hyperoct_perm** out) {
  REQUIRE_ARG(v);
  REQUIRE_ARG(out);
  return guarded(
      [&] { return emit(extend_diagonal(v->w, to_sign(sign)), out); });
}

// ---- involutions -------------------------------------------------------

hyperoct_status hyperoct_involution_in_domain(hyperoct_involution kind,
                                              const hyperoct_perm* w,
                                              int* out) {
  REQUIRE_ARG(w);
  REQUIRE_ARG(out);
  return guarded([&] {
    *out = in_domain(to_kind(kind), w->w) ? 1 : 0;
    return HYPEROCT_OK;
  });
}

hyperoct_status hyperoct_involution_apply(hyperoct_involution kind,
                                          const hyperoct_perm* w,
                                          hyperoct_perm** out,
                                          unsigned* pivot) {
  REQUIRE_ARG(w);
  REQUIRE_ARG(out);
  return guarded([&] {
    InvolutionReport r = apply_involution(to_kind(kind), w->w);
    if (pivot != nullptr && !r.pivot.empty()) *pivot = r.pivot.front();
    return emit(std::move(r.output), out);
  });
}

hyperoct_status hyperoct_involution_check(hyperoct_involution kind,
                                          unsigned n,
                                          hyperoct_involution_summary* out) {
  REQUIRE_ARG(out);
  return guarded([&] {
    const InvolutionCheckSummary s = check_involution(to_kind(kind), n);
    hyperoct_involution_summary r{};
    r.kind = kind;
    r.n = s.n;
    r.domain_size = s.domain_size;
    r.fixed_points = s.fixed_points;
    r.leaves_domain = s.leaves_domain;
    r.square_failures = s.square_failures;
    r.L_failures = s.L_failures;
    r.parity_failures = s.parity_failures;
    r.descent_failures = s.descent_failures;
    r.violations = s.violations();
    if (s.first_counterexample) {
      copy_truncated(s.first_counterexample->to_string(), r.first_counterexample);
    }
    copy_truncated(s.first_failure, r.first_failure);
    *out = r;
    return HYPEROCT_OK;
  });
}

// ---- polynomials -------------------------------------------------------

void hyperoct_poly_free(hyperoct_poly* p) { delete p; }

int hyperoct_poly_degree(const hyperoct_poly* p) {
  return p == nullptr ? -1 : p->p.degree();
}

int64_t hyperoct_poly_coeff(const hyperoct_poly* p, unsigned k) {
  return p == nullptr ? 0 : p->p.coeff(k);
}

hyperoct_status hyperoct_poly_coefficients(const hyperoct_poly* p,
                                           int64_t* buf, size_t cap,
                                           size_t* len) {
  REQUIRE_ARG(p);
  return guarded([&] {
    const auto& c = p->p.coefficients();
    return copy_out(std::vector<int64_t>(c.begin(), c.end()), buf, cap, len);
  });
}

hyperoct_status hyperoct_poly_format(const hyperoct_poly* p, char* buf,
                                     size_t cap, size_t* len) {
  REQUIRE_ARG(p);
  return guarded([&] { return copy_string(p->p.to_string(), buf, cap, len); });
}

hyperoct_status hyperoct_poly_format_json(const hyperoct_poly* p, char* buf,
                                          size_t cap, size_t* len) {
  REQUIRE_ARG(p);
  return guarded([&] { return copy_string(p->p.to_json(), buf, cap, len); });
}

int hyperoct_poly_equal(const hyperoct_poly* a, const hyperoct_poly* b) {
  return a != nullptr && b != nullptr && a->p == b->p;
}

hyperoct_status hyperoct_poly_evaluate(const hyperoct_poly* p, int64_t x,
                                       int64_t* out) {
  REQUIRE_ARG(p);
  REQUIRE_ARG(out);
  return guarded([&] {
    *out = p->p.evaluate(x);
    return HYPEROCT_OK;
  });
}

hyperoct_status hyperoct_f_poly(unsigned n, uint64_t subset_mask,
                                hyperoct_poly** out) {
  REQUIRE_ARG(out);
  return guarded(
      [&] { return emit(f_poly(n, IndexSet::from_mask(n, subset_mask)), out); });
}

hyperoct_status hyperoct_q_int(unsigned k, hyperoct_poly** out) {
  REQUIRE_ARG(out);
  return guarded([&] { return emit(q_int(k), out); });
}

hyperoct_status hyperoct_q_factorial(unsigned n, hyperoct_poly** out) {
  REQUIRE_ARG(out);
  return guarded([&] { return emit(q_factorial(n), out); });
}

hyperoct_status hyperoct_q_binomial(unsigned a, unsigned b,
                                    hyperoct_poly** out) {
  REQUIRE_ARG(out);
  return guarded([&] { return emit(q_binomial(a, b), out); });
}

hyperoct_status hyperoct_q_multinomial(unsigned n, uint64_t subset_mask,
                                       hyperoct_poly** out) {
  REQUIRE_ARG(out);
  return guarded([&] {
    return emit(q_multinomial(n, IndexSet::from_mask(n, subset_mask)), out);
  });
}

hyperoct_status hyperoct_fg_genfun(unsigned n, uint64_t subset_mask,
                                   hyperoct_fg_variant variant, unsigned eta,
                                   hyperoct_poly** out) {
  REQUIRE_ARG(out);
  return guarded([&] {
    if (variant != HYPEROCT_FG_F && variant != HYPEROCT_FG_G) {
      fail(ErrorCode::InvalidArgument, "unknown variant");
    }
    const FgVariant v = variant == HYPEROCT_FG_F ? FgVariant::F : FgVariant::G;
    return emit(fg_genfun(n, IndexSet::from_mask(n, subset_mask), v, eta), out);
  });
}

hyperoct_status hyperoct_eval_reciprocal_power(const hyperoct_poly* p,
                                               int64_t q, unsigned e,
                                               int64_t* out) {
  REQUIRE_ARG(p);
  REQUIRE_ARG(out);
  return guarded([&] {
    *out = eval_reciprocal_power(p->p, q, e);
    return HYPEROCT_OK;
  });
}

// ---- reports -----------------------------------------------------------

hyperoct_status hyperoct_verify(unsigned n, const uint64_t* subset_masks,
                                size_t count, unsigned jobs,
                                hyperoct_report_list** out) {
  REQUIRE_ARG(out);
  if (count > 0) REQUIRE_ARG(subset_masks);
  return guarded([&] {
    std::vector<IndexSet> subsets;
    subsets.reserve(count);
    for (size_t k = 0; k < count; ++k) {
      subsets.push_back(IndexSet::from_mask(n, subset_masks[k]));
    }
    return emit(verify_subsets(n, subsets, jobs), out);
  });
}

hyperoct_status hyperoct_verify_all(unsigned n, unsigned jobs,
                                    hyperoct_report_list** out) {
  REQUIRE_ARG(out);
  return guarded([&] { return emit(verify_all(n, jobs), out); });
}

hyperoct_status hyperoct_support_admissible(unsigned n, uint64_t subset_mask,
                                            hyperoct_support_family family,
                                            int* out) {
  REQUIRE_ARG(out);
  return guarded([&] {
    *out = support_admissible(n, IndexSet::from_mask(n, subset_mask),
                              to_support(family));
    return HYPEROCT_OK;
  });
}

hyperoct_status hyperoct_support_check(unsigned n, uint64_t subset_mask,
                                       hyperoct_support_family family,
                                       hyperoct_report_list** out) {
  REQUIRE_ARG(out);
  return guarded([&] {
    return emit({support_check(n, IndexSet::from_mask(n, subset_mask),
                               to_support(family))},
                out);
  });
}

hyperoct_status hyperoct_identity_admissible(unsigned n, uint64_t subset_mask,
                                             hyperoct_identity kind, int* out) {
  REQUIRE_ARG(out);
  return guarded([&] {
    *out = identity_admissible(n, IndexSet::from_mask(n, subset_mask),
                               to_identity(kind));
    return HYPEROCT_OK;
  });
}

hyperoct_status hyperoct_identity_check(unsigned n, uint64_t subset_mask,
                                        hyperoct_identity kind,
                                        hyperoct_report_list** out) {
  REQUIRE_ARG(out);
  return guarded([&] {
    return emit({identity_check(n, IndexSet::from_mask(n, subset_mask),
                                to_identity(kind))},
                out);
  });
}

void hyperoct_report_list_free(hyperoct_report_list* list) { delete list; }

size_t hyperoct_report_list_size(const hyperoct_report_list* list) {
  return list == nullptr ? 0 : list->reports.size();
}

hyperoct_status hyperoct_report_get(const hyperoct_report_list* list,
                                    size_t index, hyperoct_report* out) {
  REQUIRE_ARG(out);
  return guarded([&] {
    const VerificationReport* r = report_at(list, index);
    *out = hyperoct_report{r->n, r->subset.mask(), r->passed ? 1 : 0,
                           r->element_count, r->elapsed_seconds};
    return HYPEROCT_OK;
  });
}

hyperoct_status hyperoct_report_lhs(const hyperoct_report_list* list,
                                    size_t index, hyperoct_poly** out) {
  REQUIRE_ARG(out);
  return guarded([&] { return emit(report_at(list, index)->lhs, out); });
}

hyperoct_status hyperoct_report_rhs(const hyperoct_report_list* list,
                                    size_t index, hyperoct_poly** out) {
  REQUIRE_ARG(out);
  return guarded([&] { return emit(report_at(list, index)->rhs, out); });
}

// ---- symmetric matrices ------------------------------------------------

hyperoct_status hyperoct_symrank_histogram(unsigned n, int64_t q,
                                           uint64_t budget, uint64_t* buf,
                                           size_t cap, size_t* len) {
  return guarded([&] {
    const auto h = sym_rank_histogram(n, q, budget == 0 ? kDefaultSymrankBudget : budget);
    return copy_out(std::vector<uint64_t>(h.begin(), h.end()), buf, cap, len);
  });
}

hyperoct_status hyperoct_symrank_formula(unsigned n, int64_t q, unsigned i,
                                         uint64_t* out) {
  REQUIRE_ARG(out);
  return guarded([&] {
    *out = sym_rank_formula(n, q, i);
    return HYPEROCT_OK;
  });
}

hyperoct_status hyperoct_symrank_check(unsigned n, int64_t q, unsigned i,
                                       uint64_t budget,
                                       hyperoct_symrank_report* out) {
  REQUIRE_ARG(out);
  return guarded([&] {
    const SymrankReport r =
        sym_rank_check(n, q, i, budget == 0 ? kDefaultSymrankBudget : budget);
    *out = hyperoct_symrank_report{r.n, r.q, r.i, r.brute, r.formula,
                                   r.passed ? 1 : 0};
    return HYPEROCT_OK;
  });
}

}  // extern "C"
