#include <charconv>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperoct/hyperoct.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
  LibraryError(hyperoct_status s, const std::string& what)
      : std::runtime_error(what), status(s) {}
  hyperoct_status status;
};

void check(hyperoct_status s) {
  if (s != HYPEROCT_OK) {
    throw LibraryError(s, std::string(hyperoct_status_name(s)) + ": " +
                              hyperoct_last_error());
  }
}

struct PermDeleter {
  void operator()(hyperoct_perm* p) const { hyperoct_perm_free(p); }
};
struct PolyDeleter {
  void operator()(hyperoct_poly* p) const { hyperoct_poly_free(p); }
};
struct ListDeleter {
  void operator()(hyperoct_report_list* p) const { hyperoct_report_list_free(p); }
};
using Perm = std::unique_ptr<hyperoct_perm, PermDeleter>;
using Poly = std::unique_ptr<hyperoct_poly, PolyDeleter>;
using ReportList = std::unique_ptr<hyperoct_report_list, ListDeleter>;

// ---- input parsing -----------------------------------------------------

Perm parse_window(const std::string& text) {
  hyperoct_perm* raw = nullptr;
  if (hyperoct_perm_parse(text.c_str(), &raw) != HYPEROCT_OK) {
    throw UsageError("bad window '" + text + "': " + hyperoct_last_error());
  }
  return Perm(raw);
}

struct SubsetSpec {
  bool all = false;
  std::uint64_t mask = 0;
};

SubsetSpec parse_subset(const std::string& text, unsigned n) {
  SubsetSpec spec;
  if (text == "all") {
    spec.all = true;
    return spec;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(' ');
    const auto e = item.find_last_not_of(' ');
    if (b == std::string::npos) throw UsageError("empty entry in subset '" + text + "'");
    const std::string t = item.substr(b, e - b + 1);
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (ec != std::errc() || ptr != t.data() + t.size()) {
      throw UsageError("bad subset entry '" + t + "'");
    }
    if (value >= n) {
      throw UsageError("subset entry " + t + " is not in [" +
                       std::to_string(n - 1) + "]_0");
    }
    spec.mask |= std::uint64_t{1} << value;
  }
  if (!text.empty() && text.back() == ',') throw UsageError("trailing comma in subset");
  return spec;
}

std::vector<unsigned> mask_members(std::uint64_t mask) {
  std::vector<unsigned> out;
  for (unsigned i = 0; i < 64; ++i) {
    if (mask >> i & 1) out.push_back(i);
  }
  return out;
}

std::string mask_text(std::uint64_t mask) {
  std::string s;
  for (unsigned i : mask_members(mask)) {
    if (!s.empty()) s += ',';
    s += std::to_string(i);
  }
  return s;
}

std::vector<std::uint64_t> expand(const SubsetSpec& spec, unsigned n) {
  if (!spec.all) return {spec.mask};
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) masks.push_back(m);
  return masks;
}

// ---- output helpers ----------------------------------------------------

std::vector<int> window_of(const hyperoct_perm* w) {
  std::vector<int> buf(hyperoct_perm_degree(w));
  size_t len = 0;
  check(hyperoct_perm_window(w, buf.data(), buf.size(), &len));
  return buf;
}

std::string perm_text(const hyperoct_perm* w) {
  size_t len = 0;
  std::vector<char> buf(8 * hyperoct_perm_degree(w) + 4);
  check(hyperoct_perm_format(w, buf.data(), buf.size(), &len));
  return std::string(buf.data(), len);
}

std::vector<std::int64_t> coeffs_of(const hyperoct_poly* p) {
  std::vector<std::int64_t> buf(static_cast<size_t>(hyperoct_poly_degree(p) + 1));
  size_t len = 0;
  check(hyperoct_poly_coefficients(p, buf.data(), buf.size(), &len));
  return buf;
}

std::string poly_text(const hyperoct_poly* p) {
  size_t len = 0;
  hyperoct_poly_format(p, nullptr, 0, &len);
  std::vector<char> buf(len + 1);
  check(hyperoct_poly_format(p, buf.data(), buf.size(), &len));
  return std::string(buf.data(), len);
}

std::string poly_json(const hyperoct_poly* p) {
  size_t len = 0;
  hyperoct_poly_format_json(p, nullptr, 0, &len);
  std::vector<char> buf(len + 1);
  check(hyperoct_poly_format_json(p, buf.data(), buf.size(), &len));
  return std::string(buf.data(), len);
}

enum class Format { Text, Json, Csv };

struct Row {
  unsigned n = 0;
  std::uint64_t mask = 0;
  Poly lhs;
  Poly rhs;
  bool passed = false;
  std::uint64_t elements = 0;
};

std::vector<Row> collect(hyperoct_report_list* list) {
  std::vector<Row> rows;
  for (size_t k = 0; k < hyperoct_report_list_size(list); ++k) {
    hyperoct_report r{};
    check(hyperoct_report_get(list, k, &r));
    hyperoct_poly* lhs = nullptr;
    hyperoct_poly* rhs = nullptr;
    check(hyperoct_report_lhs(list, k, &lhs));
    Poly l(lhs);
    check(hyperoct_report_rhs(list, k, &rhs));
    rows.push_back({r.n, r.subset_mask, std::move(l), Poly(rhs), r.passed != 0,
                    r.element_count});
  }
  return rows;
}

int print_reports(const std::vector<Row>& rows, Format format, bool elements) {
  bool all_passed = true;
  for (const Row& r : rows) all_passed = all_passed && r.passed;
  if (format == Format::Json) {
    json arr = json::array();
    for (const Row& r : rows) {
      json rec;
      rec["n"] = r.n;
      rec["I"] = mask_members(r.mask);
      rec["lhs"] = coeffs_of(r.lhs.get());
      rec["rhs"] = coeffs_of(r.rhs.get());
      rec["verdict"] = r.passed ? "pass" : "fail";
      if (elements) rec["elements"] = r.elements;
      arr.push_back(std::move(rec));
    }
    std::cout << arr.dump(2) << '\n';
  } else if (format == Format::Csv) {
    std::cout << "n,I,lhs,rhs,verdict" << (elements ? ",elements" : "") << '\n';
    for (const Row& r : rows) {
      std::cout << r.n << ",\"" << mask_text(r.mask) << "\",\""
                << poly_json(r.lhs.get()) << "\",\"" << poly_json(r.rhs.get())
                << "\"," << (r.passed ? "pass" : "fail");
      if (elements) std::cout << ',' << r.elements;
      std::cout << '\n';
    }
  } else {
    for (const Row& r : rows) {
      std::cout << (r.passed ? "pass" : "FAIL") << "  n=" << r.n << "  I={"
                << mask_text(r.mask) << "}";
      if (elements) std::cout << "  elements=" << r.elements;
      std::cout << "\n  lhs: " << poly_text(r.lhs.get())
                << "\n  rhs: " << poly_text(r.rhs.get()) << '\n';
    }
    std::size_t passed = 0;
    for (const Row& r : rows) passed += r.passed;
    std::cout << passed << "/" << rows.size() << " passed\n";
  }
  return all_passed ? kExitPass : kExitFail;
}

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled), start_(Clock::now()) {}
  ~Timer() {
    if (enabled_) {
      std::cerr << "elapsed: "
                << std::chrono::duration<double>(Clock::now() - start_).count()
                << " s\n";
    }
  }

 private:
  using Clock = std::chrono::steady_clock;
  bool enabled_;
  Clock::time_point start_;
};

// ---- subcommands -------------------------------------------------------

struct Options {
  std::string window;
  unsigned n = 0;
  std::string subset = "all";
  std::string family;
  std::string kind;
  std::string variant = "f";
  std::int64_t q = 0;
  std::optional<unsigned> i;
  unsigned eta = 0;
  std::string format = "text";
  std::uint64_t budget = 100'000'000;
  unsigned jobs = 0;
  bool check = false;
  bool elements = false;
  bool timing = false;
};

Format format_of(const Options& o) {
  if (o.format == "json") return Format::Json;
  if (o.format == "csv") return Format::Csv;
  return Format::Text;
}

unsigned resolve_jobs(const Options& o) {
  if (o.jobs > 0) return o.jobs;
  if (const char* env = std::getenv("HYPEROCT_JOBS")) {
    unsigned v = 0;
    const std::string s = env;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || v == 0) {
      throw UsageError("HYPEROCT_JOBS must be a positive integer, got '" + s + "'");
    }
    return v;
  }
  return 1;
}

void require_degree(unsigned n) {
  if (n == 0 || n > 12) throw UsageError("--n must lie in [1, 12]");
}

int run_stats(const Options& o) {
  Perm w = parse_window(o.window);
  hyperoct_stats s{};
  check(hyperoct_perm_stats(w.get(), &s));
  if (format_of(o) == Format::Json) {
    json rec;
    rec["window"] = window_of(w.get());
    rec["inv"] = s.inv;
    rec["neg"] = s.neg;
    rec["nsp"] = s.nsp;
    rec["length"] = s.length;
    rec["L"] = s.L;
    rec["a"] = s.a;
    rec["b"] = s.b;
    rec["c"] = s.c;
    rec["descents"] = mask_members(s.descent_mask);
    std::cout << rec.dump(2) << '\n';
  } else if (format_of(o) == Format::Csv) {
    std::cout << "window,inv,neg,nsp,length,L,a,b,c,descents\n"
              << '"' << perm_text(w.get()) << "\"," << s.inv << ',' << s.neg
              << ',' << s.nsp << ',' << s.length << ',' << s.L << ',' << s.a
              << ',' << s.b << ',' << s.c << ",\"" << mask_text(s.descent_mask)
              << "\"\n";
  } else {
    auto line = [](const char* key, const std::string& value) {
      std::cout << std::left << std::setw(10) << key << value << '\n';
    };
    line("window", perm_text(w.get()));
    line("inv", std::to_string(s.inv));
    line("neg", std::to_string(s.neg));
    line("nsp", std::to_string(s.nsp));
    line("length", std::to_string(s.length));
    line("L", std::to_string(s.L));
    line("a", std::to_string(s.a));
    line("b", std::to_string(s.b));
    line("c", std::to_string(s.c));
    line("descents", "{" + mask_text(s.descent_mask) + "}");
  }
  return kExitPass;
}

int run_verify(const Options& o) {
  require_degree(o.n);
  const SubsetSpec spec = parse_subset(o.subset, o.n);
  const unsigned jobs = resolve_jobs(o);
  const std::vector<std::uint64_t> masks = expand(spec, o.n);
  Timer timer(o.timing);
  hyperoct_report_list* raw = nullptr;
  check(hyperoct_verify(o.n, masks.data(), masks.size(), jobs, &raw));
  ReportList list(raw);
  return print_reports(collect(list.get()), format_of(o), o.elements);
}

hyperoct_support_family support_family(const std::string& s) {
  if (s == "chessboard") return HYPEROCT_SUPPORT_CHESSBOARD;
  if (s == "diagonal") return HYPEROCT_SUPPORT_DIAGONAL;
  if (s == "M") return HYPEROCT_SUPPORT_M;
  return HYPEROCT_SUPPORT_E;
}

int run_support(const Options& o) {
  require_degree(o.n);
  const SubsetSpec spec = parse_subset(o.subset, o.n);
  const hyperoct_support_family family = support_family(o.family);
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m : expand(spec, o.n)) {
    int ok = 0;
    check(hyperoct_support_admissible(o.n, m, family, &ok));
    if (ok) {
      masks.push_back(m);
    } else if (!spec.all) {
      throw UsageError("I = {" + mask_text(m) + "} does not satisfy the hypotheses for family " + o.family);
    }
  }
  Timer timer(o.timing);
  std::vector<Row> rows;
  for (std::uint64_t m : masks) {
    hyperoct_report_list* raw = nullptr;
    check(hyperoct_support_check(o.n, m, family, &raw));
    ReportList list(raw);
    for (Row& r : collect(list.get())) rows.push_back(std::move(r));
  }
  return print_reports(rows, format_of(o), o.elements);
}

int run_identity(const Options& o) {
  require_degree(o.n);
  const SubsetSpec spec = parse_subset(o.subset, o.n);
  const hyperoct_identity kind =
      o.kind == "stanley" ? HYPEROCT_IDENTITY_STANLEY : HYPEROCT_IDENTITY_EVENPERM;
  std::vector<std::uint64_t> masks;
  for (std::uint64_t m : expand(spec, o.n)) {
    int ok = 0;
    check(hyperoct_identity_admissible(o.n, m, kind, &ok));
    if (ok) {
      masks.push_back(m);
    } else if (!spec.all) {
      throw UsageError("evenperm needs even n and even I");
    }
  }
  if (masks.empty()) throw UsageError("no admissible subsets for n = " + std::to_string(o.n));
  Timer timer(o.timing);
  std::vector<Row> rows;
  for (std::uint64_t m : masks) {
    hyperoct_report_list* raw = nullptr;
    check(hyperoct_identity_check(o.n, m, kind, &raw));
    ReportList list(raw);
    for (Row& r : collect(list.get())) rows.push_back(std::move(r));
  }
  return print_reports(rows, format_of(o), o.elements);
}

hyperoct_involution involution_kind(const std::string& s) {
  if (s == "star") return HYPEROCT_INVOLUTION_STAR;
  if (s == "circle") return HYPEROCT_INVOLUTION_CIRCLE;
  return HYPEROCT_INVOLUTION_VEE;
}

int run_involution(const Options& o) {
  const hyperoct_involution kind = involution_kind(o.kind);
  if (o.check == !o.window.empty()) {
    throw UsageError("involution takes exactly one of --check or --window");
  }
  if (!o.check) {
    Perm w = parse_window(o.window);
    int ok = 0;
    check(hyperoct_involution_in_domain(kind, w.get(), &ok));
    if (!ok) throw UsageError(o.window + " is outside the " + o.kind + " domain");
    hyperoct_perm* out = nullptr;
    unsigned pivot = 0;
    check(hyperoct_involution_apply(kind, w.get(), &out, &pivot));
    Perm image(out);
    hyperoct_stats before{}, after{};
    check(hyperoct_perm_stats(w.get(), &before));
    check(hyperoct_perm_stats(image.get(), &after));
    if (format_of(o) == Format::Json) {
      json rec;
      rec["kind"] = o.kind;
      rec["input"] = window_of(w.get());
      rec["output"] = window_of(image.get());
      rec["pivot"] = pivot;
      rec["length"] = {before.length, after.length};
      rec["L"] = {before.L, after.L};
      std::cout << rec.dump(2) << '\n';
    } else {
      std::cout << perm_text(w.get()) << " -> " << perm_text(image.get())
                << "  pivot=" << pivot << "  l: " << before.length << " -> "
                << after.length << "  L: " << before.L << " -> " << after.L
                << '\n';
    }
    return kExitPass;
  }
  require_degree(o.n);
  Timer timer(o.timing);
  hyperoct_involution_summary s{};
  check(hyperoct_involution_check(kind, o.n, &s));
  const bool passed = s.violations == 0;
  if (format_of(o) == Format::Json) {
    json rec;
    rec["kind"] = o.kind;
    rec["n"] = s.n;
    rec["domain"] = s.domain_size;
    rec["fixed_points"] = s.fixed_points;
    rec["leaves_domain"] = s.leaves_domain;
    rec["square"] = s.square_failures;
    rec["L"] = s.L_failures;
    rec["parity"] = s.parity_failures;
    rec["descents"] = s.descent_failures;
    rec["verdict"] = passed ? "pass" : "fail";
    if (!passed) rec["counterexample"] = s.first_counterexample;
    std::cout << rec.dump(2) << '\n';
  } else {
    std::cout << o.kind << "  n=" << s.n << "  domain=" << s.domain_size
              << "  fixed=" << s.fixed_points << "  escape=" << s.leaves_domain
              << "  square=" << s.square_failures << "  L=" << s.L_failures
              << "  parity=" << s.parity_failures
              << "  descents=" << s.descent_failures << "  "
              << (passed ? "pass" : "FAIL") << '\n';
    if (!passed) {
      std::cout << s.first_counterexample << '\n';
      std::cerr << s.first_failure << '\n';
    }
  }
  return passed ? kExitPass : kExitFail;
}

int run_symrank(const Options& o) {
  if (o.n == 0 || o.n > 8) throw UsageError("--n must lie in [1, 8]");
  if (o.q < 2) throw UsageError("--q must be a prime");
  if (o.i && *o.i > o.n) throw UsageError("--i must lie in [0, n]");
  std::vector<unsigned> coranks;
  if (o.i) {
    coranks.push_back(*o.i);
  } else {
    for (unsigned i = 0; i <= o.n; ++i) coranks.push_back(i);
  }
  Timer timer(o.timing);
  std::vector<std::uint64_t> hist(o.n + 1);
  size_t len = 0;
  check(hyperoct_symrank_histogram(o.n, o.q, o.budget, hist.data(), hist.size(), &len));
  bool all_passed = true;
  json arr = json::array();
  if (format_of(o) == Format::Csv) std::cout << "n,q,i,brute,formula,verdict\n";
  for (unsigned i : coranks) {
    std::uint64_t formula = 0;
    check(hyperoct_symrank_formula(o.n, o.q, i, &formula));
    const std::uint64_t brute = hist[o.n - i];
    const bool passed = brute == formula;
    all_passed = all_passed && passed;
    const char* verdict = passed ? "pass" : "fail";
    switch (format_of(o)) {
      case Format::Json:
        arr.push_back({{"n", o.n}, {"q", o.q}, {"i", i}, {"brute", brute},
                       {"formula", formula}, {"verdict", verdict}});
        break;
      case Format::Csv:
        std::cout << o.n << ',' << o.q << ',' << i << ',' << brute << ','
                  << formula << ',' << verdict << '\n';
        break;
      case Format::Text:
        std::cout << "n=" << o.n << " q=" << o.q << " i=" << i
                  << " brute=" << brute << " formula=" << formula << ' '
                  << verdict << '\n';
        break;
    }
  }
  if (format_of(o) == Format::Json) std::cout << arr.dump(2) << '\n';
  return all_passed ? kExitPass : kExitFail;
}

int run_decompose(const Options& o) {
  Perm w = parse_window(o.window);
  const unsigned n = hyperoct_perm_degree(w.get());
  if (o.subset == "all") throw UsageError("decompose needs an explicit --subset");
  const SubsetSpec spec = parse_subset(o.subset, n);
  hyperoct_perm* q = nullptr;
  hyperoct_perm* p = nullptr;
  check(hyperoct_perm_decompose(w.get(), spec.mask, &q, &p));
  Perm quotient(q), part(p);
  hyperoct_stats sw{}, sq{}, sp{};
  check(hyperoct_perm_stats(w.get(), &sw));
  check(hyperoct_perm_stats(quotient.get(), &sq));
  check(hyperoct_perm_stats(part.get(), &sp));
  if (format_of(o) == Format::Json) {
    json rec;
    rec["window"] = window_of(w.get());
    rec["I"] = mask_members(spec.mask);
    rec["quotient"] = window_of(quotient.get());
    rec["part"] = window_of(part.get());
    rec["length"] = {sw.length, sq.length, sp.length};
    rec["L"] = {sw.L, sq.L, sp.L};
    std::cout << rec.dump(2) << '\n';
  } else {
    std::cout << perm_text(w.get()) << " = " << perm_text(quotient.get())
              << " * " << perm_text(part.get()) << '\n'
              << "l: " << sw.length << " = " << sq.length << " + " << sp.length
              << '\n'
              << "L: " << sw.L << " vs " << sq.L << " + " << sp.L << '\n';
  }
  return kExitPass;
}

int run_genfun(const Options& o) {
  require_degree(o.n);
  const SubsetSpec spec = parse_subset(o.subset, o.n);
  if (o.eta > 1) throw UsageError("--eta must be 0 or 1");
  Timer timer(o.timing);
  json arr = json::array();
  if (format_of(o) == Format::Csv) std::cout << "n,I,poly\n";
  for (std::uint64_t m : expand(spec, o.n)) {
    hyperoct_poly* raw = nullptr;
    if (o.variant == "f") {
      check(hyperoct_f_poly(o.n, m, &raw));
    } else {
      check(hyperoct_fg_genfun(o.n, m, o.variant == "F" ? HYPEROCT_FG_F : HYPEROCT_FG_G,
                               o.eta, &raw));
    }
    Poly p(raw);
    switch (format_of(o)) {
      case Format::Json:
        arr.push_back({{"n", o.n}, {"I", mask_members(m)}, {"poly", coeffs_of(p.get())}});
        break;
      case Format::Csv:
        std::cout << o.n << ",\"" << mask_text(m) << "\",\"" << poly_json(p.get()) << "\"\n";
        break;
      case Format::Text:
        std::cout << "n=" << o.n << " I={" << mask_text(m) << "}  " << poly_text(p.get()) << '\n';
        break;
    }
  }
  if (format_of(o) == Format::Json) std::cout << arr.dump(2) << '\n';
  return kExitPass;
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  cmd->add_flag("--timing", o.timing, "Print elapsed time to stderr");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Signed-permutation statistics and identity checks"};
  app.require_subcommand(1);
  Options o;

  auto* stats = app.add_subcommand("stats", "Statistics of one signed permutation");
  stats->add_option("window", o.window, "Window, e.g. \"[1,-4,-3,2]\"")->required();
  add_common(stats, o);

  auto* verify = app.add_subcommand("verify", "Compare class sums with f_{n,I}");
  verify->add_option("--n", o.n)->required();
  verify->add_option("--subset", o.subset, "\"0,2\", \"\" or \"all\"");
  verify->add_option("--jobs", o.jobs, "Worker threads (HYPEROCT_JOBS)");
  verify->add_flag("--elements", o.elements, "Report class sizes");
  add_common(verify, o);

  auto* support = app.add_subcommand("support", "Support-set restriction identities");
  support->add_option("--n", o.n)->required();
  support->add_option("--subset", o.subset);
  support->add_option("--family", o.family)
      ->required()
      ->check(CLI::IsMember({"chessboard", "diagonal", "M", "E"}));
  support->add_flag("--elements", o.elements);
  add_common(support, o);

  auto* involution = app.add_subcommand("involution", "Apply or check an involution");
  involution->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"star", "circle", "vee"}));
  involution->add_option("--n", o.n);
  involution->add_flag("--check", o.check, "Exhaustive property suite over B_n");
  involution->add_option("--window", o.window);
  add_common(involution, o);

  auto* identity = app.add_subcommand("identity", "Identities over S_n");
  identity->add_option("--kind", o.kind)
      ->required()
      ->check(CLI::IsMember({"stanley", "evenperm"}));
  identity->add_option("--n", o.n)->required();
  identity->add_option("--subset", o.subset);
  add_common(identity, o);

  auto* symrank = app.add_subcommand("symrank", "Symmetric matrices by rank over F_q");
  symrank->add_option("--n", o.n)->required();
  symrank->add_option("--q", o.q)->required();
  symrank->add_option("--i", o.i, "Corank; all coranks if omitted");
  symrank->add_option("--budget", o.budget, "Maximum number of matrices");
  add_common(symrank, o);

  auto* decompose = app.add_subcommand("decompose", "Parabolic factorization w = w^I w_I");
  decompose->add_option("window", o.window)->required();
  decompose->add_option("--subset", o.subset)->required();
  add_common(decompose, o);

  auto* genfun = app.add_subcommand("genfun", "Print f_{n,I} or the F/G sums");
  genfun->add_option("--n", o.n)->required();
  genfun->add_option("--subset", o.subset);
  genfun->add_option("--variant", o.variant)->check(CLI::IsMember({"f", "F", "G"}));
  genfun->add_option("--eta", o.eta);
  add_common(genfun, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*stats) return run_stats(o);
    if (*verify) return run_verify(o);
    if (*support) return run_support(o);
    if (*involution) return run_involution(o);
    if (*identity) return run_identity(o);
    if (*symrank) return run_symrank(o);
    if (*decompose) return run_decompose(o);
    if (*genfun) return run_genfun(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.status == HYPEROCT_INTERNAL ? kExitInternal : kExitUsage;
  }
  return kExitUsage;
}
