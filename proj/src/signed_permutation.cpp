#include "hyperoct/signed_permutation.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>

#include "hyperoct/error.hpp"

namespace hyperoct {

namespace {

void check_degree(unsigned n) {
  if (n > kMaxDegree) {
    fail(ErrorCode::OutOfRange, "degree " + std::to_string(n) +
                                    " exceeds the supported maximum " +
                                    std::to_string(kMaxDegree));
  }
}

int sign_of(int v) { return v < 0 ? -1 : 1; }

}  // namespace

SignedPermutation SignedPermutation::from_window(std::span<const int> window) {
  if (window.empty()) fail(ErrorCode::InvalidArgument, "empty window");
  const unsigned n = static_cast<unsigned>(window.size());
  check_degree(n);
  std::array<std::int8_t, kMaxDegree> w{};
  std::uint64_t seen = 0;
  for (unsigned k = 0; k < n; ++k) {
    const int v = window[k];
    if (v == 0) fail(ErrorCode::InvalidArgument, "window entries must be nonzero");
    const unsigned a = static_cast<unsigned>(std::abs(v));
    if (a > n) {
      fail(ErrorCode::InvalidArgument,
           "|" + std::to_string(v) + "| exceeds degree " + std::to_string(n));
    }
    if ((seen >> a) & 1u) {
      fail(ErrorCode::InvalidArgument,
           "repeated absolute value " + std::to_string(a));
    }
    seen |= std::uint64_t{1} << a;
    w[k] = static_cast<std::int8_t>(v);
  }
  return SignedPermutation(n, w);
}

SignedPermutation SignedPermutation::parse(std::string_view text) {
  auto bad = [&]() -> void {
    fail(ErrorCode::InvalidArgument,
         "malformed window '" + std::string(text) + "', expected [a1,...,an]");
  };
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  if (pos == text.size() || text[pos] != '[') bad();
  ++pos;
  std::vector<int> values;
  while (true) {
    skip_ws();
    // Allow a '+' sign in addition to from_chars' '-'.
    if (pos < text.size() && text[pos] == '+') ++pos;
    int value = 0;
    const char* first = text.data() + pos;
    auto [ptr, ec] = std::from_chars(first, text.data() + text.size(), value);
    if (ec != std::errc{} || ptr == first) bad();
    values.push_back(value);
    pos = static_cast<std::size_t>(ptr - text.data());
    skip_ws();
    if (pos == text.size()) bad();
    if (text[pos] == ']') {
      ++pos;
      break;
    }
    if (text[pos] != ',') bad();
    ++pos;
  }
  skip_ws();
  if (pos != text.size()) bad();
  return from_window(values);
}

SignedPermutation SignedPermutation::identity(unsigned n) {
  check_degree(n);
  std::array<std::int8_t, kMaxDegree> w{};
  for (unsigned k = 0; k < n; ++k) w[k] = static_cast<std::int8_t>(k + 1);
  return SignedPermutation(n, w);
}

SignedPermutation SignedPermutation::generator(unsigned n, unsigned i) {
  if (n == 0 || i >= n) {
    fail(ErrorCode::OutOfRange, "generator index " + std::to_string(i) +
                                    " not in [" + std::to_string(n - 1) +
                                    "]_0");
  }
  return identity(n).times_generator(i);
}

SignedPermutation SignedPermutation::longest_element(unsigned n) {
  SignedPermutation w = identity(n);
  for (unsigned k = 0; k < n; ++k) w.w_[k] = static_cast<std::int8_t>(-w.w_[k]);
  return w;
}

std::vector<int> SignedPermutation::window() const {
  return std::vector<int>(w_.begin(), w_.begin() + n_);
}

unsigned SignedPermutation::column_of(unsigned row) const noexcept {
  for (unsigned j = 0; j < n_; ++j) {
    if (static_cast<unsigned>(std::abs(w_[j])) == row) return j + 1;
  }
  return 0;
}

std::array<int, kMaxDegree + 1> SignedPermutation::columns_by_row()
    const noexcept {
  std::array<int, kMaxDegree + 1> j{};
  for (unsigned c = 0; c < n_; ++c) j[std::abs(w_[c])] = static_cast<int>(c + 1);
  return j;
}

SignedPermutation SignedPermutation::inverse() const {
  SignedPermutation r = *this;
  for (unsigned c = 0; c < n_; ++c) {
    const int v = w_[c];
    r.w_[std::abs(v) - 1] = static_cast<std::int8_t>(sign_of(v) * int(c + 1));
  }
  return r;
}

SignedPermutation SignedPermutation::times_generator(unsigned i) const {
  if (i >= n_) fail(ErrorCode::OutOfRange, "generator index out of range");
  SignedPermutation r = *this;
  if (i == 0) {
    r.w_[0] = static_cast<std::int8_t>(-r.w_[0]);
  } else {
    std::swap(r.w_[i - 1], r.w_[i]);
  }
  return r;
}

SignedPermutation SignedPermutation::generator_times(unsigned i) const {
  if (i >= n_) fail(ErrorCode::OutOfRange, "generator index out of range");
  SignedPermutation r = *this;
  for (unsigned c = 0; c < n_; ++c) {
    const int v = w_[c];
    const int a = std::abs(v);
    int image = a;
    if (i == 0) {
      if (a == 1) image = -1;
    } else if (a == static_cast<int>(i)) {
      image = a + 1;
    } else if (a == static_cast<int>(i) + 1) {
      image = a - 1;
    }
    r.w_[c] = static_cast<std::int8_t>(sign_of(v) * image);
  }
  return r;
}

bool SignedPermutation::is_identity() const noexcept {
  for (unsigned c = 0; c < n_; ++c) {
    if (w_[c] != static_cast<int>(c + 1)) return false;
  }
  return true;
}

std::string SignedPermutation::to_string() const {
  std::string out = "[";
  for (unsigned c = 0; c < n_; ++c) {
    if (c) out += ',';
    out += std::to_string(int(w_[c]));
  }
  out += ']';
  return out;
}

SignedPermutation compose(const SignedPermutation& u,
                          const SignedPermutation& v) {
  if (u.n_ != v.n_) {
    fail(ErrorCode::DegreeMismatch, "cannot compose elements of B_" +
                                        std::to_string(u.n_) + " and B_" +
                                        std::to_string(v.n_));
  }
  SignedPermutation r = v;
  for (unsigned c = 0; c < v.n_; ++c) {
    r.w_[c] = static_cast<std::int8_t>(u(v.w_[c]));
  }
  return r;
}

// --- ColumnMatrix -------------------------------------------------------

ColumnMatrix::ColumnMatrix(unsigned rows, unsigned cols)
    : rows_(rows), cols_(cols), entries_(std::size_t{rows} * cols, 0) {
  if (rows == 0 || cols == 0) {
    fail(ErrorCode::InvalidArgument, "matrix dimensions must be positive");
  }
}

ColumnMatrix ColumnMatrix::from_rows(unsigned rows, unsigned cols,
                                     std::span<const int> entries) {
  if (entries.size() != std::size_t{rows} * cols) {
    fail(ErrorCode::InvalidArgument, "entry count does not match dimensions");
  }
  ColumnMatrix m(rows, cols);
  for (unsigned i = 1; i <= rows; ++i) {
    for (unsigned j = 1; j <= cols; ++j) {
      m.set(i, j, entries[(i - 1) * cols + (j - 1)]);
    }
  }
  return m;
}

void ColumnMatrix::set(unsigned i, unsigned j, int value) {
  if (i == 0 || i > rows_ || j == 0 || j > cols_) {
    fail(ErrorCode::OutOfRange, "matrix index out of range");
  }
  if (value < -1 || value > 1) {
    fail(ErrorCode::InvalidArgument, "entries must lie in {-1, 0, 1}");
  }
  entries_[(i - 1) * cols_ + (j - 1)] = static_cast<std::int8_t>(value);
}

bool ColumnMatrix::is_statistic_column(unsigned j) const noexcept {
  return row_of(j) != 0;
}

unsigned ColumnMatrix::row_of(unsigned j) const noexcept {
  unsigned found = 0;
  for (unsigned i = 1; i <= rows_; ++i) {
    if (at(i, j) != 0) {
      if (found) return 0;
      found = i;
    }
  }
  return found;
}

unsigned ColumnMatrix::column_of(unsigned i) const noexcept {
  unsigned found = 0;
  for (unsigned j = 1; j <= cols_; ++j) {
    if (at(i, j) != 0) {
      if (found) return 0;
      found = j;
    }
  }
  return found;
}

ColumnMatrix matrix_view(const SignedPermutation& w) {
  const unsigned n = w.degree();
  ColumnMatrix m(n, n);
  for (unsigned j = 1; j <= n; ++j) m.set(w.row_of(j), j, sign_of(w.at(j)));
  return m;
}

// --- σ and ∗ -----------------------------------------------------------

namespace {

// Rank-and-sign extraction of the columns start, start+2, ...
SignedPermutation extract_columns(const SignedPermutation& w, unsigned start) {
  const unsigned n = w.degree();
  std::vector<int> values;
  for (unsigned j = start; j <= n; j += 2) values.push_back(w.at(j));
  if (values.empty()) return SignedPermutation::identity(0);
  std::vector<int> sorted_abs;
  for (int v : values) sorted_abs.push_back(std::abs(v));
  std::sort(sorted_abs.begin(), sorted_abs.end());
  std::vector<int> window;
  for (int v : values) {
    const auto rank = std::lower_bound(sorted_abs.begin(), sorted_abs.end(),
                                       std::abs(v)) -
                      sorted_abs.begin() + 1;
    window.push_back(sign_of(v) * static_cast<int>(rank));
  }
  return SignedPermutation::from_window(window);
}

}  // namespace

std::pair<SignedPermutation, SignedPermutation> sigma_split(
    const SignedPermutation& w) {
  return {extract_columns(w, 1), extract_columns(w, 2)};
}

SignedPermutation star_merge(const SignedPermutation& w1,
                             const SignedPermutation& w2) {
  const unsigned m1 = w1.degree();
  const unsigned m2 = w2.degree();
  if (m1 != m2 && m1 != m2 + 1) {
    fail(ErrorCode::DegreeMismatch,
         "star_merge needs deg w1 in {deg w2, deg w2 + 1}, got " +
             std::to_string(m1) + " and " + std::to_string(m2));
  }
  std::vector<int> window(m1 + m2);
  for (unsigned a = 1; a <= m1; ++a) {
    const int v = w1.at(a);
    window[2 * a - 2] = sign_of(v) * (2 * std::abs(v) - 1);
  }
  for (unsigned a = 1; a <= m2; ++a) {
    const int v = w2.at(a);
    window[2 * a - 1] = sign_of(v) * 2 * std::abs(v);
  }
  return SignedPermutation::from_window(window);
}

// --- parabolic factorization ------------------------------------------

ParabolicFactorization parabolic_decompose(const SignedPermutation& w,
                                           const IndexSet& subset) {
  const unsigned n = w.degree();
  if (subset.ambient() != n) {
    fail(ErrorCode::DegreeMismatch, "subset ambient degree differs from w");
  }
  SignedPermutation quotient = w;
  SignedPermutation part = SignedPermutation::identity(n);
  // Each step lowers l(quotient) by one, so this runs l(w) times at most.
  bool stripped = true;
  while (stripped) {
    stripped = false;
    for (unsigned i = 0; i < n; ++i) {
      if (!subset.contains(i)) continue;
      if (quotient(static_cast<int>(i)) > quotient(static_cast<int>(i) + 1)) {
        quotient = quotient.times_generator(i);
        part = part.generator_times(i);
        stripped = true;
        break;
      }
    }
  }
  return {w, subset, quotient, part};
}

}  // namespace hyperoct
