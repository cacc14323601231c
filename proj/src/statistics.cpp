#include "hyperoct/statistics.hpp"

#include <cstdlib>

#include "hyperoct/error.hpp"

namespace hyperoct {

LengthStats length_stats(const SignedPermutation& w) {
  LengthStats s;
  const unsigned n = w.degree();
  for (unsigned i = 1; i <= n; ++i) {
    const int wi = w.at(i);
    if (wi < 0) ++s.neg;
    for (unsigned j = i + 1; j <= n; ++j) {
      const int wj = w.at(j);
      if (wi > wj) ++s.inv;
      if (wi + wj < 0) ++s.nsp;
    }
  }
  s.length = s.inv + s.neg + s.nsp;
  return s;
}

unsigned coxeter_length(const SignedPermutation& w) {
  return length_stats(w).length;
}

IndexSet descent_set(const SignedPermutation& w) {
  const unsigned n = w.degree();
  std::uint64_t mask = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (w(static_cast<int>(i)) > w(static_cast<int>(i) + 1)) {
      mask |= std::uint64_t{1} << i;
    }
  }
  return IndexSet::from_mask(n, mask);
}

unsigned compute_L_direct(const SignedPermutation& w) {
  const int n = static_cast<int>(w.degree());
  unsigned raw = 0;
  for (int i = -n; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (((i - j) & 1) != 0 && w(i) > w(j)) ++raw;
    }
  }
  if (raw % 2 != 0) {
    fail(ErrorCode::Internal, "odd mixed-parity inversion count " +
                                  std::to_string(raw) + " for " +
                                  w.to_string());
  }
  return raw / 2;
}

AbcStats abc_stats(const ColumnMatrix& m) {
  AbcStats s;
  const unsigned cols = m.cols();
  std::vector<unsigned> row(cols + 1, 0);
  for (unsigned j = 1; j <= cols; ++j) row[j] = m.row_of(j);
  for (unsigned j = 1; j <= cols; ++j) {
    if (row[j] == 0) continue;
    if (j % 2 == 1 && m.at(row[j], j) == -1) ++s.a;
    for (unsigned k = j + 1; k <= cols; ++k) {
      if (row[k] == 0 || (k - j) % 2 == 0) continue;
      if (row[j] > row[k]) {
        ++s.b;
      } else if (m.at(row[k], k) == -1) {
        ++s.c;
      }
    }
  }
  return s;
}

namespace {

AbcStats abc_on_window(const SignedPermutation& w) {
  AbcStats s;
  const unsigned n = w.degree();
  for (unsigned j = 1; j <= n; ++j) {
    const int wj = w.at(j);
    if (j % 2 == 1 && wj < 0) ++s.a;
    const int rj = std::abs(wj);
    for (unsigned k = j + 1; k <= n; k += 2) {
      const int wk = w.at(k);
      if (rj > std::abs(wk)) {
        ++s.b;
      } else if (wk < 0) {
        ++s.c;
      }
    }
  }
  return s;
}

}  // namespace

unsigned compute_L(const SignedPermutation& w) {
  const AbcStats s = abc_on_window(w);
  return s.a + s.b + 2 * s.c;
}

std::vector<int> row_pattern(const SignedPermutation& w) {
  const unsigned n = w.degree();
  std::vector<int> rho(n, 0);
  for (unsigned j = 1; j <= n; ++j) {
    const int v = w.at(j);
    rho[std::abs(v) - 1] = v < 0 ? -1 : 1;
  }
  return rho;
}

StatRecord compute_stats(const SignedPermutation& w) {
  const LengthStats l = length_stats(w);
  const AbcStats abc = abc_on_window(w);
  StatRecord r;
  r.inv = l.inv;
  r.neg = l.neg;
  r.nsp = l.nsp;
  r.length = l.length;
  r.a = abc.a;
  r.b = abc.b;
  r.c = abc.c;
  r.L = abc.a + abc.b + 2 * abc.c;
  r.descents = descent_set(w);
  return r;
}

}  // namespace hyperoct
