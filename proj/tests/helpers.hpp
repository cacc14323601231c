#pragma once

#include <doctest.h>

#include <vector>

#include "hyperoct/error.hpp"
#include "hyperoct/polynomial.hpp"
#include "hyperoct/signed_permutation.hpp"
#include "oracle.hpp"

namespace testing {

template <typename F>
hyperoct::ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const hyperoct::Error& e) {
    return e.code();
  }
  FAIL("expected a hyperoct::Error");
  return hyperoct::ErrorCode::Internal;
}

inline hyperoct::SignedPermutation perm(const oracle::Window& w) {
  return hyperoct::SignedPermutation::from_window(w);
}

inline hyperoct::SignedPermutation perm(std::string_view text) {
  return hyperoct::SignedPermutation::parse(text);
}

inline oracle::Poly coeffs(const hyperoct::IntPolynomial& p) {
  return p.coefficients();
}

}  // namespace testing
