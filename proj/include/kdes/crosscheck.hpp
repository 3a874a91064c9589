#pragma once

#include "kdes/closed_forms.hpp"
#include "kdes/oracle.hpp"
#include "kdes/report.hpp"

#include <functional>

namespace kdes {

// Each computation method behind a replaceable function, so a deliberately
// broken method can be swapped in.
struct MethodSet {
  std::function<IntPoly(int k, int length)> a_oracle;
  std::function<BiPoly(int k, int length)> b_oracle;
  std::function<IntPoly(int k, int length)> a_recursive;
  std::function<BiPoly(int k, int length)> b_recursive;
  std::function<BigInt(FormulaId, int k, int n, int j, int degree)> closed;
};

MethodSet default_methods(const OracleOptions& opts = {});

// For every k and length: oracle = recursion = every closed form, for A and
// for B (split and total). Lengths are permutation sizes.
VerificationReport verify_methods(IntRange k, IntRange lengths, const MethodSet& methods);
VerificationReport verify_methods(IntRange k, IntRange lengths, const OracleOptions& opts = {});

}  // namespace kdes
