#pragma once

#include "kdes/poly.hpp"

#include <string_view>

namespace kdes {

BigInt factorial(long n);
// x (x-1) ... (x-r+1)
BigInt falling_factorial(const BigInt& x, long r);
// Zero for 0 <= a < b or b < 0 <= a. Negative a follows the usual extension
// C(a,b) = (-1)^b C(b-a-1,b) for b >= 0 and (-1)^(a-b) C(-b-1,a-b) for b <= a.
BigInt binom(long a, long b);
// prod_{i=lo}^{hi} (a + b i); 1 when hi < lo.
BigInt affine_product(long a, long b, long lo, long hi);

// Every formula below is for length kn+j with k >= 2, n >= 0, 0 <= j <= k-1,
// and carries the prefactor ((k-1)n+j)!. Coefficients outside the support are 0.

BigInt coeff_A_boundary_low(int k, int n, int j);
BigInt coeff_A_boundary_high(int k, int n, int j);
// A_{s,kn+j}
BigInt coeff_A_incl_excl(int k, int n, int j, int s);
// A_{n-s,kn+j}
BigInt coeff_A_dual(int k, int n, int j, int s);

// Needs n >= 1.
BigInt omega_sum(int k, int n, long r);
BigInt omega_product(int k, int n, long r);

enum class BBoundary { Total0, Split00, Split10, TotalN, Split0N, Split1N, B1NMinus1 };
BigInt coeff_B_boundary(int k, int n, int j, BBoundary which);
// B_{n-s,kn+j}, both z-classes together
BigInt coeff_B_total_dual(int k, int n, int j, int s);
// B_{s,kn+j}, both z-classes together
BigInt coeff_B_total_incl_excl(int k, int n, int j, int s);
// z^1 part at degree n-1-s
BigInt coeff_B1(int k, int n, int j, int s);
// z^0 part at degree n-1-s; s = -1 gives degree n
BigInt coeff_B0(int k, int n, int j, int s);

enum class FormulaId {
  ABoundaryLow,
  ABoundaryHigh,
  AInclExcl,
  ADual,
  BBoundary,
  BTotalDual,
  BTotalInclExcl,
  B1Form,
  B0Form,
  Omega,
};

std::string_view to_string(FormulaId id);

// Coefficient of x^degree at length kn+j, whatever index the formula uses natively.
// Supported: AInclExcl, ADual, BTotalDual, BTotalInclExcl, B1Form, B0Form.
BigInt coefficient(FormulaId id, int k, int n, int j, int degree);

IntPoly closed_poly_A(int k, int length, FormulaId id = FormulaId::AInclExcl);
IntPoly closed_poly_B_total(int k, int length, FormulaId id = FormulaId::BTotalInclExcl);
// z^0 part from B0Form, z^1 part from B1Form.
BiPoly closed_poly_B(int k, int length);

}  // namespace kdes
