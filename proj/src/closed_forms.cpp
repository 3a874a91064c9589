#include "kdes/closed_forms.hpp"

#include <stdexcept>
#include <string>

namespace kdes {

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  BigInt f = 1;
  for (long i = 2; i <= n; ++i) f *= i;
  return f;
}

BigInt falling_factorial(const BigInt& x, long r) {
  if (r < 0) throw std::invalid_argument("falling factorial with negative length");
  BigInt f = 1;
  for (long i = 0; i < r; ++i) f *= x - i;
  return f;
}

BigInt binom(long a, long b) {
  if (a < 0) {
    if (b >= 0) return ((b % 2 == 0) ? 1 : -1) * binom(b - a - 1, b);
    if (b <= a) return (((a - b) % 2 == 0) ? 1 : -1) * binom(-b - 1, a - b);
    return 0;
  }
  if (b < 0 || b > a) return 0;
  if (b > a - b) b = a - b;
  return falling_factorial(BigInt(a), b) / factorial(b);
}

BigInt affine_product(long a, long b, long lo, long hi) {
  BigInt p = 1;
  for (long i = lo; i <= hi; ++i) p *= a + b * i;
  return p;
}

namespace {

void check(int k, int n, int j) {
  if (k < 2) throw std::invalid_argument("closed forms need k >= 2");
  if (n < 0) throw std::invalid_argument("closed forms need n >= 0");
  if (j < 0 || j > k - 1) throw std::invalid_argument("closed forms need 0 <= j <= k-1");
}

BigInt prefactor(int k, int n, int j) { return factorial(static_cast<long>(k - 1) * n + j); }

BigInt sign(long e) { return (e % 2 == 0) ? BigInt(1) : BigInt(-1); }

BigInt nonneg(BigInt v, const char* what) {
  if (v < 0) throw std::logic_error(std::string("negative coefficient from ") + what);
  return v;
}

// sum_{r=0}^{s} (-1)^{s-r} C(m+r, r) C(top, s-r) term(r)
template <class Term>
BigInt alternating(long m, long top, int s, Term term) {
  BigInt acc = 0;
  for (int r = 0; r <= s; ++r) acc += sign(s - r) * binom(m + r, r) * binom(top, s - r) * term(r);
  return acc;
}

}  // namespace

BigInt coeff_A_boundary_low(int k, int n, int j) {
  check(k, n, j);
  return prefactor(k, n, j) * affine_product(j + 1, k - 1, 0, n - 1);
}

BigInt coeff_A_boundary_high(int k, int n, int j) {
  check(k, n, j);
  return prefactor(k, n, j) * boost::multiprecision::pow(BigInt(k - 1), static_cast<unsigned>(n)) * factorial(n);
}

BigInt coeff_A_incl_excl(int k, int n, int j, int s) {
  check(k, n, j);
  if (s < 0 || s > n) return 0;
  const long m = static_cast<long>(k - 1) * n + j;
  BigInt sum = alternating(m, static_cast<long>(k) * n + j + 1, s,
                           [&](int r) { return affine_product(r + 1 + j, k - 1, 0, n - 1); });
  return nonneg(prefactor(k, n, j) * sum, "A inclusion-exclusion");
}

BigInt coeff_A_dual(int k, int n, int j, int s) {
  check(k, n, j);
  if (s < 0 || s > n) return 0;
  const long m = static_cast<long>(k - 1) * n + j;
  BigInt sum = alternating(m, static_cast<long>(k) * n + j + 1, s,
                           [&](int r) { return affine_product(r, k - 1, 1, n); });
  return nonneg(prefactor(k, n, j) * sum, "A dual");
}

BigInt omega_sum(int k, int n, long r) {
  if (k < 2 || n < 1) throw std::invalid_argument("omega needs k >= 2 and n >= 1");
  BigInt acc = 0;
  for (int p = 0; p <= n - 1; ++p)
    acc += affine_product(r, k - 1, 0, p - 1) * affine_product(1 + r, k - 1, p + 1, n - 1);
  return acc;
}

BigInt omega_product(int k, int n, long r) {
  if (k < 2 || n < 1) throw std::invalid_argument("omega needs k >= 2 and n >= 1");
  return affine_product(1 + r, k - 1, 0, n - 1) - affine_product(r, k - 1, 0, n - 1);
}

BigInt coeff_B_boundary(int k, int n, int j, BBoundary which) {
  check(k, n, j);
  const BigInt f = prefactor(k, n, j);
  const BigInt split00 = boost::multiprecision::pow(BigInt(k - 1), static_cast<unsigned>(n)) * factorial(n);
  switch (which) {
    case BBoundary::Total0:
      return f * affine_product(1, k - 1, 1, n);
    case BBoundary::Split00:
      return f * split00;
    case BBoundary::Split10:
      return f * (affine_product(1, k - 1, 1, n) - split00);
    case BBoundary::TotalN:
    case BBoundary::Split0N:
      return f * affine_product(j, k - 1, 0, n - 1);
    case BBoundary::Split1N:
      return 0;
    case BBoundary::B1NMinus1:
      if (n < 1) throw std::invalid_argument("B1 at degree n-1 needs n >= 1");
      return f * omega_product(k, n, j);
  }
  throw std::invalid_argument("unknown boundary");
}

BigInt coeff_B_total_dual(int k, int n, int j, int s) {
  check(k, n, j);
  if (s < 0 || s > n) return 0;
  const long m = static_cast<long>(k - 1) * n + j;
  BigInt sum = alternating(m, static_cast<long>(k) * n + j + 1, s,
                           [&](int r) { return affine_product(r + j, k - 1, 0, n - 1); });
  return nonneg(prefactor(k, n, j) * sum, "B total dual");
}

BigInt coeff_B_total_incl_excl(int k, int n, int j, int s) {
  check(k, n, j);
  if (s < 0 || s > n) return 0;
  const long m = static_cast<long>(k - 1) * n + j;
  BigInt sum = alternating(m, static_cast<long>(k) * n + j + 1, s,
                           [&](int r) { return affine_product(1 + r, k - 1, 1, n); });
  return nonneg(prefactor(k, n, j) * sum, "B total inclusion-exclusion");
}

BigInt coeff_B1(int k, int n, int j, int s) {
  check(k, n, j);
  if (s < 0 || s > n - 1) return 0;
  const long m = static_cast<long>(k - 1) * n + j;
  BigInt sum = alternating(m, static_cast<long>(k) * n + j, s,
                           [&](int r) { return omega_product(k, n, r + j); });
  return nonneg(prefactor(k, n, j) * sum, "B1");
}

BigInt coeff_B0(int k, int n, int j, int s) {
  check(k, n, j);
  if (s == -1) return prefactor(k, n, j) * affine_product(j, k - 1, 0, n - 1);
  if (s < -1 || s > n - 1) return 0;
  const long m = static_cast<long>(k - 1) * n + j;
  const long top = static_cast<long>(k) * n + j;
  BigInt first = alternating(m, top, s + 1, [&](int r) { return affine_product(r + j, k - 1, 0, n - 1); });
  BigInt second = alternating(m, top, s, [&](int r) { return affine_product(1 + r + j, k - 1, 0, n - 1); });
  return nonneg(prefactor(k, n, j) * (first - second), "B0");
}

std::string_view to_string(FormulaId id) {
  switch (id) {
    case FormulaId::ABoundaryLow: return "A-boundary-low";
    case FormulaId::ABoundaryHigh: return "A-boundary-high";
    case FormulaId::AInclExcl: return "A-incl-excl";
    case FormulaId::ADual: return "A-dual";
    case FormulaId::BBoundary: return "B-boundary";
    case FormulaId::BTotalDual: return "B-total-dual";
    case FormulaId::BTotalInclExcl: return "B-total-incl-excl";
    case FormulaId::B1Form: return "B1";
    case FormulaId::B0Form: return "B0";
    case FormulaId::Omega: return "omega";
  }
  return "?";
}

BigInt coefficient(FormulaId id, int k, int n, int j, int degree) {
  check(k, n, j);
  switch (id) {
    case FormulaId::AInclExcl: return coeff_A_incl_excl(k, n, j, degree);
    case FormulaId::ADual: return (degree < 0 || degree > n) ? BigInt(0) : coeff_A_dual(k, n, j, n - degree);
    case FormulaId::BTotalInclExcl: return coeff_B_total_incl_excl(k, n, j, degree);
    case FormulaId::BTotalDual: return (degree < 0 || degree > n) ? BigInt(0) : coeff_B_total_dual(k, n, j, n - degree);
    case FormulaId::B1Form: return (degree < 0 || degree > n - 1) ? BigInt(0) : coeff_B1(k, n, j, n - 1 - degree);
    case FormulaId::B0Form: return (degree < 0 || degree > n) ? BigInt(0) : coeff_B0(k, n, j, n - 1 - degree);
    default: break;
  }
  throw std::invalid_argument(std::string(to_string(id)) + " is not a full-coefficient formula");
}

namespace {

IntPoly build(FormulaId id, int k, int length) {
  if (k < 2) throw std::invalid_argument("closed forms need k >= 2");
  if (length < 0) throw std::invalid_argument("negative length");
  const int n = length / k, j = length % k;
  std::vector<BigInt> c;
  for (int d = 0; d <= n; ++d) c.push_back(coefficient(id, k, n, j, d));
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly closed_poly_A(int k, int length, FormulaId id) {
  if (id != FormulaId::AInclExcl && id != FormulaId::ADual) throw std::invalid_argument("not an A formula");
  return build(id, k, length);
}

IntPoly closed_poly_B_total(int k, int length, FormulaId id) {
  if (id != FormulaId::BTotalInclExcl && id != FormulaId::BTotalDual)
    throw std::invalid_argument("not a total B formula");
  return build(id, k, length);
}

BiPoly closed_poly_B(int k, int length) {
  return BiPoly(build(FormulaId::B0Form, k, length), build(FormulaId::B1Form, k, length));
}

}  // namespace kdes
