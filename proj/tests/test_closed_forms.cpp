#include "kdes/closed_forms.hpp"
#include "kdes/oracle.hpp"
#include "kdes/recursion.hpp"

#include <doctest.h>

using namespace kdes;

TEST_CASE("arithmetic primitives") {
  CHECK(falling_factorial(5, 0) == 1);
  CHECK(falling_factorial(5, 2) == 20);
  CHECK(falling_factorial(3, 5) == 0);
  CHECK(binom(5, 2) == 10);
  CHECK(binom(4, 7) == 0);
  CHECK(binom(4, -1) == 0);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(-1, 0) == 1);
  CHECK(binom(-1, -1) == 1);
  CHECK(binom(-1, 2) == 1);
  CHECK(binom(-3, 2) == 6);
  CHECK(binom(-2, -3) == -2);
  CHECK(binom(-3, -2) == 0);
  CHECK(factorial(20) == BigInt(2432902008176640000ULL));
  CHECK(affine_product(1, 2, 0, 2) == 1 * 3 * 5);
  CHECK(affine_product(7, 1, 1, 0) == 1);
  // Pascal's rule holds across the whole integer plane under this extension.
  for (long a = -6; a <= 6; ++a)
    for (long b = -6; b <= 6; ++b)
      if (!(a == -1 && b == -1) && !(a == 0 && b == 0) && !(a < 0 && b == a))
        CHECK(binom(a, b) == binom(a - 1, b) + binom(a - 1, b - 1));
}

TEST_CASE("A boundary coefficients") {
  CHECK(coeff_A_boundary_low(3, 2, 0) == 72);
  CHECK(coeff_A_boundary_low(3, 0, 1) == 1);
  CHECK(coeff_A_boundary_low(3, 3, 0) == 10800);
  CHECK(coeff_A_boundary_high(3, 2, 0) == 192);
  CHECK(coeff_A_boundary_high(3, 5, 0) == BigInt(13934592000LL));
  CHECK(coeff_A_boundary_high(3, 4, 2) == BigInt(1393459200LL));
  CHECK_THROWS_AS(coeff_A_boundary_low(3, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(coeff_A_boundary_low(1, 1, 0), std::invalid_argument);
}

TEST_CASE("A full formulas") {
  CHECK(coeff_A_incl_excl(3, 2, 0, 1) == 456);
  CHECK(coeff_A_incl_excl(2, 1, 0, 1) == 1);
  CHECK(coeff_A_incl_excl(3, 5, 0, 4) == BigInt(191981664000LL));
  CHECK(coeff_A_incl_excl(3, 2, 0, 3) == 0);
  CHECK(coeff_A_incl_excl(3, 2, 0, -1) == 0);
  CHECK(coefficient(FormulaId::ADual, 3, 2, 0, 2) == 192);
  CHECK(coeff_A_dual(3, 2, 0, 0) == 192);
  for (int k = 2; k <= 5; ++k)
    for (int j = 0; j < k; ++j) CHECK(coeff_A_dual(k, 0, j, 0) == factorial(j));
  CHECK(coefficient(FormulaId::ADual, 3, 3, 0, 1) == 133920);
}

TEST_CASE("omega") {
  for (int k = 2; k <= 6; ++k)
    for (long r = 0; r <= 10; ++r) {
      CHECK(omega_sum(k, 1, r) == 1);
      CHECK(omega_product(k, 1, r) == 1);
    }
  CHECK(omega_sum(3, 2, 1) == 5);
  CHECK(omega_product(3, 2, 1) == 5);
  CHECK(omega_product(2, 2, 0) == 2);
  CHECK(omega_sum(2, 2, 0) == 2);
  CHECK_THROWS_AS(omega_sum(3, 0, 1), std::invalid_argument);
}

TEST_CASE("B boundary coefficients") {
  CHECK(coeff_B_boundary(3, 2, 0, BBoundary::Total0) == 360);
  CHECK(coeff_B_boundary(3, 2, 0, BBoundary::Split00) == 192);
  CHECK(coeff_B_boundary(3, 2, 0, BBoundary::Split10) == 168);
  CHECK(coeff_B_boundary(3, 2, 0, BBoundary::B1NMinus1) == 72);
  CHECK(coeff_B_boundary(3, 2, 0, BBoundary::TotalN) == 0);
  CHECK(coeff_B_boundary(3, 2, 1, BBoundary::Split0N) == 360);
  CHECK(coeff_B_boundary(3, 2, 1, BBoundary::Split1N) == 0);
  for (int k = 2; k <= 5; ++k)
    for (int L = 1; L <= 9; ++L) {
      const int n = L / k, j = L % k;
      BiPoly b = poly_B_bruteforce(k, L);
      CAPTURE(k);
      CAPTURE(L);
      CHECK(coeff_B_boundary(k, n, j, BBoundary::Total0) == b.at_z1().coeff(0));
      CHECK(coeff_B_boundary(k, n, j, BBoundary::Split00) == b.z0.coeff(0));
      CHECK(coeff_B_boundary(k, n, j, BBoundary::Split10) == b.z1.coeff(0));
      CHECK(coeff_B_boundary(k, n, j, BBoundary::TotalN) == b.at_z1().coeff(n));
      CHECK(coeff_B_boundary(k, n, j, BBoundary::Split0N) == b.z0.coeff(n));
      CHECK(coeff_B_boundary(k, n, j, BBoundary::Split1N) == b.z1.coeff(n));
      if (n >= 1) CHECK(coeff_B_boundary(k, n, j, BBoundary::B1NMinus1) == b.z1.coeff(n - 1));
    }
}

TEST_CASE("B full formulas") {
  CHECK(coefficient(FormulaId::BTotalDual, 3, 2, 0, 1) == 360);
  CHECK(coefficient(FormulaId::BTotalDual, 3, 2, 0, 2) == 0);
  CHECK(coefficient(FormulaId::BTotalDual, 2, 2, 1, 1) == poly_B_bruteforce(2, 5).at_z1().coeff(1));
  CHECK(coefficient(FormulaId::BTotalDual, 2, 2, 1, 1) == 72);
  CHECK(coeff_B_total_incl_excl(3, 2, 0, 0) == 360);
  for (int k = 2; k <= 5; ++k)
    for (int j = 0; j < k; ++j)
      for (int s = 1; s <= 3; ++s) CHECK(coeff_B_total_incl_excl(k, 0, j, s) == 0);
  CHECK(coeff_B_total_incl_excl(3, 4, 0, 2) == BigInt(201398400LL));
  CHECK(coeff_B_total_incl_excl(3, 3, 2, 2) == BigInt(14878080LL));
  CHECK(coeff_B1(3, 2, 0, 0) == 72);
  CHECK(coeff_B1(3, 2, 0, 1) == 168);
  for (int n = 0; n <= 5; ++n) CHECK(coefficient(FormulaId::B1Form, 3, n, 1, n) == 0);
  CHECK(coefficient(FormulaId::B0Form, 3, 2, 0, 1) == 288);
  CHECK(coefficient(FormulaId::B0Form, 3, 2, 0, 2) == 0);
  CHECK(coefficient(FormulaId::B0Form, 3, 1, 1, 1) == 6);
  CHECK_THROWS_AS(coefficient(FormulaId::Omega, 3, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("closed forms equal the recursion far beyond the oracle range") {
  for (int k = 2; k <= 6; ++k) {
    auto a = poly_A_chain(k, 40);
    auto b = poly_B_chain(k, 40);
    for (int L = 0; L <= 40; ++L) {
      CAPTURE(k);
      CAPTURE(L);
      const auto& al = a[static_cast<std::size_t>(L)];
      const auto& bl = b[static_cast<std::size_t>(L)];
      CHECK(closed_poly_A(k, L) == al);
      CHECK(closed_poly_A(k, L, FormulaId::ADual) == al);
      CHECK(closed_poly_B_total(k, L) == bl.at_z1());
      CHECK(closed_poly_B_total(k, L, FormulaId::BTotalDual) == bl.at_z1());
      CHECK(closed_poly_B(k, L) == bl);
    }
  }
}

TEST_CASE("the 52905 remark") {
  BigInt v = coeff_A_incl_excl(3, 5, 0, 4);
  CHECK(v % factorial(10) == 0);
  CHECK(v / factorial(10) == 52905);
  CHECK(3 * 5 * 3527 == 52905);
}
