#include "kdes/oracle.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace kdes;
using testing_support::heap_A;
using testing_support::heap_B;
using testing_support::to_poly;

TEST_CASE("table values") {
  CHECK(poly_A_bruteforce(3, 6) == IntPoly{72, 456, 192});
  CHECK(poly_A_bruteforce(3, 1) == IntPoly{1});
  CHECK(poly_A_bruteforce(2, 2) == IntPoly{1, 1});
  CHECK(poly_B_bruteforce(3, 3) == BiPoly(IntPoly{4}, IntPoly{2}));
  CHECK(poly_B_bruteforce(3, 6) == BiPoly(IntPoly{192, 288}, IntPoly{168, 72}));
  CHECK(poly_B_bruteforce(3, 1) == BiPoly(IntPoly{1}));
}

TEST_CASE("empty permutation") {
  CHECK(poly_A_bruteforce(3, 0) == IntPoly{1});
  CHECK(poly_B_bruteforce(3, 0) == BiPoly(IntPoly{1}));
}

TEST_CASE("general distributions") {
  CHECK(distribution_general(2, StatConfig(2)) == IntPoly{1, 1});
  CHECK(distribution_general(4, StatConfig(2)).coeff(0) == 4);
  CHECK(distribution_general(3, StatConfig(1)) == IntPoly{1, 4, 1});
  CHECK(distribution_general(5, StatConfig(1)) == IntPoly{1, 26, 66, 26, 1});
}

TEST_CASE("agreement with an enumeration in a different order") {
  for (int k = 1; k <= 5; ++k)
    for (int n = 0; n <= 8; ++n) {
      CAPTURE(k);
      CAPTURE(n);
      CHECK(poly_A_bruteforce(k, n) == to_poly(heap_A(k, n)));
      auto b = heap_B(k, n);
      BiPoly expected(to_poly(b[0]), to_poly(b[1]));
      if (n == 0) expected = BiPoly(IntPoly{1});
      CHECK(poly_B_bruteforce(k, n, {3, 11}) == expected);
    }
}

TEST_CASE("other residue sets") {
  StatConfig cfg(3, Direction::SecondElement, {1, 2});
  for (int n = 0; n <= 7; ++n) {
    std::vector<long long> d(static_cast<std::size_t>(n) + 1, 0);
    testing_support::heap_permutations(n, [&](const std::vector<int>& p) {
      ++d[static_cast<std::size_t>(testing_support::right_count(p, 3, {1, 2}))];
    });
    CHECK(distribution_general(n, cfg) == to_poly(d));
  }
}

TEST_CASE("coefficient sums are n!") {
  BigInt f = 1;
  for (int n = 1; n <= 9; ++n) {
    f *= n;
    CHECK(coefficient_sum(poly_A_bruteforce(4, n)) == f);
    CHECK(coefficient_sum(poly_B_bruteforce(4, n)) == f);
  }
}

TEST_CASE("job count does not change the result") {
  for (int jobs : {2, 3, 5, 8}) {
    CAPTURE(jobs);
    CHECK(poly_A_bruteforce(3, 9, {jobs, 11}) == poly_A_bruteforce(3, 9));
    CHECK(poly_B_bruteforce(2, 9, {jobs, 11}) == poly_B_bruteforce(2, 9));
  }
  CHECK(poly_A_bruteforce(3, 2, {16, 11}) == IntPoly{2});
}

TEST_CASE("guard") {
  CHECK_THROWS_AS(poly_A_bruteforce(3, 12), GuardViolation);
  CHECK_THROWS_AS(poly_B_bruteforce(3, 6, {1, 5}), GuardViolation);
  CHECK(poly_A_bruteforce(3, 6, {1, 6}) == IntPoly{72, 456, 192});
  CHECK_THROWS_AS(poly_A_bruteforce(3, 21, {1, 30}), GuardViolation);
  CHECK_THROWS_AS(poly_A_bruteforce(3, 4, {0, 11}), std::invalid_argument);
  CHECK_THROWS_AS(poly_A_bruteforce(0, 4), std::invalid_argument);
}
