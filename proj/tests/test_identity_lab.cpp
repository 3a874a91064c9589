#include "kdes/identities.hpp"
#include "kdes/oracle.hpp"

#include <doctest.h>

using namespace kdes;

namespace {

// One perturbed binomial, for checking that the suite can fail.
BigInt broken_binom(long a, long b) {
  BigInt v = binom(a, b);
  if (a == 7 && b == 3) v += 1;
  return v;
}

bool has_check(const VerificationReport& r, const std::string& name) {
  for (const auto& m : r.failures)
    if (m.check == name) return true;
  return false;
}

}  // namespace

TEST_CASE("Saalschutz A side") {
  auto c = saalschutz_a_squared(2, 1);
  CHECK(c.lhs == 4);
  CHECK(c.rhs == 4);
  CHECK(saalschutz_a_squared(0, 0).holds());
  CHECK(saalschutz_a_squared(5, 3).holds());
  CHECK(saalschutz_a_adjacent(5, 3).holds());
  CHECK(saalschutz_a_adjacent(0, 0).holds());
}

TEST_CASE("Saalschutz B side") {
  auto c = saalschutz_b_weighted(2, 1);
  CHECK(c.holds());
  CHECK(c.rhs / 2 == 6);
  auto d = saalschutz_b_weighted(1, 0);
  CHECK(d.holds());
  CHECK(d.rhs == 2);
  CHECK(saalschutz_b_weighted(0, 0).holds());
  CHECK(saalschutz_b_adjacent(0, 0).holds());
  CHECK(saalschutz_b_adjacent(1, 0).lhs == 2);
  CHECK(saalschutz_b_adjacent(1, 0).holds());
}

TEST_CASE("cross identities") {
  auto s0 = cross_a(3, 2, 0, 0);
  CHECK(s0.lhs == 8);
  CHECK(s0.holds());
  CHECK(cross_a(2, 3, 1, 2).holds());
  CHECK(cross_a(4, 1, 0, 1).holds());
  auto b = cross_b(3, 2, 0, 1);
  CHECK(b.lhs == 15);
  CHECK(b.rhs == 15);
  CHECK(cross_b(2, 1, 0, 0).holds());
  CHECK(cross_b(5, 0, 3, 0).holds());
}

TEST_CASE("specializations") {
  CHECK(s0_specialization(3, 2, 0).lhs == 8);
  CHECK(s0_specialization(3, 2, 0).holds());
  CHECK(s1_specialization(2, 2, 0).holds());
  CHECK(s1_specialization(3, 1, 1).holds());
  CHECK(s1_specialization(3, 3, 2).holds());
  auto printed = s1_specialization_as_printed(2, 2, 0);
  CHECK(printed.lhs == 8);
  CHECK(printed.rhs == 6);
  CHECK_THROWS_AS(s1_specialization(3, 0, 0), std::invalid_argument);
}

TEST_CASE("problem 1 displays") {
  auto even = problem1(1, Problem1Display::Even);
  CHECK(even.lhs == 1);
  CHECK(even.holds());
  auto odd = problem1(1, Problem1Display::Odd);
  CHECK(odd.lhs == 4);
  CHECK(odd.holds());
  CHECK(odd.lhs == poly_B_bruteforce(2, 3).at_z1().coeff(0));
  auto beven = problem1(2, Problem1Display::BEven);
  CHECK(beven.holds());
  CHECK(beven.lhs == poly_B_bruteforce(2, 4).at_z1().coeff(0));
  CHECK(problem1(0, Problem1Display::BEven).holds());
}

TEST_CASE("identity names") {
  for (auto id : all_identities()) CHECK(parse_identity(to_string(id)) == id);
  CHECK_FALSE(parse_identity("nope").has_value());
}

TEST_CASE("full suite passes with default ranges") {
  auto r = run_suite(SuiteRanges{});
  CHECK(r.passed());
  CHECK(r.checked > 50000);
}

TEST_CASE("empty ranges pass vacuously") {
  auto r = run_suite(SuiteRanges{{2, 6}, {5, 4}});
  CHECK(r.passed());
  CHECK(r.checked == 0);
  CHECK(run_identity(IdentityId::CrossA, {{3, 2}, {0, 10}}).checked == 0);
}

TEST_CASE("a perturbed binomial is caught and located") {
  auto r = run_suite(SuiteRanges{{2, 4}, {0, 12}}, 1, broken_binom);
  REQUIRE_FALSE(r.passed());
  CHECK(has_check(r, "saalschutz-a-squared"));
  auto sa = run_identity(IdentityId::SaalschutzA, {{2, 2}, {0, 12}}, broken_binom);
  REQUIRE_FALSE(sa.passed());
  const auto& first = sa.failures.front();
  CHECK(first.params.size() == 2);
  CHECK(first.expected != first.actual);
}

TEST_CASE("parallel suite matches sequential") {
  SuiteRanges ranges{{2, 4}, {0, 15}};
  auto a = run_suite(ranges, 1, broken_binom);
  auto b = run_suite(ranges, 4, broken_binom);
  CHECK(a.checked == b.checked);
  CHECK(a.failures == b.failures);
}

TEST_CASE("merge order does not matter") {
  auto x = run_identity(IdentityId::SaalschutzA, {{2, 2}, {0, 10}}, broken_binom);
  auto y = run_identity(IdentityId::CrossA, {{2, 3}, {0, 6}}, broken_binom);
  VerificationReport p, q;
  p.merge(x);
  p.merge(y);
  q.merge(y);
  q.merge(x);
  CHECK(p.failures == q.failures);
  CHECK(p.checked == q.checked);
}
