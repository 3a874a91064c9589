#pragma once

#include "kdes/closed_forms.hpp"
#include "kdes/report.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace kdes {

using BinomialFn = BigInt (*)(long, long);

struct IdentityCheck {
  BigInt lhs;
  BigInt rhs;
  bool holds() const { return lhs == rhs; }
};

// C(n,s)^2 against the alternating sum with C(n+r,r)^2.
IdentityCheck saalschutz_a_squared(int n, int s, BinomialFn C = binom);
// C(n,s) C(n+1,s+1) against the alternating sum with C(n+r+1,r) C(n+r+1,r+1).
IdentityCheck saalschutz_a_adjacent(int n, int s, BinomialFn C = binom);
// (n+1)/(s+1) C(n,s)^2, compared after multiplying both sides by s+1.
IdentityCheck saalschutz_b_weighted(int n, int s, BinomialFn C = binom);
// C(n-1,s) C(n+1,s+1).
IdentityCheck saalschutz_b_adjacent(int n, int s, BinomialFn C = binom);

// The dual A sum at s against the inclusion-exclusion A sum at n-s (no factorial prefactor).
IdentityCheck cross_a(int k, int n, int j, int s, BinomialFn C = binom);
// The inclusion-exclusion B sum at s against the dual B sum at n-s.
IdentityCheck cross_b(int k, int n, int j, int s, BinomialFn C = binom);
// (k-1)^n n! as an alternating sum.
IdentityCheck s0_specialization(int k, int n, int j, BinomialFn C = binom);
// Needs n >= 1.
IdentityCheck s1_specialization(int k, int n, int j, BinomialFn C = binom);
// The s=1 right-hand side exactly as printed in the source, with r+n in the product.
IdentityCheck s1_specialization_as_printed(int k, int n, int j, BinomialFn C = binom);

enum class Problem1Display { Even, Odd, BEven };
// lhs: the alternating-sum display, rhs: the constant term from the recursions (k = 2).
IdentityCheck problem1(int n, Problem1Display which, BinomialFn C = binom);

enum class IdentityId { SaalschutzA, SaalschutzB, CrossA, CrossB, S0, S1, Problem1, K2, Omega };

std::string_view to_string(IdentityId id);
std::optional<IdentityId> parse_identity(std::string_view name);
const std::vector<IdentityId>& all_identities();

struct SuiteRanges {
  IntRange k{2, 6};
  IntRange n{0, 40};
};

VerificationReport run_identity(IdentityId id, const SuiteRanges& ranges, BinomialFn C = binom);
VerificationReport run_suite(const SuiteRanges& ranges, int jobs = 1, BinomialFn C = binom);

}  // namespace kdes
