#include "kdes/identities.hpp"

#include "kdes/recursion.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <stdexcept>

namespace kdes {

namespace {

BigInt sign(long e) { return (e % 2 == 0) ? BigInt(1) : BigInt(-1); }

BigInt power(long base, int e) { return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e)); }

// sum_{r=0}^{s} (-1)^{s-r} C(m+r, r) C(top, s-r) prod_{i=lo}^{hi} (r + off + (k-1) i)
BigInt k_sum(BinomialFn C, int k, long m, long top, int s, long off, long lo, long hi) {
  BigInt acc = 0;
  for (int r = 0; r <= s; ++r) acc += sign(s - r) * C(m + r, r) * C(top, s - r) * affine_product(r + off, k - 1, lo, hi);
  return acc;
}

}  // namespace

IdentityCheck saalschutz_a_squared(int n, int s, BinomialFn C) {
  BigInt rhs = 0;
  for (int r = 0; r <= s; ++r) {
    BigInt c = C(n + r, r);
    rhs += sign(s - r) * c * c * C(2 * n + 1, s - r);
  }
  BigInt c = C(n, s);
  return {c * c, rhs};
}

IdentityCheck saalschutz_a_adjacent(int n, int s, BinomialFn C) {
  BigInt rhs = 0;
  for (int r = 0; r <= s; ++r) rhs += sign(s - r) * C(n + r + 1, r) * C(n + r + 1, r + 1) * C(2 * n + 2, s - r);
  return {C(n, s) * C(n + 1, s + 1), rhs};
}

IdentityCheck saalschutz_b_weighted(int n, int s, BinomialFn C) {
  BigInt rhs = 0;
  for (int r = 0; r <= n - s; ++r) rhs += sign(n - s - r) * C(n + r, r) * C(n + r + 1, r) * C(2 * n + 2, n - s - r);
  BigInt c = C(n, s);
  return {BigInt(n + 1) * c * c, BigInt(s + 1) * rhs};
}

IdentityCheck saalschutz_b_adjacent(int n, int s, BinomialFn C) {
  BigInt rhs = 0;
  for (int r = 0; r <= n - s; ++r) rhs += sign(n - s - r) * C(n + r, r) * C(n + r - 1, r - 1) * C(2 * n + 1, n - s - r);
  return {C(n - 1, s) * C(n + 1, s + 1), rhs};
}

IdentityCheck cross_a(int k, int n, int j, int s, BinomialFn C) {
  const long m = static_cast<long>(k - 1) * n + j, top = static_cast<long>(k) * n + j + 1;
  return {k_sum(C, k, m, top, s, 0, 1, n), k_sum(C, k, m, top, n - s, 1 + j, 0, n - 1)};
}

IdentityCheck cross_b(int k, int n, int j, int s, BinomialFn C) {
  const long m = static_cast<long>(k - 1) * n + j, top = static_cast<long>(k) * n + j + 1;
  return {k_sum(C, k, m, top, s, 1, 1, n), k_sum(C, k, m, top, n - s, j, 0, n - 1)};
}

IdentityCheck s0_specialization(int k, int n, int j, BinomialFn C) {
  const long m = static_cast<long>(k - 1) * n + j, top = static_cast<long>(k) * n + j + 1;
  BigInt nf = 1;
  for (int i = 2; i <= n; ++i) nf *= i;
  return {power(k - 1, n) * nf, k_sum(C, k, m, top, n, 1 + j, 0, n - 1)};
}

namespace {

IdentityCheck s1_with_offset(int k, int n, int j, long offset, BinomialFn C) {
  if (n < 1) throw std::invalid_argument("the s=1 specialization needs n >= 1");
  const long m = static_cast<long>(k - 1) * n + j, top = static_cast<long>(k) * n + j + 1;
  BigInt nf = 1;
  for (int i = 2; i <= n; ++i) nf *= i;
  BigInt lhs = BigInt(m + 1) * affine_product(1, k - 1, 0, n) - BigInt(top) * power(k - 1, n) * nf;
  return {lhs, k_sum(C, k, m, top, n - 1, offset, 0, n - 1)};
}

}  // namespace

IdentityCheck s1_specialization(int k, int n, int j, BinomialFn C) { return s1_with_offset(k, n, j, 1 + j, C); }

IdentityCheck s1_specialization_as_printed(int k, int n, int j, BinomialFn C) {
  return s1_with_offset(k, n, j, n, C);
}

IdentityCheck problem1(int n, Problem1Display which, BinomialFn C) {
  if (n < 0) throw std::invalid_argument("negative n");
  BigInt nf = 1;
  for (int i = 2; i <= n; ++i) nf *= i;
  BigInt sum = 0;
  switch (which) {
    case Problem1Display::Even: {
      for (int r = 0; r <= n; ++r) {
        BigInt c = C(n + r, n);
        sum += sign(n - r) * C(2 * n + 1, n - r) * c * c;
      }
      return {nf * nf * sum, poly_A_recursive(2, 2 * n).coeff(0)};
    }
    case Problem1Display::Odd: {
      for (int r = 0; r <= n; ++r) sum += sign(n - r) * C(2 * n + 2, n - r) * C(n + r, n) * C(n + r + 1, r);
      return {nf * (n + 1) * nf * sum, poly_A_recursive(2, 2 * n + 1).coeff(0)};
    }
    case Problem1Display::BEven: {
      for (int r = 0; r <= n; ++r) sum += sign(n - r) * C(2 * n + 1, n - r) * C(n + r, n) * C(n + r - 1, n);
      return {nf * nf * sum, poly_B_recursive(2, 2 * n).at_z1().coeff(0)};
    }
  }
  throw std::invalid_argument("unknown display");
}

std::string_view to_string(IdentityId id) {
  switch (id) {
    case IdentityId::SaalschutzA: return "saalschutz-a";
    case IdentityId::SaalschutzB: return "saalschutz-b";
    case IdentityId::CrossA: return "cross-a";
    case IdentityId::CrossB: return "cross-b";
    case IdentityId::S0: return "s0";
    case IdentityId::S1: return "s1";
    case IdentityId::Problem1: return "problem1";
    case IdentityId::K2: return "k2";
    case IdentityId::Omega: return "omega";
  }
  return "?";
}

const std::vector<IdentityId>& all_identities() {
  static const std::vector<IdentityId> ids{IdentityId::SaalschutzA, IdentityId::SaalschutzB, IdentityId::CrossA,
                                           IdentityId::CrossB,      IdentityId::S0,          IdentityId::S1,
                                           IdentityId::Problem1,    IdentityId::K2,          IdentityId::Omega};
  return ids;
}

std::optional<IdentityId> parse_identity(std::string_view name) {
  for (auto id : all_identities())
    if (to_string(id) == name) return id;
  return std::nullopt;
}

namespace {

using Params = std::vector<std::pair<std::string, long>>;

void record(VerificationReport& rep, const char* check, Params params, const IdentityCheck& c) {
  rep.compare(check, std::move(params), c.lhs, c.rhs);
}

void run_k2(VerificationReport& rep, int n_lo, int n_hi) {
  if (n_hi < n_lo) return;
  const auto a = poly_A_chain(2, 2 * n_hi + 1);
  const auto b = poly_B_chain(2, 2 * n_hi + 1);
  for (int n = n_lo; n <= n_hi; ++n) {
    const BigInt nf = factorial(n), nf1 = factorial(n + 1);
    for (int s = 0; s <= n; ++s) {
      const BigInt c2 = binom(n, s) * binom(n, s);
      Params p{{"n", n}, {"s", s}};
      rep.compare("k2-A-even", p, c2 * nf * nf, a[2 * n].coeff(s));
      rep.compare("k2-A-odd", p, c2 * nf1 * nf1 / (s + 1), a[2 * n + 1].coeff(s));
      rep.compare("k2-B-odd", p, c2 * nf1 * nf1 / (s + 1), b[2 * n + 1].at_z1().coeff(s));
      if (n >= 1) {
        rep.compare("k2-B-even", p, nf * nf * binom(n - 1, s) * binom(n + 1, s + 1), b[2 * n].at_z1().coeff(s));
        rep.compare("k2-B-even-z0", p, nf * nf * binom(n - 1, s) * binom(n, s), b[2 * n].z0.coeff(s));
        rep.compare("k2-B-even-z1", p, nf * nf * binom(n - 1, s) * binom(n, s + 1), b[2 * n].z1.coeff(s));
      }
    }
  }
}

}  // namespace

VerificationReport run_identity(IdentityId id, const SuiteRanges& ranges, BinomialFn C) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.id = std::string(to_string(id));
  const int n_lo = std::max(ranges.n.lo, 0), n_hi = ranges.n.hi;
  const int k_lo = std::max(ranges.k.lo, 2), k_hi = ranges.k.hi;
  rep.ranges = "n=" + to_string(ranges.n);
  auto for_kjn = [&](int n_min, auto&& body) {
    rep.ranges = "k=" + to_string(ranges.k) + " n=" + to_string(ranges.n);
    for (int k = k_lo; k <= k_hi; ++k)
      for (int j = 0; j < k; ++j)
        for (int n = std::max(n_lo, n_min); n <= n_hi; ++n) body(k, j, n);
  };

  switch (id) {
    case IdentityId::SaalschutzA:
      for (int n = n_lo; n <= n_hi; ++n)
        for (int s = 0; s <= n; ++s) {
          record(rep, "saalschutz-a-squared", {{"n", n}, {"s", s}}, saalschutz_a_squared(n, s, C));
          record(rep, "saalschutz-a-adjacent", {{"n", n}, {"s", s}}, saalschutz_a_adjacent(n, s, C));
        }
      break;
    case IdentityId::SaalschutzB:
      for (int n = n_lo; n <= n_hi; ++n)
        for (int s = 0; s <= n; ++s) {
          record(rep, "saalschutz-b-weighted", {{"n", n}, {"s", s}}, saalschutz_b_weighted(n, s, C));
          record(rep, "saalschutz-b-adjacent", {{"n", n}, {"s", s}}, saalschutz_b_adjacent(n, s, C));
        }
      break;
    case IdentityId::CrossA:
      for_kjn(0, [&](int k, int j, int n) {
        for (int s = 0; s <= n; ++s)
          record(rep, "cross-a", {{"k", k}, {"n", n}, {"j", j}, {"s", s}}, cross_a(k, n, j, s, C));
      });
      break;
    case IdentityId::CrossB:
      for_kjn(0, [&](int k, int j, int n) {
        for (int s = 0; s <= n; ++s)
          record(rep, "cross-b", {{"k", k}, {"n", n}, {"j", j}, {"s", s}}, cross_b(k, n, j, s, C));
      });
      break;
    case IdentityId::S0:
      for_kjn(0, [&](int k, int j, int n) {
        record(rep, "s0", {{"k", k}, {"n", n}, {"j", j}}, s0_specialization(k, n, j, C));
      });
      break;
    case IdentityId::S1:
      for_kjn(1, [&](int k, int j, int n) {
        record(rep, "s1", {{"k", k}, {"n", n}, {"j", j}}, s1_specialization(k, n, j, C));
      });
      break;
    case IdentityId::Problem1:
      for (int n = n_lo; n <= n_hi; ++n) {
        record(rep, "problem1-even", {{"n", n}}, problem1(n, Problem1Display::Even, C));
        auto odd = problem1(n, Problem1Display::Odd, C);
        record(rep, "problem1-odd", {{"n", n}}, odd);
        rep.compare("problem1-odd-B", {{"n", n}}, odd.lhs, poly_B_recursive(2, 2 * n + 1).at_z1().coeff(0));
        record(rep, "problem1-B-even", {{"n", n}}, problem1(n, Problem1Display::BEven, C));
      }
      break;
    case IdentityId::K2:
      run_k2(rep, n_lo, n_hi);
      break;
    case IdentityId::Omega:
      rep.ranges = "k=" + to_string(ranges.k) + " n=" + to_string(ranges.n) + " r=0.." + std::to_string(n_hi);
      for (int k = k_lo; k <= k_hi; ++k)
        for (int n = std::max(n_lo, 1); n <= n_hi; ++n) {
          for (int r = 0; r <= n_hi; ++r)
            rep.compare("omega-sum-product", {{"k", k}, {"n", n}, {"r", r}}, omega_sum(k, n, r), omega_product(k, n, r));
          if (n == 1)
            for (int r = 0; r <= n_hi; ++r) rep.compare("omega-n1", {{"k", k}, {"r", r}}, 1, omega_product(k, 1, r));
        }
      break;
  }
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return rep;
}

VerificationReport run_suite(const SuiteRanges& ranges, int jobs, BinomialFn C) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport total;
  total.id = "suite";
  total.ranges = "k=" + to_string(ranges.k) + " n=" + to_string(ranges.n);
  const auto& ids = all_identities();
  if (jobs <= 1) {
    for (auto id : ids) total.merge(run_identity(id, ranges, C));
  } else {
    std::vector<std::future<VerificationReport>> parts;
    for (auto id : ids) parts.push_back(std::async(std::launch::async, [=] { return run_identity(id, ranges, C); }));
    for (auto& p : parts) total.merge(p.get());
  }
  total.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return total;
}

}  // namespace kdes
