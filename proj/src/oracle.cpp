#include "kdes/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <thread>
#include <vector>

namespace kdes {

namespace {

void check_args(int n, const OracleOptions& opts) {
  if (n < 0) throw std::invalid_argument("negative length");
  if (opts.jobs < 1) throw std::invalid_argument("jobs must be at least 1");
  if (n > opts.guard)
    throw GuardViolation("n = " + std::to_string(n) + " exceeds the enumeration guard " +
                         std::to_string(opts.guard));
  if (n > 20) throw GuardViolation("n > 20 cannot be ranked in 64 bits");
}

// bucket(perm) must return a value in [0, buckets).
template <class Bucket>
std::vector<std::uint64_t> count_buckets(int n, int buckets, const OracleOptions& opts, Bucket bucket) {
  const std::uint64_t total = factorial_u64(n);
  const auto jobs = static_cast<std::uint64_t>(std::min<std::uint64_t>(opts.jobs, total));
  std::vector<std::vector<std::uint64_t>> partial(jobs, std::vector<std::uint64_t>(static_cast<std::size_t>(buckets), 0));

  auto work = [&](std::uint64_t w) {
    std::uint64_t begin = total * w / jobs;
    std::uint64_t end = total * (w + 1) / jobs;
    std::vector<int> perm(static_cast<std::size_t>(n));
    if (n > 0) unrank_lex_into(n, begin, perm);
    auto& counts = partial[w];
    for (std::uint64_t r = begin; r < end; ++r) {
      ++counts[static_cast<std::size_t>(bucket(perm))];
      std::next_permutation(perm.begin(), perm.end());
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  std::vector<std::uint64_t> merged(static_cast<std::size_t>(buckets), 0);
  for (const auto& counts : partial)
    for (std::size_t b = 0; b < merged.size(); ++b) merged[b] += counts[b];
  return merged;
}

std::vector<char> class_table(int n, const StatConfig& cfg) {
  std::vector<char> t(static_cast<std::size_t>(n) + 1, 0);
  for (int v = 1; v <= n; ++v) t[static_cast<std::size_t>(v)] = cfg.contains(v) ? 1 : 0;
  return t;
}

IntPoly to_poly(const std::vector<std::uint64_t>& counts, std::size_t offset, std::size_t stride) {
  std::vector<BigInt> c;
  for (std::size_t i = offset; i < counts.size(); i += stride) c.emplace_back(counts[i]);
  return IntPoly(std::move(c));
}

}  // namespace

IntPoly distribution_general(int n, const StatConfig& cfg, const OracleOptions& opts) {
  check_args(n, opts);
  const auto in = class_table(n, cfg);
  const bool left = cfg.direction() == Direction::FirstElement;
  auto counts = count_buckets(n, std::max(n, 1), opts, [&](const std::vector<int>& p) {
    int s = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] > p[i + 1] && in[static_cast<std::size_t>(left ? p[i] : p[i + 1])]) ++s;
    return s;
  });
  return to_poly(counts, 0, 1);
}

IntPoly poly_A_bruteforce(int k, int n, const OracleOptions& opts) {
  return distribution_general(n, StatConfig(k, Direction::FirstElement), opts);
}

BiPoly poly_B_bruteforce(int k, int n, const OracleOptions& opts) {
  check_args(n, opts);
  if (n == 0) return BiPoly(IntPoly{1});
  const auto in = class_table(n, StatConfig(k, Direction::SecondElement));
  auto counts = count_buckets(n, 2 * n, opts, [&](const std::vector<int>& p) {
    int s = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] > p[i + 1] && in[static_cast<std::size_t>(p[i + 1])]) ++s;
    return 2 * s + in[static_cast<std::size_t>(p[0])];
  });
  return BiPoly(to_poly(counts, 0, 2), to_poly(counts, 1, 2));
}

}  // namespace kdes
