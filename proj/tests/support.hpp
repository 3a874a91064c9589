#pragma once

// Independent reference code for the tests: Heap's algorithm for S_n and
// literal transcriptions of the statistic definitions.

#include "kdes/poly.hpp"

#include <map>
#include <utility>
#include <vector>

namespace testing_support {

template <class F>
void heap_permutations(int n, F f) {
  std::vector<int> a(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) a[static_cast<std::size_t>(i)] = i + 1;
  std::vector<int> c(static_cast<std::size_t>(n), 0);
  f(a);
  int i = 1;
  while (i < n) {
    auto ui = static_cast<std::size_t>(i);
    if (c[ui] < i) {
      std::swap(a[i % 2 == 0 ? 0 : static_cast<std::size_t>(c[ui])], a[ui]);
      f(a);
      ++c[ui];
      i = 1;
    } else {
      c[ui] = 0;
      ++i;
    }
  }
}

inline bool in_class(int v, int k, const std::vector<int>& residues) {
  for (int r : residues)
    if (v % k == r) return true;
  return false;
}

inline int left_count(const std::vector<int>& p, int k, const std::vector<int>& residues = {0}) {
  int c = 0;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i - 1] > p[i] && in_class(p[i - 1], k, residues)) ++c;
  return c;
}

inline int right_count(const std::vector<int>& p, int k, const std::vector<int>& residues = {0}) {
  int c = 0;
  for (std::size_t i = 1; i < p.size(); ++i)
    if (p[i - 1] > p[i] && in_class(p[i], k, residues)) ++c;
  return c;
}

// A via Heap's algorithm.
inline std::vector<long long> heap_A(int k, int n) {
  std::vector<long long> d(static_cast<std::size_t>(n) + 1, 0);
  heap_permutations(n, [&](const std::vector<int>& p) { ++d[static_cast<std::size_t>(left_count(p, k))]; });
  while (d.size() > 1 && d.back() == 0) d.pop_back();
  return d;
}

// B via Heap's algorithm: [z][s].
inline std::vector<std::vector<long long>> heap_B(int k, int n) {
  std::vector<std::vector<long long>> d(2, std::vector<long long>(static_cast<std::size_t>(n) + 1, 0));
  heap_permutations(n, [&](const std::vector<int>& p) {
    int z = (!p.empty() && p[0] % k == 0) ? 1 : 0;
    ++d[static_cast<std::size_t>(z)][static_cast<std::size_t>(right_count(p, k))];
  });
  return d;
}

inline kdes::IntPoly to_poly(const std::vector<long long>& v) {
  std::vector<kdes::BigInt> c(v.begin(), v.end());
  return kdes::IntPoly(std::move(c));
}

// Sparse polynomial in z and x, keyed by (z power, x power), with the
// elementary operations needed to spell out the differential operators.
using Sparse = std::map<std::pair<int, int>, kdes::BigInt>;

inline Sparse add(Sparse a, const Sparse& b) {
  for (const auto& [key, c] : b) a[key] += c;
  return a;
}
inline Sparse times_x(const Sparse& p) {
  Sparse out;
  for (const auto& [key, c] : p) out[{key.first, key.second + 1}] += c;
  return out;
}
inline Sparse times_z(const Sparse& p) {
  Sparse out;
  for (const auto& [key, c] : p) out[{key.first + 1, key.second}] += c;
  return out;
}
inline Sparse scale(const Sparse& p, const kdes::BigInt& s) {
  Sparse out;
  for (const auto& [key, c] : p) out[key] += c * s;
  return out;
}
inline Sparse dx(const Sparse& p) {
  Sparse out;
  for (const auto& [key, c] : p)
    if (key.second > 0) out[{key.first, key.second - 1}] += c * key.second;
  return out;
}
inline Sparse dz(const Sparse& p) {
  Sparse out;
  for (const auto& [key, c] : p)
    if (key.first > 0) out[{key.first - 1, key.second}] += c * key.first;
  return out;
}
// f - g
inline Sparse minus(const Sparse& f, const Sparse& g) { return add(f, scale(g, -1)); }

inline bool same(const Sparse& p, const kdes::BiPoly& b) {
  Sparse q;
  for (int d = 0; d <= b.degree(); ++d) {
    if (b.z0.coeff(d) != 0) q[{0, d}] = b.z0.coeff(d);
    if (b.z1.coeff(d) != 0) q[{1, d}] = b.z1.coeff(d);
  }
  Sparse r;
  for (const auto& [key, c] : p)
    if (c != 0) r[key] = c;
  return r == q;
}

}  // namespace testing_support
