#include "kdes/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kdes {

namespace {

void validate(const std::vector<int>& v) {
  std::vector<bool> seen(v.size() + 1, false);
  for (int x : v) {
    if (x < 1 || x > static_cast<int>(v.size()) || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("not a permutation of 1..n");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

}  // namespace

Permutation::Permutation(std::initializer_list<int> values) : values_(values) { validate(values_); }

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) { validate(values_); }

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative length");
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

int Permutation::at(int position) const {
  if (position < 1 || position > size()) throw std::out_of_range("position outside 1..n");
  return values_[static_cast<std::size_t>(position - 1)];
}

std::string to_string(const Permutation& p) {
  std::string out = "[";
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[static_cast<std::size_t>(i)]);
  }
  return out + "]";
}

StatConfig::StatConfig(int k, Direction direction, std::vector<int> residues)
    : k_(k), direction_(direction) {
  if (k < 1) throw std::invalid_argument("modulus k must be at least 1");
  member_.assign(static_cast<std::size_t>(k), false);
  for (int r : residues) {
    if (r < 0 || r >= k) throw std::invalid_argument("residue outside 0..k-1");
    member_[static_cast<std::size_t>(r)] = true;
  }
}

StatConfig StatConfig::all_residues(int k, Direction direction) {
  if (k < 1) throw std::invalid_argument("modulus k must be at least 1");
  std::vector<int> all(static_cast<std::size_t>(k));
  std::iota(all.begin(), all.end(), 0);
  return StatConfig(k, direction, std::move(all));
}

std::vector<int> StatConfig::residues() const {
  std::vector<int> out;
  for (int r = 0; r < k_; ++r)
    if (member_[static_cast<std::size_t>(r)]) out.push_back(r);
  return out;
}

int des(const Permutation& p) {
  int count = 0;
  for (int i = 0; i + 1 < p.size(); ++i)
    if (p[static_cast<std::size_t>(i)] > p[static_cast<std::size_t>(i) + 1]) ++count;
  return count;
}

int des_left(const Permutation& p, const StatConfig& cfg) {
  if (cfg.direction() != Direction::FirstElement)
    throw std::invalid_argument("des_left needs a FirstElement config");
  int count = 0;
  for (std::size_t i = 0; i + 1 < p.values().size(); ++i)
    if (p[i] > p[i + 1] && cfg.contains(p[i])) ++count;
  return count;
}

int des_right(const Permutation& p, const StatConfig& cfg) {
  if (cfg.direction() != Direction::SecondElement)
    throw std::invalid_argument("des_right needs a SecondElement config");
  int count = 0;
  for (std::size_t i = 0; i + 1 < p.values().size(); ++i)
    if (p[i] > p[i + 1] && cfg.contains(p[i + 1])) ++count;
  return count;
}

int refined_des(const Permutation& p, const StatConfig& cfg) {
  return cfg.direction() == Direction::FirstElement ? des_left(p, cfg) : des_right(p, cfg);
}

int first_in_class(const Permutation& p, const StatConfig& cfg) {
  if (p.empty()) throw std::invalid_argument("first_in_class of the empty permutation");
  return cfg.contains(p[0]) ? 1 : 0;
}

Permutation insert_max(const Permutation& p, int pos) {
  if (pos < 0 || pos > p.size()) throw std::out_of_range("insert position outside 0..n");
  std::vector<int> v(p.begin(), p.end());
  v.insert(v.begin() + pos, p.size() + 1);
  return Permutation(std::move(v));
}

std::uint64_t factorial_u64(int n) {
  if (n < 0 || n > 20) throw std::out_of_range("factorial_u64 needs 0 <= n <= 20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

void unrank_lex_into(int n, std::uint64_t index, std::span<int> out) {
  if (index >= factorial_u64(n)) throw std::out_of_range("rank exceeds n!");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 1);
  for (int i = 0; i < n; ++i) {
    std::uint64_t block = factorial_u64(n - 1 - i);
    auto pick = static_cast<std::size_t>(index / block);
    index %= block;
    out[static_cast<std::size_t>(i)] = pool[pick];
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
}

Permutation unrank_lex(int n, std::uint64_t index) {
  std::vector<int> v(static_cast<std::size_t>(n));
  unrank_lex_into(n, index, v);
  return Permutation(std::move(v));
}

}  // namespace kdes

namespace kdes {

std::uint64_t rank_lex(const Permutation& p) {
  const int n = p.size();
  std::uint64_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_after = 0;
    for (int j = i + 1; j < n; ++j)
      if (p[static_cast<std::size_t>(j)] < p[static_cast<std::size_t>(i)]) ++smaller_after;
    rank += static_cast<std::uint64_t>(smaller_after) * factorial_u64(n - 1 - i);
  }
  return rank;
}

}  // namespace kdes
