#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace kdes {

// A permutation of {1..n} in one-line notation. n = 0 is allowed.
class Permutation {
 public:
  Permutation() = default;
  Permutation(std::initializer_list<int> values);
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  bool empty() const { return values_.empty(); }
  std::span<const int> values() const { return values_; }

  // 1-based position.
  int at(int position) const;
  int operator[](std::size_t index) const { return values_[index]; }

  auto begin() const { return values_.begin(); }
  auto end() const { return values_.end(); }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

std::string to_string(const Permutation& p);

enum class Direction { FirstElement, SecondElement };

// Which element of a descent pair is tested, modulo k, against the residue set.
class StatConfig {
 public:
  explicit StatConfig(int k, Direction direction = Direction::FirstElement,
                      std::vector<int> residues = {0});

  static StatConfig all_residues(int k, Direction direction);

  int modulus() const { return k_; }
  Direction direction() const { return direction_; }
  std::vector<int> residues() const;
  bool contains(int value) const { return member_[static_cast<std::size_t>(value % k_)]; }

 private:
  int k_;
  Direction direction_;
  std::vector<bool> member_;
};

int des(const Permutation& p);
int des_left(const Permutation& p, const StatConfig& cfg);
int des_right(const Permutation& p, const StatConfig& cfg);
// Dispatches on cfg.direction().
int refined_des(const Permutation& p, const StatConfig& cfg);
int first_in_class(const Permutation& p, const StatConfig& cfg);

// Inserts n+1; pos 0 is the front, pos i places it after the i-th entry.
Permutation insert_max(const Permutation& p, int pos);

std::uint64_t factorial_u64(int n);
// The index-th permutation of {1..n} in lexicographic order (0-based).
Permutation unrank_lex(int n, std::uint64_t index);
void unrank_lex_into(int n, std::uint64_t index, std::span<int> out);

}  // namespace kdes

namespace kdes {

// Inverse of unrank_lex.
std::uint64_t rank_lex(const Permutation& p);

}  // namespace kdes
