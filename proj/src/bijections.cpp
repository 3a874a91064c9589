#include "kdes/bijections.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <unordered_set>

namespace kdes {

namespace {

// Returns n with p.size() == kn+k-2.
int bij_block(const Permutation& p, int k) {
  if (k < 3) throw std::invalid_argument("bij01/bij02 need k >= 3");
  const int L = p.size();
  if ((L + 2) % k != 0) throw std::invalid_argument("length must be kn+k-2");
  return (L + 2) / k - 1;
}

std::vector<int> complement_values(std::vector<int> v, int top) {
  for (int& x : v) x = top + 1 - x;
  return v;
}

}  // namespace

Permutation complement(const Permutation& p) {
  return Permutation(complement_values({p.begin(), p.end()}, p.size()));
}

Permutation reverse(const Permutation& p) { return Permutation(std::vector<int>(p.values().rbegin(), p.values().rend())); }

Permutation star(const Permutation& p) { return reverse(complement(p)); }

Permutation bij01(const Permutation& p, int k) {
  bij_block(p, k);
  const int dummy = p.size() + 1;
  std::vector<int> v(p.begin(), p.end());
  v.push_back(dummy);
  v = complement_values(std::move(v), dummy);
  std::rotate(v.begin(), std::find(v.begin(), v.end(), dummy), v.end());
  v.erase(v.begin());
  return Permutation(std::move(v));
}

Permutation bij01_inverse(const Permutation& p, int k) {
  bij_block(p, k);
  const int dummy = p.size() + 1;
  std::vector<int> v{dummy};
  v.insert(v.end(), p.begin(), p.end());
  std::rotate(v.begin(), std::find(v.begin(), v.end(), 1) + 1, v.end());
  v = complement_values(std::move(v), dummy);
  v.erase(std::find(v.begin(), v.end(), dummy));
  return Permutation(std::move(v));
}

Bij02Result bij02(const Permutation& p, int k) {
  bij_block(p, k);
  const int dummy = p.size() + 1;
  std::vector<int> v(p.begin(), p.end());
  v.push_back(dummy);
  v = complement_values(std::move(v), dummy);
  std::reverse(v.begin(), v.end());
  std::rotate(v.begin(), std::find(v.begin(), v.end(), dummy), v.end());
  v.erase(v.begin());
  Bij02Result out{Permutation(std::move(v)), false};
  out.leading_in_class = !out.perm.empty() && out.perm[0] % k == 0;
  return out;
}

Permutation bij02_inverse(const Permutation& p, int k) {
  bij_block(p, k);
  const int dummy = p.size() + 1;
  std::vector<int> v{dummy};
  v.insert(v.end(), p.begin(), p.end());
  std::rotate(v.begin(), std::find(v.begin(), v.end(), 1), v.end());
  std::reverse(v.begin(), v.end());
  v = complement_values(std::move(v), dummy);
  v.pop_back();
  return Permutation(std::move(v));
}

namespace {

using Params = std::vector<std::pair<std::string, long>>;

template <class Body>
void for_each_perm(int L, Body body) {
  std::vector<int> v(static_cast<std::size_t>(L));
  for (int i = 0; i < L; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  std::uint64_t rank = 0;
  do {
    body(Permutation(v), rank++);
  } while (std::next_permutation(v.begin(), v.end()));
}

void palindrome(VerificationReport& rep, const char* check, int k, int L, const IntPoly& p, int centre) {
  for (int s = 0; s <= centre; ++s)
    rep.compare(check, {{"k", k}, {"length", L}, {"s", s}}, p.coeff(s), p.coeff(centre - s));
}

void check_bij01_bij02(VerificationReport& rep, int k, int n, int L) {
  const StatConfig left(k, Direction::FirstElement), right(k, Direction::SecondElement);
  std::unordered_set<std::uint64_t> img01, img02;
  for_each_perm(L, [&](const Permutation& p, std::uint64_t rank) {
    Params at{{"k", k}, {"length", L}, {"rank", static_cast<long>(rank)}};
    const int j = des_left(p, left);

    Permutation q = bij01(p, k);
    img01.insert(rank_lex(q));
    rep.compare("bij01-statistic", at, n - j, des_left(q, left));
    rep.compare("bij01-inverse", at, rank, rank_lex(bij01_inverse(q, k)));

    Bij02Result r = bij02(p, k);
    img02.insert(rank_lex(r.perm));
    rep.compare("bij02-statistic", at, r.leading_in_class ? j - 1 : j, des_right(r.perm, right));
    rep.compare("bij02-leading", at, r.leading_in_class ? 1 : 0, L > 0 ? first_in_class(r.perm, right) : 0);
    rep.compare("bij02-inverse", at, rank, rank_lex(bij02_inverse(r.perm, k)));
  });
  const auto total = static_cast<long>(factorial_u64(L));
  rep.compare("bij01-bijective", {{"k", k}, {"length", L}}, total, static_cast<long>(img01.size()));
  rep.compare("bij02-bijective", {{"k", k}, {"length", L}}, total, static_cast<long>(img02.size()));
}

void check_star_complement(VerificationReport& rep, int k, int n, int L) {
  const StatConfig left(k, Direction::FirstElement), right(k, Direction::SecondElement);
  for_each_perm(L, [&](const Permutation& p, std::uint64_t rank) {
    Params at{{"k", k}, {"length", L}, {"rank", static_cast<long>(rank)}};
    rep.compare("star-transport", at, des_left(p, left), des_right(star(p), right));
    if (L == 0) return;
    const int z = first_in_class(p, right);
    const Permutation c = complement(p);
    rep.compare("complement-transport", at, n - z - des_right(p, right), des_right(c, right));
    rep.compare("complement-leading", at, z, first_in_class(c, right));
  });
}

}  // namespace

VerificationReport check_bijections(IntRange lengths, const OracleOptions& opts) {
  const int max_length = lengths.hi;
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.id = "bijections";
  rep.ranges = "n=" + to_string(lengths);
  for (int k = 2; k <= max_length + 2; ++k) {
    for (int n = 0;; ++n) {
      const int L = k * n + k - 1;
      if (L > max_length) break;
      if (L < lengths.lo) continue;
      check_star_complement(rep, k, n, L);
      const BiPoly b = poly_B_bruteforce(k, L, opts);
      palindrome(rep, "complement-palindrome-B0", k, L, b.z0, n);
      if (n >= 1) palindrome(rep, "complement-palindrome-B1", k, L, b.z1, n - 1);
      palindrome(rep, "complement-palindrome-A", k, L, poly_A_bruteforce(k, L, opts), n);
    }
    if (k < 3) continue;
    for (int n = 0;; ++n) {
      const int L = k * n + k - 2;
      if (L > max_length) break;
      if (L < lengths.lo) continue;
      check_bij01_bij02(rep, k, n, L);
      const IntPoly a = poly_A_bruteforce(k, L, opts);
      const BiPoly b = poly_B_bruteforce(k, L, opts);
      palindrome(rep, "bij01-palindrome-A", k, L, a, n);
      for (int s = 0; s <= n; ++s)
        rep.compare("bij02-decomposition", {{"k", k}, {"length", L}, {"s", s}}, a.coeff(s),
                    b.z0.coeff(s) + b.z1.coeff(s - 1));
    }
  }
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return rep;
}

}  // namespace kdes
