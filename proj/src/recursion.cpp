#include "kdes/recursion.hpp"

#include <stdexcept>

namespace kdes {

namespace {

void require_k(int k) {
  if (k < 2) throw std::invalid_argument("the recursions need k >= 2");
}

}  // namespace

IntPoly apply_delta(const IntPoly& p, int m) {
  IntPoly out;
  for (int s = 0; s <= p.degree(); ++s) {
    const BigInt& c = p.coeffs()[static_cast<std::size_t>(s)];
    if (s > 0) out.add_to_coeff(s - 1, c * s);
    out.add_to_coeff(s, c * (m - s));
  }
  return out;
}

IntPoly apply_gamma(const IntPoly& p, int m) {
  IntPoly out;
  for (int s = 0; s <= p.degree(); ++s) {
    const BigInt& c = p.coeffs()[static_cast<std::size_t>(s)];
    out.add_to_coeff(s, c * (s + 1));
    out.add_to_coeff(s + 1, c * (m - 1 - s));
  }
  return out;
}

BiPoly apply_theta(const BiPoly& p, int k, int n, int j) {
  require_k(k);
  if (j < 0 || j > k - 2) throw std::invalid_argument("theta needs 0 <= j <= k-2");
  const long base = 1L + static_cast<long>(k - 1) * n + j;
  BiPoly out;
  for (int s = 0; s <= p.z0.degree(); ++s) {
    BigInt c = p.z0.coeff(s);
    out.z0.add_to_coeff(s, c * (base + s));
    out.z0.add_to_coeff(s + 1, c * (n - s));
  }
  for (int s = 0; s <= p.z1.degree(); ++s) {
    BigInt c = p.z1.coeff(s);
    out.z1.add_to_coeff(s, c * (base + s));
    out.z1.add_to_coeff(s + 1, c * (n - s - 1));
    out.z0.add_to_coeff(s + 1, c);
  }
  return out;
}

BiPoly apply_psi(const BiPoly& p, int k, int n) {
  require_k(k);
  const long base = static_cast<long>(k - 1) * (n + 1);
  BiPoly out;
  for (int s = 0; s <= p.z0.degree(); ++s) {
    BigInt c = p.z0.coeff(s);
    out.z0.add_to_coeff(s, c * (base + s));
    out.z1.add_to_coeff(s, c);
    out.z0.add_to_coeff(s + 1, c * (n - s));
  }
  for (int s = 0; s <= p.z1.degree(); ++s) {
    BigInt c = p.z1.coeff(s);
    out.z1.add_to_coeff(s, c * (base + 1 + s));
    out.z1.add_to_coeff(s + 1, c * (n - s));
  }
  return out;
}

std::vector<IntPoly> poly_A_chain(int k, int n) {
  require_k(k);
  if (n < 0) throw std::invalid_argument("negative length");
  std::vector<IntPoly> chain{IntPoly{1}};
  if (n >= 1) chain.push_back(IntPoly{1});
  for (int m = 2; m <= n; ++m)
    chain.push_back(m % k != 0 ? apply_delta(chain.back(), m) : apply_gamma(chain.back(), m));
  return chain;
}

std::vector<BiPoly> poly_B_chain(int k, int n) {
  require_k(k);
  if (n < 0) throw std::invalid_argument("negative length");
  std::vector<BiPoly> chain{BiPoly(IntPoly{1})};
  if (n >= 1) chain.push_back(BiPoly(IntPoly{1}));
  for (int m = 1; m < n; ++m) {
    int q = m / k, j = m % k;
    chain.push_back(j <= k - 2 ? apply_theta(chain.back(), k, q, j) : apply_psi(chain.back(), k, q));
  }
  return chain;
}

IntPoly poly_A_recursive(int k, int n) { return poly_A_chain(k, n).back(); }
BiPoly poly_B_recursive(int k, int n) { return poly_B_chain(k, n).back(); }

BigInt coeff_step_A(int k, int m, int s, const IntPoly& previous) {
  require_k(k);
  if (m < 2) throw std::invalid_argument("coeff_step_A needs m >= 2");
  if (m % k != 0) return previous.coeff(s) * (m - s) + previous.coeff(s + 1) * (s + 1);
  return previous.coeff(s) * (1 + s) + previous.coeff(s - 1) * (m - s);
}

BigInt coeff_step_B(int k, int m, int z_power, int s, const BiPoly& previous) {
  require_k(k);
  if (m < 2) throw std::invalid_argument("coeff_step_B needs m >= 2");
  const int n = (m - 1) / k, j = (m - 1) % k;
  const auto& b0 = previous.z0;
  const auto& b1 = previous.z1;
  if (j <= k - 2) {
    const long base = 1L + s + static_cast<long>(k - 1) * n + j;
    if (z_power == 0) return b0.coeff(s) * base + b0.coeff(s - 1) * (n - s + 1) + b1.coeff(s - 1);
    return b1.coeff(s) * base + b1.coeff(s - 1) * (n - s);
  }
  const long base = s + static_cast<long>(k - 1) * (n + 1);
  if (z_power == 0) return b0.coeff(s) * base + b0.coeff(s - 1) * (n - s + 1);
  return b1.coeff(s) * (base + 1) + b1.coeff(s - 1) * (n - s + 1) + b0.coeff(s);
}

BigInt coeff_step_B_total(int k, int m, int s, const IntPoly& previous_total) {
  require_k(k);
  if (m < 2) throw std::invalid_argument("coeff_step_B_total needs m >= 2");
  const int n = (m - 1) / k, j = (m - 1) % k;
  const long base = 1L + s + static_cast<long>(k - 1) * n + j;
  return previous_total.coeff(s) * base + previous_total.coeff(s - 1) * (n - s + 1);
}

}  // namespace kdes
