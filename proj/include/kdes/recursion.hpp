#pragma once

#include "kdes/poly.hpp"

#include <vector>

namespace kdes {

// Delta_m: x^s -> s x^(s-1) + (m-s) x^s
IntPoly apply_delta(const IntPoly& p, int m);
// Gamma_m: x^s -> (s+1) x^s + (m-1-s) x^(s+1)
IntPoly apply_gamma(const IntPoly& p, int m);
// Theta for the step kn+j -> kn+j+1, 0 <= j <= k-2.
BiPoly apply_theta(const BiPoly& p, int k, int n, int j);
// Psi for the step kn+k-1 -> kn+k.
BiPoly apply_psi(const BiPoly& p, int k, int n);

// A for lengths 0..n (index = length). Needs k >= 2.
std::vector<IntPoly> poly_A_chain(int k, int n);
std::vector<BiPoly> poly_B_chain(int k, int n);
IntPoly poly_A_recursive(int k, int n);
BiPoly poly_B_recursive(int k, int n);

// Single-coefficient recursions. `previous` is the polynomial at length m-1,
// the result is the degree-s coefficient at length m.
BigInt coeff_step_A(int k, int m, int s, const IntPoly& previous);
BigInt coeff_step_B(int k, int m, int z_power, int s, const BiPoly& previous);
BigInt coeff_step_B_total(int k, int m, int s, const IntPoly& previous_total);

}  // namespace kdes
