#include "kdes/crosscheck.hpp"

#include "kdes/recursion.hpp"

#include <algorithm>
#include <chrono>

namespace kdes {

MethodSet default_methods(const OracleOptions& opts) {
  MethodSet m;
  m.a_oracle = [opts](int k, int length) { return poly_A_bruteforce(k, length, opts); };
  m.b_oracle = [opts](int k, int length) { return poly_B_bruteforce(k, length, opts); };
  m.a_recursive = poly_A_recursive;
  m.b_recursive = poly_B_recursive;
  m.closed = [](FormulaId id, int k, int n, int j, int degree) { return coefficient(id, k, n, j, degree); };
  return m;
}

VerificationReport verify_methods(IntRange k_range, IntRange lengths, const MethodSet& methods) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.id = "verify";
  rep.ranges = "k=" + to_string(k_range) + " n=" + to_string(lengths);
  for (int k = k_range.lo; k <= k_range.hi; ++k) {
    for (int L = std::max(lengths.lo, 0); L <= lengths.hi; ++L) {
      const int n = L / k, j = L % k;
      const IntPoly a = methods.a_oracle(k, L);
      const BiPoly b = methods.b_oracle(k, L);
      const IntPoly a_rec = methods.a_recursive(k, L);
      const BiPoly b_rec = methods.b_recursive(k, L);
      const IntPoly b_total = b.at_z1();
      const int top = std::max({n, a.degree(), b.degree(), a_rec.degree(), b_rec.degree()});
      for (int s = 0; s <= top; ++s) {
        auto at = [&](long z) {
          std::vector<std::pair<std::string, long>> p{{"k", k}, {"n", n}, {"j", j}, {"s", s}};
          if (z >= 0) p.emplace_back("z", z);
          return p;
        };
        auto closed = [&](FormulaId id) { return methods.closed(id, k, n, j, s); };
        rep.compare("A-recursive", at(-1), a.coeff(s), a_rec.coeff(s));
        rep.compare("A-incl-excl", at(-1), a.coeff(s), closed(FormulaId::AInclExcl));
        rep.compare("A-dual", at(-1), a.coeff(s), closed(FormulaId::ADual));
        rep.compare("B-recursive", at(0), b.z0.coeff(s), b_rec.z0.coeff(s));
        rep.compare("B-recursive", at(1), b.z1.coeff(s), b_rec.z1.coeff(s));
        rep.compare("B-total-dual", at(-1), b_total.coeff(s), closed(FormulaId::BTotalDual));
        rep.compare("B-total-incl-excl", at(-1), b_total.coeff(s), closed(FormulaId::BTotalInclExcl));
        const BigInt b0 = closed(FormulaId::B0Form), b1 = closed(FormulaId::B1Form);
        rep.compare("B0", at(0), b.z0.coeff(s), b0);
        rep.compare("B1", at(1), b.z1.coeff(s), b1);
        rep.compare("B0+B1", at(-1), b_total.coeff(s), b0 + b1);
      }
    }
  }
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return rep;
}

VerificationReport verify_methods(IntRange k, IntRange lengths, const OracleOptions& opts) {
  return verify_methods(k, lengths, default_methods(opts));
}

}  // namespace kdes
