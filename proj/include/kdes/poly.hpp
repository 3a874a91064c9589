#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace kdes {

using BigInt = boost::multiprecision::cpp_int;

// Trailing zeros removed.
std::vector<BigInt> normalize(std::vector<BigInt> coeffs);

// Dense univariate polynomial with exact integer coefficients.
// The zero polynomial has no stored coefficients and degree kZeroDegree.
class IntPoly {
 public:
  static constexpr int kZeroDegree = -1;

  IntPoly() = default;
  IntPoly(std::initializer_list<long long> coeffs);
  explicit IntPoly(std::vector<BigInt> coeffs);

  static IntPoly monomial(const BigInt& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::span<const BigInt> coeffs() const { return coeffs_; }

  BigInt coeff(int degree) const;
  void set_coeff(int degree, const BigInt& value);
  void add_to_coeff(int degree, const BigInt& value);

  BigInt evaluate(const BigInt& x) const;
  BigInt coefficient_sum() const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const IntPoly& other);
  IntPoly& operator*=(const BigInt& scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  friend IntPoly operator*(IntPoly a, const BigInt& c) { return a *= c; }
  friend IntPoly operator*(const BigInt& c, IntPoly a) { return a *= c; }
  friend bool operator==(const IntPoly&, const IntPoly&) = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// Polynomial in x and z, linear in z: z0(x) + z * z1(x).
struct BiPoly {
  IntPoly z0;
  IntPoly z1;

  BiPoly() = default;
  BiPoly(IntPoly zero_part, IntPoly one_part = {})
      : z0(std::move(zero_part)), z1(std::move(one_part)) {}

  BigInt coeff(int z_power, int degree) const;
  void add_to_coeff(int z_power, int degree, const BigInt& value);
  IntPoly at_z1() const { return z0 + z1; }
  BigInt evaluate(const BigInt& x, const BigInt& z) const;
  BigInt coefficient_sum() const;
  int degree() const;

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator*=(const BigInt& scalar);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator*(BiPoly a, const BigInt& c) { return a *= c; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;
};

inline BigInt coefficient_sum(const IntPoly& p) { return p.coefficient_sum(); }
inline BigInt coefficient_sum(const BiPoly& p) { return p.coefficient_sum(); }

// "[72, 456, 192]"
std::string to_string(const IntPoly& p);
// "z0=[12, 6] z1=[6]"
std::string to_string(const BiPoly& p);
// "72 + 456x + 192x^2"
std::string to_algebraic(const IntPoly& p);
std::string to_algebraic(const BiPoly& p);

std::ostream& operator<<(std::ostream& os, const IntPoly& p);
std::ostream& operator<<(std::ostream& os, const BiPoly& p);

}  // namespace kdes
