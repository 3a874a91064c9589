#include "kdes/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace kdes {

std::vector<BigInt> normalize(std::vector<BigInt> coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
  return coeffs;
}

IntPoly::IntPoly(std::initializer_list<long long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const BigInt& c, int degree) {
  if (degree < 0) throw std::invalid_argument("monomial: negative degree");
  IntPoly p;
  p.set_coeff(degree, c);
  return p;
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::coeff(int degree) const {
  if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(degree)];
}

void IntPoly::set_coeff(int degree, const BigInt& value) {
  if (degree < 0) throw std::invalid_argument("set_coeff: negative degree");
  auto d = static_cast<std::size_t>(degree);
  if (d >= coeffs_.size()) {
    if (value == 0) return;
    coeffs_.resize(d + 1);
  }
  coeffs_[d] = value;
  trim();
}

void IntPoly::add_to_coeff(int degree, const BigInt& value) {
  if (degree < 0) throw std::invalid_argument("add_to_coeff: negative degree");
  auto d = static_cast<std::size_t>(degree);
  if (d >= coeffs_.size()) coeffs_.resize(d + 1);
  coeffs_[d] += value;
  trim();
}

BigInt IntPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigInt IntPoly::coefficient_sum() const {
  BigInt acc = 0;
  for (const auto& c : coeffs_) acc += c;
  return acc;
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& other) {
  if (is_zero() || other.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
  coeffs_ = std::move(out);
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

BigInt BiPoly::coeff(int z_power, int degree) const {
  if (z_power == 0) return z0.coeff(degree);
  if (z_power == 1) return z1.coeff(degree);
  return 0;
}

void BiPoly::add_to_coeff(int z_power, int degree, const BigInt& value) {
  if (z_power == 0)
    z0.add_to_coeff(degree, value);
  else if (z_power == 1)
    z1.add_to_coeff(degree, value);
  else
    throw std::invalid_argument("BiPoly: z power must be 0 or 1");
}

BigInt BiPoly::evaluate(const BigInt& x, const BigInt& z) const {
  return z0.evaluate(x) + z * z1.evaluate(x);
}

BigInt BiPoly::coefficient_sum() const { return z0.coefficient_sum() + z1.coefficient_sum(); }

int BiPoly::degree() const { return std::max(z0.degree(), z1.degree()); }

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  z0 += other.z0;
  z1 += other.z1;
  return *this;
}

BiPoly& BiPoly::operator*=(const BigInt& scalar) {
  z0 *= scalar;
  z1 *= scalar;
  return *this;
}

std::string to_string(const IntPoly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ", ";
    out += p.coeffs()[i].str();
  }
  return out + "]";
}

std::string to_string(const BiPoly& p) { return "z0=" + to_string(p.z0) + " z1=" + to_string(p.z1); }

namespace {

void append_terms(std::string& out, const IntPoly& p, const std::string& suffix) {
  for (int d = 0; d <= p.degree(); ++d) {
    BigInt c = p.coeff(d);
    if (c == 0) continue;
    if (!out.empty()) out += c < 0 ? " - " : " + ";
    else if (c < 0) out += "-";
    BigInt mag = c < 0 ? BigInt(-c) : c;
    std::string mono;
    if (d == 1) mono = "x";
    else if (d > 1) mono = "x^" + std::to_string(d);
    mono += suffix;
    if (mag != 1 || mono.empty()) out += mag.str();
    out += mono;
  }
}

}  // namespace

std::string to_algebraic(const IntPoly& p) {
  std::string out;
  append_terms(out, p, "");
  return out.empty() ? "0" : out;
}

std::string to_algebraic(const BiPoly& p) {
  std::string out;
  for (int d = 0; d <= p.degree(); ++d) {
    append_terms(out, IntPoly::monomial(p.z0.coeff(d), d), "");
    append_terms(out, IntPoly::monomial(p.z1.coeff(d), d), "z");
  }
  return out.empty() ? "0" : out;
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const BiPoly& p) { return os << to_string(p); }

}  // namespace kdes
