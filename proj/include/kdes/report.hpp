#pragma once

#include "kdes/poly.hpp"

#include <chrono>
#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace kdes {

struct IntRange {
  int lo = 0;
  int hi = -1;
  bool empty() const { return hi < lo; }
  friend bool operator==(const IntRange&, const IntRange&) = default;
};

// "a..b" or "a"
IntRange parse_range(const std::string& text);
std::string to_string(const IntRange& r);

struct Mismatch {
  std::string check;
  std::vector<std::pair<std::string, long>> params;
  BigInt expected;
  BigInt actual;
  friend bool operator==(const Mismatch&, const Mismatch&) = default;
};

std::string describe(const Mismatch& m);

struct VerificationReport {
  std::string id;
  std::string ranges;
  std::size_t checked = 0;
  std::vector<Mismatch> failures;
  std::chrono::milliseconds elapsed{0};

  bool passed() const { return failures.empty(); }
  // Counts one comparison and records it if the two values differ.
  bool compare(const std::string& check, std::vector<std::pair<std::string, long>> params,
               const BigInt& expected, const BigInt& actual);
  // Failures end up in canonical order, so merge order does not matter.
  void merge(const VerificationReport& other);
};

nlohmann::json to_json(const VerificationReport& r, bool include_timing = false);
std::string render_text(const VerificationReport& r, std::size_t max_failures = 20);

}  // namespace kdes
