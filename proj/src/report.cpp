#include "kdes/report.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <tuple>

namespace kdes {

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("bad integer '" + std::string(s) + "'");
  return v;
}

bool canonical_less(const Mismatch& a, const Mismatch& b) {
  return std::tie(a.check, a.params, a.expected, a.actual) < std::tie(b.check, b.params, b.expected, b.actual);
}

}  // namespace

IntRange parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int v = parse_int(text);
    return {v, v};
  }
  return {parse_int(std::string_view(text).substr(0, dots)), parse_int(std::string_view(text).substr(dots + 2))};
}

std::string to_string(const IntRange& r) { return std::to_string(r.lo) + ".." + std::to_string(r.hi); }

std::string describe(const Mismatch& m) {
  std::string out = m.check + " at (";
  for (std::size_t i = 0; i < m.params.size(); ++i) {
    if (i) out += ", ";
    out += m.params[i].first + "=" + std::to_string(m.params[i].second);
  }
  return out + "): expected " + m.expected.str() + ", got " + m.actual.str();
}

bool VerificationReport::compare(const std::string& check, std::vector<std::pair<std::string, long>> params,
                                 const BigInt& expected, const BigInt& actual) {
  ++checked;
  if (expected == actual) return true;
  failures.push_back({check, std::move(params), expected, actual});
  return false;
}

void VerificationReport::merge(const VerificationReport& other) {
  checked += other.checked;
  elapsed += other.elapsed;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  std::sort(failures.begin(), failures.end(), canonical_less);
}

nlohmann::json to_json(const VerificationReport& r, bool include_timing) {
  nlohmann::json j;
  j["id"] = r.id;
  j["ranges"] = r.ranges;
  j["status"] = r.passed() ? "pass" : "fail";
  j["checked"] = r.checked;
  auto fails = nlohmann::json::array();
  for (const auto& m : r.failures) {
    nlohmann::json f;
    f["check"] = m.check;
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [name, value] : m.params) params[name] = value;
    f["params"] = params;
    f["expected"] = m.expected.str();
    f["actual"] = m.actual.str();
    fails.push_back(f);
  }
  j["failures"] = fails;
  if (include_timing) j["elapsed_ms"] = r.elapsed.count();
  return j;
}

std::string render_text(const VerificationReport& r, std::size_t max_failures) {
  std::string out = r.id + " [" + r.ranges + "]: " + (r.passed() ? "PASS" : "FAIL") + ", " +
                    std::to_string(r.checked) + " checks, " + std::to_string(r.failures.size()) + " failures\n";
  for (std::size_t i = 0; i < r.failures.size() && i < max_failures; ++i) out += "  " + describe(r.failures[i]) + "\n";
  if (r.failures.size() > max_failures)
    out += "  ... " + std::to_string(r.failures.size() - max_failures) + " more\n";
  return out;
}

}  // namespace kdes
