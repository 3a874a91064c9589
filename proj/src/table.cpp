#include "kdes/table.hpp"

#include "kdes/closed_forms.hpp"
#include "kdes/recursion.hpp"

#include <json.hpp>
#include <stdexcept>

namespace kdes {

Family parse_family(std::string_view s) {
  if (s == "A") return Family::A;
  if (s == "B") return Family::B;
  throw std::invalid_argument("family must be A or B");
}

Method parse_method(std::string_view s) {
  if (s == "oracle") return Method::Oracle;
  if (s == "recursive") return Method::Recursive;
  if (s == "closed") return Method::Closed;
  throw std::invalid_argument("method must be oracle, recursive or closed");
}

Format parse_format(std::string_view s) {
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  if (s == "json") return Format::Json;
  throw std::invalid_argument("format must be text, csv or json");
}

std::string_view to_string(Family f) { return f == Family::A ? "A" : "B"; }

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Oracle: return "oracle";
    case Method::Recursive: return "recursive";
    case Method::Closed: return "closed";
  }
  return "?";
}

Table build_table(Family family, int k, IntRange lengths, Method method, const OracleOptions& opts) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (k < 2 && method != Method::Oracle) throw std::invalid_argument("k = 1 is only available with --method oracle");
  if (lengths.lo < 0) throw std::invalid_argument("lengths must be nonnegative");
  Table t{family, k, method, {}};
  if (lengths.empty()) return t;
  std::vector<IntPoly> a_chain;
  std::vector<BiPoly> b_chain;
  if (method == Method::Recursive) {
    if (family == Family::A) a_chain = poly_A_chain(k, lengths.hi);
    else b_chain = poly_B_chain(k, lengths.hi);
  }
  for (int L = lengths.lo; L <= lengths.hi; ++L) {
    BiPoly p;
    switch (method) {
      case Method::Oracle:
        p = family == Family::A ? BiPoly(poly_A_bruteforce(k, L, opts)) : poly_B_bruteforce(k, L, opts);
        break;
      case Method::Recursive:
        p = family == Family::A ? BiPoly(a_chain[static_cast<std::size_t>(L)]) : b_chain[static_cast<std::size_t>(L)];
        break;
      case Method::Closed:
        p = family == Family::A ? BiPoly(closed_poly_A(k, L)) : closed_poly_B(k, L);
        break;
    }
    t.rows.push_back({L, std::move(p)});
  }
  return t;
}

namespace {

nlohmann::json coeff_array(const IntPoly& p) {
  auto a = nlohmann::json::array();
  for (const auto& c : p.coeffs()) a.push_back(c.str());
  return a;
}

IntPoly coeff_poly(const nlohmann::json& a) {
  std::vector<BigInt> c;
  for (const auto& v : a) c.emplace_back(v.get<std::string>());
  return IntPoly(std::move(c));
}

void csv_rows(std::string& out, int n, const std::string& z, const IntPoly& p) {
  for (int d = 0; d <= p.degree(); ++d)
    out += std::to_string(n) + "," + z + std::to_string(d) + "," + p.coeff(d).str() + "\n";
}

}  // namespace

std::string render(const Table& t, Format format) {
  const bool is_a = t.family == Family::A;
  std::string out;
  switch (format) {
    case Format::Text:
      for (const auto& row : t.rows)
        out += std::to_string(row.n) + ": " + (is_a ? to_string(row.poly.z0) : to_string(row.poly)) + "\n";
      return out;
    case Format::Csv:
      out = is_a ? "n,degree,coefficient\n" : "n,z,degree,coefficient\n";
      for (const auto& row : t.rows) {
        if (is_a) {
          csv_rows(out, row.n, "", row.poly.z0);
        } else {
          csv_rows(out, row.n, "0,", row.poly.z0);
          csv_rows(out, row.n, "1,", row.poly.z1);
        }
      }
      return out;
    case Format::Json: {
      nlohmann::json j;
      j["family"] = std::string(to_string(t.family));
      j["k"] = t.k;
      j["method"] = std::string(to_string(t.method));
      auto rows = nlohmann::json::array();
      for (const auto& row : t.rows) {
        nlohmann::json r;
        r["n"] = row.n;
        if (is_a) {
          r["coefficients"] = coeff_array(row.poly.z0);
        } else {
          r["z0"] = coeff_array(row.poly.z0);
          r["z1"] = coeff_array(row.poly.z1);
        }
        rows.push_back(r);
      }
      j["rows"] = rows;
      return j.dump(2) + "\n";
    }
  }
  return out;
}

Table parse_table_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  Table t;
  t.family = parse_family(j.at("family").get<std::string>());
  t.k = j.at("k").get<int>();
  t.method = parse_method(j.at("method").get<std::string>());
  for (const auto& r : j.at("rows")) {
    TableRow row;
    row.n = r.at("n").get<int>();
    if (t.family == Family::A) row.poly = BiPoly(coeff_poly(r.at("coefficients")));
    else row.poly = BiPoly(coeff_poly(r.at("z0")), coeff_poly(r.at("z1")));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Selector parse_selector(std::string_view what, std::string_view z) {
  Selector sel;
  if (what == "const") sel.kind = Selector::Kind::Constant;
  else if (what == "top") sel.kind = Selector::Kind::Top;
  else if (what == "total") sel.kind = Selector::Kind::Total;
  else if (what.starts_with("deg:")) {
    sel.kind = Selector::Kind::Degree;
    sel.degree = std::stoi(std::string(what.substr(4)));
    if (sel.degree < 0) throw std::invalid_argument("degree must be nonnegative");
  } else {
    throw std::invalid_argument("selector must be const, top, total or deg:D");
  }
  if (z == "both") sel.z = -1;
  else if (z == "0") sel.z = 0;
  else if (z == "1") sel.z = 1;
  else throw std::invalid_argument("z must be both, 0 or 1");
  return sel;
}

std::vector<BigInt> extract_sequence(const Table& t, const Selector& sel) {
  std::vector<BigInt> out;
  for (const auto& row : t.rows) {
    IntPoly p = sel.z == 0 ? row.poly.z0 : sel.z == 1 ? row.poly.z1 : row.poly.at_z1();
    switch (sel.kind) {
      case Selector::Kind::Constant: out.push_back(p.coeff(0)); break;
      case Selector::Kind::Top: out.push_back(p.coeff(row.n / t.k)); break;
      case Selector::Kind::Degree: out.push_back(p.coeff(sel.degree)); break;
      case Selector::Kind::Total: out.push_back(p.coefficient_sum()); break;
    }
  }
  return out;
}

std::string render_sequence(const std::vector<BigInt>& seq) {
  std::string out;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ", ";
    out += seq[i].str();
  }
  return out;
}

}  // namespace kdes
