#include "kdes/cli.hpp"

#include "kdes/bijections.hpp"
#include "kdes/crosscheck.hpp"
#include "kdes/identities.hpp"
#include "kdes/table.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

namespace kdes {

namespace {

struct Common {
  int jobs = 1;
  int guard = 11;
  std::string format = "text";
  bool timing = false;

  OracleOptions oracle() const { return {jobs, guard}; }
};

int emit_report(const VerificationReport& rep, const Common& c, std::ostream& out) {
  if (parse_format(c.format) == Format::Json)
    out << to_json(rep, c.timing).dump(2) << "\n";
  else
    out << render_text(rep);
  return rep.passed() ? kExitPass : kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact distributions of residue-class descent statistics"};
  app.name("kdes");
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with option defaults");

  Common common;
  app.add_option("--jobs", common.jobs, "Worker threads for enumeration")->check(CLI::PositiveNumber);
  app.add_option("--guard", common.guard, "Largest length enumerated by the oracle")->check(CLI::NonNegativeNumber);
  app.add_option("--format", common.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  app.add_flag("--timing", common.timing, "Include elapsed time in JSON reports");

  std::string family = "A", method = "recursive", select = "const", z = "both", identity = "all";
  std::string table_n, verify_k, verify_n, ident_k, ident_n, seq_n, bij_n;
  int k = 3;

  auto* table = app.add_subcommand("table", "Coefficient table for A or B");
  table->add_option("family", family, "A or B")->check(CLI::IsMember({"A", "B"}));
  table->add_option("--k", k, "Modulus")->check(CLI::PositiveNumber);
  table->add_option("--n", table_n, "Length range a..b")->default_val("1..10");
  table->add_option("--method", method)->check(CLI::IsMember({"oracle", "recursive", "closed"}));

  auto* verify = app.add_subcommand("verify", "Oracle, recursion and closed forms agree");
  verify->add_option("--k", verify_k, "Modulus range a..b")->default_val("2..5");
  verify->add_option("--n", verify_n, "Length range a..b")->default_val("1..10");

  auto* ident = app.add_subcommand("identity", "Run an identity sweep");
  ident->add_option("name", identity, "Identity name or all");
  ident->add_option("--k", ident_k, "Modulus range a..b")->default_val("2..6");
  ident->add_option("--n", ident_n, "Range of n")->default_val("0..40");

  auto* sequence = app.add_subcommand("sequence", "One coefficient per length");
  sequence->add_option("family", family, "A or B")->check(CLI::IsMember({"A", "B"}));
  sequence->add_option("--k", k, "Modulus")->check(CLI::PositiveNumber);
  sequence->add_option("--n", seq_n, "Length range a..b")->default_val("1..10");
  sequence->add_option("--method", method)->check(CLI::IsMember({"oracle", "recursive", "closed"}));
  sequence->add_option("--select", select, "const, top, total or deg:D");
  sequence->add_option("--z", z, "both, 0 or 1");

  auto* bij = app.add_subcommand("bijection-check", "Exhaustive bijection and symmetry checks");
  bij->add_option("--n", bij_n, "Length range a..b")->default_val("0..8");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const Format format = parse_format(common.format);
    if (*table) {
      Table t = build_table(parse_family(family), k, parse_range(table_n), parse_method(method), common.oracle());
      out << render(t, format);
      return kExitPass;
    }
    if (*sequence) {
      Table t = build_table(parse_family(family), k, parse_range(seq_n), parse_method(method), common.oracle());
      out << render_sequence(extract_sequence(t, parse_selector(select, z))) << "\n";
      return kExitPass;
    }
    if (format == Format::Csv) throw std::invalid_argument("csv output is only available for table");
    if (*verify) {
      IntRange kr = parse_range(verify_k);
      if (!kr.empty() && kr.lo < 2) throw std::invalid_argument("verify needs k >= 2");
      return emit_report(verify_methods(kr, parse_range(verify_n), common.oracle()), common, out);
    }
    if (*ident) {
      SuiteRanges ranges{parse_range(ident_k), parse_range(ident_n)};
      if (identity == "all") return emit_report(run_suite(ranges, common.jobs), common, out);
      auto id = parse_identity(identity);
      if (!id) throw std::invalid_argument("unknown identity '" + identity + "'");
      return emit_report(run_identity(*id, ranges), common, out);
    }
    if (*bij) return emit_report(check_bijections(parse_range(bij_n), common.oracle()), common, out);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace kdes
