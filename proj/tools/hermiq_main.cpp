// Command-line front end: builds Hermitian-curve contexts, runs the code
// constructions and verification suites, renders semigroup grids, and
// exports the quantum-code catalogs.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hermiq/codes.hpp"
#include "hermiq/grids.hpp"
#include "hermiq/quantum.hpp"
#include "hermiq/serialize.hpp"
#include "hermiq/tables.hpp"
#include "hermiq/verify.hpp"

namespace {

using namespace hermiq;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path);
  if (!f) throw std::runtime_error("cannot open output file: " + out_path);
  f << text;
}

// Code specifiers: onepoint:<m>, improved:<delta>, dual:<spec>
LinearCode parse_code_spec(const CurvePtr& curve, const std::string& spec) {
  if (spec.rfind("dual:", 0) == 0) return dual(parse_code_spec(curve, spec.substr(5)));
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw PreconditionError("bad code spec '" + spec + "' (want onepoint:<m>, improved:<delta>, dual:<spec>)");
  const std::string kind = spec.substr(0, colon);
  const int param = std::stoi(spec.substr(colon + 1));
  if (kind == "onepoint") return onepoint_code(curve, param);
  if (kind == "improved") return improved_code(curve, param);
  throw PreconditionError("bad code spec '" + spec + "' (unknown kind '" + kind + "')");
}

std::string describe_code(const LinearCode& code) {
  std::string s = code.label.text() + "  [" + std::to_string(code.n()) + ", " + std::to_string(code.k) + "]_" +
                  std::to_string(code.gen.field()->order());
  if (auto d = theoretical_distance(code))
    s += std::string("  d ") + (d->exact ? "= " : ">= ") + std::to_string(d->value);
  return s;
}

struct QuantumArgs {
  int q = 4;
  std::string c1, c2, code, inner, outer;
  int delta = 0;
  int m = 0;
  std::optional<int> k_target;
  bool verify = false;
  std::uint64_t budget = kDefaultBudget;
};

int run_quantum(const std::string& construction, const QuantumArgs& a, const std::string& out_path) {
  CurvePtr curve = Curve::make(a.q);
  std::ostringstream out;
  auto print_record = [&](const QuantumCodeRecord& rec) {
    out << "record: " << record_line(rec) << "\n";
    out << "construction: " << rec.construction << "\n";
    out << "provenance: " << rec.provenance << "\n";
  };
  auto print_classical = [&](const LinearCode& inner, const LinearCode& outer) {
    out << "classical: " << describe_code(inner) << "\n";
    out << "classical: " << describe_code(outer) << "\n";
    const int ri = rank(inner.gen);
    const int ro = rank(outer.gen);
    out << "ranks: " << ri << " " << ro << " (codimension " << ro - ri << ")\n";
  };

  if (construction == "css") {
    LinearCode c1 = parse_code_spec(curve, a.c1);
    LinearCode c2 = parse_code_spec(curve, a.c2);
    QuantumCodeRecord rec = css_pair(c1, c2, a.budget);
    print_record(rec);
    if (a.verify) {
      print_classical(c2, c1);
      out << "verification: " << to_string(verify_css_record(rec, c1, c2, a.budget)) << "\n";
    }
  } else if (construction == "css-dual-containing") {
    LinearCode c = parse_code_spec(curve, a.code);
    QuantumCodeRecord rec = css_dual_containing(c, a.budget);
    print_record(rec);
    if (a.verify) {
      LinearCode cd = dual(c);
      print_classical(cd, c);
      out << "verification: " << to_string(verify_css_record(rec, c, cd, a.budget)) << "\n";
    }
  } else if (construction == "steane" || construction == "prop7" || construction == "prop8") {
    QuantumCodeRecord rec{};
    std::optional<LinearCode> inner, outer;
    if (construction == "steane") {
      inner = parse_code_spec(curve, a.inner);
      outer = parse_code_spec(curve, a.outer);
      rec = steane_enlarge(*inner, *outer, a.budget);
    } else if (construction == "prop7") {
      rec = enlarge_onepoint(curve, a.delta);
      const int step = (a.delta - 2) / (a.q * a.q + 1) + 1;
      inner = onepoint_code(curve, curve->n() - a.delta);
      outer = onepoint_code(curve, curve->n() - (a.delta - step));
    } else {
      rec = enlarge_improved(curve, a.delta, a.m);
      inner = improved_code(curve, a.delta);
      outer = improved_code(curve, a.delta - a.m, DeltaPolicy::AllowAny);
    }
    print_record(rec);
    if (a.verify) {
      print_classical(*inner, *outer);
      out << "verification: " << to_string(verify_steane_record(rec, *inner, *outer, a.budget)) << "\n";
    }
  } else if (construction == "mixed-search") {
    std::vector<QuantumCodeRecord> recs = enlarge_mixed_search(curve, a.k_target);
    for (const auto& rec : recs) out << record_line(rec) << "  " << rec.construction << "\n";
    out << recs.size() << " records\n";
  } else {
    throw PreconditionError("unknown construction '" + construction + "'");
  }
  emit(out.str(), out_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hermiq: Hermitian-curve classical codes and the quantum codes they induce"};
  app.require_subcommand(1);

  std::string out_path;
  std::string format = "text";
  app.add_option("--out", out_path, "Write output to a file instead of stdout");
  app.add_option("--format", format, "Output format for tables/export: text, csv, json")
      ->check(CLI::IsMember({"text", "csv", "json"}));

  auto* points_cmd = app.add_subcommand("points", "List the q^3 affine rational points in canonical order");
  int points_q = 2;
  points_cmd->add_option("--q", points_q, "Curve parameter q")->required();

  auto* semi_cmd = app.add_subcommand("semigroup", "Print the semigroup table (lambda, i, j, sigma, mu)");
  int semi_q = 2;
  semi_cmd->add_option("--q", semi_q, "Curve parameter q")->required();

  auto* grids_cmd = app.add_subcommand("grids", "Render the pole-order / sigma / mu grids with membership marks");
  int grids_q = 4, grids_delta = 5, grids_delta2 = 4;
  grids_cmd->add_option("--q", grids_q, "Curve parameter q")->required();
  grids_cmd->add_option("--delta", grids_delta, "Designed distance of the code")->required();
  grids_cmd->add_option("--delta2", grids_delta2, "Designed distance of the enlarged code")->required();

  auto* code_cmd = app.add_subcommand("code", "Build a classical code and print its parameters");
  int code_q = 4;
  int code_onepoint = -1, code_improved = -1;
  std::string code_spec;
  bool code_verify = false;
  code_cmd->add_option("--q", code_q, "Curve parameter q")->required();
  code_cmd->add_option("--onepoint", code_onepoint, "One-point code of the given degree");
  code_cmd->add_option("--improved", code_improved, "Improved code of the given designed distance");
  code_cmd->add_option("--spec", code_spec, "Full code spec (onepoint:<m> | improved:<d> | dual:<spec>)");
  code_cmd->add_flag("--verify", code_verify, "Re-check the dimension by matrix rank");

  auto* quantum_cmd = app.add_subcommand("quantum", "Derive a quantum code record");
  std::string construction;
  QuantumArgs qa;
  int qa_k = -1;
  quantum_cmd
      ->add_option("construction", construction,
                   "css | css-dual-containing | steane | prop7 | prop8 | mixed-search")
      ->required();
  quantum_cmd->add_option("--q", qa.q, "Curve parameter q")->required();
  quantum_cmd->add_option("--c1", qa.c1, "Outer code spec for css");
  quantum_cmd->add_option("--c2", qa.c2, "Inner code spec for css");
  quantum_cmd->add_option("--code", qa.code, "Code spec for css-dual-containing");
  quantum_cmd->add_option("--inner", qa.inner, "Dual-containing code spec for steane");
  quantum_cmd->add_option("--outer", qa.outer, "Enlarging code spec for steane");
  quantum_cmd->add_option("--delta", qa.delta, "Designed distance (prop7, prop8)");
  quantum_cmd->add_option("--m", qa.m, "Enlargement step count (prop8)");
  quantum_cmd->add_option("--k", qa_k, "Only report mixed-search records of this dimension");
  quantum_cmd->add_flag("--verify", qa.verify,
                        "Re-derive dimensions by rank and distances exhaustively when within budget");
  quantum_cmd->add_option("--budget", qa.budget, "Exhaustive-search budget in codeword evaluations");

  auto* tables_cmd = app.add_subcommand("tables", "Regenerate the comparison catalogs");
  int which_table = 1;
  std::vector<int> tables_q;
  tables_cmd->add_option("which", which_table, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
  tables_cmd->add_option("--q", tables_q, "Curve parameters for table 1 (default 2 3 4 5 7)");

  auto* verify_cmd = app.add_subcommand("verify", "Run an invariant suite and report pass/fail");
  std::string suite;
  std::vector<int> verify_q;
  std::uint64_t verify_budget = kDefaultBudget;
  verify_cmd
      ->add_option("suite", suite,
                   "field | geometry | dimensions | duality | self-orth | distances-q2 | tables | all")
      ->required();
  verify_cmd->add_option("--q", verify_q, "Curve parameters (default 2 3 4)");
  verify_cmd->add_option("--budget", verify_budget, "Exhaustive-search budget");

  auto* export_cmd = app.add_subcommand("export", "Export the enlargement catalog for one q");
  int export_q = 4;
  std::string export_stamp;
  bool export_verify = false;
  std::uint64_t export_budget = kDefaultBudget;
  export_cmd->add_option("--q", export_q, "Curve parameter q")->required();
  export_cmd->add_option("--stamp", export_stamp, "Timestamp string stored in the catalog entries");
  export_cmd->add_flag("--verify", export_verify, "Attempt exhaustive distance verification per record");
  export_cmd->add_option("--budget", export_budget, "Exhaustive-search budget");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (points_cmd->parsed()) {
      CurvePtr c = Curve::make(points_q);
      std::ostringstream out;
      for (const auto& p : c->points()) out << p.x << " " << p.y << "\n";
      emit(out.str(), out_path);
      return kExitOk;
    }
    if (semi_cmd->parsed()) {
      CurvePtr c = Curve::make(semi_q);
      std::ostringstream out;
      for (const auto& e : c->semigroup())
        out << e.lambda << " " << e.i << " " << e.j << " " << e.sigma << " " << e.mu << "\n";
      emit(out.str(), out_path);
      return kExitOk;
    }
    if (grids_cmd->parsed()) {
      CurvePtr c = Curve::make(grids_q);
      emit(render_grids(*c, grids_delta, grids_delta2), out_path);
      return kExitOk;
    }
    if (code_cmd->parsed()) {
      CurvePtr c = Curve::make(code_q);
      LinearCode code = !code_spec.empty()   ? parse_code_spec(c, code_spec)
                        : code_onepoint >= 0 ? onepoint_code(c, code_onepoint)
                        : code_improved >= 0
                            ? improved_code(c, code_improved)
                            : throw PreconditionError("code: give --onepoint, --improved or --spec");
      std::ostringstream out;
      out << describe_code(code) << "\n";
      if (code_verify) {
        const int r = rank(code.gen);
        out << "rank: " << r << (r == code.k ? " (matches)" : " (MISMATCH)") << "\n";
        if (r != code.k) {
          emit(out.str(), out_path);
          return kExitVerifyFail;
        }
      }
      emit(out.str(), out_path);
      return kExitOk;
    }
    if (quantum_cmd->parsed()) {
      if (qa_k >= 0) qa.k_target = qa_k;
      return run_quantum(construction, qa, out_path);
    }
    if (tables_cmd->parsed()) {
      std::ostringstream out;
      if (which_table == 1) {
        std::vector<int> qs = tables_q.empty() ? std::vector<int>{2, 3, 4, 5, 7} : tables_q;
        auto rows = table1_records(qs);
        if (format == "json")
          out << to_json(rows) << "\n";
        else if (format == "csv")
          out << table1_csv(rows);
        else
          out << table1_text(rows);
      } else {
        auto rows = table2_records(Curve::make(4));
        if (format == "json")
          out << to_json(rows) << "\n";
        else if (format == "csv")
          out << table2_csv(rows);
        else
          out << table2_text(rows);
      }
      emit(out.str(), out_path);
      return kExitOk;
    }
    if (verify_cmd->parsed()) {
      std::vector<std::string> suites = suite == "all" ? verify_suite_names() : std::vector<std::string>{suite};
      std::ostringstream out;
      bool all_pass = true;
      for (const auto& s : suites) {
        SuiteReport rep = run_verify_suite(s, verify_q, verify_budget);
        out << "suite " << rep.suite << ": " << (rep.pass ? "PASS" : "FAIL") << " (" << rep.checks << " checks";
        if (!rep.pass) out << ", " << rep.failures.size() << " failures";
        out << ")\n";
        for (const auto& f : rep.failures) out << "  FAIL " << f << "\n";
        all_pass = all_pass && rep.pass;
      }
      emit(out.str(), out_path);
      return all_pass ? kExitOk : kExitVerifyFail;
    }
    if (export_cmd->parsed()) {
      CurvePtr c = Curve::make(export_q);
      std::vector<CatalogEntry> entries;
      for (const auto& rec : enlarge_mixed_search(c))
        entries.push_back({rec, kToolVersion, export_q, export_stamp, VerificationLevel::RankVerified});
      const int q2 = export_q * export_q;
      const int dmax = (c->n() - q2 + export_q) / 2 + 1;
      for (int delta = q2 + 3; delta <= dmax; ++delta)
        entries.push_back(
            {enlarge_onepoint(c, delta), kToolVersion, export_q, export_stamp, VerificationLevel::RankVerified});
      if (export_verify) {
        for (auto& e : entries) {
          const std::string& prov = e.record.provenance;
          const auto comma = prov.find(',');
          if (comma == std::string::npos) continue;
          LinearCode inner = parse_code_spec(c, prov.substr(0, comma));
          LinearCode outer = parse_code_spec(c, prov.substr(comma + 1));
          e.level = verify_steane_record(e.record, inner, outer, export_budget);
        }
      }
      std::ostringstream out;
      if (format == "csv") {
        out << csv_header() << "\n";
        for (const auto& e : entries) out << to_csv_row(e) << "\n";
      } else {
        out << to_json(entries) << "\n";
      }
      emit(out.str(), out_path);
      return kExitOk;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitVerifyFail;
  }
  return kExitUsage;
}
