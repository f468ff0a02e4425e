#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lg/derivation_json.hpp"
#include "lg/parse.hpp"
#include "lg/prover.hpp"
#include "lg/reduction.hpp"
#include "lg/render.hpp"
#include "lg/witness.hpp"

namespace {

constexpr int kPositive = 0;
constexpr int kNegative = 1;
constexpr int kInconclusive = 2;
constexpr int kUsage = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  return s.substr(begin, s.find_last_not_of(" \t\r\n") - begin + 1);
}

// A sequent argument is inline text, or the contents of a file when the
// argument starts with '@'.
lg::Sequent sequent_argument(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@')
    return lg::parse_sequent(trim(read_file(arg.substr(1))));
  return lg::parse_sequent(arg);
}

lg::Assignment parse_assignment(const std::string& text) {
  lg::Assignment a;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item == "0")
      a.push_back(false);
    else if (item == "1")
      a.push_back(true);
    else
      throw std::runtime_error("assignment entries must be 0 or 1, got '" +
                               item + "'");
  }
  if (a.empty()) throw std::runtime_error("empty assignment");
  return a;
}

std::string assignment_text(const lg::Assignment& a) {
  std::string out;
  for (bool t : a) {
    if (!out.empty()) out += ',';
    out += t ? '1' : '0';
  }
  return out;
}

void emit_derivation(const lg::Derivation& d, const std::string& format,
                     std::ostream& out) {
  if (format == "json")
    out << lg::to_json(d).dump(2) << "\n";
  else if (format == "latex")
    out << lg::to_latex(d);
  else
    out << lg::to_text(d);
}

int run_prove(const std::string& goal_arg, long grishin, long depth,
              const std::string& emit) {
  const lg::Sequent goal = sequent_argument(goal_arg);
  lg::Budgets budgets = lg::Budgets::defaults_for(goal);
  if (grishin >= 0) budgets.grishinMax = grishin;
  if (depth >= 0) budgets.depthMax = depth;
  const lg::ProveOutcome outcome = lg::prove(goal, budgets);
  switch (outcome.kind) {
    case lg::ProveOutcome::Kind::Proved: {
      const lg::CheckReport r = lg::check(*outcome.derivation, false);
      std::cerr << "proved: logical=" << r.logicalCount
                << " grishin=" << r.grishinCount
                << " display=" << r.displayCount << "\n";
      emit_derivation(*outcome.derivation, emit, std::cout);
      return kPositive;
    }
    case lg::ProveOutcome::Kind::Unprovable:
      std::cerr << "unprovable\n";
      return kNegative;
    case lg::ProveOutcome::Kind::BudgetExceeded:
      std::cerr << "budget exceeded: " << outcome.exceeded << "\n";
      return kInconclusive;
  }
  return kUsage;
}

int run_check(const std::string& path, bool allow_cut) {
  const lg::Derivation d =
      lg::derivation_from_json(nlohmann::json::parse(read_file(path)));
  const lg::CheckReport r = lg::check(d, allow_cut);
  if (!r.ok) {
    std::cerr << "invalid: " << *r.firstError << "\n";
    return kNegative;
  }
  std::cout << "valid: conclusion=" << lg::render(d.conclusion)
            << " logical=" << r.logicalCount << " grishin=" << r.grishinCount
            << " display=" << r.displayCount << " cut=" << r.cutCount << "\n";
  return kPositive;
}

int run_reduce(const std::string& path, const std::string& out_path) {
  const lg::CnfFormula cnf = lg::parse_dimacs(read_file(path));
  const std::string rendered = lg::render(lg::reduce(cnf)) + "\n";
  if (out_path.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + out_path);
    out << rendered;
  }
  return kPositive;
}

int run_witness(const std::string& path, const std::string& assignment_arg) {
  const lg::CnfFormula cnf = lg::parse_dimacs(read_file(path));
  lg::Assignment a;
  if (assignment_arg.empty()) {
    const std::optional<lg::Assignment> found = lg::brute_force_sat(cnf);
    if (!found) {
      std::cerr << "unsatisfiable: no witness exists\n";
      return kNegative;
    }
    a = *found;
  } else {
    a = parse_assignment(assignment_arg);
  }
  const lg::Derivation d = lg::build_witness(cnf, a);
  std::cerr << "assignment: " << assignment_text(a) << "\n";
  emit_derivation(d, "json", std::cout);
  return kPositive;
}

int run_roundtrip(const std::string& path) {
  const lg::CnfFormula cnf = lg::parse_dimacs(read_file(path));
  const lg::RoundtripVerdict v = lg::roundtrip(cnf);
  if (v.inconclusive) {
    std::cout << "inconclusive: budget exceeded (" << v.lgResult.exceeded
              << ")\n";
    return kInconclusive;
  }
  if (!v.consistent) {
    std::cout << "inconsistent: sat="
              << (v.satResult ? "satisfiable" : "unsatisfiable")
              << " derivable="
              << (v.lgResult.kind == lg::ProveOutcome::Kind::Proved ? "yes"
                                                                    : "no")
              << " witness="
              << (!v.witnessReport ? "none"
                                   : (v.witnessReport->ok ? "ok" : "failed"))
              << "\n";
    return kNegative;
  }
  std::cout << (v.satResult ? "consistent: both positive"
                            : "consistent: both negative")
            << "\n";
  if (v.satResult)
    std::cerr << "assignment: " << assignment_text(*v.satResult) << "\n";
  return kPositive;
}

int run_stats(const std::string& goal_arg) {
  const lg::Sequent goal = sequent_argument(goal_arg);
  const lg::StatsReport r = lg::stats(goal);
  std::cout << "formula connectives: " << r.counts.formulaTotal << "\n"
            << "  product family: " << r.counts.inputFamily << "\n"
            << "  coproduct family: " << r.counts.outputFamily << "\n"
            << "structural connectives: " << r.counts.structuralTotal << "\n"
            << "length: " << r.length << "\n"
            << "default budgets: grishin=" << r.budgets.grishinMax
            << " depth=" << r.budgets.depthMax
            << " node=" << r.budgets.nodeMax << "\n";
  return kPositive;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lambek-Grishin derivability engine"};
  app.require_subcommand(1);

  std::string goal_arg, file_arg, out_path, assignment_arg;
  std::string emit = "text";
  long grishin = -1, depth = -1;
  bool allow_cut = false;

  CLI::App* prove = app.add_subcommand("prove", "Search for a derivation");
  prove->add_option("sequent", goal_arg, "Sequent text, or @file")->required();
  prove->add_option("--grishin", grishin, "Grishin interaction budget")
      ->check(CLI::NonNegativeNumber);
  prove->add_option("--depth", depth, "Search depth budget")
      ->check(CLI::NonNegativeNumber);
  prove->add_option("--emit", emit, "Derivation output format")
      ->check(CLI::IsMember({"json", "latex", "text"}));

  CLI::App* chk = app.add_subcommand("check", "Validate a derivation file");
  chk->add_option("derivation", file_arg, "Derivation JSON file")->required();
  chk->add_flag("--allow-cut", allow_cut, "Accept Cut nodes");

  CLI::App* red = app.add_subcommand("reduce", "Compile DIMACS CNF to a sequent");
  red->add_option("cnf", file_arg, "DIMACS CNF file")->required();
  red->add_option("-o,--output", out_path, "Write the sequent to a file");

  CLI::App* wit =
      app.add_subcommand("witness", "Build a derivation from an assignment");
  wit->add_option("cnf", file_arg, "DIMACS CNF file")->required();
  wit->add_option("--assignment", assignment_arg,
                  "Comma-separated truth values, e.g. 1,0");

  CLI::App* rt =
      app.add_subcommand("roundtrip", "Compare SAT and derivability verdicts");
  rt->add_option("cnf", file_arg, "DIMACS CNF file")->required();

  CLI::App* st = app.add_subcommand("stats", "Census and default budgets");
  st->add_option("sequent", goal_arg, "Sequent text, or @file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }

  try {
    if (prove->parsed()) return run_prove(goal_arg, grishin, depth, emit);
    if (chk->parsed()) return run_check(file_arg, allow_cut);
    if (red->parsed()) return run_reduce(file_arg, out_path);
    if (wit->parsed()) return run_witness(file_arg, assignment_arg);
    if (rt->parsed()) return run_roundtrip(file_arg);
    if (st->parsed()) return run_stats(goal_arg);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
