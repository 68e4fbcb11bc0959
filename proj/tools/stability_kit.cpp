// stability-kit: command-line front end for the stabkit library.
//
// Subcommands: suite, symbol, apolar, transvect, convolve, polarize, project,
// stable, act, replay, search. Polynomials, operators and Moebius maps travel
// as JSON (see README); regions use the text DSL. Exit codes: 0 success /
// zero failures, 1 suite or replay failures, 2 usage or input errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "stabkit/convolution.hpp"
#include "stabkit/json_io.hpp"
#include "stabkit/polarization.hpp"
#include "stabkit/stability.hpp"
#include "stabkit/suites.hpp"

using namespace stabkit;

namespace {

unsigned env_precision() {
  if (const char* p = std::getenv("STABILITY_KIT_PRECISION")) {
    long v = std::strtol(p, nullptr, 10);
    if (v >= 4 && v <= 4096) return static_cast<unsigned>(v);
  }
  return 64;
}

BihomPoly load_poly(const std::string& path) { return poly_from_json(poly_json_from_file(path)); }

void emit(const Json& j, const std::string& out_path) {
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json_file(out_path, j);
}

DegreeVec parse_degree_list(const std::string& text) {
  DegreeVec d;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    d.push_back(static_cast<unsigned>(std::stoul(text.substr(pos, comma - pos))));
    pos = comma + 1;
  }
  return d;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"apolarity / symbol calculus and stability verification kit"};
  app.require_subcommand(1);

  // --- suite ---
  auto* suite_cmd = app.add_subcommand("suite", "run a named verification suite");
  std::string suite_name, suite_out;
  SuiteParams sp;
  sp.precision_bits = env_precision();
  bool list_suites = false;
  suite_cmd->add_option("name", suite_name, "suite name");
  suite_cmd->add_flag("--list", list_suites, "list available suites");
  suite_cmd->add_option("--seed", sp.seed, "deterministic seed")->default_val(1);
  suite_cmd->add_option("--cases", sp.cases, "case count (0 = suite default)");
  suite_cmd->add_option("--budget", sp.budget, "falsifier samples per case")->default_val(2000);
  suite_cmd->add_option("--precision", sp.precision_bits, "certification bits");
  suite_cmd->add_option("--out", suite_out, "report path (default: stdout)");

  // --- symbol ---
  auto* symbol_cmd = app.add_subcommand("symbol", "symbol of an operator, or its inverse");
  std::string symbol_in, symbol_out, symbol_lambda, symbol_alpha;
  bool symbol_invert = false;
  symbol_cmd->add_option("input", symbol_in, "operator JSON (or symbol with --invert)")
      ->required();
  symbol_cmd->add_flag("--invert", symbol_invert, "recover the operator from a symbol");
  symbol_cmd->add_option("--lambda", symbol_lambda, "input degree split, e.g. 2,1");
  symbol_cmd->add_option("--alpha", symbol_alpha, "output degree split");
  symbol_cmd->add_option("-o,--out", symbol_out, "output path");

  // --- apolar ---
  auto* apolar_cmd = app.add_subcommand("apolar", "apolarity form of two polynomials");
  std::string ap_p, ap_q;
  bool ap_classical = false;
  apolar_cmd->add_option("p", ap_p)->required();
  apolar_cmd->add_option("q", ap_q)->required();
  apolar_cmd->add_flag("--classical", ap_classical, "binomial-weighted classical form");

  // --- transvect ---
  auto* tr_cmd = app.add_subcommand("transvect", "r-th transvectant");
  std::string tr_p, tr_q, tr_out, tr_orders;
  tr_cmd->add_option("p", tr_p)->required();
  tr_cmd->add_option("q", tr_q)->required();
  tr_cmd->add_option("-r,--order", tr_orders, "order (integer or comma list)")->required();
  tr_cmd->add_option("-o,--out", tr_out);

  // --- convolve ---
  auto* conv_cmd = app.add_subcommand("convolve", "additive or multiplicative convolution");
  std::string conv_kind, conv_p, conv_q, conv_out;
  conv_cmd->add_option("--kind", conv_kind, "add | mult")->required();
  conv_cmd->add_option("p", conv_p)->required();
  conv_cmd->add_option("q", conv_q)->required();
  conv_cmd->add_option("-o,--out", conv_out);

  // --- polarize / project ---
  auto* pol_cmd = app.add_subcommand("polarize", "polarization into multi-affine pairs");
  std::string pol_in, pol_out;
  pol_cmd->add_option("p", pol_in)->required();
  pol_cmd->add_option("-o,--out", pol_out);

  auto* proj_cmd = app.add_subcommand("project", "diagonal projection for a grouping");
  std::string proj_in, proj_out, proj_groups;
  proj_cmd->add_option("p", proj_in)->required();
  proj_cmd->add_option("--groups", proj_groups, "grouping, e.g. 2,1")->required();
  proj_cmd->add_option("-o,--out", proj_out);

  // --- stable ---
  auto* stable_cmd = app.add_subcommand("stable", "stability verdict for a region");
  std::string stable_region, stable_in;
  unsigned stable_precision = env_precision();
  unsigned long stable_budget = 2000;
  std::uint64_t stable_seed = 1;
  stable_cmd->add_option("--region", stable_region, "region DSL, x-separated product")
      ->required();
  stable_cmd->add_option("--precision", stable_precision, "certification bits");
  stable_cmd->add_option("--budget", stable_budget, "falsifier samples");
  stable_cmd->add_option("--seed", stable_seed, "falsifier seed");
  stable_cmd->add_option("p", stable_in)->required();

  // --- act ---
  auto* act_cmd = app.add_subcommand("act", "Moebius action on a polynomial");
  std::string act_map, act_in, act_out;
  act_cmd->add_option("--map", act_map, "JSON array of Moebius maps")->required();
  act_cmd->add_option("p", act_in)->required();
  act_cmd->add_option("-o,--out", act_out);

  // --- replay ---
  auto* replay_cmd = app.add_subcommand("replay", "replay a recorded suite failure");
  std::string replay_report;
  unsigned long replay_index = 0;
  replay_cmd->add_option("report", replay_report, "suite report JSON")->required();
  replay_cmd->add_option("--case", replay_index, "failure case index")->required();

  // --- search ---
  auto* search_cmd = app.add_subcommand("search", "search for a Grace-pair counterexample");
  std::string search_a, search_b;
  unsigned long search_budget = 500;
  std::uint64_t search_seed = 1;
  search_cmd->add_option("--first", search_a, "region product A (DSL)")->required();
  search_cmd->add_option("--second", search_b, "region product B (DSL)")->required();
  search_cmd->add_option("--budget", search_budget);
  search_cmd->add_option("--seed", search_seed);

  try {
    app.parse(argc, argv);

    if (suite_cmd->parsed()) {
      if (list_suites) {
        for (const auto& n : suite_names()) std::cout << n << "\n";
        return 0;
      }
      if (suite_name.empty()) {
        std::cerr << "suite: missing name (try --list)\n";
        return 2;
      }
      SuiteReport rep = run_suite(suite_name, sp);
      emit(rep.to_json(), suite_out);
      std::cerr << suite_name << ": " << rep.cases_run << " cases, " << rep.failures.size()
                << " failures, " << rep.indeterminates << " indeterminate\n";
      return rep.failures.empty() ? 0 : 1;
    }
    if (symbol_cmd->parsed()) {
      if (symbol_invert) {
        BihomPoly s = load_poly(symbol_in);
        DegreeVec lam = parse_degree_list(symbol_lambda);
        DegreeVec alf = parse_degree_list(symbol_alpha);
        emit(to_json(operator_from_symbol(s, lam, alf)), symbol_out);
      } else {
        LinearOp T = op_from_json(poly_json_from_file(symbol_in));
        emit(to_json(symbol(T)), symbol_out);
      }
      return 0;
    }
    if (apolar_cmd->parsed()) {
      BihomPoly p = load_poly(ap_p), q = load_poly(ap_q);
      GaussRat v = ap_classical ? classical_apolarity(p, q) : apolarity_form(p, q);
      std::cout << to_json(v).dump(2) << "\n";
      return 0;
    }
    if (tr_cmd->parsed()) {
      BihomPoly p = load_poly(tr_p), q = load_poly(tr_q);
      DegreeVec orders = parse_degree_list(tr_orders);
      if (orders.size() == 1 && p.arity() > 1) orders.assign(p.arity(), orders[0]);
      emit(to_json(transvectant(p, q, orders)), tr_out);
      return 0;
    }
    if (conv_cmd->parsed()) {
      BihomPoly p = load_poly(conv_p), q = load_poly(conv_q);
      if (conv_kind == "add")
        emit(to_json(additive_convolution(p, q)), conv_out);
      else if (conv_kind == "mult")
        emit(to_json(multiplicative_convolution(p, q)), conv_out);
      else {
        std::cerr << "convolve: --kind must be add or mult\n";
        return 2;
      }
      return 0;
    }
    if (pol_cmd->parsed()) {
      emit(to_json(polarize(load_poly(pol_in))), pol_out);
      return 0;
    }
    if (proj_cmd->parsed()) {
      emit(to_json(project(load_poly(proj_in), parse_degree_list(proj_groups))), proj_out);
      return 0;
    }
    if (stable_cmd->parsed()) {
      BihomPoly p = load_poly(stable_in);
      RegionProduct rp = parse_region_product(stable_region);
      Verdict v;
      if (p.arity() == 1 && rp.arity() == 1)
        v = univariate_stable(p, rp.factors[0], stable_precision);
      else
        v = multivariate_stable(p, rp, {stable_budget, stable_precision, stable_seed});
      std::cout << to_json(v).dump(2) << "\n";
      return 0;
    }
    if (act_cmd->parsed()) {
      Json maps = poly_json_from_file(act_map);
      MoebiusTuple tuple;
      if (maps.is_array())
        for (const auto& mj : maps) tuple.push_back(moebius_from_json(mj));
      else
        tuple.push_back(moebius_from_json(maps));
      emit(to_json(act_poly(tuple, load_poly(act_in))), act_out);
      return 0;
    }
    if (replay_cmd->parsed()) {
      Json rep = poly_json_from_file(replay_report);
      SuiteParams rp;
      rp.seed = rep.at("seed").get<std::uint64_t>();
      rp.budget = rep.at("budget").get<unsigned long>();
      rp.precision_bits = env_precision();
      const Json* record = nullptr;
      for (const auto& f : rep.at("failures"))
        if (f.at("case_index").get<unsigned long>() == replay_index) record = &f;
      if (!record) {
        std::cerr << "replay: no failure with case_index " << replay_index << "\n";
        return 2;
      }
      auto again = replay_case(rep.at("suite").get<std::string>(), rp, replay_index);
      bool reproduced = again && again->what == record->at("what").get<std::string>() &&
                        again->inputs == record->at("inputs");
      std::cout << Json{{"case_index", replay_index}, {"reproduced", reproduced}}.dump(2)
                << "\n";
      return reproduced ? 0 : 1;
    }
    if (search_cmd->parsed()) {
      RegionProduct A = parse_region_product(search_a);
      RegionProduct B = parse_region_product(search_b);
      GraceSearchResult r = search_grace_counterexample(A, B, search_budget, search_seed);
      Json j{{"found", r.found}, {"tried", r.tried}, {"details", r.details}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    std::cerr << "no subcommand\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
