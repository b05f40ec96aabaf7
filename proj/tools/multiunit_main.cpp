// Copyright 2026 The Multiunit Pricing Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line front end.  Subcommands map onto the library modules:
//   check-dmr  marginal classification with witnesses
//   revenue    closed-form revenue of a given menu, with cross-checks
//   optimize   projected ascent (default), --grid lattice search, --k2 closed form
//   oracle     discrete LP relaxation vs best deterministic menu
//   simulate   repeated posted-price rounds with a learning strategy
//
// Reports are JSON on stdout (or --out FILE) and are byte-identical across
// runs with the same inputs; wall time goes to stderr so reports stay
// reproducible.  Exit codes: 0 ok, 2 invalid input, 3 numerical failure.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "multiunit/dynpricing.hpp"
#include "multiunit/errors.hpp"
#include "multiunit/instance_io.hpp"
#include "multiunit/ktwo.hpp"
#include "multiunit/marginal.hpp"
#include "multiunit/optimizer.hpp"
#include "multiunit/oracle.hpp"
#include "multiunit/revenue.hpp"

namespace {

using nlohmann::json;
using namespace multiunit;

struct Options {
  std::string instance_path;
  std::string prices_text;
  std::string out_path;
  std::string trace_path;
  std::string strategy = "two-point";
  double tol = 1e-9;
  long long iters = 4000;
  int restarts = 5;
  uint64_t seed = 1;
  long long rounds = 10000;
  int grid = 0;
  bool use_k2 = false;
};

std::string hex_digest(uint64_t h) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<double> parse_price_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(tok, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("--prices: cannot parse '" + tok + "'");
    }
    while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos])))
      ++pos;
    if (pos != tok.size())
      throw std::invalid_argument("--prices: trailing junk in '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("--prices: empty list");
  return out;
}

const ProblemInstance& continuous_or_throw(const InstanceFile& file) {
  if (!file.continuous)
    throw std::invalid_argument("instance file has no marginals block");
  return *file.continuous;
}

const DiscreteInstance& discrete_or_throw(const InstanceFile& file) {
  if (!file.discrete)
    throw std::invalid_argument("instance file has no discrete block");
  return *file.discrete;
}

const char* kind_name(Marginal::Kind k) {
  switch (k) {
    case Marginal::Kind::kUniform: return "uniform";
    case Marginal::Kind::kConstantElasticity: return "constant_elasticity";
    case Marginal::Kind::kTruncatedNormal: return "truncated_normal";
    case Marginal::Kind::kExponentialTruncated: return "exponential";
    case Marginal::Kind::kPiecewiseLinearCdf: return "piecewise_linear";
    case Marginal::Kind::kMixture: return "mixture";
  }
  return "unknown";
}

json cmd_check_dmr(const InstanceFile& file, const Options&) {
  const ProblemInstance& inst = continuous_or_throw(file);
  json marginals = json::array();
  bool all_dmr = true;
  for (int i = 1; i <= inst.k(); ++i) {
    const Marginal& m = inst.marginal(i);
    const DmrResult r = m.is_dmr();
    const bool regular = m.is_regular();
    json row = {{"index", i},
                {"kind", kind_name(m.kind())},
                {"dmr", r.dmr},
                {"regular", regular}};
    if (r.witness) {
      row["witness"] = {{"v_left", r.witness->v_left},
                        {"v_mid", r.witness->v_mid},
                        {"v_right", r.witness->v_right},
                        {"violation", r.witness->violation}};
    }
    marginals.push_back(std::move(row));
    all_dmr = all_dmr && r.dmr;
  }
  return {{"marginals", marginals}, {"all_dmr", all_dmr}};
}

json cmd_revenue(const InstanceFile& file, const Options& opt) {
  const ProblemInstance& inst = continuous_or_throw(file);
  if (opt.prices_text.empty())
    throw std::invalid_argument("revenue: --prices is required");
  PriceVector p(parse_price_list(opt.prices_text));
  if (p.k() != inst.k())
    throw std::invalid_argument("revenue: price count must equal k");
  const SigmaAssignment sigma = assign_sigma(p, inst);
  const double closed = rev(p, inst);
  const double integrated = rev_by_integration(p, inst);
  json paths = json::array();
  for (int i = 1; i <= inst.k(); ++i)
    paths.push_back(sigma.paths[static_cast<size_t>(i)]);
  return {{"prices", p.values()},
          {"revenue", closed},
          {"sigma", std::vector<int>(sigma.next.begin() + 1, sigma.next.end())},
          {"paths", paths},
          {"integration", integrated},
          {"integration_delta", closed - integrated}};
}

json cmd_optimize(const InstanceFile& file, const Options& opt) {
  const ProblemInstance& inst = continuous_or_throw(file);
  if (opt.use_k2) {
    const KTwoSolution sol = solve_k2(inst);
    return {{"method", "k2"},
            {"case", to_string(sol.case_id)},
            {"v1", sol.v1_star},
            {"v2", sol.v2_star},
            {"prices", sol.prices.values()},
            {"revenue", sol.revenue}};
  }
  if (opt.grid > 0) {
    const OptimizeResult res = grid_search(inst, opt.grid);
    return {{"method", "grid"},
            {"resolution", opt.grid},
            {"prices", res.p_star.values()},
            {"revenue", res.rev_star},
            {"evaluations", res.iterations}};
  }
  OptimizeConfig cfg;
  cfg.max_iters = opt.iters;
  cfg.tol = opt.tol;
  cfg.restarts = opt.restarts;
  cfg.seed = opt.seed;
  const OptimizeResult res = maximize(inst, cfg);
  return {{"method", "ascent"},
          {"prices", res.p_star.values()},
          {"revenue", res.rev_star},
          {"iterations", res.iterations},
          {"certificate", res.certificate},
          {"dmr_certified", res.dmr_certified}};
}

json cmd_oracle(const InstanceFile& file, const Options&) {
  const DiscreteInstance& inst = discrete_or_throw(file);
  const LpSolution lp = lp_optimal(inst);
  const DeterministicSolution det = deterministic_optimal(inst);
  return {{"lp",
           {{"revenue", lp.revenue},
            {"w", lp.mechanism.w},
            {"p", lp.mechanism.p}}},
          {"deterministic",
           {{"revenue", det.revenue},
            {"demands", det.demands},
            {"prices", det.prices}}},
          {"gap", lp.revenue - det.revenue}};
}

json cmd_simulate(const InstanceFile& file, const Options& opt) {
  const ProblemInstance& inst = continuous_or_throw(file);
  std::unique_ptr<Strategy> strategy;
  if (opt.strategy == "fixed") {
    std::vector<double> prices;
    if (!opt.prices_text.empty()) {
      prices = parse_price_list(opt.prices_text);
      if (static_cast<int>(prices.size()) != inst.k())
        throw std::invalid_argument("simulate: price count must equal k");
    } else {
      prices = maximize(inst).p_star.values();
    }
    strategy = make_fixed_strategy(std::move(prices));
  } else if (opt.strategy == "eps-grid") {
    strategy = make_eps_grid_strategy(inst.demands(), inst.v_bar(),
                                      opt.grid > 0 ? opt.grid : 8);
  } else if (opt.strategy == "two-point") {
    strategy = make_two_point_strategy(inst.demands(), inst.v_bar());
  } else {
    throw std::invalid_argument("simulate: unknown strategy '" + opt.strategy +
                                "'");
  }
  SimulationConfig cfg;
  cfg.rounds = opt.rounds;
  cfg.seed = opt.seed;
  const SimulationTrace trace = simulate(inst, *strategy, cfg);
  if (!opt.trace_path.empty()) {
    std::ofstream out(opt.trace_path, std::ios::binary);
    if (!out)
      throw std::invalid_argument("simulate: cannot write " + opt.trace_path);
    write_trace_csv(trace, out);
  }
  const RegretSummary reg = regret(trace, inst);
  return {{"strategy", trace.strategy_id},
          {"rounds", trace.rounds()},
          {"seed", trace.seed},
          {"realized_revenue", reg.realized_revenue},
          {"benchmark_revenue", reg.benchmark_revenue},
          {"cumulative_regret", reg.cumulative_regret},
          {"average_regret", reg.average_regret}};
}

void emit_report(const json& report, const Options& opt) {
  const std::string text = report.dump(2) + "\n";
  if (opt.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(opt.out_path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write " + opt.out_path);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  const auto t0 = std::chrono::steady_clock::now();
  CLI::App app{"Multi-unit posted-price menus: classification, optimization, "
               "discrete oracles, and dynamic pricing"};
  app.require_subcommand(1);

  Options opt;
  json (*handler)(const InstanceFile&, const Options&) = nullptr;

  auto add_common = [&opt](CLI::App* sub) {
    sub->add_option("--instance", opt.instance_path, "Instance file (JSON)")
        ->required()
        ->envname("MULTIUNIT_INSTANCE");
    sub->add_option("--out", opt.out_path, "Write the report here instead of stdout")
        ->envname("MULTIUNIT_OUT");
  };

  CLI::App* check = app.add_subcommand(
      "check-dmr", "Classify each marginal: decreasing marginal revenue and "
                   "regularity, with violation witnesses");
  add_common(check);

  CLI::App* revenue = app.add_subcommand(
      "revenue", "Evaluate the closed-form expected revenue of a menu");
  add_common(revenue);
  revenue->add_option("--prices", opt.prices_text, "Comma-separated menu p_1..p_k")
      ->envname("MULTIUNIT_PRICES");

  CLI::App* optimize =
      app.add_subcommand("optimize", "Find a revenue-maximizing menu");
  add_common(optimize);
  optimize->add_option("--tol", opt.tol, "Ascent convergence tolerance")
      ->envname("MULTIUNIT_TOL");
  optimize->add_option("--iters", opt.iters, "Ascent iteration budget")
      ->envname("MULTIUNIT_ITERS");
  optimize->add_option("--restarts", opt.restarts, "Random restarts")
      ->envname("MULTIUNIT_RESTARTS");
  optimize->add_option("--seed", opt.seed, "Restart seed")
      ->envname("MULTIUNIT_SEED");
  optimize->add_option("--grid", opt.grid, "Use lattice search at this resolution")
      ->envname("MULTIUNIT_GRID");
  optimize->add_flag("--k2", opt.use_k2, "Use the two-demand closed form")
      ->envname("MULTIUNIT_K2");

  CLI::App* oracle = app.add_subcommand(
      "oracle", "Discrete instance: LP-optimal mechanism, best deterministic "
                "menu, and the gap");
  add_common(oracle);

  CLI::App* simulate = app.add_subcommand(
      "simulate", "Run repeated posted-price rounds with a learning strategy");
  add_common(simulate);
  simulate->add_option("--strategy", opt.strategy,
                       "One of: fixed, eps-grid, two-point")
      ->envname("MULTIUNIT_STRATEGY");
  simulate->add_option("--rounds", opt.rounds, "Number of rounds")
      ->envname("MULTIUNIT_ROUNDS");
  simulate->add_option("--seed", opt.seed, "Simulation seed")
      ->envname("MULTIUNIT_SEED");
  simulate->add_option("--prices", opt.prices_text,
                       "Menu for the fixed strategy (default: optimized)")
      ->envname("MULTIUNIT_PRICES");
  simulate->add_option("--grid", opt.grid, "Arms per axis for eps-grid")
      ->envname("MULTIUNIT_GRID");
  simulate->add_option("--trace", opt.trace_path, "Write a per-round CSV here")
      ->envname("MULTIUNIT_TRACE");

  check->callback([&handler]() { handler = cmd_check_dmr; });
  revenue->callback([&handler]() { handler = cmd_revenue; });
  optimize->callback([&handler]() { handler = cmd_optimize; });
  oracle->callback([&handler]() { handler = cmd_oracle; });
  simulate->callback([&handler]() { handler = cmd_simulate; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const InstanceFile file = load_instance_file(opt.instance_path);
    json report = handler(file, opt);
    json full;
    full["command"] = app.get_subcommands().front()->get_name();
    full["instance_digest"] = hex_digest(digest64(canonical_text(file)));
    for (auto& item : report.items()) full[item.key()] = std::move(item.value());
    emit_report(full, opt);
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 3;
  }

  const auto t1 = std::chrono::steady_clock::now();
  std::fprintf(stderr, "wall_time_s %.3f\n",
               std::chrono::duration<double>(t1 - t0).count());
  return 0;
}
