#include "contests/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "contests/asymptotics.hpp"
#include "contests/designer.hpp"
#include "contests/oracle.hpp"

namespace contests {

namespace {

using nlohmann::json;

MarginalBenefit model_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "tullock") return make_tullock(j.at("v").get<double>(), j.at("c").get<double>());
  if (family == "linear")
    return make_linear(j.at("a").get<double>(), j.at("xbar").get<double>());
  if (family == "exponential")
    return make_exponential(j.at("a").get<double>(), j.at("b").get<double>(),
                            j.at("c").get<double>());
  if (family == "expdecay")
    return make_exp_decay(j.at("a").get<double>(), j.at("b").get<double>(),
                          j.at("c").get<double>());
  throw std::invalid_argument("unknown model family '" + family + "'");
}

std::vector<double> parse_params(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    out.push_back(std::stod(text.substr(pos, comma - pos)));
    pos = comma + 1;
    if (comma == text.size()) break;
  }
  return out;
}

}  // namespace

MarginalBenefit parse_model(const std::string& spec) {
  if (!spec.empty() && spec.front() == '{') return model_from_json(json::parse(spec));
  if (spec.size() > 5 && spec.ends_with(".json")) {
    std::ifstream in(spec);
    if (!in) throw std::invalid_argument("cannot open model file '" + spec + "'");
    json j;
    in >> j;
    return model_from_json(j);
  }
  const std::size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("model literal needs 'family:params', got '" + spec + "'");
  const std::string family = spec.substr(0, colon);
  const std::vector<double> p = parse_params(spec.substr(colon + 1));
  auto need = [&](std::size_t k) {
    if (p.size() != k)
      throw std::invalid_argument("model '" + family + "' needs " + std::to_string(k) +
                                  " parameters");
  };
  if (family == "tullock") { need(2); return make_tullock(p[0], p[1]); }
  if (family == "linear") { need(2); return make_linear(p[0], p[1]); }
  if (family == "exponential") { need(3); return make_exponential(p[0], p[1], p[2]); }
  if (family == "expdecay") { need(3); return make_exp_decay(p[0], p[1], p[2]); }
  throw std::invalid_argument("unknown model family '" + family + "'");
}

std::pair<int, int> parse_n_range(const std::string& text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string::npos) {
    const int n = std::stoi(text);
    return {n, n};
  }
  const int lo = std::stoi(text.substr(0, dots));
  const int hi = std::stoi(text.substr(dots + 2));
  if (hi < lo) throw std::invalid_argument("empty n range '" + text + "'");
  return {lo, hi};
}

std::string fmt_g12(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

int env_max_n() {
  if (const char* s = std::getenv("CONTEST_MAX_N")) {
    const int v = std::atoi(s);
    if (v >= 1) return std::min(v, kMaxTotalPlayers);
  }
  return 16;
}

json flags_json(const AssumptionFlags& f) {
  return json{{"assumption1_ok", f.assumption1_ok},
              {"assumption2_ok", f.assumption2_ok},
              {"root_bracket", {f.root_bracket[0], f.root_bracket[1]}},
              {"residual", f.residual},
              {"degenerate_boundary", f.degenerate_boundary}};
}

json outcome_json(const EquilibriumOutcome& out) {
  return json{{"contest", out.contest.periods()},
              {"contest_id", out.contest.id()},
              {"X_star", out.X_star},
              {"efforts", out.period_efforts},
              {"payoffs", out.period_payoffs},
              {"welfare", out.welfare},
              {"flags", flags_json(out.flags)}};
}

json objectives_json(const ObjectiveReport& r) {
  json j;
  for (int i = 0; i < kNumObjectives; ++i) {
    const auto o = static_cast<Objective>(i);
    j[objective_name(o)] = r.get(o);
  }
  return j;
}

std::string join_semicolon(const std::vector<double>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ';';
    s += fmt_g12(v[i]);
  }
  return s;
}

void write_text(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << body;
}

void emit(const std::string& out_path, const std::string& body) {
  if (out_path.empty())
    std::cout << body;
  else
    write_text(out_path, body);
}

struct CommonArgs {
  std::string model_spec;
  std::string contest_literal;
  std::string n_range;
  std::string out_path;
  std::string format = "csv";
  int grid = 0;
  double tol = 0.0;
  int jobs = 0;
};

SolveOptions solve_opts(const CommonArgs& a) {
  SolveOptions s;
  if (a.grid > 0) s.scan_points = a.grid;
  if (a.tol > 0) s.root_tol = a.tol;
  return s;
}

SearchOptions search_opts(const CommonArgs& a) {
  SearchOptions s;
  s.solve = solve_opts(a);
  s.max_n = env_max_n();
  s.jobs = a.jobs > 0 ? a.jobs
                      : std::max(1u, std::thread::hardware_concurrency());
  return s;
}

int cmd_solve(const CommonArgs& a) {
  const MarginalBenefit m = parse_model(a.model_spec);
  const Contest c = Contest::parse(a.contest_literal);
  const EquilibriumOutcome out = solve_equilibrium(m, c, solve_opts(a));
  const ObjectiveReport rep = objectives_from(out);
  if (a.format == "json") {
    json j = outcome_json(out);
    j["objectives"] = objectives_json(rep);
    emit(a.out_path, j.dump(2) + "\n");
  } else {
    std::string s =
        "n,contest_id,composition,X_star,welfare,h_star,efforts,payoffs,"
        "assumption1_ok,assumption2_ok,degenerate,residual\n";
    const double h_star = out.X_star > 0 ? m.h(out.X_star) : 0.0;
    s += std::to_string(c.n()) + "," + std::to_string(c.id()) + ",\"" + c.str() + "\"," +
         fmt_g12(out.X_star) + "," + fmt_g12(out.welfare) + "," + fmt_g12(h_star) + "," +
         join_semicolon(out.period_efforts) + "," + join_semicolon(out.period_payoffs) +
         "," + std::to_string(int(out.flags.assumption1_ok)) + "," +
         std::to_string(int(out.flags.assumption2_ok)) + "," +
         std::to_string(int(out.flags.degenerate_boundary)) + "," +
         fmt_g12(out.flags.residual) + "\n";
    emit(a.out_path, s);
  }
  return kExitOk;
}

int cmd_search(const CommonArgs& a, const std::string& objective_name_arg,
               const std::string& dir_arg) {
  const MarginalBenefit m = parse_model(a.model_spec);
  const auto obj = objective_from_name(objective_name_arg);
  if (!obj) throw std::invalid_argument("unknown objective '" + objective_name_arg + "'");
  const Direction dir = dir_arg == "max" ? Direction::maximize : Direction::minimize;
  const auto [n_lo, n_hi] = parse_n_range(a.n_range);
  const SearchOptions opts = search_opts(a);

  std::string table =
      "n,contest_id,composition,total_effort,total_welfare,lowest_effort,lowest_payoff,"
      "highest_effort,highest_payoff,effort_inequality,payoff_inequality\n";
  for (int n = n_lo; n <= n_hi; ++n) {
    const SearchResult res = search(m, n, *obj, dir, opts);
    std::cout << objective_name_arg << " " << dir_arg << " n=" << n
              << " optimum=" << fmt_g12(res.optimal_value) << " argopt=";
    for (std::size_t i = 0; i < res.argopt.size(); ++i)
      std::cout << (i ? " " : "") << "(" << res.argopt[i].str() << ")";
    if (res.failures) std::cout << " [" << res.failures << " solver failures]";
    std::cout << "\n";
    if (!a.out_path.empty()) {
      auto evals = evaluate_all(m, n, opts);
      std::sort(evals.begin(), evals.end(), [](const ContestEval& x, const ContestEval& y) {
        return x.contest.id() < y.contest.id();
      });
      for (const auto& e : evals) {
        table += std::to_string(n) + "," + std::to_string(e.contest.id()) + ",\"" +
                 e.contest.str() + "\"";
        for (int i = 0; i < kNumObjectives; ++i)
          table += "," + fmt_g12(e.report.get(static_cast<Objective>(i)));
        table += "\n";
      }
    }
  }
  if (!a.out_path.empty()) write_text(a.out_path, table);
  return kExitOk;
}

int cmd_verify(const CommonArgs& a) {
  const MarginalBenefit m = parse_model(a.model_spec);
  const auto [n_lo, n_hi] = parse_n_range(a.n_range);
  const VerificationReport rep = verify_propositions(m, n_lo, n_hi, search_opts(a));
  json results = json::array();
  for (const auto& pc : rep.checks) {
    std::cout << pc.proposition << " n=" << pc.n << " " << (pc.pass ? "PASS" : "FAIL");
    for (const auto& note : pc.notes) std::cout << " | " << note;
    std::cout << "\n";
    results.push_back(json{{"proposition", pc.proposition},
                           {"n", pc.n},
                           {"status", pc.pass ? "PASS" : "FAIL"},
                           {"notes", pc.notes},
                           {"witnesses", pc.witnesses}});
  }
  std::cout << (rep.all_pass ? "ALL PASS" : "FAILURES PRESENT") << "\n";
  if (!a.out_path.empty()) {
    json j{{"model", a.model_spec},
           {"n_lo", n_lo},
           {"n_hi", n_hi},
           {"results", results},
           {"overall", rep.all_pass ? "PASS" : "FAIL"}};
    write_text(a.out_path, j.dump(2) + "\n");
  }
  return rep.all_pass ? kExitOk : kExitVerification;
}

struct FigurePanel {
  const char* file;
  Objective objective;
};

constexpr FigurePanel kPanels[] = {
    {"figure1a.csv", Objective::highest_effort},
    {"figure1b.csv", Objective::highest_payoff},
    {"figure2a.csv", Objective::total_effort},
    {"figure2b.csv", Objective::total_welfare},
    {"figure3a.csv", Objective::effort_inequality},
    {"figure3b.csv", Objective::payoff_inequality},
    {"figure4a.csv", Objective::lowest_effort},
    {"figure4b.csv", Objective::lowest_payoff},
};

bool is_leader_pairwise(const Contest& c) {
  const auto& p = c.periods();
  if (p[0] != 1 || c.num_periods() < 2) return false;
  int ones = 0, twos = 0;
  for (std::size_t t = 1; t < p.size(); ++t) {
    if (p[t] == 1) ++ones;
    else if (p[t] == 2) ++twos;
    else return false;
  }
  return c.n() % 2 == 1 ? ones == 0 : ones == 1;
}

bool is_two_then_singletons(const Contest& c) {
  const auto& p = c.periods();
  if (p[0] != 2) return false;
  for (std::size_t t = 1; t < p.size(); ++t)
    if (p[t] != 1) return false;
  return true;
}

int cmd_figures(const CommonArgs& a) {
  const MarginalBenefit m = parse_model(a.model_spec);
  const auto [n_lo, n_hi] = parse_n_range(a.n_range);
  const SearchOptions opts = search_opts(a);
  const std::filesystem::path dir = a.out_path.empty() ? "." : a.out_path;
  std::filesystem::create_directories(dir);

  const std::string header =
      "n,contest_id,composition,value,is_sequential,is_simultaneous,is_first_mover,"
      "is_leader_pairwise,is_two_then_singletons\n";
  std::vector<std::string> bodies(std::size(kPanels), header);

  for (int n = n_lo; n <= n_hi; ++n) {
    auto evals = evaluate_all(m, n, opts);
    std::sort(evals.begin(), evals.end(), [](const ContestEval& x, const ContestEval& y) {
      return x.contest.id() < y.contest.id();
    });
    for (const auto& e : evals) {
      const Contest& c = e.contest;
      const std::string markers =
          "," + std::to_string(int(c.num_periods() == c.n())) +
          "," + std::to_string(int(c.num_periods() == 1)) +
          "," + std::to_string(int(c.n() >= 2 && c == Contest::first_mover(c.n()))) +
          "," + std::to_string(int(is_leader_pairwise(c))) +
          "," + std::to_string(int(is_two_then_singletons(c)));
      const std::string prefix = std::to_string(n) + "," + std::to_string(c.id()) + ",\"" +
                                 c.str() + "\",";
      for (std::size_t p = 0; p < std::size(kPanels); ++p)
        bodies[p] += prefix + fmt_g12(e.report.get(kPanels[p].objective)) + markers + "\n";
    }
  }
  for (std::size_t p = 0; p < std::size(kPanels); ++p) {
    const auto path = dir / kPanels[p].file;
    write_text(path.string(), bodies[p]);
    std::cout << path.string() << "\n";
  }
  return kExitOk;
}

int cmd_oracle_check(const CommonArgs& a) {
  const MarginalBenefit m = parse_model(a.model_spec);
  const Contest c = Contest::parse(a.contest_literal);
  OracleConfig cfg;
  if (a.grid > 0) cfg.grid_points = a.grid;
  const EquilibriumOutcome grid = oracle_solve(m, c, cfg);
  const EquilibriumOutcome exact = solve_equilibrium(m, c, solve_opts(a));
  const double step = m.xbar() / (cfg.grid_points - 1);
  const double bound = 2.0 * step;

  double worst = std::abs(grid.X_star - exact.X_star);
  std::string csv =
      "composition,grid_points,period,n_t,x_oracle,x_exact,dx,X_oracle,X_exact,dX\n";
  for (int t = 0; t < c.num_periods(); ++t) {
    const double dx = std::abs(grid.period_efforts[t] - exact.period_efforts[t]);
    worst = std::max(worst, dx);
    csv += "\"" + c.str() + "\"," + std::to_string(cfg.grid_points) + "," +
           std::to_string(t + 1) + "," + std::to_string(c.periods()[t]) + "," +
           fmt_g12(grid.period_efforts[t]) + "," + fmt_g12(exact.period_efforts[t]) + "," +
           fmt_g12(dx) + "," + fmt_g12(grid.X_star) + "," + fmt_g12(exact.X_star) + "," +
           fmt_g12(std::abs(grid.X_star - exact.X_star)) + "\n";
  }
  if (!a.out_path.empty()) write_text(a.out_path, csv);
  std::cout << "contest (" << c.str() << "): oracle X*=" << fmt_g12(grid.X_star)
            << " exact X*=" << fmt_g12(exact.X_star) << " worst |diff|=" << fmt_g12(worst)
            << " bound=" << fmt_g12(bound) << " -> " << (worst <= bound ? "PASS" : "FAIL")
            << "\n";
  return worst <= bound ? kExitOk : kExitVerification;
}

int cmd_asymptotics(const CommonArgs& a) {
  const MarginalBenefit m = parse_model(a.model_spec);
  std::vector<Contest> contests;
  if (!a.contest_literal.empty()) {
    contests.push_back(Contest::parse(a.contest_literal));
  } else if (!a.n_range.empty()) {
    const auto [n_lo, n_hi] = parse_n_range(a.n_range);
    for (int n = n_lo; n <= n_hi; ++n) contests.push_back(Contest::sequential(n));
  } else {
    throw std::invalid_argument("asymptotics needs --contest or --n");
  }
  std::string csv =
      "n,contest_id,composition,period,n_t,exact_effort,approx_effort,exact_X,approx_X,"
      "exact_h,approx_h\n";
  for (const Contest& c : contests) {
    const EquilibriumOutcome exact = solve_equilibrium(m, c, solve_opts(a));
    const ApproxOutcome approx = approx_equilibrium(m, c);
    const double h_exact = exact.X_star > 0 ? m.h(exact.X_star) : 0.0;
    for (int t = 0; t < c.num_periods(); ++t)
      csv += std::to_string(c.n()) + "," + std::to_string(c.id()) + ",\"" + c.str() +
             "\"," + std::to_string(t + 1) + "," + std::to_string(c.periods()[t]) + "," +
             fmt_g12(exact.period_efforts[t]) + "," + fmt_g12(approx.approx_efforts[t]) +
             "," + fmt_g12(exact.X_star) + "," + fmt_g12(approx.approx_X) + "," +
             fmt_g12(h_exact) + "," + fmt_g12(approx.approx_h) + "\n";
    std::cout << "(" << c.str() << "): exact X*=" << fmt_g12(exact.X_star)
              << " approx X=" << fmt_g12(approx.approx_X)
              << " |gap|=" << fmt_g12(std::abs(exact.X_star - approx.approx_X)) << "\n";
  }
  if (!a.out_path.empty()) write_text(a.out_path, csv);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Sequential-contest equilibrium solver and disclosure-design search"};
  app.require_subcommand(1);
  CommonArgs args;

  auto add_common = [&](CLI::App* sub, bool needs_model = true) {
    auto* opt = sub->add_option("--model", args.model_spec,
                                "model literal family:p1,p2[,p3], inline JSON, or .json path");
    if (needs_model) opt->required();
    sub->add_option("--out", args.out_path, "output file (or directory for figures)");
    sub->add_option("--format", args.format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--grid", args.grid, "scan grid points (oracle: effort grid points)");
    sub->add_option("--tol", args.tol, "root bisection tolerance");
    sub->add_option("--jobs", args.jobs, "parallel workers (default: hardware threads)");
  };

  auto* solve = app.add_subcommand("solve", "equilibrium of one contest");
  add_common(solve);
  solve->add_option("--contest", args.contest_literal, "composition, e.g. 1,2,2")->required();

  auto* search_cmd = app.add_subcommand("search", "exhaustive search over compositions");
  add_common(search_cmd);
  std::string objective_arg, dir_arg = "max";
  search_cmd->add_option("--n", args.n_range, "player count or range, e.g. 7 or 2..12")
      ->required();
  search_cmd->add_option("--objective", objective_arg, "one of the eight objectives")
      ->required();
  search_cmd->add_option("--dir", dir_arg, "min|max")->check(CLI::IsMember({"min", "max"}));

  auto* verify = app.add_subcommand("verify", "check the optimal-contest propositions");
  add_common(verify);
  verify->add_option("--n", args.n_range, "range, e.g. 2..12")->required();

  auto* figures = app.add_subcommand("figures", "per-contest objective tables as CSV");
  add_common(figures);
  figures->add_option("--n", args.n_range, "range, e.g. 2..12")->required();

  auto* oracle = app.add_subcommand("oracle-check", "grid oracle vs characterization");
  add_common(oracle);
  oracle->add_option("--contest", args.contest_literal, "composition (n <= 4)")->required();

  auto* asym = app.add_subcommand("asymptotics", "competitive-limit approximation vs exact");
  add_common(asym);
  asym->add_option("--contest", args.contest_literal, "composition");
  asym->add_option("--n", args.n_range, "range of sequential contests");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(args);
    if (search_cmd->parsed()) return cmd_search(args, objective_arg, dir_arg);
    if (verify->parsed()) return cmd_verify(args);
    if (figures->parsed()) return cmd_figures(args);
    if (oracle->parsed()) return cmd_oracle_check(args);
    if (asym->parsed()) return cmd_asymptotics(args);
  } catch (const SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return kExitSolver;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace contests
