#include "contests/designer.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace contests {

namespace {

const char* kObjectiveNames[kNumObjectives] = {
    "total_effort",   "total_welfare",  "lowest_effort",     "lowest_payoff",
    "highest_effort", "highest_payoff", "effort_inequality", "payoff_inequality",
};

}  // namespace

const char* objective_name(Objective o) {
  return kObjectiveNames[static_cast<int>(o)];
}

std::optional<Objective> objective_from_name(const std::string& name) {
  for (int i = 0; i < kNumObjectives; ++i)
    if (name == kObjectiveNames[i]) return static_cast<Objective>(i);
  return std::nullopt;
}

double ObjectiveReport::get(Objective o) const {
  switch (o) {
    case Objective::total_effort: return total_effort;
    case Objective::total_welfare: return total_welfare;
    case Objective::lowest_effort: return lowest_effort;
    case Objective::lowest_payoff: return lowest_payoff;
    case Objective::highest_effort: return highest_effort;
    case Objective::highest_payoff: return highest_payoff;
    case Objective::effort_inequality: return effort_inequality;
    case Objective::payoff_inequality: return payoff_inequality;
  }
  return 0.0;
}

ObjectiveReport objectives_from(const EquilibriumOutcome& out) {
  ObjectiveReport r;
  r.total_effort = out.X_star;
  r.total_welfare = out.welfare;
  r.highest_effort = out.period_efforts.front();
  r.highest_payoff = out.period_payoffs.front();
  r.lowest_effort = out.period_efforts.back();
  r.lowest_payoff = out.period_payoffs.back();
  r.effort_inequality = r.highest_effort - r.lowest_effort;
  r.payoff_inequality = r.highest_payoff - r.lowest_payoff;
  return r;
}

ObjectiveReport evaluate_objectives(const MarginalBenefit& m, const Contest& c,
                                    const SolveOptions& opts) {
  return objectives_from(solve_equilibrium(m, c, opts));
}

std::vector<ContestEval> evaluate_all(const MarginalBenefit& m, int n,
                                      const SearchOptions& opts,
                                      std::vector<std::string>* failures) {
  if (n < 1 || n > opts.max_n)
    throw std::invalid_argument("evaluate_all: n outside [1, " +
                                std::to_string(opts.max_n) + "]");
  const std::vector<Contest> all = enumerate_contests(n, opts.max_n);
  std::vector<std::optional<ContestEval>> slots(all.size());
  std::vector<std::string> errors(all.size());

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      try {
        EquilibriumOutcome out = solve_equilibrium(m, all[i], opts.solve);
        slots[i] = ContestEval{all[i], objectives_from(out)};
      } catch (const SolverError& e) {
        errors[i] = all[i].str() + ": " + e.what();
      }
    }
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || all.size() < 2) {
    work(0, all.size());
  } else {
    std::vector<std::thread> pool;
    const std::size_t J = std::min<std::size_t>(jobs, all.size());
    for (std::size_t t = 0; t < J; ++t)
      pool.emplace_back(work, all.size() * t / J, all.size() * (t + 1) / J);
    for (auto& th : pool) th.join();
  }

  std::vector<ContestEval> out;
  out.reserve(all.size());
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (slots[i])
      out.push_back(std::move(*slots[i]));
    else if (failures)
      failures->push_back(errors[i]);
  }
  return out;
}

namespace {

struct Extremum {
  double value = 0.0;
  std::vector<Contest> argopt;
};

Extremum extremum(const std::vector<ContestEval>& evals, Objective o, Direction dir,
                  double tie_tol) {
  Extremum ext;
  bool first = true;
  for (const auto& e : evals) {
    const double v = e.report.get(o);
    if (first || (dir == Direction::maximize ? v > ext.value : v < ext.value)) {
      ext.value = v;
      first = false;
    }
  }
  for (const auto& e : evals) {
    const double v = e.report.get(o);
    if (std::abs(v - ext.value) <= tie_tol) ext.argopt.push_back(e.contest);
  }
  return ext;
}

}  // namespace

SearchResult search(const MarginalBenefit& m, int n, Objective objective,
                    Direction direction, const SearchOptions& opts) {
  if (n < 2) throw std::invalid_argument("search: needs n >= 2");
  std::vector<std::string> failures;
  const auto evals = evaluate_all(m, n, opts, &failures);
  if (evals.empty()) throw SolverError("search: every contest failed to solve");
  Extremum ext = extremum(evals, objective, direction, opts.tie_tol);
  return SearchResult{objective, direction, ext.value, std::move(ext.argopt),
                      static_cast<int>(failures.size())};
}

namespace {

bool contains(const std::vector<Contest>& set, const Contest& c) {
  return std::find(set.begin(), set.end(), c) != set.end();
}

bool strictly_finer(const Contest& a, const Contest& b) {
  return !(a == b) && refines(a, b);
}

std::string set_str(const std::vector<Contest>& set) {
  std::string s = "{";
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (i) s += " ";
    s += "(" + set[i].str() + ")";
  }
  return s + "}";
}

}  // namespace

VerificationReport verify_propositions(const MarginalBenefit& m, int n_lo, int n_hi,
                                       const SearchOptions& opts) {
  if (n_lo < 2 || n_hi < n_lo)
    throw std::invalid_argument("verify_propositions: bad n range");
  VerificationReport report;
  for (int n = n_lo; n <= n_hi; ++n) {
    std::vector<std::string> failures;
    const auto evals = evaluate_all(m, n, opts, &failures);
    const Contest seq = Contest::sequential(n);
    const Contest sim = Contest::simultaneous(n);

    auto ext = [&](Objective o, Direction d) { return extremum(evals, o, d, opts.tie_tol); };
    // an objective that is constant across the whole search space carries no
    // information about its maximizers (happens for Tullock n = 2, where the
    // higher-order substitutability condition fails and everything ties)
    auto degenerate = [&](Objective o) {
      const double lo = ext(o, Direction::minimize).value;
      const double hi = ext(o, Direction::maximize).value;
      return hi - lo <= opts.tie_tol;
    };

    auto make_check = [&](const char* id) {
      PropositionCheck pc;
      pc.proposition = id;
      pc.n = n;
      if (!failures.empty())
        pc.notes.push_back(std::to_string(failures.size()) + " contests failed to solve");
      return pc;
    };
    auto require = [](PropositionCheck& pc, bool ok, const std::string& what) {
      if (!ok) {
        pc.pass = false;
        pc.notes.push_back("FAIL: " + what);
      }
    };

    // P1: total effort is minimized by the simultaneous and maximized by the
    // sequential contest; total welfare the other way around.
    {
      PropositionCheck pc = make_check("P1");
      const auto xmax = ext(Objective::total_effort, Direction::maximize);
      const auto xmin = ext(Objective::total_effort, Direction::minimize);
      const auto wmax = ext(Objective::total_welfare, Direction::maximize);
      const auto wmin = ext(Objective::total_welfare, Direction::minimize);
      require(pc, contains(xmax.argopt, seq), "sequential does not attain max total effort");
      require(pc, contains(xmin.argopt, sim), "simultaneous does not attain min total effort");
      require(pc, contains(wmin.argopt, seq), "sequential does not attain min welfare");
      require(pc, contains(wmax.argopt, sim), "simultaneous does not attain max welfare");
      pc.witnesses.push_back("argmax(total_effort) = " + set_str(xmax.argopt));
      pc.witnesses.push_back("argmin(total_effort) = " + set_str(xmin.argopt));
      report.checks.push_back(std::move(pc));
    }

    // P2: lowest effort and lowest payoff are minimized by the sequential and
    // maximized by the simultaneous contest.
    {
      PropositionCheck pc = make_check("P2");
      for (Objective o : {Objective::lowest_effort, Objective::lowest_payoff}) {
        require(pc, contains(ext(o, Direction::minimize).argopt, seq),
                std::string(objective_name(o)) + ": sequential does not attain min");
        require(pc, contains(ext(o, Direction::maximize).argopt, sim),
                std::string(objective_name(o)) + ": simultaneous does not attain max");
      }
      report.checks.push_back(std::move(pc));
    }

    const auto x1max = ext(Objective::highest_effort, Direction::maximize);
    const auto u1max = ext(Objective::highest_payoff, Direction::maximize);
    const auto dxmax = ext(Objective::effort_inequality, Direction::maximize);
    const auto dumax = ext(Objective::payoff_inequality, Direction::maximize);

    // P3: the simultaneous contest minimizes the highest effort; any
    // maximizer has a single leader.
    {
      PropositionCheck pc = make_check("P3");
      require(pc, contains(ext(Objective::highest_effort, Direction::minimize).argopt, sim),
              "simultaneous does not attain min highest effort");
      if (degenerate(Objective::highest_effort)) {
        pc.notes.push_back("maximizer structure skipped: highest effort constant across contests");
      } else {
        for (const Contest& c : x1max.argopt)
          require(pc, c.periods()[0] == 1,
                  "highest-effort maximizer (" + c.str() + ") has n1 != 1");
      }
      pc.witnesses.push_back("argmax(highest_effort) = " + set_str(x1max.argopt));
      report.checks.push_back(std::move(pc));
    }

    // P4: any minimizer of the highest payoff has a weakly largest first
    // period; any maximizer has a single leader and is not strictly more
    // informative than any highest-effort maximizer.
    {
      PropositionCheck pc = make_check("P4");
      if (degenerate(Objective::highest_payoff)) {
        pc.notes.push_back("structure checks skipped: highest payoff constant across contests");
      } else {
        for (const Contest& c : ext(Objective::highest_payoff, Direction::minimize).argopt)
          for (int nt : c.periods())
            require(pc, c.periods()[0] >= nt,
                    "highest-payoff minimizer (" + c.str() + ") has n1 < some n_t");
        for (const Contest& c : u1max.argopt) {
          require(pc, c.periods()[0] == 1,
                  "highest-payoff maximizer (" + c.str() + ") has n1 != 1");
          for (const Contest& hx : x1max.argopt)
            require(pc, !strictly_finer(c, hx),
                    "highest-payoff maximizer (" + c.str() +
                        ") is more informative than highest-effort maximizer (" + hx.str() +
                        ")");
        }
      }
      pc.witnesses.push_back("argmin(highest_payoff) = " +
                             set_str(ext(Objective::highest_payoff, Direction::minimize).argopt));
      pc.witnesses.push_back("argmax(highest_payoff) = " + set_str(u1max.argopt));
      report.checks.push_back(std::move(pc));
    }

    // P5: the simultaneous contest minimizes both inequalities; the
    // effort-inequality maximizer has a single leader and is not strictly
    // less informative than any highest-effort maximizer; the
    // payoff-inequality maximizer has a single leader and sits between the
    // highest-payoff and effort-inequality maximizers in the refinement order.
    {
      PropositionCheck pc = make_check("P5");
      require(pc, contains(ext(Objective::effort_inequality, Direction::minimize).argopt, sim),
              "simultaneous does not attain min effort inequality");
      require(pc, contains(ext(Objective::payoff_inequality, Direction::minimize).argopt, sim),
              "simultaneous does not attain min payoff inequality");
      if (degenerate(Objective::effort_inequality)) {
        pc.notes.push_back("structure checks skipped: effort inequality constant across contests");
      } else {
        for (const Contest& c : dxmax.argopt) {
          require(pc, c.periods()[0] == 1,
                  "effort-inequality maximizer (" + c.str() + ") has n1 != 1");
          for (const Contest& hx : x1max.argopt)
            require(pc, !strictly_finer(hx, c),
                    "effort-inequality maximizer (" + c.str() +
                        ") is less informative than highest-effort maximizer (" + hx.str() +
                        ")");
        }
      }
      if (degenerate(Objective::payoff_inequality)) {
        pc.notes.push_back("structure checks skipped: payoff inequality constant across contests");
      } else {
        for (const Contest& c : dumax.argopt) {
          require(pc, c.periods()[0] == 1,
                  "payoff-inequality maximizer (" + c.str() + ") has n1 != 1");
          for (const Contest& hu : u1max.argopt)
            require(pc, !strictly_finer(hu, c),
                    "payoff-inequality maximizer (" + c.str() +
                        ") is less informative than highest-payoff maximizer (" + hu.str() +
                        ")");
          for (const Contest& dx : dxmax.argopt)
            require(pc, !strictly_finer(c, dx),
                    "payoff-inequality maximizer (" + c.str() +
                        ") is more informative than effort-inequality maximizer (" + dx.str() +
                        ")");
        }
      }
      pc.witnesses.push_back("argmax(effort_inequality) = " + set_str(dxmax.argopt));
      pc.witnesses.push_back("argmax(payoff_inequality) = " + set_str(dumax.argopt));
      report.checks.push_back(std::move(pc));
    }
  }
  for (const auto& pc : report.checks) report.all_pass = report.all_pass && pc.pass;
  return report;
}

}  // namespace contests
