#include <doctest.h>

#include <cmath>

#include "contests/designer.hpp"

using namespace contests;

namespace {

MarginalBenefit tullock11() { return make_tullock(1.0, 1.0); }

bool argopt_is(const SearchResult& r, std::initializer_list<Contest> expect) {
  if (r.argopt.size() != expect.size()) return false;
  for (const auto& c : expect)
    if (std::find(r.argopt.begin(), r.argopt.end(), c) == r.argopt.end()) return false;
  return true;
}

}  // namespace

TEST_SUITE("designer") {

TEST_CASE("objective report for the published three-player contests") {
  const auto m = tullock11();
  const auto fm = evaluate_objectives(m, Contest({1, 2}));
  CHECK(fm.effort_inequality == doctest::Approx(0.1875).epsilon(1e-9));
  CHECK(fm.highest_effort == doctest::Approx(0.375).epsilon(1e-9));
  CHECK(fm.lowest_effort == doctest::Approx(0.1875).epsilon(1e-9));
  // h(X*) = 1/3 at X* = 3/4
  CHECK(fm.payoff_inequality ==
        doctest::Approx(fm.effort_inequality / 3.0).epsilon(1e-8));

  const auto seq = evaluate_objectives(m, Contest({1, 1, 1}));
  CHECK(seq.effort_inequality == doctest::Approx(0.1925).epsilon(5e-4));
  // h at the sequential equilibrium ~0.2679
  CHECK(seq.payoff_inequality / seq.effort_inequality ==
        doctest::Approx(0.2679).epsilon(5e-4));

  const auto sim = evaluate_objectives(m, Contest({3}));
  CHECK(sim.effort_inequality == doctest::Approx(0.0));
  CHECK(sim.payoff_inequality == doctest::Approx(0.0));
  CHECK(sim.highest_effort == doctest::Approx(sim.lowest_effort));
}

TEST_CASE("payoff inequality equals effort inequality times h(X*)") {
  for (const auto& m : {tullock11(), make_linear(1.0, 1.0)}) {
    for (int n = 2; n <= 7; ++n)
      for (const auto& e : evaluate_all(m, n)) {
        const double h_star = m.h(e.report.total_effort);
        CHECK(std::abs(e.report.payoff_inequality -
                       e.report.effort_inequality * h_star) < 1e-8);
        CHECK(e.report.highest_effort >= e.report.lowest_effort);
        CHECK(e.report.highest_payoff >= e.report.lowest_payoff);
        CHECK(e.report.effort_inequality >= 0.0);
        CHECK(e.report.payoff_inequality >= 0.0);
      }
  }
}

TEST_CASE("lowest effort equals g_1(X*): decreasing along refinement chains") {
  const auto m = tullock11();
  for (int n : {3, 5}) {
    const auto evals = evaluate_all(m, n);
    for (const auto& a : evals)
      for (const auto& b : evals) {
        if (a.contest == b.contest || !refines(a.contest, b.contest)) continue;
        CHECK(a.report.lowest_effort < b.report.lowest_effort);
        CHECK(a.report.total_welfare < b.report.total_welfare);
      }
  }
}

TEST_CASE("search: published argopt sets at n = 3") {
  const auto m = tullock11();
  CHECK(argopt_is(search(m, 3, Objective::total_effort, Direction::maximize),
                  {Contest({1, 1, 1})}));
  CHECK(argopt_is(search(m, 3, Objective::total_effort, Direction::minimize),
                  {Contest({3})}));
  CHECK(argopt_is(search(m, 3, Objective::highest_payoff, Direction::minimize),
                  {Contest({2, 1})}));
  CHECK(argopt_is(search(m, 3, Objective::highest_payoff, Direction::maximize),
                  {Contest({1, 2})}));
  CHECK(argopt_is(search(m, 3, Objective::highest_effort, Direction::maximize),
                  {Contest({1, 2})}));
  CHECK(argopt_is(search(m, 3, Objective::effort_inequality, Direction::maximize),
                  {Contest({1, 1, 1})}));
  CHECK(argopt_is(search(m, 3, Objective::payoff_inequality, Direction::maximize),
                  {Contest({1, 2})}));
}

TEST_CASE("search: leader-with-pairwise-followers maximizes the highest effort") {
  const auto m = tullock11();
  CHECK(argopt_is(search(m, 5, Objective::highest_effort, Direction::maximize),
                  {Contest({1, 2, 2})}));
  // even n: the location of the second singleton is irrelevant
  CHECK(argopt_is(search(m, 4, Objective::highest_effort, Direction::maximize),
                  {Contest({1, 1, 2}), Contest({1, 2, 1})}));
}

TEST_CASE("search space for n = 2 and degenerate Tullock ties") {
  const auto m = tullock11();
  const auto r = search(m, 2, Objective::total_effort, Direction::maximize);
  CHECK(argopt_is(r, {Contest({2}), Contest({1, 1})}));  // everything ties at n = 2
  CHECK(r.optimal_value == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.failures == 0);
}

TEST_CASE("search is deterministic") {
  const auto m = tullock11();
  const auto a = search(m, 6, Objective::payoff_inequality, Direction::maximize);
  const auto b = search(m, 6, Objective::payoff_inequality, Direction::maximize);
  CHECK(a.optimal_value == b.optimal_value);
  REQUIRE(a.argopt.size() == b.argopt.size());
  for (std::size_t i = 0; i < a.argopt.size(); ++i) CHECK(a.argopt[i] == b.argopt[i]);
}

TEST_CASE("parallel evaluation matches single-threaded evaluation exactly") {
  const auto m = tullock11();
  SearchOptions serial, parallel;
  parallel.jobs = 8;
  const auto a = evaluate_all(m, 7, serial);
  const auto b = evaluate_all(m, 7, parallel);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].contest == b[i].contest);
    for (int o = 0; o < kNumObjectives; ++o)
      CHECK(a[i].report.get(static_cast<Objective>(o)) ==
            b[i].report.get(static_cast<Objective>(o)));
  }
}

TEST_CASE("verify_propositions: Tullock passes on 2..8") {
  const auto rep = verify_propositions(tullock11(), 2, 8);
  for (const auto& pc : rep.checks) {
    INFO(pc.proposition, " n=", pc.n);
    for (const auto& note : pc.notes) INFO(note);
    CHECK(pc.pass);
  }
  CHECK(rep.all_pass);
  // five propositions per n
  CHECK(rep.checks.size() == 5 * 7);
}

TEST_CASE("verify_propositions: linear benefit passes and keeps exact ties") {
  const auto rep = verify_propositions(make_linear(1.0, 1.0), 2, 6);
  CHECK(rep.all_pass);
}

TEST_CASE("first-mover contest maximizes highest payoff and payoff inequality") {
  const auto m = tullock11();
  for (int n = 3; n <= 8; ++n) {
    CHECK(argopt_is(search(m, n, Objective::highest_payoff, Direction::maximize),
                    {Contest::first_mover(n)}));
    CHECK(argopt_is(search(m, n, Objective::payoff_inequality, Direction::maximize),
                    {Contest::first_mover(n)}));
    CHECK(argopt_is(search(m, n, Objective::effort_inequality, Direction::maximize),
                    {Contest::sequential(n)}));
    std::vector<int> two_then_ones{2};
    two_then_ones.insert(two_then_ones.end(), n - 2, 1);
    CHECK(argopt_is(search(m, n, Objective::highest_payoff, Direction::minimize),
                    {Contest(two_then_ones)}));
  }
}

TEST_CASE("objective names round-trip") {
  for (int i = 0; i < kNumObjectives; ++i) {
    const auto o = static_cast<Objective>(i);
    CHECK(objective_from_name(objective_name(o)) == o);
  }
  CHECK(!objective_from_name("not_an_objective").has_value());
}

}  // TEST_SUITE
