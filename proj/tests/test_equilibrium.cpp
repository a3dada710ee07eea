#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "contests/equilibrium.hpp"

using namespace contests;

namespace {

const double kSqrt3 = std::sqrt(3.0);

MarginalBenefit tullock11() { return make_tullock(1.0, 1.0); }
MarginalBenefit linear11() { return make_linear(1.0, 1.0); }

// h = (2^-X - 2^-1)/log 2; expected values frozen from a 40-digit
// backward-induction-validated solve of the same game
MarginalBenefit exp_decay_instance() {
  const double ln2 = std::log(2.0);
  return make_exp_decay(1.0 / ln2, 2.0, 0.5 / ln2);
}

}  // namespace

TEST_SUITE("equilibrium") {

TEST_CASE("inverted best responses f_t") {
  const auto m = tullock11();
  // f_0 for the simultaneous 3-contest: X - 3 X(1-X); root at 2/3
  CHECK(std::abs(eval_f(m, Contest({3}), 0, 2.0 / 3.0)) < 1e-12);
  // f_T is the identity
  CHECK(eval_f(m, Contest({1, 2}), 2, 0.4) == doctest::Approx(0.4));
  CHECK(eval_f(linear11(), Contest({2, 1}), 2, 0.4) == doctest::Approx(0.4));
  // total equilibrium effort of (1,2) solves f_0 = 0
  CHECK(std::abs(eval_f(m, Contest({1, 2}), 0, 0.75)) < 1e-12);
  CHECK_THROWS_AS((eval_f(m, Contest({1, 2}), 3, 0.5)), std::out_of_range);
}

TEST_CASE("total effort: published three-player values") {
  const auto m = tullock11();
  CHECK(solve_total_effort(m, Contest({1, 2})) == doctest::Approx(0.75).epsilon(1e-10));
  CHECK(solve_total_effort(m, Contest({2, 1})) == doctest::Approx(0.75).epsilon(1e-10));
  CHECK(solve_total_effort(m, Contest({1, 1, 1})) ==
        doctest::Approx(0.5 + kSqrt3 / 6.0).epsilon(1e-10));  // ~0.7887
  CHECK(solve_total_effort(m, Contest({3})) ==
        doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(solve_total_effort(linear11(), Contest({1})) ==
        doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("full equilibrium: first-mover Tullock contest (1,2)") {
  const auto out = solve_equilibrium(tullock11(), Contest({1, 2}));
  CHECK(out.X_star == doctest::Approx(0.75).epsilon(1e-10));
  CHECK(out.period_efforts[0] == doctest::Approx(0.375).epsilon(1e-10));
  CHECK(out.period_efforts[1] == doctest::Approx(0.1875).epsilon(1e-10));
  CHECK(out.period_payoffs[0] == doctest::Approx(0.125).epsilon(1e-8));
  CHECK(out.welfare == doctest::Approx(0.25).epsilon(1e-8));
  CHECK(out.flags.assumption1_ok);
  CHECK(out.flags.assumption2_ok);
  CHECK(!out.flags.degenerate_boundary);
}

TEST_CASE("full equilibrium: sequential Tullock contest (1,1,1)") {
  const auto out = solve_equilibrium(tullock11(), Contest({1, 1, 1}));
  // closed forms: X* = 1/2 + sqrt(3)/6, x1 = 1/6 + sqrt(3)/9, x3 = 1/6
  CHECK(out.X_star == doctest::Approx(0.5 + kSqrt3 / 6.0).epsilon(1e-10));
  CHECK(out.period_efforts[0] ==
        doctest::Approx(1.0 / 6.0 + kSqrt3 / 9.0).epsilon(1e-10));  // ~0.3591
  CHECK(out.period_efforts[1] ==
        doctest::Approx(1.0 / 6.0 + kSqrt3 / 18.0).epsilon(1e-10));  // ~0.2629
  CHECK(out.period_efforts[2] == doctest::Approx(1.0 / 6.0).epsilon(1e-10));
  CHECK(out.period_payoffs[0] == doctest::Approx(0.0962).epsilon(5e-4));
  // g_3 vanishes exactly at the sequential Tullock equilibrium; the
  // higher-order-substitutes flag treats that boundary as passing
  CHECK(std::abs(out.flags.min_gk) < 1e-9);
  CHECK(out.flags.assumption2_ok);
}

TEST_CASE("full equilibrium: Tullock contest (2,1)") {
  const auto out = solve_equilibrium(tullock11(), Contest({2, 1}));
  CHECK(out.X_star == doctest::Approx(0.75).epsilon(1e-10));
  CHECK(out.period_efforts[0] == doctest::Approx(0.28125).epsilon(1e-10));
  CHECK(out.period_efforts[1] == doctest::Approx(0.1875).epsilon(1e-10));
  CHECK(out.period_payoffs[0] == doctest::Approx(0.09375).epsilon(1e-8));
}

TEST_CASE("full equilibrium: simultaneous Tullock contest (3)") {
  const auto out = solve_equilibrium(tullock11(), Contest({3}));
  CHECK(out.X_star == doctest::Approx(2.0 / 3.0).epsilon(1e-10));
  CHECK(out.period_efforts[0] == doctest::Approx(2.0 / 9.0).epsilon(1e-10));
}

TEST_CASE("full equilibrium: decaying-exponential instance") {
  const auto m = exp_decay_instance();
  const auto fm = solve_equilibrium(m, Contest({1, 2}));
  CHECK(fm.X_star == doctest::Approx(0.81728003515236835).epsilon(1e-10));
  CHECK(fm.period_efforts[0] == doctest::Approx(0.4740351054851304).epsilon(1e-9));
  CHECK(fm.period_efforts[1] == doctest::Approx(0.17162246483361898).epsilon(1e-9));
  const auto seq = solve_equilibrium(m, Contest({1, 1, 1}));
  CHECK(seq.X_star == doctest::Approx(0.86034410628835215).epsilon(1e-10));
  CHECK(seq.period_efforts[0] == doctest::Approx(0.47329734693430697).epsilon(1e-9));
  CHECK(seq.period_efforts[2] == doctest::Approx(0.13310933570774952).epsilon(1e-9));
  // for this benefit the first mover exerts more than the sequential leader
  CHECK(fm.period_efforts[0] > seq.period_efforts[0]);
}

TEST_CASE("Stackelberg duopoly under linear benefit") {
  const auto out = solve_equilibrium(linear11(), Contest({1, 1}));
  CHECK(out.X_star == doctest::Approx(0.75).epsilon(1e-10));
  CHECK(out.period_efforts[0] == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(out.period_efforts[1] == doctest::Approx(0.25).epsilon(1e-10));
}

TEST_CASE("degenerate one-player Tullock contest is a flagged boundary") {
  const auto out = solve_equilibrium(tullock11(), Contest({1}));
  CHECK(out.flags.degenerate_boundary);
  CHECK(out.X_star == 0.0);
  CHECK(out.period_efforts[0] == 0.0);
  CHECK(solve_total_effort(tullock11(), Contest({1})) == 0.0);
  // a linear one-player contest is interior, not degenerate
  CHECK(!solve_equilibrium(linear11(), Contest({1})).flags.degenerate_boundary);
}

TEST_CASE("two-player Tullock: sequential and simultaneous coincide") {
  // the higher-order-substitutes condition fails at n = 2 and the
  // discouragement effect exactly offsets: both structures give X* = 1/2
  // with every effort 1/4
  const auto sim = solve_equilibrium(tullock11(), Contest({2}));
  const auto seq = solve_equilibrium(tullock11(), Contest({1, 1}));
  CHECK(sim.X_star == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(seq.X_star == doctest::Approx(0.5).epsilon(1e-10));
  CHECK(seq.period_efforts[0] == doctest::Approx(0.25).epsilon(1e-9));
  CHECK(seq.period_efforts[1] == doctest::Approx(0.25).epsilon(1e-9));
}

TEST_CASE("solution invariants across all compositions, n <= 7") {
  for (const auto& m : {tullock11(), linear11()}) {
    for (int n = 2; n <= 7; ++n) {
      std::map<std::vector<int>, double> x_by_multiset;
      for (const auto& c : enumerate_contests(n)) {
        const auto out = solve_equilibrium(m, c);
        const int T = c.num_periods();

        // aggregation: period efforts recover the total
        double sum = 0.0;
        for (int t = 0; t < T; ++t) sum += c.periods()[t] * out.period_efforts[t];
        CHECK(std::abs(sum - out.X_star) < 1e-8);

        // welfare identity
        double wsum = 0.0;
        for (int t = 0; t < T; ++t) wsum += c.periods()[t] * out.period_payoffs[t];
        CHECK(std::abs(wsum - out.welfare) < 1e-8);

        // the last period plays g_1(X*)
        CHECK(std::abs(out.period_efforts[T - 1] - g_tower(m, out.X_star, 1)[0]) < 1e-8);

        // residual and slope at the root
        CHECK(std::abs(eval_f(m, c, 0, out.X_star)) < 1e-10);
        CHECK(eval_f_prime(m, c, 0, out.X_star) > 0.0);

        for (double x : out.period_efforts) CHECK(x >= 0.0);

        // permutation invariance: X* depends only on the period multiset
        std::vector<int> key = c.periods();
        std::sort(key.begin(), key.end());
        auto [it, inserted] = x_by_multiset.try_emplace(key, out.X_star);
        if (!inserted) CHECK(std::abs(it->second - out.X_star) < 1e-10);
      }
    }
  }
}

TEST_CASE("strict earlier-mover advantage where the theory applies") {
  // linear benefit everywhere; Tullock from three players up
  for (int n = 2; n <= 7; ++n) {
    for (const auto& c : enumerate_contests(n)) {
      if (c.num_periods() < 2) continue;
      const auto lin = solve_equilibrium(linear11(), c);
      for (int t = 0; t + 1 < c.num_periods(); ++t) {
        CHECK(lin.period_efforts[t] > lin.period_efforts[t + 1]);
        CHECK(lin.period_payoffs[t] > lin.period_payoffs[t + 1]);
      }
      if (n >= 3) {
        const auto tul = solve_equilibrium(tullock11(), c);
        for (int t = 0; t + 1 < c.num_periods(); ++t) {
          CHECK(tul.period_efforts[t] > tul.period_efforts[t + 1]);
          CHECK(tul.period_payoffs[t] > tul.period_payoffs[t + 1]);
        }
      }
    }
  }
}

TEST_CASE("strict refinement monotonicity where the theory applies") {
  for (int n = 2; n <= 7; ++n) {
    for (const auto& m : {tullock11(), linear11()}) {
      if (m.family() == BenefitFamily::tullock && n == 2) continue;
      const auto all = enumerate_contests(n);
      std::vector<double> x(all.size());
      for (std::size_t i = 0; i < all.size(); ++i) x[i] = solve_total_effort(m, all[i]);
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
          if (i == j || !refines(all[i], all[j])) continue;
          CHECK(x[i] > x[j]);
        }
    }
  }
}

TEST_CASE("assumption checks") {
  const auto m = tullock11();
  // the canonical satisfied case
  const auto rep = check_assumptions(m, Contest({1, 1, 1}));
  CHECK(rep.assumption1_ok);
  CHECK(rep.assumption2_ok);
  CHECK(!rep.degenerate_boundary);
  CHECK(rep.X_star == doctest::Approx(0.5 + kSqrt3 / 6.0).epsilon(1e-9));
  CHECK(std::abs(rep.min_gk) < 1e-9);  // sits on the boundary of the strict form

  // linear benefit: affine f_t with slope 1 + sum S_k, all clauses pass
  for (const auto& c : {Contest({1, 1}), Contest({2, 3}), Contest({1, 2, 1})}) {
    const auto lin = check_assumptions(linear11(), c);
    CHECK(lin.assumption1_ok);
    CHECK(lin.assumption2_ok);
  }

  // degenerate monopoly Tullock
  const auto deg = check_assumptions(m, Contest({1}));
  CHECK(deg.degenerate_boundary);
  CHECK(!deg.assumption1_ok);

  // both assumptions hold for every Tullock composition with n >= 3
  for (int n = 3; n <= 6; ++n)
    for (const auto& c : enumerate_contests(n)) {
      const auto r = check_assumptions(m, c);
      CHECK(r.assumption1_ok);
      CHECK(r.assumption2_ok);
    }
}

}  // TEST_SUITE
