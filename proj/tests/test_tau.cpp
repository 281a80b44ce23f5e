#include "support.hpp"

#include "nwave/errors.hpp"
#include "nwave/tau.hpp"

#include <doctest.h>

#include <functional>

using namespace nwave;
using nwave::testing::Q;

namespace {

Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k)
    r *= k;
  return r;
}

// Ordered tuples with repetition, divided by the tuple-order factorials:
// repeated entries carry a zero Vandermonde factor, so this must equal the
// subset sum.
ExpPoly tau_by_tuples(const SpectralData& s, int n1, const std::vector<int>& groups) {
  ExpPoly total;
  std::vector<Rational> ls;
  std::vector<std::vector<Rational>> ms(groups.size());
  std::function<void(std::size_t)> over_groups;
  Rational weight = 1;
  std::function<void()> over_lambdas = [&]() {
    if (static_cast<int>(ls.size()) < n1) {
      for (const auto& p : s.pspikes) {
        Rational saved = weight;
        weight *= p.weight;
        ls.push_back(p.pos);
        over_lambdas();
        ls.pop_back();
        weight = saved;
      }
      return;
    }
    over_groups(0);
  };
  over_groups = [&](std::size_t g) {
    if (g == groups.size()) {
      Rational c = weight * vandermonde_sq(ls) / factorial(n1);
      Rational lsum = 0, msum = 0;
      for (const auto& l : ls)
        lsum += l;
      for (std::size_t k = 0; k < groups.size(); ++k) {
        c *= vandermonde_sq(ms[k]) / factorial(groups[k]);
        for (const auto& m : ms[k]) {
          msum += m;
          for (const auto& l : ls)
            c /= l - m;
        }
      }
      if (sgn(c) != 0)
        total += ExpPoly(s.constants.spectral_exponent(lsum, msum), c);
      return;
    }
    if (static_cast<int>(ms[g].size()) < groups[g]) {
      for (const auto& q : s.qspikes) {
        Rational saved = weight;
        weight *= q.weight;
        ms[g].push_back(q.pos);
        over_groups(g);
        ms[g].pop_back();
        weight = saved;
      }
      return;
    }
    over_groups(g + 1);
  };
  over_lambdas();
  return total;
}

bool solves(const FieldConfig& cfg) {
  const auto& m = model(cfg.algebra());
  for (const auto& e : m.equations)
    if (!residual(m, cfg, e).is_zero())
      return false;
  return true;
}

SpectralData scaled(SpectralData s, const Rational& k) {
  for (auto& p : s.pspikes)
    p.weight *= k;
  for (auto& q : s.qspikes)
    q.weight *= k;
  return s;
}

}  // namespace

TEST_SUITE("tau") {
  TEST_CASE("Vandermonde squares") {
    CHECK(vandermonde_sq({}) == 1);
    CHECK(vandermonde_sq({Q("3")}) == 1);
    CHECK(vandermonde_sq({1, 3, 4}) == Rational(4 * 9 * 1));
    CHECK(vandermonde_sq({2, 2}) == 0);
  }

  TEST_CASE("subset sums equal the ordered-tuple sums") {
    auto s = sample_spectral(3, 3);
    for (int n1 = 0; n1 <= 2; ++n1)
      for (int n2 = 0; n2 <= 2; ++n2) {
        INFO("orders " << n1 << "," << n2);
        CHECK(tau_U(s, n1, n2) == tau_by_tuples(s, n1, {n2}));
      }
    CHECK(tau_V_B2(s, 1, 1, 2) == tau_by_tuples(s, 1, {1, 2}));
    CHECK(tau_V_G2(s, 1, 0, 1, 1) == tau_by_tuples(s, 1, {0, 1, 1}));
  }

  TEST_CASE("out-of-range orders give zero") {
    auto s = sample_spectral(2, 2);
    CHECK(tau_U(s, 3, 0).is_zero());
    CHECK(tau_U(s, 0, 3).is_zero());
    CHECK(tau_U(s, -1, 0).is_zero());
    CHECK(tau_U(s, 0, 0) == ExpPoly(Rational(1)));
  }

  TEST_CASE("A2 tau solutions solve the system up to the interruption") {
    auto s = sample_spectral(2, 2);
    for (int n1 = 0; n1 <= 2; ++n1)
      for (int n2 = 0; n2 <= 2; ++n2) {
        INFO("orders " << n1 << "," << n2);
        CHECK(solves(solution_from_tau(model(Algebra::A2), s, n1, n2)));
      }
    auto last = solution_from_tau(model(Algebra::A2), s, 2, 2);
    for (const auto& r : {minus(1, 0), minus(0, 1), minus(1, 1)})
      CHECK(last[r].is_zero());
    CHECK_THROWS_AS(solution_from_tau(model(Algebra::A2), s, 3, 2), TauZero);
    CHECK_THROWS_AS(solution_from_tau(model(Algebra::A2), s, 2, 3), TauZero);
  }

  TEST_CASE("base orders reproduce the initial configs") {
    for (auto a : {Algebra::A2, Algebra::B2, Algebra::G2}) {
      auto s = sample_spectral(2, 3);
      CHECK(solution_from_tau(model(a), s, 0, 0) == initial_config(model(a), s));
    }
  }

  TEST_CASE("B2 tau solutions solve the system at orders up to (1,1)") {
    auto s = sample_spectral(2, 4);
    for (int n1 = 0; n1 <= 1; ++n1)
      for (int n2 = 0; n2 <= 1; ++n2)
        CHECK(solves(solution_from_tau(model(Algebra::B2), s, n1, n2)));
  }

  TEST_CASE("calibration constants are needed and frozen") {
    auto s = sample_spectral(2, 4);
    CHECK_FALSE(solves(solution_from_tau(model(Algebra::A2), s, 1, 1, false)));
    CHECK_FALSE(solves(solution_from_tau(model(Algebra::B2), s, 1, 1, false)));
    CHECK_FALSE(solves(solution_from_tau(model(Algebra::G2), s, 0, 0, false)));
    CHECK(calibration(Algebra::A2, plus(1, 1)) == -1);
    CHECK(calibration(Algebra::A2, minus(1, 1)) == 1);
    for (const auto& e : calibration_table()) {
      CHECK(abs(e.factor) == 1);
      CHECK(std::string(e.reason).size() > 0);
    }
  }

  TEST_CASE("G2 base construction solves the system") {
    CHECK(solves(solution_from_tau(model(Algebra::G2), sample_spectral(2, 4), 0, 0)));
  }

  TEST_CASE("exact verdicts do not depend on the weight scale") {
    auto s = sample_spectral(2, 2);
    for (int n1 = 0; n1 <= 2; ++n1)
      for (int n2 = 0; n2 <= 2; ++n2) {
        auto& m = model(Algebra::A2);
        CHECK(solves(solution_from_tau(m, s, n1, n2)) ==
              solves(solution_from_tau(m, scaled(s, 3), n1, n2)));
      }
    auto& b2 = model(Algebra::B2);
    auto s4 = sample_spectral(2, 4);
    CHECK(solves(solution_from_tau(b2, s4, 1, 1, false)) ==
          solves(solution_from_tau(b2, scaled(s4, 3), 1, 1, false)));
  }

  TEST_CASE("chain constants flip odd first-index fields on odd second-root steps") {
    CHECK(a2_chain_constant(plus(1, 0), 1) == -1);
    CHECK(a2_chain_constant(minus(1, 1), 3) == -1);
    CHECK(a2_chain_constant(minus(0, 1), 1) == 1);
    CHECK(a2_chain_constant(plus(1, 0), 2) == 1);
  }

  TEST_CASE("symmetrized identity holds and its perturbation does not") {
    auto s = sample_spectral(2, 3);
    for (int n = 0; n <= 1; ++n) {
      CHECK(check_gra(s, n));
      CHECK_FALSE(check_gra(s, n, false));
    }
    CHECK_THROWS_AS(gra_sides(s, -1), std::invalid_argument);
  }
}
