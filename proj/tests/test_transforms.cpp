#include "support.hpp"

#include "nwave/errors.hpp"
#include "nwave/tau.hpp"
#include "nwave/transforms.hpp"

#include <doctest.h>

#include <algorithm>

using namespace nwave;
using T = TransformId;

namespace {

bool solves(const FieldConfig& cfg) {
  const auto& m = model(cfg.algebra());
  for (const auto& e : m.equations)
    if (!residual(m, cfg, e).is_zero())
      return false;
  return true;
}

FieldConfig exchanged(const FieldConfig& c) {
  return apply_substitution(g2_exchange(1), c, g2_exchange_constants(c.constants()));
}

// G2 first-root map rebuilt from the system itself: the seven rows that are
// algebraic in the old fields, then each remaining new field solved from one
// transformed equation, in dependency order.
FieldConfig g2_first_root_by_equations(const FieldConfig& f) {
  const auto& w = f.constants();
  const auto& m = f[minus(1, 0)];
  FieldConfig g = f;
  auto F = [&](int p, int q, char s) -> const ExpRational& { return f[{p, q, s}]; };
  auto G = [&](int p, int q, char s) -> ExpRational& { return g[{p, q, s}]; };
  const Rational two(2), three(3);
  G(1, 0, '+') = m.inverse();
  G(1, 3, '-') = -(F(2, 3, '-') / m);
  G(1, 1, '+') = -(F(0, 1, '+') / m);
  G(0, 1, '-') = F(1, 1, '-') / m;
  G(2, 3, '+') = F(1, 3, '+') / m;
  G(1, 2, '+') = F(1, 2, '+') + (F(1, 1, '-') * F(1, 3, '+') + F(0, 1, '+') * F(0, 1, '+')) / m;
  G(1, 2, '-') = F(1, 2, '-') - (F(2, 3, '-') * F(0, 1, '+') + F(1, 1, '-') * F(1, 1, '-')) / m;
  G(2, 3, '-') = -(rderiv(G(1, 3, '-'), 1, 3, w) + three * G(0, 1, '-') * G(1, 2, '-')) /
                 (three * G(1, 0, '+'));
  G(0, 1, '+') = (G(2, 3, '+') * G(1, 2, '-') + two * G(1, 2, '+') * G(0, 1, '-') -
                  rderiv(G(1, 1, '+'), 1, 1, w)) /
                 G(1, 0, '+');
  G(1, 3, '+') = (rderiv(G(2, 3, '+'), 2, 3, w) + three * G(1, 1, '+') * G(1, 2, '+')) /
                 (three * G(1, 0, '+'));
  G(1, 1, '-') = (rderiv(G(0, 1, '-'), 0, 1, w) - G(1, 3, '-') * G(1, 2, '+') -
                  two * G(1, 2, '-') * G(1, 1, '+')) /
                 G(1, 0, '+');
  if (!G(0, 1, '-').is_zero())
    G(1, 0, '-') = (G(2, 3, '-') * G(1, 2, '+') + two * G(1, 2, '-') * G(0, 1, '+') -
                    rderiv(G(1, 1, '-'), 1, 1, w)) /
                   G(0, 1, '-');
  else if (!G(1, 1, '+').is_zero())
    G(1, 0, '-') = (rderiv(G(0, 1, '+'), 0, 1, w) - G(1, 3, '+') * G(1, 2, '-') -
                    two * G(1, 2, '+') * G(1, 1, '-')) /
                   G(1, 1, '+');
  else
    G(1, 0, '-') = -(rderiv(G(1, 3, '+'), 1, 3, w) + three * G(0, 1, '+') * G(1, 2, '+')) /
                   (three * G(2, 3, '+'));
  return g;
}

// Configs reached from initial configs by the exchange and the oracle map.
std::vector<FieldConfig> g2_orbit() {
  std::vector<FieldConfig> pool;
  for (int v = 0; v < 2; ++v) {
    std::vector<FieldConfig> frontier{initial_config(model(Algebra::G2), sample_spectral(2, 3, v))};
    for (int depth = 0; depth < 3; ++depth) {
      std::vector<FieldConfig> next;
      for (const auto& c : frontier) {
        next.push_back(exchanged(c));
        try {
          next.push_back(g2_first_root_by_equations(c));
        } catch (const DivisionByZeroField&) {
        }
      }
      for (const auto& c : next)
        if (std::none_of(pool.begin(), pool.end(), [&](const auto& p) { return p == c; }))
          pool.push_back(c);
      frontier = std::move(next);
    }
  }
  return pool;
}

}  // namespace

TEST_SUITE("transforms") {
  TEST_CASE("ids parse by full or short name") {
    CHECK(parse_transform("T10_INV", Algebra::B2) == T::B2_T10_INV);
    CHECK(parse_transform("A2_T3", Algebra::A2) == T::A2_T3);
    CHECK_THROWS_AS(parse_transform("T10", Algebra::A2), std::invalid_argument);
    CHECK(transforms_of(Algebra::G2).size() == 2);
    for (auto a : {Algebra::A2, Algebra::B2, Algebra::G2})
      for (auto id : transforms_of(a))
        CHECK(algebra_of(id) == a);
  }

  TEST_CASE("maps reject configs of another algebra") {
    auto c = initial_config(model(Algebra::A2), sample_spectral(1, 1));
    CHECK_THROWS_AS(apply(T::B2_TM, c), std::invalid_argument);
  }

  TEST_CASE("a vanishing pivot raises PivotZero naming the field") {
    FieldConfig zero(Algebra::A2, nwave::testing::default_constants());
    try {
      apply(T::A2_T3, zero);
      FAIL("no PivotZero");
    } catch (const PivotZero& e) {
      CHECK(e.field() == "f-1.1");
    }
    try {
      apply_chain({T::A2_T1, T::A2_T1, T::A2_T1}, initial_config(model(Algebra::A2), sample_spectral(2, 2)));
      FAIL("no PivotZero");
    } catch (const PivotZero& e) {
      CHECK(std::string(e.what()).find("step 3 (A2_T1)") == 0);
    }
  }

  TEST_CASE("A2 maps preserve solutions and commute") {
    for (int v = 0; v < 3; ++v) {
      auto c = initial_config(model(Algebra::A2), sample_spectral(2, 2, v));
      for (auto id : transforms_of(Algebra::A2))
        CHECK(verify_invariance(id, c).pass);
      auto t12 = apply_chain({T::A2_T1, T::A2_T2}, c);
      CHECK(t12 == apply_chain({T::A2_T2, T::A2_T1}, c));
      CHECK(t12 == apply(T::A2_T3, c));
    }
  }

  TEST_CASE("A2 chains reproduce tau solutions up to the chain constants") {
    auto s = sample_spectral(2, 2);
    auto c = initial_config(model(Algebra::A2), s);
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2 && a + b <= 3; ++b) {
        std::vector<T> ids(a, T::A2_T1);
        ids.insert(ids.end(), b, T::A2_T2);
        auto tau = solution_from_tau(model(Algebra::A2), s, a, b);
        for (const auto& r : model(Algebra::A2).roots)
          tau[r] *= a2_chain_constant(r, b);
        INFO("T1^" << a << " T2^" << b);
        CHECK(apply_chain(ids, c) == tau);
      }
  }

  TEST_CASE("B2 maps preserve initial and generic solutions") {
    auto init = initial_config(model(Algebra::B2), sample_spectral(2, 3));
    auto generic = solution_from_tau(model(Algebra::B2), sample_spectral(2, 4), 1, 1);
    for (auto id : transforms_of(Algebra::B2)) {
      if (id == T::B2_T10_INV)
        continue;
      CHECK(verify_invariance(id, init).pass);
      CHECK(verify_invariance(id, generic).pass);
    }
    CHECK(verify_invariance(T::B2_T10_INV, generic).pass);
  }

  TEST_CASE("B2 T10 and its inverse compose to the identity") {
    auto init = initial_config(model(Algebra::B2), sample_spectral(2, 3));
    auto generic = solution_from_tau(model(Algebra::B2), sample_spectral(2, 4), 1, 1);
    CHECK(apply_chain({T::B2_T10, T::B2_T10_INV}, init) == init);
    CHECK(apply_chain({T::B2_T10, T::B2_T10_INV}, generic) == generic);
    CHECK(apply_chain({T::B2_T10_INV, T::B2_T10}, generic) == generic);
  }

  TEST_CASE("B2 maps step along the tau lattice") {
    auto s = sample_spectral(2, 4);
    auto init = initial_config(model(Algebra::B2), s);
    CHECK(apply(T::B2_T10, init) == solution_from_tau(model(Algebra::B2), s, 1, 0));
    CHECK(apply(T::B2_T2A2, init) == solution_from_tau(model(Algebra::B2), s, 0, 1));
  }

  TEST_CASE("B2 second-root map is TM followed by the inverse first-root map") {
    auto generic = solution_from_tau(model(Algebra::B2), sample_spectral(2, 4), 1, 1);
    CHECK(apply(T::B2_T2A2, generic) == apply_chain({T::B2_TM, T::B2_T10_INV}, generic));
    auto init = initial_config(model(Algebra::B2), sample_spectral(2, 3));
    CHECK(b2_t2a2_printed_rows(init) == apply(T::B2_T2A2, init));
    CHECK(b2_t2a2_reduced_rows(init) == apply(T::B2_T2A2, init));
  }

  TEST_CASE("B2 zero patterns survive the maps") {
    auto init = initial_config(model(Algebra::B2), sample_spectral(2, 3));
    auto once = apply(T::B2_T10, init);
    auto twice = apply(T::B2_T10, once);
    for (const auto& r : {plus(0, 1), plus(1, 1), plus(1, 2)}) {
      CHECK(once[r].is_zero());
      CHECK(twice[r].is_zero());
    }
    auto s1 = apply(T::B2_T2A2, init);
    auto s2 = apply(T::B2_T2A2, s1);
    for (const auto& r : {plus(1, 0), plus(1, 1), plus(1, 2)}) {
      CHECK(s1[r].is_zero());
      CHECK(s2[r].is_zero());
    }
    CHECK_FALSE(s1[plus(0, 1)].is_zero());
  }

  TEST_CASE("G2 first-root map matches the equation-derived rows") {
    auto pool = g2_orbit();
    REQUIRE(pool.size() >= 8);
    int compared = 0, with_dual = 0;
    for (const auto& c : pool) {
      if (c[minus(1, 0)].is_zero()) {
        CHECK_THROWS_AS(apply(T::G2_T1, c), PivotZero);
        continue;
      }
      ++compared;
      with_dual += !c[plus(0, 1)].is_zero();
      CHECK(apply(T::G2_T1, c) == g2_first_root_by_equations(c));
    }
    CHECK(compared >= 4);
    CHECK(with_dual > 0);
  }

  TEST_CASE("G2 maps preserve solutions") {
    auto init = initial_config(model(Algebra::G2), sample_spectral(2, 3));
    CHECK(verify_invariance(T::G2_T1, init).pass);
    CHECK(verify_invariance(T::G2_T1, exchanged(init)).pass);
    CHECK(verify_invariance(T::G2_TA1_3A2, init).pass);
    auto s = sample_spectral(2, 4);
    CHECK(apply(T::G2_T1, initial_config(model(Algebra::G2), s)) ==
          solution_from_tau(model(Algebra::G2), s, 1, 0));
  }

  TEST_CASE("typeset variants are available where they differ") {
    auto a2 = initial_config(model(Algebra::A2), sample_spectral(2, 2));
    CHECK(apply_printed(T::A2_T1, a2).has_value());
    CHECK_FALSE(apply_printed(T::A2_T2, a2).has_value());
    auto g2 = initial_config(model(Algebra::G2), sample_spectral(2, 3));
    CHECK(solves(*apply_printed(T::G2_T1, g2)));
    CHECK_FALSE(solves(*apply_printed(T::G2_T1, exchanged(g2))));
  }
}
