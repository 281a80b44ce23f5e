#include "support.hpp"

#include "nwave/errors.hpp"

#include <doctest.h>

using namespace nwave;
using nwave::testing::Q;

namespace {

SpectralData base() {
  return {WaveConstants(1, Q("1/2"), Q("1/3"), 1), {{2, 1}, {-3, 2}}, {{1, 1}, {Q("1/2"), 3}}};
}

}  // namespace

TEST_SUITE("spectral") {
  TEST_CASE("validation names the clash") {
    auto s = base();
    CHECK_NOTHROW(validate(s));
    s.pspikes[1].pos = 2;
    CHECK_THROWS_AS(validate(s), InvalidSpectralData);
    s = base();
    s.qspikes[0].pos = 2;
    CHECK_THROWS_WITH_AS(validate(s), doctest::Contains("share position 2"), InvalidSpectralData);
    s = base();
    s.qspikes[1].weight = 0;
    CHECK_THROWS_AS(validate(s), InvalidSpectralData);
    s = base();
    s.qspikes[1].pos = 1;
    CHECK_THROWS_AS(validate(s), InvalidSpectralData);
  }

  TEST_CASE("A2 initial config equals the term-by-term construction") {
    auto s = base();
    CHECK(initial_config(model(Algebra::A2), s) == nwave::testing::a2_initial_by_hand(s));
  }

  TEST_CASE("B2 and G2 initial configs extend the A2 fields") {
    auto s = base();
    auto a2 = initial_config(model(Algebra::A2), s);
    for (auto a : {Algebra::B2, Algebra::G2}) {
      auto c = initial_config(model(a), s);
      for (const auto& r : {minus(1, 0), minus(0, 1), minus(1, 1)})
        CHECK(c[r] == a2[r]);
      for (const auto& [r, f] : c.fields())
        if (r.sign == '+')
          CHECK(f.is_zero());
    }
  }

  TEST_CASE("B2 one-lambda two-mu field sums over ordered mu pairs") {
    SpectralData s{WaveConstants(1, Q("1/2"), Q("1/3"), 1), {{Q("5"), Q("1/2")}}, {{1, 2}, {-1, 3}}};
    const auto& w = s.constants;
    ExpPoly expected;
    for (const auto& a : s.qspikes)
      for (const auto& b : s.qspikes) {
        const auto& l = s.pspikes[0];
        expected += ExpPoly(w.spectral_exponent(l.pos, a.pos + b.pos),
                            l.weight * a.weight * b.weight / ((l.pos - a.pos) * (l.pos - b.pos)));
      }
    CHECK(initial_config(model(Algebra::B2), s)[minus(1, 2)] == ExpRational(expected));
  }

  TEST_CASE("initial configs solve their systems") {
    for (auto a : {Algebra::A2, Algebra::B2, Algebra::G2}) {
      auto c = initial_config(model(a), sample_spectral(2, 3));
      for (const auto& e : model(a).equations) {
        INFO(to_string(a) << " " << e.lhs.name());
        CHECK(residual(model(a), c, e).is_zero());
      }
    }
  }

  TEST_CASE("the G2 pair field changes the system verdict with its sign") {
    auto s = sample_spectral(2, 3);
    auto c = initial_config(model(Algebra::G2), s);
    c[minus(2, 3)] = -c[minus(2, 3)];
    CHECK_FALSE(residual(model(Algebra::G2), c, model(Algebra::G2).equation_for(minus(2, 3))).is_zero());
  }

  TEST_CASE("sample data are deterministic and valid") {
    for (int v = 0; v < 3; ++v) {
      auto a = sample_spectral(5, 8, v), b = sample_spectral(5, 8, v);
      CHECK(a.constants == b.constants);
      CHECK(a.pspikes.size() == 5);
      CHECK(a.qspikes.size() == 8);
      CHECK_NOTHROW(validate(a));
    }
    CHECK_THROWS_AS(sample_spectral(6, 1), std::invalid_argument);
  }
}
