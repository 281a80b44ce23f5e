#include "support.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>

using namespace nwave;

TEST_SUITE("exprat-properties") {
  TEST_CASE("field laws and derivative laws over randomized cases") {
    std::mt19937_64 rng(nwave::testing::kPropertySeed);
    int failures = 0;
    for (int k = 0; k < nwave::testing::kPropertyCases; ++k) {
      std::string why = nwave::testing::exprat_law_case(rng);
      if (!why.empty()) {
        ++failures;
        INFO("case " << k << ": " << why);
        CHECK(why.empty());
      }
    }
    CHECK(failures == 0);
  }

  TEST_CASE("canonical form ignores term order") {
    std::mt19937_64 rng(17);
    for (int k = 0; k < 100; ++k) {
      ExpPoly p = nwave::testing::random_poly(rng, 6);
      auto terms = p.terms();
      std::shuffle(terms.begin(), terms.end(), rng);
      auto half = terms;
      for (auto& t : half)
        t.second /= 2;
      terms.insert(terms.end(), half.begin(), half.end());
      CHECK(ExpPoly::from_terms(terms) == p * Rational(3, 2));
    }
  }

  TEST_CASE("exact division inverts multiplication") {
    std::mt19937_64 rng(29);
    for (int k = 0; k < 100; ++k) {
      ExpPoly a = nwave::testing::random_poly(rng, 4);
      ExpPoly b = nwave::testing::random_nonzero_poly(rng, 3);
      auto q = divide_exact(a * b, b);
      REQUIRE(q.has_value());
      CHECK(*q == a);
    }
  }

  TEST_CASE("evaluation is a ring homomorphism away from poles") {
    std::mt19937_64 rng(41);
    for (int k = 0; k < 100; ++k) {
      ExpPoly a = nwave::testing::random_poly(rng, 3), b = nwave::testing::random_poly(rng, 3);
      long double t = 0.3L, x = -0.7L;
      long double va = eval(a, t, x), vb = eval(b, t, x);
      long double scale = 1 + std::fabs(va) * std::fabs(vb);
      CHECK(std::fabs(eval(a * b, t, x) - va * vb) <= 1e-15L * scale);
      CHECK(std::fabs(eval(a + b, t, x) - (va + vb)) <= 1e-15L * (1 + std::fabs(va) + std::fabs(vb)));
    }
  }
}
