#pragma once

#include "nwave/algebra.hpp"
#include "nwave/spectral.hpp"

#include <random>
#include <string>

namespace nwave::testing {

inline Rational Q(const char* text) { return parse_rational(text); }

inline WaveConstants default_constants() { return WaveConstants(1, Q("1/2"), Q("1/3"), 1); }

inline Rational random_rational(std::mt19937_64& rng, int span, int maxden) {
  std::uniform_int_distribution<int> num(-span, span), den(1, maxden);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

inline ExpPoly random_poly(std::mt19937_64& rng, int max_terms) {
  std::uniform_int_distribution<int> count(0, max_terms);
  std::vector<ExpPoly::Term> terms;
  for (int k = count(rng); k > 0; --k)
    terms.emplace_back(LinForm{random_rational(rng, 4, 2), random_rational(rng, 4, 2)},
                       random_rational(rng, 9, 4));
  return ExpPoly::from_terms(std::move(terms));
}

inline ExpPoly random_nonzero_poly(std::mt19937_64& rng, int max_terms) {
  ExpPoly p;
  while (p.is_zero())
    p = random_poly(rng, max_terms);
  return p;
}

/// Polynomial, monomial-over-polynomial or general ratio, chosen at random.
inline ExpRational random_ratio(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  switch (kind(rng)) {
    case 0: return ExpRational(random_poly(rng, 3));
    case 1: return ExpRational(random_poly(rng, 2), random_nonzero_poly(rng, 1));
    default: return ExpRational(random_poly(rng, 2), random_nonzero_poly(rng, 2));
  }
}

inline WaveConstants random_constants(std::mt19937_64& rng) {
  while (true) {
    Rational c1 = random_rational(rng, 3, 2), c2 = random_rational(rng, 3, 2);
    Rational d1 = random_rational(rng, 3, 2), d2 = random_rational(rng, 3, 2);
    if (sgn(c1 * d2 - c2 * d1) != 0)
      return WaveConstants(c1, c2, d1, d2);
  }
}

/// One randomized case of the field laws: ring axioms, the Leibniz rule and
/// linearity of D_{i,j} in (i, j). Returns an empty string on success,
/// otherwise the name of the first violated law.
inline std::string exprat_law_case(std::mt19937_64& rng) {
  ExpRational a = random_ratio(rng), b = random_ratio(rng), c = random_ratio(rng);
  const ExpRational zero, one(Rational(1));
  if (!((a + b) + c == a + (b + c))) return "additive associativity";
  if (!(a + b == b + a)) return "additive commutativity";
  if (!((a * b) * c == a * (b * c))) return "multiplicative associativity";
  if (!(a * b == b * a)) return "multiplicative commutativity";
  if (!(a * (b + c) == a * b + a * c)) return "distributivity";
  if (!(a + zero == a) || !(a * one == a)) return "identities";
  if (!(a - a).is_zero()) return "additive inverse";
  if (!a.is_zero() && !(a * a.inverse() == one)) return "multiplicative inverse";
  if (!b.is_zero() && !((a / b) * b == a)) return "division";

  WaveConstants w = random_constants(rng);
  std::uniform_int_distribution<int> idx(-3, 3);
  int i1 = idx(rng), j1 = idx(rng), i2 = idx(rng), j2 = idx(rng), k = idx(rng);
  if (!(rderiv(a * b, i1, j1, w) == rderiv(a, i1, j1, w) * b + a * rderiv(b, i1, j1, w)))
    return "Leibniz rule";
  if (!(rderiv(a + b, i1, j1, w) == rderiv(a, i1, j1, w) + rderiv(b, i1, j1, w)))
    return "additivity of D";
  if (!(rderiv(a, i1 + i2, j1 + j2, w) == rderiv(a, i1, j1, w) + rderiv(a, i2, j2, w)))
    return "index additivity of D";
  if (!(rderiv(a, k * i1, k * j1, w) == Rational(k) * rderiv(a, i1, j1, w)))
    return "index homogeneity of D";
  return "";
}

inline constexpr std::uint64_t kPropertySeed = 0x5eed2026ULL;
inline constexpr int kPropertyCases = 500;

/// Fields of the A2 initial config for the given spikes, built term by term.
inline FieldConfig a2_initial_by_hand(const SpectralData& s) {
  const auto& w = s.constants;
  FieldConfig cfg(Algebra::A2, w);
  ExpPoly f10, f01, f11;
  for (const auto& p : s.pspikes)
    f10 += ExpPoly(w.spectral_exponent(p.pos, 0), p.weight);
  for (const auto& q : s.qspikes)
    f01 += ExpPoly(w.spectral_exponent(0, q.pos), q.weight);
  for (const auto& p : s.pspikes)
    for (const auto& q : s.qspikes)
      f11 += ExpPoly(w.spectral_exponent(p.pos, q.pos), p.weight * q.weight / (p.pos - q.pos));
  cfg[minus(1, 0)] = f10;
  cfg[minus(0, 1)] = f01;
  cfg[minus(1, 1)] = f11;
  return cfg;
}

}  // namespace nwave::testing
