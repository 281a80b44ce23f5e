#include "nwave/spectral.hpp"

#include "nwave/errors.hpp"

#include <functional>
#include <stdexcept>

namespace nwave {

void validate(const SpectralData& s) {
  if (sgn(s.constants.delta()) == 0)
    throw InvalidSpectralData("wave constants are degenerate: c1*d2 - c2*d1 == 0");
  auto check_list = [](const std::vector<Spike>& spikes, const char* name) {
    for (std::size_t i = 0; i < spikes.size(); ++i) {
      if (sgn(spikes[i].weight) == 0)
        throw InvalidSpectralData(std::string(name) + " spike " + std::to_string(i) +
                                  " has zero weight");
      for (std::size_t j = 0; j < i; ++j)
        if (spikes[i].pos == spikes[j].pos)
          throw InvalidSpectralData(std::string(name) + " spikes " + std::to_string(j) + " and " +
                                    std::to_string(i) + " share position " +
                                    spikes[i].pos.get_str());
    }
  };
  check_list(s.pspikes, "P");
  check_list(s.qspikes, "Q");
  for (std::size_t i = 0; i < s.pspikes.size(); ++i)
    for (std::size_t j = 0; j < s.qspikes.size(); ++j)
      if (s.pspikes[i].pos == s.qspikes[j].pos)
        throw InvalidSpectralData("P spike " + std::to_string(i) + " and Q spike " +
                                  std::to_string(j) + " share position " +
                                  s.pspikes[i].pos.get_str() + " (pole of lambda - mu)");
}

namespace {

// Sum over ordered tuples (lambda_1..lambda_a) from P and (mu_1..mu_b) from Q,
// repetitions allowed, of weights * kernel * e^{sum lambda (d1 t - c1 x) + sum mu (d2 t - c2 x)}.
ExpPoly tuple_sum(const SpectralData& s, int a, int b,
                  const std::function<Rational(const std::vector<Rational>&,
                                               const std::vector<Rational>&)>& kernel) {
  std::vector<ExpPoly::Term> terms;
  std::vector<Rational> ls, ms;
  Rational weight = 1;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(ls.size()) < a) {
      for (const auto& sp : s.pspikes) {
        Rational saved = weight;
        weight *= sp.weight;
        ls.push_back(sp.pos);
        rec();
        ls.pop_back();
        weight = saved;
      }
      return;
    }
    if (static_cast<int>(ms.size()) < b) {
      for (const auto& sp : s.qspikes) {
        Rational saved = weight;
        weight *= sp.weight;
        ms.push_back(sp.pos);
        rec();
        ms.pop_back();
        weight = saved;
      }
      return;
    }
    Rational c = weight * kernel(ls, ms);
    if (sgn(c) == 0)
      return;
    Rational lsum = 0, msum = 0;
    for (const auto& l : ls)
      lsum += l;
    for (const auto& m : ms)
      msum += m;
    terms.emplace_back(s.constants.spectral_exponent(lsum, msum), c);
  };
  rec();
  return ExpPoly::from_terms(std::move(terms));
}

Rational cross(const std::vector<Rational>& ls, const std::vector<Rational>& ms) {
  Rational r = 1;
  for (const auto& l : ls)
    for (const auto& m : ms)
      r *= l - m;
  return 1 / r;
}

}  // namespace

SpectralData sample_spectral(int np, int nq, int variant) {
  static const char* const kP[][2] = {{"2", "1"}, {"-3", "2"}, {"5/2", "-1/3"}, {"7/2", "3/2"}, {"-5", "1/4"}};
  static const char* const kQ[][2] = {{"1", "1"},     {"-1", "-1/2"}, {"1/2", "3"},  {"3", "2"},
                                      {"-2", "1/5"},  {"7/3", "-1"},  {"-5/2", "1/2"}, {"4", "2/3"}};
  static const char* const kC[][4] = {
      {"1", "1/2", "1/3", "1"}, {"2", "-1", "1/2", "3/2"}, {"-1", "2", "3", "1/2"}};
  if (np < 0 || np > 5 || nq < 0 || nq > 8 || variant < 0 || variant > 2)
    throw std::invalid_argument("sample spectral data supports up to 5 P and 8 Q spikes, 3 variants");
  const auto* c = kC[variant];
  SpectralData s{WaveConstants(parse_rational(c[0]), parse_rational(c[1]), parse_rational(c[2]),
                               parse_rational(c[3])),
                 {},
                 {}};
  Rational pshift = Rational(variant) / 5, qshift = Rational(-variant) / 3;
  for (int i = 0; i < np; ++i)
    s.pspikes.push_back({parse_rational(kP[i][0]) + pshift, parse_rational(kP[i][1])});
  for (int i = 0; i < nq; ++i)
    s.qspikes.push_back({parse_rational(kQ[i][0]) + qshift, parse_rational(kQ[i][1])});
  validate(s);
  return s;
}

FieldConfig initial_config(const AlgebraModel& m, const SpectralData& s) {
  validate(s);
  FieldConfig cfg(m.name, s.constants);
  cfg[minus(1, 0)] = tuple_sum(s, 1, 0, cross);
  cfg[minus(0, 1)] = tuple_sum(s, 0, 1, cross);
  cfg[minus(1, 1)] = tuple_sum(s, 1, 1, cross);
  if (m.name == Algebra::B2)
    cfg[minus(1, 2)] = tuple_sum(s, 1, 2, cross);
  if (m.name == Algebra::G2) {
    cfg[minus(1, 2)] = kG2InitialSign12 * tuple_sum(s, 1, 2, cross);
    cfg[minus(1, 3)] = tuple_sum(s, 1, 3, cross);
    auto pair_kernel = [](const std::vector<Rational>& ls, const std::vector<Rational>& ms) -> Rational {
      Rational d = ls[0] - ls[1];
      return d * d * cross(ls, ms) / 2;
    };
    cfg[minus(2, 3)] = kG2InitialSign23 * tuple_sum(s, 2, 3, pair_kernel);
  }
  return cfg;
}

}  // namespace nwave
