#include "nwave/tau.hpp"

#include "nwave/errors.hpp"

#include <functional>
#include <map>

namespace nwave {

Rational vandermonde_sq(const std::vector<Rational>& xs) {
  Rational r = 1;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      Rational d = xs[j] - xs[i];
      r *= d * d;
    }
  return r;
}

namespace {

template <class Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  if (k > n)
    return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i)
    idx[i] = i;
  while (true) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1)
      --i;
    if (i == 0)
      return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j)
      idx[j] = idx[j - 1] + 1;
  }
}

// sum over size-k subsets of Q of w W^2(mu) / prod (lambda - mu) e^{sum mu (d2 t - c2 x)}
ExpPoly q_group(const SpectralData& s, const std::vector<Rational>& lambdas, int k) {
  std::vector<ExpPoly::Term> terms;
  for_each_subset(s.qspikes.size(), static_cast<std::size_t>(k), [&](const auto& idx) {
    Rational c = 1, msum = 0;
    std::vector<Rational> mus;
    for (auto i : idx) {
      const auto& sp = s.qspikes[i];
      c *= sp.weight;
      msum += sp.pos;
      mus.push_back(sp.pos);
      for (const auto& l : lambdas)
        c /= l - sp.pos;
    }
    c *= vandermonde_sq(mus);
    terms.emplace_back(s.constants.spectral_exponent(0, msum), c);
  });
  return ExpPoly::from_terms(std::move(terms));
}

}  // namespace

ExpPoly tau_groups(const SpectralData& s, int n1, const std::vector<int>& qgroups) {
  if (n1 < 0 || n1 > static_cast<int>(s.pspikes.size()))
    return ExpPoly();
  for (int g : qgroups)
    if (g < 0 || g > static_cast<int>(s.qspikes.size()))
      return ExpPoly();

  ExpPoly total;
  for_each_subset(s.pspikes.size(), static_cast<std::size_t>(n1), [&](const auto& idx) {
    Rational c = 1, lsum = 0;
    std::vector<Rational> lambdas;
    for (auto i : idx) {
      c *= s.pspikes[i].weight;
      lsum += s.pspikes[i].pos;
      lambdas.push_back(s.pspikes[i].pos);
    }
    c *= vandermonde_sq(lambdas);
    ExpPoly part(s.constants.spectral_exponent(lsum, 0), c);
    std::map<int, ExpPoly> cache;
    for (int g : qgroups) {
      auto it = cache.find(g);
      if (it == cache.end())
        it = cache.emplace(g, q_group(s, lambdas, g)).first;
      part *= it->second;
    }
    total += part;
  });
  return total;
}

ExpPoly tau_U(const SpectralData& s, int n1, int n2) { return tau_groups(s, n1, {n2}); }

ExpPoly tau_V_B2(const SpectralData& s, int n1, int n2, int n3) {
  return tau_groups(s, n1, {n2, n3});
}

ExpPoly tau_V_G2(const SpectralData& s, int n1, int n2, int n3, int n4) {
  return tau_groups(s, n1, {n2, n3, n4});
}

const std::vector<CalibrationEntry>& calibration_table() {
  static const std::vector<CalibrationEntry> table = {
      {Algebra::A2, plus(1, 1), Rational(-1),
       "residual of the (1,1) equation at orders (1,1) vanishes only with this sign"},
      {Algebra::B2, plus(1, 1), Rational(-1),
       "residual of the (1,1) and (0,1) equations at orders (1,1) vanish only with this sign"},
      {Algebra::G2, minus(2, 3), Rational(-1),
       "matches the (2,3) initial field; the G2 system at orders (0,0) needs it"},
      {Algebra::G2, plus(1, 1), Rational(-1),
       "orders (1,1) agree with the first-root map applied to orders (0,1) only with this sign"},
      {Algebra::G2, plus(1, 3), Rational(-1),
       "orders (1,1) agree with the first-root map applied to orders (0,1) only with this sign"},
      {Algebra::G2, plus(2, 3), Rational(-1),
       "orders (2,1) agree with the first-root map applied to orders (1,1) only with this sign"},
  };
  return table;
}

Rational calibration(Algebra a, const RootLabel& field) {
  for (const auto& e : calibration_table())
    if (e.algebra == a && e.field == field)
      return e.factor;
  return Rational(1);
}

Rational a2_chain_constant(const RootLabel& field, int n2) {
  return (field.p % 2 == 1 && n2 % 2 == 1) ? Rational(-1) : Rational(1);
}

const std::vector<RatioShape>& ratio_shapes(Algebra a) {
  static const std::vector<RatioShape> a2 = {
      {plus(1, 0), -1, {0}},   {plus(0, 1), 0, {-1}},  {plus(1, 1), -1, {-1}},
      {minus(1, 0), 1, {0}},   {minus(0, 1), 0, {1}},  {minus(1, 1), 1, {1}},
  };
  static const std::vector<RatioShape> b2 = {
      {plus(1, 0), -1, {0, 0}},  {plus(0, 1), 0, {0, -1}},  {plus(1, 1), -1, {0, -1}},
      {plus(1, 2), -1, {-1, -1}}, {minus(1, 0), 1, {0, 0}},   {minus(0, 1), 0, {1, 0}},
      {minus(1, 1), 1, {1, 0}},  {minus(1, 2), 1, {1, 1}},
  };
  static const std::vector<RatioShape> g2 = {
      {plus(1, 0), -1, {0, 0, 0}},    {plus(0, 1), 0, {-1, 0, 0}},
      {plus(1, 1), -1, {-1, 0, 0}},   {plus(1, 2), -1, {-1, -1, 0}},
      {plus(1, 3), -1, {-1, -1, -1}}, {plus(2, 3), -2, {-1, -1, -1}},
      {minus(1, 0), 1, {0, 0, 0}},    {minus(0, 1), 0, {1, 0, 0}},
      {minus(1, 1), 1, {1, 0, 0}},    {minus(1, 2), 1, {1, 1, 0}},
      {minus(1, 3), 1, {1, 1, 1}},    {minus(2, 3), 2, {1, 1, 1}},
  };
  switch (a) {
    case Algebra::A2: return a2;
    case Algebra::B2: return b2;
    case Algebra::G2: return g2;
  }
  return a2;
}

FieldConfig solution_from_tau(const AlgebraModel& m, const SpectralData& s, int n1, int n2,
                              bool calibrated) {
  validate(s);
  if (n1 < 0 || n2 < 0)
    throw std::invalid_argument("tau orders must be non-negative");
  const auto& shapes = ratio_shapes(m.name);
  std::size_t ngroups = shapes.front().dgroups.size();
  std::vector<int> base(ngroups, n2);
  ExpPoly den = tau_groups(s, n1, base);
  if (den.is_zero())
    throw TauZero("denominator tau vanishes at orders (" + std::to_string(n1) + "," +
                  std::to_string(n2) + "): the chain is interrupted");

  FieldConfig cfg(m.name, s.constants);
  std::map<std::pair<int, std::vector<int>>, ExpPoly> cache;
  for (const auto& sh : shapes) {
    std::vector<int> groups(ngroups);
    for (std::size_t g = 0; g < ngroups; ++g)
      groups[g] = n2 + sh.dgroups[g];
    auto key = std::make_pair(n1 + sh.dn1, groups);
    auto it = cache.find(key);
    if (it == cache.end())
      it = cache.emplace(key, tau_groups(s, key.first, groups)).first;
    ExpRational f(it->second, den);
    if (calibrated)
      f *= calibration(m.name, sh.field);
    cfg[sh.field] = std::move(f);
  }
  return cfg;
}

namespace {

Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k)
    r *= k;
  return r;
}

}  // namespace

std::pair<ExpPoly, ExpPoly> gra_sides(const SpectralData& s, int n, bool identify) {
  validate(s);
  if (n < 0)
    throw std::invalid_argument("identity order must be non-negative");
  const std::size_t nq = s.qspikes.size();
  const std::size_t len = 2 * static_cast<std::size_t>(n) + 2 + (identify ? 0 : 1);
  std::vector<ExpPoly::Term> lhs, rhs;
  std::vector<std::size_t> pick(len, 0);

  for (const auto& lp : s.pspikes) {
    const Rational& lambda = lp.pos;
    std::function<void(std::size_t)> rec = [&](std::size_t depth) {
      if (depth < len) {
        for (std::size_t i = 0; i < nq; ++i) {
          pick[depth] = i;
          rec(depth + 1);
        }
        return;
      }
      Rational w = lp.weight;
      Rational qsum = 0;
      std::vector<Rational> mu, d;
      for (std::size_t k = 0; k < len; ++k) {
        const auto& sp = s.qspikes[pick[k]];
        w *= sp.weight;
        qsum += sp.pos;
        if (k <= static_cast<std::size_t>(n))
          mu.push_back(sp.pos);
        else
          d.push_back(sp.pos);
      }
      auto e = s.constants.spectral_exponent(lambda, qsum);
      auto over = [&](const std::vector<Rational>& xs) -> Rational {
        Rational r = 1;
        for (const auto& x : xs)
          r *= lambda - x;
        return 1 / r;
      };
      if (identify) {
        Rational diff = 0;
        for (const auto& x : mu)
          diff += x;
        for (const auto& x : d)
          diff -= x;
        Rational l = w * vandermonde_sq(mu) * over(mu) * diff * vandermonde_sq(d) /
                     (factorial(n + 1) * factorial(n + 1));
        if (sgn(l) != 0)
          lhs.emplace_back(e, l);
      }
      // Long group: mu plus its extra entry; short group: the first n entries of d.
      std::vector<Rational> longg = mu;
      longg.push_back(identify ? d[n] : d.back());
      std::vector<Rational> shortg(d.begin(), d.begin() + n);
      Rational r = w * vandermonde_sq(longg) * over(longg) * vandermonde_sq(shortg) /
                   (factorial(n + 2) * factorial(n));
      if (sgn(r) != 0)
        rhs.emplace_back(e, r);
    };
    rec(0);
  }
  if (!identify) {
    // Left side is unchanged; recompute it over the unperturbed variable set.
    return {gra_sides(s, n, true).first, ExpPoly::from_terms(std::move(rhs))};
  }
  return {ExpPoly::from_terms(std::move(lhs)), ExpPoly::from_terms(std::move(rhs))};
}

bool check_gra(const SpectralData& s, int n, bool identify) {
  auto [l, r] = gra_sides(s, n, identify);
  return l == r;
}

}  // namespace nwave
