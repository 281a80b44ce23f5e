#include "nwave/exp_rational.hpp"

#include "nwave/errors.hpp"

#include <cmath>

namespace nwave {

namespace {

ExpPoly power(const ExpPoly& f, int n) {
  ExpPoly r(Rational(1));
  for (int k = 0; k < n; ++k)
    r *= f;
  return r;
}

}  // namespace

ExpRational::ExpRational(ExpPoly num, const ExpPoly& den) : num_(std::move(num)) {
  if (den.is_zero())
    throw DivisionByZeroField("ratio with an identically zero denominator");
  add_factor(den, 1);
  cancel();
}

void ExpRational::add_factor(ExpPoly f, int mult) {
  // Scale f so its least term is 1 and move the scale into the numerator.
  const auto [e0, c0] = f.lowest();
  LinForm shift = -e0;
  Rational scale = 1 / c0;
  f = f.shifted(shift) * scale;
  for (int k = 0; k < mult; ++k)
    num_ = num_.shifted(shift) * scale;
  if (f.is_constant())
    return;

  std::uint64_t h = f.hash();
  for (auto& [g, m] : den_) {
    if (g.hash() == h && g == f) {
      m += mult;
      return;
    }
  }
  for (auto& [g, m] : den_) {
    while (!f.is_constant()) {
      auto q = divide_exact(f, g);
      if (!q)
        break;
      f = std::move(*q);
      m += mult;
    }
  }
  if (!f.is_constant())
    den_.emplace_back(std::move(f), mult);
}

void ExpRational::cancel() {
  if (num_.is_zero()) {
    den_.clear();
    return;
  }
  for (auto& [g, m] : den_) {
    while (m > 0) {
      auto q = divide_exact(num_, g);
      if (!q)
        break;
      num_ = std::move(*q);
      --m;
    }
  }
  std::erase_if(den_, [](const Factor& f) { return f.second == 0; });
}

ExpPoly ExpRational::den() const {
  ExpPoly r(Rational(1));
  for (const auto& [g, m] : den_)
    r *= power(g, m);
  return r;
}

std::optional<ExpPoly> ExpRational::as_poly() const {
  if (den_.empty())
    return num_;
  return divide_exact(num_, den());
}

std::optional<Rational> ExpRational::as_constant() const {
  auto p = as_poly();
  if (!p || !p->is_constant())
    return std::nullopt;
  return p->constant_term();
}

ExpRational& ExpRational::operator+=(const ExpRational& o) {
  if (o.is_zero())
    return *this;
  if (is_zero())
    return *this = o;

  ExpPoly a = num_;
  ExpPoly b = o.num_;
  std::vector<bool> matched(den_.size(), false);
  for (const auto& [g, m] : o.den_) {
    bool found = false;
    for (std::size_t k = 0; k < den_.size(); ++k) {
      if (!matched[k] && den_[k].first == g) {
        matched[k] = true;
        found = true;
        int mine = den_[k].second;
        if (m > mine) {
          a *= power(g, m - mine);
          den_[k].second = m;
        } else if (mine > m) {
          b *= power(g, mine - m);
        }
        break;
      }
    }
    if (!found) {
      a *= power(g, m);
      den_.emplace_back(g, m);
      matched.push_back(true);
    }
  }
  for (std::size_t k = 0; k < matched.size(); ++k)
    if (!matched[k])
      b *= power(den_[k].first, den_[k].second);
  num_ = a + b;
  cancel();
  return *this;
}

ExpRational& ExpRational::operator-=(const ExpRational& o) { return *this += -o; }

ExpRational& ExpRational::operator*=(const ExpRational& o) {
  if (is_zero() || o.is_zero()) {
    num_ = ExpPoly();
    den_.clear();
    return *this;
  }
  num_ *= o.num_;
  for (const auto& [g, m] : o.den_)
    add_factor(g, m);
  cancel();
  return *this;
}

ExpRational& ExpRational::operator*=(const Rational& c) {
  num_ *= c;
  if (num_.is_zero())
    den_.clear();
  return *this;
}

ExpRational& ExpRational::operator/=(const ExpRational& o) { return *this *= o.inverse(); }

ExpRational ExpRational::operator-() const {
  ExpRational r = *this;
  r.num_ = -r.num_;
  return r;
}

ExpRational ExpRational::inverse() const {
  if (is_zero())
    throw DivisionByZeroField("inverse of an identically zero field");
  ExpRational r;
  r.num_ = den();
  r.add_factor(num_, 1);
  r.cancel();
  return r;
}

bool operator==(const ExpRational& a, const ExpRational& b) {
  if (a.den_.empty() && b.den_.empty())
    return a.num_ == b.num_;
  return (a - b).is_zero();
}

ExpRational rderiv(const ExpRational& f, int i, int j, const WaveConstants& w) {
  if (f.den_.empty())
    return ExpRational(deriv(f.num_, i, j, w));

  // d(n / prod g^m) = (n' prod g - n sum m g' prod_{other} g) / prod g^{m+1}
  const auto& fs = f.den_;
  ExpPoly all(Rational(1));
  for (const auto& [g, m] : fs)
    all *= g;
  ExpPoly top = deriv(f.num_, i, j, w) * all;
  for (std::size_t k = 0; k < fs.size(); ++k) {
    ExpPoly dg = deriv(fs[k].first, i, j, w);
    if (dg.is_zero())
      continue;
    ExpPoly others(Rational(fs[k].second));
    for (std::size_t l = 0; l < fs.size(); ++l)
      if (l != k)
        others *= fs[l].first;
    top -= f.num_ * dg * others;
  }
  ExpRational r;
  r.num_ = std::move(top);
  r.den_ = fs;
  for (auto& [g, m] : r.den_)
    ++m;
  r.cancel();
  return r;
}

ExpRational log_deriv(const ExpRational& f, int i, int j, const WaveConstants& w) {
  return rderiv(f, i, j, w) / f;
}

ExpRational log_deriv2(const ExpRational& f, int i1, int j1, int i2, int j2,
                       const WaveConstants& w) {
  return rderiv(log_deriv(f, i2, j2, w), i1, j1, w);
}

long double eval(const ExpRational& f, long double t, long double x) {
  long double den = 1.0L;
  for (const auto& [g, m] : f.den_factors())
    den *= std::pow(eval(g, t, x), static_cast<long double>(m));
  if (std::fabs(den) < kPoleThreshold)
    throw EvalPole("denominator vanishes numerically");
  return eval(f.num(), t, x) / den;
}

std::string to_string(const ExpRational& f) {
  if (f.is_polynomial())
    return to_string(f.num());
  std::string s = "(" + to_string(f.num()) + ")/(";
  bool first = true;
  for (const auto& [g, m] : f.den_factors()) {
    if (!first)
      s += "*";
    first = false;
    s += "(" + to_string(g) + ")";
    if (m > 1)
      s += "^" + std::to_string(m);
  }
  return s + ")";
}

}  // namespace nwave
