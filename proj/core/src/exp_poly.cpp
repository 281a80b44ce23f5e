#include "nwave/exp_poly.hpp"

#include "nwave/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace nwave {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty())
    throw std::invalid_argument("empty rational literal");
  auto valid = [](const std::string& part) {
    std::size_t i = (!part.empty() && (part[0] == '-' || part[0] == '+')) ? 1 : 0;
    if (i == part.size())
      return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den) || den.find_first_of("+-") != std::string::npos)
    throw std::invalid_argument("malformed rational literal '" + s + "'");
  if (num[0] == '+')
    num.erase(0, 1);
  mpz_class n(num), d(den);
  if (d == 0)
    throw std::invalid_argument("zero denominator in rational literal '" + s + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

long double to_long_double(const Rational& q) {
  auto mpz_to_ld = [](const mpz_class& z) {
    long double r = 0.0L;
    std::size_t n = mpz_size(z.get_mpz_t());
    for (std::size_t i = n; i-- > 0;)
      r = std::ldexp(r, GMP_NUMB_BITS) + static_cast<long double>(mpz_getlimbn(z.get_mpz_t(), i));
    return sgn(z) < 0 ? -r : r;
  };
  return mpz_to_ld(q.get_num()) / mpz_to_ld(q.get_den());
}

WaveConstants::WaveConstants(Rational c1, Rational c2, Rational d1, Rational d2)
    : c1_(std::move(c1)), c2_(std::move(c2)), d1_(std::move(d1)), d2_(std::move(d2)) {
  delta_ = c1_ * d2_ - c2_ * d1_;
  if (sgn(delta_) == 0)
    throw InvalidSpectralData("wave constants are degenerate: c1*d2 - c2*d1 == 0");
}

LinForm WaveConstants::spectral_exponent(const Rational& lambda, const Rational& mu) const {
  return {lambda * d1_ + mu * d2_, -(lambda * c1_ + mu * c2_)};
}

Rational WaveConstants::derivative_factor(int i, int j, const LinForm& e) const {
  Rational ct = i * c1_ + j * c2_;
  Rational cx = i * d1_ + j * d2_;
  return (ct * e.t_coef + cx * e.x_coef) / delta_;
}

ExpPoly::ExpPoly(const Rational& c) {
  if (sgn(c) != 0)
    terms_.emplace_back(LinForm{}, c);
}

ExpPoly::ExpPoly(LinForm e, const Rational& c) {
  if (sgn(c) != 0)
    terms_.emplace_back(std::move(e), c);
}

ExpPoly ExpPoly::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  ExpPoly out;
  for (auto& t : terms) {
    if (!out.terms_.empty() && out.terms_.back().first == t.first)
      out.terms_.back().second += t.second;
    else {
      if (!out.terms_.empty() && sgn(out.terms_.back().second) == 0)
        out.terms_.pop_back();
      out.terms_.push_back(std::move(t));
    }
  }
  if (!out.terms_.empty() && sgn(out.terms_.back().second) == 0)
    out.terms_.pop_back();
  return out;
}

bool ExpPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].first.is_origin());
}

Rational ExpPoly::constant_term() const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), LinForm{},
                             [](const Term& t, const LinForm& e) { return t.first < e; });
  if (it != terms_.end() && it->first.is_origin())
    return it->second;
  return Rational(0);
}

namespace {

template <class Combine>
std::vector<ExpPoly::Term> merge_terms(const std::vector<ExpPoly::Term>& a,
                                       const std::vector<ExpPoly::Term>& b, Combine sign) {
  std::vector<ExpPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.emplace_back(j->first, sign(j->second));
      ++j;
    } else {
      Rational c = i->second + sign(j->second);
      if (sgn(c) != 0)
        out.emplace_back(i->first, std::move(c));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

ExpPoly& ExpPoly::operator+=(const ExpPoly& o) {
  if (o.is_zero())
    return *this;
  terms_ = merge_terms(terms_, o.terms_, [](const Rational& c) { return c; });
  return *this;
}

ExpPoly& ExpPoly::operator-=(const ExpPoly& o) {
  if (o.is_zero())
    return *this;
  terms_ = merge_terms(terms_, o.terms_, [](const Rational& c) { return Rational(-c); });
  return *this;
}

ExpPoly& ExpPoly::operator*=(const ExpPoly& o) {
  *this = *this * o;
  return *this;
}

ExpPoly& ExpPoly::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_)
    t.second *= c;
  return *this;
}

ExpPoly ExpPoly::operator-() const {
  ExpPoly r = *this;
  for (auto& t : r.terms_)
    t.second = -t.second;
  return r;
}

ExpPoly ExpPoly::shifted(const LinForm& shift) const {
  ExpPoly r = *this;
  for (auto& t : r.terms_)
    t.first = t.first + shift;
  return r;
}

ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
  if (a.is_zero() || b.is_zero())
    return ExpPoly();
  const ExpPoly& big = a.size() >= b.size() ? a : b;
  const ExpPoly& small = a.size() >= b.size() ? b : a;
  if (small.is_monomial()) {
    ExpPoly r = big.shifted(small.terms_[0].first);
    return r *= small.terms_[0].second;
  }
  std::vector<ExpPoly::Term> prod;
  prod.reserve(a.size() * b.size());
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      prod.emplace_back(ea + eb, ca * cb);
  return ExpPoly::from_terms(std::move(prod));
}

bool operator==(const ExpPoly& a, const ExpPoly& b) {
  if (a.terms_.size() != b.terms_.size())
    return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].first == b.terms_[i].first) || a.terms_[i].second != b.terms_[i].second)
      return false;
  return true;
}

std::uint64_t ExpPoly::hash() const {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](const std::string& s) {
    for (unsigned char ch : s) {
      h ^= ch;
      h *= 1099511628211ULL;
    }
    h ^= 0xff;
    h *= 1099511628211ULL;
  };
  for (const auto& [e, c] : terms_) {
    mix(e.t_coef.get_str());
    mix(e.x_coef.get_str());
    mix(c.get_str());
  }
  return h;
}

ExpPoly deriv(const ExpPoly& f, int i, int j, const WaveConstants& w) {
  std::vector<ExpPoly::Term> out;
  out.reserve(f.size());
  for (const auto& [e, c] : f.terms()) {
    Rational s = w.derivative_factor(i, j, e);
    if (sgn(s) != 0)
      out.emplace_back(e, c * s);
  }
  return ExpPoly::from_terms(std::move(out));
}

std::optional<ExpPoly> divide_exact(const ExpPoly& a, const ExpPoly& b) {
  if (b.is_zero())
    throw DivisionByZeroField("exact division by the zero exponential polynomial");
  if (a.is_zero())
    return ExpPoly();
  if (b.is_monomial()) {
    ExpPoly q = a.shifted(-b.terms()[0].first);
    return q *= Rational(1 / b.terms()[0].second);
  }

  // The quotient's exponents must fit in the difference of bounding boxes.
  auto box = [](const ExpPoly& p) {
    Rational tmin = p.lowest().first.t_coef, tmax = p.highest().first.t_coef;
    Rational xmin = p.terms()[0].first.x_coef, xmax = xmin;
    for (const auto& [e, c] : p.terms()) {
      if (e.x_coef < xmin)
        xmin = e.x_coef;
      if (e.x_coef > xmax)
        xmax = e.x_coef;
    }
    return std::array<Rational, 4>{tmin, tmax, xmin, xmax};
  };
  auto ba = box(a), bb = box(b);
  Rational qtmin = ba[0] - bb[0], qtmax = ba[1] - bb[1];
  Rational qxmin = ba[2] - bb[2], qxmax = ba[3] - bb[3];
  if (qtmin > qtmax || qxmin > qxmax)
    return std::nullopt;

  std::map<LinForm, Rational> rem;
  for (const auto& t : a.terms())
    rem.emplace(t.first, t.second);
  const auto& [lead_e, lead_c] = b.highest();
  std::vector<ExpPoly::Term> quot;
  while (!rem.empty()) {
    auto top = std::prev(rem.end());
    LinForm qe = top->first - lead_e;
    if (qe.t_coef < qtmin || qe.t_coef > qtmax || qe.x_coef < qxmin || qe.x_coef > qxmax)
      return std::nullopt;
    Rational qc = top->second / lead_c;
    for (const auto& [e, c] : b.terms()) {
      LinForm k = qe + e;
      auto it = rem.find(k);
      if (it == rem.end())
        rem.emplace(std::move(k), -qc * c);
      else {
        it->second -= qc * c;
        if (sgn(it->second) == 0)
          rem.erase(it);
      }
    }
    quot.emplace_back(std::move(qe), std::move(qc));
  }
  std::reverse(quot.begin(), quot.end());
  return ExpPoly::from_terms(std::move(quot));
}

long double eval(const ExpPoly& f, long double t, long double x) {
  long double s = 0.0L;
  for (const auto& [e, c] : f.terms())
    s += to_long_double(c) * std::exp(to_long_double(e.t_coef) * t + to_long_double(e.x_coef) * x);
  return s;
}

std::string to_string(const ExpPoly& f) {
  if (f.is_zero())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    if (!first)
      os << " + ";
    first = false;
    os << c.get_str();
    if (!e.is_origin())
      os << "*e^{(" << e.t_coef.get_str() << ")t+(" << e.x_coef.get_str() << ")x}";
  }
  return os.str();
}

}  // namespace nwave
