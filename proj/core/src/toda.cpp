#include "nwave/toda.hpp"

#include "nwave/errors.hpp"
#include "nwave/tau.hpp"

#include <stdexcept>

namespace nwave {

ExpPoly det_bareiss(PolyMatrix a) {
  const std::size_t n = a.size();
  if (n == 0)
    return ExpPoly(Rational(1));
  bool negate = false;
  ExpPoly prev(Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero())
        ++r;
      if (r == n)
        return ExpPoly();
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        ExpPoly v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        auto q = divide_exact(v, prev);
        if (!q)
          throw std::logic_error("fraction-free elimination produced an inexact quotient");
        a[i][j] = std::move(*q);
      }
      a[i][k] = ExpPoly();
    }
    prev = a[k][k];
  }
  ExpPoly d = a[n - 1][n - 1];
  return negate ? -d : d;
}

ExpPoly det_cofactor(const PolyMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0)
    return ExpPoly(Rational(1));
  if (n == 1)
    return a[0][0];
  ExpPoly total;
  for (std::size_t c = 0; c < n; ++c) {
    if (a[0][c].is_zero())
      continue;
    PolyMatrix minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<ExpPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c)
          row.push_back(a[r][k]);
      minor.push_back(std::move(row));
    }
    ExpPoly term = a[0][c] * det_cofactor(minor);
    if (c % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

HankelChain::HankelChain(ExpPoly seed, WaveConstants w, int di, int dj)
    : w_(std::move(w)), di_(di), dj_(dj) {
  derivs_.push_back(std::move(seed));
}

const ExpPoly& HankelChain::derivative(int k) {
  while (static_cast<int>(derivs_.size()) <= k)
    derivs_.push_back(deriv(derivs_.back(), di_, dj_, w_));
  return derivs_[static_cast<std::size_t>(k)];
}

PolyMatrix HankelChain::matrix(int n) {
  PolyMatrix m(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[static_cast<std::size_t>(i)].push_back(derivative(i + j));
  return m;
}

const ExpPoly& HankelChain::det(int n) {
  static const ExpPoly zero;
  if (n < -1)
    throw std::invalid_argument("Hankel minor index below -1");
  if (n == -1)
    return zero;
  while (static_cast<int>(dets_.size()) <= n) {
    int k = static_cast<int>(dets_.size());
    dets_.push_back(det_bareiss(matrix(k)));
  }
  return dets_[static_cast<std::size_t>(n)];
}

ExpRational toda_residual(HankelChain& chain, int n) {
  const ExpPoly& dn = chain.det(n);
  if (dn.is_zero())
    throw PivotZero("Hankel minor Det_" + std::to_string(n) + " is identically zero",
                    "Det_" + std::to_string(n));
  ExpRational lhs = log_deriv2(ExpRational(dn), chain.di(), chain.dj(), chain.di(), chain.dj(),
                               chain.constants());
  ExpRational rhs(chain.det(n - 1) * chain.det(n + 1), dn * dn);
  return lhs - rhs;
}

ExpPoly hankel_integral_form(const SpectralData& s, int n) { return tau_U(s, 0, n); }

ABChain ab_step(const ABChain& prev, HankelChain& chain) {
  const int n = prev.level;
  const auto& w = chain.constants();
  ExpRational dn(chain.det(n));
  ExpRational dn1(chain.det(n + 1));
  ExpRational dnm1(chain.det(n - 1));
  if (dn.is_zero())
    throw PivotZero("Hankel minor Det_" + std::to_string(n) + " is identically zero",
                    "Det_" + std::to_string(n));
  if (dn1.is_zero())
    throw PivotZero("Hankel minor Det_" + std::to_string(n + 1) + " is identically zero",
                    "Det_" + std::to_string(n + 1));
  auto D = [&](const ExpRational& f) { return rderiv(f, 1, 0, w); };
  const Rational half(1, 2), quarter(1, 4);

  const ExpRational& a = prev.a;
  const ExpRational& b = prev.b;
  ExpRational db = D(b);
  ExpRational ddn1 = D(dn1);
  ExpRational ratio = ddn1 / dn1;

  ABChain next;
  next.level = n + 1;
  next.a = (half * dn1 * db - b * ddn1) / dn;
  ExpRational dn2 = dn * dn;
  ExpRational bracket = (quarter * D(db) - ratio * db + ratio * ratio * b) / dn2;
  ExpRational mid = (a * ddn1 - dn1 * D(a)) / (Rational(2) * dn2 * dn);
  ExpRational last = dn1 * (a * D(dn) + b * dnm1) / (Rational(2) * dn2 * dn2);
  next.b = (bracket + mid + last) * dn1 * dn1;
  return next;
}

ABChain ab_closed(const SpectralData& s, int n) {
  if (n < 0)
    throw std::invalid_argument("chain level must be non-negative");
  return {n, ExpRational(tau_groups(s, 1, {n, n + 1})),
          ExpRational(tau_groups(s, 1, {n + 1, n + 1}))};
}

namespace {

std::vector<ExpPoly> derivatives(const ExpPoly& f, const WaveConstants& w, int count) {
  std::vector<ExpPoly> out{f};
  for (int k = 1; k < count; ++k)
    out.push_back(deriv(out.back(), 0, 1, w));
  return out;
}

}  // namespace

ExpPoly bordered_single(const ExpPoly& f10, const ExpPoly& f11, const WaveConstants& w,
                        int size) {
  if (size <= 0)
    throw std::invalid_argument("bordered determinant needs size >= 1");
  auto r = derivatives(f10, w, 2 * size);
  auto g = derivatives(f11, w, size);
  PolyMatrix m(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j)
      m[i].push_back(j + 1 == size ? g[i] : r[i + j]);
  return det_bareiss(std::move(m));
}

ExpPoly bordered_double(const ExpPoly& f10, const ExpPoly& f11, const ExpPoly& f12,
                        const WaveConstants& w, int size) {
  if (size <= 0)
    throw std::invalid_argument("bordered determinant needs size >= 1");
  auto r = derivatives(f10, w, 2 * size);
  auto g = derivatives(f11, w, size);
  PolyMatrix m(static_cast<std::size_t>(size));
  const int last = size - 1;
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) {
      if (i == last && j == last)
        m[i].push_back(f12);
      else if (j == last)
        m[i].push_back(g[i]);
      else if (i == last)
        m[i].push_back(g[j]);
      else
        m[i].push_back(r[i + j]);
    }
  return det_bareiss(std::move(m));
}

FieldConfig first_root_chain(const FieldConfig& cfg, int steps) {
  if (cfg.algebra() != Algebra::B2)
    throw std::invalid_argument("the first-root chain is defined for B2 configurations");
  if (steps < 0)
    throw std::invalid_argument("step count must be non-negative");
  for (const auto& [r, f] : cfg.fields())
    if (r.sign == '+' && !f.is_zero())
      throw std::invalid_argument("the first-root chain starts from vanishing f+ fields");
  if (steps == 0)
    return cfg;
  auto poly = [&](const RootLabel& r) {
    auto p = cfg[r].as_poly();
    if (!p)
      throw std::invalid_argument(r.name() + " must be an exponential polynomial");
    return *p;
  };
  const ExpPoly f10 = poly(minus(1, 0));
  const ExpPoly f11 = poly(minus(1, 1));
  const ExpPoly f12 = poly(minus(1, 2));
  const auto& w = cfg.constants();
  HankelChain h(f10, w, 0, 1);
  const ExpPoly& dn = h.det(steps);
  if (dn.is_zero())
    throw PivotZero("Hankel minor Det_" + std::to_string(steps) + " of f-1.0 vanishes",
                    "Det_" + std::to_string(steps));

  FieldConfig out(Algebra::B2, w);
  out[minus(1, 0)] = ExpRational(h.det(steps + 1), dn);
  out[plus(1, 0)] = ExpRational(h.det(steps - 1), dn);
  out[minus(0, 1)] = ExpRational(bordered_single(f10, f11, w, steps), dn);
  out[minus(1, 1)] = ExpRational(bordered_single(f10, f11, w, steps + 1), dn);
  out[minus(1, 2)] = ExpRational(bordered_double(f10, f11, f12, w, steps + 1), dn);
  return out;
}

}  // namespace nwave
