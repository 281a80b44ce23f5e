#pragma once

#include "nwave/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace nwave {

/// Exponent of a single exponential e^{t_coef * t + x_coef * x}.
struct LinForm {
  Rational t_coef;
  Rational x_coef;

  friend bool operator==(const LinForm& a, const LinForm& b) {
    return a.t_coef == b.t_coef && a.x_coef == b.x_coef;
  }
  friend bool operator<(const LinForm& a, const LinForm& b) {
    int c = cmp(a.t_coef, b.t_coef);
    return c < 0 || (c == 0 && a.x_coef < b.x_coef);
  }
  friend LinForm operator+(const LinForm& a, const LinForm& b) {
    return {a.t_coef + b.t_coef, a.x_coef + b.x_coef};
  }
  friend LinForm operator-(const LinForm& a, const LinForm& b) {
    return {a.t_coef - b.t_coef, a.x_coef - b.x_coef};
  }
  LinForm operator-() const { return {-t_coef, -x_coef}; }
  bool is_origin() const { return sgn(t_coef) == 0 && sgn(x_coef) == 0; }
};

/// The constants (c1, c2, d1, d2) fixing the characteristic directions.
class WaveConstants {
public:
  /// Throws InvalidSpectralData when c1*d2 - c2*d1 == 0.
  WaveConstants(Rational c1, Rational c2, Rational d1, Rational d2);

  const Rational& c1() const { return c1_; }
  const Rational& c2() const { return c2_; }
  const Rational& d1() const { return d1_; }
  const Rational& d2() const { return d2_; }
  const Rational& delta() const { return delta_; }

  /// Exponent of e^{lambda (d1 t - c1 x) + mu (d2 t - c2 x)}.
  LinForm spectral_exponent(const Rational& lambda, const Rational& mu) const;

  /// Multiplier of D_{i,j} on the exponential with exponent e.
  Rational derivative_factor(int i, int j, const LinForm& e) const;

  friend bool operator==(const WaveConstants& a, const WaveConstants& b) {
    return a.c1_ == b.c1_ && a.c2_ == b.c2_ && a.d1_ == b.d1_ && a.d2_ == b.d2_;
  }

private:
  Rational c1_, c2_, d1_, d2_, delta_;
};

/// Finite sum of rational coefficients times exponentials of linear forms.
/// Terms are kept sorted by exponent with no zero coefficients, so equal
/// values have equal representations.
class ExpPoly {
public:
  using Term = std::pair<LinForm, Rational>;

  ExpPoly() = default;
  explicit ExpPoly(const Rational& c);
  ExpPoly(LinForm e, const Rational& c);

  /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
  static ExpPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Zero or a single term with exponent 0.
  bool is_constant() const;
  /// Coefficient of the exponent-0 term.
  Rational constant_term() const;

  const Term& lowest() const { return terms_.front(); }
  const Term& highest() const { return terms_.back(); }

  ExpPoly& operator+=(const ExpPoly& o);
  ExpPoly& operator-=(const ExpPoly& o);
  ExpPoly& operator*=(const ExpPoly& o);
  ExpPoly& operator*=(const Rational& c);

  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b);
  friend ExpPoly operator*(ExpPoly a, const Rational& c) { return a *= c; }
  friend ExpPoly operator*(const Rational& c, ExpPoly a) { return a *= c; }
  ExpPoly operator-() const;

  /// Multiplies by the single exponential e^{shift}.
  ExpPoly shifted(const LinForm& shift) const;

  friend bool operator==(const ExpPoly& a, const ExpPoly& b);

  /// Stable 64-bit fingerprint of the canonical representation.
  std::uint64_t hash() const;

private:
  std::vector<Term> terms_;
};

/// D_{i,j} = ((i c1 + j c2) d/dt + (i d1 + j d2) d/dx) / delta.
ExpPoly deriv(const ExpPoly& f, int i, int j, const WaveConstants& w);

/// Quotient a / b when b divides a exactly, nullopt otherwise.
/// Throws DivisionByZeroField when b is zero.
std::optional<ExpPoly> divide_exact(const ExpPoly& a, const ExpPoly& b);

/// Long-double approximation of an exact rational.
long double to_long_double(const Rational& q);

/// Extended-precision evaluation at a point.
long double eval(const ExpPoly& f, long double t, long double x);

/// Human readable rendering, e.g. "3/2*e^{(1)t+(-1/2)x} + 1".
std::string to_string(const ExpPoly& f);

}  // namespace nwave
