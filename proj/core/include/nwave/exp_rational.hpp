#pragma once

#include "nwave/exp_poly.hpp"

#include <utility>
#include <vector>

namespace nwave {

/// Ratio of two exponential polynomials.
///
/// The denominator is kept as a list of distinct non-monomial factors, each
/// scaled so that its least term is exactly 1, together with multiplicities.
/// Monomial denominators are folded into the numerator. Keeping the factors
/// apart lets repeated quotient-rule derivatives stay small, and the expanded
/// denominator always has least term 1.
class ExpRational {
public:
  using Factor = std::pair<ExpPoly, int>;

  ExpRational() = default;
  explicit ExpRational(const Rational& c) : num_(c) {}
  ExpRational(ExpPoly num) : num_(std::move(num)) {}  // NOLINT: implicit lift
  /// Throws DivisionByZeroField when den is zero.
  ExpRational(ExpPoly num, const ExpPoly& den);

  const ExpPoly& num() const { return num_; }
  const std::vector<Factor>& den_factors() const { return den_; }
  /// Expanded denominator; its lexicographically least term has coefficient 1.
  ExpPoly den() const;

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.empty(); }
  /// Denominator-free value, if the ratio reduces to one.
  std::optional<ExpPoly> as_poly() const;
  /// Rational constant, if the ratio is one.
  std::optional<Rational> as_constant() const;

  ExpRational& operator+=(const ExpRational& o);
  ExpRational& operator-=(const ExpRational& o);
  ExpRational& operator*=(const ExpRational& o);
  ExpRational& operator*=(const Rational& c);
  /// Throws DivisionByZeroField when o is zero.
  ExpRational& operator/=(const ExpRational& o);

  friend ExpRational operator+(ExpRational a, const ExpRational& b) { return a += b; }
  friend ExpRational operator-(ExpRational a, const ExpRational& b) { return a -= b; }
  friend ExpRational operator*(ExpRational a, const ExpRational& b) { return a *= b; }
  friend ExpRational operator*(ExpRational a, const Rational& c) { return a *= c; }
  friend ExpRational operator*(const Rational& c, ExpRational a) { return a *= c; }
  friend ExpRational operator/(ExpRational a, const ExpRational& b) { return a /= b; }
  ExpRational operator-() const;

  /// Exact equality as functions (cross-multiplied).
  friend bool operator==(const ExpRational& a, const ExpRational& b);
  friend bool operator!=(const ExpRational& a, const ExpRational& b) { return !(a == b); }

  /// Multiplicative inverse; throws DivisionByZeroField on zero.
  ExpRational inverse() const;

private:
  friend ExpRational rderiv(const ExpRational& f, int i, int j, const WaveConstants& w);

  void add_factor(ExpPoly f, int mult);
  void cancel();

  ExpPoly num_;
  std::vector<Factor> den_;
};

/// D_{i,j} applied with the quotient rule.
ExpRational rderiv(const ExpRational& f, int i, int j, const WaveConstants& w);

/// D_{i,j} ln f = D_{i,j} f / f. Throws DivisionByZeroField on f = 0.
ExpRational log_deriv(const ExpRational& f, int i, int j, const WaveConstants& w);

/// D_{i1,j1} D_{i2,j2} ln f.
ExpRational log_deriv2(const ExpRational& f, int i1, int j1, int i2, int j2,
                       const WaveConstants& w);

/// Threshold below which a denominator value counts as a pole.
inline constexpr long double kPoleThreshold = 1e-30L;

/// Extended-precision evaluation; throws EvalPole near a zero of the denominator.
long double eval(const ExpRational& f, long double t, long double x);

std::string to_string(const ExpRational& f);

}  // namespace nwave
