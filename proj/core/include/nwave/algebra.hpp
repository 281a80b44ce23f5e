#pragma once

#include "nwave/exp_rational.hpp"

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nwave {

enum class Algebra { A2, B2, G2 };

std::string to_string(Algebra a);
/// Accepts "A2", "B2", "G2" (case-insensitive). Throws std::invalid_argument.
Algebra parse_algebra(std::string_view name);

/// The field f^{sign}_{p.q}.
struct RootLabel {
  int p = 0;
  int q = 0;
  char sign = '-';

  /// "f+1.0", "f-2.3", ...
  std::string name() const;
  RootLabel flipped() const { return {p, q, sign == '+' ? '-' : '+'}; }

  friend auto operator<=>(const RootLabel&, const RootLabel&) = default;
};

/// Parses names produced by RootLabel::name(). Throws std::invalid_argument.
RootLabel parse_root(std::string_view name);

inline RootLabel plus(int p, int q) { return {p, q, '+'}; }
inline RootLabel minus(int p, int q) { return {p, q, '-'}; }

struct BilinearTerm {
  Rational coef;
  RootLabel a;
  RootLabel b;
};

/// D_{i,j} f_lhs = sum coef * f_a * f_b
struct EquationSpec {
  RootLabel lhs;
  int i = 0;
  int j = 0;
  std::vector<BilinearTerm> rhs;
};

struct AlgebraModel {
  Algebra name;
  std::array<std::array<int, 2>, 2> cartan;
  /// Positive roots (p, q) in the order used for reports.
  std::vector<std::pair<int, int>> positive_roots;
  /// Every signed label: all f+ first, then all f-.
  std::vector<RootLabel> roots;
  std::vector<EquationSpec> equations;

  bool has_root(const RootLabel& r) const;
  const EquationSpec& equation_for(const RootLabel& lhs) const;
};

const AlgebraModel& model(Algebra name);

/// Assignment of a field to every signed root of one algebra.
class FieldConfig {
public:
  /// All fields zero.
  FieldConfig(Algebra algebra, WaveConstants constants);

  Algebra algebra() const { return algebra_; }
  const WaveConstants& constants() const { return constants_; }

  /// Throws std::out_of_range for labels outside the algebra.
  const ExpRational& operator[](const RootLabel& r) const;
  ExpRational& operator[](const RootLabel& r);

  const std::map<RootLabel, ExpRational>& fields() const { return fields_; }

  /// Exact field-by-field equality (constants must agree too).
  friend bool operator==(const FieldConfig& a, const FieldConfig& b);

private:
  Algebra algebra_;
  WaveConstants constants_;
  std::map<RootLabel, ExpRational> fields_;
};

/// D_{i,j} f_lhs - sum coef f_a f_b; zero iff the equation holds identically.
ExpRational residual(const AlgebraModel& m, const FieldConfig& cfg, const EquationSpec& e);

/// Equations in a canonical order with merged, ordered right-hand sides,
/// so two systems can be compared structurally.
std::vector<EquationSpec> canonical_system(std::vector<EquationSpec> eqs);
bool same_system(const std::vector<EquationSpec>& a, const std::vector<EquationSpec>& b);

/// Image of a system under f^+ <-> f^-.
std::vector<EquationSpec> sign_swapped(const std::vector<EquationSpec>& eqs);

/// Signed relabelling f_X -> s_X f_{sigma(X)} together with
/// D_{i,j} -> s_{i,j} D_{sigma(i,j)}.
struct Substitution {
  std::map<RootLabel, std::pair<int, RootLabel>> fields;
  std::map<std::pair<int, int>, std::pair<int, std::pair<int, int>>> derivatives;
};

/// Rewrites each equation through the substitution and solves it again for
/// the derivative of the image field.
std::vector<EquationSpec> substituted(const std::vector<EquationSpec>& eqs,
                                      const Substitution& s);

/// The G2 exchange 1.0 <-> 1.3, 1.1 <-> 1.2 (with sign -1), 2.3 -> -2.3,
/// f^{+-}_{0.1} -> dual_sign * f^{-+}_{0.1}.
Substitution g2_exchange(int dual_sign = 1);

/// Wave constants under which the exchanged derivatives become the plain
/// D operators: (c1 + 3 c2, -c2, d1 + 3 d2, -d2).
WaveConstants g2_exchange_constants(const WaveConstants& w);

/// Applies the field part of a substitution to a configuration.
FieldConfig apply_substitution(const Substitution& s, const FieldConfig& cfg,
                               const WaveConstants& target_constants);

}  // namespace nwave
