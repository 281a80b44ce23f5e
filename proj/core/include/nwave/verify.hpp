#pragma once

#include "nwave/algebra.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nwave {

enum class Mode { Exact, Numeric };

std::string to_string(Mode m);
/// Accepts "exact" or "numeric". Throws std::invalid_argument.
Mode parse_mode(std::string_view name);

/// Relative tolerance of numeric comparisons and the magnitude below which
/// values count as zero-sized for the relative scale.
inline constexpr long double kRelTol = 1e-9L;
inline constexpr long double kMagnitudeFloor = 1e-12L;

/// Number of largest-coefficient terms kept when rendering a counterexample.
inline constexpr std::size_t kCounterexampleTerms = 20;

struct GridPoint {
  Rational t;
  Rational x;
};

/// (t, x) in {-1, 0, 1/2} x {-1/3, 0, 1}, t-major.
const std::vector<GridPoint>& numeric_grid();

struct Counterexample {
  std::string check;
  /// The offending value truncated to its largest coefficients.
  std::string rendering;
  std::size_t total_terms = 0;
  std::uint64_t hash = 0;
};

Counterexample make_counterexample(std::string check, const ExpPoly& value);

struct CheckResult {
  std::string name;
  bool pass = false;
  /// Ungated checks are recorded findings and never change the verdict.
  bool gated = true;
  std::string detail;
  std::optional<Counterexample> counterexample;
};

struct Report {
  std::string subject;
  Mode mode = Mode::Exact;
  std::vector<CheckResult> checks;

  std::size_t passed() const;
  /// Gated checks that failed.
  std::size_t failed() const;
  /// Ungated checks, whatever their outcome.
  std::size_t recorded() const;
  /// True iff every gated check passed.
  bool pass() const;
  /// Counterexample of the first failing gated check, else of the first
  /// failing ungated one.
  std::optional<Counterexample> first_counterexample() const;
};

/// One check per equation of the algebra, in model order. Numeric mode
/// evaluates both sides at every grid point; pole points are counted in the
/// detail and skipped.
Report verify_config(const AlgebraModel& m, const FieldConfig& cfg, Mode mode = Mode::Exact);

/// "a2-full", "b2-full", "g2-hypothesis", "toda", "appendix",
/// "transforms-algebra", "gra".
const std::vector<std::string>& suite_names();

/// Runs a named suite on its fixed datasets. Independent checks run
/// concurrently; the report lists them in a fixed order.
/// Throws std::invalid_argument for unknown names.
Report verify_suite(std::string_view name, Mode mode = Mode::Exact);

}  // namespace nwave
