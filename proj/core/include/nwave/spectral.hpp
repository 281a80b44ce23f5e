#pragma once

#include "nwave/algebra.hpp"

#include <vector>

namespace nwave {

/// One Dirac spike of a spectral measure: weight * delta(. - pos).
struct Spike {
  Rational pos;
  Rational weight;
};

struct SpectralData {
  WaveConstants constants;
  std::vector<Spike> pspikes;  // measure P on lambda (first simple root)
  std::vector<Spike> qspikes;  // measure Q on mu (second simple root)
};

/// Throws InvalidSpectralData naming the first violated condition.
void validate(const SpectralData& s);

/// Sign attached to the one-lambda, two-mu G2 initial field; fixed by the
/// exact residual check of the G2 system.
inline const Rational kG2InitialSign12{1};
/// Sign attached to the two-lambda, three-mu G2 initial field.
inline const Rational kG2InitialSign23{-1};

/// Deterministic spike sets used by the suites, tests and benchmarks: np P
/// spikes and nq Q spikes (np <= 5, nq <= 8), with variant selecting one of
/// three sets of wave constants and shifted positions.
SpectralData sample_spectral(int np, int nq, int variant = 0);

/// Lower-triangular solution: every f+ is zero and each f- is the spike
/// instantiation of its iterated-integral formula.
FieldConfig initial_config(const AlgebraModel& m, const SpectralData& s);

}  // namespace nwave
