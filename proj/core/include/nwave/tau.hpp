#pragma once

#include "nwave/spectral.hpp"

#include <vector>

namespace nwave {

/// prod_{i<j} (x_j - x_i)^2
Rational vandermonde_sq(const std::vector<Rational>& xs);

/// Subset sum over an n1-subset of P and independent subsets of Q with the
/// given sizes:
///   sum w * W^2(lambda) prod_g W^2(mu_g) / prod_g prod (lambda - mu_g) * e^{...}
/// Groups are not coupled to each other. Zero if any order is negative or
/// exceeds the spike count.
ExpPoly tau_groups(const SpectralData& s, int n1, const std::vector<int>& qgroups);

/// U(n1, n2): one Q-group.
ExpPoly tau_U(const SpectralData& s, int n1, int n2);
/// V(n1; n2, n3): two Q-groups.
ExpPoly tau_V_B2(const SpectralData& s, int n1, int n2, int n3);
/// V(n1; n2, n3, n4): three Q-groups.
ExpPoly tau_V_G2(const SpectralData& s, int n1, int n2, int n3, int n4);

struct CalibrationEntry {
  Algebra algebra;
  RootLabel field;
  Rational factor;
  const char* reason;
};

/// Per-field constants multiplying the raw tau ratios. Fields not listed use 1.
const std::vector<CalibrationEntry>& calibration_table();
Rational calibration(Algebra a, const RootLabel& field);

/// Ratio-of-tau solution after n1 steps along the first simple root and n2
/// steps along the second. Throws TauZero when the common denominator
/// vanishes identically.
FieldConfig solution_from_tau(const AlgebraModel& m, const SpectralData& s, int n1, int n2,
                              bool calibrated = true);

/// Constant relating T1^n1 T2^n2 applied to the A2 initial config to the
/// calibrated tau solution (n1, n2): fields with odd first index carry (-1)^n2.
Rational a2_chain_constant(const RootLabel& field, int n2);

/// Numerator orders (n1 shift, per-group shifts) of each field of an algebra.
struct RatioShape {
  RootLabel field;
  int dn1;
  std::vector<int> dgroups;
};
const std::vector<RatioShape>& ratio_shapes(Algebra a);

/// Both sides of the symmetrized identity
///   W^2_{n+1}(mu)/prod(lambda-mu) (sum mu - sum d) W^2_{n+1}(d)
///     = W^2_{n+2}(mu, d_{n+1})/prod(lambda-mu)(lambda-d_{n+1}) W^2_n(d_1..d_n)
/// with factorials folded into the Vandermonde factors, summed over spikes.
/// With identify = false the extra entry of the long group is an independent
/// variable instead of d_{n+1}.
std::pair<ExpPoly, ExpPoly> gra_sides(const SpectralData& s, int n, bool identify = true);
bool check_gra(const SpectralData& s, int n, bool identify = true);

}  // namespace nwave
