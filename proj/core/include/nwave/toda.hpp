#pragma once

#include "nwave/spectral.hpp"

#include <deque>
#include <vector>

namespace nwave {

using PolyMatrix = std::vector<std::vector<ExpPoly>>;

/// Determinant by fraction-free (Bareiss) elimination with exact division.
ExpPoly det_bareiss(PolyMatrix a);
/// Determinant by Laplace expansion along the first row (reference for small sizes).
ExpPoly det_cofactor(const PolyMatrix& a);

/// Leading principal minors of the Hankel matrix [D^{i+j} r], D = D_{i,j}.
class HankelChain {
public:
  HankelChain(ExpPoly seed, WaveConstants w, int di = 1, int dj = 0);

  const ExpPoly& seed() const { return derivs_.front(); }
  const WaveConstants& constants() const { return w_; }
  int di() const { return di_; }
  int dj() const { return dj_; }

  /// D^k r, cached.
  const ExpPoly& derivative(int k);
  /// n x n Hankel matrix.
  PolyMatrix matrix(int n);
  /// Det_n for n >= -1, with Det_{-1} = 0 and Det_0 = 1. Cached.
  const ExpPoly& det(int n);

private:
  WaveConstants w_;
  int di_, dj_;
  std::deque<ExpPoly> derivs_;
  std::deque<ExpPoly> dets_;
};

/// D^2 ln Det_n - Det_{n-1} Det_{n+1} / Det_n^2. Throws PivotZero if Det_n = 0.
ExpRational toda_residual(HankelChain& chain, int n);

/// Subset-sum form of Det_n for the seed f-0.1 built from the Q spikes:
/// sum over n-subsets of prod w * W^2(mu) * e^{sum mu (d2 t - c2 x)}.
ExpPoly hankel_integral_form(const SpectralData& s, int n);

/// f-1.1 = A^n / Det_n^2 and f-1.2 = B^n / Det_n^2 along the second-root chain.
struct ABChain {
  int level = 0;
  ExpRational a;
  ExpRational b;
};

/// Level n+1 from level n through the two recursions, with the Toda
/// minors of chain (seed f-0.1, direction D_{1,0}).
ABChain ab_step(const ABChain& prev, HankelChain& chain);

/// Closed forms at level n: A^n couples one lambda to independent Q-groups of
/// sizes n and n+1, B^n to two groups of size n+1.
ABChain ab_closed(const SpectralData& s, int n);

/// Bordered determinants of the first-root chain at size n+1: the Hankel
/// matrix of f-1.0 under D_{0,1}, with the last column (single) or last
/// column and row (double, corner f-1.2) replaced by D_{0,1}-derivatives of f-1.1.
ExpPoly bordered_single(const ExpPoly& f10, const ExpPoly& f11, const WaveConstants& w, int size);
ExpPoly bordered_double(const ExpPoly& f10, const ExpPoly& f11, const ExpPoly& f12,
                        const WaveConstants& w, int size);

/// Fields after n steps of the first-root chain started from a B2
/// configuration whose f+ fields vanish: f-1.0 = Det_{n+1}/Det_n,
/// f+1.0 = Det_{n-1}/Det_n, f-0.1 = single_n/Det_n, f-1.1 = single_{n+1}/Det_n,
/// f-1.2 = double_{n+1}/Det_n. Throws PivotZero when Det_n vanishes.
FieldConfig first_root_chain(const FieldConfig& cfg, int steps);

}  // namespace nwave
