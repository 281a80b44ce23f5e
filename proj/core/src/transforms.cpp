#include "nwave/transforms.hpp"

#include "nwave/errors.hpp"

#include <stdexcept>

namespace nwave {

namespace {

struct IdInfo {
  TransformId id;
  const char* full;
  const char* short_name;
  Algebra algebra;
};

constexpr IdInfo kIds[] = {
    {TransformId::A2_T1, "A2_T1", "T1", Algebra::A2},
    {TransformId::A2_T2, "A2_T2", "T2", Algebra::A2},
    {TransformId::A2_T3, "A2_T3", "T3", Algebra::A2},
    {TransformId::B2_TM, "B2_TM", "TM", Algebra::B2},
    {TransformId::B2_T10, "B2_T10", "T10", Algebra::B2},
    {TransformId::B2_T10_INV, "B2_T10_INV", "T10_INV", Algebra::B2},
    {TransformId::B2_T2A2, "B2_T2A2", "T2A2", Algebra::B2},
    {TransformId::G2_T1, "G2_T1", "T1", Algebra::G2},
    {TransformId::G2_TA1_3A2, "G2_TA1_3A2", "TA1_3A2", Algebra::G2},
};

const IdInfo& info(TransformId id) {
  for (const auto& i : kIds)
    if (i.id == id)
      return i;
  throw std::invalid_argument("unknown transformation");
}

// Shorthands over one set of wave constants.
struct Ops {
  const WaveConstants& w;
  ExpRational D(const ExpRational& f, int i, int j) const { return rderiv(f, i, j, w); }
  ExpRational L(const ExpRational& f, int i, int j) const { return log_deriv(f, i, j, w); }
  ExpRational L2(const ExpRational& f, int i1, int j1, int i2, int j2) const {
    return log_deriv2(f, i1, j1, i2, j2, w);
  }
};

const ExpRational& pivot(const FieldConfig& f, const RootLabel& r, TransformId id) {
  const auto& p = f[r];
  if (p.is_zero())
    throw PivotZero(to_string(id) + " divides by " + r.name() + ", which is identically zero",
                    r.name());
  return p;
}

void check_algebra(TransformId id, const FieldConfig& cfg) {
  if (algebra_of(id) != cfg.algebra())
    throw std::invalid_argument(to_string(id) + " does not act on " +
                                to_string(cfg.algebra()) + " configurations");
}

ExpRational sq(const ExpRational& f) { return f * f; }
ExpRational cube(const ExpRational& f) { return f * f * f; }
const Rational kHalf(1, 2);
const Rational kQuarter(1, 4);

FieldConfig a2_t1(const FieldConfig& f, bool printed) {
  Ops o{f.constants()};
  const auto& m = pivot(f, minus(1, 0), TransformId::A2_T1);
  FieldConfig g = f;
  g[plus(1, 0)] = m.inverse();
  g[minus(0, 1)] = f[minus(1, 1)] / m;
  g[plus(1, 1)] = -(f[plus(0, 1)] / m);
  const auto& pre = printed ? f[minus(0, 1)] : m;
  g[plus(0, 1)] = pre * o.D(f[plus(0, 1)] / m, 1, 1);
  g[minus(1, 1)] = m * o.D(f[minus(1, 1)] / m, 0, 1);
  g[minus(1, 0)] = m * (f[plus(1, 0)] * m + o.L2(m, 0, 1, 1, 1));
  return g;
}

FieldConfig a2_t2(const FieldConfig& f) {
  Ops o{f.constants()};
  const auto& m = pivot(f, minus(0, 1), TransformId::A2_T2);
  FieldConfig g = f;
  g[plus(0, 1)] = m.inverse();
  g[minus(1, 0)] = -(f[minus(1, 1)] / m);
  g[plus(1, 1)] = f[plus(1, 0)] / m;
  g[plus(1, 0)] = -(m * o.D(f[plus(1, 0)] / m, 1, 1));
  g[minus(1, 1)] = -(m * o.D(f[minus(1, 1)] / m, 1, 0));
  g[minus(0, 1)] = m * (f[plus(0, 1)] * m + o.L2(m, 1, 0, 1, 1));
  return g;
}

FieldConfig a2_t3(const FieldConfig& f) {
  Ops o{f.constants()};
  const auto& m = pivot(f, minus(1, 1), TransformId::A2_T3);
  FieldConfig g = f;
  g[plus(1, 1)] = m.inverse();
  g[plus(1, 0)] = -(f[minus(0, 1)] / m);
  g[plus(0, 1)] = f[minus(1, 0)] / m;
  g[minus(0, 1)] = -(m * o.D(f[minus(0, 1)] / m, 1, 0));
  g[minus(1, 0)] = m * o.D(f[minus(1, 0)] / m, 0, 1);
  g[minus(1, 1)] = m * (f[plus(1, 1)] * m - o.L2(m, 1, 0, 0, 1));
  return g;
}

FieldConfig b2_tm(const FieldConfig& f) {
  Ops o{f.constants()};
  const auto& m = pivot(f, minus(1, 2), TransformId::B2_TM);
  const auto& fm01 = f[minus(0, 1)];
  const auto& fm11 = f[minus(1, 1)];
  ExpRational lm = o.L(m, 1, 0);
  FieldConfig g = f;
  g[plus(1, 2)] = m.inverse();
  g[plus(0, 1)] = fm11 / m;
  g[plus(1, 1)] = -(fm01 / m);
  g[plus(1, 0)] = f[plus(1, 0)] + sq(fm01) / m;
  g[minus(1, 0)] = f[minus(1, 0)] - sq(fm11) / m;
  g[minus(0, 1)] = -o.D(fm01, 1, 0) - f[plus(1, 1)] * m + kHalf * fm01 * lm;
  g[minus(1, 1)] = -o.D(fm11, 1, 0) + f[plus(0, 1)] * m + kHalf * fm11 * lm;
  g[minus(1, 2)] =
      m * (kQuarter * o.L2(m, 1, 0, 1, 0) +
           (fm11 * o.D(fm01, 1, 0) - fm01 * o.D(fm11, 1, 0)) / (Rational(2) * m) +
           f[plus(1, 2)] * m + f[plus(1, 1)] * fm11 + f[plus(0, 1)] * fm01);
  return g;
}

FieldConfig b2_t10(const FieldConfig& f) {
  Ops o{f.constants()};
  const auto& m = pivot(f, minus(1, 0), TransformId::B2_T10);
  const auto& fp01 = f[plus(0, 1)];
  const auto& fm11 = f[minus(1, 1)];
  ExpRational lm = o.L(m, 1, 2);
  FieldConfig g = f;
  g[plus(1, 0)] = m.inverse();
  g[minus(0, 1)] = fm11 / m;
  g[plus(1, 1)] = -(fp01 / m);
  g[plus(1, 2)] = f[plus(1, 2)] + sq(fp01) / m;
  g[minus(1, 2)] = f[minus(1, 2)] - sq(fm11) / m;
  g[plus(0, 1)] = o.D(fp01, 1, 2) - f[plus(1, 1)] * m - kHalf * fp01 * lm;
  g[minus(1, 1)] = o.D(fm11, 1, 2) + f[minus(0, 1)] * m - kHalf * fm11 * lm;
  g[minus(1, 0)] =
      m * (kQuarter * o.L2(m, 1, 2, 1, 2) -
           (fm11 * o.D(fp01, 1, 2) - fp01 * o.D(fm11, 1, 2)) / (Rational(2) * m) +
           f[plus(1, 0)] * m + f[plus(1, 1)] * fm11 + fp01 * f[minus(0, 1)]);
  return g;
}

// Solves the first-root map for the untilded fields, reusing each recovered
// field in the rows that follow.
FieldConfig b2_t10_inv(const FieldConfig& g) {
  Ops o{g.constants()};
  const auto& big = pivot(g, plus(1, 0), TransformId::B2_T10_INV);
  FieldConfig f = g;
  ExpRational m = big.inverse();
  ExpRational fp01 = -(g[plus(1, 1)] / big);
  ExpRational fm11 = g[minus(0, 1)] / big;
  ExpRational lm = o.L(m, 1, 2);
  f[minus(1, 0)] = m;
  f[plus(0, 1)] = fp01;
  f[minus(1, 1)] = fm11;
  f[plus(1, 2)] = g[plus(1, 2)] - sq(g[plus(1, 1)]) / big;
  f[minus(1, 2)] = g[minus(1, 2)] + sq(g[minus(0, 1)]) / big;
  ExpRational fm01 = (g[minus(1, 1)] - o.D(fm11, 1, 2) + kHalf * fm11 * lm) / m;
  ExpRational fp11 = (o.D(fp01, 1, 2) - kHalf * fp01 * lm - g[plus(0, 1)]) / m;
  f[minus(0, 1)] = fm01;
  f[plus(1, 1)] = fp11;
  f[plus(1, 0)] =
      (g[minus(1, 0)] / m - kQuarter * o.L2(m, 1, 2, 1, 2) +
       (fm11 * o.D(fp01, 1, 2) - fp01 * o.D(fm11, 1, 2)) / (Rational(2) * m) - fp11 * fm11 -
       fp01 * fm01) /
      m;
  return f;
}

FieldConfig b2_t10_inv_printed(const FieldConfig& g) {
  Ops o{g.constants()};
  const auto& big = pivot(g, plus(1, 0), TransformId::B2_T10_INV);
  const auto& gm01 = g[minus(0, 1)];
  const auto& gp11 = g[plus(1, 1)];
  ExpRational lb = o.L(big, 1, 2);
  FieldConfig f = g;
  f[minus(1, 0)] = big.inverse();
  f[plus(0, 1)] = -(gp11 / big);
  f[minus(1, 1)] = gm01 / big;
  f[plus(1, 2)] = g[plus(1, 2)] - sq(gp11) / big;
  f[minus(1, 2)] = g[minus(1, 2)] + sq(gm01) / big;
  f[minus(0, 1)] = -o.D(gm01, 1, 2) - g[minus(1, 1)] * big - kHalf * gm01 * lb;
  f[plus(1, 1)] = -o.D(gp11, 1, 2) + g[plus(0, 1)] * big - kHalf * gp11 * lb;
  f[plus(1, 0)] =
      big * (kQuarter * o.L2(big, 1, 2, 1, 2) -
             (gp11 * o.D(gm01, 1, 2) - gm01 * o.D(gp11, 1, 2)) / (Rational(2) * big) +
             big * g[minus(1, 0)] + gp11 * g[minus(1, 1)] + g[plus(0, 1)] * gm01);
  return f;
}

FieldConfig b2_t2a2(const FieldConfig& f) {
  FieldConfig h = b2_tm(f);
  if (h[plus(1, 0)].is_zero())
    throw PivotZero("B2_T2A2 divides by f+1.0 + (f-0.1)^2/f-1.2, which is identically zero",
                    "f+1.0");
  return b2_t10_inv(h);
}

// Closed form of tilde f-1.0 as typeset; valid while f+0.1 and f+1.3 vanish.
ExpRational g2_t1_printed_ratio(const FieldConfig& f, const Ops& o) {
  auto F = [&](int p, int q, char s) -> const ExpRational& { return f[{p, q, s}]; };
  const auto& m = F(1, 0, '-');
  const auto &fm23 = F(2, 3, '-'), &fp23 = F(2, 3, '+');
  const auto &fm13 = F(1, 3, '-'), &fp13 = F(1, 3, '+');
  const auto &fm12 = F(1, 2, '-'), &fp12 = F(1, 2, '+');
  const auto &fm11 = F(1, 1, '-'), &fp11 = F(1, 1, '+');
  const auto &fm01 = F(0, 1, '-'), &fp01 = F(0, 1, '+');
  const auto& fp10 = F(1, 0, '+');
  return kQuarter * o.L2(m, 1, 2, 1, 2) + m * fp10 + kHalf * (fm01 * fp01 + fm11 * fp11) +
         Rational(3, 2) * (fm23 * fp23 + fm13 * fp13) +
         Rational(3, 4) * (fp01 * o.D(fm11, 1, 2) - fm11 * o.D(fp01, 1, 2)) / m -
         kQuarter * (fp13 * o.D(fm23, 1, 2) - fm23 * o.D(fp13, 1, 2)) / m -
         (fp01 / m) * (fm23 * fp12 - fp01 * fm12) -
         kQuarter *
             (Rational(3) * sq(m * fp01) - sq(fm23 * fp13) + Rational(6) * m * fp01 * fm23 * fp13 +
              Rational(4) * cube(fm11) * fp13 + Rational(4) * cube(fp01) * fm23) /
             sq(m);
}

FieldConfig g2_t1(const FieldConfig& f, bool printed) {
  Ops o{f.constants()};
  const auto& m = pivot(f, minus(1, 0), TransformId::G2_T1);
  auto F = [&](int p, int q, char s) -> const ExpRational& { return f[{p, q, s}]; };
  const auto &fm23 = F(2, 3, '-'), &fp23 = F(2, 3, '+');
  const auto &fm13 = F(1, 3, '-'), &fp13 = F(1, 3, '+');
  const auto &fm12 = F(1, 2, '-'), &fp12 = F(1, 2, '+');
  const auto &fm11 = F(1, 1, '-'), &fp11 = F(1, 1, '+');
  const auto &fm01 = F(0, 1, '-'), &fp01 = F(0, 1, '+');
  ExpRational two_m = Rational(2) * m;
  ExpRational lm = o.L(m, 1, 2);
  auto drift = [&](const ExpRational& h) { return o.D(h, 1, 2) - kHalf * h * lm; };

  FieldConfig g = f;
  g[plus(1, 0)] = m.inverse();
  g[minus(1, 3)] = -(fm23 / m);
  g[plus(1, 1)] = -(fp01 / m);
  g[minus(0, 1)] = fm11 / m;
  g[plus(2, 3)] = fp13 / m;
  g[plus(1, 2)] = fp12 + (fm11 * fp13 + sq(fp01)) / m;
  g[minus(1, 2)] = fm12 - (fm23 * fp01 + sq(fm11)) / m;
  g[minus(2, 3)] = drift(fm23) - m * fm13 +
                   (-(sq(fm23) * fp13) + Rational(2) * cube(fm11) +
                    Rational(3) * fm23 * fm11 * fp01) /
                       two_m;
  g[plus(0, 1)] = drift(fp01) - fp11 * m +
                  (Rational(2) * sq(fm11) * fp13 + sq(fp01) * fm11 + fm23 * fp01 * fp13) / two_m;
  const Rational cube_coef = printed ? Rational(1) : Rational(2);
  g[plus(1, 3)] = drift(fp13) + fp23 * m +
                  (sq(fp13) * fm23 - Rational(3) * fp13 * fm11 * fp01 - cube_coef * cube(fp01)) /
                      two_m;
  g[minus(1, 1)] = drift(fm11) + fm01 * m -
                   (Rational(2) * sq(fp01) * fm23 + sq(fm11) * fp01 + fm23 * fm11 * fp13) / two_m;
  if (printed || (fm11.is_zero() && fp01.is_zero() && fp13.is_zero())) {
    g[minus(1, 0)] = m * g2_t1_printed_ratio(f, o);
    return g;
  }
  // The remaining field follows from one transformed equation that contains it
  // undifferentiated, using whichever coefficient does not vanish.
  auto G = [&](int p, int q, char s) -> const ExpRational& { return g[{p, q, s}]; };
  const Rational two(2), three(3);
  if (!fm11.is_zero())
    g[minus(1, 0)] = (G(2, 3, '-') * G(1, 2, '+') + two * G(1, 2, '-') * G(0, 1, '+') -
                      o.D(G(1, 1, '-'), 1, 1)) /
                     G(0, 1, '-');
  else if (!fp01.is_zero())
    g[minus(1, 0)] = (o.D(G(0, 1, '+'), 0, 1) - G(1, 3, '+') * G(1, 2, '-') -
                      two * G(1, 2, '+') * G(1, 1, '-')) /
                     G(1, 1, '+');
  else
    g[minus(1, 0)] = -(o.D(G(1, 3, '+'), 1, 3) + three * G(0, 1, '+') * G(1, 2, '+')) /
                     (three * G(2, 3, '+'));
  return g;
}

FieldConfig g2_ta1_3a2(const FieldConfig& f) {
  pivot(f, minus(1, 3), TransformId::G2_TA1_3A2);
  Substitution s = g2_exchange();
  WaveConstants w2 = g2_exchange_constants(f.constants());
  FieldConfig g = apply_substitution(s, f, w2);
  FieldConfig h = g2_t1(g, false);
  return apply_substitution(s, h, f.constants());
}

FieldConfig g2_ta1_3a2_printed(const FieldConfig& f) {
  Ops o{f.constants()};
  const auto& m = pivot(f, minus(1, 3), TransformId::G2_TA1_3A2);
  auto F = [&](int p, int q, char s) -> const ExpRational& { return f[{p, q, s}]; };
  const auto &fm23 = F(2, 3, '-'), &fp23 = F(2, 3, '+');
  const auto& fp13 = F(1, 3, '+');
  const auto &fm12 = F(1, 2, '-'), &fp12 = F(1, 2, '+');
  const auto &fm11 = F(1, 1, '-'), &fp11 = F(1, 1, '+');
  const auto &fm01 = F(0, 1, '-'), &fp01 = F(0, 1, '+');
  const auto &fm10 = F(1, 0, '-'), &fp10 = F(1, 0, '+');
  ExpRational two_m = Rational(2) * m;
  ExpRational lm = o.L(m, 1, 1);
  auto drift = [&](const ExpRational& h) { return -o.D(h, 1, 1) + kHalf * h * lm; };

  FieldConfig g = f;
  g[plus(1, 3)] = m.inverse();
  g[plus(0, 1)] = fm12 / m;
  g[plus(1, 2)] = -(fm01 / m);
  g[minus(1, 0)] = fm23 / m;
  g[plus(2, 3)] = -(fp10 / m);
  g[plus(1, 1)] = fp11 + (sq(fm01) + fm12 * fp10) / m;
  g[minus(1, 1)] = fm11 + (-sq(fm12) + fm23 * fm01) / m;
  g[minus(2, 3)] = drift(fm23) + fm10 * m +
                   (sq(fm23) * fp10 - cube(fm12) + Rational(3) * fm23 * fm11 * fm12) / two_m;
  g[plus(1, 0)] = drift(fp10) - fp23 * m -
                  (fm23 * sq(fp10) + Rational(2) * cube(fm01) + Rational(3) * fm01 * fm12 * fp12) /
                      two_m;
  g[minus(1, 2)] = drift(fm12) - fp01 * m +
                   (fm23 * sq(fm01) + Rational(2) * sq(fm01) * fm23 - fm01 * sq(fm12)) / two_m;
  g[minus(0, 1)] = drift(fm01) - fp12 * m +
                   (fm12 * sq(fm01) + Rational(2) * sq(fm12) * fp10 - fm01 * fm23 * fp10) / two_m;
  ExpRational ratio =
      kQuarter * o.L2(m, 1, 1, 1, 1) + fm11 * fp13 + kHalf * (fm01 * fp01 + fm12 * fp12) +
      Rational(3, 2) * (fm23 * fp23 + fm10 * fp10) -
      Rational(3, 4) * (fm01 * o.D(fm12, 1, 1) - fm12 * o.D(fm01, 1, 1)) / m -
      kQuarter * (fp10 * o.D(fm23, 1, 1) - fm23 * o.D(fp10, 1, 1)) / m +
      (fm01 / m) * (fm23 * fp11 + fm01 * fm11) -
      kQuarter *
          (Rational(3) * sq(m * fm01) - sq(fm23 * fp10) - Rational(6) * m * fm01 * fm23 * fp10 +
           Rational(4) * cube(fm12) * fp13 - Rational(4) * cube(fm01) * fm23) /
          sq(m);
  g[minus(1, 3)] = m * ratio;
  return g;
}

}  // namespace

std::string to_string(TransformId id) { return info(id).full; }

Algebra algebra_of(TransformId id) { return info(id).algebra; }

TransformId parse_transform(std::string_view name, Algebra algebra) {
  for (const auto& i : kIds)
    if (i.algebra == algebra && (name == i.full || name == i.short_name))
      return i.id;
  throw std::invalid_argument("unknown transformation '" + std::string(name) + "' for " +
                              to_string(algebra));
}

std::vector<TransformId> transforms_of(Algebra a) {
  std::vector<TransformId> out;
  for (const auto& i : kIds)
    if (i.algebra == a)
      out.push_back(i.id);
  return out;
}

FieldConfig apply(TransformId id, const FieldConfig& cfg) {
  check_algebra(id, cfg);
  switch (id) {
    case TransformId::A2_T1: return a2_t1(cfg, false);
    case TransformId::A2_T2: return a2_t2(cfg);
    case TransformId::A2_T3: return a2_t3(cfg);
    case TransformId::B2_TM: return b2_tm(cfg);
    case TransformId::B2_T10: return b2_t10(cfg);
    case TransformId::B2_T10_INV: return b2_t10_inv(cfg);
    case TransformId::B2_T2A2: return b2_t2a2(cfg);
    case TransformId::G2_T1: return g2_t1(cfg, false);
    case TransformId::G2_TA1_3A2: return g2_ta1_3a2(cfg);
  }
  throw std::invalid_argument("unknown transformation");
}

FieldConfig apply_chain(const std::vector<TransformId>& ids, const FieldConfig& cfg) {
  FieldConfig cur = cfg;
  for (std::size_t k = 0; k < ids.size(); ++k) {
    try {
      cur = apply(ids[k], cur);
    } catch (const PivotZero& e) {
      throw PivotZero("step " + std::to_string(k + 1) + " (" + to_string(ids[k]) + "): " + e.what(),
                      e.field());
    }
  }
  return cur;
}

std::optional<FieldConfig> apply_printed(TransformId id, const FieldConfig& cfg) {
  check_algebra(id, cfg);
  switch (id) {
    case TransformId::A2_T1: return a2_t1(cfg, true);
    case TransformId::B2_T10_INV: return b2_t10_inv_printed(cfg);
    case TransformId::G2_T1: return g2_t1(cfg, true);
    case TransformId::G2_TA1_3A2: return g2_ta1_3a2_printed(cfg);
    default: return std::nullopt;
  }
}

FieldConfig b2_t2a2_printed_rows(const FieldConfig& f) {
  check_algebra(TransformId::B2_T2A2, f);
  Ops o{f.constants()};
  FieldConfig g = b2_t2a2(f);
  const auto& m = f[minus(1, 2)];
  const auto& fm01 = f[minus(0, 1)];
  const auto& fp10 = f[plus(1, 0)];
  ExpRational k = fp10 + sq(fm01) / m;
  ExpRational kk = fp10 * m + sq(fm01);
  g[minus(1, 0)] = k.inverse();
  g[minus(1, 1)] = (-o.D(fm01, 1, 0) - f[plus(1, 1)] * m + kHalf * fm01 * o.L(m, 1, 0)) / k;
  g[plus(0, 1)] = fm01 / kk;
  g[plus(1, 2)] = fp10 / kk;
  g[plus(1, 1)] =
      (fp10 * o.D(fm01, 1, 2) - f[minus(1, 1)] * sq(fp10) - kHalf * fm01 * o.D(fp10, 1, 2)) / k;
  return g;
}

FieldConfig b2_t2a2_reduced_rows(const FieldConfig& f) {
  check_algebra(TransformId::B2_T2A2, f);
  Ops o{f.constants()};
  FieldConfig g = b2_t2a2(f);
  const auto& r = pivot(f, minus(0, 1), TransformId::B2_T2A2);
  const auto& fm11 = f[minus(1, 1)];
  const auto& fm12 = f[minus(1, 2)];
  ExpRational dr = o.D(r, 1, 0);
  g[minus(0, 1)] = r * (o.L2(r, 1, 0, 1, 0) + r * f[plus(0, 1)]);
  g[plus(0, 1)] = r.inverse();
  g[minus(1, 2)] = kQuarter * o.D(o.D(fm12, 1, 0), 1, 0) +
                   (fm11 * dr - r * o.D(fm11, 1, 0)) / ExpRational(Rational(2)) +
                   sq(dr) / sq(r) * fm12 - dr * o.D(fm12, 1, 0) / r + f[plus(0, 1)] * r * fm12;
  return g;
}

InvarianceReport verify_invariance(TransformId id, const FieldConfig& cfg) {
  FieldConfig out = apply(id, cfg);
  const auto& m = model(cfg.algebra());
  InvarianceReport rep{id, {}, true};
  for (const auto& e : m.equations) {
    bool ok = residual(m, out, e).is_zero();
    rep.equations.emplace_back(e.lhs, ok);
    rep.pass = rep.pass && ok;
  }
  return rep;
}

}  // namespace nwave
