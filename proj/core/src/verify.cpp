#include "nwave/verify.hpp"

#include "nwave/errors.hpp"
#include "nwave/tau.hpp"
#include "nwave/toda.hpp"
#include "nwave/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <future>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace nwave {

std::string to_string(Mode m) { return m == Mode::Exact ? "exact" : "numeric"; }

Mode parse_mode(std::string_view name) {
  if (name == "exact")
    return Mode::Exact;
  if (name == "numeric")
    return Mode::Numeric;
  throw std::invalid_argument("unknown mode '" + std::string(name) + "' (exact|numeric)");
}

const std::vector<GridPoint>& numeric_grid() {
  static const std::vector<GridPoint> grid = [] {
    std::vector<GridPoint> g;
    for (const char* t : {"-1", "0", "1/2"})
      for (const char* x : {"-1/3", "0", "1"})
        g.push_back({parse_rational(t), parse_rational(x)});
    return g;
  }();
  return grid;
}

Counterexample make_counterexample(std::string check, const ExpPoly& value) {
  auto terms = value.terms();
  if (terms.size() > kCounterexampleTerms) {
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
      return cmp(abs(a.second), abs(b.second)) > 0;
    });
    terms.resize(kCounterexampleTerms);
  }
  ExpPoly kept = ExpPoly::from_terms(std::move(terms));
  std::string text = to_string(kept);
  if (value.size() > kept.size())
    text += " + ... (" + std::to_string(value.size() - kept.size()) + " more terms)";
  return {std::move(check), std::move(text), value.size(), value.hash()};
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.gated && c.pass; }));
}

std::size_t Report::failed() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const auto& c) { return c.gated && !c.pass; }));
}

std::size_t Report::recorded() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const auto& c) { return !c.gated; }));
}

bool Report::pass() const { return failed() == 0; }

std::optional<Counterexample> Report::first_counterexample() const {
  for (bool gated : {true, false})
    for (const auto& c : checks)
      if (c.gated == gated && !c.pass && c.counterexample)
        return c.counterexample;
  return std::nullopt;
}

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::optional<ExpPoly> witness;
};

// Worst relative deviation over the grid, with pole points skipped.
struct Tally {
  long double worst = 0;
  int points = 0;
  int poles = 0;
  bool pass = true;

  void add(long double a, long double b, long double scale) {
    ++points;
    long double s = std::max({std::fabs(a), std::fabs(b), scale, kMagnitudeFloor});
    long double diff = std::fabs(a - b);
    if (!(diff <= kRelTol * s)) {
      pass = false;
      worst = std::isfinite(diff / s) ? std::max(worst, diff / s) : HUGE_VALL;
    } else {
      worst = std::max(worst, diff / s);
    }
  }

  std::string describe() const {
    std::ostringstream out;
    out << "max relative deviation " << static_cast<double>(worst) << " over " << points
        << " points, " << poles << " poles";
    return out.str();
  }
};

long double ld(const Rational& q) { return to_long_double(q); }

Outcome compare_values(const ExpRational& a, const ExpRational& b, Mode mode) {
  if (mode == Mode::Exact) {
    if (a == b)
      return {true, "equal", {}};
    ExpRational d = a - b;
    return {false, "differ by " + std::to_string(d.num().size()) + " numerator terms", d.num()};
  }
  Tally tally;
  for (const auto& p : numeric_grid()) {
    long double va, vb;
    try {
      va = eval(a, ld(p.t), ld(p.x));
      vb = eval(b, ld(p.t), ld(p.x));
    } catch (const EvalPole&) {
      ++tally.poles;
      continue;
    }
    tally.add(va, vb, 0);
  }
  Outcome o{tally.pass, tally.describe(), {}};
  if (!o.pass)
    o.witness = (a - b).num();
  return o;
}

Outcome check_equation(const FieldConfig& cfg, const EquationSpec& e, Mode mode) {
  const auto& m = model(cfg.algebra());
  if (mode == Mode::Exact) {
    ExpRational r = residual(m, cfg, e);
    if (r.is_zero())
      return {true, "residual is exactly zero", {}};
    return {false, "residual numerator has " + std::to_string(r.num().size()) + " terms", r.num()};
  }
  ExpRational lhs = rderiv(cfg[e.lhs], e.i, e.j, cfg.constants());
  Tally tally;
  for (const auto& p : numeric_grid()) {
    long double t = ld(p.t), x = ld(p.x);
    try {
      long double l = eval(lhs, t, x), sum = 0, mag = 0;
      for (const auto& term : e.rhs) {
        long double v = ld(term.coef) * eval(cfg[term.a], t, x) * eval(cfg[term.b], t, x);
        sum += v;
        mag += std::fabs(v);
      }
      tally.add(l, sum, mag);
    } catch (const EvalPole&) {
      ++tally.poles;
    }
  }
  Outcome o{tally.pass, tally.describe(), {}};
  if (!o.pass)
    o.witness = residual(m, cfg, e).num();
  return o;
}

Outcome check_system(const FieldConfig& cfg, Mode mode) {
  const auto& m = model(cfg.algebra());
  Outcome all{true, "", {}};
  std::string failing;
  for (const auto& e : m.equations) {
    Outcome o = check_equation(cfg, e, mode);
    if (!o.pass) {
      failing += (failing.empty() ? "" : ", ") + e.lhs.name();
      if (all.pass)
        all.witness = std::move(o.witness);
      all.pass = false;
    }
  }
  all.detail = all.pass ? "all " + std::to_string(m.equations.size()) + " equations hold"
                        : "failing equations: " + failing;
  return all;
}

Outcome compare_configs(const FieldConfig& a, const FieldConfig& b, Mode mode) {
  if (a.algebra() != b.algebra() || !(a.constants() == b.constants()))
    return {false, "algebras or wave constants differ", {}};
  Outcome all{true, "", {}};
  std::string differing;
  for (const auto& [r, f] : a.fields()) {
    Outcome o = compare_values(f, b[r], mode);
    if (!o.pass) {
      differing += (differing.empty() ? "" : ", ") + r.name();
      if (all.pass)
        all.witness = std::move(o.witness);
      all.pass = false;
    }
  }
  all.detail = all.pass ? "all " + std::to_string(a.fields().size()) + " fields agree"
                        : "differing fields: " + differing;
  return all;
}

Outcome expect(bool ok, std::string pass_detail, std::string fail_detail) {
  return {ok, ok ? std::move(pass_detail) : std::move(fail_detail), {}};
}

// A negative control passes when the wrapped comparison fails.
Outcome negated(Outcome o) {
  return {!o.pass,
          o.pass ? "expected a mismatch but " + o.detail : "mismatch as expected (" + o.detail + ")",
          std::nullopt};
}

template <class Fn>
Outcome expect_throw(Fn&& fn, const char* what) {
  try {
    fn();
  } catch (const TauZero& e) {
    return {std::string(what) == "TauZero", e.what(), {}};
  } catch (const PivotZero& e) {
    return {std::string(what) == "PivotZero", e.what(), {}};
  }
  return {false, std::string("no ") + what + " raised", {}};
}

struct Task {
  std::string name;
  bool gated;
  std::function<Outcome(Mode)> run;
};

Report run_tasks(std::string subject, const std::vector<Task>& tasks, Mode mode) {
  Report rep{std::move(subject), mode, {}};
  rep.checks.resize(tasks.size());
  const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
  for (std::size_t start = 0; start < tasks.size(); start += width) {
    std::size_t stop = std::min(tasks.size(), start + width);
    std::vector<std::future<Outcome>> pending;
    for (std::size_t k = start; k < stop; ++k)
      pending.push_back(std::async(std::launch::async, [&task = tasks[k], mode]() -> Outcome {
        try {
          return task.run(mode);
        } catch (const std::exception& e) {
          return {false, std::string("raised: ") + e.what(), {}};
        }
      }));
    for (std::size_t k = start; k < stop; ++k) {
      Outcome o = pending[k - start].get();
      auto& c = rep.checks[k];
      c.name = tasks[k].name;
      c.gated = tasks[k].gated;
      c.pass = o.pass;
      c.detail = std::move(o.detail);
      if (o.witness)
        c.counterexample = make_counterexample(c.name, *o.witness);
    }
  }
  return rep;
}

std::string orders(int n1, int n2) {
  return "(" + std::to_string(n1) + "," + std::to_string(n2) + ")";
}

const AlgebraModel& A2() { return model(Algebra::A2); }
const AlgebraModel& B2() { return model(Algebra::B2); }
const AlgebraModel& G2() { return model(Algebra::G2); }

std::vector<Task> a2_full() {
  std::vector<Task> t;
  t.push_back({"A2 initial config satisfies the system", true, [](Mode m) {
                 return check_system(initial_config(A2(), sample_spectral(2, 2)), m);
               }});
  for (int n1 = 0; n1 <= 2; ++n1)
    for (int n2 = 0; n2 <= 2; ++n2)
      t.push_back({"A2 tau solution " + orders(n1, n2) + " satisfies the system", true,
                   [n1, n2](Mode m) {
                     return check_system(solution_from_tau(A2(), sample_spectral(2, 2), n1, n2), m);
                   }});
  t.push_back({"A2 tau solution (0,0) equals the initial config", true, [](Mode m) {
                 auto s = sample_spectral(2, 2);
                 return compare_configs(solution_from_tau(A2(), s, 0, 0), initial_config(A2(), s), m);
               }});
  t.push_back({"A2 tau solution (2,1) on 2+1 spikes satisfies the system", true, [](Mode m) {
                 return check_system(solution_from_tau(A2(), sample_spectral(2, 1), 2, 1), m);
               }});
  t.push_back({"A2 tau solution (2,2) has every f- field zero", true, [](Mode) {
                 auto cfg = solution_from_tau(A2(), sample_spectral(2, 2), 2, 2);
                 std::string nonzero;
                 for (const auto& [r, f] : cfg.fields())
                   if (r.sign == '-' && !f.is_zero())
                     nonzero += " " + r.name();
                 return expect(nonzero.empty(), "f-1.0, f-0.1, f-1.1 are zero",
                               "nonzero:" + nonzero);
               }});
  for (auto [n1, n2] : std::vector<std::pair<int, int>>{{3, 2}, {2, 3}, {3, 0}, {0, 3}})
    t.push_back({"A2 tau solution " + orders(n1, n2) + " raises TauZero", true, [n1, n2](Mode) {
                   return expect_throw(
                       [&] { solution_from_tau(A2(), sample_spectral(2, 2), n1, n2); }, "TauZero");
                 }});
  return t;
}

std::vector<Task> b2_full() {
  std::vector<Task> t;
  for (int nq : {3, 4})
    t.push_back({"B2 initial config on 2+" + std::to_string(nq) + " spikes satisfies the system",
                 true, [nq](Mode m) {
                   return check_system(initial_config(B2(), sample_spectral(2, nq)), m);
                 }});
  for (int n1 = 0; n1 <= 1; ++n1)
    for (int n2 = 0; n2 <= 1; ++n2)
      t.push_back({"B2 tau solution " + orders(n1, n2) + " satisfies the system", true,
                   [n1, n2](Mode m) {
                     return check_system(solution_from_tau(B2(), sample_spectral(2, 4), n1, n2), m);
                   }});
  t.push_back({"B2 tau solution (0,0) equals the initial config", true, [](Mode m) {
                 auto s = sample_spectral(2, 4);
                 return compare_configs(solution_from_tau(B2(), s, 0, 0), initial_config(B2(), s), m);
               }});
  t.push_back({"B2 tau solution (1,1) without calibration fails the system", true, [](Mode m) {
                 return negated(check_system(
                     solution_from_tau(B2(), sample_spectral(2, 4), 1, 1, false), m));
               }});
  return t;
}

std::vector<Task> g2_hypothesis() {
  std::vector<Task> t;
  t.push_back({"G2 initial config satisfies the system", true, [](Mode m) {
                 return check_system(initial_config(G2(), sample_spectral(2, 4)), m);
               }});
  t.push_back({"G2 tau solution (0,0) equals the initial config", true, [](Mode m) {
                 auto s = sample_spectral(2, 4);
                 return compare_configs(solution_from_tau(G2(), s, 0, 0), initial_config(G2(), s), m);
               }});
  t.push_back({"G2 tau solution (0,0) satisfies the system", true, [](Mode m) {
                 return check_system(solution_from_tau(G2(), sample_spectral(2, 4), 0, 0), m);
               }});
  const std::vector<std::pair<int, int>> higher = {{1, 0}, {0, 1}, {1, 1}, {2, 0},
                                                   {0, 2}, {2, 1}, {1, 2}};
  for (auto [n1, n2] : higher)
    t.push_back({"G2 tau solution " + orders(n1, n2) + " satisfies the system", false,
                 [n1, n2](Mode m) {
                   return check_system(solution_from_tau(G2(), sample_spectral(2, 4), n1, n2), m);
                 }});
  for (auto [n1, n2] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {1, 1}})
    t.push_back({"G2 uncalibrated tau solution " + orders(n1, n2) + " satisfies the system", false,
                 [n1, n2](Mode m) {
                   return check_system(
                       solution_from_tau(G2(), sample_spectral(2, 4), n1, n2, false), m);
                 }});
  return t;
}

std::vector<Task> toda() {
  std::vector<Task> t;
  auto chain = [] {
    auto s = sample_spectral(0, 5);
    return HankelChain(*initial_config(A2(), s)[minus(0, 1)].as_poly(), s.constants, 1, 0);
  };
  for (int n = 1; n <= 4; ++n)
    t.push_back({"Toda relation at level " + std::to_string(n), true, [n, chain](Mode m) {
                   HankelChain h = chain();
                   if (m == Mode::Exact) {
                     ExpRational r = toda_residual(h, n);
                     if (r.is_zero())
                       return Outcome{true, "residual is exactly zero", {}};
                     return Outcome{false, "nonzero residual", r.num()};
                   }
                   const auto& w = h.constants();
                   ExpRational lhs = log_deriv2(h.det(n), 1, 0, 1, 0, w);
                   ExpRational rhs = ExpRational(h.det(n - 1) * h.det(n + 1), h.det(n) * h.det(n));
                   return compare_values(lhs, rhs, m);
                 }});
  for (int n = 0; n <= 4; ++n)
    t.push_back({"Hankel determinant " + std::to_string(n) + " equals its subset-sum form", true,
                 [n, chain](Mode m) {
                   HankelChain h = chain();
                   return compare_values(h.det(n), hankel_integral_form(sample_spectral(0, 5), n), m);
                 }});
  for (int n = 1; n <= 4; ++n)
    t.push_back({"Bareiss and cofactor determinants agree at size " + std::to_string(n), true,
                 [n, chain](Mode m) {
                   HankelChain h = chain();
                   auto a = h.matrix(n);
                   return compare_values(det_bareiss(a), det_cofactor(a), m);
                 }});
  t.push_back({"Hankel determinant 6 vanishes on 5 spikes", true, [chain](Mode) {
                 HankelChain h = chain();
                 return expect(h.det(6).is_zero(), "zero", "nonzero");
               }});
  return t;
}

std::vector<Task> appendix() {
  std::vector<Task> t;
  auto level0 = [] {
    auto s = sample_spectral(1, 6);
    auto cfg = initial_config(B2(), s);
    return std::make_pair(
        HankelChain(*cfg[minus(0, 1)].as_poly(), s.constants, 1, 0),
        ABChain{0, cfg[minus(1, 1)], cfg[minus(1, 2)]});
  };
  t.push_back({"A and B at level 0 equal the initial fields", true, [level0](Mode m) {
                 auto [h, a0] = level0();
                 auto c = ab_closed(sample_spectral(1, 6), 0);
                 Outcome oa = compare_values(a0.a, c.a, m), ob = compare_values(a0.b, c.b, m);
                 return oa.pass ? ob : oa;
               }});
  for (int n = 1; n <= 2; ++n)
    for (char which : {'A', 'B'})
      t.push_back({std::string(1, which) + " at level " + std::to_string(n) +
                       " from the recursion equals its closed form",
                   true, [n, which, level0](Mode m) {
                     auto [h, cur] = level0();
                     for (int k = 0; k < n; ++k)
                       cur = ab_step(cur, h);
                     auto c = ab_closed(sample_spectral(1, 6), n);
                     return which == 'A' ? compare_values(cur.a, c.a, m)
                                         : compare_values(cur.b, c.b, m);
                   }});
  return t;
}

std::vector<Task> gra() {
  std::vector<Task> t;
  for (int n = 0; n <= 1; ++n) {
    t.push_back({"symmetrized identity at order " + std::to_string(n), true, [n](Mode m) {
                   auto [l, r] = gra_sides(sample_spectral(2, 3), n);
                   return compare_values(l, r, m);
                 }});
    t.push_back({"symmetrized identity at order " + std::to_string(n) +
                     " fails with an independent extra entry",
                 true, [n](Mode m) {
                   auto [l, r] = gra_sides(sample_spectral(2, 3), n, false);
                   return negated(compare_values(l, r, m));
                 }});
  }
  return t;
}

FieldConfig g2_exchanged(const FieldConfig& cfg) {
  return apply_substitution(g2_exchange(1), cfg, g2_exchange_constants(cfg.constants()));
}

std::vector<Task> transforms_algebra() {
  using T = TransformId;
  std::vector<Task> t;
  for (int v = 0; v <= 2; ++v) {
    t.push_back({"A2 T1 T2 = T2 T1 on dataset " + std::to_string(v), true, [v](Mode m) {
                   auto c = initial_config(A2(), sample_spectral(2, 2, v));
                   return compare_configs(apply_chain({T::A2_T1, T::A2_T2}, c),
                                          apply_chain({T::A2_T2, T::A2_T1}, c), m);
                 }});
    t.push_back({"A2 T1 T2 = T3 on dataset " + std::to_string(v), true, [v](Mode m) {
                   auto c = initial_config(A2(), sample_spectral(2, 2, v));
                   return compare_configs(apply_chain({T::A2_T1, T::A2_T2}, c), apply(T::A2_T3, c), m);
                 }});
  }
  for (auto id : {T::A2_T1, T::A2_T2, T::A2_T3})
    t.push_back({"A2 " + to_string(id) + " preserves the initial solution", true, [id](Mode m) {
                   return check_system(apply(id, initial_config(A2(), sample_spectral(2, 2))), m);
                 }});
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b) {
      if (a + b == 0 || a + b > 3)
        continue;
      t.push_back({"A2 chain T1^" + std::to_string(a) + " T2^" + std::to_string(b) +
                       " equals tau solution " + orders(a, b),
                   true, [a, b](Mode m) {
                     auto s = sample_spectral(2, 2);
                     std::vector<T> ids(a, T::A2_T1);
                     ids.insert(ids.end(), b, T::A2_T2);
                     auto tau = solution_from_tau(A2(), s, a, b);
                     for (const auto& r : A2().roots)
                       tau[r] *= a2_chain_constant(r, b);
                     return compare_configs(apply_chain(ids, initial_config(A2(), s)), tau, m);
                   }});
    }

  auto b2init = [] { return initial_config(B2(), sample_spectral(2, 3)); };
  auto b2generic = [] { return solution_from_tau(B2(), sample_spectral(2, 4), 1, 1); };
  for (auto id : {T::B2_TM, T::B2_T10, T::B2_T2A2}) {
    t.push_back({"B2 " + to_string(id) + " preserves the initial solution", true,
                 [id, b2init](Mode m) { return check_system(apply(id, b2init()), m); }});
    t.push_back({"B2 " + to_string(id) + " preserves the tau solution (1,1)", true,
                 [id, b2generic](Mode m) { return check_system(apply(id, b2generic()), m); }});
  }
  t.push_back({"B2 T10_INV T10 is the identity on the initial config", true, [b2init](Mode m) {
                 auto c = b2init();
                 return compare_configs(apply_chain({T::B2_T10, T::B2_T10_INV}, c), c, m);
               }});
  t.push_back({"B2 T10_INV T10 is the identity on the tau solution (1,1)", true,
               [b2generic](Mode m) {
                 auto c = b2generic();
                 return compare_configs(apply_chain({T::B2_T10, T::B2_T10_INV}, c), c, m);
               }});
  t.push_back({"B2 T10 T10_INV is the identity on the tau solution (1,1)", true,
               [b2generic](Mode m) {
                 auto c = b2generic();
                 return compare_configs(apply_chain({T::B2_T10_INV, T::B2_T10}, c), c, m);
               }});
  t.push_back({"B2 T2A2 equals TM followed by T10_INV on the tau solution (1,1)", true,
               [b2generic](Mode m) {
                 auto c = b2generic();
                 return compare_configs(apply(T::B2_T2A2, c),
                                        apply_chain({T::B2_TM, T::B2_T10_INV}, c), m);
               }});
  t.push_back({"B2 T2A2 maps the initial config to the tau solution (0,1)", true, [](Mode m) {
                 auto s = sample_spectral(2, 4);
                 return compare_configs(apply(T::B2_T2A2, initial_config(B2(), s)),
                                        solution_from_tau(B2(), s, 0, 1), m);
               }});
  t.push_back({"B2 T10 maps the initial config to the tau solution (1,0)", true, [](Mode m) {
                 auto s = sample_spectral(2, 4);
                 return compare_configs(apply(T::B2_T10, initial_config(B2(), s)),
                                        solution_from_tau(B2(), s, 1, 0), m);
               }});
  auto zeros = [](const FieldConfig& c, std::vector<RootLabel> labels) {
    std::string nonzero;
    for (const auto& r : labels)
      if (!c[r].is_zero())
        nonzero += " " + r.name();
    return expect(nonzero.empty(), "stay zero", "nonzero:" + nonzero);
  };
  t.push_back({"B2 T10 keeps f+0.1, f+1.1, f+1.2 zero", true, [b2init, zeros](Mode) {
                 auto c = apply_chain({T::B2_T10, T::B2_T10}, b2init());
                 Outcome once = zeros(apply(T::B2_T10, b2init()), {plus(0, 1), plus(1, 1), plus(1, 2)});
                 return once.pass ? zeros(c, {plus(0, 1), plus(1, 1), plus(1, 2)}) : once;
               }});
  t.push_back({"B2 T2A2 keeps f+1.0, f+1.1, f+1.2 zero", true, [b2init, zeros](Mode) {
                 auto once = apply(T::B2_T2A2, b2init());
                 Outcome o = zeros(once, {plus(1, 0), plus(1, 1), plus(1, 2)});
                 return o.pass ? zeros(apply(T::B2_T2A2, once), {plus(1, 0), plus(1, 1), plus(1, 2)})
                               : o;
               }});
  for (int n = 1; n <= 2; ++n)
    t.push_back({"B2 first-root chain of length " + std::to_string(n) + " equals T10^" +
                     std::to_string(n),
                 true, [n, b2init](Mode m) {
                   auto c = b2init();
                   return compare_configs(first_root_chain(c, n),
                                          apply_chain(std::vector<T>(n, T::B2_T10), c), m);
                 }});
  t.push_back({"B2 second-root rows as typeset agree on the initial config", true,
               [b2init](Mode m) {
                 auto c = b2init();
                 return compare_configs(b2_t2a2_printed_rows(c), apply(T::B2_T2A2, c), m);
               }});
  t.push_back({"B2 second-root rows as typeset agree on the tau solution (1,1)", false,
               [b2generic](Mode m) {
                 auto c = b2generic();
                 return compare_configs(b2_t2a2_printed_rows(c), apply(T::B2_T2A2, c), m);
               }});
  t.push_back({"B2 reduced second-root rows agree on the initial config", true, [b2init](Mode m) {
                 auto c = b2init();
                 return compare_configs(b2_t2a2_reduced_rows(c), apply(T::B2_T2A2, c), m);
               }});
  t.push_back({"B2 T10_INV as typeset inverts T10 on the initial config", false,
               [b2init](Mode m) {
                 auto c = b2init();
                 return compare_configs(*apply_printed(T::B2_T10_INV, apply(T::B2_T10, c)), c, m);
               }});

  auto g2init = [] { return initial_config(G2(), sample_spectral(2, 3)); };
  t.push_back({"G2 exchange keeps the system", true, [](Mode) {
                 const auto& eqs = G2().equations;
                 return expect(same_system(substituted(eqs, g2_exchange(1)), eqs), "same system",
                               "system changes");
               }});
  t.push_back({"G2 exchange with the dual sign -1 keeps the system", false, [](Mode) {
                 const auto& eqs = G2().equations;
                 return expect(same_system(substituted(eqs, g2_exchange(-1)), eqs), "same system",
                               "system changes");
               }});
  t.push_back({"G2 exchanged initial config satisfies the system", true, [g2init](Mode m) {
                 return check_system(g2_exchanged(g2init()), m);
               }});
  t.push_back({"G2 T1 preserves the initial solution", true, [g2init](Mode m) {
                 return check_system(apply(T::G2_T1, g2init()), m);
               }});
  t.push_back({"G2 T1 preserves the exchanged initial solution", true, [g2init](Mode m) {
                 return check_system(apply(T::G2_T1, g2_exchanged(g2init())), m);
               }});
  t.push_back({"G2 T1 maps the initial config to the tau solution (1,0)", true, [](Mode m) {
                 auto s = sample_spectral(2, 4);
                 return compare_configs(apply(T::G2_T1, initial_config(G2(), s)),
                                        solution_from_tau(G2(), s, 1, 0), m);
               }});
  t.push_back({"G2 TA1_3A2 preserves the initial solution", true, [g2init](Mode m) {
                 return check_system(apply(T::G2_TA1_3A2, g2init()), m);
               }});
  t.push_back({"G2 T1 as typeset preserves the initial solution", false, [g2init](Mode m) {
                 return check_system(*apply_printed(T::G2_T1, g2init()), m);
               }});
  t.push_back({"G2 T1 as typeset preserves the exchanged initial solution", false,
               [g2init](Mode m) {
                 return check_system(*apply_printed(T::G2_T1, g2_exchanged(g2init())), m);
               }});
  t.push_back({"G2 TA1_3A2 as typeset equals the exchanged T1", false, [g2init](Mode m) {
                 auto c = g2init();
                 return compare_configs(*apply_printed(T::G2_TA1_3A2, c), apply(T::G2_TA1_3A2, c), m);
               }});
  t.push_back({"A2 T1 as typeset preserves the tau solution (1,1)", false, [](Mode m) {
                 return check_system(
                     *apply_printed(T::A2_T1, solution_from_tau(A2(), sample_spectral(2, 3), 1, 1)), m);
               }});
  return t;
}

}  // namespace

Report verify_config(const AlgebraModel& m, const FieldConfig& cfg, Mode mode) {
  if (cfg.algebra() != m.name)
    throw std::invalid_argument("config is for " + to_string(cfg.algebra()) + ", model is " +
                                to_string(m.name));
  std::vector<Task> tasks;
  for (const auto& e : m.equations)
    tasks.push_back({"equation " + e.lhs.name(), true,
                     [&cfg, &e](Mode md) { return check_equation(cfg, e, md); }});
  return run_tasks(to_string(m.name) + " config", tasks, mode);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "a2-full", "b2-full", "g2-hypothesis", "toda", "appendix", "transforms-algebra", "gra"};
  return names;
}

Report verify_suite(std::string_view name, Mode mode) {
  std::vector<Task> tasks;
  if (name == "a2-full")
    tasks = a2_full();
  else if (name == "b2-full")
    tasks = b2_full();
  else if (name == "g2-hypothesis")
    tasks = g2_hypothesis();
  else if (name == "toda")
    tasks = toda();
  else if (name == "appendix")
    tasks = appendix();
  else if (name == "transforms-algebra")
    tasks = transforms_algebra();
  else if (name == "gra")
    tasks = gra();
  else
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  return run_tasks("suite " + std::string(name), tasks, mode);
}

}  // namespace nwave
