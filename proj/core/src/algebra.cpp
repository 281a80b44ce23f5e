#include "nwave/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <tuple>

namespace nwave {

std::string to_string(Algebra a) {
  switch (a) {
    case Algebra::A2: return "A2";
    case Algebra::B2: return "B2";
    case Algebra::G2: return "G2";
  }
  return "?";
}

Algebra parse_algebra(std::string_view name) {
  std::string s(name);
  for (auto& ch : s)
    ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (s == "A2") return Algebra::A2;
  if (s == "B2") return Algebra::B2;
  if (s == "G2") return Algebra::G2;
  throw std::invalid_argument("unknown algebra '" + std::string(name) + "'");
}

std::string RootLabel::name() const {
  return std::string("f") + sign + std::to_string(p) + "." + std::to_string(q);
}

RootLabel parse_root(std::string_view name) {
  if (name.size() != 5 || name[0] != 'f' || (name[1] != '+' && name[1] != '-') ||
      name[3] != '.' || !std::isdigit(static_cast<unsigned char>(name[2])) ||
      !std::isdigit(static_cast<unsigned char>(name[4])))
    throw std::invalid_argument("malformed field name '" + std::string(name) + "'");
  return {name[2] - '0', name[4] - '0', name[1]};
}

namespace {

struct Row {
  int p, q;
  std::vector<std::tuple<int, RootLabel, RootLabel>> rhs;
};

// Each row gives the f+ equation; the f- equation is its mirror image.
AlgebraModel build(Algebra name, std::array<std::array<int, 2>, 2> cartan,
                   std::vector<std::pair<int, int>> positive, const std::vector<Row>& rows) {
  AlgebraModel m{name, cartan, positive, {}, {}};
  for (char s : {'+', '-'})
    for (auto [p, q] : positive)
      m.roots.push_back({p, q, s});
  for (char s : {'+', '-'}) {
    for (const auto& row : rows) {
      EquationSpec e{{row.p, row.q, s}, row.p, row.q, {}};
      for (const auto& [c, a, b] : row.rhs)
        e.rhs.push_back({Rational(c), s == '+' ? a : a.flipped(), s == '+' ? b : b.flipped()});
      m.equations.push_back(std::move(e));
    }
  }
  return m;
}

AlgebraModel make_a2() {
  return build(Algebra::A2, {{{2, -1}, {-1, 2}}}, {{1, 0}, {0, 1}, {1, 1}},
               {
                   {1, 0, {{1, plus(1, 1), minus(0, 1)}}},
                   {0, 1, {{1, plus(1, 1), minus(1, 0)}}},
                   {1, 1, {{-1, plus(0, 1), plus(1, 0)}}},
               });
}

AlgebraModel make_b2() {
  return build(Algebra::B2, {{{2, -2}, {-1, 2}}}, {{1, 0}, {0, 1}, {1, 1}, {1, 2}},
               {
                   {1, 0, {{2, plus(1, 1), minus(0, 1)}}},
                   {0, 1, {{1, plus(1, 1), minus(1, 0)}, {1, plus(1, 2), minus(1, 1)}}},
                   {1, 1, {{-1, plus(0, 1), plus(1, 0)}, {1, plus(1, 2), minus(0, 1)}}},
                   {1, 2, {{-2, plus(1, 1), plus(0, 1)}}},
               });
}

AlgebraModel make_g2() {
  return build(
      Algebra::G2, {{{2, -3}, {-1, 2}}},
      {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {1, 3}, {2, 3}},
      {
          {1, 0, {{-3, plus(2, 3), minus(1, 3)}, {3, plus(1, 1), minus(0, 1)}}},
          {0, 1,
           {{1, plus(1, 3), minus(1, 2)}, {2, plus(1, 2), minus(1, 1)}, {1, plus(1, 1), minus(1, 0)}}},
          {1, 1,
           {{1, plus(2, 3), minus(1, 2)}, {2, plus(1, 2), minus(0, 1)}, {-1, plus(0, 1), plus(1, 0)}}},
          {1, 2,
           {{1, plus(2, 3), minus(1, 1)}, {1, plus(1, 3), minus(0, 1)}, {-2, plus(0, 1), plus(1, 1)}}},
          {1, 3, {{-3, plus(2, 3), minus(1, 0)}, {-3, plus(0, 1), plus(1, 2)}}},
          {2, 3, {{3, plus(1, 0), plus(1, 3)}, {-3, plus(1, 1), plus(1, 2)}}},
      });
}

}  // namespace

bool AlgebraModel::has_root(const RootLabel& r) const {
  return std::find(roots.begin(), roots.end(), r) != roots.end();
}

const EquationSpec& AlgebraModel::equation_for(const RootLabel& lhs) const {
  for (const auto& e : equations)
    if (e.lhs == lhs)
      return e;
  throw std::out_of_range("no equation for " + lhs.name());
}

const AlgebraModel& model(Algebra name) {
  static const AlgebraModel a2 = make_a2();
  static const AlgebraModel b2 = make_b2();
  static const AlgebraModel g2 = make_g2();
  switch (name) {
    case Algebra::A2: return a2;
    case Algebra::B2: return b2;
    case Algebra::G2: return g2;
  }
  throw std::invalid_argument("unknown algebra");
}

FieldConfig::FieldConfig(Algebra algebra, WaveConstants constants)
    : algebra_(algebra), constants_(std::move(constants)) {
  for (const auto& r : model(algebra).roots)
    fields_.emplace(r, ExpRational());
}

const ExpRational& FieldConfig::operator[](const RootLabel& r) const {
  auto it = fields_.find(r);
  if (it == fields_.end())
    throw std::out_of_range(r.name() + " is not a field of " + to_string(algebra_));
  return it->second;
}

ExpRational& FieldConfig::operator[](const RootLabel& r) {
  auto it = fields_.find(r);
  if (it == fields_.end())
    throw std::out_of_range(r.name() + " is not a field of " + to_string(algebra_));
  return it->second;
}

bool operator==(const FieldConfig& a, const FieldConfig& b) {
  if (a.algebra_ != b.algebra_ || !(a.constants_ == b.constants_))
    return false;
  for (const auto& [r, f] : a.fields_)
    if (f != b.fields_.at(r))
      return false;
  return true;
}

ExpRational residual(const AlgebraModel&, const FieldConfig& cfg, const EquationSpec& e) {
  ExpRational r = rderiv(cfg[e.lhs], e.i, e.j, cfg.constants());
  for (const auto& t : e.rhs) {
    const auto& fa = cfg[t.a];
    const auto& fb = cfg[t.b];
    if (fa.is_zero() || fb.is_zero())
      continue;
    r -= t.coef * (fa * fb);
  }
  return r;
}

std::vector<EquationSpec> canonical_system(std::vector<EquationSpec> eqs) {
  for (auto& e : eqs) {
    for (auto& t : e.rhs)
      if (t.b < t.a)
        std::swap(t.a, t.b);
    std::sort(e.rhs.begin(), e.rhs.end(), [](const BilinearTerm& x, const BilinearTerm& y) {
      return std::tie(x.a, x.b) < std::tie(y.a, y.b);
    });
    std::vector<BilinearTerm> merged;
    for (auto& t : e.rhs) {
      if (!merged.empty() && merged.back().a == t.a && merged.back().b == t.b)
        merged.back().coef += t.coef;
      else
        merged.push_back(t);
    }
    std::erase_if(merged, [](const BilinearTerm& t) { return sgn(t.coef) == 0; });
    e.rhs = std::move(merged);
  }
  std::sort(eqs.begin(), eqs.end(),
            [](const EquationSpec& x, const EquationSpec& y) { return x.lhs < y.lhs; });
  return eqs;
}

bool same_system(const std::vector<EquationSpec>& a, const std::vector<EquationSpec>& b) {
  auto ca = canonical_system(a);
  auto cb = canonical_system(b);
  if (ca.size() != cb.size())
    return false;
  for (std::size_t k = 0; k < ca.size(); ++k) {
    const auto& x = ca[k];
    const auto& y = cb[k];
    if (!(x.lhs == y.lhs) || x.i != y.i || x.j != y.j || x.rhs.size() != y.rhs.size())
      return false;
    for (std::size_t t = 0; t < x.rhs.size(); ++t)
      if (x.rhs[t].coef != y.rhs[t].coef || !(x.rhs[t].a == y.rhs[t].a) ||
          !(x.rhs[t].b == y.rhs[t].b))
        return false;
  }
  return true;
}

std::vector<EquationSpec> sign_swapped(const std::vector<EquationSpec>& eqs) {
  std::vector<EquationSpec> out;
  for (const auto& e : eqs) {
    EquationSpec f{e.lhs.flipped(), e.i, e.j, {}};
    for (const auto& t : e.rhs)
      f.rhs.push_back({t.coef, t.a.flipped(), t.b.flipped()});
    out.push_back(std::move(f));
  }
  return out;
}

std::vector<EquationSpec> substituted(const std::vector<EquationSpec>& eqs,
                                      const Substitution& s) {
  std::vector<EquationSpec> out;
  for (const auto& e : eqs) {
    const auto& [sl, l] = s.fields.at(e.lhs);
    const auto& [sd, d] = s.derivatives.at({e.i, e.j});
    EquationSpec f{l, d.first, d.second, {}};
    for (const auto& t : e.rhs) {
      const auto& [sa, a] = s.fields.at(t.a);
      const auto& [sb, b] = s.fields.at(t.b);
      f.rhs.push_back({t.coef * sa * sb * sl * sd, a, b});
    }
    out.push_back(std::move(f));
  }
  return out;
}

Substitution g2_exchange(int dual_sign) {
  Substitution s;
  for (char sign : {'+', '-'}) {
    auto r = [sign](int p, int q) { return RootLabel{p, q, sign}; };
    s.fields[r(2, 3)] = {-1, r(2, 3)};
    s.fields[r(1, 3)] = {-1, r(1, 0)};
    s.fields[r(1, 0)] = {-1, r(1, 3)};
    s.fields[r(1, 1)] = {-1, r(1, 2)};
    s.fields[r(1, 2)] = {-1, r(1, 1)};
    s.fields[r(0, 1)] = {dual_sign, r(0, 1).flipped()};
  }
  s.derivatives[{2, 3}] = {-1, {2, 3}};
  s.derivatives[{1, 3}] = {-1, {1, 0}};
  s.derivatives[{1, 0}] = {-1, {1, 3}};
  s.derivatives[{1, 2}] = {-1, {1, 1}};
  s.derivatives[{1, 1}] = {-1, {1, 2}};
  s.derivatives[{0, 1}] = {1, {0, 1}};
  return s;
}

WaveConstants g2_exchange_constants(const WaveConstants& w) {
  return WaveConstants(w.c1() + 3 * w.c2(), -w.c2(), w.d1() + 3 * w.d2(), -w.d2());
}

FieldConfig apply_substitution(const Substitution& s, const FieldConfig& cfg,
                               const WaveConstants& target_constants) {
  FieldConfig out(cfg.algebra(), target_constants);
  for (const auto& [from, to] : s.fields) {
    const auto& [sign, label] = to;
    out[label] = cfg[from] * Rational(sign);
  }
  return out;
}

}  // namespace nwave
