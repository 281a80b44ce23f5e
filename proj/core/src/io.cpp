#include "nwave/io.hpp"

#include "nwave/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <sstream>

namespace nwave {

namespace {

using Json = nlohmann::ordered_json;

Json parse_document(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
}

void check_schema(const Json& j, bool required) {
  if (!j.is_object())
    throw InputError("document must be a JSON object");
  if (!j.contains("schema")) {
    if (required)
      throw InputError("missing \"schema\"");
    return;
  }
  if (!j["schema"].is_number_integer() || j["schema"].get<int>() != kSchemaVersion)
    throw InputError("unsupported schema " + j["schema"].dump() + " (expected 1)");
}

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(where + ": missing \"" + key + "\"");
  return j[key];
}

Rational rational_of(const Json& j, const std::string& where) {
  if (j.is_number_integer())
    return Rational(j.dump());
  if (!j.is_string())
    throw InputError(where + ": expected a rational string such as \"3/2\", got " + j.dump());
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw InputError(where + ": malformed rational \"" + j.get<std::string>() + "\"");
  }
}

Json pair_json(const Rational& a, const Rational& b) { return Json::array({to_string(a), to_string(b)}); }

std::pair<Rational, Rational> pair_of(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2)
    throw InputError(where + ": expected a pair [a, b]");
  return {rational_of(j[0], where), rational_of(j[1], where)};
}

Json poly_json(const ExpPoly& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms())
    terms.push_back(Json{{"c", to_string(c)}, {"e", pair_json(e.t_coef, e.x_coef)}});
  return terms;
}

ExpPoly poly_of(const Json& j, const std::string& where) {
  if (!j.is_array())
    throw InputError(where + ": expected an array of terms");
  std::vector<ExpPoly::Term> terms;
  for (std::size_t k = 0; k < j.size(); ++k) {
    std::string at = where + "[" + std::to_string(k) + "]";
    auto [a, b] = pair_of(member(j[k], "e", at), at + ".e");
    terms.emplace_back(LinForm{a, b}, rational_of(member(j[k], "c", at), at + ".c"));
  }
  return ExpPoly::from_terms(std::move(terms));
}

Json constants_json(const WaveConstants& w) {
  return Json{{"c", pair_json(w.c1(), w.c2())}, {"d", pair_json(w.d1(), w.d2())}};
}

WaveConstants constants_of(const Json& j, const std::string& where) {
  auto [c1, c2] = pair_of(member(j, "c", where), where + ".c");
  auto [d1, d2] = pair_of(member(j, "d", where), where + ".d");
  return WaveConstants(c1, c2, d1, d2);
}

std::string format_value(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17Lg", v);
  return buf;
}

}  // namespace

SpectralData parse_spectral(std::string_view text) {
  Json j = parse_document(text);
  check_schema(j, false);
  SpectralData s{constants_of(j, "spectral data"), {}, {}};
  for (const char* key : {"P", "Q"}) {
    const Json& list = member(j, key, "spectral data");
    if (!list.is_array())
      throw InputError(std::string("\"") + key + "\" must be an array of spikes");
    auto& out = std::string(key) == "P" ? s.pspikes : s.qspikes;
    for (std::size_t k = 0; k < list.size(); ++k) {
      std::string at = std::string(key) + "[" + std::to_string(k) + "]";
      out.push_back({rational_of(member(list[k], "pos", at), at + ".pos"),
                     rational_of(member(list[k], "w", at), at + ".w")});
    }
  }
  validate(s);
  return s;
}

std::string spectral_to_json(const SpectralData& s) {
  Json j{{"schema", kSchemaVersion}};
  j["c"] = pair_json(s.constants.c1(), s.constants.c2());
  j["d"] = pair_json(s.constants.d1(), s.constants.d2());
  for (const char* key : {"P", "Q"}) {
    Json list = Json::array();
    for (const auto& sp : std::string(key) == "P" ? s.pspikes : s.qspikes)
      list.push_back(Json{{"pos", to_string(sp.pos)}, {"w", to_string(sp.weight)}});
    j[key] = std::move(list);
  }
  return j.dump(2) + "\n";
}

std::string config_to_json(const FieldConfig& cfg) {
  Json j{{"schema", kSchemaVersion},
         {"algebra", to_string(cfg.algebra())},
         {"constants", constants_json(cfg.constants())}};
  Json fields = Json::object();
  for (const auto& r : model(cfg.algebra()).roots) {
    const auto& f = cfg[r];
    if (f.is_zero()) {
      fields[r.name()] = "0";
      continue;
    }
    Json v{{"num", poly_json(f.num())}};
    if (!f.is_polynomial())
      v["den"] = poly_json(f.den());
    fields[r.name()] = std::move(v);
  }
  j["fields"] = std::move(fields);
  return j.dump(2) + "\n";
}

FieldConfig config_from_json(std::string_view text) {
  Json j = parse_document(text);
  check_schema(j, true);
  const Json& alg = member(j, "algebra", "config");
  if (!alg.is_string())
    throw InputError("config: \"algebra\" must be a string");
  Algebra a;
  try {
    a = parse_algebra(alg.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  FieldConfig cfg(a, constants_of(member(j, "constants", "config"), "constants"));
  const Json& fields = member(j, "fields", "config");
  if (!fields.is_object())
    throw InputError("config: \"fields\" must be an object");
  for (const auto& [name, v] : fields.items()) {
    RootLabel r;
    try {
      r = parse_root(name);
    } catch (const std::invalid_argument& e) {
      throw InputError(std::string("config: ") + e.what());
    }
    if (!model(a).has_root(r))
      throw InputError("config: " + name + " is not a field of " + to_string(a));
  }
  for (const auto& r : model(a).roots) {
    std::string at = "fields." + r.name();
    const Json& v = member(fields, r.name().c_str(), "config");
    if (v.is_string() || v.is_number_integer()) {
      cfg[r] = ExpRational(rational_of(v, at));
      continue;
    }
    ExpPoly num = poly_of(member(v, "num", at), at + ".num");
    if (!v.contains("den")) {
      cfg[r] = ExpRational(std::move(num));
      continue;
    }
    ExpPoly den = poly_of(v["den"], at + ".den");
    if (den.is_zero())
      throw InputError(at + ": denominator is zero");
    cfg[r] = ExpRational(std::move(num), den);
  }
  return cfg;
}

std::string report_to_json(const Report& r) {
  Json j{{"schema", kSchemaVersion},
         {"subject", r.subject},
         {"mode", to_string(r.mode)},
         {"verdict", r.pass() ? "PASS" : "FAIL"},
         {"counts", Json{{"passed", r.passed()}, {"failed", r.failed()}, {"recorded", r.recorded()}}}};
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back(
        Json{{"name", c.name}, {"gated", c.gated}, {"pass", c.pass}, {"detail", c.detail}});
  j["checks"] = std::move(checks);
  if (auto ce = r.first_counterexample()) {
    char hash[17];
    std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(ce->hash));
    j["counterexample"] = Json{{"check", ce->check},
                               {"value", ce->rendering},
                               {"terms", ce->total_terms},
                               {"hash", hash}};
  } else {
    j["counterexample"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string sample_csv(const FieldConfig& cfg, const Rational& t0, const Rational& t1,
                       const Rational& x0, const Rational& x1, int nt, int nx) {
  if (nt < 1 || nx < 1)
    throw InputError("grid sizes must be at least 1");
  const auto& roots = model(cfg.algebra()).roots;
  std::ostringstream out;
  out << "t,x";
  for (const auto& r : roots)
    out << ',' << r.name();
  out << '\n';
  auto step = [](const Rational& a, const Rational& b, int n, int k) -> Rational {
    return n == 1 ? a : a + (b - a) * k / (n - 1);
  };
  for (int i = 0; i < nt; ++i) {
    Rational t = step(t0, t1, nt, i);
    for (int k = 0; k < nx; ++k) {
      Rational x = step(x0, x1, nx, k);
      long double tv = to_long_double(t), xv = to_long_double(x);
      out << format_value(tv) << ',' << format_value(xv);
      for (const auto& r : roots) {
        out << ',';
        try {
          out << format_value(eval(cfg[r], tv, xv));
        } catch (const EvalPole&) {
        }
      }
      out << '\n';
    }
  }
  return out.str();
}

}  // namespace nwave
