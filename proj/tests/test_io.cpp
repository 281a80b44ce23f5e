#include "support.hpp"

#include "nwave/errors.hpp"
#include "nwave/io.hpp"
#include "nwave/tau.hpp"

#include <doctest.h>

#include <sstream>

using namespace nwave;

TEST_SUITE("io") {
  TEST_CASE("spectral documents parse") {
    auto s = parse_spectral(R"({"c":["1","1/2"],"d":["1/3","1"],"P":[{"pos":"2","w":"1"}],"Q":[{"pos":"1","w":"-3/4"}]})");
    CHECK(s.constants.c2() == Rational(1) / 2);
    REQUIRE(s.qspikes.size() == 1);
    CHECK(s.qspikes[0].weight == Rational(-3) / 4);
    auto again = parse_spectral(spectral_to_json(s));
    CHECK(spectral_to_json(again) == spectral_to_json(s));
  }

  TEST_CASE("malformed spectral documents are input errors") {
    CHECK_THROWS_AS(parse_spectral("{"), InputError);
    CHECK_THROWS_AS(parse_spectral(R"({"c":["1","1/2"],"d":["1/3","1"],"P":[]})"), InputError);
    CHECK_THROWS_AS(parse_spectral(R"({"c":[1.5,"1/2"],"d":["1/3","1"],"P":[],"Q":[]})"), InputError);
    CHECK_THROWS_AS(parse_spectral(R"({"schema":2,"c":["1","1/2"],"d":["1/3","1"],"P":[],"Q":[]})"),
                    InputError);
    CHECK_THROWS_AS(
        parse_spectral(R"({"c":["1","1/2"],"d":["1/3","1"],"P":[{"pos":"1","w":"1"}],"Q":[{"pos":"1","w":"1"}]})"),
        InvalidSpectralData);
    CHECK_NOTHROW(parse_spectral(R"({"c":[1,2],"d":[3,4],"P":[],"Q":[]})"));
  }

  TEST_CASE("config documents round-trip byte for byte") {
    for (auto a : {Algebra::A2, Algebra::B2, Algebra::G2}) {
      auto cfg = solution_from_tau(model(a), sample_spectral(2, 3), 1, 1);
      std::string text = config_to_json(cfg);
      auto back = config_from_json(text);
      CHECK(back == cfg);
      CHECK(config_to_json(back) == text);
    }
  }

  TEST_CASE("zero fields are written as \"0\"") {
    auto cfg = initial_config(model(Algebra::A2), sample_spectral(1, 1));
    std::string text = config_to_json(cfg);
    CHECK(text.find("\"f+1.0\": \"0\"") != std::string::npos);
    CHECK(text.find("\"schema\": 1") != std::string::npos);
    CHECK(text.find("\"den\"") == std::string::npos);
  }

  TEST_CASE("config documents are validated") {
    std::string good = config_to_json(FieldConfig(Algebra::A2, nwave::testing::default_constants()));
    CHECK_NOTHROW(config_from_json(good));
    auto without = [&](const std::string& key) {
      std::string t = good;
      auto p = t.find("\"" + key + "\"");
      auto e = t.find('\n', p);
      t.erase(p, e - p + 1);
      return t;
    };
    CHECK_THROWS_AS(config_from_json(without("schema")), InputError);
    CHECK_THROWS_AS(config_from_json(without("f-1.1")), InputError);
    std::string extra = good;
    extra.replace(extra.find("\"f+1.0\""), 7, "\"f+2.3\"");
    CHECK_THROWS_AS(config_from_json(extra), InputError);
    std::string bad_alg = good;
    bad_alg.replace(bad_alg.find("\"A2\""), 4, "\"C3\"");
    CHECK_THROWS_AS(config_from_json(bad_alg), InputError);
  }

  TEST_CASE("reports serialize counts, verdict and counterexample") {
    auto cfg = solution_from_tau(model(Algebra::A2), sample_spectral(2, 2), 1, 1);
    cfg[plus(1, 0)] *= Rational(3);
    std::string text = report_to_json(verify_config(model(Algebra::A2), cfg));
    CHECK(text.find("\"verdict\": \"FAIL\"") != std::string::npos);
    CHECK(text.find("\"counterexample\": {") != std::string::npos);
    CHECK(text.find("\"hash\"") != std::string::npos);
  }

  TEST_CASE("CSV sampling") {
    FieldConfig cfg(Algebra::A2, WaveConstants(1, 0, 0, 1));
    cfg[minus(1, 0)] = ExpPoly(LinForm{1, 0}, 1);
    cfg[plus(1, 0)] = ExpPoly(Rational(5));
    cfg[minus(0, 1)] = ExpRational(ExpPoly(Rational(1)), ExpPoly(LinForm{1, 0}, 1) - ExpPoly(LinForm{0, 1}, 1));
    std::string csv = sample_csv(cfg, 0, 1, 0, 1, 2, 2);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "t,x,f+1.0,f+0.1,f+1.1,f-1.0,f-0.1,f-1.1");
    std::getline(in, line);
    CHECK(line == "0,0,5,0,0,1,,0");
    std::getline(in, line);
    CHECK(line.rfind("0,1,5,0,0,1,", 0) == 0);
    std::getline(in, line);
    CHECK(line.rfind("1,0,5,0,0,2.7182818284590452", 0) == 0);
    CHECK_THROWS_AS(sample_csv(cfg, 0, 1, 0, 1, 0, 2), InputError);
  }
}
