#include "nwave/errors.hpp"
#include "nwave/io.hpp"
#include "nwave/tau.hpp"
#include "nwave/transforms.hpp"
#include "nwave/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace nwave;

enum Exit { kOk = 0, kFail = 1, kInput = 2, kAbort = 3 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << text))
    throw InputError("cannot write " + path);
}

Rational rational_arg(const std::string& text, const char* name) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument&) {
    throw InputError(std::string(name) + ": malformed rational \"" + text + "\"");
  }
}

std::vector<std::string> split_chain(const std::string& chain) {
  std::vector<std::string> out;
  std::stringstream in(chain);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto b = item.find_first_not_of(" \t");
    auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos)
      throw InputError("empty entry in --chain \"" + chain + "\"");
    out.push_back(item.substr(b, e - b + 1));
  }
  if (out.empty())
    throw InputError("--chain is empty");
  return out;
}

void print_summary(const Report& r) {
  std::cout << r.subject << " (" << to_string(r.mode) << "): " << (r.pass() ? "PASS" : "FAIL")
            << "  " << r.passed() << " passed, " << r.failed() << " failed, " << r.recorded()
            << " recorded\n";
  for (const auto& c : r.checks) {
    if (c.gated && c.pass)
      continue;
    std::cout << "  " << (c.pass ? "pass" : "FAIL") << (c.gated ? "" : " (recorded)") << "  "
              << c.name << ": " << c.detail << '\n';
  }
}

struct ConstructArgs {
  std::string algebra, spectral, out;
  int n1 = 0, n2 = 0;
  bool initial = false, raw = false;
};

int run_construct(const ConstructArgs& a) {
  const auto& m = model(parse_algebra(a.algebra));
  SpectralData s = parse_spectral(read_file(a.spectral));
  FieldConfig cfg = a.initial ? initial_config(m, s) : solution_from_tau(m, s, a.n1, a.n2, !a.raw);
  write_output(a.out, config_to_json(cfg));
  return kOk;
}

struct TransformArgs {
  std::string chain, in, out;
};

int run_transform(const TransformArgs& a) {
  FieldConfig cfg = config_from_json(read_file(a.in));
  std::vector<TransformId> ids;
  for (const auto& name : split_chain(a.chain))
    ids.push_back(parse_transform(name, cfg.algebra()));
  write_output(a.out, config_to_json(apply_chain(ids, cfg)));
  return kOk;
}

struct VerifyArgs {
  std::string suite, in, mode = "exact", report;
};

int run_verify(const VerifyArgs& a) {
  Mode mode = parse_mode(a.mode);
  Report r = a.suite.empty() ? [&] {
    FieldConfig cfg = config_from_json(read_file(a.in));
    return verify_config(model(cfg.algebra()), cfg, mode);
  }()
                             : verify_suite(a.suite, mode);
  print_summary(r);
  if (!a.report.empty())
    write_output(a.report, report_to_json(r));
  if (a.suite == "g2-hypothesis")
    return kOk;
  return r.pass() ? kOk : kFail;
}

struct SampleArgs {
  std::string in, csv, t0 = "0", t1 = "1", x0 = "0", x1 = "1";
  int nt = 11, nx = 11;
};

int run_sample(const SampleArgs& a) {
  FieldConfig cfg = config_from_json(read_file(a.in));
  write_output(a.csv, sample_csv(cfg, rational_arg(a.t0, "--t0"), rational_arg(a.t1, "--t1"),
                                 rational_arg(a.x0, "--x0"), rational_arg(a.x1, "--x1"), a.nt,
                                 a.nx));
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solutions, discrete transformations and identity checks for two-dimensional "
               "wave systems of rank-two algebras"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build a solution from spectral data");
  construct->add_option("--algebra", ca.algebra, "A2, B2 or G2")->required();
  construct->add_option("--spectral", ca.spectral, "Spectral data JSON")->required();
  construct->add_option("--n1", ca.n1, "Steps along the first simple root")->check(CLI::NonNegativeNumber);
  construct->add_option("--n2", ca.n2, "Steps along the second simple root")->check(CLI::NonNegativeNumber);
  construct->add_flag("--initial", ca.initial, "Emit the lower-triangular initial solution");
  construct->add_flag("--raw", ca.raw, "Skip the calibration constants");
  construct->add_option("--out", ca.out, "Output file (default stdout)");

  TransformArgs ta;
  auto* transform = app.add_subcommand("transform", "Apply a chain of discrete transformations");
  transform->add_option("--chain", ta.chain, "Comma-separated ids, applied left to right")->required();
  transform->add_option("--in", ta.in, "Input config JSON")->required();
  transform->add_option("--out", ta.out, "Output file (default stdout)");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Check a config or run a named suite");
  auto* suite_opt = verify->add_option("--suite", va.suite, "Suite name")
                        ->check(CLI::IsMember(suite_names()));
  auto* in_opt = verify->add_option("--in", va.in, "Config JSON to check");
  suite_opt->excludes(in_opt);
  verify->add_option("--mode", va.mode, "exact or numeric")->check(CLI::IsMember({"exact", "numeric"}));
  verify->add_option("--report", va.report, "Write the JSON report here");

  SampleArgs sa;
  auto* sample = app.add_subcommand("sample", "Evaluate fields on a grid and write CSV");
  sample->add_option("--in", sa.in, "Config JSON")->required();
  sample->add_option("--t0", sa.t0, "Rational lower t bound");
  sample->add_option("--t1", sa.t1, "Rational upper t bound");
  sample->add_option("--x0", sa.x0, "Rational lower x bound");
  sample->add_option("--x1", sa.x1, "Rational upper x bound");
  sample->add_option("--nt", sa.nt, "Points along t")->check(CLI::PositiveNumber);
  sample->add_option("--nx", sa.nx, "Points along x")->check(CLI::PositiveNumber);
  sample->add_option("--csv", sa.csv, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInput;
  }
  if (verify->parsed() && va.suite.empty() && va.in.empty()) {
    std::cerr << "verify: one of --suite or --in is required\n";
    return kInput;
  }

  try {
    if (construct->parsed())
      return run_construct(ca);
    if (transform->parsed())
      return run_transform(ta);
    if (verify->parsed())
      return run_verify(va);
    return run_sample(sa);
  } catch (const PivotZero& e) {
    std::cerr << "pivot vanishes: " << e.what() << " [" << e.field() << "]\n";
    return kAbort;
  } catch (const TauZero& e) {
    std::cerr << "interrupted chain: " << e.what() << '\n';
    return kAbort;
  } catch (const EvalPole& e) {
    std::cerr << "pole: " << e.what() << '\n';
    return kAbort;
  } catch (const DivisionByZeroField& e) {
    std::cerr << "division by zero field: " << e.what() << '\n';
    return kAbort;
  } catch (const InvalidSpectralData& e) {
    std::cerr << "invalid spectral data: " << e.what() << '\n';
    return kInput;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kAbort;
  }
}
