// ncgkk: run verification suites and emit spectra.
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 usage or configuration error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "ncgkk/config.hpp"
#include "ncgkk/gauge.hpp"
#include "ncgkk/numeric.hpp"
#include "ncgkk/spectra.hpp"
#include "ncgkk/suites.hpp"
#include "ncgkk/torus.hpp"

namespace {

using namespace ncgkk;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Flags {
  std::string config_file;
  std::string json_path;
  int box = 0, margin = 0, nmax = 0, kmax = 0;
  double theta = 0.0;
  CLI::Option *box_opt = nullptr, *theta_opt = nullptr, *margin_opt = nullptr, *nmax_opt = nullptr,
              *kmax_opt = nullptr;
};

void add_common(CLI::App *sub, Flags &f) {
  sub->add_option("--config", f.config_file, "INI/TOML-style configuration file")->check(CLI::ExistingFile);
  f.box_opt = sub->add_option("--box", f.box, "Fourier box size N");
  f.theta_opt = sub->add_option("--theta", f.theta, "deformation parameter");
  f.margin_opt = sub->add_option("--margin", f.margin, "interior margin");
  f.nmax_opt = sub->add_option("--nmax", f.nmax, "winding bound / n range");
  f.kmax_opt = sub->add_option("--kmax", f.kmax, "S3 spectrum bound");
}

// Defaults, then the file, then NCGKK_SEED, then explicit flags.
Config resolve(const Flags &f) {
  Config c;
  if (!f.config_file.empty())
    apply_config_file(c, f.config_file);
  apply_environment(c);
  if (f.box_opt && f.box_opt->count())
    c.box = f.box;
  if (f.theta_opt && f.theta_opt->count())
    c.theta = f.theta;
  if (f.margin_opt && f.margin_opt->count())
    c.margin = f.margin;
  else
    c.margin = std::min(c.margin, c.box);
  if (f.nmax_opt && f.nmax_opt->count())
    c.nmax = f.nmax;
  if (f.kmax_opt && f.kmax_opt->count())
    c.kmax = f.kmax;
  c.validate();
  return c;
}

void write_file(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ConfigError("cannot write " + path);
  out << content;
}

int emit_report(const VerificationReport &report, const std::string &json_path) {
  std::cout << report.to_text();
  if (!json_path.empty())
    write_file(json_path, report.to_json());
  return report.passed() ? 0 : kExitFail;
}

int run_spectrum(const std::string &model, const std::string &format, const Config &c, const Flags &f) {
  const bool csv = format == "csv";
  auto exact = [&](const SpectrumTable &t) { std::cout << (csv ? table_to_csv(t) : table_to_json(t) + "\n"); };
  auto numeric = [&](const Spectrum &s) { std::cout << (csv ? spectrum_to_csv(s) : spectrum_to_json(s) + "\n"); };
  const int nmax = f.nmax_opt->count() ? f.nmax : c.nmax;
  if (model == "s3")
    exact(s3_dirac_spectrum(c.kmax));
  else if (model == "d0")
    exact(d0_invariant_spectrum(nmax));
  else if (model == "s2shifted")
    exact(s2_shifted_spectrum(nmax));
  else if (model == "nctorus")
    numeric(hermitian_eigenvalues(build_nc_torus(c.box, c.theta, c.margin).dirac.matrix));
  else
    numeric(hermitian_eigenvalues(torus_product_operator(c.box).matrix));
  return 0;
}

int run_gauge(const std::string &model, const std::string &witness, const Config &c, const std::string &json_path) {
  nlohmann::ordered_json out;
  out["model"] = model;
  out["witness"] = witness;
  bool ok = true;
  if (model == "torus") {
    const auto t = build_nc_torus(c.box, c.theta, c.margin);
    ComplexMatrix u;
    if (witness == "u1")
      u = t.u1.matrix;
    else if (witness == "u2")
      u = t.u2.matrix;
    else if (witness == "u1u2")
      u = t.u1.matrix * t.u2.matrix;
    else if (witness == "dual")
      u = torus_dual_action(1, c.theta, c.box).u;
    else
      throw ConfigError("torus witness must be one of u1, u2, u1u2, dual");
    const double res = perturbation_residual(t.dirac.matrix, u, t.dirac);
    out["perturbation_residual"] = res;
    ok = res <= 1e-10;
  } else {
    // witness "re1,im1,re2,im2" gives the Yukawa entries z1, z2
    double v[4] = {1.0, 0.0, 0.0, 1.0};
    if (!witness.empty() && std::sscanf(witness.c_str(), "%lf,%lf,%lf,%lf", &v[0], &v[1], &v[2], &v[3]) != 4)
      throw ConfigError("gws witness must be re1,im1,re2,im2");
    const Complex z1(v[0], v[1]), z2(v[2], v[3]);
    const auto h = gws_higgs(1.0, ComplexMatrix::identity(2), 0.0, ComplexMatrix::diagonal({2.0, 3.0}), z1, z2);
    out["phi"] = {{h.phi1.real(), h.phi1.imag()}, {h.phi2.real(), h.phi2.imag()}};
    out["diagonal_block_norm"] = diagonal_block_norm(h.matrix);
    ok = diagonal_block_norm(h.matrix) == 0.0 && h.phi1 == 2.0 * z1 && h.phi2 == 3.0 * z2;
  }
  out["status"] = ok ? "pass" : "fail";
  const auto text = out.dump(2) + "\n";
  std::cout << text;
  if (!json_path.empty())
    write_file(json_path, text);
  return ok ? 0 : kExitFail;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Verification laboratory for unbounded KK factorizations"};
  app.require_subcommand(1);

  Flags verify_flags, spectrum_flags, report_flags, gauge_flags;

  std::string suite;
  auto *verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "all, symbolic, hopf, torus, spectra, gauge")
      ->required()
      ->check(CLI::IsMember({"all", "symbolic", "hopf", "torus", "spectra", "gauge"}));
  add_common(verify, verify_flags);
  verify->add_option("--json", verify_flags.json_path, "write the JSON report here");

  std::string model, format = "csv";
  auto *spectrum = app.add_subcommand("spectrum", "emit a spectrum table");
  spectrum->add_option("model", model, "s3, s2shifted, d0, nctorus, product")
      ->required()
      ->check(CLI::IsMember({"s3", "s2shifted", "d0", "nctorus", "product"}));
  spectrum->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  add_common(spectrum, spectrum_flags);

  auto *report = app.add_subcommand("report", "run every suite and print a per-suite summary");
  add_common(report, report_flags);
  report->add_option("--json", report_flags.json_path, "write the JSON report here");

  std::string gauge_model = "torus", witness = "u1";
  auto *gauge = app.add_subcommand("gauge", "gauge identity residuals for one witness");
  gauge->add_option("--model", gauge_model, "torus or gws")->check(CLI::IsMember({"torus", "gws"}));
  gauge->add_option("--witness", witness, "torus: u1, u2, u1u2, dual; gws: re1,im1,re2,im2");
  add_common(gauge, gauge_flags);
  gauge->add_option("--json", gauge_flags.json_path, "write the JSON result here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify)
      return emit_report(run_suite(suite, resolve(verify_flags)), verify_flags.json_path);
    if (*spectrum)
      return run_spectrum(model, format, resolve(spectrum_flags), spectrum_flags);
    if (*gauge)
      return run_gauge(gauge_model, witness, resolve(gauge_flags), gauge_flags.json_path);
    const auto config = resolve(report_flags);
    VerificationReport all("all");
    for (const auto &name : suite_names()) {
      const auto r = run_suite(name, config);
      std::cout << name << ": " << r.count(CheckStatus::pass) << " passed, " << r.count(CheckStatus::fail)
                << " failed, " << r.count(CheckStatus::skip) << " skipped\n";
      for (const auto &c : r.checks())
        if (c.status == CheckStatus::fail)
          std::cout << "  [fail] " << c.id << ": " << c.statement << "\n";
      all.merge(r);
    }
    all.set_config(config.echo());
    std::cout << "overall: " << (all.passed() ? "PASS" : "FAIL") << "\n";
    if (!report_flags.json_path.empty())
      write_file(report_flags.json_path, all.to_json());
    return all.passed() ? 0 : kExitFail;
  } catch (const ConfigError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
