// SPDX-License-Identifier: Apache-2.0
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hpcalc/hpcalc.h"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Failure {
  hpc_status status;
};

void check(hpc_status s) {
  if (s != HPC_OK) throw Failure{s};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "error: cannot read " << path << "\n";
    throw Failure{HPC_ERR_IO};
  }
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    throw Failure{HPC_ERR_IO};
  }
  out << text;
}

std::string take(char* s) {
  std::string out = s ? s : "";
  hpc_string_free(s);
  return out;
}

// RAII holders for the opaque handles.
struct Sig {
  hpc_signal* p = nullptr;
  ~Sig() { hpc_signal_free(p); }
};
struct Gen {
  hpc_generator* p = nullptr;
  ~Gen() { hpc_generator_free(p); }
};
struct Cert {
  hpc_certificate* p = nullptr;
  ~Cert() { hpc_certificate_free(p); }
};

struct GeneratorArgs {
  std::string path;
  double t_max = 0.0;
  int samples = 0;

  void attach(CLI::App* sub) {
    sub->add_option("-g,--generator", path, "matrix file (d, then rows 'i j re im')")->required()->check(
        CLI::ExistingFile);
    sub->add_option("--t-max", t_max, "horizon for the semigroup bound (0 = automatic)");
    sub->add_option("--samples", samples, "sample count for the semigroup bound (0 = default)");
  }
  void load(Gen& g) const { check(hpc_generator_load(path.c_str(), t_max, samples, &g.p)); }
};

std::string symbol_text(const std::string& arg) { return !arg.empty() && arg[0] == '@' ? slurp(arg.substr(1)) : arg; }

struct HarnessArgs {
  std::string name;
  std::string config_path;
  std::vector<std::string> sets;
  long long seed = -1;
  std::string out_json;
  std::string out_csv;
  CLI::App* app = nullptr;

  void attach(CLI::App* sub) {
    app = sub;
    sub->allow_extras();
    sub->footer("Any other --key value pair is passed through as a config entry.");
    sub->add_option("name", name, "routine name")->required();
    sub->add_option("-c,--config", config_path, "'key = value' config file")->check(CLI::ExistingFile);
    sub->add_option("-s,--set", sets, "override a config entry, key=value (repeatable)");
    sub->add_option("--seed", seed, "root seed (overrides the config)");
    sub->add_option("--out-json", out_json, "report path (default stdout)");
    sub->add_option("--out-csv", out_csv, "CSV data path");
  }

  // --key value and --key=value pairs left over by the parser
  std::string extra_entries() const {
    std::string text;
    const std::vector<std::string> rest = app->remaining();
    for (std::size_t i = 0; i < rest.size(); ++i) {
      const std::string& a = rest[i];
      if (a.rfind("--", 0) != 0 || a.size() < 3) {
        std::cerr << "error: unexpected argument '" << a << "'\n";
        throw Failure{HPC_ERR_CONFIG};
      }
      const std::string body = a.substr(2);
      const auto eq = body.find('=');
      if (eq != std::string::npos) {
        text += "\n" + body.substr(0, eq) + " = " + body.substr(eq + 1);
      } else if (i + 1 < rest.size()) {
        text += "\n" + body + " = " + rest[++i];
      } else {
        std::cerr << "error: no value for " << a << "\n";
        throw Failure{HPC_ERR_CONFIG};
      }
    }
    return text;
  }

  int run(bool verify) const {
    std::string text = config_path.empty() ? "" : slurp(config_path);
    text += extra_entries();
    for (const auto& kv : sets) text += "\n" + kv;
    if (seed >= 0) text += "\nseed = " + std::to_string(seed);
    char* report = nullptr;
    char* csv = nullptr;
    int pass = 0;
    check(verify ? hpc_verify(name.c_str(), text.c_str(), &report, &csv, &pass)
                 : hpc_experiment(name.c_str(), text.c_str(), &report, &csv, &pass));
    const std::string r = take(report);
    const std::string c = take(csv);
    emit(r, out_json);
    if (!out_csv.empty()) emit(c, out_csv);
    std::cerr << (pass ? "PASS " : "FAIL ") << name << "\n";
    return pass ? 0 : kExitFail;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Functional calculus for semigroup generators on Hardy-type algebras"};
  app.require_subcommand(1);
  std::string out = "-";

  GeneratorArgs hp_gen;
  std::string hp_density;
  auto* hp = app.add_subcommand("hp-calc", "integral of b(t) exp(-tA) dt for a sampled density");
  hp_gen.attach(hp);
  hp->add_option("-d,--density", hp_density, "density signal on t = k dt, k >= 0")->required()->check(
      CLI::ExistingFile);
  hp->add_option("-o,--out", out, "result JSON path");

  GeneratorArgs hpl_gen;
  std::string hpl_symbol;
  double hpl_beta = 0.0;
  auto* hpl = app.add_subcommand("halfplane-eval", "contour integral of a decaying holomorphic symbol");
  hpl_gen.attach(hpl);
  hpl->add_option("--symbol", hpl_symbol, "symbol JSON, or @file")->required();
  hpl->add_option("--beta", hpl_beta, "abscissa of the integration line")->required();
  hpl->add_option("-o,--out", out, "result JSON path");

  GeneratorArgs reg_gen;
  std::string reg_symbol;
  std::vector<double> reg_mu{-1.0, 0.0};
  auto* reg = app.add_subcommand("regularized-eval", "evaluate a bounded symbol through a rational regularizer");
  reg_gen.attach(reg);
  reg->add_option("--symbol", reg_symbol, "symbol JSON, or @file")->required();
  reg->add_option("--mu", reg_mu, "regularizer pole as 're im'")->expected(2);
  reg->add_option("-o,--out", out, "result JSON path");

  GeneratorArgs r0_gen;
  std::string r0_cert;
  auto* r0 = app.add_subcommand("rho0", "evaluate a decomposition certificate on a generator");
  r0_gen.attach(r0);
  r0->add_option("--cert", r0_cert, "certificate index JSON")->required()->check(CLI::ExistingFile);
  r0->add_option("-o,--out", out, "result JSON path");

  GeneratorArgs rx_gen;
  std::string rx_cert;
  double rx_delta = 0.5;
  auto* rx = app.add_subcommand("rho-ext", "extended evaluation through an approximate unit");
  rx_gen.attach(rx);
  rx->add_option("--cert", rx_cert, "certificate index JSON")->required()->check(CLI::ExistingFile);
  rx->add_option("--delta", rx_delta, "low-frequency cut of the unit");
  rx->add_option("-o,--out", out, "result JSON path");

  std::string bn_signal;
  bool bn_sharp = false;
  int bn_kmin = -12, bn_kmax = 12;
  auto* bn = app.add_subcommand("besov-norm", "dyadic block norm of a boundary function");
  bn->add_option("--signal", bn_signal, "signal file")->required()->check(CLI::ExistingFile);
  bn->add_flag("--sharp", bn_sharp, "use indicator blocks instead of smooth ones");
  bn->add_option("--k-min", bn_kmin);
  bn->add_option("--k-max", bn_kmax);
  bn->add_option("-o,--out", out, "result JSON path");

  std::string ac_signal, ac_out;
  int ac_kmin = -12, ac_kmax = 12;
  auto* ac = app.add_subcommand("a-cert", "build a decomposition certificate from dyadic blocks");
  ac->add_option("--signal", ac_signal, "signal file")->required()->check(CLI::ExistingFile);
  ac->add_option("--k-min", ac_kmin);
  ac->add_option("--k-max", ac_kmax);
  ac->add_option("-o,--out", ac_out, "certificate index path")->required();

  std::string fh_signal, fh_w, fh_v;
  double fh_tol = 0.0;
  auto* fh = app.add_subcommand("factor-h1", "split an H1 function into a product of two H2 functions");
  fh->add_option("--signal", fh_signal, "signal file")->required()->check(CLI::ExistingFile);
  fh->add_option("--tol", fh_tol, "accepted relative residual (0 = default)");
  fh->add_option("--out-w", fh_w, "first factor signal path");
  fh->add_option("--out-v", fh_v, "second factor signal path");
  fh->add_option("-o,--out", out, "result JSON path");

  HarnessArgs vf_args;
  auto* vf = app.add_subcommand("verify", "run a verification routine");
  vf_args.attach(vf);

  HarnessArgs ex_args;
  auto* ex = app.add_subcommand("experiment", "run an experiment");
  ex_args.attach(ex);

  CLI11_PARSE(app, argc, argv);

  try {
    char* result = nullptr;
    if (hp->parsed()) {
      Gen g;
      Sig b;
      hp_gen.load(g);
      check(hpc_signal_load(hp_density.c_str(), &b.p));
      check(hpc_hille_phillips(g.p, b.p, &result));
    } else if (hpl->parsed()) {
      Gen g;
      hpl_gen.load(g);
      check(hpc_halfplane_eval(g.p, symbol_text(hpl_symbol).c_str(), hpl_beta, &result));
    } else if (reg->parsed()) {
      Gen g;
      reg_gen.load(g);
      check(hpc_regularized_eval(g.p, symbol_text(reg_symbol).c_str(), reg_mu[0], reg_mu[1], &result));
    } else if (r0->parsed()) {
      Gen g;
      Cert c;
      r0_gen.load(g);
      check(hpc_certificate_load(r0_cert.c_str(), &c.p));
      check(hpc_rho0(g.p, c.p, &result));
    } else if (rx->parsed()) {
      Gen g;
      Cert c;
      rx_gen.load(g);
      check(hpc_certificate_load(rx_cert.c_str(), &c.p));
      check(hpc_rho_ext(g.p, c.p, rx_delta, &result));
    } else if (bn->parsed()) {
      Sig f;
      check(hpc_signal_load(bn_signal.c_str(), &f.p));
      check(hpc_besov_norm(f.p, bn_sharp ? 1 : 0, bn_kmin, bn_kmax, &result));
    } else if (ac->parsed()) {
      Sig f;
      Cert c;
      check(hpc_signal_load(ac_signal.c_str(), &f.p));
      check(hpc_a_cert(f.p, ac_kmin, ac_kmax, &c.p));
      check(hpc_certificate_save(c.p, ac_out.c_str()));
      std::cout << "value " << hpc_certificate_value(c.p) << " pairs " << hpc_certificate_pairs(c.p) << "\n";
      return 0;
    } else if (fh->parsed()) {
      Sig h, w, v;
      check(hpc_signal_load(fh_signal.c_str(), &h.p));
      check(hpc_factor_h1(h.p, fh_tol, &w.p, &v.p, &result));
      if (!fh_w.empty()) check(hpc_signal_save(w.p, fh_w.c_str()));
      if (!fh_v.empty()) check(hpc_signal_save(v.p, fh_v.c_str()));
    } else if (vf->parsed()) {
      return vf_args.run(true);
    } else if (ex->parsed()) {
      return ex_args.run(false);
    }
    emit(take(result), out);
    return 0;
  } catch (const Failure& f) {
    std::cerr << "error: " << hpc_status_string(f.status);
    const std::string msg = hpc_last_error();
    if (!msg.empty()) std::cerr << ": " << msg;
    if (hpc_last_measured() != 0.0) std::cerr << " (measured " << hpc_last_measured() << ")";
    std::cerr << "\n";
    return kExitError;
  }
}
