// SPDX-License-Identifier: Apache-2.0
#include "hpcalc/hpcalc.h"

#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "hpcalc/calculus.hpp"
#include "hpcalc/harness.hpp"
#include "hpcalc/io.hpp"
#include "hpcalc/littlewood_paley.hpp"

struct hpc_signal {
  hpcalc::Signal s;
};
struct hpc_generator {
  hpcalc::Generator g;
};
struct hpc_certificate {
  hpcalc::DecompositionCertificate c;
};

namespace {

using namespace hpcalc;
using json = nlohmann::ordered_json;

thread_local std::string last_error;
thread_local double last_measured = 0.0;

hpc_status code_of(ErrorKind k) {
  switch (k) {
    case ErrorKind::Configuration: return HPC_ERR_CONFIG;
    case ErrorKind::Domain: return HPC_ERR_DOMAIN;
    case ErrorKind::Accuracy: return HPC_ERR_ACCURACY;
    case ErrorKind::Truncation: return HPC_ERR_TRUNCATION;
    case ErrorKind::Rejection: return HPC_ERR_REJECTED;
    case ErrorKind::Singularity: return HPC_ERR_SINGULAR;
    case ErrorKind::Io: return HPC_ERR_IO;
  }
  return HPC_ERR_INTERNAL;
}

template <class F>
hpc_status guarded(F&& body) {
  try {
    body();
    last_error.clear();
    last_measured = 0.0;
    return HPC_OK;
  } catch (const Error& e) {
    last_error = e.what();
    last_measured = e.measured();
    return code_of(e.kind());
  } catch (const nlohmann::json::exception& e) {
    last_error = std::string("JSON: ") + e.what();
    last_measured = 0.0;
    return HPC_ERR_CONFIG;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    last_measured = 0.0;
    return HPC_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    last_measured = 0.0;
    return HPC_ERR_INTERNAL;
  }
}

void need(const void* p, const char* what) {
  if (!p) fail(ErrorKind::Configuration, std::string("null argument: ") + what);
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(row);
  }
  return rows;
}

std::string result_json(const CalcResult& r) {
  json j;
  j["operation"] = r.operation;
  j["inputs_digest"] = r.inputs_digest;
  j["matrix"] = matrix_json(r.matrix);
  j["bound"] = r.bound;
  j["residuals"] = r.residuals;
  return j.dump(2) + "\n";
}

HolomorphicSymbol symbol_from(const nlohmann::json& j) {
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rational") {
    const auto mu = j.at("mu");
    return HolomorphicSymbol::rational(cplx(mu.at(0).get<double>(), mu.at(1).get<double>()), j.value("m", 2));
  }
  if (kind == "exp_polynomial") {
    ExpPolynomial b;
    for (const auto& t : j.at("terms"))
      b.terms.push_back({cplx(t.at(0).get<double>(), t.at(1).get<double>()), t.at(2).get<int>(),
                         cplx(t.at(3).get<double>(), t.at(4).get<double>())});
    require(!b.terms.empty(), ErrorKind::Configuration, "exp_polynomial needs terms");
    double abscissa = -1e300;
    for (const auto& t : b.terms) abscissa = std::max(abscissa, -t.a.real());
    return HolomorphicSymbol::callback([b](cplx z) { return b.laplace(z); }, abscissa, 0.0, "exp_polynomial");
  }
  if (kind == "laplace") return HolomorphicSymbol::laplace(load_signal(j.at("signal").get<std::string>()));
  if (kind == "boundary") return HolomorphicSymbol::boundary(load_signal(j.at("signal").get<std::string>()));
  if (kind == "product") {
    const auto& fs = j.at("factors");
    require(!fs.empty(), ErrorKind::Configuration, "product needs factors");
    HolomorphicSymbol acc = symbol_from(fs.at(0));
    for (std::size_t i = 1; i < fs.size(); ++i) acc = acc * symbol_from(fs.at(i));
    return acc;
  }
  fail(ErrorKind::Configuration, "unknown symbol kind '" + kind + "'");
}

HolomorphicSymbol parse_symbol(const char* text) {
  need(text, "symbol_json");
  return symbol_from(nlohmann::json::parse(text));
}

Generator make_generator(const Matrix& A, double t_max, int samples) {
  CertifyOptions opt;
  if (t_max > 0.0) opt.t_max = t_max;
  if (samples > 0) opt.samples = samples;
  return certify_bound(A, opt);
}

hpc_status run_report(bool verify, const char* name, const char* config_text, char** report_json, char** csv,
                      int* all_pass) {
  return guarded([&] {
    need(name, "name");
    const Config cfg = config_text ? parse_config(config_text) : Config{};
    const Report r = verify ? run_verify(name, cfg) : run_experiment(name, cfg);
    if (report_json) *report_json = dup(r.json());
    if (csv) *csv = dup(r.csv());
    if (all_pass) *all_pass = r.all_pass() ? 1 : 0;
  });
}

}  // namespace

extern "C" {

const char* hpc_status_string(hpc_status s) {
  switch (s) {
    case HPC_OK: return "ok";
    case HPC_ERR_CONFIG: return "configuration error";
    case HPC_ERR_DOMAIN: return "domain error";
    case HPC_ERR_ACCURACY: return "accuracy error";
    case HPC_ERR_TRUNCATION: return "truncation error";
    case HPC_ERR_REJECTED: return "rejected";
    case HPC_ERR_SINGULAR: return "singularity";
    case HPC_ERR_IO: return "i/o error";
    case HPC_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* hpc_last_error(void) { return last_error.c_str(); }
double hpc_last_measured(void) { return last_measured; }
void hpc_string_free(char* s) { std::free(s); }

hpc_status hpc_signal_create(size_t n, double dt, double t0, const double* re, const double* im, hpc_signal** out) {
  return guarded([&] {
    need(re, "re");
    need(out, "out");
    Grid g{n, dt, t0};
    g.validate();
    CVec v(n);
    for (size_t k = 0; k < n; ++k) v[k] = cplx(re[k], im ? im[k] : 0.0);
    *out = new hpc_signal{Signal::from_samples(g, std::move(v))};
  });
}

hpc_status hpc_signal_load(const char* path, hpc_signal** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new hpc_signal{load_signal(path)};
  });
}

hpc_status hpc_signal_save(const hpc_signal* s, const char* path) {
  return guarded([&] {
    need(s, "signal");
    need(path, "path");
    save_signal(path, s->s);
  });
}

size_t hpc_signal_size(const hpc_signal* s) { return s ? s->s.size() : 0; }

hpc_status hpc_signal_sample(const hpc_signal* s, size_t k, double* re, double* im) {
  return guarded([&] {
    need(s, "signal");
    if (k >= s->s.size()) fail(ErrorKind::Domain, "sample index out of range");
    if (re) *re = s->s.samples[k].real();
    if (im) *im = s->s.samples[k].imag();
  });
}

void hpc_signal_free(hpc_signal* s) { delete s; }

hpc_status hpc_generator_create(int d, const double* re, const double* im, double t_max, int samples,
                                hpc_generator** out) {
  return guarded([&] {
    need(re, "re");
    need(out, "out");
    require(d >= 1, ErrorKind::Configuration, "dimension must be positive");
    Matrix A(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) A(i, j) = cplx(re[i * d + j], im ? im[i * d + j] : 0.0);
    *out = new hpc_generator{make_generator(A, t_max, samples)};
  });
}

hpc_status hpc_generator_load(const char* path, double t_max, int samples, hpc_generator** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new hpc_generator{make_generator(load_matrix(path), t_max, samples)};
  });
}

int hpc_generator_dim(const hpc_generator* g) { return g ? static_cast<int>(g->g.dim()) : 0; }
double hpc_generator_c_bound(const hpc_generator* g) { return g ? g->g.c_bound : 0.0; }
double hpc_generator_margin(const hpc_generator* g) { return g ? g->g.spectral_margin : 0.0; }
void hpc_generator_free(hpc_generator* g) { delete g; }

hpc_status hpc_certificate_load(const char* path, hpc_certificate** out) {
  return guarded([&] {
    need(path, "path");
    need(out, "out");
    *out = new hpc_certificate{load_certificate(path)};
  });
}

hpc_status hpc_certificate_save(const hpc_certificate* c, const char* path) {
  return guarded([&] {
    need(c, "certificate");
    need(path, "path");
    save_certificate(path, c->c);
  });
}

double hpc_certificate_value(const hpc_certificate* c) { return c ? c->c.value() : 0.0; }
size_t hpc_certificate_pairs(const hpc_certificate* c) { return c ? c->c.pairs.size() : 0; }
void hpc_certificate_free(hpc_certificate* c) { delete c; }

hpc_status hpc_hille_phillips(const hpc_generator* g, const hpc_signal* density, char** result) {
  return guarded([&] {
    need(g, "generator");
    need(density, "density");
    need(result, "result");
    *result = dup(result_json(hille_phillips(g->g, density->s)));
  });
}

hpc_status hpc_halfplane_eval(const hpc_generator* g, const char* symbol_json, double beta, char** result) {
  return guarded([&] {
    need(g, "generator");
    need(result, "result");
    *result = dup(result_json(halfplane_eval(g->g, parse_symbol(symbol_json), beta)));
  });
}

hpc_status hpc_regularized_eval(const hpc_generator* g, const char* symbol_json, double mu_re, double mu_im,
                                char** result) {
  return guarded([&] {
    need(g, "generator");
    need(result, "result");
    *result = dup(result_json(regularized_eval(g->g, parse_symbol(symbol_json), cplx(mu_re, mu_im))));
  });
}

hpc_status hpc_rho0(const hpc_generator* g, const hpc_certificate* c, char** result) {
  return guarded([&] {
    need(g, "generator");
    need(c, "certificate");
    need(result, "result");
    *result = dup(result_json(rho0(g->g, c->c)));
  });
}

hpc_status hpc_rho_ext(const hpc_generator* g, const hpc_certificate* c, double delta, char** result) {
  return guarded([&] {
    need(g, "generator");
    need(c, "certificate");
    need(result, "result");
    const DecompositionCertificate unit = unit_for(c->c, 1.0, delta);
    *result = dup(result_json(rho_ext(g->g, c->c, unit)));
  });
}

hpc_status hpc_besov_norm(const hpc_signal* F, int sharp, int k_min, int k_max, char** result) {
  return guarded([&] {
    need(F, "signal");
    need(result, "result");
    const LittlewoodPaleyFamily fam(sharp != 0, k_min, k_max);
    const BesovResult b = besov_norm(F->s, fam);
    json j;
    j["operation"] = "besov_norm";
    j["norm"] = b.norm;
    j["tail"] = b.tail;
    j["reconstruction_residual"] = b.reconstruction_residual;
    j["k"] = b.k;
    j["block_sup"] = b.block_sup;
    *result = dup(j.dump(2) + "\n");
  });
}

hpc_status hpc_a_cert(const hpc_signal* F, int k_min, int k_max, hpc_certificate** out) {
  return guarded([&] {
    need(F, "signal");
    need(out, "out");
    *out = new hpc_certificate{besov_to_a_cert(F->s, LittlewoodPaleyFamily(false, k_min, k_max))};
  });
}

hpc_status hpc_factor_h1(const hpc_signal* h, double factor_tol, hpc_signal** w, hpc_signal** v, char** result) {
  return guarded([&] {
    need(h, "signal");
    FactorOptions opt;
    if (factor_tol > 0.0) opt.factor_tol = factor_tol;
    const H1Factorization f = factor_h1(HardySignal::adopt(h->s, kHardyArithTol), opt);
    if (result) {
      json j;
      j["operation"] = "factor_h1";
      j["h_norm1"] = f.h_norm1;
      j["w_norm2sq"] = f.w_norm2sq;
      j["v_norm2sq"] = f.v_norm2sq;
      j["residual"] = f.residual;
      j["refine"] = f.refine;
      j["defect_w"] = f.raw_defect_w;
      j["defect_v"] = f.raw_defect_v;
      *result = dup(j.dump(2) + "\n");
    }
    if (w) *w = new hpc_signal{f.w.signal};
    if (v) *v = new hpc_signal{f.v.signal};
  });
}

hpc_status hpc_verify(const char* name, const char* config_text, char** report_json, char** csv, int* all_pass) {
  return run_report(true, name, config_text, report_json, csv, all_pass);
}

hpc_status hpc_experiment(const char* name, const char* config_text, char** report_json, char** csv, int* all_pass) {
  return run_report(false, name, config_text, report_json, csv, all_pass);
}

}  // extern "C"
