// SPDX-License-Identifier: Apache-2.0
#include "hpcalc/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace hpcalc {

namespace {

std::string read_line(std::istream& is) {
  std::string line;
  while (std::getline(is, line)) {
    const auto p = line.find_first_not_of(" \t\r");
    if (p == std::string::npos || line[p] == '#') continue;
    return line;
  }
  fail(ErrorKind::Io, "unexpected end of input");
}

CVec read_rows(std::istream& is, std::size_t n) {
  CVec v(n, cplx(0.0));
  std::vector<bool> seen(n, false);
  for (std::size_t r = 0; r < n; ++r) {
    std::istringstream ls(read_line(is));
    long long idx;
    double re, im;
    if (!(ls >> idx >> re >> im)) fail(ErrorKind::Io, "malformed sample row");
    if (idx < 0 || static_cast<std::size_t>(idx) >= n || seen[idx]) fail(ErrorKind::Io, "bad sample index");
    seen[idx] = true;
    v[idx] = {re, im};
  }
  return v;
}

template <class F>
void with_output(const std::string& path, F&& body) {
  std::ofstream os(path);
  if (!os) fail(ErrorKind::Io, "cannot write " + path);
  body(os);
  if (!os) fail(ErrorKind::Io, "write failed for " + path);
}

template <class F>
auto with_input(const std::string& path, F&& body) {
  std::ifstream is(path);
  if (!is) fail(ErrorKind::Io, "cannot read " + path);
  return body(is);
}

}  // namespace

void write_signal(std::ostream& os, const Signal& s, std::optional<double> defect) {
  os << std::setprecision(17) << s.grid.t0 << ' ' << s.grid.dt << ' ' << s.grid.n;
  if (defect) os << ' ' << *defect;
  os << '\n';
  for (std::size_t k = 0; k < s.size(); ++k)
    os << k << ' ' << s.samples[k].real() << ' ' << s.samples[k].imag() << '\n';
}

Signal read_signal(std::istream& is, double* defect) {
  std::istringstream hs(read_line(is));
  Grid g;
  if (!(hs >> g.t0 >> g.dt >> g.n)) fail(ErrorKind::Io, "malformed signal header");
  double d;
  if (hs >> d) {
    if (defect) *defect = d;
  } else if (defect) {
    *defect = -1.0;
  }
  g.validate();
  return Signal::from_samples(g, read_rows(is, g.n));
}

void save_signal(const std::string& path, const Signal& s, std::optional<double> defect) {
  with_output(path, [&](std::ostream& os) { write_signal(os, s, defect); });
}

Signal load_signal(const std::string& path, double* defect) {
  return with_input(path, [&](std::istream& is) { return read_signal(is, defect); });
}

void write_spectrum(std::ostream& os, const Spectrum& s) {
  os << std::setprecision(17) << s.grid.u0() << ' ' << s.grid.du() << ' ' << s.grid.n << '\n';
  for (std::size_t j = 0; j < s.values.size(); ++j)
    os << j << ' ' << s.values[j].real() << ' ' << s.values[j].imag() << '\n';
}

Spectrum read_spectrum(std::istream& is) {
  std::istringstream hs(read_line(is));
  double u0, du;
  std::size_t n;
  if (!(hs >> u0 >> du >> n)) fail(ErrorKind::Io, "malformed spectrum header");
  Grid g{n, -kPi / u0, 0.0};
  g.validate();
  if (std::abs(g.du() - du) > 1e-9 * du) fail(ErrorKind::Io, "spectrum header is inconsistent");
  return Spectrum{g, read_rows(is, n)};
}

void write_matrix(std::ostream& os, const Matrix& m) {
  os << std::setprecision(17) << m.rows() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      os << i << ' ' << j << ' ' << m(i, j).real() << ' ' << m(i, j).imag() << '\n';
}

Matrix read_matrix(std::istream& is) {
  std::istringstream hs(read_line(is));
  long long d;
  if (!(hs >> d) || d <= 0 || d > 4096) fail(ErrorKind::Io, "malformed matrix header");
  Matrix m = Matrix::Zero(d, d);
  for (long long r = 0; r < d * d; ++r) {
    std::istringstream ls(read_line(is));
    long long i, j;
    double re, im;
    if (!(ls >> i >> j >> re >> im) || i < 0 || j < 0 || i >= d || j >= d)
      fail(ErrorKind::Io, "malformed matrix row");
    m(i, j) = {re, im};
  }
  return m;
}

void save_matrix(const std::string& path, const Matrix& m) {
  with_output(path, [&](std::ostream& os) { write_matrix(os, m); });
}

Matrix load_matrix(const std::string& path) {
  return with_input(path, [&](std::istream& is) { return read_matrix(is); });
}

Digest& Digest::add(const void* data, std::size_t bytes) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < bytes; ++i) {
    h_ ^= p[i];
    h_ *= 1099511628211ULL;
  }
  return *this;
}

Digest& Digest::add(const Matrix& m) {
  const long long r = m.rows(), c = m.cols();
  add(&r, sizeof r).add(&c, sizeof c);
  return add(m.data(), sizeof(cplx) * static_cast<std::size_t>(m.size()));
}

Digest& Digest::add(const Signal& s) {
  add(s.grid.t0).add(s.grid.dt).add(static_cast<double>(s.grid.n));
  return add(s.samples.data(), sizeof(cplx) * s.samples.size());
}

std::string Digest::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", h_);
  return buf;
}

}  // namespace hpcalc
