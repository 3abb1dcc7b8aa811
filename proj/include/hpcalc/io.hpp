// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <optional>
#include <string>

#include "hpcalc/signal.hpp"

namespace hpcalc {

using Matrix = Eigen::MatrixXcd;

// Columnar text: "t0 dt n [defect]" then "index re im" rows.
void write_signal(std::ostream& os, const Signal& s, std::optional<double> defect = std::nullopt);
Signal read_signal(std::istream& is, double* defect = nullptr);
void save_signal(const std::string& path, const Signal& s, std::optional<double> defect = std::nullopt);
Signal load_signal(const std::string& path, double* defect = nullptr);

// Spectrum header is "u0 du n".
void write_spectrum(std::ostream& os, const Spectrum& s);
Spectrum read_spectrum(std::istream& is);

// "d" then d*d rows "i j re im".
void write_matrix(std::ostream& os, const Matrix& m);
Matrix read_matrix(std::istream& is);
void save_matrix(const std::string& path, const Matrix& m);
Matrix load_matrix(const std::string& path);

// FNV-1a over the raw bytes, rendered as 16 hex digits.
class Digest {
 public:
  Digest& add(const void* data, std::size_t bytes);
  Digest& add(double x) { return add(&x, sizeof x); }
  Digest& add(const std::string& s) { return add(s.data(), s.size()); }
  Digest& add(const Matrix& m);
  Digest& add(const Signal& s);
  std::string hex() const;

 private:
  unsigned long long h_ = 1469598103934665603ULL;
};

}  // namespace hpcalc
