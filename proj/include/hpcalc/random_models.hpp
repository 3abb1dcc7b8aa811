// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

#include "hpcalc/certificates.hpp"
#include "hpcalc/semigroup.hpp"

namespace hpcalc {

struct GeneratorModel {
  double re_min = 0.0;
  double re_max = 2.0;
  double im_max = 3.0;
  double coupling = 0.3;  // V = I + coupling * Gaussian
};

// A = V D V^-1 with Re D in [re_min, re_max].
Matrix random_generator_matrix(int d, std::uint64_t seed, GeneratorModel model = {});
// A = U D U^* with U Haar unitary.
Matrix random_normal_generator(int d, std::uint64_t seed, GeneratorModel model = {});

Grid standard_grid(std::size_t n = 8192, double dt = 0.1);

// Sum of smooth spectral bumps with centers in [-umax, umax]; normalized to sup 1.
Signal random_bandlimited(const Grid& g, std::uint64_t seed, int bumps = 3, double umax = 4.0);
// Spectrum in [umin, umax] only; normalized to L1 norm 1.
HardySignal random_hardy(const Grid& g, std::uint64_t seed, int bumps = 3, double umin = 0.25, double umax = 4.0);
// Certificate with value 1.
DecompositionCertificate random_certificate(const Grid& g, std::uint64_t seed, int pairs = 2);

}  // namespace hpcalc
