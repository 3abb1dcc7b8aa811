// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "hpcalc/signal.hpp"

namespace hpcalc {

// Unnormalized in-place DFT. sign = -1 forward, +1 backward.
void dft_inplace(CVec& data, int sign);

}  // namespace hpcalc
