// Writes the generator and signal files used by the CLI smoke test.
#include <cmath>
#include <fstream>
#include <iostream>
#include <string>

#include "hpcalc/io.hpp"
#include "hpcalc/random_models.hpp"

using namespace hpcalc;

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: cli_fixtures DIR\n";
    return 2;
  }
  const std::string dir = argv[1];
  {
    std::ofstream out(dir + "/gen.mat");
    write_matrix(out, random_generator_matrix(3, 1));
  }
  {
    Matrix bad = Matrix::Identity(2, 2);
    bad(0, 0) = -0.5;
    std::ofstream out(dir + "/unstable.mat");
    write_matrix(out, bad);
  }
  const Grid half{4096, 0.01, 0.0};
  save_signal(dir + "/density.sig", Signal::sample(half, [](double t) { return cplx(t * std::exp(-t)); }, 1.0));
  const HardySignal h = random_hardy(standard_grid(), 5);
  save_signal(dir + "/hardy.sig", h.signal, h.defect);
  return 0;
}
