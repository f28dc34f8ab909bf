#ifndef FOXH_GAMMACHECK_HPP
#define FOXH_GAMMACHECK_HPP

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace foxh {

struct GammaCheckItem {
  std::string name;
  int count = 0;
  double tolerance = 0.0;
  double worst = 0.0;
  std::complex<double> worst_at;
  bool pass = true;
};

struct GammaCheckReport {
  std::uint64_t seed = 0;
  int count = 0;
  bool pass = true;
  std::vector<GammaCheckItem> checks;
};

// Seeded residual sweep over the reflection, duplication and recurrence
// identities. count samples per check; count 0 passes vacuously. fault
// perturbs the first sine residual (mutation hook for exit-code tests).
GammaCheckReport run_gamma_suite(std::uint64_t seed, int count,
                                 bool fault = false);

}  // namespace foxh

#endif
