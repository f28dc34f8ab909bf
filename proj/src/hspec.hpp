#ifndef FOXH_HSPEC_HPP
#define FOXH_HSPEC_HPP

#include <cmath>
#include <complex>
#include <vector>

namespace foxh {

// One (coefficient, weight) pair of the parameter lists.
struct ParamPair {
  std::complex<double> coeff;
  double weight = 1.0;
};

// The point z as (modulus, unbounded phase) on the Riemann surface of the
// logarithm; rotating by e^{i t} is exact phase addition.
struct Argument {
  double modulus = 1.0;
  double phase = 0.0;

  std::complex<double> log() const { return {std::log(modulus), phase}; }
  Argument rotated(double shift) const { return {modulus, phase + shift}; }
};

struct HFunctionSpec {
  int m = 0;
  int n = 0;
  std::vector<ParamPair> upper;  // (a_j, e_j), length p
  std::vector<ParamPair> lower;  // (b_j, f_j), length q
  bool validated = false;
  bool simple_poles = false;

  int p() const { return static_cast<int>(upper.size()); }
  int q() const { return static_cast<int>(lower.size()); }
};

// Checks order bounds, weight positivity and pole separation; returns the
// spec marked valid, with the simple_poles flag (pairwise-distinct right
// poles) computed. Idempotent on already-valid specs.
HFunctionSpec validate(HFunctionSpec spec);

struct ConvergenceProfile {
  double a_star = 0.0;            // signed weight sum driving contour decay
  double c_min = 0.0;             // open interval of admissible abscissae;
  double c_max = 0.0;             // +-infinity when a side is unconstrained
  double sector_halfwidth = 0.0;  // a_star * pi / 2
};

ConvergenceProfile convergence_profile(const HFunctionSpec& spec);

struct PoleSets {
  std::vector<std::complex<double>> left;   // nearest the strip first (Re descending)
  std::vector<std::complex<double>> right;  // nearest the strip first (Re ascending)
};

PoleSets pole_sets(const HFunctionSpec& spec, int count);

}  // namespace foxh

#endif
