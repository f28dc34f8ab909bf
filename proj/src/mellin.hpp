#ifndef FOXH_MELLIN_HPP
#define FOXH_MELLIN_HPP

#include <complex>

#include "hspec.hpp"
#include "logcomplex.hpp"

namespace foxh {

// The gamma-ratio kernel
//   theta(s) = prod_{j<=m} Gamma(b_j - f_j s) prod_{j<=n} Gamma(1 - a_j + e_j s)
//            / (prod_{j>m} Gamma(1 - b_j + f_j s) prod_{j>n} Gamma(a_j - e_j s))
// assembled as a signed sum of log-gamma values. A pole of a denominator
// gamma makes the kernel vanish; that comes back as a zero-flagged value.
LogComplex theta(const HFunctionSpec& spec, std::complex<double> s);

// theta(s) * z^s in log space, with the z^s exponent added exactly (no
// phase reduction).
LogComplex integrand(const HFunctionSpec& spec, const Argument& z,
                     std::complex<double> s);

// One sampled point of the kernel. s is expected to lie strictly inside the
// spec's contour strip or on a sampling line chosen by an evaluator.
struct KernelPoint {
  std::complex<double> s;
  LogComplex value;
};

inline KernelPoint sample_kernel(const HFunctionSpec& spec, const Argument& z,
                                 std::complex<double> s) {
  return {s, integrand(spec, z, s)};
}

}  // namespace foxh

#endif
