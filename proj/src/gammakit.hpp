#ifndef FOXH_GAMMAKIT_HPP
#define FOXH_GAMMAKIT_HPP

#include <complex>

#include "logcomplex.hpp"

namespace foxh {

// True if z sits (numerically) on a pole of Gamma, i.e. a non-positive integer.
bool gamma_pole(std::complex<double> z);

// True if z sits on any integer (pole of Gamma(z) or Gamma(1-z)).
bool integer_point(std::complex<double> z);

// Principal-branch complex log-gamma, continuous off the cut (-inf, 0].
// Satisfies log_gamma_c(z + 1) = log_gamma_c(z) + Log z with the principal Log.
// Relative accuracy of exp(result) is ~1e-14 for |z| <= 100.
std::complex<double> log_gamma_c(std::complex<double> z);

LogComplex log_gamma(std::complex<double> z);

// sin(pi z) assembled as pi / (Gamma(z) Gamma(1-z)).
std::complex<double> reflection_sin(std::complex<double> z);

// cos(pi z) assembled as pi / (Gamma(1/2 - z) Gamma(1/2 + z)).
std::complex<double> reflection_cos(std::complex<double> z);

struct DuplicationSides {
  LogComplex lhs;  // log of Gamma(b - d s) Gamma(1 - b + d s)
  LogComplex rhs;  // log of 2 pi Gamma(2b - 2d s) Gamma(1 - 2b + 2d s)
                   //        / (Gamma(1/2 + b - d s) Gamma(1/2 - b + d s))
};

// Both sides of the doubled-argument split of Gamma(b - d s) Gamma(1 - b + d s).
// The two sides agree up to rounding; callers compare them.
DuplicationSides duplication_split(std::complex<double> beta, double delta,
                                   std::complex<double> s);

}  // namespace foxh

#endif
