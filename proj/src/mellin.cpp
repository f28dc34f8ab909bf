#include "mellin.hpp"

#include <sstream>

#include "error.hpp"
#include "gammakit.hpp"

namespace foxh {

namespace {

[[noreturn]] void raise_numerator_pole(std::complex<double> arg,
                                       std::complex<double> s) {
  std::ostringstream os;
  os << "theta: numerator gamma argument (" << arg.real() << ", " << arg.imag()
     << ") is at a pole for s = (" << s.real() << ", " << s.imag() << ")";
  raise(ErrorCode::pole_of_numerator, os.str());
}

}  // namespace

LogComplex theta(const HFunctionSpec& spec, std::complex<double> s) {
  if (!spec.validated) raise(ErrorCode::invalid_argument, "theta: spec not validated");

  // Numerator poles are errors; scan them before touching denominators.
  for (int j = 0; j < spec.m; ++j) {
    std::complex<double> arg = spec.lower[j].coeff - spec.lower[j].weight * s;
    if (gamma_pole(arg)) raise_numerator_pole(arg, s);
  }
  for (int j = 0; j < spec.n; ++j) {
    std::complex<double> arg = 1.0 - spec.upper[j].coeff + spec.upper[j].weight * s;
    if (gamma_pole(arg)) raise_numerator_pole(arg, s);
  }

  std::complex<double> log_sum = 0.0;
  for (int j = 0; j < spec.m; ++j)
    log_sum += log_gamma_c(spec.lower[j].coeff - spec.lower[j].weight * s);
  for (int j = 0; j < spec.n; ++j)
    log_sum += log_gamma_c(1.0 - spec.upper[j].coeff + spec.upper[j].weight * s);
  for (int j = spec.m; j < spec.q(); ++j) {
    std::complex<double> arg = 1.0 - spec.lower[j].coeff + spec.lower[j].weight * s;
    if (gamma_pole(arg)) return LogComplex::zero_value();
    log_sum -= log_gamma_c(arg);
  }
  for (int j = spec.n; j < spec.p(); ++j) {
    std::complex<double> arg = spec.upper[j].coeff - spec.upper[j].weight * s;
    if (gamma_pole(arg)) return LogComplex::zero_value();
    log_sum -= log_gamma_c(arg);
  }
  return LogComplex::from_log(log_sum);
}

LogComplex integrand(const HFunctionSpec& spec, const Argument& z,
                     std::complex<double> s) {
  LogComplex kernel = theta(spec, s);
  if (kernel.zero) return kernel;
  return LogComplex::from_log(kernel.log() + s * z.log());
}

}  // namespace foxh
