#ifndef FOXH_LOGCOMPLEX_HPP
#define FOXH_LOGCOMPLEX_HPP

#include <cmath>
#include <complex>

namespace foxh {

// A nonzero complex number stored as exp(log_modulus + i*phase), plus an
// explicit zero flag for kernel values that vanish at denominator-gamma
// poles. The phase is never reduced mod 2*pi, so long products of gamma
// factors keep one consistent branch; only comparisons fold it back.
struct LogComplex {
  double log_modulus = 0.0;
  double phase = 0.0;
  bool zero = false;

  static LogComplex from_log(std::complex<double> w) {
    return LogComplex{w.real(), w.imag(), false};
  }

  static LogComplex from_value(std::complex<double> v) {
    if (v == std::complex<double>(0.0, 0.0)) return zero_value();
    return LogComplex{std::log(std::abs(v)), std::arg(v), false};
  }

  static LogComplex zero_value() {
    return LogComplex{-std::numeric_limits<double>::infinity(), 0.0, true};
  }

  std::complex<double> log() const { return {log_modulus, phase}; }

  std::complex<double> value() const {
    if (zero) return {0.0, 0.0};
    double r = std::exp(log_modulus);
    return {r * std::cos(phase), r * std::sin(phase)};
  }

  LogComplex& operator*=(const LogComplex& rhs) {
    if (zero || rhs.zero) { *this = zero_value(); return *this; }
    log_modulus += rhs.log_modulus;
    phase += rhs.phase;
    return *this;
  }

  LogComplex& operator/=(const LogComplex& rhs) {
    if (zero) return *this;
    log_modulus -= rhs.log_modulus;
    phase -= rhs.phase;
    return *this;
  }

  friend LogComplex operator*(LogComplex a, const LogComplex& b) { return a *= b; }
  friend LogComplex operator/(LogComplex a, const LogComplex& b) { return a /= b; }
};

// Folds a phase difference into (-pi, pi] for branch-insensitive comparisons.
inline double wrap_phase(double arg) {
  const double two_pi = 6.283185307179586476925286766559;
  double w = std::remainder(arg, two_pi);
  if (w <= -3.14159265358979323846) w += two_pi;
  return w;
}

// |exp(a - b) - 1| with the phase difference folded; a scale-free measure of
// how far two log-space values are from equal.
inline double log_relative_gap(const LogComplex& a, const LogComplex& b) {
  if (a.zero && b.zero) return 0.0;
  if (a.zero || b.zero) return 1.0;
  std::complex<double> d(a.log_modulus - b.log_modulus,
                         wrap_phase(a.phase - b.phase));
  return std::abs(std::exp(d) - 1.0);
}

}  // namespace foxh

#endif
