#include "mellin.hpp"

#include <cmath>
#include <functional>

#include "catalog.hpp"
#include "doctest.h"
#include "error.hpp"
#include "gammakit.hpp"

using foxh::Argument;
using foxh::ErrorCode;
using foxh::HFunctionSpec;
using foxh::LogComplex;
using std::complex;

namespace {

constexpr double kPi = 3.14159265358979323846;

HFunctionSpec make(int m, int n, std::vector<foxh::ParamPair> upper,
                   std::vector<foxh::ParamPair> lower) {
  HFunctionSpec s;
  s.m = m;
  s.n = n;
  s.upper = std::move(upper);
  s.lower = std::move(lower);
  return foxh::validate(std::move(s));
}

const HFunctionSpec& exp_spec() {
  static const HFunctionSpec s = make(1, 0, {}, {{{0.0, 0.0}, 1.0}});
  return s;
}

const HFunctionSpec& power_spec() {
  static const HFunctionSpec s =
      make(1, 1, {{{0.0, 0.0}, 1.0}}, {{{0.0, 0.0}, 1.0}});
  return s;
}

}  // namespace

TEST_CASE("theta at classic half-integer points") {
  complex<double> v = foxh::theta(exp_spec(), {-0.5, 0.0}).value();
  CHECK(std::abs(v - std::sqrt(kPi)) < 1e-13);

  v = foxh::theta(exp_spec(), {0.5, 0.0}).value();
  CHECK(std::abs(v - (-2.0 * std::sqrt(kPi))) < 1e-13);

  v = foxh::theta(power_spec(), {0.5, 0.0}).value();
  CHECK(std::abs(v - (-kPi)) < 1e-12);
}

TEST_CASE("theta errors on numerator poles") {
  auto throws_pole = [](const std::function<void()>& fn) {
    try {
      fn();
    } catch (const foxh::Error& e) {
      return e.code() == ErrorCode::pole_of_numerator;
    }
    return false;
  };
  CHECK(throws_pole([] { foxh::theta(exp_spec(), {0.0, 0.0}); }));
  CHECK(throws_pole([] { foxh::theta(exp_spec(), {3.0, 0.0}); }));
  CHECK(throws_pole([] { foxh::theta(power_spec(), {-1.0, 0.0}); }));
}

TEST_CASE("theta vanishes at denominator poles") {
  // H^{1,0}_{1,1}: the upper pair sits in the denominator range
  HFunctionSpec s = make(1, 0, {{{0.4, 0.0}, 1.0}}, {{{0.0, 0.0}, 1.0}});
  LogComplex v = foxh::theta(s, {0.4, 0.0});
  CHECK(v.zero);
  CHECK(v.value() == complex<double>(0.0, 0.0));
}

TEST_CASE("integrand with unit argument reduces to theta") {
  Argument one{1.0, 0.0};
  complex<double> s(0.3, 1.2);
  LogComplex a = foxh::integrand(power_spec(), one, s);
  LogComplex b = foxh::theta(power_spec(), s);
  CHECK(a.log_modulus == b.log_modulus);
  CHECK(a.phase == b.phase);

  foxh::KernelPoint pt = foxh::sample_kernel(power_spec(), one, s);
  CHECK(pt.s == s);
  CHECK(pt.value.log_modulus == a.log_modulus);
}

TEST_CASE("integrand at z=(e,0), s=-1/2") {
  Argument z{std::exp(1.0), 0.0};
  complex<double> v = foxh::integrand(exp_spec(), z, {-0.5, 0.0}).value();
  CHECK(std::abs(v - std::sqrt(kPi) * std::exp(-0.5)) < 1e-13);
}

TEST_CASE("integrand phase enters as real damping for s = i") {
  Argument z{1.0, kPi / 4.0};
  complex<double> theta_i = foxh::theta(exp_spec(), {0.0, 1.0}).value();
  complex<double> v = foxh::integrand(exp_spec(), z, {0.0, 1.0}).value();
  complex<double> expected = theta_i * std::exp(-kPi / 4.0);
  CHECK(std::abs(v - expected) / std::abs(expected) < 1e-13);
}

TEST_CASE("conjugate symmetry for real specs at phase zero") {
  Argument z{0.7, 0.0};
  for (const auto& entry : foxh::catalog()) {
    bool real_spec = true;
    for (const auto& pr : entry.spec.upper)
      if (pr.coeff.imag() != 0.0) real_spec = false;
    for (const auto& pr : entry.spec.lower)
      if (pr.coeff.imag() != 0.0) real_spec = false;
    if (!real_spec) continue;

    foxh::ConvergenceProfile prof = foxh::convergence_profile(entry.spec);
    double c = std::isinf(prof.c_min) ? prof.c_max - 0.4
                                      : 0.5 * (prof.c_min + prof.c_max);
    for (double t : {0.7, 2.3, 9.1}) {
      complex<double> s(c, t);
      complex<double> up = foxh::integrand(entry.spec, z, s).value();
      complex<double> down = foxh::integrand(entry.spec, z, std::conj(s)).value();
      CHECK(std::abs(down - std::conj(up)) <= 1e-12 * std::abs(up));
    }
  }
}

TEST_CASE("integrand envelope decays along the contour") {
  Argument z{0.7, 0.0};
  for (const auto& entry : foxh::catalog()) {
    foxh::ConvergenceProfile prof = foxh::convergence_profile(entry.spec);
    double c = std::isinf(prof.c_min) ? prof.c_max - 0.4
                                      : 0.5 * (prof.c_min + prof.c_max);
    for (double sign : {1.0, -1.0}) {
      double prev = 0.0;
      bool first = true;
      double at10 = 0.0, at60 = 0.0;
      for (double t = 10.0; t <= 60.0; t += 5.0) {
        LogComplex v = foxh::integrand(entry.spec, z, {c, sign * t});
        REQUIRE_FALSE(v.zero);
        if (first) {
          at10 = v.log_modulus;
          first = false;
        } else {
          CHECK(v.log_modulus <= prev + std::log(2.0));
        }
        prev = v.log_modulus;
        at60 = v.log_modulus;
      }
      // overall decay at no less than half the sector rate
      CHECK(at60 < at10 - 0.5 * prof.sector_halfwidth * 50.0);
    }
  }
}

TEST_CASE("prepending a numerator pair adds exactly two log-gamma factors") {
  const HFunctionSpec& base = power_spec();
  complex<double> gamma_c(0.35, 0.0);
  double w = 0.6;
  HFunctionSpec padded = base;
  padded.upper.insert(padded.upper.begin(), {gamma_c, w});
  padded.lower.insert(padded.lower.begin(), {gamma_c, w});
  padded.m += 1;
  padded.n += 1;
  padded.validated = false;
  padded = foxh::validate(std::move(padded));

  for (complex<double> s : {complex<double>(-0.3, 0.0), complex<double>(-0.5, 2.0),
                            complex<double>(-0.1, -7.5)}) {
    complex<double> diff =
        foxh::theta(padded, s).log() - foxh::theta(base, s).log();
    complex<double> expected = foxh::log_gamma_c(gamma_c - w * s) +
                               foxh::log_gamma_c(1.0 - gamma_c + w * s);
    CHECK(std::abs(diff - expected) <= 1e-12 * std::max(1.0, std::abs(expected)));
  }
}
