#include "identities.hpp"

#include <cmath>
#include <functional>

#include "doctest.h"
#include "error.hpp"
#include "logcomplex.hpp"
#include "rng.hpp"

using foxh::Argument;
using foxh::ErrorCode;
using foxh::HFunctionSpec;
using foxh::IdentityCase;
using foxh::IdentityId;
using foxh::IdentityParams;
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

const HFunctionSpec& base11() {
  static const HFunctionSpec s =
      make(1, 1, {{{0.0, 0.0}, 1.0}}, {{{0.0, 0.0}, 1.0}});
  return s;
}

const HFunctionSpec& base10() {
  static const HFunctionSpec s = make(1, 0, {}, {{{0.0, 0.0}, 1.0}});
  return s;
}

IdentityParams params_of(double alpha, double beta, double lambda, double delta,
                         const HFunctionSpec& base) {
  IdentityParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.lambda = lambda;
  p.delta = delta;
  p.base = base;
  return p;
}

bool throws_code(ErrorCode want, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const foxh::Error& e) {
    return e.code() == want;
  }
  return false;
}

}  // namespace

TEST_CASE("identity ids round-trip and reject unknowns") {
  for (const char* name : {"R1981", "RMULTI", "MAIN", "G41", "G42", "G43"}) {
    CHECK(foxh::identity_name(foxh::identity_from_string(name)) ==
          doctest::String(name));
  }
  CHECK(throws_code(ErrorCode::invalid_argument,
                    [] { foxh::identity_from_string("MAINX"); }));
}

TEST_CASE("MAIN case carries the four-term structure") {
  IdentityCase c = foxh::build_identity(
      IdentityId::MAIN, params_of(0.3, 0.2, 0.5, 0.4, base11()));
  REQUIRE(c.lhs.size() == 1);
  REQUIRE(c.rhs.size() == 4);
  CHECK(c.lhs[0].phase_shift == 0.0);

  // lhs: 2 pi i prefactor, (0.2,0.4) prepended and (0.3,0.5) appended
  CHECK(std::abs(c.lhs[0].prefactor - complex<double>(0.0, 2.0 * kPi)) < 1e-15);
  const HFunctionSpec& ls = c.lhs[0].spec;
  CHECK(ls.m == 2);
  CHECK(ls.n == 2);
  REQUIRE(ls.p() == 3);
  REQUIRE(ls.q() == 3);
  CHECK(ls.upper.front().coeff.real() == doctest::Approx(0.2));
  CHECK(ls.upper.front().weight == doctest::Approx(0.4));
  CHECK(ls.upper.back().coeff.real() == doctest::Approx(0.3));
  CHECK(ls.upper.back().weight == doctest::Approx(0.5));
  CHECK(ls.lower.front().coeff.real() == doctest::Approx(0.2));
  CHECK(ls.lower.back().weight == doctest::Approx(0.5));

  const double pref_phases[4] = {kPi * 0.5, kPi * 0.1, kPi - kPi * 0.1,
                                 kPi - kPi * 0.5};
  const double shifts[4] = {-0.9 * kPi, -0.1 * kPi, 0.1 * kPi, 0.9 * kPi};
  for (int i = 0; i < 4; ++i) {
    CHECK(std::abs(c.rhs[i].prefactor) == doctest::Approx(1.0));
    CHECK(foxh::wrap_phase(std::arg(c.rhs[i].prefactor) - pref_phases[i]) ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(c.rhs[i].phase_shift == doctest::Approx(shifts[i]));
    CHECK(c.rhs[i].spec.upper.front().coeff.real() == doctest::Approx(0.4));
    CHECK(c.rhs[i].spec.upper.front().weight == doctest::Approx(0.8));
    CHECK(c.rhs[i].spec.m == 2);
    CHECK(c.rhs[i].spec.n == 2);
  }
}

TEST_CASE("R1981 case carries two opposite-sign terms with 1/(2 pi i)") {
  IdentityCase c = foxh::build_identity(
      IdentityId::R1981, params_of(0.35, 0.0, 0.3, 0.0, base11()));
  REQUIRE(c.lhs.size() == 1);
  REQUIRE(c.rhs.size() == 2);
  // lhs appends (alpha, lambda) without raising the orders
  CHECK(c.lhs[0].spec.m == 1);
  CHECK(c.lhs[0].spec.n == 1);
  CHECK(c.lhs[0].spec.p() == 2);
  const complex<double> i2pi(0.0, 2.0 * kPi);
  complex<double> want0 = std::exp(complex<double>(0.0, kPi * 0.35)) / i2pi;
  complex<double> want1 = -std::exp(complex<double>(0.0, -kPi * 0.35)) / i2pi;
  CHECK(std::abs(c.rhs[0].prefactor - want0) < 1e-15);
  CHECK(std::abs(c.rhs[1].prefactor - want1) < 1e-15);
  CHECK(c.rhs[0].phase_shift == doctest::Approx(-kPi * 0.3));
  CHECK(c.rhs[1].phase_shift == doctest::Approx(kPi * 0.3));
  // rhs sits on the unpadded base
  CHECK(c.rhs[0].spec.p() == base11().p());
  CHECK(c.rhs[0].spec.q() == base11().q());
}

TEST_CASE("G41 list layout degenerates as expected for equal pairs") {
  IdentityCase c = foxh::build_identity(
      IdentityId::G41, params_of(0.2, 0.2, 0.3, 0.3, base11()));
  const auto& up = c.rhs[0].spec.upper;
  REQUIRE(up.size() == 5);
  CHECK(up[0].coeff.real() == doctest::Approx(0.4));
  CHECK(up[0].weight == doctest::Approx(0.6));
  CHECK(up[1].coeff.real() == doctest::Approx(0.7));
  CHECK(up[1].weight == doctest::Approx(0.3));
  CHECK(up[3].coeff.real() == doctest::Approx(up[0].coeff.real()));
  CHECK(up[3].weight == doctest::Approx(up[0].weight));
  CHECK(up[4].coeff.real() == doctest::Approx(up[1].coeff.real()));
  CHECK(c.rhs[0].spec.m == 3);
  CHECK(c.rhs[0].spec.n == 3);
}

TEST_CASE("builders reject unusable parameters") {
  CHECK(throws_code(ErrorCode::invalid_params, [] {
    foxh::build_identity(IdentityId::MAIN, params_of(0.3, 0.2, 0.5, 0.0, base11()));
  }));
  CHECK(throws_code(ErrorCode::invalid_params, [] {
    foxh::build_identity(IdentityId::G43, params_of(0.0, 0.3, 0.0, 0.0, base11()));
  }));
  // rhs padding destroys the contour strip: (beta - 1/2)/delta = 1.5 > 0
  CHECK(throws_code(ErrorCode::spec_validation_failed, [] {
    foxh::build_identity(IdentityId::MAIN, params_of(0.3, 0.8, 0.5, 0.2, base11()));
  }));
}

TEST_CASE("admissible sector arithmetic") {
  IdentityCase wide = foxh::build_identity(
      IdentityId::MAIN, params_of(0.3, 0.2, 0.1, 0.1, base11()));
  foxh::AdmissibleSector sector = foxh::admissible_sector(wide);
  CHECK(sector.max_phase == doctest::Approx(kPi).epsilon(1e-4));
  CHECK(std::isinf(sector.max_modulus));

  // lhs sector collapses: a_star + 2 delta - 2 lambda <= 0
  IdentityCase collapsed = foxh::build_identity(
      IdentityId::MAIN, params_of(0.3, 0.2, 1.5, 0.2, base11()));
  CHECK(throws_code(ErrorCode::empty_admissible_region,
                    [&] { foxh::admissible_sector(collapsed); }));

  IdentityCase r = foxh::build_identity(
      IdentityId::R1981, params_of(0.3, 0.0, 0.25, 0.0, base10()));
  sector = foxh::admissible_sector(r);
  CHECK(sector.max_phase == doctest::Approx(0.25 * kPi).epsilon(1e-4));
}

TEST_CASE("MAIN verifies at quadrature level") {
  IdentityCase c = foxh::build_identity(
      IdentityId::MAIN, params_of(0.3, 0.2, 0.5, 0.4, base11()));
  foxh::VerificationReport rep =
      foxh::verify(c, {{0.4, 0.0}, {0.8, 0.0}}, 1e-6, {});
  CHECK(rep.pass);
  REQUIRE(rep.samples.size() == 2);
  for (const auto& s : rep.samples) {
    CHECK(s.ok);
    CHECK(s.rel_residual <= 1e-6);
    CHECK(s.terms.size() == 5);
  }
}

TEST_CASE("single-term sides scale exactly by the prefactor") {
  IdentityCase c = foxh::build_identity(
      IdentityId::R1981, params_of(0.4, 0.0, 0.3, 0.0, base11()));
  foxh::VerificationReport rep = foxh::verify(c, {{0.5, 0.0}}, 1e-6, {});
  REQUIRE(rep.pass);
  const auto& rec = rep.samples[0];
  CHECK(rec.lhs == rec.terms[0].prefactor * rec.terms[0].value);
}

TEST_CASE("prior and concluding identities verify at quadrature level") {
  struct Row {
    IdentityId id;
    IdentityParams p;
  };
  const Row rows[] = {
      {IdentityId::R1981, params_of(0.4, 0.0, 0.3, 0.0, base11())},
      {IdentityId::RMULTI, params_of(0.3, 0.0, 0.4, 0.0, base11())},
      {IdentityId::G41, params_of(0.3, 0.2, 0.5, 0.4, base11())},
      {IdentityId::G42, params_of(0.3, 0.0, 0.5, 0.0, base11())},
      {IdentityId::G43, params_of(0.0, 0.3, 0.0, 0.5, base11())},
  };
  const size_t expected_rhs[] = {2, 2, 1, 1, 1};
  for (size_t i = 0; i < std::size(rows); ++i) {
    IdentityCase c = foxh::build_identity(rows[i].id, rows[i].p);
    INFO(foxh::identity_name(rows[i].id));
    REQUIRE(c.lhs.size() == 1);
    CHECK(c.rhs.size() == expected_rhs[i]);
    for (const auto& t : c.lhs) CHECK(t.phase_shift == 0.0);
    foxh::VerificationReport rep = foxh::verify(c, {{0.6, 0.1}}, 1e-6, {});
    CHECK(rep.pass);
  }
}

TEST_CASE("corrupted prefactor makes verification fail loudly") {
  IdentityCase c = foxh::build_identity(
      IdentityId::MAIN, params_of(0.3, 0.2, 0.5, 0.4, base11()));
  c.rhs[2].prefactor = -c.rhs[2].prefactor;
  foxh::VerificationReport rep = foxh::verify(c, {{0.6, 0.0}}, 1e-6, {});
  CHECK_FALSE(rep.pass);
  CHECK(rep.samples[0].rel_residual > 1e-2);
}

TEST_CASE("empty sample list passes vacuously") {
  IdentityCase c = foxh::build_identity(
      IdentityId::MAIN, params_of(0.3, 0.2, 0.5, 0.4, base11()));
  foxh::VerificationReport rep = foxh::verify(c, {}, 1e-6, {});
  CHECK(rep.pass);
  CHECK(rep.samples.empty());
}

TEST_CASE("integrand residual certifies the derivation pointwise") {
  IdentityParams p = params_of(0.3, 0.2, 0.5, 0.4, base11());
  double rel = 1.0;
  foxh::integrand_residual(p, {0.7, 0.0}, {-0.5, 2.0}, &rel);
  CHECK(rel <= 1e-10);

  // equal pairs: the inner exponentials cancel exactly
  IdentityParams eq = params_of(0.35, 0.35, 0.45, 0.45, base11());
  for (complex<double> s : {complex<double>(-0.6, 0.0),
                            complex<double>(-0.4, 3.0),
                            complex<double>(-0.7, -8.0)}) {
    foxh::integrand_residual(eq, {0.7, 0.0}, s, &rel);
    CHECK(rel <= 1e-10);
  }
}

TEST_CASE("integrand residual rejects gamma poles in s") {
  IdentityParams p = params_of(0.3, 0.2, 0.5, 0.4, base11());
  // 2 beta - 2 delta s = 0 at s = 0.5
  CHECK(throws_code(ErrorCode::pole_at_s, [&] {
    foxh::integrand_residual(p, {0.7, 0.0}, {0.5, 0.0});
  }));
}

TEST_CASE("integrand residual stays small over seeded parameter draws") {
  foxh::SplitMix64 rng(0x2718'2818ull);
  int draws = 0;
  double worst = 0.0;
  while (draws < 3) {
    IdentityParams p =
        params_of(rng.uniform(0.05, 0.95), rng.uniform(0.05, 0.95),
                  rng.uniform(0.2, 0.8), rng.uniform(0.2, 0.8), base11());
    IdentityCase c;
    try {
      c = foxh::build_identity(IdentityId::MAIN, p);
    } catch (const foxh::Error&) {
      continue;
    }
    worst = std::max(worst, foxh::kernel_check_worst(c, {0.7, 0.0}, 5, 10.0));
    ++draws;
  }
  CHECK(worst <= 1e-10);
}

TEST_CASE("G41-G43 kernels coincide pointwise including constants") {
  const IdentityCase cases[] = {
      foxh::build_identity(IdentityId::G41,
                           params_of(0.3, 0.2, 0.5, 0.4, base11())),
      foxh::build_identity(IdentityId::G42,
                           params_of(0.3, 0.0, 0.5, 0.0, base11())),
      foxh::build_identity(IdentityId::G43,
                           params_of(0.0, 0.3, 0.0, 0.5, base11())),
  };
  for (const IdentityCase& c : cases) {
    INFO(foxh::identity_name(c.id));
    CHECK(foxh::kernel_check_worst(c, {0.7, 0.0}, 5, 10.0) <= 1e-11);
  }
  CHECK(cases[2].note.find("m+1") != std::string::npos);
}

TEST_CASE("kernel checks are undefined for the prior identities") {
  IdentityCase c = foxh::build_identity(
      IdentityId::R1981, params_of(0.4, 0.0, 0.3, 0.0, base11()));
  CHECK(throws_code(ErrorCode::unsupported,
                    [&] { foxh::kernel_check_worst(c, {0.7, 0.0}, 3, 5.0); }));
}
