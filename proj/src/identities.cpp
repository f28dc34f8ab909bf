#include "identities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "error.hpp"
#include "gammakit.hpp"
#include "mellin.hpp"

namespace foxh {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Stay clear of the evaluator's own sector margin.
constexpr double kAdmissibleMargin = 1e-5;

const std::complex<double> kI(0.0, 1.0);

std::complex<double> unit_phase(double angle) {
  return {std::cos(angle), std::sin(angle)};
}

// base with pairs prepended/appended to *both* lists; dm/dn lift the orders
// so prepended pairs land in the numerator index ranges.
HFunctionSpec pad(const HFunctionSpec& base, const std::vector<ParamPair>& front,
                  const std::vector<ParamPair>& back, int dm, int dn) {
  HFunctionSpec padded;
  padded.m = base.m + dm;
  padded.n = base.n + dn;
  padded.upper.reserve(front.size() + base.upper.size() + back.size());
  padded.lower.reserve(front.size() + base.lower.size() + back.size());
  padded.upper.insert(padded.upper.end(), front.begin(), front.end());
  padded.upper.insert(padded.upper.end(), base.upper.begin(), base.upper.end());
  padded.upper.insert(padded.upper.end(), back.begin(), back.end());
  padded.lower.insert(padded.lower.end(), front.begin(), front.end());
  padded.lower.insert(padded.lower.end(), base.lower.begin(), base.lower.end());
  padded.lower.insert(padded.lower.end(), back.begin(), back.end());
  try {
    return validate(std::move(padded));
  } catch (const Error& e) {
    std::ostringstream os;
    os << "padded spec failed validation: " << e.what();
    raise(ErrorCode::spec_validation_failed, os.str());
  }
}

void require_positive(double value, const char* name) {
  if (!(value > 0.0)) {
    std::ostringstream os;
    os << "identity requires " << name << " > 0, got " << value;
    raise(ErrorCode::invalid_params, os.str());
  }
}

void require_finite(const IdentityParams& p) {
  for (double v : {p.alpha, p.beta, p.lambda, p.delta}) {
    if (!std::isfinite(v))
      raise(ErrorCode::invalid_params, "identity parameters must be finite");
  }
  if (!p.base.validated)
    raise(ErrorCode::invalid_params, "identity base spec must be validated");
}

HFunctionSpec main_lhs_spec(const IdentityParams& p) {
  return pad(p.base, {{{p.beta, 0.0}, p.delta}}, {{{p.alpha, 0.0}, p.lambda}},
             1, 1);
}

struct StripInterval {
  double lo = -kInf;
  double hi = kInf;
};

StripInterval common_strip(const IdentityCase& c) {
  StripInterval strip;
  auto fold = [&strip](const WeightedTerm& t) {
    ConvergenceProfile prof = convergence_profile(t.spec);
    strip.lo = std::max(strip.lo, prof.c_min);
    strip.hi = std::min(strip.hi, prof.c_max);
  };
  for (const auto& t : c.lhs) fold(t);
  for (const auto& t : c.rhs) fold(t);
  return strip;
}

}  // namespace

const char* identity_name(IdentityId id) {
  switch (id) {
    case IdentityId::R1981: return "R1981";
    case IdentityId::RMULTI: return "RMULTI";
    case IdentityId::MAIN: return "MAIN";
    case IdentityId::G41: return "G41";
    case IdentityId::G42: return "G42";
    case IdentityId::G43: return "G43";
  }
  return "?";
}

IdentityId identity_from_string(std::string_view name) {
  for (IdentityId id : {IdentityId::R1981, IdentityId::RMULTI, IdentityId::MAIN,
                        IdentityId::G41, IdentityId::G42, IdentityId::G43}) {
    if (name == identity_name(id)) return id;
  }
  raise(ErrorCode::invalid_argument,
        "unknown identity id: " + std::string(name));
}

IdentityCase build_identity(IdentityId id, const IdentityParams& params) {
  require_finite(params);
  IdentityCase c;
  c.id = id;
  c.params = params;

  const double a = params.alpha, b = params.beta;
  const double l = params.lambda, d = params.delta;
  const ParamPair pair_al{{a, 0.0}, l};
  const ParamPair pair_bd{{b, 0.0}, d};
  const ParamPair pair_2al{{2.0 * a, 0.0}, 2.0 * l};
  const ParamPair pair_2bd{{2.0 * b, 0.0}, 2.0 * d};
  const ParamPair pair_ha{{0.5 + a, 0.0}, l};
  const ParamPair pair_hb{{0.5 + b, 0.0}, d};

  switch (id) {
    case IdentityId::MAIN: {
      require_positive(l, "lambda");
      require_positive(d, "delta");
      c.lhs.push_back({kTwoPi * kI, main_lhs_spec(params), 0.0});
      HFunctionSpec rhs_spec = pad(params.base, {pair_2bd}, {}, 1, 1);
      c.rhs.push_back({unit_phase(kPi * (a + b)), rhs_spec, -kPi * (l + d)});
      c.rhs.push_back({unit_phase(kPi * (a - b)), rhs_spec, -kPi * (l - d)});
      c.rhs.push_back({-unit_phase(-kPi * (a - b)), rhs_spec, kPi * (l - d)});
      c.rhs.push_back({-unit_phase(-kPi * (a + b)), rhs_spec, kPi * (l + d)});
      break;
    }
    case IdentityId::R1981: {
      require_positive(l, "lambda");
      c.lhs.push_back({1.0, pad(params.base, {}, {pair_al}, 0, 0), 0.0});
      const std::complex<double> inv_2pii = 1.0 / (kTwoPi * kI);
      c.rhs.push_back({unit_phase(kPi * a) * inv_2pii, params.base, -kPi * l});
      c.rhs.push_back({-unit_phase(-kPi * a) * inv_2pii, params.base, kPi * l});
      break;
    }
    case IdentityId::RMULTI: {
      require_positive(l, "lambda");
      c.lhs.push_back({1.0, pad(params.base, {pair_al}, {}, 1, 1), 0.0});
      HFunctionSpec rhs_spec = pad(params.base, {pair_2al}, {}, 1, 1);
      c.rhs.push_back({unit_phase(kPi * a), rhs_spec, -kPi * l});
      c.rhs.push_back({unit_phase(-kPi * a), rhs_spec, kPi * l});
      break;
    }
    case IdentityId::G41: {
      require_positive(l, "lambda");
      require_positive(d, "delta");
      c.lhs.push_back({1.0, main_lhs_spec(params), 0.0});
      c.rhs.push_back(
          {1.0, pad(params.base, {pair_2bd, pair_ha}, {pair_2al, pair_hb}, 2, 2),
           0.0});
      break;
    }
    case IdentityId::G42: {
      require_positive(l, "lambda");
      c.lhs.push_back({1.0, pad(params.base, {}, {pair_al}, 0, 0), 0.0});
      c.rhs.push_back(
          {1.0 / kTwoPi, pad(params.base, {pair_ha}, {pair_2al}, 1, 1), 0.0});
      break;
    }
    case IdentityId::G43: {
      require_positive(d, "delta");
      c.lhs.push_back({1.0, pad(params.base, {pair_bd}, {}, 1, 1), 0.0});
      c.rhs.push_back(
          {kTwoPi, pad(params.base, {pair_2bd}, {pair_hb}, 1, 1), 0.0});
      c.note =
          "left side orders are (m+1, n+1): the prepended pair joins both "
          "numerator index ranges";
      break;
    }
  }
  return c;
}

AdmissibleSector admissible_sector(const IdentityCase& c) {
  double band = kInf;
  auto fold = [&band](const WeightedTerm& t) {
    ConvergenceProfile prof = convergence_profile(t.spec);
    band = std::min(band, prof.sector_halfwidth - std::abs(t.phase_shift));
  };
  for (const auto& t : c.lhs) fold(t);
  for (const auto& t : c.rhs) fold(t);
  band -= kAdmissibleMargin;
  if (!(band > 0.0)) {
    std::ostringstream os;
    os << "no base phase keeps every term of " << identity_name(c.id)
       << " inside its sector (band = " << band << ")";
    raise(ErrorCode::empty_admissible_region, os.str());
  }
  return {band, 0.0, kInf};
}

VerificationReport verify(const IdentityCase& c,
                          const std::vector<Argument>& samples, double tol,
                          const QuadratureOptions& opts) {
  VerificationReport report;
  report.id = c.id;
  report.tolerance = tol;
  report.note = c.note;
  report.pass = true;

  for (const Argument& z : samples) {
    SampleRecord rec;
    rec.z = z;
    try {
      struct SideSum {
        std::complex<double> value = 0.0;
        double err = 0.0;
      } sides[2];
      const std::vector<WeightedTerm>* lists[2] = {&c.lhs, &c.rhs};
      for (int side = 0; side < 2; ++side) {
        for (std::size_t i = 0; i < lists[side]->size(); ++i) {
          const WeightedTerm& term = (*lists[side])[i];
          EvalResult er =
              evaluate_contour(term.spec, z.rotated(term.phase_shift), opts);
          sides[side].value += term.prefactor * er.value;
          sides[side].err += std::abs(term.prefactor) * er.error_estimate;
          TermRecord tr;
          tr.side = side;
          tr.index = static_cast<int>(i);
          tr.prefactor = term.prefactor;
          tr.phase_shift = term.phase_shift;
          tr.value = er.value;
          tr.error_estimate = er.error_estimate;
          tr.nodes = er.nodes_used;
          rec.terms.push_back(tr);
        }
      }
      rec.lhs = sides[0].value;
      rec.rhs = sides[1].value;
      rec.lhs_error_estimate = sides[0].err;
      rec.rhs_error_estimate = sides[1].err;
      rec.abs_residual = std::abs(rec.lhs - rec.rhs);
      rec.rel_residual =
          rec.abs_residual / std::max(std::abs(rec.lhs), 1e-300);
      if (!(rec.rel_residual <= tol)) report.pass = false;
    } catch (const Error& e) {
      rec.ok = false;
      rec.error = std::string(error_code_name(e.code())) + ": " + e.what();
      report.pass = false;
    }
    report.samples.push_back(std::move(rec));
  }
  return report;
}

std::complex<double> integrand_residual(const IdentityParams& params,
                                        const Argument& z,
                                        std::complex<double> s,
                                        double* rel_out) {
  require_finite(params);
  require_positive(params.lambda, "lambda");
  require_positive(params.delta, "delta");
  const double a = params.alpha, b = params.beta;
  const double l = params.lambda, d = params.delta;

  const std::complex<double> g1_arg = 2.0 * b - 2.0 * d * s;
  const std::complex<double> g2_arg = 1.0 - 2.0 * b + 2.0 * d * s;
  if (gamma_pole(g1_arg) || gamma_pole(g2_arg))
    raise(ErrorCode::pole_at_s,
          "s hits a pole of the doubled-argument gamma factors");

  HFunctionSpec lhs_spec = main_lhs_spec(params);
  LogComplex lhs_kernel;
  LogComplex base_kernel;
  try {
    lhs_kernel = integrand(lhs_spec, z, s);
    base_kernel = theta(params.base, s);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::pole_of_numerator ||
        e.code() == ErrorCode::pole_at_non_positive_integer)
      raise(ErrorCode::pole_at_s, e.what());
    throw;
  }

  // A = 2 pi i * theta_lhs(s) z^s
  std::complex<double> log_a;
  if (!lhs_kernel.zero)
    log_a = lhs_kernel.log() + std::complex<double>(std::log(kTwoPi), kPi / 2.0);

  // B = theta(s) z^s Gamma(2b-2ds) Gamma(1-2b+2ds) * (four exponentials)
  std::complex<double> log_b_scale;
  if (!base_kernel.zero)
    log_b_scale = base_kernel.log() + s * z.log() + log_gamma_c(g1_arg) +
                  log_gamma_c(g2_arg);
  const std::complex<double> w_outer = kI * kPi * (a + b - (l + d) * s);
  const std::complex<double> w_inner = kI * kPi * (a - b - (l - d) * s);
  const std::complex<double> four_exp = std::exp(w_outer) + std::exp(w_inner) -
                                        std::exp(-w_inner) - std::exp(-w_outer);
  const double exp_scale = std::abs(std::exp(w_outer)) +
                           std::abs(std::exp(w_inner)) +
                           std::abs(std::exp(-w_inner)) +
                           std::abs(std::exp(-w_outer));

  if (lhs_kernel.zero && base_kernel.zero) {
    if (rel_out) *rel_out = 0.0;
    return 0.0;
  }
  if (lhs_kernel.zero) {
    // A vanishes exactly where the four-exponential factor does; treat the
    // rounding remnant of that cancellation as zero.
    double rel = (std::abs(four_exp) <= 1e-10 * exp_scale) ? 0.0 : 1.0;
    if (rel_out) *rel_out = rel;
    return 0.0;
  }

  double scale = log_a.real();
  if (!base_kernel.zero && std::abs(four_exp) > 0.0)
    scale = std::max(scale, log_b_scale.real() + std::log(std::abs(four_exp)));
  std::complex<double> a_val = std::exp(log_a - scale);
  std::complex<double> b_val =
      base_kernel.zero ? 0.0 : std::exp(log_b_scale - scale) * four_exp;
  double denom = std::max(std::abs(a_val), std::abs(b_val));
  double rel = denom > 0.0 ? std::abs(a_val - b_val) / denom : 0.0;
  if (rel_out) *rel_out = rel;
  if (scale > 700.0)
    raise(ErrorCode::overflow, "integrand residual exceeds double range");
  return (a_val - b_val) * std::exp(scale);
}

double theta_equality_residual(const IdentityCase& c, std::complex<double> s) {
  if (c.id != IdentityId::G41 && c.id != IdentityId::G42 &&
      c.id != IdentityId::G43)
    raise(ErrorCode::unsupported,
          "kernel-level theta equality applies to G41, G42, G43 only");
  LogComplex lhs = theta(c.lhs[0].spec, s);
  LogComplex rhs = theta(c.rhs[0].spec, s);
  if (lhs.zero && rhs.zero) return 0.0;
  if (lhs.zero || rhs.zero) return 1.0;
  double log_const = std::log(c.rhs[0].prefactor.real());
  std::complex<double> diff = lhs.log() - rhs.log() - log_const;
  return std::abs(std::exp(std::complex<double>(
             diff.real(), wrap_phase(diff.imag()))) - 1.0);
}

double kernel_check_worst(const IdentityCase& c, const Argument& z, int grid_n,
                          double im_max) {
  if (c.id != IdentityId::MAIN && c.id != IdentityId::G41 &&
      c.id != IdentityId::G42 && c.id != IdentityId::G43)
    raise(ErrorCode::unsupported,
          std::string("no kernel-level check for ") + identity_name(c.id));
  StripInterval strip = common_strip(c);
  double lo = strip.lo, hi = strip.hi;
  if (std::isinf(lo)) lo = hi - 3.0;
  if (std::isinf(hi)) hi = lo + 3.0;
  double width = hi - lo;
  double re_lo = lo + width / 3.0;
  double re_hi = hi - width / 3.0;

  double worst = 0.0;
  for (int i = 0; i < grid_n; ++i) {
    double re = (grid_n == 1) ? 0.5 * (re_lo + re_hi)
                              : re_lo + (re_hi - re_lo) * i / (grid_n - 1.0);
    for (int j = 0; j < grid_n; ++j) {
      double im = (grid_n == 1) ? 0.0
                                : -im_max + 2.0 * im_max * j / (grid_n - 1.0);
      std::complex<double> s(re, im);
      double rel = 0.0;
      if (c.id == IdentityId::MAIN) {
        integrand_residual(c.params, z, s, &rel);
      } else {
        rel = theta_equality_residual(c, s);
      }
      worst = std::max(worst, rel);
    }
  }
  return worst;
}

}  // namespace foxh
