#include "foxh.h"

#include <algorithm>
#include <complex>
#include <cstring>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "error.hpp"
#include "evaluator.hpp"
#include "gammacheck.hpp"
#include "gammakit.hpp"
#include "hspec.hpp"
#include "identities.hpp"
#include "jsonio.hpp"
#include "mellin.hpp"

struct foxh_spec {
  foxh::HFunctionSpec impl;
};

struct foxh_identity {
  foxh::IdentityCase impl;
};

namespace {

thread_local std::string g_last_error;

foxh_status map_code(foxh::ErrorCode code) {
  using foxh::ErrorCode;
  switch (code) {
    case ErrorCode::index_out_of_range: return FOXH_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::non_positive_weight: return FOXH_ERR_NON_POSITIVE_WEIGHT;
    case ErrorCode::no_separating_contour: return FOXH_ERR_NO_SEPARATING_CONTOUR;
    case ErrorCode::pole_at_non_positive_integer:
      return FOXH_ERR_POLE_AT_NON_POSITIVE_INTEGER;
    case ErrorCode::pole_at_integer: return FOXH_ERR_POLE_AT_INTEGER;
    case ErrorCode::pole_at_half_integer: return FOXH_ERR_POLE_AT_HALF_INTEGER;
    case ErrorCode::pole_in_factor: return FOXH_ERR_POLE_IN_FACTOR;
    case ErrorCode::pole_of_numerator: return FOXH_ERR_POLE_OF_NUMERATOR;
    case ErrorCode::outside_convergence_sector:
      return FOXH_ERR_OUTSIDE_CONVERGENCE_SECTOR;
    case ErrorCode::budget_exceeded: return FOXH_ERR_BUDGET_EXCEEDED;
    case ErrorCode::logarithmic_case: return FOXH_ERR_LOGARITHMIC_CASE;
    case ErrorCode::series_diverged: return FOXH_ERR_SERIES_DIVERGED;
    case ErrorCode::overflow: return FOXH_ERR_OVERFLOW;
    case ErrorCode::invalid_params: return FOXH_ERR_INVALID_PARAMS;
    case ErrorCode::spec_validation_failed:
      return FOXH_ERR_SPEC_VALIDATION_FAILED;
    case ErrorCode::empty_admissible_region:
      return FOXH_ERR_EMPTY_ADMISSIBLE_REGION;
    case ErrorCode::pole_at_s: return FOXH_ERR_POLE_AT_S;
    case ErrorCode::parse_error: return FOXH_ERR_PARSE;
    case ErrorCode::invalid_argument: return FOXH_ERR_INVALID_ARGUMENT;
    case ErrorCode::unsupported: return FOXH_ERR_UNSUPPORTED;
  }
  return FOXH_ERR_INTERNAL;
}

template <typename Fn>
foxh_status guarded(Fn&& fn) {
  try {
    fn();
    return FOXH_OK;
  } catch (const foxh::Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FOXH_ERR_INTERNAL;
  }
}

foxh_status fail_null(const char* what) {
  g_last_error = std::string(what) + " must not be NULL";
  return FOXH_ERR_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

foxh::QuadratureOptions to_options(const foxh_options* opts) {
  foxh::QuadratureOptions q;
  if (opts) {
    q.rel_tol = opts->rel_tol;
    q.max_nodes = opts->max_nodes;
    q.tail_safety = opts->tail_safety;
  }
  return q;
}

void fill_result(const foxh::EvalResult& r, foxh_result* out) {
  out->value_re = r.value.real();
  out->value_im = r.value.imag();
  out->error_estimate = r.error_estimate;
  out->method = static_cast<int>(r.method);
  out->nodes_used = r.nodes_used;
}

}  // namespace

extern "C" {

const char* foxh_version(void) { return "0.1.0"; }

const char* foxh_last_error(void) { return g_last_error.c_str(); }

const char* foxh_status_name(foxh_status status) {
  switch (status) {
    case FOXH_OK: return "OK";
    case FOXH_ERR_INDEX_OUT_OF_RANGE: return "IndexOutOfRange";
    case FOXH_ERR_NON_POSITIVE_WEIGHT: return "NonPositiveWeight";
    case FOXH_ERR_NO_SEPARATING_CONTOUR: return "NoSeparatingContour";
    case FOXH_ERR_POLE_AT_NON_POSITIVE_INTEGER:
      return "PoleAtNonPositiveInteger";
    case FOXH_ERR_POLE_AT_INTEGER: return "PoleAtInteger";
    case FOXH_ERR_POLE_AT_HALF_INTEGER: return "PoleAtHalfInteger";
    case FOXH_ERR_POLE_IN_FACTOR: return "PoleInFactor";
    case FOXH_ERR_POLE_OF_NUMERATOR: return "PoleOfNumerator";
    case FOXH_ERR_OUTSIDE_CONVERGENCE_SECTOR: return "OutsideConvergenceSector";
    case FOXH_ERR_BUDGET_EXCEEDED: return "BudgetExceeded";
    case FOXH_ERR_LOGARITHMIC_CASE: return "LogarithmicCase";
    case FOXH_ERR_SERIES_DIVERGED: return "SeriesDiverged";
    case FOXH_ERR_OVERFLOW: return "Overflow";
    case FOXH_ERR_INVALID_PARAMS: return "InvalidParams";
    case FOXH_ERR_SPEC_VALIDATION_FAILED: return "SpecValidationFailed";
    case FOXH_ERR_EMPTY_ADMISSIBLE_REGION: return "EmptyAdmissibleRegion";
    case FOXH_ERR_POLE_AT_S: return "PoleAtS";
    case FOXH_ERR_PARSE: return "ParseError";
    case FOXH_ERR_INVALID_ARGUMENT: return "InvalidArgument";
    case FOXH_ERR_UNSUPPORTED: return "Unsupported";
    case FOXH_ERR_INTERNAL: return "InternalError";
  }
  return "UnknownStatus";
}

void foxh_string_free(char* s) { delete[] s; }

void foxh_options_default(foxh_options* opts) {
  if (!opts) return;
  foxh::QuadratureOptions q;
  opts->rel_tol = q.rel_tol;
  opts->max_nodes = q.max_nodes;
  opts->tail_safety = q.tail_safety;
}

foxh_status foxh_spec_create(int m, int n, const double* upper, size_t p,
                             const double* lower, size_t q, foxh_spec** out) {
  if (!out) return fail_null("out");
  if (p > 0 && !upper) return fail_null("upper");
  if (q > 0 && !lower) return fail_null("lower");
  *out = nullptr;
  return guarded([&] {
    foxh::HFunctionSpec spec;
    spec.m = m;
    spec.n = n;
    for (size_t j = 0; j < p; ++j)
      spec.upper.push_back({{upper[3 * j], upper[3 * j + 1]}, upper[3 * j + 2]});
    for (size_t j = 0; j < q; ++j)
      spec.lower.push_back({{lower[3 * j], lower[3 * j + 1]}, lower[3 * j + 2]});
    *out = new foxh_spec{foxh::validate(std::move(spec))};
  });
}

foxh_status foxh_spec_from_json(const char* json, foxh_spec** out) {
  if (!json) return fail_null("json");
  if (!out) return fail_null("out");
  *out = nullptr;
  return guarded([&] { *out = new foxh_spec{foxh::spec_from_json(json)}; });
}

foxh_status foxh_spec_to_json(const foxh_spec* spec, char** json_out) {
  if (!spec) return fail_null("spec");
  if (!json_out) return fail_null("json_out");
  return guarded([&] { *json_out = dup_string(foxh::spec_to_json(spec->impl)); });
}

void foxh_spec_free(foxh_spec* spec) { delete spec; }

foxh_status foxh_spec_profile(const foxh_spec* spec, double* a_star,
                              double* c_min, double* c_max,
                              double* sector_halfwidth, int* simple_poles) {
  if (!spec) return fail_null("spec");
  return guarded([&] {
    foxh::ConvergenceProfile prof = foxh::convergence_profile(spec->impl);
    if (a_star) *a_star = prof.a_star;
    if (c_min) *c_min = prof.c_min;
    if (c_max) *c_max = prof.c_max;
    if (sector_halfwidth) *sector_halfwidth = prof.sector_halfwidth;
    if (simple_poles) *simple_poles = spec->impl.simple_poles ? 1 : 0;
  });
}

foxh_status foxh_spec_poles(const foxh_spec* spec, int count, double* left,
                            size_t* left_count, double* right,
                            size_t* right_count) {
  if (!spec) return fail_null("spec");
  return guarded([&] {
    foxh::PoleSets sets = foxh::pole_sets(spec->impl, count);
    if (left_count) *left_count = sets.left.size();
    if (right_count) *right_count = sets.right.size();
    if (left)
      for (size_t i = 0; i < sets.left.size(); ++i) {
        left[2 * i] = sets.left[i].real();
        left[2 * i + 1] = sets.left[i].imag();
      }
    if (right)
      for (size_t i = 0; i < sets.right.size(); ++i) {
        right[2 * i] = sets.right[i].real();
        right[2 * i + 1] = sets.right[i].imag();
      }
  });
}

foxh_status foxh_log_gamma(double z_re, double z_im, double* log_modulus,
                           double* phase) {
  return guarded([&] {
    foxh::LogComplex v = foxh::log_gamma({z_re, z_im});
    if (log_modulus) *log_modulus = v.log_modulus;
    if (phase) *phase = v.phase;
  });
}

foxh_status foxh_reflection_sin(double z_re, double z_im, double* out_re,
                                double* out_im) {
  return guarded([&] {
    std::complex<double> v = foxh::reflection_sin({z_re, z_im});
    if (out_re) *out_re = v.real();
    if (out_im) *out_im = v.imag();
  });
}

foxh_status foxh_reflection_cos(double z_re, double z_im, double* out_re,
                                double* out_im) {
  return guarded([&] {
    std::complex<double> v = foxh::reflection_cos({z_re, z_im});
    if (out_re) *out_re = v.real();
    if (out_im) *out_im = v.imag();
  });
}

foxh_status foxh_duplication_split(double beta_re, double beta_im, double delta,
                                   double s_re, double s_im, double lhs_log[2],
                                   double rhs_log[2]) {
  return guarded([&] {
    foxh::DuplicationSides sides =
        foxh::duplication_split({beta_re, beta_im}, delta, {s_re, s_im});
    if (lhs_log) {
      lhs_log[0] = sides.lhs.log_modulus;
      lhs_log[1] = sides.lhs.phase;
    }
    if (rhs_log) {
      rhs_log[0] = sides.rhs.log_modulus;
      rhs_log[1] = sides.rhs.phase;
    }
  });
}

foxh_status foxh_theta(const foxh_spec* spec, double s_re, double s_im,
                       double* log_modulus, double* phase, int* is_zero) {
  if (!spec) return fail_null("spec");
  return guarded([&] {
    foxh::LogComplex v = foxh::theta(spec->impl, {s_re, s_im});
    if (log_modulus) *log_modulus = v.log_modulus;
    if (phase) *phase = v.phase;
    if (is_zero) *is_zero = v.zero ? 1 : 0;
  });
}

foxh_status foxh_integrand(const foxh_spec* spec, double modulus,
                           double arg_phase, double s_re, double s_im,
                           double* log_modulus, double* phase, int* is_zero) {
  if (!spec) return fail_null("spec");
  return guarded([&] {
    foxh::LogComplex v =
        foxh::integrand(spec->impl, {modulus, arg_phase}, {s_re, s_im});
    if (log_modulus) *log_modulus = v.log_modulus;
    if (phase) *phase = v.phase;
    if (is_zero) *is_zero = v.zero ? 1 : 0;
  });
}

foxh_status foxh_eval_contour(const foxh_spec* spec, double modulus,
                              double phase, const foxh_options* opts,
                              foxh_result* out) {
  if (!spec) return fail_null("spec");
  if (!out) return fail_null("out");
  return guarded([&] {
    foxh::EvalResult r =
        foxh::evaluate_contour(spec->impl, {modulus, phase}, to_options(opts));
    fill_result(r, out);
  });
}

foxh_status foxh_eval_series(const foxh_spec* spec, double modulus,
                             double phase, const foxh_options* opts,
                             foxh_result* out) {
  if (!spec) return fail_null("spec");
  if (!out) return fail_null("out");
  return guarded([&] {
    foxh::EvalResult r =
        foxh::evaluate_series(spec->impl, {modulus, phase}, to_options(opts));
    fill_result(r, out);
  });
}

foxh_status foxh_closed_form_tag(const foxh_spec* spec, const char** tag_out) {
  if (!spec) return fail_null("spec");
  if (!tag_out) return fail_null("tag_out");
  return guarded([&] {
    auto form = foxh::reduce_closed_form(spec->impl);
    if (!form) {
      *tag_out = nullptr;
    } else if (form->tag == "exp") {
      *tag_out = "exp";
    } else {
      *tag_out = "binomial";
    }
  });
}

foxh_status foxh_closed_form_eval(const foxh_spec* spec, double modulus,
                                  double phase, double* out_re,
                                  double* out_im) {
  if (!spec) return fail_null("spec");
  return guarded([&] {
    auto form = foxh::reduce_closed_form(spec->impl);
    if (!form)
      foxh::raise(foxh::ErrorCode::unsupported,
                  "spec has no closed-form reduction");
    std::complex<double> v = form->eval({modulus, phase});
    if (out_re) *out_re = v.real();
    if (out_im) *out_im = v.imag();
  });
}

size_t foxh_catalog_size(void) { return foxh::catalog().size(); }

foxh_status foxh_catalog_entry(size_t index, const char** name,
                               foxh_spec** out) {
  if (!out) return fail_null("out");
  *out = nullptr;
  return guarded([&] {
    const auto& entries = foxh::catalog();
    if (index >= entries.size())
      foxh::raise(foxh::ErrorCode::invalid_argument,
                  "catalog index out of range");
    if (name) *name = entries[index].name.c_str();
    *out = new foxh_spec{entries[index].spec};
  });
}

foxh_status foxh_identity_build(const char* id, double alpha, double beta,
                                double lambda, double delta,
                                const foxh_spec* base, foxh_identity** out) {
  if (!id) return fail_null("id");
  if (!base) return fail_null("base");
  if (!out) return fail_null("out");
  *out = nullptr;
  return guarded([&] {
    foxh::IdentityParams params;
    params.alpha = alpha;
    params.beta = beta;
    params.lambda = lambda;
    params.delta = delta;
    params.base = base->impl;
    *out = new foxh_identity{
        foxh::build_identity(foxh::identity_from_string(id), params)};
  });
}

void foxh_identity_free(foxh_identity* ident) { delete ident; }

foxh_status foxh_identity_terms(const foxh_identity* ident, int* lhs_terms,
                                int* rhs_terms) {
  if (!ident) return fail_null("identity");
  if (lhs_terms) *lhs_terms = static_cast<int>(ident->impl.lhs.size());
  if (rhs_terms) *rhs_terms = static_cast<int>(ident->impl.rhs.size());
  return FOXH_OK;
}

foxh_status foxh_identity_note(const foxh_identity* ident, const char** note) {
  if (!ident) return fail_null("identity");
  if (!note) return fail_null("note");
  *note = ident->impl.note.c_str();
  return FOXH_OK;
}

foxh_status foxh_identity_sector(const foxh_identity* ident, double* max_phase,
                                 double* min_modulus, double* max_modulus) {
  if (!ident) return fail_null("identity");
  return guarded([&] {
    foxh::AdmissibleSector sector = foxh::admissible_sector(ident->impl);
    if (max_phase) *max_phase = sector.max_phase;
    if (min_modulus) *min_modulus = sector.min_modulus;
    if (max_modulus) *max_modulus = sector.max_modulus;
  });
}

foxh_status foxh_identity_verify_json(const foxh_identity* ident,
                                      const double* moduli, size_t n_moduli,
                                      const double* phases, size_t n_phases,
                                      double tol, const foxh_options* opts,
                                      int* pass, char** report_json) {
  if (!ident) return fail_null("identity");
  if (n_moduli > 0 && !moduli) return fail_null("moduli");
  if (n_phases > 0 && !phases) return fail_null("phases");
  return guarded([&] {
    std::vector<double> ms(moduli, moduli + n_moduli);
    std::vector<double> ps(phases, phases + n_phases);
    std::sort(ms.begin(), ms.end());
    std::sort(ps.begin(), ps.end());
    std::vector<foxh::Argument> samples;
    for (double mod : ms)
      for (double ph : ps) samples.push_back({mod, ph});
    foxh::VerificationReport report =
        foxh::verify(ident->impl, samples, tol, to_options(opts));
    if (pass) *pass = report.pass ? 1 : 0;
    if (report_json)
      *report_json =
          dup_string(foxh::verification_report_to_json(report, ident->impl));
  });
}

foxh_status foxh_identity_kernel_check(const foxh_identity* ident,
                                       double modulus, double phase,
                                       int grid_n, double im_max,
                                       double* worst_rel) {
  if (!ident) return fail_null("identity");
  if (!worst_rel) return fail_null("worst_rel");
  return guarded([&] {
    *worst_rel = foxh::kernel_check_worst(ident->impl, {modulus, phase},
                                          grid_n, im_max);
  });
}

foxh_status foxh_integrand_residual(double alpha, double beta, double lambda,
                                    double delta, const foxh_spec* base,
                                    double modulus, double phase, double s_re,
                                    double s_im, double* out_re,
                                    double* out_im, double* rel) {
  if (!base) return fail_null("base");
  return guarded([&] {
    foxh::IdentityParams params;
    params.alpha = alpha;
    params.beta = beta;
    params.lambda = lambda;
    params.delta = delta;
    params.base = base->impl;
    double r = 0.0;
    std::complex<double> v =
        foxh::integrand_residual(params, {modulus, phase}, {s_re, s_im}, &r);
    if (out_re) *out_re = v.real();
    if (out_im) *out_im = v.imag();
    if (rel) *rel = r;
  });
}

foxh_status foxh_gamma_suite(uint64_t seed, int count, int fault, int* pass,
                             char** report_json) {
  if (count < 0) {
    g_last_error = "count must be non-negative";
    return FOXH_ERR_INVALID_ARGUMENT;
  }
  return guarded([&] {
    foxh::GammaCheckReport report =
        foxh::run_gamma_suite(seed, count, fault != 0);
    if (pass) *pass = report.pass ? 1 : 0;
    if (report_json)
      *report_json = dup_string(foxh::gamma_report_to_json(report));
  });
}

}  // extern "C"
