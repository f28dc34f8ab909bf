#ifndef FOXH_IDENTITIES_HPP
#define FOXH_IDENTITIES_HPP

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "evaluator.hpp"
#include "hspec.hpp"

namespace foxh {

enum class IdentityId { R1981, RMULTI, MAIN, G41, G42, G43 };

const char* identity_name(IdentityId id);
IdentityId identity_from_string(std::string_view name);

// alpha/lambda and beta/delta are the two padding pairs. Which of them an
// identity consumes depends on the id; unused entries are ignored.
struct IdentityParams {
  double alpha = 0.0;
  double beta = 0.0;
  double lambda = 0.0;
  double delta = 0.0;
  HFunctionSpec base;  // validated (a_j,e_j)_p, (b_j,f_j)_q lists
};

// One summand: prefactor * H(spec) evaluated at the argument rotated by
// phase_shift radians.
struct WeightedTerm {
  std::complex<double> prefactor;
  HFunctionSpec spec;
  double phase_shift = 0.0;
};

struct IdentityCase {
  IdentityId id = IdentityId::MAIN;
  IdentityParams params;
  std::vector<WeightedTerm> lhs;
  std::vector<WeightedTerm> rhs;
  std::string note;  // construction caveats, copied into reports
};

IdentityCase build_identity(IdentityId id, const IdentityParams& params);

// Testability region for vertical-contour evaluation: the band of base
// phases keeping every term inside its own sector after rotation. Modulus
// is unconstrained by convergence once a_star > 0 holds for every term.
struct AdmissibleSector {
  double max_phase = 0.0;
  double min_modulus = 0.0;
  double max_modulus = 0.0;  // +infinity
};

AdmissibleSector admissible_sector(const IdentityCase& c);

struct TermRecord {
  int side = 0;  // 0 = lhs, 1 = rhs
  int index = 0;
  std::complex<double> prefactor;
  double phase_shift = 0.0;
  std::complex<double> value;  // H value before the prefactor
  double error_estimate = 0.0;
  int nodes = 0;
};

struct SampleRecord {
  Argument z;
  bool ok = true;
  std::string error;
  std::complex<double> lhs;
  std::complex<double> rhs;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  double lhs_error_estimate = 0.0;
  double rhs_error_estimate = 0.0;
  std::vector<TermRecord> terms;
};

struct VerificationReport {
  IdentityId id = IdentityId::MAIN;
  double tolerance = 0.0;
  bool pass = false;
  std::string note;
  std::vector<SampleRecord> samples;
};

// Evaluates both sides at each sample; a sample passes when the residual
// relative to max(|lhs|, floor) stays within tol. Evaluator failures mark
// the sample failed and the run continues.
VerificationReport verify(const IdentityCase& c,
                          const std::vector<Argument>& samples, double tol,
                          const QuadratureOptions& opts);

// Pointwise derivation check with no quadrature: A - B where A is 2*pi*i
// times the padded-kernel integrand and B the explicit four-exponential
// form. rel_out (optional) receives |A-B| / max(|A|, |B|).
std::complex<double> integrand_residual(const IdentityParams& params,
                                        const Argument& z,
                                        std::complex<double> s,
                                        double* rel_out = nullptr);

// Kernel-level identity gap at one s: for G41/G42/G43 the two sides of the
// identity divided out, |lhs_kernel / (const * rhs_kernel) - 1|.
double theta_equality_residual(const IdentityCase& c, std::complex<double> s);

// Worst pointwise residual over a grid_n x grid_n grid of s (Re over the
// middle third of the common strip, Im over [-im_max, im_max]). Dispatches
// to integrand_residual for MAIN and to theta equality for G41-G43; other
// ids have no kernel-level check.
double kernel_check_worst(const IdentityCase& c, const Argument& z, int grid_n,
                          double im_max);

}  // namespace foxh

#endif
