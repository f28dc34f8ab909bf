#ifndef FOXH_EVALUATOR_HPP
#define FOXH_EVALUATOR_HPP

#include <complex>
#include <functional>
#include <optional>
#include <string>

#include "hspec.hpp"

namespace foxh {

struct QuadratureOptions {
  double rel_tol = 1e-10;
  int max_nodes = 200000;
  double tail_safety = 10.0;
};

enum class Method { contour, series, closed_form };

const char* method_name(Method method);

struct EvalResult {
  std::complex<double> value;
  // Spread between the last two refinement levels plus the truncation-tail
  // estimate; a heuristic indicator, not a rigorous bound.
  double error_estimate = 0.0;
  Method method = Method::contour;
  int nodes_used = 0;
};

struct ContourSpec {
  double abscissa = 0.0;    // c with c_min < c < c_max
  double truncation = 0.0;  // integrate over [c - iT, c + iT]
  int panels = 1;           // base panel count of the graded layout; each
                            // refinement level halves every panel
};

// Contour plan at a caller-chosen abscissa: truncation from the decay
// envelope (then verified against actual endpoint values) and an initial
// panel count.
ContourSpec plan_contour_at(const HFunctionSpec& spec, const Argument& z,
                            const QuadratureOptions& opts, double abscissa);

// Same, with abscissa picked to minimize the near-axis integrand envelope,
// which keeps the peak-to-result cancellation moderate.
ContourSpec plan_contour(const HFunctionSpec& spec, const Argument& z,
                         const QuadratureOptions& opts);

EvalResult evaluate_contour(const HFunctionSpec& spec, const Argument& z,
                            const QuadratureOptions& opts,
                            const ContourSpec& plan);

EvalResult evaluate_contour(const HFunctionSpec& spec, const Argument& z,
                            const QuadratureOptions& opts = {});

// Residue expansion over the right poles; the independent cross-check for
// the contour path. Requires simple poles and a convergent range of |z|.
EvalResult evaluate_series(const HFunctionSpec& spec, const Argument& z,
                           const QuadratureOptions& opts = {});

struct ClosedForm {
  std::string tag;
  std::function<std::complex<double>(const Argument&)> eval;
};

// Recognizes the two catalog reductions:
//   H^{1,0}_{0,1}[z | -; (b,1)]      = z^b e^{-z}
//   H^{1,1}_{1,1}[z | (a,1); (b,1)]  = Gamma(1-a+b) z^b (1+z)^{-(1-a+b)},
//                                      Re(1-a+b) > 0
std::optional<ClosedForm> reduce_closed_form(const HFunctionSpec& spec);

}  // namespace foxh

#endif
