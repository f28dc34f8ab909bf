#include "evaluator.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "error.hpp"
#include "gammakit.hpp"
#include "mellin.hpp"

namespace foxh {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kTwoPi = 2.0 * kPi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kSectorMargin = 1e-6;

const char* kMethodNames[] = {"contour", "series", "closed_form"};

struct GaussLegendre {
  std::array<double, 32> x;
  std::array<double, 32> w;
};

// 32-point rule computed by Newton iteration on the Legendre polynomial.
const GaussLegendre& gl32() {
  static const GaussLegendre rule = [] {
    GaussLegendre r;
    const int n = 32;
    for (int i = 0; i < n / 2; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
      double pp = 0.0;
      for (int iter = 0; iter < 64; ++iter) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < n; ++j) {
          double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * x * p1 - j * p2) / (j + 1.0);
        }
        pp = n * (x * p0 - p1) / (x * x - 1.0);
        double dx = p0 / pp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      r.x[i] = -x;
      r.x[n - 1 - i] = x;
      r.w[i] = r.w[n - 1 - i] = 2.0 / ((1.0 - x * x) * pp * pp);
    }
    return r;
  }();
  return rule;
}

double weight_sum(const HFunctionSpec& spec) {
  double rho = 0.0;
  for (const auto& pr : spec.upper) rho += pr.weight;
  for (const auto& pr : spec.lower) rho += pr.weight;
  return rho;
}

// log|integrand| probed just off the real axis, where denominator zeros and
// numerator poles cannot sit. Used both to place the abscissa and as the
// peak scale for truncation checks.
double envelope_log(const HFunctionSpec& spec, const Argument& z, double c) {
  double best = kNegInf;
  for (double t : {0.29, 0.83}) {
    try {
      LogComplex v = integrand(spec, z, {c, t});
      if (!v.zero) best = std::max(best, v.log_modulus);
    } catch (const Error&) {
    }
  }
  if (best == kNegInf) return std::numeric_limits<double>::infinity();
  return best;
}

struct StripWindow {
  double lo, hi;
};

StripWindow search_window(const ConvergenceProfile& prof) {
  double lo = prof.c_min, hi = prof.c_max;
  if (std::isinf(lo) && std::isinf(hi)) return {-10.0, 10.0};
  if (std::isinf(lo)) lo = hi - 40.0;
  if (std::isinf(hi)) hi = lo + 40.0;
  double margin = 0.01 * (hi - lo);
  return {lo + margin, hi - margin};
}

double pick_abscissa(const HFunctionSpec& spec, const Argument& z,
                     const ConvergenceProfile& prof) {
  StripWindow win = search_window(prof);
  const int coarse = 65;
  double best_c = 0.5 * (win.lo + win.hi);
  double best_g = std::numeric_limits<double>::infinity();
  for (int i = 0; i < coarse; ++i) {
    double c = win.lo + (win.hi - win.lo) * i / (coarse - 1.0);
    double g = envelope_log(spec, z, c);
    if (g < best_g) {
      best_g = g;
      best_c = c;
    }
  }
  double step = (win.hi - win.lo) / (coarse - 1.0);
  double a = std::max(win.lo, best_c - step);
  double b = std::min(win.hi, best_c + step);
  const double gr = 0.6180339887498949;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = envelope_log(spec, z, x1), f2 = envelope_log(spec, z, x2);
  for (int it = 0; it < 48; ++it) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - gr * (b - a);
      f1 = envelope_log(spec, z, x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + gr * (b - a);
      f2 = envelope_log(spec, z, x2);
    }
  }
  return 0.5 * (a + b);
}

double endpoint_log(const HFunctionSpec& spec, const Argument& z, double c,
                    double T) {
  double worst = kNegInf;
  for (double sign : {1.0, -1.0}) {
    try {
      LogComplex v = integrand(spec, z, {c, sign * T});
      if (!v.zero) worst = std::max(worst, v.log_modulus);
    } catch (const Error&) {
    }
  }
  return worst;
}

void require_options(const QuadratureOptions& opts) {
  if (!(opts.rel_tol > 0.0))
    raise(ErrorCode::invalid_argument, "rel_tol must be positive");
  if (opts.max_nodes < 64)
    raise(ErrorCode::invalid_argument, "max_nodes must be at least 64");
}

void require_inside_sector(const ConvergenceProfile& prof, const Argument& z) {
  if (!(prof.a_star > 0.0)) {
    std::ostringstream os;
    os << "contour diverges: a_star = " << prof.a_star << " is not positive";
    raise(ErrorCode::outside_convergence_sector, os.str());
  }
  if (!(std::abs(z.phase) < prof.sector_halfwidth - kSectorMargin)) {
    std::ostringstream os;
    os << "argument phase " << z.phase << " outside the sector |phase| < "
       << prof.sector_halfwidth;
    raise(ErrorCode::outside_convergence_sector, os.str());
  }
  if (!(z.modulus > 0.0))
    raise(ErrorCode::invalid_argument, "argument modulus must be positive");
}

// Base panel edges over [-T, T]. Poles just outside the strip imprint
// Lorentzian features of width ~ the contour-to-edge distance on the
// integrand near t = 0, so panel widths start at that scale and grow with
// |t| (capped so the z^s oscillation stays resolved per panel).
std::vector<double> panel_edges(double T, double fine) {
  std::vector<double> pos;
  double e = 0.0;
  while (e < T) {
    double width = std::min(4.0, std::max(fine, e));
    e = std::min(T, e + width);
    pos.push_back(e);
  }
  std::vector<double> edges;
  edges.reserve(2 * pos.size() + 1);
  for (auto it = pos.rbegin(); it != pos.rend(); ++it) edges.push_back(-*it);
  edges.push_back(0.0);
  edges.insert(edges.end(), pos.begin(), pos.end());
  return edges;
}

// Panel width floor: distance from the abscissa to the nearest finite strip
// edge, i.e. to the nearest pole family.
double fine_scale(const ConvergenceProfile& prof, double c) {
  double dist = 1.0;
  if (!std::isinf(prof.c_min)) dist = std::min(dist, c - prof.c_min);
  if (!std::isinf(prof.c_max)) dist = std::min(dist, prof.c_max - c);
  return std::clamp(dist, 1e-6, 1.0);
}

struct LevelValue {
  std::complex<double> value;
  double scale_log = kNegInf;  // max node log-modulus, for tail comparisons
};

LevelValue quadrature_level(const HFunctionSpec& spec, const Argument& z,
                            double c, const std::vector<double>& edges,
                            int subdiv) {
  const GaussLegendre& rule = gl32();
  double M = kNegInf;
  std::complex<double> acc = 0.0;
  for (std::size_t panel = 0; panel + 1 < edges.size(); ++panel) {
    for (int piece = 0; piece < subdiv; ++piece) {
      double t0 = edges[panel] +
                  (edges[panel + 1] - edges[panel]) * piece / subdiv;
      double t1 = edges[panel] +
                  (edges[panel + 1] - edges[panel]) * (piece + 1) / subdiv;
      double mid = 0.5 * (t0 + t1), half = 0.5 * (t1 - t0);
      for (int i = 0; i < 32; ++i) {
        double t = mid + half * rule.x[i];
        LogComplex v = integrand(spec, z, {c, t});
        if (v.zero) continue;
        double lm = v.log_modulus + std::log(rule.w[i] * half);
        if (lm > M) {
          acc *= std::exp(M - lm);
          M = lm;
        }
        acc += std::exp(std::complex<double>(lm - M, v.phase));
      }
    }
  }
  if (M == kNegInf) return {std::complex<double>(0.0, 0.0), kNegInf};
  double total_log = M + std::log(std::max(std::abs(acc), 1e-300));
  if (total_log > 700.0)
    raise(ErrorCode::overflow, "contour value exceeds double range");
  return {std::exp(M) * acc / kTwoPi, M};
}

}  // namespace

const char* method_name(Method method) {
  return kMethodNames[static_cast<int>(method)];
}

ContourSpec plan_contour_at(const HFunctionSpec& spec, const Argument& z,
                            const QuadratureOptions& opts, double abscissa) {
  require_options(opts);
  ConvergenceProfile prof = convergence_profile(spec);
  require_inside_sector(prof, z);
  double sigma = prof.sector_halfwidth - std::abs(z.phase);
  double rho = weight_sum(spec);
  double target_log = std::log(opts.rel_tol / opts.tail_safety);

  // Decay-envelope equation -sigma T + rho log T = target, by bisection.
  auto resid = [&](double T) {
    return -sigma * T + rho * std::log(std::max(T, 2.0)) - target_log;
  };
  double lo = std::max(2.0, rho / sigma);
  double hi = lo * 2.0;
  while (resid(hi) > 0.0 && hi < 1e7) hi *= 2.0;
  for (int it = 0; it < 80; ++it) {
    double midT = 0.5 * (lo + hi);
    (resid(midT) > 0.0 ? lo : hi) = midT;
  }
  double T = hi;

  // The equation ignores constant prefactors; verify against the actual
  // integrand and stretch until the endpoints sit below the peak by the
  // required factor.
  double peak = envelope_log(spec, z, abscissa);
  if (std::isinf(peak)) peak = 0.0;
  for (int it = 0; it < 200 && T < 1e6; ++it) {
    if (endpoint_log(spec, z, abscissa, T) <= peak + target_log) break;
    T *= 1.25;
  }

  ContourSpec plan;
  plan.abscissa = abscissa;
  plan.truncation = T;
  plan.panels = static_cast<int>(
                    panel_edges(T, fine_scale(prof, abscissa)).size()) -
                1;
  return plan;
}

ContourSpec plan_contour(const HFunctionSpec& spec, const Argument& z,
                         const QuadratureOptions& opts) {
  ConvergenceProfile prof = convergence_profile(spec);
  require_inside_sector(prof, z);
  return plan_contour_at(spec, z, opts, pick_abscissa(spec, z, prof));
}

EvalResult evaluate_contour(const HFunctionSpec& spec, const Argument& z,
                            const QuadratureOptions& opts,
                            const ContourSpec& plan) {
  require_options(opts);
  ConvergenceProfile prof = convergence_profile(spec);
  require_inside_sector(prof, z);
  if (!(plan.abscissa > prof.c_min && plan.abscissa < prof.c_max)) {
    std::ostringstream os;
    os << "abscissa " << plan.abscissa << " outside the contour strip ("
       << prof.c_min << ", " << prof.c_max << ")";
    raise(ErrorCode::no_separating_contour, os.str());
  }

  double sigma = prof.sector_halfwidth - std::abs(z.phase);
  const std::vector<double> edges =
      panel_edges(plan.truncation, fine_scale(prof, plan.abscissa));
  const int base_panels = static_cast<int>(edges.size()) - 1;
  int subdiv = 1;
  int nodes = 0;
  std::complex<double> prev = 0.0;
  std::complex<double> value = 0.0;
  double diff = std::numeric_limits<double>::infinity();
  bool converged = false;
  for (int level = 0; !converged; ++level) {
    int level_nodes = base_panels * subdiv * 32;
    if (nodes + level_nodes > opts.max_nodes) {
      std::ostringstream os;
      os << "quadrature budget exhausted: " << nodes << " + " << level_nodes
         << " nodes would exceed max_nodes = " << opts.max_nodes;
      raise(ErrorCode::budget_exceeded, os.str());
    }
    LevelValue lv = quadrature_level(spec, z, plan.abscissa, edges, subdiv);
    nodes += level_nodes;
    value = lv.value;
    if (level > 0) {
      diff = std::abs(value - prev);
      if (diff <= opts.rel_tol * std::max(std::abs(value), 1e-300))
        converged = true;
    }
    prev = value;
    subdiv *= 2;
  }

  double end_log = endpoint_log(spec, z, plan.abscissa, plan.truncation);
  double tail = (end_log == kNegInf)
                    ? 0.0
                    : std::exp(end_log) / (std::max(sigma, 1e-3) * kPi);

  EvalResult result;
  result.value = value;
  result.error_estimate = diff + tail;
  result.method = Method::contour;
  result.nodes_used = nodes;
  return result;
}

EvalResult evaluate_contour(const HFunctionSpec& spec, const Argument& z,
                            const QuadratureOptions& opts) {
  return evaluate_contour(spec, z, opts, plan_contour(spec, z, opts));
}

EvalResult evaluate_series(const HFunctionSpec& spec, const Argument& z,
                           const QuadratureOptions& opts) {
  require_options(opts);
  if (!spec.validated)
    raise(ErrorCode::invalid_argument, "evaluate_series: spec not validated");
  if (!(z.modulus > 0.0))
    raise(ErrorCode::invalid_argument, "argument modulus must be positive");
  if (spec.m == 0)
    raise(ErrorCode::series_diverged, "no right poles to expand over (m = 0)");
  if (!spec.simple_poles)
    raise(ErrorCode::logarithmic_case,
          "coincident right poles: residue series unavailable");

  const int max_terms = 2000;
  const std::complex<double> log_z = z.log();
  std::complex<double> partial = 0.0;
  int terms = 0;
  int small_run = 0;
  double last_blocks[3] = {0.0, 0.0, 0.0};
  for (int k = 0;; ++k) {
    if (terms + spec.m > max_terms) {
      std::ostringstream os;
      os << "series did not converge within " << max_terms
         << " terms at modulus " << z.modulus;
      raise(ErrorCode::series_diverged, os.str());
    }
    double log_fact = std::lgamma(k + 1.0);
    std::complex<double> block = 0.0;
    for (int j = 0; j < spec.m; ++j) {
      std::complex<double> s =
          (spec.lower[j].coeff + double(k)) / spec.lower[j].weight;
      std::complex<double> log_term = 0.0;
      bool vanished = false;
      for (int i = 0; i < spec.m; ++i) {
        if (i == j) continue;
        std::complex<double> arg =
            spec.lower[i].coeff - spec.lower[i].weight * s;
        if (gamma_pole(arg))
          raise(ErrorCode::logarithmic_case,
                "right pole collides with another numerator gamma");
        log_term += log_gamma_c(arg);
      }
      for (int i = 0; i < spec.n; ++i)
        log_term +=
            log_gamma_c(1.0 - spec.upper[i].coeff + spec.upper[i].weight * s);
      for (int i = spec.m; i < spec.q() && !vanished; ++i) {
        std::complex<double> arg =
            1.0 - spec.lower[i].coeff + spec.lower[i].weight * s;
        if (gamma_pole(arg))
          vanished = true;
        else
          log_term -= log_gamma_c(arg);
      }
      for (int i = spec.n; i < spec.p() && !vanished; ++i) {
        std::complex<double> arg =
            spec.upper[i].coeff - spec.upper[i].weight * s;
        if (gamma_pole(arg))
          vanished = true;
        else
          log_term -= log_gamma_c(arg);
      }
      ++terms;
      if (vanished) continue;
      log_term += s * log_z;
      log_term -= log_fact + std::log(spec.lower[j].weight);
      if (log_term.real() > 700.0)
        raise(ErrorCode::series_diverged, "series term overflows double range");
      std::complex<double> term = std::exp(log_term);
      block += (k % 2 == 0) ? term : -term;
    }
    partial += block;
    last_blocks[k % 3] = std::abs(block);
    bool small = std::abs(block) <=
                 opts.rel_tol * std::max(std::abs(partial), 1e-300);
    if (small && (std::abs(partial) > 0.0 || k > 16))
      ++small_run;
    else
      small_run = 0;
    if (small_run >= 3) break;
  }

  EvalResult result;
  result.value = partial;
  result.error_estimate = last_blocks[0] + last_blocks[1] + last_blocks[2];
  result.method = Method::series;
  result.nodes_used = terms;
  return result;
}

std::optional<ClosedForm> reduce_closed_form(const HFunctionSpec& spec) {
  if (!spec.validated)
    raise(ErrorCode::invalid_argument,
          "reduce_closed_form: spec not validated");
  auto unit_weight = [](const ParamPair& pr) {
    return std::abs(pr.weight - 1.0) <= 1e-12;
  };

  if (spec.m == 1 && spec.n == 0 && spec.p() == 0 && spec.q() == 1 &&
      unit_weight(spec.lower[0])) {
    std::complex<double> b = spec.lower[0].coeff;
    ClosedForm form;
    form.tag = "exp";
    form.eval = [b](const Argument& z) {
      std::complex<double> zval = std::polar(z.modulus, z.phase);
      return std::exp(b * z.log() - zval);
    };
    return form;
  }

  if (spec.m == 1 && spec.n == 1 && spec.p() == 1 && spec.q() == 1 &&
      unit_weight(spec.upper[0]) && unit_weight(spec.lower[0])) {
    std::complex<double> a = spec.upper[0].coeff;
    std::complex<double> b = spec.lower[0].coeff;
    std::complex<double> c = 1.0 - a + b;
    if (c.real() > 0.0) {
      ClosedForm form;
      form.tag = "binomial";
      form.eval = [b, c](const Argument& z) {
        std::complex<double> zval = std::polar(z.modulus, z.phase);
        return std::exp(log_gamma_c(c) + b * z.log() -
                        c * std::log(1.0 + zval));
      };
      return form;
    }
  }

  return std::nullopt;
}

}  // namespace foxh
