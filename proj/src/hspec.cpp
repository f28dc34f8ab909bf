#include "hspec.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "error.hpp"

namespace foxh {

namespace {

constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Right-pole index range examined for coincidences; matches the series
// evaluator's term budget.
constexpr int kPoleScanDepth = 2000;

// Distinct right-pole families (b_i, f_i), (b_j, f_j) collide when
// (b_i + k)/f_i comes within 1e-9 of (b_j + l)/f_j for admissible k, l.
bool right_poles_simple(const HFunctionSpec& spec) {
  for (int j = 0; j < spec.m; ++j) {
    for (int i = 0; i < spec.m; ++i) {
      if (i == j) continue;
      const ParamPair& pj = spec.lower[j];
      const ParamPair& pi = spec.lower[i];
      for (int k = 0; k <= kPoleScanDepth; ++k) {
        std::complex<double> s = (pj.coeff + double(k)) / pj.weight;
        double l0 = std::round((s * pi.weight - pi.coeff).real());
        for (double l : {l0 - 1.0, l0, l0 + 1.0}) {
          if (l < 0 || l > kPoleScanDepth) continue;
          std::complex<double> t = (pi.coeff + l) / pi.weight;
          if (std::abs(t - s) < 1e-9) return false;
        }
      }
    }
  }
  return true;
}

double strip_lower_edge(const HFunctionSpec& spec) {
  double c_min = -kInf;
  for (int j = 0; j < spec.n; ++j)
    c_min = std::max(c_min,
                     (spec.upper[j].coeff.real() - 1.0) / spec.upper[j].weight);
  return c_min;
}

double strip_upper_edge(const HFunctionSpec& spec) {
  double c_max = kInf;
  for (int j = 0; j < spec.m; ++j)
    c_max = std::min(c_max, spec.lower[j].coeff.real() / spec.lower[j].weight);
  return c_max;
}

}  // namespace

HFunctionSpec validate(HFunctionSpec spec) {
  if (spec.m < 0 || spec.n < 0 || spec.m > spec.q() || spec.n > spec.p()) {
    std::ostringstream os;
    os << "order out of range: m=" << spec.m << " n=" << spec.n
       << " with p=" << spec.p() << " q=" << spec.q();
    raise(ErrorCode::index_out_of_range, os.str());
  }
  auto check_weights = [](const std::vector<ParamPair>& list, const char* side) {
    for (std::size_t j = 0; j < list.size(); ++j) {
      if (!(list[j].weight > 0.0)) {
        std::ostringstream os;
        os << side << " pair " << j + 1 << " has non-positive weight "
           << list[j].weight;
        raise(ErrorCode::non_positive_weight, os.str());
      }
    }
  };
  check_weights(spec.upper, "upper");
  check_weights(spec.lower, "lower");

  double c_min = strip_lower_edge(spec);
  double c_max = strip_upper_edge(spec);
  if (!(c_min < c_max)) {
    std::ostringstream os;
    os << "pole strips overlap: no vertical contour with " << c_min
       << " < c < " << c_max;
    raise(ErrorCode::no_separating_contour, os.str());
  }

  spec.simple_poles = right_poles_simple(spec);
  spec.validated = true;
  return spec;
}

ConvergenceProfile convergence_profile(const HFunctionSpec& spec) {
  if (!spec.validated)
    raise(ErrorCode::invalid_argument, "convergence_profile: spec not validated");
  ConvergenceProfile profile;
  double a_star = 0.0;
  for (int j = 0; j < spec.p(); ++j)
    a_star += (j < spec.n) ? spec.upper[j].weight : -spec.upper[j].weight;
  for (int j = 0; j < spec.q(); ++j)
    a_star += (j < spec.m) ? spec.lower[j].weight : -spec.lower[j].weight;
  profile.a_star = a_star;
  profile.c_min = strip_lower_edge(spec);
  profile.c_max = strip_upper_edge(spec);
  profile.sector_halfwidth = a_star * kPi / 2.0;
  return profile;
}

PoleSets pole_sets(const HFunctionSpec& spec, int count) {
  if (!spec.validated)
    raise(ErrorCode::invalid_argument, "pole_sets: spec not validated");
  PoleSets sets;
  if (count <= 0) return sets;

  auto by_re = [](const std::complex<double>& a, const std::complex<double>& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  };

  for (int j = 0; j < spec.m; ++j)
    for (int k = 0; k < count; ++k)
      sets.right.push_back((spec.lower[j].coeff + double(k)) /
                           spec.lower[j].weight);
  std::sort(sets.right.begin(), sets.right.end(), by_re);
  if (static_cast<int>(sets.right.size()) > count) sets.right.resize(count);

  for (int j = 0; j < spec.n; ++j)
    for (int k = 0; k < count; ++k)
      sets.left.push_back((spec.upper[j].coeff - 1.0 - double(k)) /
                          spec.upper[j].weight);
  std::sort(sets.left.begin(), sets.left.end(),
            [&](const auto& a, const auto& b) { return by_re(b, a); });
  if (static_cast<int>(sets.left.size()) > count) sets.left.resize(count);

  return sets;
}

}  // namespace foxh
