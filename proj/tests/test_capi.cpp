// Exercises the shared library strictly through the C header.

#include "foxh.h"

#include <cmath>
#include <cstring>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

const char* kExpSpec = R"({"m":1,"n":0,"upper":[],"lower":[[0,0,1]]})";
const char* kPowerSpec = R"({"m":1,"n":1,"upper":[[0,0,1]],"lower":[[0,0,1]]})";

struct Spec {
  foxh_spec* ptr = nullptr;
  explicit Spec(const char* json) { REQUIRE(foxh_spec_from_json(json, &ptr) == FOXH_OK); }
  Spec() = default;
  ~Spec() { foxh_spec_free(ptr); }
};

}  // namespace

TEST_CASE("version and option defaults") {
  CHECK(std::string(foxh_version()).size() > 0);
  foxh_options opts;
  foxh_options_default(&opts);
  CHECK(opts.rel_tol == 1e-10);
  CHECK(opts.max_nodes == 200000);
  CHECK(opts.tail_safety == 10.0);
}

TEST_CASE("spec parse, profile and round trip") {
  Spec spec(kExpSpec);
  double a_star = 0, c_min = 0, c_max = 0, halfwidth = 0;
  int simple = 0;
  REQUIRE(foxh_spec_profile(spec.ptr, &a_star, &c_min, &c_max, &halfwidth,
                            &simple) == FOXH_OK);
  CHECK(a_star == 1.0);
  CHECK(std::isinf(c_min));
  CHECK(c_max == 0.0);
  CHECK(simple == 1);

  char* json1 = nullptr;
  REQUIRE(foxh_spec_to_json(spec.ptr, &json1) == FOXH_OK);
  foxh_spec* again = nullptr;
  REQUIRE(foxh_spec_from_json(json1, &again) == FOXH_OK);
  char* json2 = nullptr;
  REQUIRE(foxh_spec_to_json(again, &json2) == FOXH_OK);
  CHECK(std::string(json1) == json2);
  foxh_string_free(json1);
  foxh_string_free(json2);
  foxh_spec_free(again);
}

TEST_CASE("spec errors carry codes and messages") {
  foxh_spec* out = nullptr;
  CHECK(foxh_spec_from_json("{nope", &out) == FOXH_ERR_PARSE);
  CHECK(std::strlen(foxh_last_error()) > 0);
  CHECK(foxh_spec_from_json(R"({"m":1,"n":0,"upper":[],"lower":[[0,0,-1]]})",
                            &out) == FOXH_ERR_NON_POSITIVE_WEIGHT);
  CHECK(foxh_spec_from_json(R"({"m":2,"n":0,"upper":[],"lower":[[0,0,1]]})",
                            &out) == FOXH_ERR_INDEX_OUT_OF_RANGE);
  CHECK(foxh_spec_from_json(
            R"({"m":1,"n":1,"upper":[[3,0,1]],"lower":[[1,0,1]]})", &out) ==
        FOXH_ERR_NO_SEPARATING_CONTOUR);
  CHECK(foxh_spec_from_json(nullptr, &out) == FOXH_ERR_INVALID_ARGUMENT);
}

TEST_CASE("pole listing") {
  Spec spec(kPowerSpec);
  double left[8], right[8];
  size_t nl = 0, nr = 0;
  REQUIRE(foxh_spec_poles(spec.ptr, 2, left, &nl, right, &nr) == FOXH_OK);
  REQUIRE(nl == 2);
  REQUIRE(nr == 2);
  CHECK(right[0] == 0.0);
  CHECK(right[2] == 1.0);
  CHECK(left[0] == -1.0);
  CHECK(left[2] == -2.0);
}

TEST_CASE("gamma kernel entry points") {
  double lm = 0, ph = 0;
  REQUIRE(foxh_log_gamma(0.5, 0.0, &lm, &ph) == FOXH_OK);
  CHECK(lm == doctest::Approx(std::log(std::sqrt(M_PI))).epsilon(1e-13));
  CHECK(foxh_log_gamma(-2.0, 0.0, &lm, &ph) ==
        FOXH_ERR_POLE_AT_NON_POSITIVE_INTEGER);

  double re = 0, im = 0;
  REQUIRE(foxh_reflection_sin(0.5, 0.0, &re, &im) == FOXH_OK);
  CHECK(re == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(foxh_reflection_sin(2.0, 0.0, &re, &im) == FOXH_ERR_POLE_AT_INTEGER);
  REQUIRE(foxh_reflection_cos(0.25, 0.0, &re, &im) == FOXH_OK);
  CHECK(re == doctest::Approx(std::sqrt(0.5)).epsilon(1e-12));
  CHECK(foxh_reflection_cos(0.5, 0.0, &re, &im) ==
        FOXH_ERR_POLE_AT_HALF_INTEGER);

  double lhs[2], rhs[2];
  REQUIRE(foxh_duplication_split(0.3, 0.0, 0.5, 0.2, 1.5, lhs, rhs) == FOXH_OK);
  CHECK(lhs[0] == doctest::Approx(rhs[0]).epsilon(1e-12));
  CHECK(foxh_duplication_split(0.5, 0.0, 0.0, 0.0, 0.0, lhs, rhs) ==
        FOXH_ERR_POLE_IN_FACTOR);
}

TEST_CASE("theta and integrand") {
  Spec spec(kExpSpec);
  double lm = 0, ph = 0;
  int zero = 0;
  REQUIRE(foxh_theta(spec.ptr, -0.5, 0.0, &lm, &ph, &zero) == FOXH_OK);
  CHECK(std::exp(lm) * std::cos(ph) ==
        doctest::Approx(std::sqrt(M_PI)).epsilon(1e-13));
  CHECK(foxh_theta(spec.ptr, 0.0, 0.0, &lm, &ph, &zero) ==
        FOXH_ERR_POLE_OF_NUMERATOR);
  REQUIRE(foxh_integrand(spec.ptr, std::exp(1.0), 0.0, -0.5, 0.0, &lm, &ph,
                         &zero) == FOXH_OK);
  CHECK(std::exp(lm) * std::cos(ph) ==
        doctest::Approx(std::sqrt(M_PI) * std::exp(-0.5)).epsilon(1e-13));
}

TEST_CASE("evaluation through the C API") {
  Spec spec(kExpSpec);
  foxh_result r;
  REQUIRE(foxh_eval_contour(spec.ptr, 1.0, 0.0, nullptr, &r) == FOXH_OK);
  CHECK(r.value_re == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
  CHECK(r.method == 0);
  REQUIRE(foxh_eval_series(spec.ptr, 1.0, 0.0, nullptr, &r) == FOXH_OK);
  CHECK(r.value_re == doctest::Approx(std::exp(-1.0)).epsilon(1e-10));
  CHECK(r.method == 1);
  CHECK(foxh_eval_contour(spec.ptr, 1.0, 2.5, nullptr, &r) ==
        FOXH_ERR_OUTSIDE_CONVERGENCE_SECTOR);

  const char* tag = nullptr;
  REQUIRE(foxh_closed_form_tag(spec.ptr, &tag) == FOXH_OK);
  REQUIRE(tag != nullptr);
  CHECK(std::string(tag) == "exp");
  double re = 0, im = 0;
  REQUIRE(foxh_closed_form_eval(spec.ptr, 2.0, 0.0, &re, &im) == FOXH_OK);
  CHECK(re == doctest::Approx(std::exp(-2.0)).epsilon(1e-14));
}

TEST_CASE("catalog access") {
  REQUIRE(foxh_catalog_size() >= 8);
  for (size_t i = 0; i < foxh_catalog_size(); ++i) {
    const char* name = nullptr;
    foxh_spec* spec = nullptr;
    REQUIRE(foxh_catalog_entry(i, &name, &spec) == FOXH_OK);
    CHECK(name != nullptr);
    double a_star = 0;
    CHECK(foxh_spec_profile(spec, &a_star, nullptr, nullptr, nullptr, nullptr) ==
          FOXH_OK);
    CHECK(a_star > 0.0);
    foxh_spec_free(spec);
  }
  foxh_spec* spec = nullptr;
  CHECK(foxh_catalog_entry(999, nullptr, &spec) == FOXH_ERR_INVALID_ARGUMENT);
}

TEST_CASE("identity lifecycle through the C API") {
  Spec base(kPowerSpec);
  foxh_identity* ident = nullptr;
  REQUIRE(foxh_identity_build("MAIN", 0.3, 0.2, 0.5, 0.4, base.ptr, &ident) ==
          FOXH_OK);
  int lhs_terms = 0, rhs_terms = 0;
  REQUIRE(foxh_identity_terms(ident, &lhs_terms, &rhs_terms) == FOXH_OK);
  CHECK(lhs_terms == 1);
  CHECK(rhs_terms == 4);

  double max_phase = 0, min_mod = 0, max_mod = 0;
  REQUIRE(foxh_identity_sector(ident, &max_phase, &min_mod, &max_mod) ==
          FOXH_OK);
  CHECK(max_phase > 0.0);
  CHECK(std::isinf(max_mod));

  double moduli[2] = {0.4, 0.8};
  double phases[1] = {0.0};
  int pass = 0;
  char* report = nullptr;
  REQUIRE(foxh_identity_verify_json(ident, moduli, 2, phases, 1, 1e-6, nullptr,
                                    &pass, &report) == FOXH_OK);
  CHECK(pass == 1);
  nlohmann::json doc = nlohmann::json::parse(report);
  CHECK(doc.at("identity") == "MAIN");
  CHECK(doc.at("pass") == true);
  CHECK(doc.at("samples").size() == 2);
  CHECK(doc.at("samples")[0].at("terms").size() == 5);
  foxh_string_free(report);

  double worst = 1.0;
  REQUIRE(foxh_identity_kernel_check(ident, 0.7, 0.0, 5, 10.0, &worst) ==
          FOXH_OK);
  CHECK(worst <= 1e-10);
  foxh_identity_free(ident);

  CHECK(foxh_identity_build("MAINX", 0.3, 0.2, 0.5, 0.4, base.ptr, &ident) ==
        FOXH_ERR_INVALID_ARGUMENT);
  CHECK(foxh_identity_build("MAIN", 0.3, 0.2, 0.5, 0.0, base.ptr, &ident) ==
        FOXH_ERR_INVALID_PARAMS);
  CHECK(foxh_identity_build("MAIN", 0.3, 0.8, 0.5, 0.2, base.ptr, &ident) ==
        FOXH_ERR_SPEC_VALIDATION_FAILED);

  // collapsed lhs sector
  REQUIRE(foxh_identity_build("MAIN", 0.3, 0.2, 1.5, 0.2, base.ptr, &ident) ==
          FOXH_OK);
  CHECK(foxh_identity_sector(ident, &max_phase, &min_mod, &max_mod) ==
        FOXH_ERR_EMPTY_ADMISSIBLE_REGION);
  foxh_identity_free(ident);
}

TEST_CASE("kernel check is unsupported for prior identities") {
  Spec base(kPowerSpec);
  foxh_identity* ident = nullptr;
  REQUIRE(foxh_identity_build("R1981", 0.4, 0.0, 0.3, 0.0, base.ptr, &ident) ==
          FOXH_OK);
  double worst = 0.0;
  CHECK(foxh_identity_kernel_check(ident, 0.7, 0.0, 3, 5.0, &worst) ==
        FOXH_ERR_UNSUPPORTED);
  foxh_identity_free(ident);
}

TEST_CASE("integrand residual through the C API") {
  Spec base(kPowerSpec);
  double re = 0, im = 0, rel = 1.0;
  REQUIRE(foxh_integrand_residual(0.3, 0.2, 0.5, 0.4, base.ptr, 0.7, 0.0, -0.5,
                                  2.0, &re, &im, &rel) == FOXH_OK);
  CHECK(rel <= 1e-10);
  CHECK(foxh_integrand_residual(0.3, 0.2, 0.5, 0.4, base.ptr, 0.7, 0.0, 0.5,
                                0.0, &re, &im, &rel) == FOXH_ERR_POLE_AT_S);
}

TEST_CASE("gamma suite through the C API") {
  int pass = 0;
  char* report = nullptr;
  REQUIRE(foxh_gamma_suite(99, 200, 0, &pass, &report) == FOXH_OK);
  CHECK(pass == 1);
  nlohmann::json doc = nlohmann::json::parse(report);
  CHECK(doc.at("checks").size() == 4);
  foxh_string_free(report);

  REQUIRE(foxh_gamma_suite(99, 200, 1, &pass, &report) == FOXH_OK);
  CHECK(pass == 0);
  foxh_string_free(report);

  REQUIRE(foxh_gamma_suite(99, 0, 0, &pass, &report) == FOXH_OK);
  CHECK(pass == 1);
  foxh_string_free(report);
}
