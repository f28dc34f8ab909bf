#ifndef FOXH_JSONIO_HPP
#define FOXH_JSONIO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "gammacheck.hpp"
#include "hspec.hpp"
#include "identities.hpp"

namespace foxh {

// Streaming JSON writer with fixed float formatting (17 significant digits)
// so identical inputs produce byte-identical reports.
class JsonWriter {
 public:
  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(std::string_view k);
  void value(double v);
  void value(int v);
  void value(long long v);
  void value(unsigned long long v);
  void value(bool v);
  void value(std::string_view v);
  void value(const char* v) { value(std::string_view(v)); }
  void value_raw(std::string_view json);  // embed pre-serialized JSON
  const std::string& str() const { return out_; }

 private:
  void separator();
  std::string out_;
  std::vector<bool> has_item_;
  bool pending_key_ = false;
};

std::string json_escape(std::string_view s);

// {"m":..,"n":..,"upper":[[re,im,weight],..],"lower":[[re,im,weight],..]}
HFunctionSpec spec_from_json(const std::string& text);
std::string spec_to_json(const HFunctionSpec& spec);

std::string verification_report_to_json(const VerificationReport& report,
                                        const IdentityCase& c);
std::string gamma_report_to_json(const GammaCheckReport& report);

}  // namespace foxh

#endif
