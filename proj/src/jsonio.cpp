#include "jsonio.hpp"

#include <cmath>
#include <cstdio>

#include "error.hpp"
#include "json.hpp"

namespace foxh {

void JsonWriter::separator() {
  if (!has_item_.empty() && !pending_key_) {
    if (has_item_.back()) out_ += ',';
    has_item_.back() = true;
  }
  pending_key_ = false;
}

void JsonWriter::begin_object() {
  separator();
  out_ += '{';
  has_item_.push_back(false);
}

void JsonWriter::end_object() {
  out_ += '}';
  has_item_.pop_back();
}

void JsonWriter::begin_array() {
  separator();
  out_ += '[';
  has_item_.push_back(false);
}

void JsonWriter::end_array() {
  out_ += ']';
  has_item_.pop_back();
}

void JsonWriter::key(std::string_view k) {
  separator();
  out_ += '"';
  out_ += json_escape(k);
  out_ += "\":";
  pending_key_ = true;
}

void JsonWriter::value(double v) {
  separator();
  if (!std::isfinite(v)) {
    out_ += "null";
    return;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out_ += buf;
}

void JsonWriter::value(int v) { value(static_cast<long long>(v)); }

void JsonWriter::value(long long v) {
  separator();
  out_ += std::to_string(v);
}

void JsonWriter::value(unsigned long long v) {
  separator();
  out_ += std::to_string(v);
}

void JsonWriter::value(bool v) {
  separator();
  out_ += v ? "true" : "false";
}

void JsonWriter::value(std::string_view v) {
  separator();
  out_ += '"';
  out_ += json_escape(v);
  out_ += '"';
}

void JsonWriter::value_raw(std::string_view json) {
  separator();
  out_ += json;
}

std::string json_escape(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

HFunctionSpec spec_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::parse_error, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object())
    raise(ErrorCode::parse_error, "spec must be a JSON object");
  for (const char* field : {"m", "n", "upper", "lower"}) {
    if (!doc.contains(field))
      raise(ErrorCode::parse_error,
            std::string("spec is missing field \"") + field + "\"");
  }
  HFunctionSpec spec;
  try {
    spec.m = doc.at("m").get<int>();
    spec.n = doc.at("n").get<int>();
    auto read_list = [](const nlohmann::json& arr, const char* name) {
      if (!arr.is_array())
        raise(ErrorCode::parse_error,
              std::string("spec field \"") + name + "\" must be an array");
      std::vector<ParamPair> list;
      for (const auto& row : arr) {
        if (!row.is_array() || row.size() != 3)
          raise(ErrorCode::parse_error,
                std::string("each \"") + name +
                    "\" entry must be [re, im, weight]");
        ParamPair pr;
        pr.coeff = {row[0].get<double>(), row[1].get<double>()};
        pr.weight = row[2].get<double>();
        list.push_back(pr);
      }
      return list;
    };
    spec.upper = read_list(doc.at("upper"), "upper");
    spec.lower = read_list(doc.at("lower"), "lower");
  } catch (const nlohmann::json::exception& e) {
    raise(ErrorCode::parse_error, std::string("malformed spec: ") + e.what());
  }
  return validate(std::move(spec));
}

std::string spec_to_json(const HFunctionSpec& spec) {
  JsonWriter w;
  w.begin_object();
  w.key("m");
  w.value(spec.m);
  w.key("n");
  w.value(spec.n);
  for (const auto* side : {&spec.upper, &spec.lower}) {
    w.key(side == &spec.upper ? "upper" : "lower");
    w.begin_array();
    for (const auto& pr : *side) {
      w.begin_array();
      w.value(pr.coeff.real());
      w.value(pr.coeff.imag());
      w.value(pr.weight);
      w.end_array();
    }
    w.end_array();
  }
  w.end_object();
  return w.str();
}

std::string verification_report_to_json(const VerificationReport& report,
                                        const IdentityCase& c) {
  JsonWriter w;
  w.begin_object();
  w.key("identity");
  w.value(identity_name(report.id));
  w.key("params");
  w.begin_object();
  w.key("alpha");
  w.value(c.params.alpha);
  w.key("beta");
  w.value(c.params.beta);
  w.key("lambda");
  w.value(c.params.lambda);
  w.key("delta");
  w.value(c.params.delta);
  w.key("base");
  w.value_raw(spec_to_json(c.params.base));
  w.end_object();
  w.key("lhs_terms");
  w.value(static_cast<int>(c.lhs.size()));
  w.key("rhs_terms");
  w.value(static_cast<int>(c.rhs.size()));
  w.key("tolerance");
  w.value(report.tolerance);
  w.key("note");
  w.value(report.note);
  w.key("pass");
  w.value(report.pass);
  w.key("samples");
  w.begin_array();
  for (const auto& s : report.samples) {
    w.begin_object();
    w.key("modulus");
    w.value(s.z.modulus);
    w.key("phase");
    w.value(s.z.phase);
    w.key("ok");
    w.value(s.ok);
    w.key("error");
    w.value(s.error);
    w.key("lhs_re");
    w.value(s.lhs.real());
    w.key("lhs_im");
    w.value(s.lhs.imag());
    w.key("rhs_re");
    w.value(s.rhs.real());
    w.key("rhs_im");
    w.value(s.rhs.imag());
    w.key("abs_residual");
    w.value(s.abs_residual);
    w.key("rel_residual");
    w.value(s.rel_residual);
    w.key("lhs_error_estimate");
    w.value(s.lhs_error_estimate);
    w.key("rhs_error_estimate");
    w.value(s.rhs_error_estimate);
    w.key("terms");
    w.begin_array();
    for (const auto& t : s.terms) {
      w.begin_object();
      w.key("side");
      w.value(t.side);
      w.key("index");
      w.value(t.index);
      w.key("prefactor_re");
      w.value(t.prefactor.real());
      w.key("prefactor_im");
      w.value(t.prefactor.imag());
      w.key("phase_shift");
      w.value(t.phase_shift);
      w.key("value_re");
      w.value(t.value.real());
      w.key("value_im");
      w.value(t.value.imag());
      w.key("error_estimate");
      w.value(t.error_estimate);
      w.key("nodes");
      w.value(t.nodes);
      w.end_object();
    }
    w.end_array();
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

std::string gamma_report_to_json(const GammaCheckReport& report) {
  JsonWriter w;
  w.begin_object();
  w.key("seed");
  w.value(static_cast<unsigned long long>(report.seed));
  w.key("count");
  w.value(report.count);
  w.key("pass");
  w.value(report.pass);
  w.key("checks");
  w.begin_array();
  for (const auto& item : report.checks) {
    w.begin_object();
    w.key("name");
    w.value(item.name);
    w.key("count");
    w.value(item.count);
    w.key("tolerance");
    w.value(item.tolerance);
    w.key("worst");
    w.value(item.worst);
    w.key("worst_at_re");
    w.value(item.worst_at.real());
    w.key("worst_at_im");
    w.value(item.worst_at.imag());
    w.key("pass");
    w.value(item.pass);
    w.end_object();
  }
  w.end_array();
  w.end_object();
  return w.str();
}

}  // namespace foxh
