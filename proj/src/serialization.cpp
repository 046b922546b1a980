#include "ebnoise/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "ebnoise/errors.hpp"

namespace ebnoise {

namespace {

double number(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  const auto& v = j.at(key);
  if (!v.is_number()) throw ParseError(std::string("field \"") + key + "\" must be a number");
  return v.get<double>();
}

std::string string_field(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_string()) {
    throw ParseError(std::string("missing string field \"") + key + "\"");
  }
  return j.at(key).get<std::string>();
}

Mat2c op_from_json(const json& op) {
  if (!op.is_array() || op.size() != 4) throw ParseError("Kraus operator must list 4 [re,im] entries");
  Mat2c m;
  for (int i = 0; i < 4; ++i) {
    const auto& e = op.at(i);
    if (!e.is_array() || e.size() != 2 || !e.at(0).is_number() || !e.at(1).is_number()) {
      throw ParseError("Kraus entry must be [re, im]");
    }
    m(i / 2, i % 2) = cplx(e.at(0).get<double>(), e.at(1).get<double>());
  }
  return m;
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

Channel channel_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("channel document must be a JSON object");
  const std::string kind = string_field(j, "kind");
  if (kind == "unital") {
    if (!j.contains("t") || !j.at("t").is_array() || j.at("t").size() != 9) {
      throw ParseError("unital channel needs \"t\" with 9 numbers");
    }
    RealMat3 t;
    for (int i = 0; i < 9; ++i) {
      const auto& v = j.at("t").at(i);
      if (!v.is_number()) throw ParseError("unital entries must be numbers");
      t(i / 3, i % 3) = v.get<double>();
    }
    return UnitalChannel(t);
  }
  if (kind == "gad") return GadParams(number(j, "p"), number(j, "gamma"));
  if (kind == "kraus") {
    if (!j.contains("ops") || !j.at("ops").is_array() || j.at("ops").empty()) {
      throw ParseError("kraus channel needs a non-empty \"ops\" array");
    }
    std::vector<Mat2c> ops;
    for (const auto& op : j.at("ops")) ops.push_back(op_from_json(op));
    return KrausChannel(std::move(ops));
  }
  throw ParseError("unknown channel kind \"" + kind + "\"");
}

json channel_to_json(const Channel& c) {
  if (const auto* u = std::get_if<UnitalChannel>(&c)) {
    json t = json::array();
    for (int i = 0; i < 9; ++i) t.push_back(u->t()(i / 3, i % 3));
    return {{"kind", "unital"}, {"t", t}};
  }
  if (const auto* g = std::get_if<GadParams>(&c)) return {{"kind", "gad"}, {"p", g->p}, {"gamma", g->gamma}};
  json ops = json::array();
  for (const auto& e : std::get<KrausChannel>(c).ops()) {
    json op = json::array();
    for (int i = 0; i < 4; ++i) op.push_back({e(i / 2, i % 2).real(), e(i / 2, i % 2).imag()});
    ops.push_back(op);
  }
  return {{"kind", "kraus"}, {"ops", ops}};
}

bool is_gaussian_document(const json& j) { return j.is_object() && j.contains("family"); }

gaussian::IsoChannel iso_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("Gaussian channel document must be a JSON object");
  const std::string family = string_field(j, "family");
  gaussian::Family f;
  if (family == "attenuation") {
    f = gaussian::Family::Attenuation;
  } else if (family == "amplification") {
    f = gaussian::Family::Amplification;
  } else {
    throw ParseError("unknown Gaussian family \"" + family + "\"");
  }
  return gaussian::IsoChannel(f, number(j, "k"), number(j, "n0"));
}

json iso_to_json(const gaussian::IsoChannel& c) {
  return {{"family", gaussian::family_name(c.family)}, {"k", c.k}, {"n0", c.n0}};
}

json nc_to_json(const NcResult& r) {
  if (r.is_finite()) return r.value();
  return "exceeds_cap";
}

double round6(double x) {
  if (x == 0.0 || !std::isfinite(x)) return x;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return std::strtod(buf, nullptr);
}

json report_to_json(const NoiseReport& r, int cap) {
  json ebn = json::array();
  for (bool b : r.ebn) ebn.push_back(b);
  json out = {{"mu_c", round6(r.mu_c)}, {"n_c", nc_to_json(r.n_c)}, {"cap", cap}, {"ebn", ebn}};
  if (r.n_c.divergent()) out["divergent"] = true;
  if (r.restart_disagreement) out["restart_disagreement"] = true;
  return out;
}

json amend_to_json(const AmendReport& r) {
  json params = json::array();
  for (double v : r.filter.params()) params.push_back(round6(v));
  return {{"base_nc", nc_to_json(r.base_nc)},
          {"filtered_nc", nc_to_json(r.filtered_nc)},
          {"filter", {{"kind", r.filter.kind_name()}, {"params", params}}},
          {"amendable", r.amendable}};
}

}  // namespace ebnoise
