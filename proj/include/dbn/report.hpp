#ifndef DBN_REPORT_HPP
#define DBN_REPORT_HPP

#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "dbn/lfunction.hpp"
#include "dbn/newman.hpp"

namespace dbn {

inline constexpr std::string_view kVersion = "1.0.0";

/// 12 significant digits; "-inf" / "inf" / "nan" sentinels.
inline std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v < 0 ? "-inf" : "inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

/// A JSON number rounded to 12 significant digits, or the sentinel string.
inline nlohmann::json json_double(double v) {
  if (!std::isfinite(v)) return format_double(v);
  return std::stod(format_double(v));
}

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline nlohmann::json to_json(const LFunction& L) {
  nlohmann::json j;
  j["q"] = L.q();
  j["D"] = L.discriminant() ? L.discriminant()->to_string() : std::string();
  j["g"] = L.genus();
  j["c"] = std::vector<std::int64_t>(L.c().begin(), L.c().end());
  auto& phi = j["phi"] = nlohmann::json::array();
  for (double v : L.phi()) phi.push_back(json_double(v));
  return j;
}

inline nlohmann::json to_json(const ZeroSet& z) {
  nlohmann::json j;
  j["t"] = json_double(z.t);
  auto& gammas = j["gammas"] = nlohmann::json::array();
  for (double v : z.gammas) gammas.push_back(json_double(v));
  auto& nonreal = j["nonreal"] = nlohmann::json::array();
  for (auto x : z.nonreal) nonreal.push_back({json_double(x.real()), json_double(x.imag())});
  j["zero_count"] = z.zeros.size();
  j["delta"] = json_double(z.delta);
  return j;
}

inline nlohmann::json to_json(const NewmanEstimate& e) {
  nlohmann::json j;
  j["kind"] = std::string(to_string(e.kind));
  j["value"] = e.has_value() ? json_double(e.value) : nlohmann::json(nullptr);
  if (e.bracket) {
    j["bracket"] = {json_double(e.bracket->first), json_double(e.bracket->second)};
  } else {
    j["bracket"] = nullptr;
  }
  j["tol"] = json_double(e.tol);
  j["notes"] = e.method_notes;
  return j;
}

inline nlohmann::json to_json(const StoppleData& s) {
  nlohmann::json j;
  auto& gamma = j["gamma"] = nlohmann::json::array();
  for (double v : s.gamma) gamma.push_back(json_double(v));
  auto& gt = j["gamma_tilde"] = nlohmann::json::array();
  for (double v : s.gamma_tilde) gt.push_back(json_double(v));
  j["G"] = json_double(s.G);
  j["condition_ok"] = s.condition_ok;
  j["bound"] = s.bound ? json_double(*s.bound) : nlohmann::json(nullptr);
  return j;
}

}  // namespace dbn

#endif  // DBN_REPORT_HPP
