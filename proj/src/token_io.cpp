#include "graphtok/token_io.hpp"

#include <cstdio>

namespace graphtok {

std::string format_double(double x, int significant_digits) {
  if (x == 0.0) x = 0.0;  // folds -0 into 0
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", significant_digits, x);
  return buf;
}

std::string tokens_to_csv(const TokenMatrix& t, int significant_digits) {
  std::string out = "node";
  for (int c = 0; c < t.width(); ++c) out += ",c" + std::to_string(c);
  out += "\n";
  for (int r = 0; r < t.rows(); ++r) {
    out += std::to_string(r);
    for (int c = 0; c < t.width(); ++c) {
      out += ",";
      out += format_double(t.tokens(r, c), significant_digits);
    }
    out += "\n";
  }
  return out;
}

nlohmann::ordered_json tokens_sidecar(const TokenMatrix& t) {
  nlohmann::ordered_json j;
  j["family"] = to_string(t.family);
  j["rows"] = t.rows();
  j["width"] = t.width();
  nlohmann::ordered_json p = nlohmann::ordered_json::object();
  const TokenParams& tp = t.params;
  if (t.family == TokenFamily::spectral) {
    p["level"] = tp.level ? nlohmann::ordered_json(*tp.level) : nlohmann::ordered_json("full");
    if (tp.laplacian_kind) p["laplacian"] = to_string(*tp.laplacian_kind);
    if (tp.which) p["which"] = to_string(*tp.which);
    p["drop_trivial"] = tp.drop_trivial;
  }
  if (tp.walk_length) p["t"] = *tp.walk_length;
  if (tp.projection_dim) p["d_tr"] = *tp.projection_dim;
  if (tp.projection_seed) p["seed"] = *tp.projection_seed;
  if (!tp.parts.empty()) {
    auto parts = nlohmann::ordered_json::array();
    for (TokenFamily f : tp.parts) parts.push_back(to_string(f));
    p["parts"] = std::move(parts);
  }
  if (tp.padded_width) p["padded_width"] = *tp.padded_width;
  j["params"] = std::move(p);
  return j;
}

}  // namespace graphtok
