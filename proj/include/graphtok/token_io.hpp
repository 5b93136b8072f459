#pragma once

#include <string>

#include "json.hpp"

#include "graphtok/tokenizers.hpp"

namespace graphtok {

/// CSV with header `node,c0,c1,...` and one row per node. Values use
/// `significant_digits` digits (17 round-trips any double).
std::string tokens_to_csv(const TokenMatrix& t, int significant_digits = 17);

/// Sidecar describing the family, shape and parameters of a token matrix.
nlohmann::ordered_json tokens_sidecar(const TokenMatrix& t);

/// `%.*g` formatting; negative zero prints as 0.
std::string format_double(double x, int significant_digits = 17);

}  // namespace graphtok
