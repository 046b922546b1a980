#pragma once

#include <string>

#include <json.hpp>

#include "ebnoise/amendable.hpp"
#include "ebnoise/gaussian1m.hpp"
#include "ebnoise/nc_result.hpp"
#include "ebnoise/noise_measures.hpp"
#include "ebnoise/qubit_channels.hpp"

namespace ebnoise {

using json = nlohmann::json;

/// {"kind":"unital","t":[9]} | {"kind":"gad","p":..,"gamma":..} |
/// {"kind":"kraus","ops":[[[re,im] x4] x k]}. Schema errors raise ParseError,
/// domain violations InvariantError.
Channel channel_from_json(const json& j);
json channel_to_json(const Channel& c);

/// {"family":"attenuation"|"amplification","k":..,"n0":..}
gaussian::IsoChannel iso_from_json(const json& j);
json iso_to_json(const gaussian::IsoChannel& c);

/// A Gaussian document carries "family" instead of "kind".
bool is_gaussian_document(const json& j);

/// Integer order or "exceeds_cap".
json nc_to_json(const NcResult& r);

/// {"mu_c":..,"n_c":..,"cap":..,"ebn":[..]}
json report_to_json(const NoiseReport& r, int cap);

/// {"base_nc":..,"filtered_nc":..,"filter":{"kind":..,"params":[..]},"amendable":..}
json amend_to_json(const AmendReport& r);

/// Parses text, wrapping nlohmann parse failures in ParseError.
json parse_json(const std::string& text);

/// Rounds to six significant digits.
double round6(double x);

}  // namespace ebnoise
