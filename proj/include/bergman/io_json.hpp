#pragma once

#include <string>

#include <json.hpp>

#include "bergman/geometry.hpp"
#include "bergman/moments.hpp"
#include "bergman/oracles.hpp"
#include "bergman/toeplitz.hpp"

namespace bergman::io {

using json = nlohmann::json;

/// Region wire format: {"kind": string, "params": {...}}, angles in radians
/// and complex numbers as [re, im] pairs.
json region_to_json(const geometry::SubregionSpec& region);
geometry::SubregionSpec region_from_json(const json& j);

json ambient_to_json(const geometry::AmbientDomain& ambient);
geometry::AmbientDomain ambient_from_json(const json& j);

/// "disc" | "ball:<n>" | "polydisc:<r1>,<r2>,..." or a JSON object.
geometry::AmbientDomain ambient_from_string(const std::string& text);

/// JSON region text, or one of the named shorthands: ideal-triangle,
/// horodisc:<rho>, strip:<rho1>,<rho2>, lune:<a>,<b> (normalized angles),
/// dilated:<rho>.
geometry::SubregionSpec region_from_string(const std::string& text);

json gram_to_json(const moments::GramMatrix& g);
json spectrum_to_json(const toeplitz::SpectrumEstimate& s);
/// Eigenvalue sequences are materialized to `sequence_terms` leading terms.
json oracle_to_json(const oracles::OracleResult& o, int sequence_terms = 16);

/// 17 significant digits, enough to round-trip a double exactly.
std::string format_double(double v);

}  // namespace bergman::io
