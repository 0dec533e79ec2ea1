#pragma once

#include <string>

#include <json.hpp>

#include "rhsinv/surgery.hpp"

namespace rhsinv::io {

using nlohmann::json;

// Rationals travel as strings "num/den" (reduced, positive denominator);
// plain integers "n" are accepted on input.
Rational rational_from_json(const json& j);
std::string rational_str(const Rational& r);

// Grid fixture schema:
// {"N":int, "class":"ASL|SASL|BL", "order":int,
//  "entries":[{"m":int,"n":int,"multi":[int..],"value":"num/den"}..]}
jones::JonesGrid grid_from_json(const json& j);
json grid_to_json(const jones::JonesGrid& g);

struct PresentationFile {
    surgery::SurgeryPresentation presentation;
    int n_max = 1;
};

// Presentation schema:
// {"class":.., "components":[{"p":..,"q":..,"framing":..}..], "linking":[[..]],
//  "milnor":{"triples":[[i,j,k,v]..],"quartic_pairs":[[i,j,v]..]},
//  "phi1":{"singles":[..],"pairs":[[i,j,v]..],"triples":[[i,j,k,v]..]},
//  "jones_fixture": "path" | {inline grid}, "n_max":int}
// Component indices are 0-based. Without a fixture the grid defaults to the
// phi_1-determined low-order grid.
PresentationFile presentation_from_json(const json& j, const std::string& base_dir);
PresentationFile load_presentation(const std::string& path);

json invariants_to_json(const surgery::RhsInvariants& inv);
json surgery_output_json(const surgery::RhsInvariants& inv, const Rational& delta_fr,
                         const std::vector<Rational>& delta);

json load_json_file(const std::string& path);

}  // namespace rhsinv::io
