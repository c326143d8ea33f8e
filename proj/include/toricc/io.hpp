#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "toricc/hypersurface.hpp"
#include "toricc/polytope.hpp"
#include "toricc/symprod.hpp"

namespace toricc {

using json = nlohmann::ordered_json;

// Fan files carry the rank, the ray list, and the maximal cones; faces are
// closed up on load. Numbers may be JSON integers or exact decimal strings;
// output always uses strings.
FanPtr fan_from_json(const json& j);
json fan_to_json(const Fan& fan);

Polytope polytope_from_json(const json& j);
json polytope_to_json(const Polytope& p);

HodgeTable hodge_table_from_json(const json& j);

struct StrataFile {
    std::optional<GenusPoly> actual_chi;
    std::vector<StratumDatum> strata;
};
StrataFile strata_from_json(const json& j);

json read_json_file(const std::string& path); // throws input_error

// Expression parser for exact polynomial literals over the variables
// y, x, z: integers, rationals "p/q", + - * ^ and parentheses,
// e.g. "1+y*x" or "-3/2*y^2".
ZPolynomial parse_poly(const std::string& text);
EPolynomial parse_epoly(const std::string& text);   // rejects z
GenusPoly parse_genus_poly(const std::string& text); // rejects x and z

std::string cone_key(const Fan& fan, ConeId id); // "{0,2}" ray-index label
json cycle_class_to_json(const CycleClass& c);
std::string cycle_class_to_text(const CycleClass& c, int indent = 2);

} // namespace toricc
