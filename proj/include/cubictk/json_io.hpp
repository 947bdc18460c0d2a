#pragma once
// JSON bridges for the command line front end. everything exact: big
// integers and rationals travel as decimal strings ("num" or "num/den"),
// never as floats.

#include "cubictk/classgroup.hpp"
#include "cubictk/cubic.hpp"
#include "cubictk/rroch.hpp"

#include "json.hpp"

namespace ctk {

using Json = nlohmann::json;

// accepts a JSON number or a decimal string
Int int_from_json(const Json& j);
Json int_to_json(const Int& v);  // string when it does not fit a long

Json group_to_json(const AbGroup& g);
AbGroup group_from_json(const Json& j);

Json char_to_json(const GChar& c);
GChar char_from_json(const AbGroup& g, const Json& j);

Json intvec_to_json(const std::vector<Int>& v);
std::vector<Int> intvec_from_json(const Json& j);

Json ideal_to_json(const CycIdeal& I);
CycIdeal ideal_from_json(const Json& j);

// character table over base^n given as a list of {"character", "value"}
// rows, the value a {"root_order", "coeffs"} cyclotomic number. every
// character of base^n must appear exactly once.
CharTable table_from_json(const AbGroup& base, long n, const Json& j);
Json table_to_json(const CharTable& t);

// branch data schema: {"group", "d", "residue_prime", "components": [...],
// "cross_intersections": [[i, j, v], ...]} with per component name,
// inertia_order, inertia_generator_exponent, self_intersection, euler_char
// and optionally an explicit inertia_generator coordinate list (defaults to
// the canonical subgroup generator of a cyclic group)
BranchData branch_from_json(const Json& j);
Json branch_to_json(const BranchData& bd);

// report goes to stdout with sorted keys; the wall clock figure goes to
// stderr so identical inputs keep byte-identical stdout
void emit_report(const Json& report, long wall_ms);

Json load_json_file(const std::string& path);

}  // namespace ctk
