#include "cubictk/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <utility>

namespace ctk {

namespace {

long jlong(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw input_error(std::string("expected an integer for ") + what);
  return j.get<long>();
}

std::vector<long> jlongvec(const Json& j, const char* what) {
  if (!j.is_array()) throw input_error(std::string("expected an array for ") + what);
  std::vector<long> v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(jlong(x, what));
  return v;
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw input_error("expected an integer or a \"num/den\" string");
}

std::string jstring(const Json& j, const char* what) {
  if (!j.is_string()) throw input_error(std::string("expected a string for ") + what);
  return j.get<std::string>();
}

}  // namespace

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw input_error("bad integer literal: " + j.get<std::string>());
    }
  }
  throw input_error("expected an integer or a decimal string");
}

Json int_to_json(const Int& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

Json group_to_json(const AbGroup& g) {
  return Json{{"invariant_factors", g.factors()}};
}

AbGroup group_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("invariant_factors"))
    throw input_error("group needs an invariant_factors list");
  return AbGroup::invariant_factors(jlongvec(j["invariant_factors"], "invariant_factors"));
}

Json char_to_json(const GChar& c) {
  return Json{{"exponents", c.e}};
}

GChar char_from_json(const AbGroup& g, const Json& j) {
  std::vector<long> e;
  if (j.is_array()) e = jlongvec(j, "exponents");
  else if (j.is_object() && j.contains("exponents")) e = jlongvec(j["exponents"], "exponents");
  else throw input_error("character needs an exponents list");
  if (e.size() != g.ngens())
    throw input_error("character exponent count does not match the group");
  for (size_t i = 0; i < e.size(); i++) e[i] = lmod(e[i], g.factors()[i]);
  return GChar{g.factors(), e};
}

Json intvec_to_json(const std::vector<Int>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_to_json(x));
  return a;
}

std::vector<Int> intvec_from_json(const Json& j) {
  if (!j.is_array()) throw input_error("expected an integer array");
  std::vector<Int> v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

Json ideal_to_json(const CycIdeal& I) {
  Json rows = Json::array();
  for (const auto& row : I.h) rows.push_back(intvec_to_json(row));
  return Json{{"r", I.r}, {"hnf", rows}, {"norm", int_to_json(I.nrm)}};
}

CycIdeal ideal_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("r") || !j.contains("hnf"))
    throw input_error("ideal needs r and hnf fields");
  long r = jlong(j["r"], "r");
  if (!j["hnf"].is_array() || j["hnf"].empty())
    throw input_error("ideal needs at least one hnf row");
  std::vector<CycInt> gens;
  for (const auto& row : j["hnf"]) {
    auto c = intvec_from_json(row);
    if (c.size() != size_t(r - 1)) throw input_error("hnf row length must be r - 1");
    gens.push_back(cyc_from_coords(r, std::move(c)));
  }
  return ideal_from_gens(r, gens);
}

CharTable table_from_json(const AbGroup& base, long n, const Json& j) {
  if (!j.is_array() || j.empty()) throw input_error("character table must be a nonempty list");
  AbGroup bg = base.power(n);
  Int total = char_count(bg);
  if (total > 200000) throw input_error("character table too large to load");
  long nt = to_long(total);

  long m = 0;
  for (const auto& row : j) {
    if (!row.is_object() || !row.contains("value") || !row["value"].contains("root_order"))
      throw input_error("table row needs value.root_order");
    long rm = jlong(row["value"]["root_order"], "root_order");
    if (m == 0) m = rm;
    else if (m != rm) throw input_error("all table values must share one root_order");
  }
  if (m < 1 || m % bg.exponent() != 0)
    throw input_error("root_order must be a positive multiple of the group exponent");

  CharTable t = CharTable::ones(bg, m);
  std::vector<char> seen(size_t(nt), 0);
  for (const auto& row : j) {
    if (!row.contains("character")) throw input_error("table row needs a character");
    GChar chi = char_from_json(bg, row["character"]);
    long idx = to_long(char_index(bg, chi));
    if (seen[size_t(idx)]) throw input_error("duplicate character in table");
    seen[size_t(idx)] = 1;
    const Json& val = row["value"];
    if (!val.contains("coeffs") || !val["coeffs"].is_array())
      throw input_error("table value needs a coeffs list");
    std::vector<Rat> cs;
    for (const auto& c : val["coeffs"]) cs.push_back(rat_from_json(c));
    t.value_mut(chi) = CycF::from_poly(m, std::move(cs));
  }
  for (long i = 0; i < nt; i++)
    if (!seen[size_t(i)]) throw input_error("character table incomplete: missing characters");
  return t;
}

Json table_to_json(const CharTable& t) {
  Json rows = Json::array();
  Int total = char_count(t.group);
  for (Int i = 0; i < total; i++) {
    GChar chi = char_at(t.group, i);
    Json coeffs = Json::array();
    for (const auto& c : t.value(chi).coeffs()) coeffs.push_back(rat_str(c));
    rows.push_back(Json{{"character", char_to_json(chi)},
                        {"value", Json{{"root_order", t.m}, {"coeffs", coeffs}}}});
  }
  return rows;
}

BranchData branch_from_json(const Json& j) {
  if (!j.is_object()) throw input_error("branch data must be an object");
  BranchData bd;
  if (!j.contains("group")) throw input_error("branch data needs a group");
  bd.group = group_from_json(j["group"]);
  bd.d = j.contains("d") ? jlong(j["d"], "d") : 1;
  if (!j.contains("residue_prime")) throw input_error("branch data needs a residue_prime");
  bd.residue_prime = jlong(j["residue_prime"], "residue_prime");

  if (!j.contains("components") || !j["components"].is_array() || j["components"].empty())
    throw input_error("branch data needs a nonempty components list");
  for (const auto& c : j["components"]) {
    if (!c.is_object()) throw input_error("each component must be an object");
    BranchComponent bc;
    bc.name = c.contains("name") ? jstring(c["name"], "name")
                                 : "y" + std::to_string(bd.components.size());
    bc.inertia_order = c.contains("inertia_order") ? jlong(c["inertia_order"], "inertia_order") : 1;
    bc.phi_exponent = c.contains("inertia_generator_exponent")
                          ? jlong(c["inertia_generator_exponent"], "inertia_generator_exponent")
                          : 1;
    if (!c.contains("self_intersection") || !c.contains("euler_char"))
      throw input_error("component " + bc.name + " needs self_intersection and euler_char");
    bc.self_intersection = int_from_json(c["self_intersection"]);
    bc.euler_char = int_from_json(c["euler_char"]);
    if (bc.inertia_order > 1) {
      if (c.contains("inertia_generator")) {
        bc.inertia_gen = jlongvec(c["inertia_generator"], "inertia_generator");
      } else if (bd.group.ngens() == 1 && bd.group.factors()[0] % bc.inertia_order == 0) {
        bc.inertia_gen = {bd.group.factors()[0] / bc.inertia_order};
      } else {
        throw input_error("component " + bc.name +
                          ": inertia_generator is required unless the group is cyclic");
      }
    }
    bd.components.push_back(std::move(bc));
  }

  size_t nc = bd.components.size();
  bd.inter.assign(nc, std::vector<Int>(nc, 0));
  for (size_t i = 0; i < nc; i++) bd.inter[i][i] = bd.components[i].self_intersection;
  if (j.contains("cross_intersections")) {
    if (!j["cross_intersections"].is_array())
      throw input_error("cross_intersections must be a list of [i, j, v] triples");
    std::set<std::pair<size_t, size_t>> filled;
    for (const auto& e : j["cross_intersections"]) {
      if (!e.is_array() || e.size() != 3)
        throw input_error("cross_intersections entries are [i, j, v] triples");
      long a = jlong(e[0], "cross index");
      long b = jlong(e[1], "cross index");
      if (a < 0 || b < 0 || size_t(a) >= nc || size_t(b) >= nc)
        throw input_error("cross intersection component index out of range");
      if (a == b) throw input_error("diagonal entries belong in self_intersection");
      std::pair<size_t, size_t> key = std::minmax(size_t(a), size_t(b));
      if (!filled.insert(key).second) throw input_error("duplicate cross intersection entry");
      Int v = int_from_json(e[2]);
      bd.inter[size_t(a)][size_t(b)] = v;
      bd.inter[size_t(b)][size_t(a)] = v;
    }
  }

  if (j.contains("fiber_multiplicities"))
    bd.fiber_multiplicities = intvec_from_json(j["fiber_multiplicities"]);
  if (j.contains("usual_euler_char"))
    bd.usual_euler_char = int_from_json(j["usual_euler_char"]);

  branch_validate(bd);
  return bd;
}

Json branch_to_json(const BranchData& bd) {
  Json comps = Json::array();
  for (const auto& c : bd.components) {
    Json jc{{"name", c.name},
            {"inertia_order", c.inertia_order},
            {"inertia_generator_exponent", c.phi_exponent},
            {"self_intersection", int_to_json(c.self_intersection)},
            {"euler_char", int_to_json(c.euler_char)}};
    if (c.inertia_order > 1) jc["inertia_generator"] = c.inertia_gen;
    comps.push_back(std::move(jc));
  }
  Json cross = Json::array();
  for (size_t i = 0; i < bd.components.size(); i++)
    for (size_t k = i + 1; k < bd.components.size(); k++)
      if (bd.inter[i][k] != 0) cross.push_back(Json{i, k, int_to_json(bd.inter[i][k])});
  Json out{{"group", group_to_json(bd.group)},
           {"d", bd.d},
           {"residue_prime", bd.residue_prime},
           {"components", comps},
           {"cross_intersections", cross}};
  if (!bd.fiber_multiplicities.empty())
    out["fiber_multiplicities"] = intvec_to_json(bd.fiber_multiplicities);
  if (bd.usual_euler_char) out["usual_euler_char"] = int_to_json(*bd.usual_euler_char);
  return out;
}

void emit_report(const Json& report, long wall_ms) {
  std::cout << report.dump(2) << std::endl;
  std::cerr << "wall_ms " << wall_ms << std::endl;
}

Json load_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw input_error("cannot open " + path);
  try {
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw input_error(std::string("bad JSON in ") + path + ": " + e.what());
  }
}

}  // namespace ctk
