/*
   Copyright 2026 The cering authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "cering/io.hpp"

#include <json.hpp>

#include <sstream>

namespace cering {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json field_json(const FieldSpec& f) {
  ordered_json j;
  if (f.is_rationals()) {
    j["kind"] = "Q";
  } else {
    j["kind"] = "Fp";
    j["p"] = f.prime().str();
  }
  return j;
}

ordered_json module_json(const ModuleSummary& m, bool finite) {
  ordered_json j;
  j["dim"] = m.rows;
  if (finite) j["order"] = m.order;
  return j;
}

Int parse_int_field(const ordered_json& j, const std::string& what) {
  try {
    if (j.is_string()) return Int(j.get<std::string>());
    if (j.is_number_integer()) return Int(j.get<long long>());
  } catch (const std::exception&) {
  }
  throw ParseError(what + ": expected an integer or integer string");
}

}  // namespace

std::string to_json(const Algebra& a) {
  ordered_json j;
  j["field"] = field_json(a.field());
  j["dim"] = a.dim();
  j["basis"] = a.basis_names();
  ordered_json one = ordered_json::array();
  for (const Scalar& c : a.one_coords()) one.push_back(c.str());
  j["one"] = one;
  ordered_json mul = ordered_json::array();
  for (const MulTerm& t : a.table())
    mul.push_back(ordered_json::array({t.i, t.j, t.k, t.c.str()}));
  j["mul"] = mul;
  return j.dump(2) + "\n";
}

std::string to_json(const FiniteRing& r) {
  ordered_json j;
  ordered_json field;
  field["kind"] = "Zm";
  ordered_json moduli = ordered_json::array();
  for (const Int& m : r.moduli()) moduli.push_back(m.str());
  field["moduli"] = moduli;
  j["field"] = field;
  j["dim"] = r.generator_count();
  j["basis"] = r.names();
  ordered_json one = ordered_json::array();
  for (const Int& c : r.one_coords()) one.push_back(c.str());
  j["one"] = one;
  ordered_json mul = ordered_json::array();
  for (const RingMulTerm& t : r.table())
    mul.push_back(ordered_json::array({t.i, t.j, t.k, t.t.str()}));
  j["mul"] = mul;
  return j.dump(2) + "\n";
}

LoadedRing ring_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("top level: expected an object");
  for (const char* key : {"field", "dim", "basis", "one", "mul"})
    if (!j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  if (!j["field"].is_object() || !j["field"].contains("kind"))
    throw ParseError("field: expected an object with 'kind'");
  std::string kind;
  try {
    kind = j["field"]["kind"].get<std::string>();
  } catch (const std::exception&) {
    throw ParseError("field.kind: expected a string");
  }
  int dim;
  try {
    dim = j["dim"].get<int>();
  } catch (const std::exception&) {
    throw ParseError("dim: expected an integer");
  }
  if (dim <= 0) throw ParseError("dim: must be positive");
  if (!j["basis"].is_array() || static_cast<int>(j["basis"].size()) != dim)
    throw ParseError("basis: expected an array of length dim");
  std::vector<std::string> names;
  for (const auto& n : j["basis"]) {
    if (!n.is_string()) throw ParseError("basis: names must be strings");
    names.push_back(n.get<std::string>());
  }
  if (!j["one"].is_array() || static_cast<int>(j["one"].size()) != dim)
    throw ParseError("one: expected an array of length dim");
  if (!j["mul"].is_array()) throw ParseError("mul: expected an array");

  auto term_indices = [&](const ordered_json& e, int& i, int& jx, int& k) {
    if (!e.is_array() || e.size() != 4)
      throw ParseError("mul: each entry must be [i, j, k, coefficient]");
    try {
      i = e[0].get<int>();
      jx = e[1].get<int>();
      k = e[2].get<int>();
    } catch (const std::exception&) {
      throw ParseError("mul: indices must be integers");
    }
    if (i < 0 || i >= dim || jx < 0 || jx >= dim || k < 0 || k >= dim)
      throw ParseError("mul: index out of range");
  };
  auto coeff_string = [&](const ordered_json& e) -> std::string {
    if (e[3].is_string()) return e[3].get<std::string>();
    if (e[3].is_number_integer()) return std::to_string(e[3].get<long long>());
    throw ParseError("mul: coefficient must be a decimal string");
  };

  if (kind == "Q" || kind == "Fp") {
    FieldSpec f = FieldSpec::rationals();
    if (kind == "Fp") {
      if (!j["field"].contains("p")) throw ParseError("field: Fp needs 'p'");
      try {
        f = FieldSpec::prime_field(parse_int_field(j["field"]["p"], "field.p"));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }
    ScalarVec one;
    for (const auto& c : j["one"]) {
      if (!c.is_string()) throw ParseError("one: coordinates must be strings");
      try {
        one.push_back(Scalar::parse(f, c.get<std::string>()));
      } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
      }
    }
    std::vector<MulTerm> table;
    for (const auto& e : j["mul"]) {
      int i, jx, k;
      term_indices(e, i, jx, k);
      try {
        table.push_back({i, jx, k, Scalar::parse(f, coeff_string(e))});
      } catch (const std::invalid_argument& err) {
        throw ParseError(err.what());
      }
    }
    return Algebra(f, std::move(names), std::move(table), std::move(one));
  }
  if (kind == "Zm") {
    if (!j["field"].contains("moduli") || !j["field"]["moduli"].is_array())
      throw ParseError("field: Zm needs a 'moduli' array");
    IntVec moduli;
    for (const auto& m : j["field"]["moduli"])
      moduli.push_back(parse_int_field(m, "field.moduli"));
    if (static_cast<int>(moduli.size()) != dim)
      throw ParseError("field.moduli: length must equal dim");
    for (const Int& m : moduli)
      if (m <= 0) throw ParseError("field.moduli: entries must be positive");
    IntVec one;
    for (const auto& c : j["one"]) one.push_back(parse_int_field(c, "one"));
    std::vector<RingMulTerm> table;
    for (const auto& e : j["mul"]) {
      int i, jx, k;
      term_indices(e, i, jx, k);
      try {
        table.push_back({i, jx, k, Int(coeff_string(e))});
      } catch (const std::exception&) {
        throw ParseError("mul: bad integer coefficient");
      }
    }
    return FiniteRing(std::move(moduli), std::move(names), std::move(table),
                      std::move(one));
  }
  throw ParseError("field.kind: expected 'Q', 'Fp' or 'Zm', got '" + kind + "'");
}

std::string report_json(const CEReport& rep, const std::string& ring_name) {
  ordered_json j;
  j["ring"] = ring_name;
  j["decision"] = ce_decision_str(rep.decision);
  j["method"] = ce_method_str(rep.method);
  if (rep.witness_failure)
    j["witness_failure"] = *rep.witness_failure;
  else
    j["witness_failure"] = nullptr;
  ordered_json crit;
  crit["quotient_commutative"] = tri_str(rep.criteria.quotient_commutative);
  crit["socles_equal"] = tri_str(rep.criteria.socles_equal);
  crit["socle_in_center"] = tri_str(rep.criteria.socle_in_center);
  crit["min_ideals_meet_center"] = tri_str(rep.criteria.min_ideals_meet_center);
  if (!rep.criteria.note.empty()) crit["note"] = rep.criteria.note;
  j["criteria"] = crit;
  const InvariantSummary& inv = rep.invariants;
  ordered_json ji;
  ji["ambient"] = inv.ambient;
  if (!inv.ring_order.empty()) ji["ring_order"] = inv.ring_order;
  ji["commutative"] = inv.commutative;
  ji["semiprime"] = inv.semiprime;
  ji["local"] = tri_str(inv.local);
  ji["quotient_commutative"] = inv.quotient_commutative;
  ji["center"] = module_json(inv.center, inv.finite);
  ji["radical"] = module_json(inv.radical, inv.finite);
  ji["center_radical"] = module_json(inv.center_radical, inv.finite);
  ji["socle_right"] = module_json(inv.socle_right, inv.finite);
  ji["socle_central"] = module_json(inv.socle_central, inv.finite);
  j["invariants"] = ji;
  if (!rep.undecided_reason.empty()) j["undecided_reason"] = rep.undecided_reason;
  return j.dump(2) + "\n";
}

std::string report_text(const CEReport& rep, const std::string& ring_name) {
  std::ostringstream os;
  os << "ring: " << ring_name << "\n";
  os << "centrally essential: " << ce_decision_str(rep.decision) << " (method: "
     << ce_method_str(rep.method) << ")\n";
  if (!rep.undecided_reason.empty())
    os << "  reason: " << rep.undecided_reason << "\n";
  if (rep.witness_failure) {
    os << "witness (a with aC ∩ C = 0): (";
    for (std::size_t i = 0; i < rep.witness_failure->size(); ++i)
      os << (i ? "," : "") << (*rep.witness_failure)[i];
    os << ")\n";
  }
  const InvariantSummary& inv = rep.invariants;
  auto mod = [&](const ModuleSummary& m) {
    std::string s = "dim " + std::to_string(m.rows);
    if (inv.finite) s += " (order " + m.order + ")";
    return s;
  };
  if (!inv.ring_order.empty()) os << "ring order: " << inv.ring_order << "\n";
  os << "commutative: " << (inv.commutative ? "yes" : "no") << "\n";
  os << "semiprime: " << (inv.semiprime ? "yes" : "no") << "\n";
  os << "local: " << tri_str(inv.local) << "\n";
  os << "center: " << mod(inv.center) << "\n";
  os << "radical: " << mod(inv.radical) << "\n";
  os << "center ∩ radical: " << mod(inv.center_radical) << "\n";
  os << "right socle: " << mod(inv.socle_right) << "\n";
  os << "socle over center: " << mod(inv.socle_central) << "\n";
  os << "criteria: R/J commutative = " << tri_str(rep.criteria.quotient_commutative)
     << ", socles equal = " << tri_str(rep.criteria.socles_equal)
     << ", socle in center = " << tri_str(rep.criteria.socle_in_center)
     << ", minimal right ideals meet center = "
     << tri_str(rep.criteria.min_ideals_meet_center) << "\n";
  if (!rep.criteria.note.empty()) os << "  note: " << rep.criteria.note << "\n";
  return os.str();
}

}  // namespace cering
