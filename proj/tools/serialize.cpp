#include "serialize.hpp"

namespace gsp4h::cli {

json to_json(const ValidityReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json j{{"name", c.name}, {"pass", c.pass}};
    if (!c.witness.empty()) j["witness"] = c.witness;
    checks.push_back(j);
  }
  return json{{"valid", r.ok()}, {"checks", checks}};
}

json to_json(const AdmissibilityReport& r) {
  json j{{"admissible", r.admissible},
         {"newton_total", r.newton_total.to_string()},
         {"hodge_total", r.hodge_total.to_string()}};
  if (!r.witness.empty()) j["failing_subset"] = r.witness;
  return j;
}

json to_json(const QpChar& c) {
  return json{{"unit_coeff", c.coeff().to_string()},
              {"p_exponent", c.pexp().to_string()},
              {"z_exponent", c.alg().to_string()},
              {"text", c.to_string()}};
}

json to_json(const TChar& t) {
  return json{{"p1", to_json(t[0])}, {"p2", to_json(t[1])}, {"p3", to_json(t[2])}};
}

json to_json(const LedgerReport& r) {
  json entries = json::array();
  for (const auto& e : r.entries)
    entries.push_back({{"name", e.name}, {"dim", e.dim}, {"expected", e.expected}, {"source", e.source}, {"pass", e.pass()}});
  json seqs = json::array();
  for (const auto& s : r.sequences)
    seqs.push_back({{"name", s.name}, {"identity", s.identity}, {"lhs", s.lhs}, {"rhs", s.rhs}, {"pass", s.pass()}});
  return json{{"consistent", r.ok()}, {"entries", entries}, {"sequences", seqs}};
}

json to_json(const SocleDiagram& d) {
  json layers = json::array();
  for (const auto& l : d.layers) {
    json layer = json::array();
    for (const auto& c : l) layer.push_back(c.to_string());
    layers.push_back(layer);
  }
  return json{{"name", d.name}, {"layers", layers}};
}

json to_json(const FrobeniusData& f) {
  json c = json::array();
  for (const auto& x : f.coeffs) c.push_back(x.to_string());
  return json{{"coeffs", c}, {"sim", f.sim.to_string()}, {"text", f.to_string()}};
}

json to_json(const HeckeData& d) {
  return json{{"l", d.l}, {"c0", d.c0.to_string()}, {"c1", d.c1.to_string()}, {"c2", d.c2.to_string()}};
}

json to_json(const ClassifyReport& r) {
  auto bounds = [](const std::vector<BoundCheck>& bs) {
    json a = json::array();
    for (const auto& b : bs) a.push_back({{"i", b.i}, {"value", b.value.to_string()}, {"pass", b.pass}});
    return a;
  };
  json gaps = json::array();
  for (const auto& g : r.gaps) gaps.push_back({{"i", g.i}, {"gap", g.gap}, {"pass", g.pass}});
  json ws = json::array();
  for (const auto& w : r.w_set) ws.push_back(w.word());
  return json{{"C", r.C.to_string()},
              {"gap_bound", r.gap_bound.to_string()},
              {"bounds_pass", r.bounds_pass()},
              {"bounds", bounds(r.bounds)},
              {"bounds_literal_alpha1", bounds(r.bounds_literal)},
              {"readings_differ", r.readings_differ},
              {"gaps_pass", r.gaps_pass()},
              {"gaps", gaps},
              {"admissible", r.admissible},
              {"w_set", ws},
              {"very_classical", r.very_classical}};
}

const json& require(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
  return doc.at(key);
}

long get_long(const json& doc, const char* key) {
  const json& v = require(doc, key);
  if (v.is_number_integer()) return v.get<long>();
  if (v.is_string()) return Rational::parse(v.get<std::string>()).to_long();
  throw Error(ErrorKind::ParseError, std::string("field '") + key + "' must be an integer");
}

std::string get_scalar_string(const json& v, const char* what) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long>());
  throw Error(ErrorKind::ParseError, std::string(what) + ": scalars must be strings or integers");
}

Rational get_rational(const json& v, const char* what) { return Rational::parse(get_scalar_string(v, what)); }

Alphas get_alphas(const json& doc) {
  const json& a = require(doc, "alphas");
  if (!a.is_array() || a.size() != 4) throw Error(ErrorKind::ParseError, "alphas must be 4 scalars");
  Alphas out;
  for (size_t i = 0; i < 4; ++i) out[i] = get_rational(a[i], "alphas");
  return out;
}

HodgeWeights get_weights(const json& doc) {
  const json& h = require(doc, "weights");
  if (!h.is_array() || h.size() != 4) throw Error(ErrorKind::ParseError, "weights must be 4 integers");
  HodgeWeights out{};
  for (size_t i = 0; i < 4; ++i) {
    if (h[i].is_number_integer()) out[i] = h[i].get<long>();
    else if (h[i].is_string()) out[i] = Rational::parse(h[i].get<std::string>()).to_long();
    else throw Error(ErrorKind::ParseError, "weights must be integers");
  }
  return out;
}

}  // namespace gsp4h::cli
