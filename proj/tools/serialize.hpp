#pragma once

#include <nlohmann/json.hpp>

#include "gsp4h/ext_ledger.hpp"
#include "gsp4h/global_hecke.hpp"
#include "gsp4h/hodge_kernel.hpp"

namespace gsp4h::cli {

using json = nlohmann::ordered_json;

template <class F>
json to_json(const Vec<F>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(x.to_string());
  return a;
}

template <class F>
json to_json(const Matrix<F>& m) {
  json a = json::array();
  for (size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

template <class F>
json to_json(const Subspace<F>& s) {
  return to_json(s.basis());
}

json to_json(const ValidityReport& r);
json to_json(const AdmissibilityReport& r);
json to_json(const QpChar& c);
json to_json(const TChar& t);
json to_json(const LedgerReport& r);
json to_json(const SocleDiagram& d);
json to_json(const FrobeniusData& f);
json to_json(const HeckeData& d);
json to_json(const ClassifyReport& r);

// Field accessors with schema errors reported as ParseError.
const json& require(const json& doc, const char* key);
long get_long(const json& doc, const char* key);
std::string get_scalar_string(const json& v, const char* what);
Rational get_rational(const json& v, const char* what);
Alphas get_alphas(const json& doc);
HodgeWeights get_weights(const json& doc);

template <class F>
F get_field(const json& doc, const char* key) {
  return parse_field<F>(get_scalar_string(require(doc, key), key));
}

template <class F>
std::vector<Vec<F>> get_rows(const json& v, size_t width, const char* what) {
  if (!v.is_array()) throw Error(ErrorKind::ParseError, std::string(what) + " must be an array of rows");
  std::vector<Vec<F>> rows;
  for (const auto& r : v) {
    if (!r.is_array() || r.size() != width)
      throw Error(ErrorKind::ParseError, std::string(what) + " rows must have " + std::to_string(width) + " entries");
    Vec<F> row;
    for (const auto& x : r) row.push_back(parse_field<F>(get_scalar_string(x, what)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace gsp4h::cli
