#pragma once

#include <string>
#include <vector>

#include "gmsf/coeff.hpp"
#include "json.hpp"

namespace gmsf {

using Json = nlohmann::json;

// Polynomial rows are [e_0, ..., e_{n-1}, "p/q"] with exponents positional against the
// symbol list emitted by the enclosing document.
inline Json poly_to_json(const Poly& p, int nsym) {
  Json rows = Json::array();
  for (const auto& [e, c] : p.terms) {
    Json row = Json::array();
    for (int i = 0; i < nsym; ++i)
      row.push_back(static_cast<size_t>(i) < e.size() ? e[static_cast<size_t>(i)] : 0);
    row.push_back(rat_str(c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json coeff_to_json(const Coefficient& c) {
  int n = Symbols::count();
  return Json{{"num", poly_to_json(c.num(), n)}, {"den", poly_to_json(c.den(), n)}};
}

// idmap[i] = registry id of the i-th symbol in the document's symbol list.
inline Poly poly_from_json(const Json& rows, const std::vector<int>& idmap) {
  Poly p;
  for (const auto& row : rows) {
    if (!row.is_array() || row.empty()) throw std::invalid_argument("bad polynomial row");
    Expvec e;
    for (size_t i = 0; i + 1 < row.size(); ++i) {
      int ex = row[i].get<int>();
      if (ex == 0) continue;
      int id = idmap.at(i);
      if (e.size() <= static_cast<size_t>(id)) e.resize(static_cast<size_t>(id) + 1, 0);
      e[static_cast<size_t>(id)] += ex;
    }
    expvec_trim(e);
    p.add_term(e, rat_parse(row.back().get<std::string>()));
  }
  return p;
}

inline Coefficient coeff_from_json(const Json& j, const std::vector<int>& idmap) {
  return Coefficient(poly_from_json(j.at("num"), idmap), poly_from_json(j.at("den"), idmap));
}

inline Json symbols_json() {
  Json arr = Json::array();
  for (const auto& n : Symbols::all()) arr.push_back(n);
  return arr;
}

inline std::vector<int> idmap_from_json(const Json& symbols) {
  std::vector<int> m;
  for (const auto& s : symbols) m.push_back(Symbols::id(s.get<std::string>()));
  return m;
}

}  // namespace gmsf
