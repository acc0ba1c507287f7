#pragma once

#include <json.hpp>

#include "irrlab/enumerate.hpp"
#include "irrlab/finspace.hpp"
#include "irrlab/hochster.hpp"

namespace irrlab::jsonio {

using nlohmann::json;

// FiniteSpace <-> {"n": int, "leq": [[bool]]} with leq[x][y] = (x <= y).
json space_to_json(const finspace::FiniteSpace& space);
finspace::FiniteSpace space_from_json(const json& j);

json subset_to_json(SubsetMask s);  // sorted point array
SubsetMask subset_from_json(const json& j);

json profile_to_json(const finspace::PropertyProfile& profile);
finspace::PropertyProfile profile_from_json(const json& j);

json report_to_json(const enumerate::EnumerationReport& report);

// Ring elements serialize as the canonical sorted term list:
// {"field": ..., "index": ..., "terms": [{"coeff": c} | {"x": .., "m": .., "coeff": c}]}.
template <class F, class E>
json ring_to_json(const E& index, const hochster::RingElement<F, E>& r) {
  json terms = json::array();
  for (const auto& [m, c] : r.terms()) {
    json term;
    if (!m.is_one) {
      term["x"] = index.to_string(m.x);
      term["m"] = m.level;
    }
    term["coeff"] = r.field().to_string(c);
    terms.push_back(std::move(term));
  }
  return {{"field", r.field().name()},
          {"index", index.name()},
          {"terms", std::move(terms)}};
}

template <class F, class E>
hochster::RingElement<F, E> ring_from_json(F field, const E& index,
                                           const json& j) {
  if (j.at("field").get<std::string>() != field.name())
    throw std::invalid_argument("field mismatch: expected " + field.name());
  if (j.at("index").get<std::string>() != index.name())
    throw std::invalid_argument("index mismatch: expected " + index.name());
  hochster::RingElement<F, E> r(field);
  using Mono = typename hochster::RingElement<F, E>::Mono;
  for (const auto& term : j.at("terms")) {
    const auto coeff = field.parse(term.at("coeff").get<std::string>());
    if (term.contains("x"))
      r.add_term(Mono::pair(index.parse(term.at("x").get<std::string>()),
                            term.at("m").get<int>()),
                 coeff);
    else
      r.add_term(Mono::one(), coeff);
  }
  return r;
}

}  // namespace irrlab::jsonio
