#include "irrlab/json_io.hpp"

namespace irrlab::jsonio {

json space_to_json(const finspace::FiniteSpace& space) {
  const int n = space.size();
  json rows = json::array();
  for (int x = 0; x < n; ++x) {
    json row = json::array();
    for (int y = 0; y < n; ++y) row.push_back(space.leq(x, y));
    rows.push_back(std::move(row));
  }
  return {{"n", n}, {"leq", std::move(rows)}};
}

finspace::FiniteSpace space_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  const auto& rows = j.at("leq");
  if (static_cast<int>(rows.size()) != n)
    throw std::invalid_argument("leq row count does not match n");
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  for (int x = 0; x < n; ++x) {
    if (static_cast<int>(rows[x].size()) != n)
      throw std::invalid_argument("leq column count does not match n");
    for (int y = 0; y < n; ++y) leq[x][y] = rows[x][y].get<bool>();
  }
  return finspace::FiniteSpace::from_leq(leq);
}

json subset_to_json(SubsetMask s) {
  json out = json::array();
  for_each_point(s, [&](int x) { out.push_back(x); });
  return out;
}

SubsetMask subset_from_json(const json& j) {
  SubsetMask s = 0;
  for (const auto& x : j) s |= singleton(x.get<int>());
  return s;
}

namespace {

json witness_to_json(const finspace::ConditionWitness& w) {
  json subsets = json::array();
  for (SubsetMask s : w.subsets) subsets.push_back(subset_to_json(s));
  return {{"condition", w.condition},
          {"note", w.note},
          {"points", w.points},
          {"subsets", std::move(subsets)}};
}

finspace::ConditionWitness witness_from_json(const json& j) {
  finspace::ConditionWitness w;
  w.condition = j.at("condition").get<std::string>();
  w.note = j.at("note").get<std::string>();
  w.points = j.at("points").get<std::vector<int>>();
  for (const auto& s : j.at("subsets")) w.subsets.push_back(subset_from_json(s));
  return w;
}

}  // namespace

json profile_to_json(const finspace::PropertyProfile& p) {
  json witnesses = json::array();
  for (const auto& w : p.witnesses) witnesses.push_back(witness_to_json(w));
  json out = {
      {"p1", p.p1},
      {"p2", p.p2},
      {"p3", p.p3},
      {"p4", p.p4},
      {"p5", p.p5},
      {"p6", p.p6},
      {"irreducible", p.irreducible},
      {"connected", p.connected},
      {"nonempty", p.nonempty},
      {"discrete", p.discrete},
      {"totallyDisconnected", p.totally_disconnected},
      {"pointwiseIrreducible", p.pointwise},
      {"witnesses", std::move(witnesses)},
  };
  if (p.dimension)
    out["dimension"] = *p.dimension;
  else
    out["dimension"] = nullptr;
  return out;
}

finspace::PropertyProfile profile_from_json(const json& j) {
  finspace::PropertyProfile p;
  p.p1 = j.at("p1").get<bool>();
  p.p2 = j.at("p2").get<bool>();
  p.p3 = j.at("p3").get<bool>();
  p.p4 = j.at("p4").get<bool>();
  p.p5 = j.at("p5").get<bool>();
  p.p6 = j.at("p6").get<bool>();
  p.irreducible = j.at("irreducible").get<bool>();
  p.connected = j.at("connected").get<bool>();
  p.nonempty = j.at("nonempty").get<bool>();
  p.discrete = j.at("discrete").get<bool>();
  p.totally_disconnected = j.at("totallyDisconnected").get<bool>();
  if (!j.at("dimension").is_null()) p.dimension = j.at("dimension").get<int>();
  p.pointwise = j.at("pointwiseIrreducible").get<std::vector<bool>>();
  for (const auto& w : j.at("witnesses"))
    p.witnesses.push_back(witness_from_json(w));
  return p;
}

json report_to_json(const enumerate::EnumerationReport& report) {
  json checks = json::array();
  for (const auto& stats : report.checks)
    checks.push_back({{"id", stats.id},
                      {"passes", stats.passes},
                      {"failures", stats.failures}});
  json violations = json::array();
  for (const auto& v : report.violations)
    violations.push_back({{"points", v.n},
                          {"index", v.index},
                          {"space", space_to_json(v.space)},
                          {"check", v.check},
                          {"witness", v.witness}});
  json hits = json::array();
  for (const auto& [predicate, space] : report.counterexample_hits)
    hits.push_back({{"predicate", predicate}, {"space", space_to_json(space)}});
  return {{"maxPoints", report.max_points},
          {"iso", report.iso},
          {"totals", report.totals},
          {"checks", std::move(checks)},
          {"violations", std::move(violations)},
          {"counterexampleHits", std::move(hits)},
          {"ok", report.ok()}};
}

}  // namespace irrlab::jsonio
