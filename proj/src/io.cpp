#include "placto/io.hpp"

namespace placto::io {

namespace {

json words(const std::vector<Word>& ws) {
  json out = json::array();
  for (const auto& w : ws) out.push_back(w.str());
  return out;
}

json parts(const Partition& p) { return json(std::vector<int>(p.parts().begin(), p.parts().end())); }

}  // namespace

json to_json(const Tableau& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row = json::array();
    for (auto a : r) row.push_back(std::to_string(a));
    rows.push_back(std::move(row));
  }
  return {{"shape", parts(t.shape())}, {"rows", std::move(rows)}};
}

json to_json(const ShiftedTableau& t) {
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row = json::array();
    for (const auto& a : r) row.push_back(a.str());
    rows.push_back(std::move(row));
  }
  return {{"shape", parts(t.shape())}, {"shifted", true}, {"rows", std::move(rows)}};
}

json to_json(const NcPoly& p) {
  json terms = json::array();
  for (const auto& [w, c] : p.terms()) terms.push_back({{"word", w.str()}, {"coeff", c}});
  return {{"context", {{"n", p.context().alphabet_size}, {"D", p.context().max_degree}}}, {"terms", std::move(terms)}};
}

json to_json(const QuotientPoly& p) {
  json terms = json::array();
  for (const auto& [w, c] : p.terms()) terms.push_back({{"class", w.str()}, {"coeff", c}});
  return {{"relation_set", p.relation_set()}, {"terms", std::move(terms)}};
}

json to_json(const CPoly& p) {
  json terms = json::array();
  for (const auto& [c, k] : p.terms()) terms.push_back({{"content", std::vector<int>(c.counts().begin(), c.counts().end())}, {"coeff", k}});
  return {{"terms", std::move(terms)}, {"text", p.str()}};
}

json class_json(const Word& w, const RelationSet& rels, const EquivClass& cls) {
  return {{"word", w.str()}, {"relation_set", rels.name()}, {"class", words(cls.members)}, {"size", cls.size()}};
}

json lr_json(const Partition& nu, const Partition& mu, const std::map<Partition, Coeff>& coeffs) {
  json terms = json::array();
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) terms.push_back({{"shape", parts(it->first)}, {"coeff", it->second}});
  return {{"nu", parts(nu)}, {"mu", parts(mu)}, {"terms", std::move(terms)}};
}

json to_json(const verify::TableCase& c) {
  return {{"kind", "table"},     {"family", c.family},     {"product", c.product},
          {"pattern", c.pattern}, {"expected", c.expected}, {"actual", c.actual},
          {"missing", c.missing}, {"extra", c.extra},       {"passed", c.passed()}};
}

json to_json(const verify::CaseReport& r) {
  json eliminated = json::array();
  for (const auto& e : r.eliminated) {
    eliminated.push_back({{"word", e.word.str()}, {"symbolic", e.symbolic}, {"reasons", e.reasons}});
  }
  return {{"kind", "case"},
          {"relation_id", r.relation_id},
          {"relation_ids", r.relation_ids},
          {"letter_pattern", r.letter_pattern},
          {"left", r.left.str()},
          {"left_symbolic", r.left_symbolic},
          {"candidates", words(r.candidates)},
          {"candidates_symbolic", r.candidates_symbolic},
          {"eliminated", std::move(eliminated)},
          {"survivor", r.survivor ? json(r.survivor->str()) : json(nullptr)},
          {"survivor_symbolic", r.survivor_symbolic},
          {"failure", r.failure},
          {"passed", r.passed()}};
}

json to_json(const verify::AxiomReport& r) {
  return {{"kind", "axiom"},
          {"axiom_id", r.axiom_id},
          {"relation_set", r.relation_set},
          {"search_bounds", {{"n", r.alphabet_size}, {"D", r.max_degree}}},
          {"instances_checked", r.instances_checked},
          {"violation_count", r.violation_count},
          {"violations", r.violations},
          {"informational", r.informational},
          {"note", r.note},
          {"passed", r.passed()}};
}

json to_json(const verify::CheckResult& r) {
  return {{"kind", "check"}, {"id", r.id}, {"description", r.description}, {"detail", r.detail}, {"passed", r.passed}};
}

NcPoly ncpoly_from_json(const json& j) {
  try {
    const Context ctx{j.at("context").at("n").get<int>(), j.at("context").at("D").get<int>()};
    NcPoly p(ctx);
    for (const auto& t : j.at("terms")) {
      p.add_term(Word::parse(t.at("word").get<std::string>(), ctx.alphabet_size), t.at("coeff").get<Coeff>());
    }
    return p;
  } catch (const json::exception& e) {
    throw Error(std::string("bad polynomial JSON: ") + e.what());
  }
}

}  // namespace placto::io
