#pragma once

#include <map>
#include <string>

#include "json.hpp"
#include "placto/algebra.hpp"
#include "placto/rewrite.hpp"
#include "placto/tableau.hpp"
#include "placto/verify.hpp"

/// JSON encodings. Every array is emitted in a fixed order so equal inputs
/// serialize byte-identically.
namespace placto::io {

using nlohmann::json;

json to_json(const Tableau& t);
json to_json(const ShiftedTableau& t);
json to_json(const NcPoly& p);
json to_json(const QuotientPoly& p);
json to_json(const CPoly& p);
json class_json(const Word& w, const RelationSet& rels, const EquivClass& cls);
json lr_json(const Partition& nu, const Partition& mu, const std::map<Partition, Coeff>& coeffs);

json to_json(const verify::TableCase& c);
json to_json(const verify::CaseReport& r);
json to_json(const verify::AxiomReport& r);
json to_json(const verify::CheckResult& r);

NcPoly ncpoly_from_json(const json& j);

}  // namespace placto::io
