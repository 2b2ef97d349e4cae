#pragma once
// JSON round-tripping for categories and functor tables.
// Category files: {"objects":[...], "arrows":[{"id","src","tgt"}],
//   "compose":[{"first","then","result"}]}, identities omitted,
//   result = then . first.
// Functor tables: {"objects":{dom obj -> cod obj},
//   "arrows":{dom arrow -> cod arrow}} with identity arrows omitted.
#include <nlohmann/json.hpp>

#include "opdcat/fincat.hpp"

namespace opdcat {

using nlohmann::json;

// returns nullptr (with violations) when the description is malformed
CatPtr read_category(const json& j, std::vector<Violation>* out);
json write_category(const FinCategory& c);

FinFunctor read_functor(const json& j, const CatPtr& dom, const CatPtr& cod,
                        std::vector<Violation>* out);
json write_functor(const FinFunctor& f);

}  // namespace opdcat
