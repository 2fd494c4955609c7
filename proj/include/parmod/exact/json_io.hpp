#pragma once

#include "parmod/exact/poly.hpp"
#include "parmod/exact/ratfunc.hpp"

#include <json.hpp>

namespace parmod::exact {

using Json = nlohmann::json;

// {"vars": [...], "terms": [{"e": [...], "n": "..", "d": ".."}]}, terms in
// descending graded-lex order. `vars` defaults to the variables present.
Json to_json(const Poly& p, std::vector<Var> vars = {});
Poly poly_from_json(const Json& j);

Json to_json(const RatFunc& r);
RatFunc ratfunc_from_json(const Json& j);

Json scalar_json(const Scalar& q);
Scalar scalar_from_json(const Json& j);

}  // namespace parmod::exact
