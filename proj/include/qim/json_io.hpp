#pragma once

#include <string>

#include <json.hpp>

#include "qim/presentation.hpp"
#include "qim/special.hpp"

namespace qim {

using Json = nlohmann::ordered_json;

// {"vertices": n, "arrows": [[source, target], ...]}
Json quiver_json(const Quiver& q);
Quiver quiver_from_json(const Json& j);

// {"vertices": [...], "edges": [[source, target], ...]}
Json subgraph_json(const Subgraph& s);

// {"pairs": [[target, source], ...]} in basis order (source, then target)
Json subbimodule_json(const Subbimodule& b);
Subbimodule subbimodule_from_json(const AlgebraPtr& alg, const Json& j);

// plain value array, index i-1 holds alpha(i), 0 = undefined
Json function_json(const VertexFunction& alpha);
VertexFunction function_from_json(const Json& j);

// rows of exact integers; entries exceeding 64 bits become decimal strings
Json matrix_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

// {"elements": keys, "table": rows, "identity": i, "zero": i|null,
//  "generators": {name: element}}
Json monoid_json(const FiniteMonoid& m);
std::string monoid_table_csv(const FiniteMonoid& m);  // one row per line

// {"generators": [...], "zero": "0"|null, "relations": [[lhs, rhs], ...]}
Json presentation_json(const MonoidPresentation& p);
MonoidPresentation presentation_from_json(const Json& j);  // rule names not kept

}  // namespace qim
