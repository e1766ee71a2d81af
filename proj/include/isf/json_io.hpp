#pragma once

#include "isf/forest.hpp"
#include "isf/graph.hpp"
#include "isf/symfunc.hpp"

#include <json.hpp>

namespace isf {

using nlohmann::json;

/// Array of coefficient strings, constant term first; rationals "p/q",
/// integers without a slash.
json to_json(const QPoly& p);
json to_json(const Partition& lambda);
json to_json(const SymFunc& f);
json to_json(const MonomialSym& f);
json to_json(const Decoration& d);
json to_json(const XQPoly& p);

}  // namespace isf
