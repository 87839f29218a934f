#pragma once

#include <json.hpp>

#include "forestrep/characters.hpp"
#include "forestrep/forest.hpp"
#include "forestrep/symfunc.hpp"
#include "forestrep/transformation.hpp"

namespace forestrep {

using Json = nlohmann::ordered_json;

Json to_json(const Partition& lambda);
Partition partition_from_json(const Json& j);

/// {"n":3,"image":[0,1,2]}
Json to_json(const PartialTransformation& f);
PartialTransformation transformation_from_json(const Json& j);

/// {"trees":[{"repr":"((()))","mult":1}]}
Json to_json(const Odun& o);
Odun odun_from_json(const Json& j);

/// [{"partition":[4,2],"mult":35}]
Json to_json(const IrredDecomposition& d);
IrredDecomposition decomposition_from_json(int n, const Json& j);

/// [{"cycle_type":[2,1],"value":"1"}]
Json to_json(const ClassFunction& chi);
ClassFunction class_function_from_json(int n, const Json& j);

/// {"basis":"s","terms":[{"partition":[2,1],"coeff":"2"}]}
Json to_json(const SymFunc& f, Basis basis = Basis::schur);
/// Accepts bases "p", "s" and "m".
SymFunc symfunc_from_json(const Json& j);

}  // namespace forestrep
