#pragma once

// JSON forms shared by the library and the command-line tool.
//
//   partition:   {"n": 4, "classes": [[0], [1, 3], [2]]}
//   enumeration: {"n": ..., "omega": ..., "rings": [partition, ...],
//                 "tags": [["wedge", ...], ...],
//                 "core_census": [{"core": partition, "order": d, "count": c}, ...]}

#include <nlohmann/json.hpp>

#include "schur/automorphic.hpp"
#include "schur/enumeration.hpp"
#include "schur/partition.hpp"

namespace schur {

using Json = nlohmann::ordered_json;

Json to_json(const SchurPartition& p);
/// Throws std::invalid_argument on malformed input or a non-partition.
SchurPartition partition_from_json(const Json& j);

Json to_json(const UnitSubgroup& h);
Json to_json(const EnumerationResult& result);

} // namespace schur
