#pragma once

#include <json.hpp>

#include "sym/hopf.hpp"
#include "sym/partition.hpp"
#include "sym/symfunc.hpp"

namespace sym {

// Partition: array of positive integers, weakly decreasing.
nlohmann::json partition_to_json(const Partition& lambda);
// Strict: rejects zeros, negative or increasing entries.
Partition partition_from_json(const nlohmann::json& j);

// {"basis":"s","terms":[{"partition":[3,2,1],"coeff":"-2"}, ...]}
// Terms follow (size, reverse lexicographic) order.
nlohmann::json to_json(const SymFunc& f);
SymFunc symfunc_from_json(const nlohmann::json& j);

// {"terms":[{"left":[2],"right":[1,1],"coeff":"1"}, ...]}
nlohmann::json to_json(const TensorFunc& t);
TensorFunc tensorfunc_from_json(const nlohmann::json& j);

} // namespace sym
