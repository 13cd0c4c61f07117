#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "multider/arrangement.hpp"
#include "multider/scalar.hpp"

namespace multider {

// A2, A3, B2, B3, deletedA3, X3, fan2d (params: slopes), maehara4 (params: t).
// Every hyperplane gets multiplicity 1.
Multiarrangement catalog(std::string_view name, const std::vector<Scalar>& params = {});

// "A3", "fan2d:1,2,3,4", "maehara4:7/3".
Multiarrangement catalog_from_spec(std::string_view spec);

std::vector<std::string> catalog_names();

// Levels of hyperplane indices, smallest level first.
using FiltrationLevels = std::vector<std::vector<std::size_t>>;

// The supersolvable filtrations shipped with an arrangement (possibly none).
std::vector<FiltrationLevels> catalog_filtrations(std::string_view name,
                                                  const std::vector<Scalar>& params = {});

}  // namespace multider
