#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "gainflow/cnf.hpp"
#include "gainflow/paft.hpp"

namespace gainflow {

// First F-valid simple s-t path found by depth-first search taking incident
// edges in id order; nullopt after exhaustive search.
std::optional<std::vector<EdgeId>> paft_oracle(const PaftInstance& instance);

// True when the edge sequence is a simple s-t path avoiding every forbidden
// transition.
bool is_valid_paft_path(const PaftInstance& instance, const std::vector<EdgeId>& path);

inline constexpr int sat_oracle_variable_limit = 24;

// First 1-in-3 assignment when assignments are enumerated by counting with
// x_1 as the least significant bit. Throws std::length_error above the
// variable limit.
std::optional<Assignment> sat_oracle(const CnfFormula& formula);

}  // namespace gainflow
