#pragma once

#include <cstddef>

namespace fuzzhyper {

/// Point-count cap for hyperspace / fuzzy-grid / product enumeration.
/// Overridden by the FUZZHYPER_BUDGET environment variable.
std::size_t enumeration_budget();

/// State cap for the shadowing tracker search.
std::size_t tracker_state_budget();

}  // namespace fuzzhyper
