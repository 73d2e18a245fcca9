#pragma once

#include <string>

#include "fuzzhyper/fuzzy_set.hpp"

namespace fuzzhyper {

/// {"labels":[...], "dist":[[...]]} with rationals as "p/q" strings,
/// integers, or exact decimals.
SpacePtr space_from_json(const std::string& text);
std::string space_to_json(const FiniteMetricSpace& space);

/// {"breakpoints":[...], "levels":[[labels]...], "space": {...}?}. The loader
/// enforces nesting and normality; the space may instead be supplied
/// separately.
StepFuzzySet fuzzy_from_json(const std::string& text, SpacePtr space = nullptr);
std::string fuzzy_to_json(const StepFuzzySet& u, bool embed_space);

/// {"space": {...}, "map": {"a":"b", ...}}.
System system_from_json(const std::string& text);
std::string system_to_json(const System& sys);

std::string read_file(const std::string& path);

}  // namespace fuzzhyper
