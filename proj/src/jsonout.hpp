// Deterministic JSON and DOT rendering of an analysis.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "invariants.hpp"

namespace polyfib {

// "p/q" for rationals, "root(minpoly, box)" otherwise.
std::string algnum_str(const AlgNum& c);

// indent < 0: compact single-line output.
std::string analysis_json(const Analysis& an, int indent);

// (file name, DOT text) for every graph referenced by the JSON report.
std::vector<std::pair<std::string, std::string>> analysis_dot(const Analysis& an);

}  // namespace polyfib
