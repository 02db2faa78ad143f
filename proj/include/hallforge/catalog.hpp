#pragma once

// Fixed lists of indecomposable blueprints per builtin algebra, used by the
// verification suites and as the field-stable classes of degenerate elements.

#include <string>
#include <vector>

#include "hallforge/blueprint.hpp"

namespace hallforge {

/// Indecomposable modules defined over every prime field, pairwise
/// non-isomorphic.
std::vector<std::string> catalog(const std::string& algebra);

/// Catalog entries used as named classes of degenerate elements; the other
/// indecomposables of a dimension vector are aggregated into a bundle.
std::vector<std::string> stable_catalog(const std::string& algebra);

/// Labels of the vertices x with P_x projective-injective.
std::vector<std::string> projective_injective_vertices(const std::string& algebra);

/// Simple blueprints "S<label>" in vertex order.
std::vector<std::string> simple_blueprints(const std::string& algebra);

}  // namespace hallforge
