#pragma once

#include "tripres/plane.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace tripres {

// Incidence-preserving bijection pair between two planes of the same order.
struct PlaneIso {
    std::vector<int> point_map;  // src point -> dst point
    std::vector<int> line_map;   // src line  -> dst line
};

// Return false to stop the enumeration.
using IsoVisitor = std::function<bool(const PlaneIso&)>;

// Backtracking enumeration (deterministic order) of all isomorphisms
// src -> dst extending the forced (src, dst) assignments.  Propagates joins
// and meets of assigned elements eagerly, so contradictory seeds die before
// any branching.
void enumerate_plane_isos(const ProjectivePlane& src, const ProjectivePlane& dst,
                          const std::vector<std::pair<int, int>>& forced_points,
                          const std::vector<std::pair<int, int>>& forced_lines,
                          const IsoVisitor& visit);

// All collineations fixing the listed points and lines individually, up to
// `limit` if given, in deterministic order.
std::vector<Collineation> enumerate_collineations(
    const ProjectivePlane& pl,
    const std::vector<int>& fixed_points = {},
    const std::vector<int>& fixed_lines = {},
    std::optional<std::size_t> limit = std::nullopt);

// All correlations of the plane (isomorphisms onto its dual), up to `limit`,
// in deterministic order.  Empty when the plane is not self-dual.
std::vector<Correlation> enumerate_correlations(
    const ProjectivePlane& pl, std::optional<std::size_t> limit = std::nullopt);

} // namespace tripres
