#pragma once

#include "tripres/isomorphism.hpp"
#include "tripres/presentation.hpp"

#include <array>
#include <cstddef>
#include <optional>
#include <vector>

namespace tripres {

// Finite chamber complex of a full triangle presentation: three vertices
// v1,v2,v3; edge families e (v1-v2), e' (v2-v3), e'' (v3-v1), one edge per
// point; one triangular chamber per triple (x,y,z), glued to e_x, e'_y, e''_z.
// Stored purely combinatorially.
struct ChamberComplex {
    int n = 0;                                // points of the base plane
    std::vector<std::array<int, 3>> chambers; // (x, y, z) per triple
    std::vector<int> rotation;                // chamber index of (z, x, y)

    std::size_t edge_count() const { return static_cast<std::size_t>(3) * n; }
};

// Requires a FULL presentation (throws precondition_error otherwise); builds
// the complex and the rotation automorphism e_x -> e'_x -> e''_x -> e_x,
// verifying it permutes the chambers.
ChamberComplex build_scab(const ProjectivePlane& pl, const PointLineCorrespondence& lam,
                          const TrianglePresentation& tri);

// Bipartite graph on 2n vertices: left 0..n-1, right n..2n-1.
struct BipartiteGraph {
    int left_size = 0, right_size = 0;
    std::vector<std::vector<int>> adj;  // size left+right, sorted neighbor lists
    std::size_t edge_count = 0;
};

// The rank-2 residue at vertex 1, 2, or 3: vertices are the two edge families
// meeting there, adjacent when some chamber contains both.
// v1: left e_x, right e''_z; v2: left e_x, right e'_y; v3: left e'_y, right e''_z.
BipartiteGraph residue(const ChamberComplex& complex, int vertex);

// True iff the graph is the incidence graph of a projective plane of order q:
// connected, bipartite with parts of size q^2+q+1, (q+1)-regular, girth 6,
// diameter 3.
bool verify_generalized_triangle(const BipartiteGraph& g, int q);

// A residue matched to a concrete plane: maps from the graph's left/right
// vertices to the plane's points/lines (or lines/points when flipped).
struct ResidueIso {
    std::vector<int> left_map;
    std::vector<int> right_map;
    bool flipped = false;  // left plays lines, right plays points
};

// Part-respecting isomorphism from the residue graph onto the plane's
// incidence graph, trying both orientations; nullopt when none exists.
std::optional<ResidueIso> residue_plane_iso(const BipartiteGraph& g,
                                            const ProjectivePlane& pl);

} // namespace tripres
