#pragma once

#include "tripres/pointset.hpp"
#include "tripres/errors.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace tripres {

// Finite projective plane of order q on n = q^2+q+1 points and n lines,
// both indexed 0..n-1.  Incidence is stored as bitsets both ways, plus
// dense join/meet tables for O(1) geometry queries.
struct ProjectivePlane {
    int q = 0;
    int n = 0;
    std::vector<PointSet> lines_of;   // lines_of[l] = points on line l
    std::vector<PointSet> points_of;  // points_of[p] = lines through point p
    std::vector<int> join_table;      // (p1, p2) -> line, n*n, diagonal -1
    std::vector<int> meet_table;      // (l1, l2) -> point, n*n, diagonal -1

    // line through two distinct points
    int join(int p1, int p2) const { return join_table[p1 * n + p2]; }
    // common point of two distinct lines
    int meet(int l1, int l2) const { return meet_table[l1 * n + l2]; }

    bool incident(int p, int l) const { return lines_of[l].contains(p); }

    // ascending point indices of line l
    std::vector<int> line_points(int l) const;
};

// Validate rows as the lines of a projective plane and build the lookup
// structures.  Throws parse_error for shape problems and invalid_plane_error
// (naming a failing pair) for axiom violations.
ProjectivePlane make_plane(const std::vector<std::vector<int>>& rows);

// Parse an incidence table: n rows of q+1 point indices; row i = line i.
ProjectivePlane load_plane(std::istream& in);
ProjectivePlane load_plane_file(const std::string& path);

// Cyclic plane from a perfect difference set: q=2 -> {1,2,4} mod 7,
// q=3 -> {0,1,3,9} mod 13.  Other orders are rejected.
ProjectivePlane difference_set_plane(int q);

// Exchange the roles of points and lines.
ProjectivePlane dual(const ProjectivePlane& pl);

// A subplane of order sub_order sitting inside an ambient plane, with the
// Baer property (every ambient point on a subplane line, every ambient line
// through a subplane point; proper, so q = sub_order^2).
struct SubplaneEmbedding {
    std::vector<int> points;  // ambient indices, ascending
    std::vector<int> lines;   // ambient indices, ascending
    int sub_order = 0;
    bool baer = false;
};

// Check that (points, lines) induce a subplane and that it is Baer.
// Throws subplane_error("not a subplane: ...") or ("subplane but not Baer: ...").
SubplaneEmbedding is_baer_subplane(const ProjectivePlane& pl,
                                   const std::vector<int>& points,
                                   const std::vector<int>& lines);

// The subplane as a standalone plane, with maps from sub indices back to
// ambient indices (point_map[i] = ambient point of sub point i).
struct RestrictedPlane {
    ProjectivePlane plane;
    std::vector<int> point_map;
    std::vector<int> line_map;
};
RestrictedPlane restrict_to_subplane(const ProjectivePlane& pl,
                                     const SubplaneEmbedding& emb);

// Incidence-preserving pair of permutations: p on l iff point_perm(p) on
// line_perm(l).
struct Collineation {
    std::vector<int> point_perm;
    std::vector<int> line_perm;
};

// Incidence-reversing pair of bijections: p on l iff lp(l) on pl(p).
struct Correlation {
    std::vector<int> pl;  // point -> line
    std::vector<int> lp;  // line -> point
};

// Desargues check for two triangles in perspective from a center: intersect
// corresponding side lines and report whether the three axis points are
// collinear.  Throws degenerate_config_error when the input is not a proper
// perspective configuration.
struct DesarguesReport {
    bool collinear = false;
    std::array<int, 3> axis{};      // meets of side pairs (01, 12, 02)
    int axis_line = -1;             // line through the first two distinct axis
                                    // points (or their common line if fewer)
};
DesarguesReport check_desargues_config(const ProjectivePlane& pl, int center,
                                       const std::array<int, 3>& t1,
                                       const std::array<int, 3>& t2);

} // namespace tripres
