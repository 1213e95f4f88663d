#pragma once

#include "tripres/correspondence.hpp"
#include "tripres/plane.hpp"

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace tripres {

// Ordered triple of point indices; ordering is lexicographic.
struct Triple {
    int x = 0, y = 0, z = 0;
    auto operator<=>(const Triple&) const = default;
    Triple rotated() const { return {y, z, x}; }
    bool is_loop() const { return x == y && y == z; }
};

// Rotation-closed set of triples, stored sorted for binary-search lookup.
// Construction closes under rotation and deduplicates.
struct TrianglePresentation {
    std::vector<Triple> triples;  // sorted, unique, rotation-closed

    bool contains(const Triple& t) const;
    // the unique z with (x,y,z) present, or -1
    int lookup(int x, int y) const;
    std::size_t size() const { return triples.size(); }
    bool operator==(const TrianglePresentation&) const = default;
};

// Close the given triples under rotation, sort, and deduplicate.
TrianglePresentation expand_reps(const std::vector<Triple>& reps);

// Lexicographically least rotation of each orbit, ascending.
std::vector<Triple> orbit_reps(const TrianglePresentation& tri);

struct OrbitCounts {
    int non_loop_orbits = 0;  // rotation orbits of size 3
    int loops = 0;            // fixed triples (x,x,x)
};
OrbitCounts orbit_decomposition(const TrianglePresentation& tri);

// FULL: a complete triangle presentation (|triples| = (q+1)(q^2+q+1), so
// every edge of G_lambda carries exactly one triple).
// PARTIAL: consistent but not complete.
// INVALID: some structural condition fails; diagnostics names the first one.
struct VerifyReport {
    enum class Verdict { FULL, PARTIAL, INVALID };
    Verdict verdict = Verdict::INVALID;
    std::size_t triple_count = 0;
    std::string diagnostics;
};
VerifyReport verify_presentation(const ProjectivePlane& pl,
                                 const PointLineCorrespondence& lam,
                                 const TrianglePresentation& tri);

// The presentation read off a greedy cover: each committed triangle
// contributes its rotation orbit.
TrianglePresentation from_cover(const PointLineCorrespondence& lam,
                                const CoverResult& cover);

// A presentation cut down to a subplane: the induced plane plus the
// reindexed correspondence and triples, with maps back to ambient indices.
struct Restriction {
    ProjectivePlane plane;
    std::vector<int> point_map;  // sub point -> ambient point
    std::vector<int> line_map;   // sub line  -> ambient line
    PointLineCorrespondence lam0;
    TrianglePresentation tri0;
};

// Restrict lambda and tri to the subplane.  Requires lambda to map the
// subplane's points onto its lines and the triples to close up inside it
// (two coordinates in the subplane force the third); the result must verify
// FULL at the sub-order.  Throws subplane_error otherwise.
Restriction restrict_presentation(const ProjectivePlane& pl,
                                  const PointLineCorrespondence& lam,
                                  const TrianglePresentation& tri,
                                  const SubplaneEmbedding& emb);

// True iff every triple meets the union of the listed lines' points an odd
// number of times, counting repeated coordinates with multiplicity (so the
// generator-parity map extends to a homomorphism onto C2).
bool check_parity(const ProjectivePlane& pl, const TrianglePresentation& tri,
                  const std::vector<int>& a_lines);

enum class ExportFormat { GENERIC, GAP };

// Text of the group presentation <a_0..a_{n-1} | a_x a_y a_z per orbit>.
// GENERIC is line-oriented (header lines, then one "x y z" relator per
// orbit); GAP is a loadable free-group quotient definition.
std::string export_group_presentation(const TrianglePresentation& tri, int n,
                                      ExportFormat format);

} // namespace tripres
