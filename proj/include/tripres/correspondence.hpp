#pragma once

#include "tripres/plane.hpp"

#include <array>
#include <utility>
#include <vector>

namespace tripres {

// Bijection lambda: points -> lines of a fixed plane, with cached inverse and
// reverse-incidence sets.  Immutable after construction.
struct PointLineCorrespondence {
    std::vector<int> image;      // image[x] = lambda(x)
    std::vector<int> preimage;   // preimage[l] = lambda^{-1}(l)
    std::vector<PointSet> admitters;  // admitters[x] = { z | x in lambda(z) }
};

// Validates that image is a bijection 0..n-1 and builds the caches.
PointLineCorrespondence make_correspondence(const ProjectivePlane& pl,
                                            std::vector<int> image);

// Directed edge of G_lambda: y in lambda(x).
struct Edge {
    int x = 0, y = 0;
    bool operator==(const Edge&) const = default;
};

// All (q+1)(q^2+q+1) edges in lexicographic (x, y) order — the fixed scan
// order used by the greedy cover.
std::vector<Edge> edges(const ProjectivePlane& pl, const PointLineCorrespondence& lam);

// (x,y,z) with y in lambda(x), z in lambda(y), x in lambda(z).
bool is_admissible(const ProjectivePlane& pl, const PointLineCorrespondence& lam,
                   int x, int y, int z);

// All z completing edge (x,y) to an admissible triple, ascending.
// Throws precondition_error when (x,y) is not an edge of G_lambda.
std::vector<int> triangles_through_edge(const ProjectivePlane& pl,
                                        const PointLineCorrespondence& lam, Edge e);

// Result of the greedy triangle cover: SUCCESS when no triangle is left among
// the uncovered edges; score counts covered edges (a loop counts 1).
struct CoverResult {
    enum class Status { SUCCESS, FAIL };
    Status status = Status::SUCCESS;
    int score = 0;
    std::vector<std::array<int, 3>> chosen;  // committed triangles, in commit order
    std::vector<Edge> uncovered;             // alive edges after the greedy pass
};

// Greedy cover: repeatedly sweep the fixed edge list; an alive edge lying in
// exactly one triangle of the remaining graph commits that triangle (removing
// its edge set and scoring 3, or 1 for a loop).  Sweeps repeat while any
// commit happened; FAIL when triangles remain but every alive edge lies in 0
// or >= 2 of them.
CoverResult estimated_score(const ProjectivePlane& pl, const PointLineCorrespondence& lam);

// lambda with the images of a and b exchanged.
PointLineCorrespondence swap_images(const ProjectivePlane& pl,
                                    const PointLineCorrespondence& lam, int a, int b);

// Validate the incidence-reversing invariant of a correlation pair.
bool is_correlation(const ProjectivePlane& pl, const Correlation& c);

// a = #{p | p in lambda^3(p)}, b = #{p | p in lambda^3(p) and lambda^6(p)=p},
// composing pl and lp alternately.
std::pair<int, int> correlation_ab(const ProjectivePlane& pl, const Correlation& c);

// Exact maximum cover size for a correlation:
// (q+1)(q^2+q+1) - (2q-3)*a - b.
int exact_score_correlation(const ProjectivePlane& pl, const Correlation& c);

// The point-line correspondence carried by a correlation (its pl half).
PointLineCorrespondence correspondence_of(const ProjectivePlane& pl, const Correlation& c);

enum class BadnessMode { BOTH_ENDPOINTS, ORIGIN_ONLY };

// Per-point count of uncovered edges incident to the point.  A loop edge
// (p,p) counts once in either mode.
std::vector<int> badness(const ProjectivePlane& pl, const std::vector<Edge>& uncovered,
                         BadnessMode mode = BadnessMode::BOTH_ENDPOINTS);

} // namespace tripres
