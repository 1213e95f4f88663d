#pragma once

#include "tripres/io.hpp"
#include "tripres/plane.hpp"
#include "tripres/presentation.hpp"

#include <string>
#include <vector>

namespace testutil {

inline std::string fixture(const std::string& name) {
    return std::string(FIXTURES_DIR) + "/" + name;
}

// Shared fixtures are loaded once; everything here is immutable after
// construction, so handing out references is safe across test cases.
inline const tripres::ProjectivePlane& hughes() {
    static const tripres::ProjectivePlane pl = tripres::load_plane_file(fixture("hughes.plane"));
    return pl;
}

inline const tripres::PointLineCorrespondence& hughes_lambda() {
    static const tripres::PointLineCorrespondence lam = tripres::make_correspondence(
        hughes(), tripres::read_lambda_file(fixture("hughes.lambda")));
    return lam;
}

inline const tripres::TrianglePresentation& hughes_tri() {
    static const tripres::TrianglePresentation tri =
        tripres::expand_reps(tripres::read_triples_file(fixture("hughes.tri")));
    return tri;
}

inline const tripres::ProjectivePlane& pg2() {
    static const tripres::ProjectivePlane pl = tripres::difference_set_plane(2);
    return pl;
}

inline const tripres::ProjectivePlane& pg3() {
    static const tripres::ProjectivePlane pl = tripres::difference_set_plane(3);
    return pl;
}

// point i -> line i
inline tripres::PointLineCorrespondence identity_lambda(const tripres::ProjectivePlane& pl) {
    std::vector<int> image(pl.n);
    for (int i = 0; i < pl.n; ++i) image[i] = i;
    return tripres::make_correspondence(pl, std::move(image));
}

// Full presentation for the order-2 difference-set plane with the identity
// correspondence: one cyclic family, closed under rotation.
inline const tripres::TrianglePresentation& cyclic_tri_order2() {
    static const tripres::TrianglePresentation tri = [] {
        std::vector<tripres::Triple> reps;
        for (int x = 0; x < 7; ++x) reps.push_back({x, (x + 1) % 7, (x + 3) % 7});
        return tripres::expand_reps(reps);
    }();
    return tri;
}

// Same construction one order up: the difference set {0,1,3,9} contains 0,
// so the loops (x,x,x) are admissible and one cyclic family plus all loops
// partitions the edges of the identity correspondence graph.
inline const tripres::TrianglePresentation& cyclic_tri_order3() {
    static const tripres::TrianglePresentation tri = [] {
        std::vector<tripres::Triple> reps;
        for (int x = 0; x < 13; ++x) {
            reps.push_back({x, (x + 1) % 13, (x + 4) % 13});
            reps.push_back({x, x, x});
        }
        return tripres::expand_reps(reps);
    }();
    return tri;
}

// The order-3 subplane of the Hughes plane used throughout the tests.
inline const std::vector<int>& baer_points() {
    static const std::vector<int> v{9, 17, 20, 33, 38, 42, 43, 46, 47, 56, 59, 64, 70};
    return v;
}
inline const std::vector<int>& baer_lines() {
    static const std::vector<int> v{3, 11, 22, 34, 46, 53, 62, 64, 70, 79, 84, 87, 89};
    return v;
}

} // namespace testutil
