#include "tripres/correspondence.hpp"

#include <algorithm>
#include <string>

namespace tripres {

PointLineCorrespondence make_correspondence(const ProjectivePlane& pl,
                                            std::vector<int> image) {
    const int n = pl.n;
    if (static_cast<int>(image.size()) != n)
        throw precondition_error("correspondence has " + std::to_string(image.size()) +
                                 " entries, expected " + std::to_string(n));
    PointLineCorrespondence lam;
    lam.image = std::move(image);
    lam.preimage.assign(n, -1);
    for (int x = 0; x < n; ++x) {
        int l = lam.image[x];
        if (l < 0 || l >= n)
            throw precondition_error("correspondence image " + std::to_string(l) +
                                     " out of range");
        if (lam.preimage[l] != -1)
            throw precondition_error("correspondence is not a bijection: line " +
                                     std::to_string(l) + " hit twice");
        lam.preimage[l] = x;
    }
    lam.admitters.assign(n, {});
    for (int z = 0; z < n; ++z) {
        const PointSet& line = pl.lines_of[lam.image[z]];
        for (int x = line.next(-1); x != -1; x = line.next(x)) lam.admitters[x].add(z);
    }
    return lam;
}

std::vector<Edge> edges(const ProjectivePlane& pl, const PointLineCorrespondence& lam) {
    std::vector<Edge> es;
    es.reserve(static_cast<std::size_t>(pl.n) * (pl.q + 1));
    for (int x = 0; x < pl.n; ++x) {
        const PointSet& line = pl.lines_of[lam.image[x]];
        for (int y = line.next(-1); y != -1; y = line.next(y)) es.push_back({x, y});
    }
    return es;
}

bool is_admissible(const ProjectivePlane& pl, const PointLineCorrespondence& lam,
                   int x, int y, int z) {
    return pl.lines_of[lam.image[x]].contains(y) &&
           pl.lines_of[lam.image[y]].contains(z) &&
           pl.lines_of[lam.image[z]].contains(x);
}

std::vector<int> triangles_through_edge(const ProjectivePlane& pl,
                                        const PointLineCorrespondence& lam, Edge e) {
    if (e.x < 0 || e.x >= pl.n || e.y < 0 || e.y >= pl.n ||
        !pl.lines_of[lam.image[e.x]].contains(e.y))
        throw precondition_error("(" + std::to_string(e.x) + "," + std::to_string(e.y) +
                                 ") is not an edge of the correspondence graph");
    PointSet zs = pl.lines_of[lam.image[e.y]] & lam.admitters[e.x];
    std::vector<int> out;
    for (int z = zs.next(-1); z != -1; z = zs.next(z)) out.push_back(z);
    return out;
}

CoverResult estimated_score(const ProjectivePlane& pl, const PointLineCorrespondence& lam) {
    const int n = pl.n;
    // alive[x]: current out-neighbors of x; in_alive[y]: current origins into y
    std::vector<PointSet> alive(n), in_alive(n);
    for (int x = 0; x < n; ++x) alive[x] = pl.lines_of[lam.image[x]];
    for (int x = 0; x < n; ++x)
        for (int y = alive[x].next(-1); y != -1; y = alive[x].next(y)) in_alive[y].add(x);

    const std::vector<Edge> order = edges(pl, lam);
    CoverResult res;

    bool committed = true;
    while (committed) {
        committed = false;
        for (const Edge& e : order) {
            if (!alive[e.x].contains(e.y)) continue;
            PointSet zs = alive[e.y] & in_alive[e.x];
            int z = zs.only();
            if (z == -1) continue;  // 0 or >= 2 triangles through this edge
            const int x = e.x, y = e.y;
            // remove the edge set of the triangle (three edges, or one for a loop)
            Edge tri[3] = {{x, y}, {y, z}, {z, x}};
            for (int i = 0; i < 3; ++i) {
                bool dup = false;
                for (int j = 0; j < i; ++j)
                    if (tri[j] == tri[i]) dup = true;
                if (dup) continue;
                alive[tri[i].x].remove(tri[i].y);
                in_alive[tri[i].y].remove(tri[i].x);
            }
            res.score += (x == y && y == z) ? 1 : 3;
            res.chosen.push_back({x, y, z});
            committed = true;
        }
    }

    bool triangles_remain = false;
    for (const Edge& e : order) {
        if (!alive[e.x].contains(e.y)) continue;
        res.uncovered.push_back(e);
        if (!(alive[e.y] & in_alive[e.x]).empty()) triangles_remain = true;
    }
    res.status = triangles_remain ? CoverResult::Status::FAIL : CoverResult::Status::SUCCESS;
    return res;
}

PointLineCorrespondence swap_images(const ProjectivePlane& pl,
                                    const PointLineCorrespondence& lam, int a, int b) {
    if (a < 0 || a >= pl.n || b < 0 || b >= pl.n)
        throw precondition_error("swap point out of range");
    std::vector<int> img = lam.image;
    std::swap(img[a], img[b]);
    return make_correspondence(pl, std::move(img));
}

bool is_correlation(const ProjectivePlane& pl, const Correlation& c) {
    const int n = pl.n;
    if (static_cast<int>(c.pl.size()) != n || static_cast<int>(c.lp.size()) != n) return false;
    std::vector<char> seenp(n, 0), seenl(n, 0);
    for (int i = 0; i < n; ++i) {
        if (c.pl[i] < 0 || c.pl[i] >= n || c.lp[i] < 0 || c.lp[i] >= n) return false;
        if (seenl[c.pl[i]]++ || seenp[c.lp[i]]++) return false;
    }
    for (int l = 0; l < n; ++l)
        for (int p = pl.lines_of[l].next(-1); p != -1; p = pl.lines_of[l].next(p))
            if (!pl.lines_of[c.pl[p]].contains(c.lp[l])) return false;
    // (p,l) -> (lp(l), pl(p)) is injective and maps flags into flags; both planes
    // carry the same number of flags, so the forward scan certifies both directions
    return true;
}

std::pair<int, int> correlation_ab(const ProjectivePlane& pl, const Correlation& c) {
    const int n = pl.n;
    int a = 0, b = 0;
    for (int p = 0; p < n; ++p) {
        // lambda^3(p) = pl(lp(pl(p)))
        int l3 = c.pl[c.lp[c.pl[p]]];
        if (!pl.lines_of[l3].contains(p)) continue;
        ++a;
        // lambda^6(p) = (lp o pl)^3 (p)
        int p6 = c.lp[c.pl[c.lp[c.pl[c.lp[c.pl[p]]]]]];
        if (p6 == p) ++b;
    }
    return {a, b};
}

int exact_score_correlation(const ProjectivePlane& pl, const Correlation& c) {
    auto [a, b] = correlation_ab(pl, c);
    return (pl.q + 1) * pl.n - (2 * pl.q - 3) * a - b;
}

PointLineCorrespondence correspondence_of(const ProjectivePlane& pl, const Correlation& c) {
    return make_correspondence(pl, c.pl);
}

std::vector<int> badness(const ProjectivePlane& pl, const std::vector<Edge>& uncovered,
                         BadnessMode mode) {
    std::vector<int> bad(pl.n, 0);
    for (const Edge& e : uncovered) {
        ++bad[e.x];
        if (mode == BadnessMode::BOTH_ENDPOINTS && e.y != e.x) ++bad[e.y];
    }
    return bad;
}

} // namespace tripres
