#include "tripres/presentation.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace tripres {

namespace {

std::string triple_str(const Triple& t) {
    return "(" + std::to_string(t.x) + "," + std::to_string(t.y) + "," +
           std::to_string(t.z) + ")";
}

Triple least_rotation(const Triple& t) {
    return std::min({t, t.rotated(), t.rotated().rotated()});
}

} // namespace

bool TrianglePresentation::contains(const Triple& t) const {
    return std::binary_search(triples.begin(), triples.end(), t);
}

int TrianglePresentation::lookup(int x, int y) const {
    auto it = std::lower_bound(triples.begin(), triples.end(),
                               Triple{x, y, std::numeric_limits<int>::min()});
    if (it != triples.end() && it->x == x && it->y == y) return it->z;
    return -1;
}

TrianglePresentation expand_reps(const std::vector<Triple>& reps) {
    TrianglePresentation tri;
    tri.triples.reserve(reps.size() * 3);
    for (const Triple& t : reps) {
        tri.triples.push_back(t);
        tri.triples.push_back(t.rotated());
        tri.triples.push_back(t.rotated().rotated());
    }
    std::sort(tri.triples.begin(), tri.triples.end());
    tri.triples.erase(std::unique(tri.triples.begin(), tri.triples.end()),
                      tri.triples.end());
    return tri;
}

std::vector<Triple> orbit_reps(const TrianglePresentation& tri) {
    std::vector<Triple> reps;
    for (const Triple& t : tri.triples)
        if (least_rotation(t) == t) reps.push_back(t);
    return reps;  // triples sorted => reps sorted
}

OrbitCounts orbit_decomposition(const TrianglePresentation& tri) {
    OrbitCounts c;
    for (const Triple& t : orbit_reps(tri)) {
        if (t.is_loop()) ++c.loops;
        else ++c.non_loop_orbits;
    }
    return c;
}

VerifyReport verify_presentation(const ProjectivePlane& pl,
                                 const PointLineCorrespondence& lam,
                                 const TrianglePresentation& tri) {
    VerifyReport rep;
    rep.triple_count = tri.size();
    for (const Triple& t : tri.triples) {
        if (t.x < 0 || t.x >= pl.n || t.y < 0 || t.y >= pl.n || t.z < 0 || t.z >= pl.n) {
            rep.verdict = VerifyReport::Verdict::INVALID;
            rep.diagnostics = "point index out of range in " + triple_str(t);
            return rep;
        }
        if (!tri.contains(t.rotated())) {
            rep.verdict = VerifyReport::Verdict::INVALID;
            rep.diagnostics = "not rotation-closed: " + triple_str(t) + " present, " +
                              triple_str(t.rotated()) + " missing";
            return rep;
        }
        if (!pl.lines_of[lam.image[t.x]].contains(t.y)) {
            rep.verdict = VerifyReport::Verdict::INVALID;
            rep.diagnostics = "second coordinate not on the image line of the first in " +
                              triple_str(t);
            return rep;
        }
    }
    // sorted order puts triples sharing (x,y) adjacent
    for (std::size_t i = 1; i < tri.triples.size(); ++i) {
        const Triple& a = tri.triples[i - 1];
        const Triple& b = tri.triples[i];
        if (a.x == b.x && a.y == b.y) {
            rep.verdict = VerifyReport::Verdict::INVALID;
            rep.diagnostics = "two completions of the same pair: " + triple_str(a) +
                              " and " + triple_str(b);
            return rep;
        }
    }
    // rotation closure makes every triple fully admissible, and distinct
    // (x,y) per triple means count == edge count iff every edge is covered
    const std::size_t full = static_cast<std::size_t>(pl.q + 1) * pl.n;
    rep.verdict = (tri.size() == full) ? VerifyReport::Verdict::FULL
                                       : VerifyReport::Verdict::PARTIAL;
    return rep;
}

TrianglePresentation from_cover(const PointLineCorrespondence&,
                                const CoverResult& cover) {
    std::vector<Triple> reps;
    reps.reserve(cover.chosen.size());
    for (const auto& t : cover.chosen) reps.push_back({t[0], t[1], t[2]});
    return expand_reps(reps);
}

Restriction restrict_presentation(const ProjectivePlane& pl,
                                  const PointLineCorrespondence& lam,
                                  const TrianglePresentation& tri,
                                  const SubplaneEmbedding& emb) {
    std::vector<int> pidx(pl.n, -1), lidx(pl.n, -1);
    for (std::size_t i = 0; i < emb.points.size(); ++i) pidx[emb.points[i]] = static_cast<int>(i);
    for (std::size_t i = 0; i < emb.lines.size(); ++i) lidx[emb.lines[i]] = static_cast<int>(i);

    for (int p : emb.points)
        if (lidx[lam.image[p]] == -1)
            throw subplane_error("correspondence does not preserve the subplane: image of point " +
                                 std::to_string(p) + " is line " + std::to_string(lam.image[p]) +
                                 ", outside the subplane");

    std::vector<Triple> sub;
    for (const Triple& t : tri.triples) {
        bool in_x = pidx[t.x] != -1, in_y = pidx[t.y] != -1, in_z = pidx[t.z] != -1;
        if (in_x && in_y && !in_z)
            throw subplane_error("restriction not closed: " + triple_str(t) +
                                 " leaves the subplane in its third coordinate");
        if (in_x && in_y && in_z) sub.push_back({pidx[t.x], pidx[t.y], pidx[t.z]});
    }

    RestrictedPlane rp = restrict_to_subplane(pl, emb);
    Restriction res;
    res.point_map = std::move(rp.point_map);
    res.line_map = std::move(rp.line_map);
    res.plane = std::move(rp.plane);

    std::vector<int> image0(res.plane.n);
    for (int i = 0; i < res.plane.n; ++i) image0[i] = lidx[lam.image[emb.points[i]]];
    res.lam0 = make_correspondence(res.plane, std::move(image0));

    std::sort(sub.begin(), sub.end());
    res.tri0.triples = std::move(sub);

    VerifyReport rep = verify_presentation(res.plane, res.lam0, res.tri0);
    if (rep.verdict != VerifyReport::Verdict::FULL)
        throw subplane_error("restricted presentation is not full at the sub-order (" +
                             std::to_string(rep.triple_count) + " triples" +
                             (rep.diagnostics.empty() ? "" : "; " + rep.diagnostics) + ")");
    return res;
}

bool check_parity(const ProjectivePlane& pl, const TrianglePresentation& tri,
                  const std::vector<int>& a_lines) {
    PointSet a;
    for (int l : a_lines) {
        if (l < 0 || l >= pl.n)
            throw precondition_error("line index " + std::to_string(l) + " out of range");
        a |= pl.lines_of[l];
    }
    for (const Triple& t : tri.triples) {
        int hits = int(a.contains(t.x)) + int(a.contains(t.y)) + int(a.contains(t.z));
        if (hits % 2 == 0) return false;
    }
    return true;
}

std::string export_group_presentation(const TrianglePresentation& tri, int n,
                                      ExportFormat format) {
    const std::vector<Triple> reps = orbit_reps(tri);
    std::ostringstream out;
    if (format == ExportFormat::GENERIC) {
        out << "generators: " << n << "\n";
        out << "relators: " << reps.size() << "\n";
        for (const Triple& t : reps)
            out << "a" << t.x << " a" << t.y << " a" << t.z << "\n";
    } else {
        out << "f := FreeGroup(List([0.." << n - 1
            << "], i -> Concatenation(\"a\", String(i))));;\n";
        out << "a := GeneratorsOfGroup(f);;\n";
        out << "rels := [";
        for (std::size_t i = 0; i < reps.size(); ++i) {
            if (i) out << ",";
            out << "\n  a[" << reps[i].x + 1 << "]*a[" << reps[i].y + 1 << "]*a["
                << reps[i].z + 1 << "]";
        }
        out << (reps.empty() ? "];;\n" : "\n];;\n");
        out << "g := f / rels;;\n";
    }
    return out.str();
}

} // namespace tripres
