#include "tripres/isomorphism.hpp"

#include <algorithm>
#include <cassert>

namespace tripres {

namespace {

// Shared backtracking state.  Assignments are forced through a worklist
// (joins of assigned point pairs, meets of assigned line pairs) and recorded
// on a trail for undo.
struct IsoSearch {
    const ProjectivePlane& src;
    const ProjectivePlane& dst;
    const IsoVisitor& visit;

    std::vector<int> pmap, lmap;   // src -> dst, -1 unassigned
    PointSet pused, lused;         // dst indices taken
    std::vector<int> passigned;    // src points, in assignment order
    std::vector<int> lassigned;    // src lines, in assignment order
    struct Pending {
        bool is_point;
        int s, d;
    };
    std::vector<Pending> queue;
    bool stop = false;

    IsoSearch(const ProjectivePlane& s, const ProjectivePlane& d, const IsoVisitor& v)
        : src(s), dst(d), visit(v), pmap(s.n, -1), lmap(s.n, -1) {}

    // trail entries: src index, +n for lines
    std::vector<int> trail;

    bool set_point(int p, int dp) {
        if (pmap[p] != -1) return pmap[p] == dp;
        if (pused.contains(dp)) return false;
        // every already-assigned line through p must contain the image
        for (int l = src.points_of[p].next(-1); l != -1; l = src.points_of[p].next(l))
            if (lmap[l] != -1 && !dst.lines_of[lmap[l]].contains(dp)) return false;
        pmap[p] = dp;
        pused.add(dp);
        passigned.push_back(p);
        trail.push_back(p);
        // joins with assigned points are forced
        for (int q : passigned)
            if (q != p) queue.push_back({false, src.join(p, q), dst.join(dp, pmap[q])});
        return true;
    }

    bool set_line(int l, int dl) {
        if (lmap[l] != -1) return lmap[l] == dl;
        if (lused.contains(dl)) return false;
        for (int p = src.lines_of[l].next(-1); p != -1; p = src.lines_of[l].next(p))
            if (pmap[p] != -1 && !dst.lines_of[dl].contains(pmap[p])) return false;
        lmap[l] = dl;
        lused.add(dl);
        lassigned.push_back(l);
        trail.push_back(l + src.n);
        for (int m : lassigned)
            if (m != l) queue.push_back({true, src.meet(l, m), dst.meet(dl, lmap[m])});
        return true;
    }

    bool drain() {
        while (!queue.empty()) {
            Pending t = queue.back();
            queue.pop_back();
            bool ok = t.is_point ? set_point(t.s, t.d) : set_line(t.s, t.d);
            if (!ok) {
                queue.clear();
                return false;
            }
        }
        return true;
    }

    // assign and propagate; returns trail mark for undo, or -1 on conflict
    int push(bool is_point, int s, int d) {
        int mark = static_cast<int>(trail.size());
        queue.push_back({is_point, s, d});
        if (drain()) return mark;
        undo(mark);
        return -1;
    }

    void undo(int mark) {
        while (static_cast<int>(trail.size()) > mark) {
            int t = trail.back();
            trail.pop_back();
            if (t < src.n) {
                pused.remove(pmap[t]);
                pmap[t] = -1;
                passigned.pop_back();
            } else {
                lused.remove(lmap[t - src.n]);
                lmap[t - src.n] = -1;
                lassigned.pop_back();
            }
        }
    }

    // distinct unassigned lines joining p to assigned points
    int new_joins(int p) const {
        PointSet seen;
        int count = 0;
        for (int q : passigned) {
            if (q == p) continue;
            int l = src.join(p, q);
            if (lmap[l] == -1 && !seen.contains(l)) {
                seen.add(l);
                ++count;
            }
        }
        return count;
    }

    // Most-constrained unassigned point: prefer >= 2 assigned lines through
    // it (image forced by a meet), then points adding the most new joins with
    // an assigned-line anchor, then free points adding the most new joins.
    int pick_branch_point() const {
        int best = -1, best_tier = -1, best_nj = -1;
        for (int p = 0; p < src.n; ++p) {
            if (pmap[p] != -1) continue;
            int lines = 0;
            for (int l = src.points_of[p].next(-1); l != -1; l = src.points_of[p].next(l))
                if (lmap[l] != -1 && ++lines == 2) break;
            if (lines >= 2) return p;  // forced; lowest index wins
            int nj = new_joins(p);
            int tier = (lines == 1 && nj >= 1) ? 2 : (lines == 0) ? 1 : 0;
            if (tier > best_tier || (tier == best_tier && nj > best_nj)) {
                best = p;
                best_tier = tier;
                best_nj = nj;
            }
        }
        return best;
    }

    // candidate dst points for p: unused, on the images of p's assigned lines
    PointSet candidates(int p) const {
        PointSet cand = PointSet::full(dst.n);
        for (int l = src.points_of[p].next(-1); l != -1; l = src.points_of[p].next(l))
            if (lmap[l] != -1) cand &= dst.lines_of[lmap[l]];
        return cand ^ (cand & pused);
    }

    void search() {
        if (stop) return;
        int p = pick_branch_point();
        if (p == -1) {
            // all points assigned; every line has >= 3 assigned points, so
            // propagation assigned all lines too
            assert(static_cast<int>(lassigned.size()) == src.n);
            if (!visit({pmap, lmap})) stop = true;
            return;
        }
        PointSet cand = candidates(p);
        for (int dp = cand.next(-1); dp != -1; dp = cand.next(dp)) {
            int mark = push(true, p, dp);
            if (mark >= 0) {
                search();
                undo(mark);
            }
            if (stop) return;
        }
    }

    // closure size of a point set under joins and meets (src side only);
    // used to pick a branching seed that determines as much as possible
    static int closure_size(const ProjectivePlane& pl, std::vector<int> pts) {
        PointSet ps, ls;
        for (int p : pts) ps.add(p);
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> plist, llist;
            for (int p = ps.next(-1); p != -1; p = ps.next(p)) plist.push_back(p);
            for (std::size_t i = 0; i < plist.size(); ++i)
                for (std::size_t j = i + 1; j < plist.size(); ++j) {
                    int l = pl.join(plist[i], plist[j]);
                    if (!ls.contains(l)) {
                        ls.add(l);
                        grew = true;
                    }
                }
            for (int l = ls.next(-1); l != -1; l = ls.next(l)) llist.push_back(l);
            for (std::size_t i = 0; i < llist.size(); ++i)
                for (std::size_t j = i + 1; j < llist.size(); ++j) {
                    int p = pl.meet(llist[i], llist[j]);
                    if (!ps.contains(p)) {
                        ps.add(p);
                        grew = true;
                    }
                }
        }
        return ps.count();
    }

    // a quadrilateral (4 points, no 3 collinear) whose join/meet closure is
    // as large as possible, so branching beyond it is minimal
    std::vector<int> seed_quadrilateral() const {
        std::vector<int> best;
        int best_size = -1;
        for (int a = 0; a < std::min(src.n, 3); ++a) {
            int b = a + 1;
            for (int c = 0; c < src.n; ++c) {
                if (src.lines_of[src.join(a, b)].contains(c)) continue;
                int lab = src.join(a, b), lac = src.join(a, c), lbc = src.join(b, c);
                for (int d = 0; d < src.n; ++d) {
                    if (src.lines_of[lab].contains(d) || src.lines_of[lac].contains(d) ||
                        src.lines_of[lbc].contains(d))
                        continue;
                    int size = closure_size(src, {a, b, c, d});
                    if (size > best_size) {
                        best_size = size;
                        best = {a, b, c, d};
                    }
                    if (best_size == src.n) return best;
                    break;  // one d per (a,b,c) is enough for sampling
                }
                if (best_size == src.n) return best;
                break;  // one c per (a,b) likewise
            }
        }
        return best;
    }

    void run(const std::vector<std::pair<int, int>>& forced_points,
             const std::vector<std::pair<int, int>>& forced_lines) {
        for (auto [s, d] : forced_points) queue.push_back({true, s, d});
        for (auto [s, d] : forced_lines) queue.push_back({false, s, d});
        if (!drain()) return;

        if (passigned.empty() && lassigned.empty() && src.n >= 4) {
            // no seeds: branch over images of a high-closure quadrilateral
            // first, then let the constrained search finish the job
            std::vector<int> quad = seed_quadrilateral();
            branch_seed(quad, 0);
            return;
        }
        search();
    }

    void branch_seed(const std::vector<int>& quad, std::size_t i) {
        if (stop) return;
        if (i == quad.size()) {
            search();
            return;
        }
        PointSet cand = candidates(quad[i]);
        for (int dp = cand.next(-1); dp != -1; dp = cand.next(dp)) {
            int mark = push(true, quad[i], dp);
            if (mark >= 0) {
                branch_seed(quad, i + 1);
                undo(mark);
            }
            if (stop) return;
        }
    }
};

} // namespace

void enumerate_plane_isos(const ProjectivePlane& src, const ProjectivePlane& dst,
                          const std::vector<std::pair<int, int>>& forced_points,
                          const std::vector<std::pair<int, int>>& forced_lines,
                          const IsoVisitor& visit) {
    if (src.n != dst.n || src.q != dst.q) return;
    IsoSearch s(src, dst, visit);
    s.run(forced_points, forced_lines);
}

std::vector<Collineation> enumerate_collineations(const ProjectivePlane& pl,
                                                  const std::vector<int>& fixed_points,
                                                  const std::vector<int>& fixed_lines,
                                                  std::optional<std::size_t> limit) {
    std::vector<Collineation> out;
    std::vector<std::pair<int, int>> fp, fl;
    for (int p : fixed_points) fp.emplace_back(p, p);
    for (int l : fixed_lines) fl.emplace_back(l, l);
    enumerate_plane_isos(pl, pl, fp, fl, [&](const PlaneIso& iso) {
        out.push_back({iso.point_map, iso.line_map});
        return !limit || out.size() < *limit;
    });
    return out;
}

std::vector<Correlation> enumerate_correlations(const ProjectivePlane& pl,
                                                std::optional<std::size_t> limit) {
    std::vector<Correlation> out;
    ProjectivePlane d = dual(pl);
    enumerate_plane_isos(pl, d, {}, {}, [&](const PlaneIso& iso) {
        out.push_back({iso.point_map, iso.line_map});
        return !limit || out.size() < *limit;
    });
    return out;
}

} // namespace tripres
