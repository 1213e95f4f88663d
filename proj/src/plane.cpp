#include "tripres/plane.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace tripres {

std::vector<int> ProjectivePlane::line_points(int l) const {
    std::vector<int> pts;
    pts.reserve(q + 1);
    for (int p = lines_of[l].next(-1); p != -1; p = lines_of[l].next(p)) pts.push_back(p);
    return pts;
}

static int order_from_row_length(std::size_t k, std::size_t rows) {
    int q = static_cast<int>(k) - 1;
    if (q < 2) throw parse_error("line with fewer than 3 points");
    std::size_t n = static_cast<std::size_t>(q) * q + q + 1;
    if (rows != n)
        throw parse_error("expected " + std::to_string(n) + " lines for order " +
                          std::to_string(q) + ", got " + std::to_string(rows));
    return q;
}

ProjectivePlane make_plane(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw parse_error("empty incidence table");
    const int q = order_from_row_length(rows[0].size(), rows.size());
    const int n = q * q + q + 1;
    if (n > PointSet::capacity) throw parse_error("plane too large (more than 128 points)");

    ProjectivePlane pl;
    pl.q = q;
    pl.n = n;
    pl.lines_of.assign(n, {});
    pl.points_of.assign(n, {});
    for (int l = 0; l < n; ++l) {
        if (rows[l].size() != static_cast<std::size_t>(q + 1))
            throw parse_error("line " + std::to_string(l) + " has " +
                              std::to_string(rows[l].size()) + " points, expected " +
                              std::to_string(q + 1));
        for (int p : rows[l]) {
            if (p < 0 || p >= n)
                throw parse_error("line " + std::to_string(l) + ": point index " +
                                  std::to_string(p) + " out of range");
            if (pl.lines_of[l].contains(p))
                throw invalid_plane_error("line " + std::to_string(l) +
                                          " repeats point " + std::to_string(p));
            pl.lines_of[l].add(p);
            pl.points_of[p].add(l);
        }
    }

    // axiom: every point on exactly q+1 lines
    for (int p = 0; p < n; ++p)
        if (pl.points_of[p].count() != q + 1)
            throw invalid_plane_error("point " + std::to_string(p) + " lies on " +
                                      std::to_string(pl.points_of[p].count()) +
                                      " lines, expected " + std::to_string(q + 1));

    // axiom: two distinct points share exactly one line; fill the join table
    pl.join_table.assign(static_cast<std::size_t>(n) * n, -1);
    for (int p1 = 0; p1 < n; ++p1)
        for (int p2 = p1 + 1; p2 < n; ++p2) {
            PointSet common = pl.points_of[p1] & pl.points_of[p2];
            if (common.count() != 1)
                throw invalid_plane_error("points " + std::to_string(p1) + "," +
                                          std::to_string(p2) + " lie on " +
                                          std::to_string(common.count()) +
                                          " common lines");
            pl.join_table[p1 * n + p2] = pl.join_table[p2 * n + p1] = common.first();
        }

    // axiom: two distinct lines meet in exactly one point; fill the meet table
    pl.meet_table.assign(static_cast<std::size_t>(n) * n, -1);
    for (int l1 = 0; l1 < n; ++l1)
        for (int l2 = l1 + 1; l2 < n; ++l2) {
            PointSet common = pl.lines_of[l1] & pl.lines_of[l2];
            if (common.count() != 1)
                throw invalid_plane_error("lines " + std::to_string(l1) + "," +
                                          std::to_string(l2) + " meet in " +
                                          std::to_string(common.count()) + " points");
            pl.meet_table[l1 * n + l2] = pl.meet_table[l2 * n + l1] = common.first();
        }

    return pl;
}

ProjectivePlane load_plane(std::istream& in) {
    std::vector<std::vector<int>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ss(line);
        std::vector<int> row;
        long long v;
        while (ss >> v) row.push_back(static_cast<int>(v));
        if (!ss.eof()) throw parse_error("non-integer token in incidence table");
        if (!row.empty()) rows.push_back(std::move(row));
    }
    return make_plane(rows);
}

ProjectivePlane load_plane_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open plane file: " + path);
    return load_plane(f);
}

ProjectivePlane difference_set_plane(int q) {
    std::vector<int> ds;
    if (q == 2) ds = {1, 2, 4};           // mod 7
    else if (q == 3) ds = {0, 1, 3, 9};   // mod 13
    else throw precondition_error("unsupported order " + std::to_string(q) +
                                  " for a difference-set plane (want 2 or 3)");
    const int n = q * q + q + 1;
    std::vector<std::vector<int>> rows(n);
    for (int x = 0; x < n; ++x)
        for (int d : ds) rows[x].push_back((x + d) % n);
    return make_plane(rows);
}

ProjectivePlane dual(const ProjectivePlane& pl) {
    ProjectivePlane d;
    d.q = pl.q;
    d.n = pl.n;
    d.lines_of = pl.points_of;
    d.points_of = pl.lines_of;
    d.join_table = pl.meet_table;
    d.meet_table = pl.join_table;
    return d;
}

SubplaneEmbedding is_baer_subplane(const ProjectivePlane& pl,
                                   const std::vector<int>& points,
                                   const std::vector<int>& lines) {
    for (int p : points)
        if (p < 0 || p >= pl.n) throw precondition_error("subplane point index out of range");
    for (int l : lines)
        if (l < 0 || l >= pl.n) throw precondition_error("subplane line index out of range");

    SubplaneEmbedding emb;
    emb.points = points;
    emb.lines = lines;
    std::sort(emb.points.begin(), emb.points.end());
    std::sort(emb.lines.begin(), emb.lines.end());
    emb.points.erase(std::unique(emb.points.begin(), emb.points.end()), emb.points.end());
    emb.lines.erase(std::unique(emb.lines.begin(), emb.lines.end()), emb.lines.end());

    const std::size_t np = emb.points.size();
    if (np != emb.lines.size())
        throw subplane_error("not a subplane: " + std::to_string(np) + " points vs " +
                             std::to_string(emb.lines.size()) + " lines");
    // order q0 from n0 = q0^2 + q0 + 1
    int q0 = -1;
    for (int c = 1; static_cast<std::size_t>(c) * c + c + 1 <= np; ++c)
        if (static_cast<std::size_t>(c) * c + c + 1 == np) q0 = c;
    if (q0 < 2)
        throw subplane_error("not a subplane: " + std::to_string(np) +
                             " points is not q^2+q+1 for any order q >= 2");
    emb.sub_order = q0;

    PointSet pset, lset;
    for (int p : emb.points) pset.add(p);
    for (int l : emb.lines) lset.add(l);

    // each chosen line must meet the chosen points in exactly q0+1 of them,
    // and each chosen point must lie on exactly q0+1 chosen lines
    for (int l : emb.lines) {
        int c = (pl.lines_of[l] & pset).count();
        if (c != q0 + 1)
            throw subplane_error("not a subplane: line " + std::to_string(l) + " meets " +
                                 std::to_string(c) + " subplane points, expected " +
                                 std::to_string(q0 + 1));
    }
    for (int p : emb.points) {
        int c = (pl.points_of[p] & lset).count();
        if (c != q0 + 1)
            throw subplane_error("not a subplane: point " + std::to_string(p) + " lies on " +
                                 std::to_string(c) + " subplane lines, expected " +
                                 std::to_string(q0 + 1));
    }
    // joins of subplane points must be subplane lines (closure)
    for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = i + 1; j < np; ++j)
            if (!lset.contains(pl.join(emb.points[i], emb.points[j])))
                throw subplane_error("not a subplane: join of points " +
                                     std::to_string(emb.points[i]) + "," +
                                     std::to_string(emb.points[j]) + " leaves the line set");

    // Baer property: proper, and the subplane touches everything
    if (q0 == pl.q)
        throw subplane_error("subplane but not Baer: not a proper subplane");
    for (int p = 0; p < pl.n; ++p)
        if ((pl.points_of[p] & lset).empty())
            throw subplane_error("subplane but not Baer: point " + std::to_string(p) +
                                 " lies on no subplane line");
    for (int l = 0; l < pl.n; ++l)
        if ((pl.lines_of[l] & pset).empty())
            throw subplane_error("subplane but not Baer: line " + std::to_string(l) +
                                 " contains no subplane point");
    if (q0 * q0 != pl.q)
        throw subplane_error("subplane but not Baer: order " + std::to_string(q0) +
                             " is not the square root of " + std::to_string(pl.q));
    emb.baer = true;
    return emb;
}

RestrictedPlane restrict_to_subplane(const ProjectivePlane& pl,
                                     const SubplaneEmbedding& emb) {
    const int n0 = static_cast<int>(emb.points.size());
    std::vector<int> pidx(pl.n, -1);
    for (int i = 0; i < n0; ++i) pidx[emb.points[i]] = i;

    std::vector<std::vector<int>> rows;
    rows.reserve(emb.lines.size());
    for (int l : emb.lines) {
        std::vector<int> row;
        for (int p : pl.line_points(l))
            if (pidx[p] != -1) row.push_back(pidx[p]);
        rows.push_back(std::move(row));
    }
    RestrictedPlane out;
    out.plane = make_plane(rows);  // re-verifies the axioms at order sub_order
    out.point_map = emb.points;
    out.line_map = emb.lines;
    return out;
}

DesarguesReport check_desargues_config(const ProjectivePlane& pl, int center,
                                       const std::array<int, 3>& t1,
                                       const std::array<int, 3>& t2) {
    auto in_range = [&](int p) { return p >= 0 && p < pl.n; };
    if (!in_range(center) || !in_range(t1[0]) || !in_range(t1[1]) || !in_range(t1[2]) ||
        !in_range(t2[0]) || !in_range(t2[1]) || !in_range(t2[2]))
        throw precondition_error("point index out of range");

    for (int i = 0; i < 3; ++i) {
        if (t1[i] == center || t2[i] == center)
            throw degenerate_config_error("triangle vertex equals the center");
        if (t1[i] == t2[i])
            throw degenerate_config_error("corresponding vertices coincide");
    }
    auto collinear3 = [&](int a, int b, int c) {
        return a == b || b == c || a == c || pl.lines_of[pl.join(a, b)].contains(c);
    };
    if (collinear3(t1[0], t1[1], t1[2]))
        throw degenerate_config_error("first triple is collinear, not a triangle");
    if (collinear3(t2[0], t2[1], t2[2]))
        throw degenerate_config_error("second triple is collinear, not a triangle");

    // perspective from the center, through three distinct perspector lines
    std::array<int, 3> persp{};
    for (int i = 0; i < 3; ++i) {
        persp[i] = pl.join(t1[i], t2[i]);
        if (!pl.lines_of[persp[i]].contains(center))
            throw degenerate_config_error("vertex pair " + std::to_string(i) +
                                          " is not collinear with the center");
    }
    if (persp[0] == persp[1] || persp[1] == persp[2] || persp[0] == persp[2])
        throw degenerate_config_error("perspector lines are not distinct");

    DesarguesReport rep;
    static constexpr int pair_idx[3][2] = {{0, 1}, {1, 2}, {0, 2}};
    for (int k = 0; k < 3; ++k) {
        int i = pair_idx[k][0], j = pair_idx[k][1];
        int s1 = pl.join(t1[i], t1[j]);
        int s2 = pl.join(t2[i], t2[j]);
        // distinct perspector lines force distinct side lines (shared side
        // would put a vertex on two perspector lines, i.e. at the center)
        rep.axis[k] = pl.meet(s1, s2);
    }
    int a = rep.axis[0], b = rep.axis[1], c = rep.axis[2];
    if (a == b && b == c) {
        rep.collinear = true;
        rep.axis_line = -1;
    } else {
        int u = a, v = (b != a) ? b : c;
        rep.axis_line = pl.join(u, v);
        rep.collinear = pl.lines_of[rep.axis_line].contains(a) &&
                        pl.lines_of[rep.axis_line].contains(b) &&
                        pl.lines_of[rep.axis_line].contains(c);
    }
    return rep;
}

} // namespace tripres
