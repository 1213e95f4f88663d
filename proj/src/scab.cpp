#include "tripres/scab.hpp"

#include <algorithm>
#include <deque>

namespace tripres {

ChamberComplex build_scab(const ProjectivePlane& pl, const PointLineCorrespondence& lam,
                          const TrianglePresentation& tri) {
    VerifyReport rep = verify_presentation(pl, lam, tri);
    if (rep.verdict != VerifyReport::Verdict::FULL)
        throw precondition_error(
            "chamber complex requires a full presentation (" +
            std::to_string(rep.triple_count) + " triples" +
            (rep.diagnostics.empty() ? "" : "; " + rep.diagnostics) + ")");

    ChamberComplex c;
    c.n = pl.n;
    c.chambers.reserve(tri.size());
    for (const Triple& t : tri.triples) c.chambers.push_back({t.x, t.y, t.z});

    c.rotation.resize(c.chambers.size());
    for (std::size_t i = 0; i < c.chambers.size(); ++i) {
        const auto& ch = c.chambers[i];
        // rotating the edge labels carries the chamber on (x,y,z) to the one
        // glued to (e_z, e'_x, e''_y), i.e. the triple (z,x,y)
        Triple image{ch[2], ch[0], ch[1]};
        auto it = std::lower_bound(tri.triples.begin(), tri.triples.end(), image);
        if (it == tri.triples.end() || *it != image)
            throw precondition_error("rotation does not permute the chambers");
        c.rotation[i] = static_cast<int>(it - tri.triples.begin());
    }
    return c;
}

BipartiteGraph residue(const ChamberComplex& complex, int vertex) {
    if (vertex < 1 || vertex > 3) throw precondition_error("residue vertex must be 1, 2, or 3");
    BipartiteGraph g;
    g.left_size = g.right_size = complex.n;
    g.adj.assign(static_cast<std::size_t>(2) * complex.n, {});
    for (const auto& ch : complex.chambers) {
        int l, r;
        switch (vertex) {
            case 1: l = ch[0]; r = ch[2]; break;  // e_x  - e''_z
            case 2: l = ch[0]; r = ch[1]; break;  // e_x  - e'_y
            default: l = ch[1]; r = ch[2]; break; // e'_y - e''_z
        }
        g.adj[l].push_back(complex.n + r);
        g.adj[complex.n + r].push_back(l);
        ++g.edge_count;
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
    return g;
}

namespace {

// shortest cycle length through BFS from every vertex; -1 when acyclic
int graph_girth(const BipartiteGraph& g) {
    const int nv = static_cast<int>(g.adj.size());
    int best = -1;
    std::vector<int> dist(nv), parent(nv);
    for (int root = 0; root < nv; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> bfs{root};
        dist[root] = 0;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop_front();
            for (int w : g.adj[u]) {
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    bfs.push_back(w);
                } else if (w != parent[u]) {
                    int cyc = dist[u] + dist[w] + 1;
                    if (best == -1 || cyc < best) best = cyc;
                }
            }
        }
    }
    return best;
}

int graph_diameter(const BipartiteGraph& g) {
    const int nv = static_cast<int>(g.adj.size());
    int diam = 0;
    std::vector<int> dist(nv);
    for (int root = 0; root < nv; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::deque<int> bfs{root};
        dist[root] = 0;
        int reached = 1;
        while (!bfs.empty()) {
            int u = bfs.front();
            bfs.pop_front();
            diam = std::max(diam, dist[u]);
            for (int w : g.adj[u])
                if (dist[w] == -1) {
                    dist[w] = dist[u] + 1;
                    bfs.push_back(w);
                    ++reached;
                }
        }
        if (reached < nv) return -1;  // disconnected
    }
    return diam;
}

// neighbor lists left-side indexed, right side shifted down; empty on any
// structural mismatch (duplicate adjacency, wrong sizes)
std::vector<std::vector<int>> right_neighbor_rows(const BipartiteGraph& g) {
    std::vector<std::vector<int>> rows(g.right_size);
    for (int r = 0; r < g.right_size; ++r) {
        for (int u : g.adj[g.left_size + r]) {
            if (u < 0 || u >= g.left_size) return {};
            rows[r].push_back(u);
        }
        for (std::size_t i = 1; i < rows[r].size(); ++i)
            if (rows[r][i] == rows[r][i - 1]) return {};
    }
    return rows;
}

} // namespace

bool verify_generalized_triangle(const BipartiteGraph& g, int q) {
    if (q < 2) throw precondition_error("order must be at least 2");
    const int m = q * q + q + 1;
    if (g.left_size != m || g.right_size != m) return false;
    if (g.edge_count != static_cast<std::size_t>(m) * (q + 1)) return false;
    for (int u = 0; u < 2 * m; ++u) {
        if (static_cast<int>(g.adj[u].size()) != q + 1) return false;
        for (int w : g.adj[u]) {
            // edges must cross the bipartition
            bool u_left = u < m, w_left = w < m;
            if (u_left == w_left || w < 0 || w >= 2 * m) return false;
        }
        for (std::size_t i = 1; i < g.adj[u].size(); ++i)
            if (g.adj[u][i] == g.adj[u][i - 1]) return false;
    }
    return graph_diameter(g) == 3 && graph_girth(g) == 6;
}

std::optional<ResidueIso> residue_plane_iso(const BipartiteGraph& g,
                                            const ProjectivePlane& pl) {
    if (g.left_size != pl.n || g.right_size != pl.n) return std::nullopt;
    std::vector<std::vector<int>> rows = right_neighbor_rows(g);
    if (rows.empty() && pl.n > 0) return std::nullopt;

    // the residue as a plane: left vertices play points, right play lines
    ProjectivePlane as_plane;
    try {
        as_plane = make_plane(rows);
    } catch (const error&) {
        return std::nullopt;
    }

    std::optional<ResidueIso> found;
    enumerate_plane_isos(as_plane, pl, {}, {}, [&](const PlaneIso& iso) {
        found = ResidueIso{iso.point_map, iso.line_map, false};
        return false;
    });
    if (found) return found;

    // flipped orientation: left vertices play lines, right play points
    enumerate_plane_isos(as_plane, dual(pl), {}, {}, [&](const PlaneIso& iso) {
        // point_map sends left vertices to dual points, i.e. lines of pl
        found = ResidueIso{iso.point_map, iso.line_map, true};
        return false;
    });
    return found;
}

} // namespace tripres
