#include "flatpants/metric_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <random>
#include <stdexcept>
#include <unordered_map>

namespace flatpants {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Local coordinates of a sample: barycentric in the triangle, (u, t)
// fractions of base and height in a rectangle. Instantiation is affine, so
// one skeleton can be measured in several developments.
struct Local {
    int face = 0;  // 0 = triangle, 1..3 = rectangles
    double u = 0.0, v = 0.0, w = 0.0;
};

Vec2 instantiate(const Development& d, const Local& lc) {
    if (lc.face == 0) return lc.u * d.s[0] + lc.v * d.s[1] + lc.w * d.s[2];
    const Rectangle& r = d.rect[lc.face - 1];
    return r.corner[0] + lc.u * (r.corner[3] - r.corner[0]) + (lc.v * r.height) * r.normal;
}

struct Skeleton {
    struct Edge {
        int a = 0, b = 0;    // node ids, a < b
        int ia = 0, ib = 0;  // incarnation indices realizing the reference length
        double len = 0.0;
    };

    std::vector<std::vector<Local>> nodes;
    std::vector<Edge> edges;
    int singularity = -1;
    std::array<std::vector<int>, 3> boundary_nodes;
};

struct Record {
    int node = 0;
    int inc = 0;
    Vec2 pos;
};

// Spatial-hash pair scan: calls fn on every pair of records (from different
// nodes) within `radius` of each other. The cell size must be >= radius and
// comparable to the sample spacing so cell indices stay small.
template <typename Fn>
void scan_pairs(const std::vector<Record>& recs, double radius, double cell, Fn&& fn) {
    if (recs.empty()) return;
    auto key = [&](int cx, int cy) {
        return (static_cast<std::int64_t>(cx) << 32) ^ (static_cast<std::uint32_t>(cy));
    };
    std::unordered_map<std::int64_t, std::vector<int>> grid;
    grid.reserve(recs.size() * 2);
    auto cx_of = [&](double x) { return static_cast<int>(std::floor(x / cell)); };
    for (int r = 0; r < static_cast<int>(recs.size()); ++r)
        grid[key(cx_of(recs[r].pos.x), cx_of(recs[r].pos.y))].push_back(r);

    const double r2 = radius * radius;
    for (int r = 0; r < static_cast<int>(recs.size()); ++r) {
        const Record& a = recs[r];
        const int cx = cx_of(a.pos.x), cy = cx_of(a.pos.y);
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy) {
                auto it = grid.find(key(cx + dx, cy + dy));
                if (it == grid.end()) continue;
                for (int o : it->second) {
                    if (o <= r) continue;
                    const Record& b = recs[o];
                    if (a.node == b.node) continue;
                    const Vec2 dlt = b.pos - a.pos;
                    const double d2 = dot(dlt, dlt);
                    if (d2 <= r2) fn(a, b, std::sqrt(d2));
                }
            }
    }
}

Skeleton build_skeleton(const Development& d, double h) {
    if (!(h > 0.0)) throw std::invalid_argument("build_graph: spacing must be positive");
    double min_dim = std::min({d.params.l[0], d.params.l[1], d.params.l[2]});
    for (const Rectangle& r : d.rect)
        if (!r.collapsed) min_dim = std::min(min_dim, r.height);
    if (h > min_dim)
        throw std::invalid_argument("build_graph: spacing exceeds the smallest face dimension");

    Skeleton sk;
    auto add_node = [&] {
        sk.nodes.emplace_back();
        return static_cast<int>(sk.nodes.size()) - 1;
    };
    auto side_bary = [](int i, double f) {
        Local lc;
        double b[3] = {0.0, 0.0, 0.0};
        b[(i + 1) % 3] = 1.0 - f;
        b[(i + 2) % 3] = f;
        lc.u = b[0];
        lc.v = b[1];
        lc.w = b[2];
        return lc;
    };

    std::array<int, 3> m{}, q{};
    for (int i = 0; i < 3; ++i) {
        m[i] = static_cast<int>(std::ceil(d.params.l[i] / h));
        q[i] = d.rect[i].collapsed ? 0 : static_cast<int>(std::ceil(d.rect[i].height / h));
    }

    // every copy of the singularity is one node
    const int s = add_node();
    sk.singularity = s;
    for (int v = 0; v < 3; ++v) sk.nodes[s].push_back(side_bary((v + 1) % 3, 0.0));
    for (int i = 0; i < 3; ++i) {
        if (d.rect[i].collapsed) continue;
        sk.nodes[s].push_back({i + 1, 0.0, 0.0, 0.0});
        sk.nodes[s].push_back({i + 1, 1.0, 0.0, 0.0});
    }

    // side chains, shared by the triangle and the attached rectangle; for a
    // collapsed rectangle the side is the boundary component itself
    for (int i = 0; i < 3; ++i) {
        if (d.rect[i].collapsed) sk.boundary_nodes[i].push_back(s);
        for (int k = 1; k < m[i]; ++k) {
            const double f = static_cast<double>(k) / m[i];
            const int n = add_node();
            sk.nodes[n].push_back(side_bary(i, f));
            if (d.rect[i].collapsed)
                sk.boundary_nodes[i].push_back(n);
            else
                sk.nodes[n].push_back({i + 1, f, 0.0, 0.0});
        }
    }

    for (int i = 0; i < 3; ++i) {
        if (d.rect[i].collapsed) continue;

        // the cut: interior points carry both identified copies, the far
        // corner is the single point where the cut meets c_i
        for (int k = 1; k < q[i]; ++k) {
            const double f = static_cast<double>(k) / q[i];
            const int n = add_node();
            sk.nodes[n].push_back({i + 1, 0.0, f, 0.0});
            sk.nodes[n].push_back({i + 1, 1.0, f, 0.0});
        }
        const int far = add_node();
        sk.nodes[far].push_back({i + 1, 0.0, 1.0, 0.0});
        sk.nodes[far].push_back({i + 1, 1.0, 1.0, 0.0});
        sk.boundary_nodes[i].push_back(far);

        for (int k = 1; k < m[i]; ++k) {
            const int n = add_node();
            sk.nodes[n].push_back({i + 1, static_cast<double>(k) / m[i], 1.0, 0.0});
            sk.boundary_nodes[i].push_back(n);
        }

        for (int j = 1; j < m[i]; ++j)
            for (int k = 1; k < q[i]; ++k) {
                const int n = add_node();
                sk.nodes[n].push_back(
                    {i + 1, static_cast<double>(j) / m[i], static_cast<double>(k) / q[i], 0.0});
            }
    }

    // triangle interior grid; empty for a degenerate triangle, whose metric
    // the boundary chains already carry
    const double area2 = cross(d.s[1] - d.s[0], d.s[2] - d.s[0]);
    if (area2 > 0.0) {
        const double margin = 0.05 * h;
        double xmin = std::min({d.s[0].x, d.s[1].x, d.s[2].x});
        double xmax = std::max({d.s[0].x, d.s[1].x, d.s[2].x});
        double ymin = std::min({d.s[0].y, d.s[1].y, d.s[2].y});
        double ymax = std::max({d.s[0].y, d.s[1].y, d.s[2].y});
        for (int gy = static_cast<int>(std::ceil(ymin / h)); gy * h <= ymax; ++gy)
            for (int gx = static_cast<int>(std::ceil(xmin / h)); gx * h <= xmax; ++gx) {
                const Vec2 p{gx * h, gy * h};
                bool inside = true;
                for (int e = 0; e < 3 && inside; ++e) {
                    const Vec2 a = d.s[e], b = d.s[(e + 1) % 3];
                    inside = cross(b - a, p - a) >= margin * distance(a, b);
                }
                if (!inside) continue;
                const int n = add_node();
                Local lc;
                lc.u = cross(d.s[2] - d.s[1], p - d.s[1]) / area2;
                lc.v = cross(d.s[0] - d.s[2], p - d.s[2]) / area2;
                lc.w = 1.0 - lc.u - lc.v;
                sk.nodes[n].push_back(lc);
            }
    }

    // reference positions per incarnation, grouped by face
    std::array<std::vector<Record>, 4> by_face;
    for (int n = 0; n < static_cast<int>(sk.nodes.size()); ++n)
        for (int i = 0; i < static_cast<int>(sk.nodes[n].size()); ++i) {
            const Local& lc = sk.nodes[n][i];
            by_face[lc.face].push_back({n, i, instantiate(d, lc)});
        }

    // merge samples that coincide in the reference embedding (degenerate
    // triangles overlay chains of different sides), so weights stay positive
    const double tiny = 1e-7 * h;
    std::vector<int> parent(sk.nodes.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    bool merged_any = false;
    for (const auto& recs : by_face)
        scan_pairs(recs, tiny, h, [&](const Record& a, const Record& b, double) {
            parent[find(a.node)] = find(b.node);
            merged_any = true;
        });

    if (merged_any) {
        std::vector<int> id(sk.nodes.size(), -1);
        std::vector<std::vector<Local>> nodes;
        std::vector<int> inc_base(sk.nodes.size(), 0);
        for (std::size_t n = 0; n < sk.nodes.size(); ++n) {
            const int root = find(static_cast<int>(n));
            if (id[root] < 0) {
                id[root] = static_cast<int>(nodes.size());
                nodes.emplace_back();
            }
            inc_base[n] = static_cast<int>(nodes[id[root]].size());
            for (const Local& lc : sk.nodes[n]) nodes[id[root]].push_back(lc);
        }
        for (auto& recs : by_face)
            for (Record& r : recs) {
                const int root = find(r.node);
                r.inc += inc_base[r.node];
                r.node = id[root];
            }
        sk.singularity = id[find(sk.singularity)];
        for (auto& list : sk.boundary_nodes) {
            for (int& n : list) n = id[find(n)];
            std::sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
        sk.nodes = std::move(nodes);
    }

    for (const auto& recs : by_face)
        scan_pairs(recs, 2.5 * h, 2.5 * h, [&](const Record& a, const Record& b, double len) {
            if (a.node < b.node)
                sk.edges.push_back({a.node, b.node, a.inc, b.inc, len});
            else
                sk.edges.push_back({b.node, a.node, b.inc, a.inc, len});
        });
    std::sort(sk.edges.begin(), sk.edges.end(), [](const Skeleton::Edge& x, const Skeleton::Edge& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        return x.len < y.len;
    });
    sk.edges.erase(std::unique(sk.edges.begin(), sk.edges.end(),
                               [](const Skeleton::Edge& x, const Skeleton::Edge& y) {
                                   return x.a == y.a && x.b == y.b;
                               }),
                   sk.edges.end());
    return sk;
}

std::vector<double> dijkstra(const std::vector<std::vector<std::pair<int, double>>>& adj,
                             const std::vector<int>& sources) {
    std::vector<double> dist(adj.size(), kInf);
    using Item = std::pair<double, int>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    for (int s : sources) {
        dist[s] = 0.0;
        heap.push({0.0, s});
    }
    while (!heap.empty()) {
        const auto [du, u] = heap.top();
        heap.pop();
        if (du > dist[u]) continue;
        for (const auto& [v, w] : adj[u])
            if (du + w < dist[v]) {
                dist[v] = du + w;
                heap.push({dist[v], v});
            }
    }
    return dist;
}

void check_connected(const std::vector<std::vector<std::pair<int, double>>>& adj) {
    if (adj.empty()) return;
    std::vector<char> seen(adj.size(), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (const auto& [v, w] : adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
    }
    if (reached != adj.size())
        throw std::logic_error("build_graph: sample graph is not connected");
}

}  // namespace

double default_resolution(const LengthRadiusParams& p) {
    double d = std::min({p.l[0], p.l[1], p.l[2]});
    for (double r : p.r)
        if (r > 0.0) d = std::min(d, r);
    return d / 20.0;
}

MetricGraph build_graph(const Development& d, double h) {
    const Skeleton sk = build_skeleton(d, h);

    MetricGraph g;
    g.resolution = h;
    g.singularity = sk.singularity;
    g.boundary_nodes = sk.boundary_nodes;
    g.nodes.resize(sk.nodes.size());
    for (std::size_t n = 0; n < sk.nodes.size(); ++n)
        for (const Local& lc : sk.nodes[n])
            g.nodes[n].push_back({lc.face, instantiate(d, lc)});
    g.adjacency.resize(sk.nodes.size());
    for (const Skeleton::Edge& e : sk.edges) {
        g.adjacency[e.a].push_back({e.b, e.len});
        g.adjacency[e.b].push_back({e.a, e.len});
    }
    check_connected(g.adjacency);
    return g;
}

std::vector<double> shortest_paths(const MetricGraph& g, int source) {
    if (source < 0 || source >= static_cast<int>(g.nodes.size()))
        throw std::invalid_argument("shortest_paths: source out of range");
    return dijkstra(g.adjacency, {source});
}

double distance_to_boundary(const MetricGraph& g, int i) {
    if (i < 0 || i > 2) throw std::invalid_argument("distance_to_boundary: index out of range");
    const std::vector<double> dist = dijkstra(g.adjacency, {g.singularity});
    double best = kInf;
    for (int n : g.boundary_nodes[i]) best = std::min(best, dist[n]);
    if (!std::isfinite(best)) throw std::logic_error("distance_to_boundary: boundary unreachable");
    return best;
}

double distance_between_boundaries(const MetricGraph& g, int j, int k) {
    if (j < 0 || j > 2 || k < 0 || k > 2)
        throw std::invalid_argument("distance_between_boundaries: index out of range");
    if (j == k)
        throw std::invalid_argument("distance_between_boundaries: the components must differ");
    const std::vector<double> dist = dijkstra(g.adjacency, g.boundary_nodes[j]);
    double best = kInf;
    for (int n : g.boundary_nodes[k]) best = std::min(best, dist[n]);
    if (!std::isfinite(best))
        throw std::logic_error("distance_between_boundaries: boundary unreachable");
    return best;
}

double structure_distance(const LengthRadiusParams& p, const LengthRadiusParams& q,
                          int n_pairs, std::uint64_t seed, double h) {
    if (n_pairs < 1) throw std::invalid_argument("structure_distance: need at least one pair");

    for (const LengthRadiusParams* pp : {&p, &q}) {
        const Verdict v = validate_lr(*pp);
        if (!v.valid) {
            std::string msg = "structure_distance: invalid parameters:";
            for (const auto& viol : v.violations) msg += " " + viol.name;
            throw std::invalid_argument(msg);
        }
    }
    const DegeneracyReport rp = classify(p), rq = classify(q);
    if (rp.location != rq.location || rp.boundary_index != rq.boundary_index)
        throw std::invalid_argument(
            "structure_distance: combinatorial types differ (the singularity must be interior in "
            "both structures, or on the same boundary component in both)");

    // reference structure: coordinate-wise envelope of the two inputs, so the
    // skeleton resolves every face of either one
    LengthRadiusParams ref;
    for (int i = 0; i < 3; ++i) {
        ref.l[i] = std::max(p.l[i], q.l[i]);
        ref.r[i] = std::max(p.r[i], q.r[i]);
    }
    const Development dev_ref = build(ref);
    const Development dev_p = build(p);
    const Development dev_q = build(q);
    if (h <= 0.0) h = default_resolution(ref);

    const Skeleton sk = build_skeleton(dev_ref, h);
    const int n_nodes = static_cast<int>(sk.nodes.size());

    std::vector<double> wp(sk.edges.size()), wq(sk.edges.size());
    for (std::size_t e = 0; e < sk.edges.size(); ++e) {
        const Skeleton::Edge& ed = sk.edges[e];
        const Local& la = sk.nodes[ed.a][ed.ia];
        const Local& lb = sk.nodes[ed.b][ed.ib];
        wp[e] = distance(instantiate(dev_p, la), instantiate(dev_p, lb));
        wq[e] = distance(instantiate(dev_q, la), instantiate(dev_q, lb));
    }
    std::vector<std::vector<std::pair<int, double>>> adj_p(n_nodes), adj_q(n_nodes);
    for (std::size_t e = 0; e < sk.edges.size(); ++e) {
        const Skeleton::Edge& ed = sk.edges[e];
        adj_p[ed.a].push_back({ed.b, wp[e]});
        adj_p[ed.b].push_back({ed.a, wp[e]});
        adj_q[ed.a].push_back({ed.b, wq[e]});
        adj_q[ed.b].push_back({ed.a, wq[e]});
    }

    std::mt19937_64 eng(seed);
    auto pick = [&] { return static_cast<int>(eng() % static_cast<std::uint64_t>(n_nodes)); };
    const int n_sources = std::min(n_pairs, 16);

    double sup = 0.0;
    int remaining = n_pairs;
    for (int si = 0; si < n_sources; ++si) {
        const int src = pick();
        const int targets = remaining / (n_sources - si);
        remaining -= targets;
        const std::vector<double> dp = dijkstra(adj_p, {src});
        const std::vector<double> dq = dijkstra(adj_q, {src});
        for (int t = 0; t < targets; ++t) {
            const int tgt = pick();
            sup = std::max(sup, std::abs(dp[tgt] - dq[tgt]));
        }
    }
    return sup;
}

}  // namespace flatpants
