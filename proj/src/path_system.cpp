#include "ncforest/path_system.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <unordered_set>

namespace ncf {

int PathSystem::original_count() const {
    int c = 0;
    for (int p = 0; p < size(); ++p) c += !is_aux(p);
    return c;
}

PathSystem path_system_from_geometry(const std::vector<Point>& pts, std::vector<Path> paths) {
    std::set<std::pair<Vertex, Vertex>> es;
    for (const Path& p : paths)
        for (size_t i = 0; i + 1 < p.size(); ++i)
            es.insert({std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1])});
    PathSystem ps;
    ps.graph = plane_graph_from_geometry(pts, {es.begin(), es.end()});
    ps.paths = std::move(paths);
    ps.auxiliary.assign(ps.paths.size(), 0);
    return ps;
}

bool ValidationReport::has(const std::string& r) const { return count(r) > 0; }

int ValidationReport::count(const std::string& r) const {
    int c = 0;
    for (const auto& v : violations) c += v.rule == r;
    return c;
}

int Incidence::pos_in(int path, Vertex v) const {
    const auto& a = at_vertex[v];
    auto it = std::lower_bound(a.begin(), a.end(), std::pair<int, int>{path, -1});
    if (it == a.end() || it->first != path) return -1;
    return it->second;
}

Incidence build_incidence(const PathSystem& ps) {
    const PlaneGraph& g = ps.graph;
    Incidence inc;
    inc.at_vertex.resize(g.vertex_count());
    inc.at_edge.resize(g.edge_count());
    for (int p = 0; p < ps.size(); ++p) {
        const Path& path = ps.paths[p];
        for (int i = 0; i < static_cast<int>(path.size()); ++i) {
            inc.at_vertex[path[i]].push_back({p, i});
            if (i + 1 < static_cast<int>(path.size())) {
                int e = g.edge_id(path[i], path[i + 1]);
                if (e >= 0) inc.at_edge[e].push_back(p);
            }
        }
    }
    return inc;
}

std::vector<std::array<int, 2>> terminal_positions(const PathSystem& ps) {
    const PlaneGraph& g = ps.graph;
    std::vector<Vertex> walk = g.outer_walk();
    int L = static_cast<int>(walk.size());
    std::vector<std::vector<int>> occ(g.vertex_count());
    for (int i = 0; i < L; ++i) occ[walk[i]].push_back(i);
    std::vector<std::array<int, 2>> out(ps.size(), {-1, -1});
    for (int p = 0; p < ps.size(); ++p) {
        const Path& path = ps.paths[p];
        if (path.size() < 2) continue;
        for (int r = 0; r < 2; ++r) {
            Vertex x = r == 0 ? path.front() : path.back();
            Vertex a = r == 0 ? path[1] : path[path.size() - 2];
            if (x < 0 || x >= g.vertex_count() || occ[x].empty()) continue;
            int pick = occ[x].front();
            for (int i : occ[x])
                if (walk[(i + L - 1) % L] == a || walk[(i + 1) % L] == a) {
                    pick = i;
                    break;
                }
            out[p][r] = pick;
        }
    }
    return out;
}

std::vector<TerminalEntry> terminal_order(const PathSystem& ps) {
    auto pos = terminal_positions(ps);
    std::vector<TerminalEntry> out;
    for (int p = 0; p < ps.size(); ++p)
        for (int r = 0; r < 2; ++r) {
            if (pos[p][r] < 0)
                throw Error(ErrorCode::TerminalNotOnOuterFace, "path " + std::to_string(p));
            Vertex v = r == 0 ? ps.paths[p].front() : ps.paths[p].back();
            out.push_back({v, p, r, pos[p][r]});
        }
    std::stable_sort(out.begin(), out.end(),
                     [](const TerminalEntry& a, const TerminalEntry& b) { return a.pos < b.pos; });
    return out;
}

PairStatus check_pair(const PlaneGraph& g, const Path& P, const Path& Q,
                      const std::function<int(Vertex)>& pos_in_q,
                      std::vector<std::pair<int, int>>* shared_out) {
    std::vector<std::pair<int, int>> shared;
    for (int i = 0; i < static_cast<int>(P.size()); ++i) {
        int j = pos_in_q(P[i]);
        if (j >= 0) shared.push_back({i, j});
    }
    if (shared_out) *shared_out = shared;
    int k = static_cast<int>(shared.size());
    if (k == 0) return PairStatus::Ok;
    for (int t = 1; t < k; ++t) {
        if (shared[t].first != shared[t - 1].first + 1) return PairStatus::NotTouch;
        int dj = shared[t].second - shared[t - 1].second;
        if (dj != 1 && dj != -1) return PairStatus::NotTouch;
        if (t >= 2 && dj != shared[t - 1].second - shared[t - 2].second) return PairStatus::NotTouch;
    }
    auto rot_idx = [&](Vertex v, Vertex w) { return g.rot_index(g.dart_id(v, w)); };
    int np = static_cast<int>(P.size()), nq = static_cast<int>(Q.size());
    if (k == 1) {
        auto [i, j] = shared[0];
        if (i == 0 || i + 1 == np || j == 0 || j + 1 == nq) return PairStatus::Ok;
        Vertex v = P[i];
        int deg = g.degree(v);
        int a = rot_idx(v, P[i - 1]), b = rot_idx(v, P[i + 1]);
        int c = rot_idx(v, Q[j - 1]), d = rot_idx(v, Q[j + 1]);
        auto between = [&](int x) { return (x - a + deg) % deg < (b - a + deg) % deg; };
        return between(c) != between(d) ? PairStatus::Cross : PairStatus::Ok;
    }
    // segment ends in p order; compare which outside dart comes first clockwise
    int i0 = shared[0].first, j0 = shared[0].second;
    int i1 = shared[k - 1].first, j1 = shared[k - 1].second;
    int dir = shared[1].second - j0;
    if (i0 == 0 || i1 + 1 == np) return PairStatus::Ok;
    int ja = j0 - dir, jb = j1 + dir;
    if (ja < 0 || ja >= nq || jb < 0 || jb >= nq) return PairStatus::Ok;
    auto p_first = [&](Vertex v, Vertex seg, Vertex x, Vertex y) {
        int deg = g.degree(v);
        int base = rot_idx(v, seg);
        return (rot_idx(v, x) - base + deg) % deg < (rot_idx(v, y) - base + deg) % deg;
    };
    bool f0 = p_first(P[i0], P[i0 + 1], P[i0 - 1], Q[ja]);
    bool f1 = p_first(P[i1], P[i1 - 1], P[i1 + 1], Q[jb]);
    return f0 == f1 ? PairStatus::Cross : PairStatus::Ok;
}

ValidationReport validate_ncs(const PathSystem& ps, bool skip_crossing) {
    ValidationReport rep;
    const PlaneGraph& g = ps.graph;
    int n = ps.size();
    int V = g.vertex_count();

    // shape: length, range, simplicity, edges
    std::vector<char> shape_ok(n, 1);
    for (int p = 0; p < n; ++p) {
        const Path& P = ps.paths[p];
        auto bad = [&](std::string d, std::vector<Vertex> w) {
            rep.violations.push_back({rule::kPathShape, {p}, std::move(w), std::move(d)});
            shape_ok[p] = 0;
        };
        if (P.size() < 2) {
            bad("path has no edge", {});
            continue;
        }
        bool range = true;
        for (Vertex v : P) range &= v >= 0 && v < V;
        if (!range) {
            bad("vertex out of range", {});
            continue;
        }
        std::vector<Vertex> s(P);
        std::sort(s.begin(), s.end());
        auto dup = std::adjacent_find(s.begin(), s.end());
        if (dup != s.end()) bad("repeated vertex", {*dup});
        for (size_t i = 0; i + 1 < P.size(); ++i)
            if (!g.has_edge(P[i], P[i + 1])) bad("missing edge", {P[i], P[i + 1]});
    }
    bool all_shape = std::all_of(shape_ok.begin(), shape_ok.end(), [](char c) { return c; });
    if (!all_shape) {
        rep.ok = false;
        return rep;
    }
    Incidence inc = build_incidence(ps);

    for (int e = 0; e < g.edge_count(); ++e)
        if (inc.at_edge[e].empty()) {
            Dart d = g.dart(g.edge_dart(e));
            rep.violations.push_back({rule::kUnion, {}, {d.tail, d.head}, "edge on no path"});
        }
    if (g.component_count() > 1)
        rep.violations.push_back({rule::kDisconnected, {}, {},
                                  std::to_string(g.component_count()) + " components"});

    auto pos = terminal_positions(ps);
    for (int p = 0; p < n; ++p)
        for (int r = 0; r < 2; ++r)
            if (pos[p][r] < 0) {
                Vertex v = r == 0 ? ps.paths[p].front() : ps.paths[p].back();
                rep.violations.push_back({rule::kTerminals, {p}, {v}, "terminal off outer face"});
            }

    std::map<std::pair<Vertex, Vertex>, int> pairs;
    for (int p = 0; p < n; ++p) {
        Vertex a = ps.paths[p].front(), b = ps.paths[p].back();
        auto key = std::minmax(a, b);
        auto [it, fresh] = pairs.insert({key, p});
        if (!fresh)
            rep.violations.push_back({rule::kDistinctPairs, {it->second, p}, {a, b}, ""});
    }

    // candidate pairs sharing at least one vertex
    std::unordered_set<long long> seen;
    std::vector<std::pair<int, int>> cand;
    for (Vertex v = 0; v < V; ++v) {
        const auto& a = inc.at_vertex[v];
        for (size_t x = 0; x < a.size(); ++x)
            for (size_t y = x + 1; y < a.size(); ++y) {
                long long key = static_cast<long long>(a[x].first) * n + a[y].first;
                if (seen.insert(key).second) cand.push_back({a[x].first, a[y].first});
            }
    }
    std::sort(cand.begin(), cand.end());

    std::set<std::pair<int, int>> crossing;
    for (auto [p, q] : cand) {
        bool swapped = ps.paths[q].size() < ps.paths[p].size();
        int a = swapped ? q : p, b = swapped ? p : q;
        const Path& A = ps.paths[a];
        std::vector<std::pair<int, int>> shared;
        PairStatus st = check_pair(
            g, A, ps.paths[b], [&](Vertex v) { return inc.pos_in(b, v); }, &shared);
        if (st == PairStatus::NotTouch) {
            std::vector<Vertex> w;
            for (auto [i, j] : shared) w.push_back(A[i]);
            rep.violations.push_back({rule::kSingleTouch, {p, q}, w, "intersection is not a path"});
        } else if (st == PairStatus::Cross && !skip_crossing) {
            rep.violations.push_back(
                {rule::kNonCrossing, {p, q}, {A[shared.front().first]}, "paths cross"});
            crossing.insert({p, q});
        }
    }

    if (!skip_crossing) {
        // chords of the outer walk must not interleave
        std::vector<std::array<int, 2>> ch(n);
        for (int p = 0; p < n; ++p) ch[p] = {std::min(pos[p][0], pos[p][1]), std::max(pos[p][0], pos[p][1])};
        for (int p = 0; p < n; ++p) {
            if (ch[p][0] < 0) continue;
            for (int q = p + 1; q < n; ++q) {
                if (ch[q][0] < 0) continue;
                auto [a, b] = ch[p];
                auto [c, d] = ch[q];
                bool inter = (a < c && c < b && b < d) || (c < a && a < d && d < b);
                if (inter && !crossing.count({p, q}))
                    rep.violations.push_back({rule::kWellFormed, {p, q}, {}, "terminal chords interleave"});
            }
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

} // namespace ncf
