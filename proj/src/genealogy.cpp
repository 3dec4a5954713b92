#include "ncforest/genealogy.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace ncf {

bool GenealogyTree::is_binary() const {
    for (const auto& c : children)
        if (c.size() != 0 && c.size() != 2) return false;
    return true;
}

bool GenealogyTree::below_eq(int p, int q) const { return s[q] <= s[p] && e[p] <= e[q]; }

Path GenealogyTree::oriented(const PathSystem& ps, int p) const {
    Path r = ps.paths[p];
    if (reversed[p]) std::reverse(r.begin(), r.end());
    return r;
}

std::vector<int> GenealogyTree::preorder() const {
    std::vector<int> out;
    if (root < 0) return out;
    std::vector<int> st{root};
    while (!st.empty()) {
        int p = st.back();
        st.pop_back();
        out.push_back(p);
        for (auto it = children[p].rbegin(); it != children[p].rend(); ++it) st.push_back(*it);
    }
    return out;
}

Orientation choose_root_and_orient(const PathSystem& ps, std::optional<int> keep_root,
                                   int keep_e1_pos) {
    const PlaneGraph& g = ps.graph;
    int n = ps.size();
    int L = static_cast<int>(g.outer_darts().size());
    auto pos = terminal_positions(ps);
    std::vector<int> T;
    for (int p = 0; p < n; ++p)
        for (int r = 0; r < 2; ++r) {
            if (pos[p][r] < 0)
                throw Error(ErrorCode::TerminalNotOnOuterFace, "path " + std::to_string(p));
            T.push_back(pos[p][r]);
        }
    std::sort(T.begin(), T.end());
    T.erase(std::unique(T.begin(), T.end()), T.end());
    auto md = [L](int v) { return ((v % L) + L) % L; };
    // next terminal strictly after a, cyclically
    auto next_after = [&](int a) {
        auto it = std::upper_bound(T.begin(), T.end(), a);
        return it == T.end() ? T.front() : *it;
    };

    int best_p = -1, best_a = -1, best_b = -1, best_len = -1;
    for (int p = 0; p < n; ++p) {
        if (keep_root && p != *keep_root) continue;
        for (int r = 0; r < 2; ++r) {
            int a = pos[p][r], b = pos[p][1 - r];
            int len = md(b - a);
            if (len == 0) continue;
            int nx = next_after(a);
            int gap = md(nx - a);
            if (gap == 0) gap = L;
            if (gap < len) continue;
            if (keep_root && keep_e1_pos >= 0 && a != keep_e1_pos) continue;
            if (len > best_len) {
                best_len = len;
                best_p = p;
                best_a = a;
                best_b = b;
            }
        }
    }
    if (best_p < 0) throw Error(ErrorCode::NoRootCandidate, "no path with a terminal-free arc");

    Orientation o;
    o.p1 = best_p;
    o.e1_pos = best_a;
    o.e1 = g.dart(g.outer_darts()[best_a]);
    o.x.resize(n);
    o.y.resize(n);
    o.reversed.assign(n, 0);
    o.s.resize(n);
    o.e.resize(n);
    for (int p = 0; p < n; ++p) {
        int u = pos[p][0], w = pos[p][1];
        bool rev;
        if (p == best_p)
            rev = u != best_b;
        else
            rev = md(best_a - u) < md(w - u);
        int xp = rev ? w : u, yp = rev ? u : w;
        o.reversed[p] = rev;
        o.x[p] = rev ? ps.paths[p].back() : ps.paths[p].front();
        o.y[p] = rev ? ps.paths[p].front() : ps.paths[p].back();
        o.s[p] = md(xp - best_b);
        o.e[p] = o.s[p] + md(yp - xp);
    }
    return o;
}

GenealogyTree build_genealogy(const PathSystem& ps, const Orientation& o) {
    int n = ps.size();
    GenealogyTree t;
    t.root = o.p1;
    t.e1 = o.e1;
    t.e1_pos = o.e1_pos;
    t.x = o.x;
    t.y = o.y;
    t.reversed = o.reversed;
    t.s = o.s;
    t.e = o.e;
    t.parent.assign(n, -1);
    t.children.assign(n, {});
    t.depth.assign(n, 0);
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 0);
    std::sort(ids.begin(), ids.end(), [&](int a, int b) {
        if (o.s[a] != o.s[b]) return o.s[a] < o.s[b];
        if (o.e[a] != o.e[b]) return o.e[a] > o.e[b];
        if (a == o.p1 || b == o.p1) return a == o.p1;
        return a < b;
    });
    if (n > 0 && ids[0] != o.p1)
        throw Error(ErrorCode::InvalidInstance, "root interval is not maximal");
    std::vector<int> st;
    for (int p : ids) {
        while (!st.empty() && !(o.s[st.back()] <= o.s[p] && o.e[p] <= o.e[st.back()])) st.pop_back();
        if (st.empty()) {
            if (p != o.p1)
                throw Error(ErrorCode::InvalidInstance,
                            "path " + std::to_string(p) + " is not nested under the root");
        } else {
            t.parent[p] = st.back();
            t.children[st.back()].push_back(p);
            t.depth[p] = t.depth[st.back()] + 1;
        }
        st.push_back(p);
    }
    return t;
}

GenealogyTree build_genealogy(const PathSystem& ps) {
    return build_genealogy(ps, choose_root_and_orient(ps));
}

namespace {

struct Router {
    PathSystem& ps;
    Incidence& inc;
    std::vector<std::array<int, 2>>& chords;
    long long budget;

    Router(PathSystem& p, Incidence& i, std::vector<std::array<int, 2>>& c, long long b)
        : ps(p), inc(i), chords(c), budget(b), walk(p.graph.outer_walk()) {
        occ.resize(p.graph.vertex_count());
        for (int k = 0; k < static_cast<int>(walk.size()); ++k) occ[walk[k]].push_back(k);
        on_route.assign(p.graph.vertex_count(), 0);
        allowed.assign(p.graph.edge_count(), 0);
    }

    struct St {
        int state = 0; // 0 untouched, 1 inside, 2 left
        int last = -1;
        int dir = 0;
    };
    std::vector<St> st;
    std::vector<std::pair<int, St>> journal;
    std::vector<char> on_route;
    std::vector<char> allowed;
    Path route;
    long long steps = 0;
    std::vector<Vertex> walk;
    std::vector<std::vector<int>> occ;
    int px = -1, py = -1; // outer-walk positions of the last route's ends
    std::vector<int> opened; // edges switched on by allow()

    void allow(const Path& P) {
        const PlaneGraph& g = ps.graph;
        for (size_t i = 0; i + 1 < P.size(); ++i) {
            int e = g.edge_id(P[i], P[i + 1]);
            if (!allowed[e]) {
                allowed[e] = 1;
                opened.push_back(e);
            }
        }
    }
    void close_all() {
        for (int e : opened) allowed[e] = 0;
        opened.clear();
    }

    void set(int X, St s) {
        journal.push_back({X, st[X]});
        st[X] = s;
    }
    void undo(size_t mark) {
        while (journal.size() > mark) {
            st[journal.back().first] = journal.back().second;
            journal.pop_back();
        }
    }

    // advance from route.back() to v; false when a path would be touched twice
    bool step(Vertex u, Vertex v) {
        const auto& A = inc.at_vertex[u];
        const auto& B = inc.at_vertex[v];
        size_t i = 0, j = 0;
        while (i < A.size() || j < B.size()) {
            if (j == B.size() || (i < A.size() && A[i].first < B[j].first)) {
                int X = A[i].first;
                if (st[X].state == 1) set(X, {2, -1, 0});
                ++i;
            } else if (i == A.size() || B[j].first < A[i].first) {
                int X = B[j].first;
                if (st[X].state == 2) return false;
                if (st[X].state == 1) return false;
                set(X, {1, B[j].second, 0});
                ++j;
            } else {
                int X = A[i].first;
                St s = st[X];
                int d = B[j].second - s.last;
                if (s.state != 1 || (d != 1 && d != -1) || (s.dir != 0 && d != s.dir)) return false;
                set(X, {1, B[j].second, d});
                ++i;
                ++j;
            }
        }
        return true;
    }

    bool final_ok(int pos_x, int pos_y) {
        const PlaneGraph& g = ps.graph;
        std::vector<int> touched;
        for (Vertex v : route)
            for (auto [X, j] : inc.at_vertex[v]) touched.push_back(X);
        std::sort(touched.begin(), touched.end());
        touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
        for (int X : touched) {
            auto stt = check_pair(g, route, ps.paths[X], [&](Vertex v) { return inc.pos_in(X, v); });
            if (stt != PairStatus::Ok) return false;
            if (ps.paths[X].front() == route.front() && ps.paths[X].back() == route.back()) return false;
            if (ps.paths[X].back() == route.front() && ps.paths[X].front() == route.back()) return false;
        }
        int a = std::min(pos_x, pos_y), b = std::max(pos_x, pos_y);
        for (auto [c, d] : chords)
            if ((a < c && c < b && b < d) || (c < a && a < d && d < b)) return false;
        return true;
    }

    bool at_target() {
        int L = static_cast<int>(walk.size());
        // terminal occurrence follows the neighbor rule used everywhere else
        auto pick = [&](Vertex x, Vertex a) {
            if (occ[x].empty()) return -1;
            for (int i : occ[x])
                if (walk[(i + L - 1) % L] == a || walk[(i + 1) % L] == a) return i;
            return occ[x].front();
        };
        px = pick(route.front(), route[1]);
        py = pick(route.back(), route[route.size() - 2]);
        if (px < 0 || py < 0) return false;
        return final_ok(px, py);
    }

    struct Frame {
        Vertex u, prev;
        int base = 0, deg = 0, k = 0;
        size_t mark = 0;
    };

    bool dfs(Vertex from, Vertex from_prev, Vertex target) {
        const PlaneGraph& g = ps.graph;
        std::vector<Frame> stack{{from, from_prev}};
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.k == 0) {
                if (++steps > budget) return false;
                if (f.u == target) {
                    if (at_target()) return true;
                } else {
                    f.deg = g.degree(f.u);
                    f.base = f.prev >= 0 ? g.rot_index(g.dart_id(f.u, f.prev)) : 0;
                }
                f.k = 1;
            }
            bool pushed = false;
            while (f.k <= f.deg) {
                int idx = ((f.base - f.k) % f.deg + f.deg) % f.deg;
                ++f.k;
                Vertex v = g.rotation(f.u)[idx];
                if (on_route[v]) continue;
                if (!allowed[g.edge_id(f.u, v)]) continue;
                size_t mark = journal.size();
                if (!step(f.u, v)) {
                    undo(mark);
                    continue;
                }
                on_route[v] = 1;
                route.push_back(v);
                Vertex u = f.u;
                stack.push_back({v, u, 0, 0, 0, mark});
                pushed = true;
                break;
            }
            if (pushed) continue;
            Frame done = stack.back();
            stack.pop_back();
            if (stack.empty()) return false;
            route.pop_back();
            on_route[done.u] = 0;
            undo(done.mark);
            if (steps > budget) return false;
        }
        return false;
    }

    std::optional<Path> run(Vertex from, Vertex to, Vertex from_prev) {
        st.resize(ps.size());
        journal.clear();
        route = {from};
        on_route[from] = 1;
        steps = 0;
        for (auto [X, j] : inc.at_vertex[from]) set(X, {1, j, 0});
        bool found = dfs(from, from_prev, to);
        for (Vertex v : route) on_route[v] = 0;
        undo(0);
        if (found) return route;
        return std::nullopt;
    }
};

} // namespace

Binarized binarize(const PathSystem& ps, const GenealogyTree& tree) {
    Binarized out;
    out.ps = ps;
    if (out.ps.auxiliary.size() != ps.paths.size()) out.ps.auxiliary.resize(ps.paths.size(), 0);
    if (tree.is_binary()) {
        out.tree = tree;
        return out;
    }
    PathSystem& W = out.ps;
    const PlaneGraph& g = W.graph;
    Incidence inc = build_incidence(W);
    auto pos = terminal_positions(W);
    std::vector<std::array<int, 2>> chords;
    for (auto& pp : pos) chords.push_back({std::min(pp[0], pp[1]), std::max(pp[0], pp[1])});
    std::vector<Vertex> walk = g.outer_walk();
    int L = static_cast<int>(walk.size());

    Router R(W, inc, chords, 400000);
    auto outer_prev = [&](Vertex x) {
        if (R.occ[x].empty()) return Vertex{-1};
        return walk[(R.occ[x].front() + L - 1) % L];
    };
    auto add = [&](Vertex from, Vertex to, int at) {
        auto r = R.run(from, to, outer_prev(from));
        if (!r) {
            // widen to the whole subtree of at, then to all of U
            std::vector<char> saved = R.allowed;
            size_t opened = R.opened.size();
            for (int q = 0; q < tree.size(); ++q)
                if (tree.below_eq(q, at)) R.allow(W.paths[q]);
            r = R.run(from, to, outer_prev(from));
            if (!r) {
                std::fill(R.allowed.begin(), R.allowed.end(), 1);
                r = R.run(from, to, outer_prev(from));
            }
            R.allowed = saved;
            R.opened.resize(opened);
        }
        if (!r)
            throw Error(ErrorCode::BinarizationRoutingFailure,
                        "no route from " + std::to_string(from) + " to " + std::to_string(to) +
                            " under path " + std::to_string(at));
        int id = W.size();
        W.paths.push_back(*r);
        W.auxiliary.push_back(1);
        for (int i = 0; i < static_cast<int>(r->size()); ++i) {
            inc.at_vertex[(*r)[i]].push_back({id, i});
            if (i + 1 < static_cast<int>(r->size()))
                inc.at_edge[g.edge_id((*r)[i], (*r)[i + 1])].push_back(id);
        }
        chords.push_back({std::min(R.px, R.py), std::max(R.px, R.py)});
        R.allow(*r);
        ++out.added;
    };

    for (int p : tree.preorder()) {
        const auto& ch = tree.children[p];
        int r = static_cast<int>(ch.size());
        if (r == 0 || r == 2) continue;
        R.allow(W.paths[p]);
        for (int c : ch) R.allow(W.paths[c]);
        if (r == 1) {
            int c = ch[0];
            if (tree.x[p] != tree.x[c])
                add(tree.x[p], tree.x[c], p);
            else
                add(tree.y[c], tree.y[p], p);
        } else {
            for (int j = 1; j + 1 < r; ++j) add(tree.x[ch[j]], tree.y[ch[r - 1]], p);
        }
        R.close_all();
    }

    out.tree = build_genealogy(W, choose_root_and_orient(W, tree.root, tree.e1_pos));
    if (!out.tree.is_binary())
        throw Error(ErrorCode::BinarizationRoutingFailure, "tree is still not binary");
    auto rep = validate_ncs(W);
    if (!rep.ok)
        throw Error(ErrorCode::BinarizationRoutingFailure,
                    "auxiliary paths break " + rep.violations.front().rule);
    return out;
}

} // namespace ncf
