#include "ncforest/verification.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <limits>
#include <mutex>
#include <numeric>
#include <thread>

namespace ncf {

namespace {

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[a] = b;
        return true;
    }
};

std::vector<std::vector<int>> path_edges(const PathSystem& ps) {
    std::vector<std::vector<int>> out(ps.size());
    for (int i = 0; i < ps.size(); ++i) {
        const Path& P = ps.paths[i];
        for (size_t j = 0; j + 1 < P.size(); ++j) out[i].push_back(ps.graph.edge_id(P[j], P[j + 1]));
    }
    return out;
}

// BFS in a forest adjacency; returns the vertex sequence a..b
std::vector<Vertex> tree_path(const std::vector<std::vector<Vertex>>& adj, Vertex a, Vertex b) {
    std::vector<int> from(adj.size(), -2);
    std::deque<Vertex> q{a};
    from[a] = -1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop_front();
        if (v == b) break;
        for (Vertex w : adj[v])
            if (from[w] == -2) {
                from[w] = v;
                q.push_back(w);
            }
    }
    std::vector<Vertex> out;
    for (Vertex v = b; v != -1; v = from[v]) out.push_back(v);
    std::reverse(out.begin(), out.end());
    return out;
}

} // namespace

ForestCheckReport check_forest_labeling(const PathSystem& ps, const std::vector<int>& labels) {
    const PlaneGraph& g = ps.graph;
    int n = std::min<int>(ps.size(), static_cast<int>(labels.size()));
    int mx = 0;
    for (int i = 0; i < n; ++i) {
        if (labels[i] <= 0) throw Error(ErrorCode::UnlabeledPath, "path " + std::to_string(i) + " has no label");
        mx = std::max(mx, labels[i]);
    }
    std::vector<std::vector<int>> edges(mx + 1);
    for (int i = 0; i < n; ++i) {
        const Path& P = ps.paths[i];
        for (size_t j = 0; j + 1 < P.size(); ++j) edges[labels[i]].push_back(g.edge_id(P[j], P[j + 1]));
    }
    ForestCheckReport rep;
    for (int c = 1; c <= mx; ++c) {
        auto& E = edges[c];
        if (E.empty()) continue;
        std::sort(E.begin(), E.end());
        E.erase(std::unique(E.begin(), E.end()), E.end());
        LabelClassStats st;
        st.label = c;
        st.edges = static_cast<int>(E.size());
        Dsu dsu(g.vertex_count());
        std::vector<std::vector<Vertex>> adj(g.vertex_count());
        std::vector<char> seen(g.vertex_count(), 0);
        for (int e : E) {
            Dart d = g.dart(g.edge_dart(e));
            for (Vertex v : {d.tail, d.head})
                if (!seen[v]) {
                    seen[v] = 1;
                    ++st.vertices;
                }
            if (!dsu.unite(d.tail, d.head)) {
                if (st.cycle.empty()) st.cycle = tree_path(adj, d.tail, d.head);
                continue;
            }
            adj[d.tail].push_back(d.head);
            adj[d.head].push_back(d.tail);
        }
        if (!st.cycle.empty()) rep.ok = false;
        rep.per_label.push_back(std::move(st));
    }
    return rep;
}

std::vector<FaceInfo> check_faces_solved(const PathSystem& ps, const FaceAnalysis& fa,
                                         const std::vector<int>& labels) {
    if (static_cast<int>(labels.size()) < ps.size())
        throw Error(ErrorCode::UnlabeledPath, "labeling shorter than the path system");
    auto label_set = [&](int e) {
        std::vector<int> s;
        for (int X : fa.paths_on_edge[e]) s.push_back(labels[X]);
        std::sort(s.begin(), s.end());
        return s;
    };
    std::vector<FaceInfo> bad;
    for (const FaceInfo& fi : fa.faces) {
        auto a = label_set(fi.e_r), b = label_set(fi.e_l);
        std::vector<int> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        if (!both.empty()) bad.push_back(fi);
    }
    return bad;
}

namespace {

// Per-label union-find with an undo journal; union by size, no compression.
class Searcher {
public:
    Searcher(const PathSystem& ps, std::vector<int> order, int k)
        : k_(k), nv_(ps.graph.vertex_count()), ne_(ps.graph.edge_count()), order_(std::move(order)) {
        edges_ = path_edges(ps);
        for (int e = 0; e < ne_; ++e) {
            Dart d = ps.graph.dart(ps.graph.edge_dart(e));
            ends_.push_back({d.tail, d.head});
        }
        parent_.resize(static_cast<size_t>(k) * nv_);
        for (int c = 0; c < k; ++c)
            for (int v = 0; v < nv_; ++v) parent_[c * nv_ + v] = v;
        size_.assign(static_cast<size_t>(k) * nv_, 1);
        cnt_.assign(static_cast<size_t>(k) * ne_, 0);
        label_.assign(ps.size(), 0);
    }

    bool place(int path, int c) {
        size_t mark = journal_.size();
        for (int e : edges_[path]) {
            int& ce = cnt_[c * ne_ + e];
            journal_.push_back({0, c * ne_ + e});
            if (ce++ > 0) continue;
            int a = find(c, ends_[e].first), b = find(c, ends_[e].second);
            if (a == b) {
                undo(mark);
                return false;
            }
            if (size_[c * nv_ + a] > size_[c * nv_ + b]) std::swap(a, b);
            parent_[c * nv_ + a] = b;
            size_[c * nv_ + b] += size_[c * nv_ + a];
            journal_.push_back({1, c * nv_ + a});
        }
        label_[path] = c + 1;
        marks_.push_back(mark);
        return true;
    }

    void unplace(int path) {
        label_[path] = 0;
        undo(marks_.back());
        marks_.pop_back();
    }

    // DFS over order_[i..]; max_used is the largest label (1-based) used before i
    bool dfs(int i, int max_used, std::atomic<long long>& nodes, long long budget, const std::atomic<bool>& stop) {
        if (i == static_cast<int>(order_.size())) return true;
        int p = order_[i];
        int top = std::min(k_, max_used + 1);
        for (int c = 0; c < top; ++c) {
            if (stop.load(std::memory_order_relaxed)) return false;
            if (nodes.fetch_add(1, std::memory_order_relaxed) >= budget) {
                exhausted_ = true;
                return false;
            }
            if (!place(p, c)) continue;
            if (dfs(i + 1, std::max(max_used, c + 1), nodes, budget, stop)) return true;
            unplace(p);
            if (exhausted_) return false;
        }
        return false;
    }

    const std::vector<int>& labels() const { return label_; }
    bool exhausted() const { return exhausted_; }

private:
    struct Entry {
        int kind; // 0 edge count, 1 union
        int idx;
    };
    int k_, nv_, ne_;
    std::vector<int> order_;
    std::vector<std::vector<int>> edges_;
    std::vector<std::pair<Vertex, Vertex>> ends_;
    std::vector<int> parent_, size_, cnt_, label_;
    std::vector<Entry> journal_;
    std::vector<size_t> marks_;
    bool exhausted_ = false;

    int find(int c, int v) const {
        while (parent_[c * nv_ + v] != v) v = parent_[c * nv_ + v];
        return v;
    }
    void undo(size_t mark) {
        while (journal_.size() > mark) {
            Entry en = journal_.back();
            journal_.pop_back();
            if (en.kind == 0) {
                --cnt_[en.idx];
            } else {
                int c = en.idx / nv_;
                int b = parent_[en.idx];
                size_[c * nv_ + b] -= size_[en.idx];
                parent_[en.idx] = en.idx - c * nv_;
            }
        }
    }
};

struct Prefix {
    std::vector<int> labels; // 0-based, along the order
    int max_used = 0;
};

// All feasible label prefixes of the first depth paths, in DFS order.
void collect_prefixes(Searcher& s, const std::vector<int>& order, int depth, int k, Prefix& cur,
                      std::vector<Prefix>& out) {
    int i = static_cast<int>(cur.labels.size());
    if (i == depth) {
        out.push_back(cur);
        return;
    }
    int top = std::min(k, cur.max_used + 1);
    for (int c = 0; c < top; ++c) {
        if (!s.place(order[i], c)) continue;
        int saved = cur.max_used;
        cur.labels.push_back(c);
        cur.max_used = std::max(saved, c + 1);
        collect_prefixes(s, order, depth, k, cur, out);
        cur.labels.pop_back();
        cur.max_used = saved;
        s.unplace(order[i]);
    }
}

} // namespace

PcfnResult exact_pcfn(const PathSystem& ps, const PcfnOptions& opt) {
    PcfnResult res;
    int n = ps.size();
    if (n == 0) {
        res.value = 0;
        res.lower_bound = 0;
        res.exact = true;
        return res;
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return ps.paths[a].size() > ps.paths[b].size(); });
    std::atomic<long long> nodes{0};
    for (int k = 1; k <= opt.k_max; ++k) {
        std::atomic<bool> stop{false};
        std::vector<int> witness;
        bool exhausted = false;
        if (opt.jobs <= 1 || n < 4) {
            Searcher s(ps, order, k);
            if (s.dfs(0, 0, nodes, opt.node_budget, stop)) witness = s.labels();
            exhausted = s.exhausted();
        } else {
            int depth = 1;
            std::vector<Prefix> prefixes;
            for (; depth <= n; ++depth) {
                Searcher s(ps, order, k);
                Prefix cur;
                prefixes.clear();
                collect_prefixes(s, order, depth, k, cur, prefixes);
                if (static_cast<int>(prefixes.size()) >= 8 * opt.jobs || depth == n) break;
            }
            std::atomic<size_t> next{0};
            std::atomic<size_t> best{std::numeric_limits<size_t>::max()};
            std::atomic<bool> any_exhausted{false};
            std::mutex mu;
            std::vector<int> best_labels;
            auto worker = [&] {
                for (;;) {
                    size_t i = next.fetch_add(1);
                    if (i >= prefixes.size() || i > best.load()) return;
                    Searcher s(ps, order, k);
                    for (size_t j = 0; j < prefixes[i].labels.size(); ++j) s.place(order[j], prefixes[i].labels[j]);
                    bool ok = s.dfs(static_cast<int>(prefixes[i].labels.size()), prefixes[i].max_used, nodes,
                                    opt.node_budget, stop);
                    if (s.exhausted()) any_exhausted = true;
                    if (ok) {
                        std::lock_guard<std::mutex> lock(mu);
                        if (i < best.load()) {
                            best = i;
                            best_labels = s.labels();
                        }
                    }
                }
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < opt.jobs; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
            if (best.load() != std::numeric_limits<size_t>::max()) witness = best_labels;
            // a hit makes earlier exhausted prefixes irrelevant only if none precede it
            exhausted = any_exhausted && witness.empty();
        }
        res.nodes_explored = nodes.load();
        if (!witness.empty()) {
            res.value = k;
            res.lower_bound = k;
            res.exact = true;
            res.witness = std::move(witness);
            return res;
        }
        if (exhausted) {
            res.budget_exhausted = true;
            res.lower_bound = k;
            return res;
        }
        res.lower_bound = k + 1;
    }
    return res;
}

PcfnResult naive_pcfn(const PathSystem& ps, int k_max) {
    PcfnResult res;
    int n = ps.size();
    if (n == 0) {
        res.value = 0;
        res.exact = true;
        return res;
    }
    std::vector<int> lab(n);
    for (int k = 1; k <= k_max; ++k) {
        std::fill(lab.begin(), lab.end(), 1);
        for (;;) {
            ++res.nodes_explored;
            if (check_forest_labeling(ps, lab).ok) {
                res.value = k;
                res.lower_bound = k;
                res.exact = true;
                res.witness = lab;
                return res;
            }
            int i = 0;
            while (i < n && lab[i] == k) lab[i++] = 1;
            if (i == n) break;
            ++lab[i];
        }
        res.lower_bound = k + 1;
    }
    return res;
}

PathLister::PathLister(const PathSystem& ps, const std::vector<int>& labels) {
    const PlaneGraph& g = ps.graph;
    int nv = g.vertex_count();
    int mx = 0;
    for (int c : labels) mx = std::max(mx, c);
    forests_.resize(mx + 1);
    std::vector<std::vector<std::vector<Vertex>>> adj(mx + 1);
    int n = std::min<int>(ps.size(), static_cast<int>(labels.size()));
    for (int i = 0; i < n; ++i) {
        int c = labels[i];
        if (c <= 0) continue;
        if (adj[c].empty()) adj[c].resize(nv);
        const Path& P = ps.paths[i];
        for (size_t j = 0; j + 1 < P.size(); ++j) {
            adj[c][P[j]].push_back(P[j + 1]);
            adj[c][P[j + 1]].push_back(P[j]);
        }
        if (P.size() == 1) adj[c][P[0]];
        ++prep_ops_;
    }
    for (int c = 1; c <= mx; ++c) {
        if (adj[c].empty()) continue;
        Forest& F = forests_[c];
        F.parent.assign(nv, -1);
        F.depth.assign(nv, 0);
        F.tree.assign(nv, -1);
        for (auto& a : adj[c]) {
            std::sort(a.begin(), a.end());
            a.erase(std::unique(a.begin(), a.end()), a.end());
        }
        std::vector<char> used(nv, 0);
        for (int i = 0; i < n; ++i)
            if (labels[i] == c)
                for (Vertex v : ps.paths[i]) used[v] = 1;
        int trees = 0;
        for (Vertex r = 0; r < nv; ++r) {
            if (!used[r] || F.tree[r] >= 0) continue;
            std::deque<Vertex> q{r};
            F.tree[r] = trees;
            while (!q.empty()) {
                Vertex v = q.front();
                q.pop_front();
                ++prep_ops_;
                for (Vertex w : adj[c][v])
                    if (F.tree[w] < 0) {
                        F.tree[w] = trees;
                        F.parent[w] = v;
                        F.depth[w] = F.depth[v] + 1;
                        q.push_back(w);
                    }
            }
            ++trees;
        }
    }
}

Listing PathLister::list(Vertex x, Vertex y, int label) const {
    if (label <= 0 || label >= static_cast<int>(forests_.size()) || forests_[label].tree.empty())
        throw Error(ErrorCode::PairNotInForest, "no forest with label " + std::to_string(label));
    const Forest& F = forests_[label];
    int nv = static_cast<int>(F.tree.size());
    if (x < 0 || y < 0 || x >= nv || y >= nv || F.tree[x] < 0 || F.tree[x] != F.tree[y])
        throw Error(ErrorCode::PairNotInForest,
                    "(" + std::to_string(x) + "," + std::to_string(y) + ") not joined in forest " + std::to_string(label));
    Listing out;
    std::vector<Vertex> tail;
    Vertex a = x, b = y;
    while (F.depth[a] > F.depth[b]) {
        out.path.push_back(a);
        a = F.parent[a];
        ++out.ops;
    }
    while (F.depth[b] > F.depth[a]) {
        tail.push_back(b);
        b = F.parent[b];
        ++out.ops;
    }
    while (a != b) {
        out.path.push_back(a);
        tail.push_back(b);
        a = F.parent[a];
        b = F.parent[b];
        out.ops += 2;
    }
    out.path.push_back(a);
    ++out.ops;
    for (auto it = tail.rbegin(); it != tail.rend(); ++it) {
        out.path.push_back(*it);
        ++out.ops;
    }
    return out;
}

Listing lca_path_listing(const PathSystem& ps, const std::vector<int>& labels, int p) {
    PathLister L(ps, labels);
    return L.list(ps.paths[p].front(), ps.paths[p].back(), labels[p]);
}

ContractLog check_structure(const PathSystem& ps, const GenealogyTree& tree, const Decomposition& dec,
                            const FaceAnalysis& fa) {
    const PlaneGraph& g = ps.graph;
    ContractLog log;
    Incidence inc = build_incidence(ps);
    std::vector<int> vmark(g.vertex_count(), -1), emark(g.edge_count(), -1);
    for (int f = 0; f < g.face_count(); ++f) {
        const Face& face = g.faces()[f];
        if (face.is_outer) continue;
        std::vector<int> cand;
        for (const Dart& d : face.boundary) {
            vmark[d.tail] = f;
            emark[g.edge_id(d.tail, d.head)] = f;
            for (auto [X, pos] : inc.at_vertex[d.tail]) cand.push_back(X);
        }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        for (int X : cand) {
            const Path& P = ps.paths[X];
            int first = -1, last = -1, count = 0;
            for (int i = 0; i < static_cast<int>(P.size()); ++i)
                if (vmark[P[i]] == f) {
                    if (first < 0) first = i;
                    last = i;
                    ++count;
                }
            bool ok = count == last - first + 1;
            for (int i = first; ok && i < last; ++i) ok = emark[g.edge_id(P[i], P[i + 1])] == f;
            log.check(ok, "path meets face in a subpath", X, f);
        }
        int idx = fa.info_of_face[f];
        log.check(idx >= 0, "inner face classified", -1, f);
        if (idx < 0) continue;
        const FaceInfo& fi = fa.faces[idx];
        bool upper_edge = false;
        for (const Dart& d : face.boundary) upper_edge |= fa.contains(fi.upper, g.edge_id(d.tail, d.head));
        log.check(upper_edge, "upper path shares an edge with the face", fi.upper, f);
        if (fi.type != FaceType::I) continue;
        int qr = tree.children[fi.upper][0], ql = tree.children[fi.upper][1];
        log.check(fa.contains(qr, fi.e_r), "e_r on q_r", qr, f);
        log.check(fa.contains(ql, fi.e_l), "e_l on q_l", ql, f);
        auto L = dec.left_descendants(qr), R = dec.right_descendants(ql);
        std::sort(L.begin(), L.end());
        std::sort(R.begin(), R.end());
        for (int X : fa.paths_on_edge[fi.e_r])
            log.check(std::binary_search(L.begin(), L.end(), X), "P(e_r) within L(q_r)", X, f);
        for (int X : fa.paths_on_edge[fi.e_l])
            log.check(std::binary_search(R.begin(), R.end(), X), "P(e_l) within R(q_l)", X, f);
    }
    for (const auto& level : dec.max_levels)
        for (int p : level) {
            bool ok = true;
            try {
                auto F = interference_forest(ps, tree, dec, fa, p);
                for (auto [a, b] : F.arcs) {
                    (void)a;
                    log.check(dec.max_owner[b] == p, "interference stays inside Max_p", p, b);
                }
            } catch (const Error&) {
                ok = false;
            }
            log.check(ok, "interference relation is a forest", p);
        }
    return log;
}

ConverseReport faces_converse_check(const PathSystem& ps, const FaceAnalysis& fa, int k) {
    ConverseReport rep;
    int n = ps.size();
    if (n == 0) return rep;
    const PlaneGraph& g = ps.graph;
    auto pe = path_edges(ps);
    std::vector<std::pair<Vertex, Vertex>> ends(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        Dart d = g.dart(g.edge_dart(e));
        ends[e] = {d.tail, d.head};
    }
    std::vector<int> lab(n, 0);
    std::vector<int> dsu(g.vertex_count());
    std::vector<long long> stamp(g.edge_count(), -1);
    auto find = [&](int x) {
        while (dsu[x] != x) x = dsu[x] = dsu[dsu[x]];
        return x;
    };
    for (;;) {
        ++rep.enumerated;
        bool solved = true;
        for (const FaceInfo& fi : fa.faces) {
            unsigned a = 0, b = 0;
            for (int X : fa.paths_on_edge[fi.e_r]) a |= 1u << lab[X];
            for (int X : fa.paths_on_edge[fi.e_l]) b |= 1u << lab[X];
            if (a & b) {
                solved = false;
                break;
            }
        }
        if (solved) {
            ++rep.all_solved;
            bool forest = true;
            for (int c = 0; c < k && forest; ++c) {
                std::iota(dsu.begin(), dsu.end(), 0);
                long long tag = rep.enumerated * k + c;
                for (int i = 0; i < n && forest; ++i) {
                    if (lab[i] != c) continue;
                    for (int e : pe[i]) {
                        if (stamp[e] == tag) continue;
                        stamp[e] = tag;
                        int a = find(ends[e].first), b = find(ends[e].second);
                        if (a == b) {
                            forest = false;
                            break;
                        }
                        dsu[a] = b;
                    }
                }
            }
            if (!forest) ++rep.counterexamples;
        }
        int i = 0;
        while (i < n && lab[i] == k - 1) lab[i++] = 0;
        if (i == n) break;
        ++lab[i];
    }
    return rep;
}

} // namespace ncf
