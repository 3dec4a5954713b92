#include "ncforest/decomposition.hpp"

#include <algorithm>
#include <string>

namespace ncf {

namespace {

bool shares_vertex(const PathSystem& ps, const Incidence& inc, int q, int p) {
    for (Vertex v : ps.paths[q])
        if (inc.pos_in(p, v) >= 0) return true;
    return false;
}

std::vector<int> walk_down(const Decomposition& dec, int q, bool right) {
    std::vector<int> out{q};
    while (!dec.tchildren[q].empty()) {
        const auto& c = dec.tchildren[q];
        q = c.size() == 2 ? (right ? c[0] : c[1]) : c[0];
        out.push_back(q);
    }
    return out;
}

} // namespace

std::vector<int> Decomposition::right_descendants(int q) const { return walk_down(*this, q, true); }
std::vector<int> Decomposition::left_descendants(int q) const { return walk_down(*this, q, false); }

Decomposition compute_levels(const PathSystem& ps, const GenealogyTree& tree) {
    int n = ps.size();
    Decomposition dec;
    dec.is_max.assign(n, 0);
    dec.owner.assign(n, -1);
    dec.max_owner.assign(n, -1);
    dec.level.assign(n, -1);
    dec.touch.assign(n, {});
    dec.max.assign(n, {});
    dec.tchildren.assign(n, {});
    if (n == 0) return dec;
    Incidence inc = build_incidence(ps);

    std::vector<int> cur{tree.root};
    for (int i = 0; !cur.empty(); ++i) {
        dec.max_levels.push_back(cur);
        std::vector<int> next;
        for (int p : cur) {
            dec.is_max[p] = 1;
            dec.owner[p] = p;
            dec.level[p] = i + 1;
            std::vector<int> st{p};
            while (!st.empty()) {
                int q = st.back();
                st.pop_back();
                dec.touch[p].push_back(q);
                for (int c : tree.children[q]) {
                    if (shares_vertex(ps, inc, c, p)) {
                        dec.owner[c] = p;
                        dec.level[c] = i + 1;
                        dec.tchildren[q].push_back(c);
                    } else {
                        dec.max[p].push_back(c);
                        dec.max_owner[c] = p;
                        next.push_back(c);
                    }
                }
                for (auto it = dec.tchildren[q].rbegin(); it != dec.tchildren[q].rend(); ++it)
                    st.push_back(*it);
            }
        }
        cur = std::move(next);
    }
    return dec;
}

std::vector<int> descendant_set(const Decomposition& dec, int p, int q, bool right) {
    if (q < 0 || q >= static_cast<int>(dec.owner.size()) || dec.owner[q] != p)
        throw Error(ErrorCode::NotInTouch,
                    "path " + std::to_string(q) + " is not in Touch of " + std::to_string(p));
    return walk_down(dec, q, right);
}

bool FaceAnalysis::contains(int path, int edge) const {
    const auto& v = paths_on_edge[edge];
    return std::binary_search(v.begin(), v.end(), path);
}

FaceAnalysis analyze_faces(const PathSystem& ps, const GenealogyTree& tree, const Decomposition& dec) {
    const PlaneGraph& g = ps.graph;
    Incidence inc = build_incidence(ps);
    FaceAnalysis fa;
    fa.paths_on_edge = inc.at_edge;
    fa.info_of_face.assign(g.face_count(), -1);
    int n = ps.size();

    // X traverses u->v from x_X towards y_X
    auto forward = [&](int X, Vertex u, Vertex v) {
        int i = inc.pos_in(X, u), j = inc.pos_in(X, v);
        bool stored = j == i + 1;
        return stored != static_cast<bool>(tree.reversed[X]);
    };
    auto fail = [](int f, const std::string& why) {
        return Error(ErrorCode::UnclassifiableFace, "face " + std::to_string(f) + ": " + why);
    };

    std::vector<std::vector<int>> by_upper(n);
    for (int f = 0; f < g.face_count(); ++f) {
        const Face& face = g.faces()[f];
        if (face.is_outer) continue;
        const auto& B = face.boundary;
        int L = static_cast<int>(B.size());
        int best = -1;
        for (const Dart& d : B)
            for (int X : inc.at_edge[g.edge_id(d.tail, d.head)])
                if (forward(X, d.tail, d.head) &&
                    (best < 0 || tree.depth[X] > tree.depth[best] ||
                     (tree.depth[X] == tree.depth[best] && X < best)))
                    best = X;
        if (best < 0) throw fail(f, "no path has the face on its inner side");
        std::vector<char> up(L);
        for (int k = 0; k < L; ++k) {
            int e = g.edge_id(B[k].tail, B[k].head);
            up[k] = fa.contains(best, e) && forward(best, B[k].tail, B[k].head);
        }
        int starts = 0, s = -1;
        for (int k = 0; k < L; ++k)
            if (up[k] && !up[(k + L - 1) % L]) {
                ++starts;
                s = k;
            }
        if (starts != 1) throw fail(f, "upper path meets the face in " + std::to_string(starts) + " pieces");
        int t = s;
        while (up[t]) t = (t + 1) % L;
        FaceInfo info;
        info.face = f;
        info.upper = best;
        for (int k = t; k != s; k = (k + 1) % L) info.lower.push_back(g.dart_id(B[k].tail, B[k].head));
        info.e_l = g.edge_id(info.lower.front());
        info.e_r = g.edge_id(info.lower.back());
        int p = dec.owner[best];
        if (p < 0) throw fail(f, "upper path has no owner");
        info.owner = p;
        const auto& ch = tree.children[best];
        if (ch.size() != 2)
            throw fail(f, "upper path " + std::to_string(best) + " has " + std::to_string(ch.size()) +
                              " children");
        auto in_touch = [&](int c) { return dec.owner[c] == p; };
        auto in_max = [&](int c) { return dec.max_owner[c] == p; };
        int qr = ch[0], ql = ch[1];
        if (in_touch(qr) && in_touch(ql)) {
            info.type = FaceType::I;
        } else if (in_max(qr) && in_max(ql)) {
            info.type = FaceType::II;
            info.m_r = qr;
            info.m_l = ql;
        } else if (in_max(qr) || in_max(ql)) {
            info.type = FaceType::III;
            info.m_is_right = in_max(qr);
            info.m = info.m_is_right ? qr : ql;
        } else {
            throw fail(f, "children of the upper path are outside Touch and Max of its owner");
        }
        fa.info_of_face[f] = static_cast<int>(fa.faces.size());
        by_upper[best].push_back(static_cast<int>(fa.faces.size()));
        fa.faces.push_back(std::move(info));
    }

    fa.f_m.assign(n, -1);
    fa.se.assign(n, -1);
    if (n == 0) return fa;
    {
        int r = tree.root;
        const Path& P = ps.paths[r];
        Vertex a = tree.reversed[r] ? P[P.size() - 1] : P[0];
        Vertex b = tree.reversed[r] ? P[P.size() - 2] : P[1];
        fa.se[r] = g.edge_id(a, b);
    }
    for (int m = 0; m < n; ++m) {
        if (!dec.is_max[m] || m == tree.root) continue;
        int q = tree.parent[m];
        bool right = !tree.children[q].empty() && tree.children[q][0] == m;
        int pick = -1, edge = -1;
        for (int idx : by_upper[q]) {
            const FaceInfo& fi = fa.faces[idx];
            int own = right ? fi.e_r : fi.e_l, other = right ? fi.e_l : fi.e_r;
            if (fa.contains(m, own)) {
                pick = idx;
                edge = own;
                break;
            }
            if (pick < 0 && fa.contains(m, other)) {
                pick = idx;
                edge = other;
            }
        }
        fa.f_m[m] = pick;
        fa.se[m] = edge;
    }
    return fa;
}

std::vector<std::vector<int>> InterferenceForest::trees() const {
    int k = static_cast<int>(nodes.size());
    std::vector<std::vector<int>> kids(k);
    std::vector<std::vector<int>> out;
    for (int i = 0; i < k; ++i)
        if (parent[i] >= 0) kids[parent[i]].push_back(i);
    for (int i = 0; i < k; ++i) {
        if (parent[i] >= 0) continue;
        std::vector<int> t{i};
        for (size_t h = 0; h < t.size(); ++h)
            for (int c : kids[t[h]]) t.push_back(c);
        out.push_back(std::move(t));
    }
    return out;
}

InterferenceForest interference_forest(const PathSystem&, const GenealogyTree&, const Decomposition& dec,
                                       const FaceAnalysis& fa, int p) {
    InterferenceForest F;
    F.owner = p;
    const auto& M = dec.max[p];
    std::vector<int> slot(dec.owner.size(), -1);
    for (int m : M) {
        int idx = fa.f_m[m];
        if (idx < 0) {
            F.max_none.push_back(m);
        } else if (fa.faces[idx].type == FaceType::II) {
            F.max_ii.push_back(m);
        } else {
            slot[m] = static_cast<int>(F.nodes.size());
            F.nodes.push_back(m);
        }
    }
    for (int m2 : M) {
        int idx = fa.f_m[m2];
        if (idx < 0) continue;
        const FaceInfo& fi = fa.faces[idx];
        for (int e : {fi.e_r, fi.e_l})
            for (int X : fa.paths_on_edge[e])
                if (X != m2 && dec.max_owner[X] == p) F.arcs.push_back({X, m2});
    }
    std::sort(F.arcs.begin(), F.arcs.end());
    F.arcs.erase(std::unique(F.arcs.begin(), F.arcs.end()), F.arcs.end());

    int k = static_cast<int>(F.nodes.size());
    F.parent.assign(k, -1);
    for (auto [a, b] : F.arcs) {
        if (slot[a] < 0 || slot[b] < 0) continue;
        if (F.parent[slot[b]] >= 0 && F.parent[slot[b]] != slot[a])
            throw Error(ErrorCode::InDegreeViolation,
                        "path " + std::to_string(b) + " has two interferers in Max of " + std::to_string(p));
        F.parent[slot[b]] = slot[a];
    }
    F.in_a.assign(k, 0);
    std::vector<int> depth(k, -1);
    for (int i = 0; i < k; ++i) {
        std::vector<int> chain;
        int v = i;
        while (v >= 0 && depth[v] < 0) {
            if (std::find(chain.begin(), chain.end(), v) != chain.end())
                throw Error(ErrorCode::CyclicInterference,
                            "interference cycle through path " + std::to_string(F.nodes[v]));
            chain.push_back(v);
            v = F.parent[v];
        }
        int d = v < 0 ? -1 : depth[v];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) depth[*it] = ++d;
    }
    for (int i = 0; i < k; ++i) F.in_a[i] = depth[i] % 2 == 0;
    return F;
}

} // namespace ncf
