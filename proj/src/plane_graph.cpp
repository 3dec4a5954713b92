#include "ncforest/plane_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace ncf {

const char* error_name(ErrorCode c) {
    switch (c) {
    case ErrorCode::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateNeighbor: return "DuplicateNeighbor";
    case ErrorCode::OuterDartNotEdge: return "OuterDartNotEdge";
    case ErrorCode::EulerViolation: return "EulerViolation";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::TerminalNotOnOuterFace: return "TerminalNotOnOuterFace";
    case ErrorCode::NoRootCandidate: return "NoRootCandidate";
    case ErrorCode::BinarizationRoutingFailure: return "BinarizationRoutingFailure";
    case ErrorCode::NotInTouch: return "NotInTouch";
    case ErrorCode::UnclassifiableFace: return "UnclassifiableFace";
    case ErrorCode::CyclicInterference: return "CyclicInterference";
    case ErrorCode::InDegreeViolation: return "InDegreeViolation";
    case ErrorCode::AlreadyLabeled: return "AlreadyLabeled";
    case ErrorCode::SpecialEdgeAbsent: return "SpecialEdgeAbsent";
    case ErrorCode::MissingPrerequisite: return "MissingPrerequisite";
    case ErrorCode::UnlabeledPath: return "UnlabeledPath";
    case ErrorCode::BudgetExhausted: return "BudgetExhausted";
    case ErrorCode::PairNotInForest: return "PairNotInForest";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::WitnessNotFound: return "WitnessNotFound";
    case ErrorCode::InvalidInstance: return "InvalidInstance";
    case ErrorCode::ParseError: return "ParseError";
    }
    return "Unknown";
}

namespace {

std::string vs(Vertex u, Vertex v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

} // namespace

PlaneGraph PlaneGraph::build(int vertex_count, std::vector<std::vector<Vertex>> rotation,
                             Dart outer_dart) {
    if (vertex_count < 0 || static_cast<int>(rotation.size()) != vertex_count)
        throw Error(ErrorCode::InvalidVertex, "rotation size does not match vertex count");
    PlaneGraph g;
    g.n_ = vertex_count;
    g.rot_ = std::move(rotation);
    g.off_.assign(g.n_ + 1, 0);
    for (Vertex v = 0; v < g.n_; ++v) {
        for (Vertex w : g.rot_[v]) {
            if (w < 0 || w >= g.n_)
                throw Error(ErrorCode::InvalidVertex, "neighbor " + std::to_string(w) + " of " +
                                                          std::to_string(v));
            if (w == v) throw Error(ErrorCode::SelfLoop, "at vertex " + std::to_string(v));
        }
        g.off_[v + 1] = g.off_[v] + static_cast<int>(g.rot_[v].size());
    }
    int m2 = g.off_[g.n_];
    g.tail_.resize(m2);
    g.head_.resize(m2);
    for (Vertex v = 0; v < g.n_; ++v)
        for (int i = 0; i < g.degree(v); ++i) {
            g.tail_[g.off_[v] + i] = v;
            g.head_[g.off_[v] + i] = g.rot_[v][i];
        }
    // sorted (head, dart) per tail for lookups
    g.sorted_.resize(m2);
    std::iota(g.sorted_.begin(), g.sorted_.end(), 0);
    for (Vertex v = 0; v < g.n_; ++v) {
        auto b = g.sorted_.begin() + g.off_[v], e = g.sorted_.begin() + g.off_[v + 1];
        std::sort(b, e, [&](DartId a, DartId c) { return g.head_[a] < g.head_[c]; });
        for (auto it = b; it + 1 < e; ++it)
            if (g.head_[*it] == g.head_[*(it + 1)])
                throw Error(ErrorCode::DuplicateNeighbor, vs(v, g.head_[*it]));
    }
    g.twin_.resize(m2);
    for (DartId d = 0; d < m2; ++d) {
        DartId t = g.dart_id(g.head_[d], g.tail_[d]);
        if (t < 0) throw Error(ErrorCode::AsymmetricAdjacency, vs(g.tail_[d], g.head_[d]));
        g.twin_[d] = t;
    }
    g.edge_of_.assign(m2, -1);
    for (DartId d = 0; d < m2; ++d)
        if (g.edge_of_[d] < 0) {
            int e = static_cast<int>(g.edge_dart_.size());
            g.edge_of_[d] = g.edge_of_[g.twin_[d]] = e;
            g.edge_dart_.push_back(std::min(d, g.twin_[d]));
        }
    g.next_.resize(m2);
    for (DartId d = 0; d < m2; ++d) {
        Vertex v = g.head_[d];
        int i = g.rot_index(g.twin_[d]);
        g.next_[d] = g.off_[v] + (i + 1) % g.degree(v);
    }

    // faces, each rotated to start at its smallest dart, sorted by that start
    std::vector<char> seen(m2, 0);
    std::vector<std::vector<DartId>> walks;
    for (DartId d = 0; d < m2; ++d) {
        if (seen[d]) continue;
        std::vector<DartId> w;
        for (DartId c = d; !seen[c]; c = g.next_[c]) {
            seen[c] = 1;
            w.push_back(c);
        }
        auto lex = [&](DartId a, DartId b) {
            return Dart{g.tail_[a], g.head_[a]} < Dart{g.tail_[b], g.head_[b]};
        };
        std::rotate(w.begin(), std::min_element(w.begin(), w.end(), lex), w.end());
        walks.push_back(std::move(w));
    }
    std::sort(walks.begin(), walks.end(), [&](const auto& a, const auto& b) {
        return Dart{g.tail_[a[0]], g.head_[a[0]]} < Dart{g.tail_[b[0]], g.head_[b[0]]};
    });
    g.face_of_.assign(m2, -1);
    for (int f = 0; f < static_cast<int>(walks.size()); ++f) {
        Face face;
        for (DartId d : walks[f]) {
            g.face_of_[d] = f;
            face.boundary.push_back(g.dart(d));
        }
        g.faces_.push_back(std::move(face));
    }

    // components
    std::vector<int> comp(g.n_, -1);
    int isolated = 0;
    for (Vertex s = 0; s < g.n_; ++s) {
        if (comp[s] >= 0) continue;
        if (g.degree(s) == 0) ++isolated;
        comp[s] = g.components_;
        std::vector<Vertex> st{s};
        while (!st.empty()) {
            Vertex v = st.back();
            st.pop_back();
            for (Vertex w : g.rot_[v])
                if (comp[w] < 0) {
                    comp[w] = g.components_;
                    st.push_back(w);
                }
        }
        ++g.components_;
    }
    long long euler = static_cast<long long>(g.n_) - g.edge_count() + g.face_count() + isolated;
    if (euler != 2LL * g.components_)
        throw Error(ErrorCode::EulerViolation,
                    "V-E+F=" + std::to_string(g.n_ - g.edge_count() + g.face_count()) +
                        " with " + std::to_string(g.components_) + " component(s)");

    if (m2 > 0 || outer_dart.tail >= 0) {
        if (outer_dart.tail < 0 || outer_dart.tail >= g.n_ || outer_dart.head < 0 ||
            outer_dart.head >= g.n_)
            throw Error(ErrorCode::OuterDartNotEdge, vs(outer_dart.tail, outer_dart.head));
        DartId od = g.dart_id(outer_dart.tail, outer_dart.head);
        if (od < 0) throw Error(ErrorCode::OuterDartNotEdge, vs(outer_dart.tail, outer_dart.head));
        g.outer_ = outer_dart;
        g.outer_face_ = g.face_of_[od];
        g.faces_[g.outer_face_].is_outer = true;
        for (const Dart& d : g.faces_[g.outer_face_].boundary)
            g.outer_darts_.push_back(g.dart_id(d.tail, d.head));
    }
    return g;
}

DartId PlaneGraph::dart_id(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_) return -1;
    auto b = sorted_.begin() + off_[u], e = sorted_.begin() + off_[u + 1];
    auto it = std::lower_bound(b, e, v, [&](DartId d, Vertex x) { return head_[d] < x; });
    if (it == e || head_[*it] != v) return -1;
    return *it;
}

int PlaneGraph::edge_id(Vertex u, Vertex v) const {
    DartId d = dart_id(u, v);
    return d < 0 ? -1 : edge_of_[d];
}

std::vector<Vertex> PlaneGraph::outer_walk() const {
    std::vector<Vertex> w;
    w.reserve(outer_darts_.size());
    for (DartId d : outer_darts_) w.push_back(tail_[d]);
    return w;
}

std::vector<Face> trace_faces(const PlaneGraph& g) { return g.faces(); }

std::vector<Vertex> outer_walk(const PlaneGraph& g) { return g.outer_walk(); }

PlaneGraph plane_graph_from_geometry(const std::vector<Point>& pts,
                                     const std::vector<std::pair<Vertex, Vertex>>& edges) {
    int n = static_cast<int>(pts.size());
    std::vector<std::vector<Vertex>> rot(n);
    for (auto [u, v] : edges) {
        rot[u].push_back(v);
        rot[v].push_back(u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto ang = [&](Vertex w) { return std::atan2(pts[w].y - pts[v].y, pts[w].x - pts[v].x); };
        std::sort(rot[v].begin(), rot[v].end(),
                  [&](Vertex a, Vertex b) { return ang(a) > ang(b); });
    }
    if (edges.empty()) return PlaneGraph::build(n, std::move(rot), Dart{});
    Dart first{edges[0].first, edges[0].second};
    PlaneGraph g = PlaneGraph::build(n, rot, first);
    int best = -1;
    double best_area = 0;
    for (int f = 0; f < g.face_count(); ++f) {
        double a = 0;
        for (const Dart& d : g.faces()[f].boundary)
            a += pts[d.tail].x * pts[d.head].y - pts[d.head].x * pts[d.tail].y;
        if (best < 0 || a < best_area) {
            best = f;
            best_area = a;
        }
    }
    return PlaneGraph::build(n, std::move(rot), g.faces()[best].boundary.front());
}

} // namespace ncf
