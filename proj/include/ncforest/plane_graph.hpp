#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "ncforest/error.hpp"

namespace ncf {

using Vertex = int;
using DartId = int;

struct Dart {
    Vertex tail = -1;
    Vertex head = -1;
    bool operator==(const Dart&) const = default;
    auto operator<=>(const Dart&) const = default;
};

struct Face {
    std::vector<Dart> boundary;
    bool is_outer = false;
};

// Rotation system with clockwise neighbor order.
// Dart id of u->rotation(u)[i] is offset(u) + i.
class PlaneGraph {
public:
    PlaneGraph() = default;

    static PlaneGraph build(int vertex_count, std::vector<std::vector<Vertex>> rotation,
                            Dart outer_dart);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(tail_.size()) / 2; }
    int dart_count() const { return static_cast<int>(tail_.size()); }
    const std::vector<Vertex>& rotation(Vertex v) const { return rot_[v]; }
    const std::vector<std::vector<Vertex>>& rotations() const { return rot_; }
    int degree(Vertex v) const { return static_cast<int>(rot_[v].size()); }
    Dart outer_dart() const { return outer_; }

    // -1 when (u,v) is not an edge
    DartId dart_id(Vertex u, Vertex v) const;
    bool has_edge(Vertex u, Vertex v) const { return dart_id(u, v) >= 0; }
    Dart dart(DartId d) const { return {tail_[d], head_[d]}; }
    DartId twin(DartId d) const { return twin_[d]; }
    DartId next_in_face(DartId d) const { return next_[d]; }
    int rot_index(DartId d) const { return d - off_[tail_[d]]; }
    DartId dart_at(Vertex v, int i) const { return off_[v] + i; }
    // undirected edge id, shared by a dart and its twin
    int edge_id(DartId d) const { return edge_of_[d]; }
    int edge_id(Vertex u, Vertex v) const;
    DartId edge_dart(int e) const { return edge_dart_[e]; }

    const std::vector<Face>& faces() const { return faces_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int face_of(DartId d) const { return face_of_[d]; }
    int outer_face() const { return outer_face_; }
    int component_count() const { return components_; }

    // Vertex sequence of the outer face, starting at the tail of its canonical first dart.
    std::vector<Vertex> outer_walk() const;
    // Dart ids of the outer face in walk order.
    const std::vector<DartId>& outer_darts() const { return outer_darts_; }

private:
    int n_ = 0;
    std::vector<std::vector<Vertex>> rot_;
    std::vector<int> off_;
    std::vector<Vertex> tail_, head_;
    std::vector<DartId> sorted_;
    std::vector<DartId> twin_, next_;
    std::vector<int> edge_of_;
    std::vector<DartId> edge_dart_;
    std::vector<Face> faces_;
    std::vector<int> face_of_;
    std::vector<DartId> outer_darts_;
    int outer_face_ = -1;
    int components_ = 0;
    Dart outer_{};
};

std::vector<Face> trace_faces(const PlaneGraph& g);
std::vector<Vertex> outer_walk(const PlaneGraph& g);

struct Point {
    double x = 0, y = 0;
};

// Rotation from straight-line coordinates (y up). The outer face is the face
// with the most negative signed area. Caller guarantees a planar drawing.
PlaneGraph plane_graph_from_geometry(const std::vector<Point>& pts,
                                     const std::vector<std::pair<Vertex, Vertex>>& edges);

} // namespace ncf
