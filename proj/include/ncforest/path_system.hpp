#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "ncforest/plane_graph.hpp"

namespace ncf {

using Path = std::vector<Vertex>;

struct PathSystem {
    PlaneGraph graph;
    std::vector<Path> paths;
    std::vector<char> auxiliary;

    int size() const { return static_cast<int>(paths.size()); }
    bool is_aux(int p) const { return p < static_cast<int>(auxiliary.size()) && auxiliary[p]; }
    int original_count() const;
};

// Builds the union graph from vertex coordinates and the paths themselves.
PathSystem path_system_from_geometry(const std::vector<Point>& pts, std::vector<Path> paths);

namespace rule {
inline constexpr const char* kSingleTouch = "SINGLE-TOUCH";
inline constexpr const char* kNonCrossing = "NON-CROSSING";
inline constexpr const char* kWellFormed = "WELL-FORMED";
inline constexpr const char* kTerminals = "TERMINALS_ON_OUTER_FACE";
inline constexpr const char* kDistinctPairs = "DISTINCT_PAIRS";
inline constexpr const char* kDisconnected = "DISCONNECTED";
inline constexpr const char* kPathShape = "PATH_SHAPE";
inline constexpr const char* kUnion = "UNION_MISMATCH";
} // namespace rule

struct Violation {
    std::string rule;
    std::vector<int> paths;
    std::vector<Vertex> witness;
    std::string detail;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
    bool has(const std::string& r) const;
    int count(const std::string& r) const;
};

// Set skip_crossing to only check the single-touch and structural rules.
ValidationReport validate_ncs(const PathSystem& ps, bool skip_crossing = false);

// vertex -> (path, position) sorted by path; edge -> sorted path ids
struct Incidence {
    std::vector<std::vector<std::pair<int, int>>> at_vertex;
    std::vector<std::vector<int>> at_edge;
    int pos_in(int path, Vertex v) const;
};

Incidence build_incidence(const PathSystem& ps);

enum class PairStatus { Ok, NotTouch, Cross };

// Single-touch and non-crossing test for one pair. pos_in_q gives the index
// of a vertex in Q or -1. shared_out receives (index in P, index in Q).
PairStatus check_pair(const PlaneGraph& g, const Path& P, const Path& Q,
                      const std::function<int(Vertex)>& pos_in_q,
                      std::vector<std::pair<int, int>>* shared_out = nullptr);

struct TerminalEntry {
    Vertex v = -1;
    int path = -1;
    int role = 0; // 0 front of the stored path, 1 back
    int pos = -1; // index into the outer walk
};

// Outer-walk index of both ends of every path, -1 when not on the outer face.
std::vector<std::array<int, 2>> terminal_positions(const PathSystem& ps);

// All terminals in clockwise outer-walk order.
std::vector<TerminalEntry> terminal_order(const PathSystem& ps);

} // namespace ncf
