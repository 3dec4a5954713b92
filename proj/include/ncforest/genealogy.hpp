#pragma once

#include <optional>
#include <vector>

#include "ncforest/path_system.hpp"

namespace ncf {

struct Orientation {
    int p1 = -1;
    int e1_pos = -1; // index of e1 in the outer walk
    Dart e1;
    std::vector<Vertex> x, y;
    std::vector<char> reversed; // stored path runs y -> x
    // gamma as a linear interval [s, e) of outer-walk darts, unrolled after e1
    std::vector<int> s, e;
};

struct GenealogyTree {
    int root = -1;
    Dart e1;
    int e1_pos = -1;
    std::vector<int> parent;
    // children sorted by gamma start; children[0] is the right child (closer to x of the parent)
    std::vector<std::vector<int>> children;
    std::vector<int> depth;
    std::vector<Vertex> x, y;
    std::vector<char> reversed;
    std::vector<int> s, e;

    int size() const { return static_cast<int>(parent.size()); }
    bool is_binary() const;
    // p below or equal to q in the nesting order
    bool below_eq(int p, int q) const;
    int right_child(int p) const { return children[p].size() == 2 ? children[p][0] : -1; }
    int left_child(int p) const { return children[p].size() == 2 ? children[p][1] : -1; }
    Path oriented(const PathSystem& ps, int p) const;
    std::vector<int> preorder() const;
};

// Pass keep_root to reuse a previous root choice.
Orientation choose_root_and_orient(const PathSystem& ps, std::optional<int> keep_root = {},
                                   int keep_e1_pos = -1);
GenealogyTree build_genealogy(const PathSystem& ps, const Orientation& o);
GenealogyTree build_genealogy(const PathSystem& ps);

struct Binarized {
    PathSystem ps;
    GenealogyTree tree;
    int added = 0;
};

Binarized binarize(const PathSystem& ps, const GenealogyTree& tree);

} // namespace ncf
