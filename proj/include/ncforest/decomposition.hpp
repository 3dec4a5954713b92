#pragma once

#include <vector>

#include "ncforest/genealogy.hpp"

namespace ncf {

struct Decomposition {
    // max_levels[i] = MAX_i; TOUCH_{i+1} is the union of touch[p] over p in MAX_i
    std::vector<std::vector<int>> max_levels;
    std::vector<char> is_max;
    std::vector<int> owner;      // the MAX path p with q in Touch_p
    std::vector<int> max_owner;  // for m in MAX \ {p1}: the p with m in Max_p
    std::vector<int> level;      // i with q in TOUCH_i
    std::vector<std::vector<int>> touch; // Touch_p in preorder, only for MAX paths
    std::vector<std::vector<int>> max;   // Max_p in genealogy order
    // children inside TreeTouch_{owner(q)}; index 0 is the right child when there are two
    std::vector<std::vector<int>> tchildren;

    // last TOUCH level index
    int N() const { return static_cast<int>(max_levels.size()); }
    std::vector<int> right_descendants(int q) const;
    std::vector<int> left_descendants(int q) const;
};

Decomposition compute_levels(const PathSystem& ps, const GenealogyTree& tree);

// R(q) and L(q) w.r.t. the owner of q. q must be in Touch_p.
std::vector<int> descendant_set(const Decomposition& dec, int p, int q, bool right);

enum class FaceType { I = 1, II = 2, III = 3 };

struct FaceInfo {
    int face = -1;
    int upper = -1;
    std::vector<DartId> lower;
    int e_r = -1, e_l = -1; // edge ids
    int owner = -1;
    FaceType type = FaceType::I;
    int m_r = -1, m_l = -1; // type II
    int m = -1;             // type III: the child in Max_owner
    bool m_is_right = false;
};

struct FaceAnalysis {
    std::vector<FaceInfo> faces;          // one per inner face, by face id
    std::vector<int> info_of_face;        // face id -> index into faces, -1 for the outer face
    std::vector<std::vector<int>> paths_on_edge; // P(e)
    std::vector<int> f_m;  // per path: index into faces of f_m, -1 when absent
    std::vector<int> se;   // per path: edge id of se^m, -1 when absent

    bool contains(int path, int edge) const;
};

FaceAnalysis analyze_faces(const PathSystem& ps, const GenealogyTree& tree, const Decomposition& dec);

struct InterferenceForest {
    int owner = -1;
    std::vector<int> nodes; // Max^III_owner
    std::vector<std::pair<int, int>> arcs; // m -> m' on Max_owner
    std::vector<int> parent; // parallel to nodes; index into nodes or -1
    std::vector<char> in_a;  // parallel to nodes
    std::vector<int> max_ii;
    std::vector<int> max_none; // Max paths without a face f_m

    // indices into nodes of each tree, roots first
    std::vector<std::vector<int>> trees() const;
};

InterferenceForest interference_forest(const PathSystem& ps, const GenealogyTree& tree,
                                       const Decomposition& dec, const FaceAnalysis& fa, int p);

} // namespace ncf
