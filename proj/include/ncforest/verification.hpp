#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ncforest/labeling.hpp"

namespace ncf {

struct LabelClassStats {
    int label = 0;
    int edges = 0;
    int vertices = 0;
    std::vector<Vertex> cycle; // closed walk v0..vk with vk adjacent to v0; empty when acyclic
};

struct ForestCheckReport {
    bool ok = true;
    std::vector<LabelClassStats> per_label;
};

// labels[i] labels path i; paths past labels.size() are ignored.
ForestCheckReport check_forest_labeling(const PathSystem& ps, const std::vector<int>& labels);

// Faces whose extremal lower edges share a label. labels must cover every path of ps.
std::vector<FaceInfo> check_faces_solved(const PathSystem& ps, const FaceAnalysis& fa,
                                         const std::vector<int>& labels);

struct PcfnResult {
    int value = -1;       // least feasible k, -1 if none was found
    int lower_bound = 1;  // every k below this was refuted completely
    bool exact = false;
    std::vector<int> witness;
    long long nodes_explored = 0;
    bool budget_exhausted = false;
};

struct PcfnOptions {
    int k_max = 4;
    long long node_budget = 50'000'000;
    int jobs = 1;
};

// Only single-touch is assumed; crossing paths are fine.
PcfnResult exact_pcfn(const PathSystem& ps, const PcfnOptions& opt = {});

// Plain enumeration of all k^n labelings, k = 1, 2, ...; for cross-checking on small inputs.
PcfnResult naive_pcfn(const PathSystem& ps, int k_max);

struct Listing {
    std::vector<Vertex> path;
    long long ops = 0;
};

// Lists paths from the forests of a forest labeling.
class PathLister {
public:
    PathLister(const PathSystem& ps, const std::vector<int>& labels);
    Listing list(Vertex x, Vertex y, int label) const;
    long long preprocessing_ops() const { return prep_ops_; }

private:
    struct Forest {
        std::vector<int> parent, depth, tree; // per vertex; tree = -1 if absent
    };
    std::vector<Forest> forests_; // indexed by label
    long long prep_ops_ = 0;
};

Listing lca_path_listing(const PathSystem& ps, const std::vector<int>& labels, int p);

// Structural checks on a binarized, decomposed instance: path/face contiguity,
// extremal edges of type I faces, and the shape of the interference relation.
ContractLog check_structure(const PathSystem& ps, const GenealogyTree& tree, const Decomposition& dec,
                            const FaceAnalysis& fa);

struct ConverseReport {
    long long enumerated = 0;
    long long all_solved = 0;
    long long counterexamples = 0; // all faces solved but some label class has a cycle
};

// Enumerates every labeling of ps with labels in [k] and tests
// (all faces solved) => forest labeling.
ConverseReport faces_converse_check(const PathSystem& ps, const FaceAnalysis& fa, int k);

} // namespace ncf
