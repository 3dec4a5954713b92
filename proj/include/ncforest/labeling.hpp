#pragma once

#include <array>
#include <string>
#include <vector>

#include "ncforest/decomposition.hpp"

namespace ncf {

using Triple = std::array<int, 3>; // sorted ascending; {0,0,0} when unset

struct Labeling {
    std::vector<int> label;   // 0 when unset
    std::vector<Triple> triple;
    std::vector<int> sc;
    int palette = 4;

    int num_labels() const;
    int max_label() const;
};

// Post-condition checks collected during a run.
struct ContractLog {
    long long checks = 0;
    std::vector<std::string> failures;

    void check(bool ok, const char* what, int a = -1, int b = -1);
    bool ok() const { return failures.empty(); }
};

enum class Algo { Four, Fifteen };

// Labeling primitives over a binarized, decomposed instance.
class Labeler {
public:
    Labeler(const PathSystem& ps, const GenealogyTree& tree, const Decomposition& dec,
            const FaceAnalysis& fa, int palette);

    void right_color(int p, int q, Triple perm);
    void left_color(int p, int q, Triple perm);
    void set_color(int p, int q, int c_r, int c_l);
    void color_touch(int p);
    void color_special_touch(int p);
    void triple_max(int p);
    void triple_special_max(int p);

    void set_triple(int p, Triple t);
    void set_sc(int p, int c);

    Labeling& labeling() { return lab_; }
    const Labeling& labeling() const { return lab_; }
    ContractLog& log() { return log_; }
    // Delta sets computed by triple_special_max, before padding
    const std::vector<std::vector<int>>& deltas() const { return deltas_; }

private:
    const PathSystem& ps_;
    const GenealogyTree& tree_;
    const Decomposition& dec_;
    const FaceAnalysis& fa_;
    Labeling lab_;
    ContractLog log_;
    std::vector<std::vector<int>> faces_of_owner_;
    std::vector<std::vector<int>> deltas_;

    void assign(int q, int c);
    void rc(int p, int q, Triple perm, bool right_first);
    bool has_se(int p, int q) const;
    std::vector<int> labels_of(const std::vector<int>& qs) const;
    std::vector<int> edge_labels(int e) const;
    void check_type_one(int p);
};

struct LabelRun {
    Binarized bin;
    Decomposition dec;
    FaceAnalysis fa;
    Labeling full;     // includes auxiliary paths
    Labeling labeling; // original paths only
    ContractLog log;
};

LabelRun run_labeling(const PathSystem& ps, Algo algo);
Labeling four_forests(const PathSystem& ps);
Labeling forest_fifteen(const PathSystem& ps);

} // namespace ncf
