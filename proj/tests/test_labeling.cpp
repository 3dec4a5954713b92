#include "doctest.h"

#include <algorithm>
#include <set>

#include "ncforest/generators.hpp"
#include "ncforest/labeling.hpp"
#include "ncforest/verification.hpp"

using namespace ncf;

namespace {

struct Prepared {
    Binarized b;
    Decomposition dec;
    FaceAnalysis fa;
};

Prepared prepare(const PathSystem& ps) {
    Prepared r;
    r.b = binarize(ps, build_genealogy(ps));
    r.dec = compute_levels(r.b.ps, r.b.tree);
    r.fa = analyze_faces(r.b.ps, r.b.tree, r.dec);
    return r;
}

int rchild(const GenealogyTree& t, int p) { return t.children[p][0]; }
int lchild(const GenealogyTree& t, int p) { return t.children[p][1]; }

void check_run(const PathSystem& ps, Algo algo, int max_label) {
    auto run = run_labeling(ps, algo);
    CHECK_MESSAGE(run.log.ok(), (run.log.ok() ? std::string() : run.log.failures[0]));
    CHECK(static_cast<int>(run.labeling.label.size()) == ps.size());
    CHECK(run.labeling.max_label() <= max_label);
    CHECK(check_forest_labeling(ps, run.labeling.label).ok);
    CHECK(check_forest_labeling(run.bin.ps, run.full.label).ok);
    CHECK(check_faces_solved(run.bin.ps, run.fa, run.full.label).empty());
}

} // namespace

TEST_CASE("right color on P_3") {
    auto r = prepare(gen_pk(3));
    const auto& t = r.b.tree;
    Labeler L(r.b.ps, t, r.dec, r.fa, 4);
    int root = t.root;
    L.right_color(root, root, {1, 2, 3});
    const auto& lab = L.labeling().label;
    int a = rchild(t, root), b = lchild(t, root);
    CHECK(lab[root] == 1);
    CHECK(lab[a] == 1);
    CHECK(lab[rchild(t, a)] == 1);
    CHECK(lab[lchild(t, a)] == 3);
    CHECK(lab[b] == 2);
    CHECK(lab[rchild(t, b)] == 2);
    CHECK(lab[lchild(t, b)] == 1);
    CHECK(L.log().ok());
    CHECK(L.log().checks > 0);
}

TEST_CASE("left color on P_2") {
    auto r = prepare(gen_pk(2));
    const auto& t = r.b.tree;
    Labeler L(r.b.ps, t, r.dec, r.fa, 4);
    L.left_color(t.root, t.root, {1, 2, 3});
    const auto& lab = L.labeling().label;
    CHECK(lab[t.root] == 1);
    CHECK(lab[lchild(t, t.root)] == 1);
    CHECK(lab[rchild(t, t.root)] == 2);
    CHECK(L.log().ok());
}

TEST_CASE("right and left color are mirror images") {
    for (int k = 1; k <= 6; ++k) {
        auto r = prepare(gen_pk(k));
        const auto& t = r.b.tree;
        Labeler R(r.b.ps, t, r.dec, r.fa, 4), L(r.b.ps, t, r.dec, r.fa, 4);
        R.right_color(t.root, t.root, {1, 2, 3});
        L.left_color(t.root, t.root, {1, 2, 3});
        // swap children along both walks
        std::vector<std::pair<int, int>> stack{{t.root, t.root}};
        while (!stack.empty()) {
            auto [p, q] = stack.back();
            stack.pop_back();
            CHECK(R.labeling().label[p] == L.labeling().label[q]);
            if (t.children[p].size() == 2) {
                stack.push_back({t.children[p][0], t.children[q][1]});
                stack.push_back({t.children[p][1], t.children[q][0]});
            }
        }
        CHECK(R.log().ok());
        CHECK(L.log().ok());
    }
}

TEST_CASE("special touch coloring puts sc on the special edge") {
    for (int k = 2; k <= 6; ++k) {
        auto r = prepare(gen_pk(k));
        const auto& t = r.b.tree;
        Labeler L(r.b.ps, t, r.dec, r.fa, 4);
        L.set_triple(t.root, {1, 2, 3});
        L.set_sc(t.root, 1);
        L.color_special_touch(t.root);
        const auto& lab = L.labeling().label;
        for (int X : r.fa.paths_on_edge[r.fa.se[t.root]]) CHECK(lab[X] == 1);
        for (int q = 0; q < r.b.ps.size(); ++q) CHECK((lab[q] >= 1 && lab[q] <= 3));
        CHECK(L.log().ok());
    }
}

TEST_CASE("write-once and prerequisite errors") {
    auto r = prepare(gen_pk(3));
    const auto& t = r.b.tree;
    Labeler L(r.b.ps, t, r.dec, r.fa, 4);
    CHECK_THROWS_AS(L.color_special_touch(t.root), Error);
    CHECK_THROWS_AS(L.triple_max(t.root), Error);
    try {
        L.color_touch(t.root);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MissingPrerequisite);
    }
    L.set_triple(t.root, {1, 2, 3});
    try {
        L.triple_special_max(t.root);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::MissingPrerequisite);
    }
    try {
        L.set_triple(t.root, {1, 2, 4});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AlreadyLabeled);
    }
    L.right_color(t.root, t.root, {1, 2, 3});
    try {
        L.right_color(t.root, t.root, {1, 2, 3});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AlreadyLabeled);
    }
}

TEST_CASE("coloring outside Touch is rejected") {
    Prepared r;
    r = prepare(gen_random_ncs(30, 4, 7));
    const auto& t = r.b.tree;
    REQUIRE(r.dec.max_levels.size() >= 2);
    int m = r.dec.max_levels[1][0];
    Labeler L(r.b.ps, t, r.dec, r.fa, 4);
    try {
        L.right_color(t.root, m, {1, 2, 3});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotInTouch);
    }
}

TEST_CASE("single path gets label 1") {
    auto ps = gen_top_row({{0, 4}});
    CHECK(four_forests(ps).label == std::vector<int>{1});
    CHECK(forest_fifteen(ps).label == std::vector<int>{1});
}

TEST_CASE("P_k uses the root triple only") {
    for (int k = 1; k <= 8; ++k) {
        auto lab = four_forests(gen_pk(k));
        CHECK(lab.max_label() <= 3);
        check_run(gen_pk(k), Algo::Four, 3);
        check_run(gen_pk(k), Algo::Fifteen, 3);
    }
}

TEST_CASE("auxiliary paths are stripped") {
    auto ps = gen_top_row({{0, 60}, {34, 58}, {44, 56}, {50, 54}, {46, 49}, {36, 42}, {22, 32}, {2, 20}, {10, 18}});
    auto run = run_labeling(ps, Algo::Four);
    CHECK(run.bin.added == 2);
    CHECK(run.full.label.size() == 11);
    CHECK(run.labeling.label.size() == 9);
    for (int c : run.full.label) CHECK(c > 0);
    check_run(ps, Algo::Four, 4);
}

TEST_CASE("four labels on the generated families") {
    check_run(gen_counterexample4(5, 3), Algo::Four, 4);
    check_run(gen_counterexample4(6, 4), Algo::Four, 4);
    check_run(gen_gadget_isolated(), Algo::Four, 4);
    check_run(gen_witness3(), Algo::Four, 4);
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        auto ps = gen_random_ncs(15 + static_cast<int>(seed % 25), 2 + static_cast<int>(seed % 4), seed);
        check_run(ps, Algo::Four, 4);
    }
}

TEST_CASE("fifteen labels with canonical triples") {
    const std::set<Triple> canon{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}, {13, 14, 15}};
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        auto ps = gen_random_ncs(15 + static_cast<int>(seed % 25), 2 + static_cast<int>(seed % 4), seed);
        auto run = run_labeling(ps, Algo::Fifteen);
        CHECK_MESSAGE(run.log.ok(), "seed " << seed);
        CHECK(run.labeling.max_label() <= 15);
        CHECK(check_forest_labeling(ps, run.labeling.label).ok);
        for (const auto& level : run.dec.max_levels)
            for (int m : level) {
                CHECK(canon.count(run.full.triple[m]));
                if (m != run.bin.tree.root) CHECK(run.full.triple[m] != run.full.triple[run.dec.max_owner[m]]);
            }
        for (int q = 0; q < run.bin.ps.size(); ++q) {
            const Triple& T = run.full.triple[run.dec.owner[q]];
            CHECK(std::find(T.begin(), T.end(), run.full.label[q]) != T.end());
        }
    }
}

TEST_CASE("special max triples stay in four labels") {
    int a_nodes = 0;
    for (std::uint64_t seed = 1; seed <= 150; ++seed) {
        auto ps = gen_random_ncs(15 + static_cast<int>(seed % 25), 2 + static_cast<int>(seed % 4), seed);
        auto run = run_labeling(ps, Algo::Four);
        for (const auto& level : run.dec.max_levels)
            for (int p : level) {
                const Triple& T = run.full.triple[p];
                CHECK(T[0] >= 1);
                CHECK(T[2] <= 4);
                CHECK((T[0] < T[1] && T[1] < T[2]));
                CHECK(std::find(T.begin(), T.end(), run.full.sc[p]) != T.end());
                if (p == run.bin.tree.root) continue;
                auto F = interference_forest(run.bin.ps, run.bin.tree, run.dec, run.fa, run.dec.max_owner[p]);
                auto it = std::find(F.nodes.begin(), F.nodes.end(), p);
                if (it != F.nodes.end() && F.in_a[it - F.nodes.begin()]) {
                    ++a_nodes;
                    const Triple& Tp = run.full.triple[run.dec.max_owner[p]];
                    CHECK(std::find(Tp.begin(), Tp.end(), run.full.sc[p]) == Tp.end());
                }
            }
    }
    CHECK(a_nodes > 0);
}
