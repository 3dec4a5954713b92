#include "doctest.h"

#include <algorithm>

#include "ncforest/generators.hpp"
#include "ncforest/labeling.hpp"
#include "ncforest/verification.hpp"

using namespace ncf;

namespace {

bool same_path(const Path& a, const Path& b) {
    return a == b || std::equal(a.begin(), a.end(), b.rbegin(), b.rend());
}

} // namespace

TEST_CASE("forest check on a single class") {
    auto ps = gen_pk(3);
    auto rep = check_forest_labeling(ps, std::vector<int>(ps.size(), 1));
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.per_label.size() == 1);
    CHECK(rep.per_label[0].label == 1);
    CHECK(rep.per_label[0].edges == ps.graph.edge_count());
    CHECK(rep.per_label[0].cycle.size() >= 3);

    auto ok = check_forest_labeling(ps, four_forests(ps).label);
    CHECK(ok.ok);
    for (const auto& s : ok.per_label) {
        CHECK(s.cycle.empty());
        CHECK(s.edges < s.vertices);
    }
}

TEST_CASE("cycle witness is a closed walk in one class") {
    auto ps = gen_crossing_fan(3);
    std::vector<int> lab(ps.size(), 1);
    auto rep = check_forest_labeling(ps, lab);
    REQUIRE_FALSE(rep.ok);
    const auto& cyc = rep.per_label[0].cycle;
    REQUIRE(cyc.size() >= 3);
    for (size_t i = 0; i < cyc.size(); ++i) {
        Vertex a = cyc[i], b = cyc[(i + 1) % cyc.size()];
        CHECK(ps.graph.edge_id(a, b) >= 0);
    }
}

TEST_CASE("unlabeled path is rejected") {
    auto ps = gen_pk(2);
    try {
        check_forest_labeling(ps, {1, 0, 2});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::UnlabeledPath);
    }
}

TEST_CASE("merging the extremal edges of a face breaks it") {
    int broken = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        auto ps = gen_random_ncs(12 + static_cast<int>(seed % 10), 3, seed);
        auto run = run_labeling(ps, Algo::Four);
        REQUIRE(check_faces_solved(run.bin.ps, run.fa, run.full.label).empty());
        for (const auto& f : run.fa.faces) {
            auto lab = run.full.label;
            // relabel everything on e_l with the label of some path on e_r
            int c = lab[run.fa.paths_on_edge[f.e_r][0]];
            for (int X : run.fa.paths_on_edge[f.e_l]) lab[X] = c;
            auto bad = check_faces_solved(run.bin.ps, run.fa, lab);
            bool found = std::any_of(bad.begin(), bad.end(), [&](const FaceInfo& g) { return g.face == f.face; });
            CHECK(found);
            ++broken;
        }
    }
    CHECK(broken > 0);
}

TEST_CASE("exact forest cover number of P_k") {
    const int frozen[] = {1, 2, 2, 3, 3};
    for (int k = 1; k <= 5; ++k) {
        auto r = exact_pcfn(gen_pk(k));
        CHECK(r.exact);
        CHECK(r.value == frozen[k - 1]);
        CHECK(r.lower_bound == r.value);
        CHECK(check_forest_labeling(gen_pk(k), r.witness).ok);
        if (k <= 3) CHECK(naive_pcfn(gen_pk(k), 4).value == r.value);
    }
}

TEST_CASE("crossing fans need one label per pair of segments") {
    for (int r = 2; r <= 5; ++r) {
        auto ps = gen_crossing_fan(r);
        auto res = exact_pcfn(ps, {6, 50'000'000, 1});
        CHECK(res.exact);
        CHECK(res.value == r);
        if (r <= 3) CHECK(naive_pcfn(ps, 6).value == r);
    }
}

TEST_CASE("parallel search agrees with the sequential one") {
    for (auto ps : {gen_crossing_fan(4), gen_pk(4), gen_witness3()}) {
        auto a = exact_pcfn(ps, {4, 50'000'000, 1});
        auto b = exact_pcfn(ps, {4, 50'000'000, 4});
        CHECK(a.value == b.value);
        CHECK(a.witness == b.witness);
        CHECK(b.exact);
    }
}

TEST_CASE("budget exhaustion is reported") {
    auto r = exact_pcfn(gen_crossing_fan(6), {6, 50, 1});
    CHECK(r.budget_exhausted);
    CHECK_FALSE(r.exact);
    CHECK(r.nodes_explored <= 51);
}

TEST_CASE("listing recovers every path") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto ps = gen_random_ncs(15 + static_cast<int>(seed % 20), 3, seed);
        auto lab = four_forests(ps).label;
        PathLister lister(ps, lab);
        for (int p = 0; p < ps.size(); ++p) {
            const Path& P = ps.paths[p];
            auto got = lister.list(P.front(), P.back(), lab[p]);
            CHECK(same_path(got.path, P));
            CHECK(got.ops <= 8 * static_cast<long long>(P.size()));
            CHECK(same_path(lca_path_listing(ps, lab, p).path, P));
        }
    }
}

TEST_CASE("listing a pair outside the forest") {
    auto ps = gen_pk(2);
    std::vector<int> lab{1, 2, 3};
    PathLister lister(ps, lab);
    const Path& P = ps.paths[0];
    try {
        lister.list(P.front(), P.back(), 2);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::PairNotInForest);
    }
}

TEST_CASE("solved faces imply forests on small instances") {
    for (auto ps : {gen_pk(2), gen_pk(3), gen_top_row({{0, 12}, {1, 5}, {5, 11}, {6, 8}}),
                    gen_random_ncs(6, 2, 3)}) {
        auto b = binarize(ps, build_genealogy(ps));
        auto dec = compute_levels(b.ps, b.tree);
        auto fa = analyze_faces(b.ps, b.tree, dec);
        auto rep = faces_converse_check(b.ps, fa, 3);
        CHECK(rep.enumerated > 0);
        CHECK(rep.all_solved > 0);
        CHECK(rep.counterexamples == 0);
    }
}

TEST_CASE("structure checks on generated families") {
    for (auto ps : {gen_pk(6), gen_counterexample4(5, 3), gen_gadget_isolated(), gen_witness3()}) {
        auto b = binarize(ps, build_genealogy(ps));
        auto dec = compute_levels(b.ps, b.tree);
        auto fa = analyze_faces(b.ps, b.tree, dec);
        auto log = check_structure(b.ps, b.tree, dec, fa);
        CHECK_MESSAGE(log.ok(), (log.ok() ? std::string() : log.failures[0]));
        CHECK(log.checks > 0);
    }
}
