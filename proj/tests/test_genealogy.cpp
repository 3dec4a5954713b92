#include "doctest.h"

#include <algorithm>
#include <set>

#include "ncforest/generators.hpp"
#include "ncforest/genealogy.hpp"

using namespace ncf;

namespace {

// nine paths: p1 -> {p2, p7, p8}, p2 -> {p3, p6}, p3 -> {p4, p5}, p8 -> {p9}
PathSystem nine_paths() {
    return gen_top_row({{0, 60}, {34, 58}, {44, 56}, {50, 54}, {46, 49}, {36, 42}, {22, 32}, {2, 20}, {10, 18}});
}

std::set<int> kids(const GenealogyTree& t, int p) { return {t.children[p].begin(), t.children[p].end()}; }

} // namespace

TEST_CASE("single path is the root") {
    auto ps = gen_top_row({{0, 3}});
    auto t = build_genealogy(ps);
    CHECK(t.root == 0);
    CHECK(t.children[0].empty());
    CHECK(t.x[0] != t.y[0]);
}

TEST_CASE("outer pair of two nested pairs is the root") {
    auto ps = gen_top_row({{1, 5}, {0, 6}});
    auto t = build_genealogy(ps);
    CHECK(t.root == 1);
    CHECK(t.parent[0] == 1);
}

TEST_CASE("disjoint pairs under one root give a star") {
    auto ps = gen_top_row({{0, 20}, {1, 4}, {5, 8}, {9, 12}, {13, 16}});
    auto t = build_genealogy(ps);
    CHECK(t.root == 0);
    CHECK(t.children[0].size() == 4);
    for (int c = 1; c <= 4; ++c) CHECK(t.children[c].empty());
}

TEST_CASE("nested chain gives a path tree") {
    const int k = 6;
    std::vector<std::array<int, 2>> iv;
    for (int i = 0; i < k; ++i) iv.push_back({i, 2 * k - i});
    auto ps = gen_top_row(iv);
    auto t = build_genealogy(ps);
    CHECK(t.root == 0);
    for (int i = 1; i < k; ++i) CHECK(t.parent[i] == i - 1);
    CHECK(*std::max_element(t.depth.begin(), t.depth.end()) - t.depth[t.root] == k - 1);
}

TEST_CASE("nine-path instance tree and its binarization") {
    auto ps = nine_paths();
    REQUIRE(validate_ncs(ps).ok);
    auto t = build_genealogy(ps);
    CHECK(t.root == 0);
    CHECK(kids(t, 0) == std::set<int>{1, 6, 7});
    CHECK(kids(t, 7) == std::set<int>{8});
    CHECK(kids(t, 1) == std::set<int>{2, 5});
    CHECK(kids(t, 2) == std::set<int>{3, 4});
    // sibling order from x of the root
    CHECK(t.children[0] == std::vector<int>{1, 6, 7});

    auto b = binarize(ps, t);
    CHECK(b.added == 2);
    CHECK(b.tree.is_binary());
    CHECK(validate_ncs(b.ps).ok);
    int p10 = 9, p11 = 10;
    CHECK(b.ps.is_aux(p10));
    CHECK(b.ps.is_aux(p11));
    CHECK(kids(b.tree, 0) == std::set<int>{p10, 1});
    CHECK(kids(b.tree, p10) == std::set<int>{7, 6});
    CHECK(kids(b.tree, 7) == std::set<int>{8, p11});
    CHECK(kids(b.tree, 1) == std::set<int>{5, 2});
    CHECK(kids(b.tree, 2) == std::set<int>{4, 3});
    // the auxiliary path over the single child runs from x8 to x9
    CHECK(b.tree.x[p11] == t.x[7]);
    CHECK(b.tree.y[p11] == t.x[8]);
}

TEST_CASE("ancestor relation equals interval containment") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto ps = gen_random_ncs(15, 3, seed);
        auto t = build_genealogy(ps);
        int walk = static_cast<int>(ps.graph.outer_darts().size());
        for (int p = 0; p < t.size(); ++p) {
            CHECK(t.s[p] >= 0);
            CHECK(t.e[p] <= walk);
            for (int q = 0; q < t.size(); ++q) {
                bool inside = t.s[q] <= t.s[p] && t.e[p] <= t.e[q];
                CHECK(t.below_eq(p, q) == inside);
            }
        }
    }
}

TEST_CASE("binarization preserves order and is idempotent") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        auto ps = gen_random_ncs(20, 2 + static_cast<int>(seed % 3), seed);
        auto t = build_genealogy(ps);
        auto b = binarize(ps, t);
        CHECK(b.ps.size() <= 2 * ps.size());
        CHECK(b.ps.original_count() == ps.size());
        for (int p = 0; p < ps.size(); ++p)
            for (int q = 0; q < ps.size(); ++q) CHECK(b.tree.below_eq(p, q) == t.below_eq(p, q));
        for (int p = 0; p < b.tree.size(); ++p)
            if (b.tree.children[p].size() == 2) {
                int r = b.tree.children[p][0], l = b.tree.children[p][1];
                CHECK((b.tree.e[r] <= b.tree.s[l] || b.tree.e[l] <= b.tree.s[r]));
            }
        auto again = binarize(b.ps, b.tree);
        CHECK(again.added == 0);
        CHECK(again.ps.paths == b.ps.paths);
    }
}

TEST_CASE("already binary P_k is unchanged") {
    auto ps = gen_pk(5);
    auto b = binarize(ps, build_genealogy(ps));
    CHECK(b.added == 0);
}
