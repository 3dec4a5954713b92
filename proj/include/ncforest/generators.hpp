#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ncforest/path_system.hpp"

namespace ncf {

enum class Family { PK, COUNTEREXAMPLE4, CROSSING_FAN, RANDOM, WITNESS3 };

struct GenSpec {
    Family family = Family::PK;
    int k = 3;
    int j = 6;
    int r = 3;
    int n_pairs = 10;
    int depth = 4;
    std::uint64_t seed = 1;
};

PathSystem generate(const GenSpec& spec);

// Paths over the integer intervals, drawn as (a,0),(a+1,1),...,(b-1,1),(b,0).
// Intervals must be laminar with length at least 2.
PathSystem gen_top_row(const std::vector<std::array<int, 2>>& intervals);

PathSystem gen_pk(int k);

// P_k with a q-gadget under the leftmost leaf and a mirrored p-gadget under the
// rightmost leaf of every node at depth j (root depth 1).
PathSystem gen_counterexample4(int k = 13, int j = 6);

// One gadget pair with the two chains of its depth-j node and an enclosing root.
PathSystem gen_gadget_isolated(int chain = 8);

// 2r segments of lines tangent to a parabola; every pair crosses once.
PathSystem gen_crossing_fan(int r);

PathSystem gen_random_ncs(int n_pairs, int depth, std::uint64_t seed);

// Committed fixture if present, otherwise the deterministic search.
PathSystem gen_witness3(long long search_budget = 0);

struct Witness3Search {
    PathSystem instance;
    std::vector<std::array<int, 2>> intervals;
    long long candidates = 0;
    long long nodes = 0;          // oracle nodes over all candidates
    long long refute_nodes = 0;   // nodes of the winning candidate's run
    std::vector<int> witness;     // a 3-labeling
    std::string source;
};

// Deterministic search for an NCS with forest-cover number 3: P_3 plus
// subsets of the leaf intervals of P_4, smallest subsets first.
Witness3Search search_witness3(long long node_budget_per_candidate = 10'000'000, int max_candidates = 256);

// Path to the committed fixture.
std::string witness3_fixture_path();

} // namespace ncf
