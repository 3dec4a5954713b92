#include <filesystem>

#include "ncforest/generators.hpp"
#include "ncforest/json_io.hpp"
#include "ncforest/verification.hpp"

namespace ncf {

std::string witness3_fixture_path() { return std::string(NCF_FIXTURE_DIR) + "/witness3.json"; }

Witness3Search search_witness3(long long node_budget_per_candidate, int max_candidates) {
    // P_3 on [0,16] with its intervals doubled, and the eight leaves of P_4
    std::vector<std::array<int, 2>> base{{0, 16}, {0, 8}, {8, 16}, {0, 4}, {4, 8}, {8, 12}, {12, 16}};
    std::vector<std::array<int, 2>> leaves;
    for (int a = 0; a < 16; a += 2) leaves.push_back({a, a + 2});
    int L = static_cast<int>(leaves.size());

    std::vector<unsigned> masks;
    for (unsigned m = 0; m < (1u << L); ++m) masks.push_back(m);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned a, unsigned b) { return __builtin_popcount(a) < __builtin_popcount(b); });

    Witness3Search out;
    for (unsigned m : masks) {
        if (out.candidates >= max_candidates) break;
        ++out.candidates;
        auto iv = base;
        std::string src = "P_3 + leaves {";
        for (int i = 0; i < L; ++i)
            if (m >> i & 1) {
                iv.push_back(leaves[i]);
                src += " [" + std::to_string(leaves[i][0]) + "," + std::to_string(leaves[i][1]) + "]";
            }
        src += " }";
        PathSystem ps = gen_top_row(iv);
        if (!validate_ncs(ps).ok) continue;
        PcfnOptions opt;
        opt.k_max = 3;
        opt.node_budget = node_budget_per_candidate;
        PcfnResult r = exact_pcfn(ps, opt);
        out.nodes += r.nodes_explored;
        if (r.exact && r.value == 3) {
            out.instance = std::move(ps);
            out.intervals = iv;
            out.refute_nodes = r.nodes_explored;
            out.witness = r.witness;
            out.source = src;
            return out;
        }
    }
    throw Error(ErrorCode::WitnessNotFound,
                "no candidate with forest-cover number 3 among " + std::to_string(out.candidates));
}

PathSystem gen_witness3(long long search_budget) {
    std::string path = witness3_fixture_path();
    if (search_budget <= 0 && std::filesystem::exists(path))
        return instance_from_json(read_json_file(path).at("instance"));
    return search_witness3(search_budget > 0 ? search_budget : 10'000'000).instance;
}

} // namespace ncf
