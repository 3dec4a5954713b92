// One line per criterion; exits non-zero when any criterion fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ncforest/generators.hpp"
#include "ncforest/json_io.hpp"
#include "ncforest/labeling.hpp"
#include "ncforest/verification.hpp"

using namespace ncf;

namespace {

constexpr double kLabelSecondsPerInstance = 2.0;
constexpr double kCounterexampleSeconds = 30.0;
constexpr double kFanSeconds = 10.0;
constexpr double kSearchSeconds = 300.0;
constexpr double kReplaySeconds = 10.0;
constexpr int kConverseMaxPaths = 8;
constexpr int kConverseLabels = 3;
constexpr int kOracleInstances = 50;
constexpr int kOracleMaxPaths = 12;
constexpr long long kListingFactor = 8;
constexpr long long kInfoRefuteBudget = 2'000'000;

struct Item {
    std::string name;
    PathSystem ps;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

template <class F>
double timed(F&& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return seconds_since(t0);
}

int failed = 0;

void report(int id, bool ok, const std::string& what, const std::string& detail) {
    std::printf("[%s] criterion %d: %s | %s\n", ok ? "PASS" : "FAIL", id, what.c_str(), detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failed;
}

// random seeds 1..500: small instances first, a few large ones at the end
PathSystem random_instance(std::uint64_t s) {
    int n, depth = 2 + static_cast<int>(s % 4);
    if (s <= 100) {
        n = 2 + static_cast<int>(s % 7);
    } else if (s <= 480) {
        n = 10 + static_cast<int>((s * 37) % 290);
    } else {
        n = 600 * static_cast<int>(s - 480);
        depth = 6 + static_cast<int>(s % 3);
    }
    return gen_random_ncs(n, depth, s);
}

std::vector<Item> build_corpus() {
    std::vector<Item> c;
    for (std::uint64_t s = 1; s <= 500; ++s) c.push_back({"random#" + std::to_string(s), random_instance(s)});
    for (int k = 1; k <= 10; ++k) c.push_back({"pk" + std::to_string(k), gen_pk(k)});
    c.push_back({"counterexample4", gen_counterexample4()});
    c.push_back({"witness3", gen_witness3()});
    return c;
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

struct LabelStats {
    int pass = 0;
    int max_labels = 0;
    double max_seconds = 0;
    std::string first_failure;
};

LabelStats label_corpus(const std::vector<Item>& corpus, Algo algo, int bound, ContractLog& contracts,
                        std::vector<LabelRun>* keep) {
    LabelStats st;
    for (const auto& it : corpus) {
        LabelRun run;
        bool ok = true;
        double t = 0;
        try {
            t = timed([&] { run = run_labeling(it.ps, algo); });
            auto rep = check_forest_labeling(it.ps, run.labeling.label);
            ok = rep.ok && run.labeling.max_label() <= bound && run.labeling.max_label() >= 1 &&
                 (it.ps.size() > 10000 || t < kLabelSecondsPerInstance);
            st.max_labels = std::max(st.max_labels, run.labeling.num_labels());
            if (it.ps.size() <= 10000) st.max_seconds = std::max(st.max_seconds, t);
            contracts.checks += run.log.checks;
            for (const auto& f : run.log.failures) contracts.failures.push_back(it.name + ": " + f);
        } catch (const std::exception& e) {
            ok = false;
            if (st.first_failure.empty()) st.first_failure = it.name + ": " + e.what();
        }
        if (ok) ++st.pass;
        else if (st.first_failure.empty()) st.first_failure = it.name;
        if (keep) keep->push_back(std::move(run));
    }
    return st;
}

} // namespace

int main() {
    auto corpus = build_corpus();
    const int n = static_cast<int>(corpus.size());
    int invalid = 0;
    for (const auto& it : corpus)
        if (!validate_ncs(it.ps).ok) ++invalid;
    std::printf("corpus: %d instances, %d failing validation\n", n, invalid);

    ContractLog contracts;
    std::vector<LabelRun> runs;

    // 1
    {
        auto st = label_corpus(corpus, Algo::Four, 4, contracts, &runs);
        report(1, st.pass == n && invalid == 0 && n >= 500, "four-label guarantee",
               std::to_string(st.pass) + "/" + std::to_string(n) + " verified, max labels " +
                   std::to_string(st.max_labels) + ", max time " + fmt("%.3f", st.max_seconds) + " s (limit " +
                   fmt("%.1f", kLabelSecondsPerInstance) + " s)" +
                   (st.first_failure.empty() ? "" : ", first failure " + st.first_failure));
    }

    // 2
    {
        auto st = label_corpus(corpus, Algo::Fifteen, 15, contracts, nullptr);
        report(2, st.pass == n, "fifteen-label guarantee",
               std::to_string(st.pass) + "/" + std::to_string(n) + " verified, max labels " +
                   std::to_string(st.max_labels) +
                   (st.first_failure.empty() ? "" : ", first failure " + st.first_failure));
    }

    // 3
    {
        PathSystem ps;
        LabelRun run;
        double t = timed([&] {
            ps = gen_counterexample4();
            run = run_labeling(ps, Algo::Four);
        });
        bool forest = check_forest_labeling(ps, run.labeling.label).ok;
        int used = run.labeling.num_labels();
        bool ok = ps.size() == 8383 && validate_ncs(ps).ok && forest && used == 4 && t < kCounterexampleSeconds;
        report(3, ok, "tightness instance",
               std::to_string(ps.size()) + " paths, forest " + (forest ? "yes" : "no") + ", " +
                   std::to_string(used) + " labels used, " + fmt("%.2f", t) + " s (limit " +
                   fmt("%.0f", kCounterexampleSeconds) + " s)");
        auto info = exact_pcfn(ps, {3, kInfoRefuteBudget, 1});
        std::printf("  info: bounded 3-label search on %d paths: %s after %lld nodes\n", ps.size(),
                    info.value > 0 ? "found a 3-labeling"
                    : info.budget_exhausted ? "budget exhausted, no conclusion"
                                            : "refuted",
                    info.nodes_explored);
    }

    // 4
    {
        PcfnResult r;
        double t = timed([&] { r = exact_pcfn(gen_crossing_fan(3), {6, 50'000'000, 1}); });
        report(4, r.value == 3 && r.exact && t < kFanSeconds, "six crossing paths",
               "pcfn " + std::to_string(r.value) + (r.exact ? " (complete)" : " (incomplete)") + ", " +
                   std::to_string(r.nodes_explored) + " nodes, " + fmt("%.3f", t) + " s");
    }

    // 5
    {
        Witness3Search s;
        double ts = timed([&] { s = search_witness3(); });
        bool search_ok = !s.witness.empty() && ts < kSearchSeconds;

        bool replay_ok = false;
        std::string detail;
        double tr = timed([&] {
            try {
                Json j = read_json_file(witness3_fixture_path());
                PathSystem ps = instance_from_json(j.at("instance"));
                const Json& cert = j.at("certificate");
                auto wit = cert.at("witness").get<std::vector<int>>();
                bool valid = validate_ncs(ps).ok;
                bool forest = static_cast<int>(wit.size()) == ps.size() && check_forest_labeling(ps, wit).ok &&
                              *std::max_element(wit.begin(), wit.end()) == 3;
                auto refute = exact_pcfn(ps, {2, 50'000'000, 1});
                bool refuted = refute.value == -1 && !refute.budget_exhausted && refute.lower_bound == 3;
                bool same = ps.paths == s.instance.paths;
                replay_ok = valid && forest && refuted && same && cert.at("pcfn").get<int>() == 3;
                detail = std::to_string(ps.size()) + " paths, 3-labeling " + (forest ? "ok" : "bad") +
                         ", 2 labels refuted " + (refuted ? "completely" : "NOT completely") + " in " +
                         std::to_string(refute.nodes_explored) + " nodes, fixture matches search " +
                         (same ? "yes" : "no");
            } catch (const std::exception& e) {
                detail = e.what();
            }
        });
        replay_ok = replay_ok && tr < kReplaySeconds;
        report(5, search_ok && replay_ok, "three-label non-crossing witness",
               detail + ", search " + fmt("%.2f", ts) + " s over " + std::to_string(s.candidates) +
                   " candidates, replay " + fmt("%.3f", tr) + " s");
    }

    // 6
    {
        int instances = 0, bad = 0;
        long long enumerated = 0, solved = 0, counter = 0;
        for (size_t i = 0; i < corpus.size(); ++i) {
            if (corpus[i].ps.size() > kConverseMaxPaths) continue;
            ++instances;
            const auto& run = runs[i];
            auto rep = faces_converse_check(run.bin.ps, run.fa, kConverseLabels);
            enumerated += rep.enumerated;
            solved += rep.all_solved;
            counter += rep.counterexamples;
            if (rep.counterexamples) ++bad;
        }
        report(6, instances > 0 && counter == 0, "solved faces imply forests",
               std::to_string(instances) + " instances, " + std::to_string(enumerated) + " labelings, " +
                   std::to_string(solved) + " with all faces solved, " + std::to_string(counter) +
                   " counterexamples");
    }

    // 7
    {
        for (size_t i = 0; i < corpus.size(); ++i) {
            const auto& run = runs[i];
            auto log = check_structure(run.bin.ps, run.bin.tree, run.dec, run.fa);
            contracts.checks += log.checks;
            for (const auto& f : log.failures) contracts.failures.push_back(corpus[i].name + ": " + f);
        }
        report(7, contracts.ok() && contracts.checks > 0, "structural and labeling contracts",
               std::to_string(contracts.checks) + " checks, " + std::to_string(contracts.failures.size()) +
                   " violations" + (contracts.ok() ? "" : ", first " + contracts.failures[0]));
    }

    // 8
    {
        std::vector<PathSystem> small;
        for (std::uint64_t s = 1; static_cast<int>(small.size()) < kOracleInstances - 12 && s < 5000; ++s) {
            auto ps = gen_random_ncs(3 + static_cast<int>(s % 10), 2 + static_cast<int>(s % 3), 7000 + s);
            if (ps.size() <= kOracleMaxPaths) small.push_back(std::move(ps));
        }
        for (int k = 1; k <= 3; ++k) small.push_back(gen_pk(k));
        for (int r = 2; r <= 5; ++r) small.push_back(gen_crossing_fan(r));
        small.push_back(gen_top_row({{0, 12}, {1, 5}, {5, 11}, {6, 8}}));
        small.push_back(gen_top_row({{0, 16}, {0, 8}, {8, 16}, {2, 6}, {10, 14}}));
        small.push_back(gen_top_row({{0, 20}, {1, 4}, {5, 8}, {9, 12}, {13, 16}}));
        small.push_back(gen_top_row({{0, 3}}));
        small.push_back(gen_witness3());
        int agree = 0;
        std::string first;
        for (size_t i = 0; i < small.size(); ++i) {
            const auto& ps = small[i];
            auto fast = exact_pcfn(ps, {ps.size(), 50'000'000, 1});
            auto slow = naive_pcfn(ps, ps.size());
            if (fast.exact && fast.value == slow.value) ++agree;
            else if (first.empty())
                first = "#" + std::to_string(i) + " pruned " + std::to_string(fast.value) + " naive " +
                        std::to_string(slow.value);
        }
        int total = static_cast<int>(small.size());
        report(8, total >= kOracleInstances && agree == total, "pruned search equals enumeration",
               std::to_string(agree) + "/" + std::to_string(total) + " agree" + (first.empty() ? "" : ", " + first));
    }

    // 9
    {
        long long paths = 0, exact = 0, within = 0;
        double worst = 0;
        for (size_t i = 0; i < corpus.size(); ++i) {
            const auto& ps = corpus[i].ps;
            const auto& lab = runs[i].labeling.label;
            if (static_cast<int>(lab.size()) != ps.size()) continue;
            PathLister lister(ps, lab);
            for (int p = 0; p < ps.size(); ++p) {
                const Path& P = ps.paths[p];
                ++paths;
                Listing got;
                try {
                    got = lister.list(P.front(), P.back(), lab[p]);
                } catch (const Error&) {
                    continue;
                }
                if (got.path == P) ++exact;
                long long len = std::max<long long>(1, static_cast<long long>(P.size()) - 1);
                if (got.ops <= kListingFactor * len) ++within;
                worst = std::max(worst, static_cast<double>(got.ops) / static_cast<double>(len));
            }
        }
        long long total = 0;
        for (const auto& it : corpus) total += it.ps.size();
        report(9, paths == total && exact == total && within == total, "path listing from forests",
               std::to_string(exact) + "/" + std::to_string(total) + " paths reproduced, " +
                   std::to_string(within) + " within " + std::to_string(kListingFactor) +
                   " ops per edge, worst ratio " + fmt("%.2f", worst));
    }

    std::printf("%d of 9 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
