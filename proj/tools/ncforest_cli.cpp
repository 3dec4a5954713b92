#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "ncforest/generators.hpp"
#include "ncforest/json_io.hpp"
#include "ncforest/render.hpp"
#include "ncforest/verification.hpp"

using namespace ncf;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Json load(const std::string& in) {
    if (in == "-") return read_json(std::cin);
    return read_json_file(in);
}

// an instance, or a labeling document carrying one
PathSystem load_instance(const Json& j) {
    if (j.contains("instance")) return instance_from_json(j["instance"]);
    return instance_from_json(j);
}

void emit(const std::string& out, const std::string& text) {
    if (out.empty() || out == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(out);
    if (!f) throw Error(ErrorCode::ParseError, "cannot write " + out);
    f << text;
}

void emit(const std::string& out, const Json& j) { emit(out, j.dump(1) + "\n"); }

Json report_json(const ValidationReport& rep) {
    Json j;
    j["ok"] = rep.ok;
    j["violations"] = Json::array();
    for (const auto& v : rep.violations)
        j["violations"].push_back({{"rule", v.rule}, {"paths", v.paths}, {"witness", v.witness}, {"detail", v.detail}});
    return j;
}

Json edge_json(const PlaneGraph& g, int e) {
    Dart d = g.dart(g.edge_dart(e));
    return {d.tail, d.head};
}

Json forest_json(const ForestCheckReport& rep) {
    Json j;
    j["ok"] = rep.ok;
    j["per_label"] = Json::array();
    for (const auto& st : rep.per_label) {
        Json s{{"label", st.label}, {"edges", st.edges}, {"vertices", st.vertices}};
        if (!st.cycle.empty()) s["cycle"] = st.cycle;
        j["per_label"].push_back(s);
    }
    return j;
}

std::vector<int> labels_of(const Json& j) {
    if (!j.contains("labels")) throw Error(ErrorCode::ParseError, "labeling needs a \"labels\" array");
    return j["labels"].get<std::vector<int>>();
}

int cmd_validate(const std::string& in, const std::string& out) {
    PathSystem ps = load_instance(load(in));
    auto rep = validate_ncs(ps);
    emit(out, report_json(rep));
    return rep.ok ? 0 : 1;
}

int cmd_tree(const std::string& in, const std::string& out, const std::string& format, bool bin) {
    PathSystem ps = load_instance(load(in));
    auto rep = validate_ncs(ps);
    if (!rep.ok) {
        emit(out, report_json(rep));
        return 1;
    }
    GenealogyTree t = build_genealogy(ps);
    if (bin) {
        auto b = binarize(ps, t);
        ps = std::move(b.ps);
        t = std::move(b.tree);
    }
    if (format == "text") {
        std::ostringstream s;
        for (int p : t.preorder()) {
            s << std::string(2 * t.depth[p], ' ') << "p" << p << " x=" << t.x[p] << " y=" << t.y[p];
            if (ps.is_aux(p)) s << " aux";
            s << "\n";
        }
        emit(out, s.str());
        return 0;
    }
    std::vector<int> aux(ps.size());
    for (int p = 0; p < ps.size(); ++p) aux[p] = ps.is_aux(p);
    Json j{{"root", t.root}, {"parent", t.parent}, {"children", t.children}, {"auxiliary", aux},
           {"x", t.x},       {"y", t.y},           {"depth", t.depth}};
    if (bin) j["instance"] = instance_to_json(ps);
    emit(out, j);
    return 0;
}

int cmd_decompose(const std::string& in, const std::string& out) {
    PathSystem orig = load_instance(load(in));
    auto rep = validate_ncs(orig);
    if (!rep.ok) {
        emit(out, report_json(rep));
        return 1;
    }
    auto b = binarize(orig, build_genealogy(orig));
    const PathSystem& ps = b.ps;
    auto dec = compute_levels(ps, b.tree);
    auto fa = analyze_faces(ps, b.tree, dec);
    Json j;
    j["paths"] = ps.size();
    j["auxiliary_added"] = b.added;
    j["levels"] = dec.max_levels;
    j["owners"] = Json::array();
    for (const auto& level : dec.max_levels)
        for (int p : level) {
            auto F = interference_forest(ps, b.tree, dec, fa, p);
            Json fj{{"nodes", F.nodes}, {"arcs", F.arcs}, {"max_ii", F.max_ii}, {"max_none", F.max_none}};
            std::vector<int> cls;
            for (char c : F.in_a) cls.push_back(c ? 0 : 1);
            fj["class_b"] = cls;
            j["owners"].push_back({{"p", p},
                                   {"level", dec.level[p]},
                                   {"touch", dec.touch[p]},
                                   {"max", dec.max[p]},
                                   {"se", fa.se[p] >= 0 ? edge_json(ps.graph, fa.se[p]) : Json()},
                                   {"interference", fj}});
        }
    j["faces"] = Json::array();
    for (const FaceInfo& fi : fa.faces) {
        Json f{{"face", fi.face},
               {"owner", fi.owner},
               {"upper", fi.upper},
               {"type", static_cast<int>(fi.type)},
               {"e_r", edge_json(ps.graph, fi.e_r)},
               {"e_l", edge_json(ps.graph, fi.e_l)}};
        if (fi.type == FaceType::II) {
            f["m_r"] = fi.m_r;
            f["m_l"] = fi.m_l;
        } else if (fi.type == FaceType::III) {
            f["m"] = fi.m;
            f["m_is_right"] = fi.m_is_right;
        }
        j["faces"].push_back(f);
    }
    emit(out, j);
    return 0;
}

int cmd_label(const std::string& in, const std::string& out, const std::string& algo) {
    PathSystem ps = load_instance(load(in));
    auto rep = validate_ncs(ps);
    if (!rep.ok) {
        emit(out, report_json(rep));
        return 1;
    }
    Algo a = algo == "four" ? Algo::Four : Algo::Fifteen;
    LabelRun run = run_labeling(ps, a);
    auto forest = check_forest_labeling(ps, run.labeling.label);
    auto unsolved = check_faces_solved(run.bin.ps, run.fa, run.full.label);
    int budget = a == Algo::Four ? 4 : 15;
    bool verified = forest.ok && unsolved.empty() && run.log.ok() && run.labeling.max_label() <= budget;
    Json j{{"labels", run.labeling.label},
           {"num_labels", run.labeling.num_labels()},
           {"algo", algo},
           {"verified", verified},
           {"instance", instance_to_json(ps)}};
    if (!run.log.ok()) j["contract_failures"] = run.log.failures;
    emit(out, j);
    return verified ? 0 : 1;
}

int cmd_verify(const std::string& in, const std::string& instance, const std::string& out, int max_labels) {
    Json lab = load(in);
    PathSystem ps = instance.empty() ? load_instance(lab) : load_instance(load(instance));
    auto labels = labels_of(lab);
    if (static_cast<int>(labels.size()) != ps.size())
        throw Error(ErrorCode::UnlabeledPath, "labeling has " + std::to_string(labels.size()) + " entries for " +
                                                  std::to_string(ps.size()) + " paths");
    auto rep = check_forest_labeling(ps, labels);
    std::map<int, int> used;
    for (int c : labels) ++used[c];
    bool ok = rep.ok && (max_labels <= 0 || static_cast<int>(used.size()) <= max_labels);
    Json j = forest_json(rep);
    j["ok"] = ok;
    j["num_labels"] = used.size();
    emit(out, j);
    return ok ? 0 : 1;
}

int cmd_pcfn(const std::string& in, const std::string& out, int kmax, long long budget, int jobs, bool naive) {
    PathSystem ps = load_instance(load(in));
    auto rep = validate_ncs(ps, true);
    if (!rep.ok) {
        emit(out, report_json(rep));
        return 1;
    }
    PcfnResult r;
    if (naive) {
        r = naive_pcfn(ps, kmax);
    } else {
        PcfnOptions opt;
        opt.k_max = kmax;
        opt.node_budget = budget;
        opt.jobs = jobs;
        r = exact_pcfn(ps, opt);
    }
    Json j{{"value", r.value},
           {"lower_bound", r.lower_bound},
           {"exact", r.exact},
           {"nodes_explored", r.nodes_explored},
           {"budget_exhausted", r.budget_exhausted}};
    if (!r.witness.empty()) j["witness"] = r.witness;
    emit(out, j);
    return r.exact ? 0 : 1;
}

int cmd_gen(const std::string& family, const GenSpec& spec, const std::string& out, bool search,
            const std::string& fixture) {
    if (family == "witness3" && (search || !fixture.empty())) {
        auto w = search_witness3();
        if (!fixture.empty()) {
            Json cert{{"pcfn", 3},
                      {"refuted_k", 2},
                      {"complete", true},
                      {"oracle_nodes", w.refute_nodes},
                      {"candidates_tried", w.candidates},
                      {"source", w.source},
                      {"intervals", w.intervals},
                      {"witness", w.witness}};
            write_json_file(fixture, Json{{"instance", instance_to_json(w.instance)}, {"certificate", cert}});
        }
        emit(out, instance_to_json(w.instance));
        return 0;
    }
    emit(out, instance_to_json(generate(spec)));
    return 0;
}

int cmd_list_path(const std::string& in, const std::string& instance, const std::string& out, int path) {
    Json lab = load(in);
    PathSystem ps = instance.empty() ? load_instance(lab) : load_instance(load(instance));
    auto labels = labels_of(lab);
    if (path < 0 || path >= ps.size() || path >= static_cast<int>(labels.size()))
        throw Usage("--path out of range");
    PathLister L(ps, labels);
    Listing li = L.list(ps.paths[path].front(), ps.paths[path].back(), labels[path]);
    bool match = li.path == ps.paths[path];
    emit(out, Json{{"path", li.path}, {"ops", li.ops}, {"matches", match}});
    return match ? 0 : 1;
}

int cmd_render(const std::string& in, const std::string& labels_file, const std::string& out) {
    Json j = load(in);
    PathSystem ps = load_instance(j);
    std::vector<int> labels;
    if (!labels_file.empty())
        labels = labels_of(load(labels_file));
    else if (j.contains("labels"))
        labels = labels_of(j);
    emit(out, render_svg(ps, labels));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Forest decompositions of non-crossing path systems"};
    app.require_subcommand(1);
    std::string in = "-", out, instance, algo = "four", format = "json", family = "pk", fixture, labels_file;
    bool bin = false, search = false, naive = false;
    int kmax = 4, jobs = 1, path = -1, max_labels = 0;
    long long budget = 50'000'000;
    GenSpec spec;

    auto input = [&](CLI::App* c) {
        c->add_option("input", in, "instance or labeling JSON, - for stdin");
        c->add_option("-o,--output", out, "output file");
    };
    auto* validate = app.add_subcommand("validate", "check the non-crossing path system rules");
    input(validate);
    auto* tree = app.add_subcommand("tree", "genealogy tree");
    input(tree);
    tree->add_option("--format", format)->check(CLI::IsMember({"json", "text"}));
    tree->add_flag("--binarize", bin, "insert auxiliary paths first");
    auto* decompose = app.add_subcommand("decompose", "levels, Touch/Max sets and face types");
    input(decompose);
    auto* label = app.add_subcommand("label", "compute and verify a forest labeling");
    input(label);
    label->add_option("--algo", algo)->check(CLI::IsMember({"four", "fifteen"}));
    auto* verify = app.add_subcommand("verify", "check a labeling for forests");
    input(verify);
    verify->add_option("--instance", instance, "instance JSON when the labeling does not embed one");
    verify->add_option("--max-labels", max_labels, "fail when more labels are used");
    auto* pcfn = app.add_subcommand("pcfn", "exact forest-cover number");
    input(pcfn);
    pcfn->add_option("--kmax", kmax)->check(CLI::Range(1, 64));
    pcfn->add_option("--budget", budget)->check(CLI::PositiveNumber);
    pcfn->add_option("--jobs", jobs)->check(CLI::Range(1, 256));
    pcfn->add_flag("--naive", naive, "plain enumeration");
    auto* gen = app.add_subcommand("gen", "generate an instance");
    gen->add_option("--family", family)
        ->check(CLI::IsMember({"pk", "counterexample4", "crossing-fan", "random", "witness3"}));
    gen->add_option("--k", spec.k);
    gen->add_option("--j", spec.j);
    gen->add_option("--r", spec.r);
    gen->add_option("--n", spec.n_pairs);
    gen->add_option("--depth", spec.depth);
    gen->add_option("--seed", spec.seed);
    gen->add_flag("--search", search, "witness3: run the search instead of reading the fixture");
    gen->add_option("--fixture", fixture, "witness3: write instance and certificate here");
    gen->add_option("-o,--output", out, "output file");
    auto* list = app.add_subcommand("list-path", "list a path from its forest");
    input(list);
    list->add_option("--instance", instance);
    list->add_option("--path", path)->required();
    auto* render = app.add_subcommand("render", "SVG drawing");
    input(render);
    render->add_option("--labels", labels_file, "labeling JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (gen->parsed()) {
        if (family == "pk") spec.family = Family::PK;
        if (family == "counterexample4") {
            spec.family = Family::COUNTEREXAMPLE4;
            if (gen->count("--k") == 0) spec.k = 13;
        }
        if (family == "crossing-fan") spec.family = Family::CROSSING_FAN;
        if (family == "random") spec.family = Family::RANDOM;
        if (family == "witness3") spec.family = Family::WITNESS3;
    }
    try {
        if (validate->parsed()) return cmd_validate(in, out);
        if (tree->parsed()) return cmd_tree(in, out, format, bin);
        if (decompose->parsed()) return cmd_decompose(in, out);
        if (label->parsed()) return cmd_label(in, out, algo);
        if (verify->parsed()) return cmd_verify(in, instance, out, max_labels);
        if (pcfn->parsed()) return cmd_pcfn(in, out, kmax, budget, jobs, naive);
        if (gen->parsed()) return cmd_gen(family, spec, out, search, fixture);
        if (list->parsed()) return cmd_list_path(in, instance, out, path);
        if (render->parsed()) return cmd_render(in, labels_file, out);
    } catch (const Usage& e) {
        std::cerr << Json{{"error", "usage"}, {"message", e.what()}}.dump() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << Json{{"error", error_name(e.code())}, {"message", e.what()}}.dump() << "\n";
        return e.code() == ErrorCode::ParseError ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << Json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return 1;
    }
    return 2;
}
