#include "ncforest/labeling.hpp"

#include <algorithm>
#include <set>

namespace ncf {

namespace {

bool in_triple(const Triple& t, int c) { return t[0] == c || t[1] == c || t[2] == c; }

Triple sorted(Triple t) {
    std::sort(t.begin(), t.end());
    return t;
}

// the single element of t minus {a, b}
int remaining(const Triple& t, int a, int b) {
    for (int c : t)
        if (c != a && c != b) return c;
    return t[0];
}

bool subset(const std::vector<int>& xs, std::initializer_list<int> allowed) {
    for (int x : xs)
        if (std::find(allowed.begin(), allowed.end(), x) == allowed.end()) return false;
    return true;
}

} // namespace

int Labeling::num_labels() const {
    std::set<int> s;
    for (int c : label)
        if (c > 0) s.insert(c);
    return static_cast<int>(s.size());
}

int Labeling::max_label() const {
    int m = 0;
    for (int c : label) m = std::max(m, c);
    return m;
}

void ContractLog::check(bool ok, const char* what, int a, int b) {
    ++checks;
    if (ok) return;
    std::string s = what;
    if (a >= 0) s += " p=" + std::to_string(a);
    if (b >= 0) s += " q=" + std::to_string(b);
    failures.push_back(std::move(s));
}

Labeler::Labeler(const PathSystem& ps, const GenealogyTree& tree, const Decomposition& dec,
                 const FaceAnalysis& fa, int palette)
    : ps_(ps), tree_(tree), dec_(dec), fa_(fa) {
    int n = ps.size();
    lab_.label.assign(n, 0);
    lab_.triple.assign(n, Triple{0, 0, 0});
    lab_.sc.assign(n, 0);
    lab_.palette = palette;
    faces_of_owner_.assign(n, {});
    for (int i = 0; i < static_cast<int>(fa.faces.size()); ++i) faces_of_owner_[fa.faces[i].owner].push_back(i);
}

void Labeler::assign(int q, int c) {
    if (lab_.label[q] != 0)
        throw Error(ErrorCode::AlreadyLabeled, "path " + std::to_string(q) + " already labeled");
    lab_.label[q] = c;
}

void Labeler::set_triple(int p, Triple t) {
    if (lab_.triple[p][0] != 0)
        throw Error(ErrorCode::AlreadyLabeled, "triple of path " + std::to_string(p) + " already set");
    lab_.triple[p] = sorted(t);
}

void Labeler::set_sc(int p, int c) {
    if (lab_.sc[p] != 0)
        throw Error(ErrorCode::AlreadyLabeled, "sc of path " + std::to_string(p) + " already set");
    lab_.sc[p] = c;
}

std::vector<int> Labeler::labels_of(const std::vector<int>& qs) const {
    std::vector<int> out;
    for (int q : qs) out.push_back(lab_.label[q]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<int> Labeler::edge_labels(int e) const {
    std::vector<int> out;
    for (int X : fa_.paths_on_edge[e])
        if (lab_.label[X] > 0) out.push_back(lab_.label[X]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool Labeler::has_se(int p, int q) const { return fa_.se[p] >= 0 && fa_.contains(q, fa_.se[p]); }

void Labeler::rc(int p, int q, Triple perm, bool right_first) {
    if (dec_.owner[q] != p)
        throw Error(ErrorCode::NotInTouch, "path " + std::to_string(q) + " is not in Touch of " + std::to_string(p));
    auto [c1, c2, c3] = perm;
    assign(q, c1);
    const auto& tc = dec_.tchildren[q];
    if (tc.size() == 1) {
        rc(p, tc[0], perm, right_first);
    } else if (tc.size() == 2) {
        int first = right_first ? tc[0] : tc[1], second = right_first ? tc[1] : tc[0];
        rc(p, first, {c1, c3, c2}, right_first);
        rc(p, second, {c2, c1, c3}, right_first);
    }
    auto same = labels_of(right_first ? dec_.right_descendants(q) : dec_.left_descendants(q));
    auto two = labels_of(right_first ? dec_.left_descendants(q) : dec_.right_descendants(q));
    log_.check(same.size() == 1 && same[0] == c1, right_first ? "RC: L(R(q)) = {c1}" : "LC: L(L(q)) = {c1}", p, q);
    log_.check(subset(two, {c1, c2}), right_first ? "RC: L(L(q)) in {c1,c2}" : "LC: L(R(q)) in {c1,c2}", p, q);
}

void Labeler::right_color(int p, int q, Triple perm) { rc(p, q, perm, true); }
void Labeler::left_color(int p, int q, Triple perm) { rc(p, q, perm, false); }

void Labeler::set_color(int p, int q, int c_r, int c_l) {
    if (dec_.owner[q] != p)
        throw Error(ErrorCode::NotInTouch, "path " + std::to_string(q) + " is not in Touch of " + std::to_string(p));
    const Triple& T = lab_.triple[p];
    int sc = lab_.sc[p];
    if (sc == 0 || T[0] == 0) throw Error(ErrorCode::MissingPrerequisite, "set_color needs triple and sc");
    assign(q, sc);
    const auto& tc = dec_.tchildren[q];
    if (tc.size() == 1) {
        set_color(p, tc[0], c_r, c_l);
    } else if (tc.size() == 2) {
        int qr = tc[0], ql = tc[1];
        if (has_se(p, qr)) {
            int other = remaining(T, c_l, sc);
            set_color(p, qr, c_r, other);
            rc(p, ql, {c_l, sc, other}, true);
        } else {
            int other = remaining(T, c_r, sc);
            set_color(p, ql, other, c_l);
            rc(p, qr, {c_r, sc, other}, false);
        }
    }
    log_.check(subset(labels_of(dec_.right_descendants(q)), {c_r, sc}), "SC: L(R(q)) in {c_r,sc}", p, q);
    log_.check(subset(labels_of(dec_.left_descendants(q)), {c_l, sc}), "SC: L(L(q)) in {c_l,sc}", p, q);
}

void Labeler::check_type_one(int p) {
    for (int idx : faces_of_owner_[p]) {
        const FaceInfo& fi = fa_.faces[idx];
        if (fi.type != FaceType::I) continue;
        auto a = edge_labels(fi.e_r), b = edge_labels(fi.e_l);
        std::vector<int> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(both));
        log_.check(both.empty(), "type I face solved after coloring", p, fi.face);
    }
    for (int q : dec_.touch[p]) log_.check(in_triple(lab_.triple[p], lab_.label[q]), "Touch label in triple", p, q);
}

void Labeler::color_touch(int p) {
    if (lab_.triple[p][0] == 0) throw Error(ErrorCode::MissingPrerequisite, "triple unset for color_touch");
    right_color(p, p, lab_.triple[p]);
    check_type_one(p);
}

void Labeler::color_special_touch(int p) {
    const Triple& T = lab_.triple[p];
    int sc = lab_.sc[p];
    if (T[0] == 0 || sc == 0) throw Error(ErrorCode::MissingPrerequisite, "triple or sc unset for CST");
    if (fa_.se[p] >= 0 && !fa_.contains(p, fa_.se[p]))
        throw Error(ErrorCode::SpecialEdgeAbsent, "path " + std::to_string(p) + " misses its special edge");
    int c = remaining(T, sc, sc);
    set_color(p, p, c, c);
    check_type_one(p);
    if (fa_.se[p] >= 0)
        for (int X : fa_.paths_on_edge[fa_.se[p]])
            if (dec_.owner[X] == p) log_.check(lab_.label[X] == sc, "CST: se paths carry sc", p, X);
    for (int q : dec_.touch[p]) {
        log_.check(labels_of(dec_.right_descendants(q)).size() <= 2, "CST: |L(R(q))| <= 2", p, q);
        log_.check(labels_of(dec_.left_descendants(q)).size() <= 2, "CST: |L(L(q))| <= 2", p, q);
    }
}

void Labeler::triple_max(int p) {
    static const Triple all[5] = {{1, 2, 3}, {4, 5, 6}, {7, 8, 9}, {10, 11, 12}, {13, 14, 15}};
    const Triple& T = lab_.triple[p];
    if (T[0] == 0) throw Error(ErrorCode::MissingPrerequisite, "triple unset for TM");
    std::vector<Triple> rest;
    for (const Triple& t : all)
        if (t != T) rest.push_back(t);
    const Triple &X = rest[0], &Y = rest[1], &W = rest[2], &Z = rest[3];
    InterferenceForest F = interference_forest(ps_, tree_, dec_, fa_, p);
    for (int m : F.max_ii) set_triple(m, tree_.children[tree_.parent[m]][0] == m ? X : Y);
    for (size_t i = 0; i < F.nodes.size(); ++i) set_triple(F.nodes[i], F.in_a[i] ? W : Z);
    for (int m : F.max_none) set_triple(m, X);

    for (int idx : faces_of_owner_[p]) {
        const FaceInfo& fi = fa_.faces[idx];
        if (fi.type == FaceType::I) continue;
        std::vector<int> M;
        for (int e : {fi.e_r, fi.e_l})
            for (int m : fa_.paths_on_edge[e])
                if (dec_.max_owner[m] == p) M.push_back(m);
        std::sort(M.begin(), M.end());
        M.erase(std::unique(M.begin(), M.end()), M.end());
        for (size_t a = 0; a < M.size(); ++a) {
            const Triple& ta = lab_.triple[M[a]];
            log_.check(!in_triple(T, ta[0]) && !in_triple(T, ta[1]) && !in_triple(T, ta[2]),
                       "TM: triple(m) disjoint from triple(p)", p, M[a]);
            for (size_t b = a + 1; b < M.size(); ++b) {
                const Triple& tb = lab_.triple[M[b]];
                log_.check(!in_triple(tb, ta[0]) && !in_triple(tb, ta[1]) && !in_triple(tb, ta[2]),
                           "TM: co-interferers have disjoint triples", M[a], M[b]);
            }
        }
    }
}

void Labeler::triple_special_max(int p) {
    const Triple T = lab_.triple[p];
    if (T[0] == 0) throw Error(ErrorCode::MissingPrerequisite, "triple unset for TSM");
    for (int q : dec_.touch[p])
        if (lab_.label[q] == 0) throw Error(ErrorCode::MissingPrerequisite, "TSM before CST");
    InterferenceForest F = interference_forest(ps_, tree_, dec_, fa_, p);
    int label_r = T[0], label_l = T[1];
    for (int m : F.max_ii) {
        bool right = tree_.children[tree_.parent[m]][0] == m;
        set_sc(m, right ? label_r : label_l);
        set_triple(m, T);
    }
    int label_a = 0;
    for (int c = 1; c <= 4; ++c)
        if (!in_triple(T, c)) label_a = c;
    for (const auto& tr : F.trees()) {
        std::vector<int> delta;
        for (int i : tr) {
            const FaceInfo& fi = fa_.faces[fa_.f_m[F.nodes[i]]];
            for (int e : {fi.e_r, fi.e_l})
                for (int X : fa_.paths_on_edge[e])
                    if (dec_.owner[X] == p) delta.push_back(lab_.label[X]);
        }
        std::sort(delta.begin(), delta.end());
        delta.erase(std::unique(delta.begin(), delta.end()), delta.end());
        deltas_.push_back(delta);
        log_.check(delta.size() <= 2, "TSM: |Delta| <= 2", p, F.nodes[tr[0]]);
        for (int c : T)
            if (delta.size() < 2 && std::find(delta.begin(), delta.end(), c) == delta.end()) delta.push_back(c);
        std::sort(delta.begin(), delta.end());
        int label_b = T[0];
        for (int c : T)
            if (std::find(delta.begin(), delta.end(), c) == delta.end()) label_b = c;
        for (int i : tr) {
            int m = F.nodes[i];
            if (F.in_a[i]) {
                set_sc(m, label_a);
                set_triple(m, {delta[0], delta[1], label_a});
            } else {
                set_sc(m, label_b);
                set_triple(m, T);
            }
        }
    }
    for (int m : F.max_none) {
        set_sc(m, T[0]);
        set_triple(m, T);
    }

    for (int idx : faces_of_owner_[p]) {
        const FaceInfo& fi = fa_.faces[idx];
        if (fi.type == FaceType::II)
            log_.check(lab_.sc[fi.m_r] != lab_.sc[fi.m_l], "TSM: sc(m_r) != sc(m_l)", fi.m_r, fi.m_l);
    }
    for (int m : F.nodes) {
        const FaceInfo& g = fa_.faces[fa_.f_m[m]];
        for (int e : {g.e_r, g.e_l})
            for (int X : fa_.paths_on_edge[e]) {
                if (dec_.owner[X] == p) log_.check(lab_.sc[m] != lab_.label[X], "TSM: sc(m) != L(q)", m, X);
                if (X != m && dec_.max_owner[X] == p)
                    log_.check(!in_triple(lab_.triple[X], lab_.sc[m]), "TSM: sc(m) not in triple(m')", m, X);
            }
    }
}

LabelRun run_labeling(const PathSystem& ps, Algo algo) {
    LabelRun run;
    run.bin = binarize(ps, build_genealogy(ps));
    const PathSystem& W = run.bin.ps;
    const GenealogyTree& tree = run.bin.tree;
    run.dec = compute_levels(W, tree);
    run.fa = analyze_faces(W, tree, run.dec);
    Labeler L(W, tree, run.dec, run.fa, algo == Algo::Four ? 4 : 15);
    if (W.size() > 0) {
        L.set_triple(tree.root, {1, 2, 3});
        if (algo == Algo::Four) L.set_sc(tree.root, 1);
    }
    for (const auto& level : run.dec.max_levels)
        for (int p : level) {
            if (algo == Algo::Four) {
                L.color_special_touch(p);
                L.triple_special_max(p);
            } else {
                L.color_touch(p);
                L.triple_max(p);
            }
        }
    for (int q = 0; q < W.size(); ++q)
        if (L.labeling().label[q] == 0) throw Error(ErrorCode::UnlabeledPath, "path " + std::to_string(q));
    run.full = L.labeling();
    run.log = L.log();
    run.labeling = run.full;
    int orig = ps.size();
    run.labeling.label.resize(orig);
    run.labeling.triple.resize(orig);
    run.labeling.sc.resize(orig);
    return run;
}

Labeling four_forests(const PathSystem& ps) { return run_labeling(ps, Algo::Four).labeling; }
Labeling forest_fifteen(const PathSystem& ps) { return run_labeling(ps, Algo::Fifteen).labeling; }

} // namespace ncf
