#include "ncforest/generators.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <random>

namespace ncf {

namespace {

struct Geo {
    std::vector<Point> pts;
    std::map<std::pair<long long, long long>, int> index;

    int at(double x, double y) {
        std::pair<long long, long long> key{std::llround(x * 1000), std::llround(y * 1000)};
        auto it = index.find(key);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(pts.size());
        pts.push_back({x, y});
        index.emplace(key, id);
        return id;
    }

    Path top_row(int a, int b) {
        Path p{at(a, 0)};
        for (int c = a + 1; c < b; ++c) p.push_back(at(c, 1));
        p.push_back(at(b, 0));
        return p;
    }
};

void subdivide(std::vector<Path>& paths, Vertex u, Vertex v, Vertex w) {
    for (Path& p : paths)
        for (size_t i = 0; i + 1 < p.size(); ++i)
            if ((p[i] == u && p[i + 1] == v) || (p[i] == v && p[i + 1] == u)) {
                p.insert(p.begin() + static_cast<long>(i) + 1, w);
                break;
            }
}

// Three paths in the pocket under the leaf [a, a+2]. The chain side is the
// left leg, or the right leg when mirrored.
void add_gadget(Geo& geo, std::vector<Path>& paths, int a, bool mirror) {
    auto X = [&](double x) { return mirror ? 2.0 * (a + 1) - x : x; };
    Vertex lo = geo.at(X(a), 0), top = geo.at(a + 1, 1), hi = geo.at(X(a + 2), 0);
    Vertex A = geo.at(X(a + 0.5), 0.5);
    Vertex B = geo.at(X(a + 1.5), 0.5);
    subdivide(paths, lo, top, A);
    subdivide(paths, top, hi, B);
    Vertex m12 = geo.at(a + 1, 0.6);
    Vertex m13 = geo.at(X(a + 0.8), 0.3);
    Vertex m23 = geo.at(X(a + 1.2), 0.3);
    paths.push_back({geo.at(X(a + 0.3), 0), A, m12, m13, geo.at(X(a + 0.7), 0)});
    paths.push_back({geo.at(X(a + 1.7), 0), B, top, m12, m23, geo.at(X(a + 1.3), 0)});
    paths.push_back({geo.at(X(a + 0.9), 0), m13, m23, geo.at(X(a + 1.1), 0)});
}

std::vector<std::array<int, 2>> pk_intervals(int k) {
    std::vector<std::array<int, 2>> out{{0, 1 << k}};
    for (size_t i = 0; i < out.size(); ++i) {
        auto [a, b] = out[i];
        if (b - a <= 2) continue;
        int m = (a + b) / 2;
        out.push_back({a, m});
        out.push_back({m, b});
    }
    return out;
}

} // namespace

PathSystem gen_top_row(const std::vector<std::array<int, 2>>& intervals) {
    Geo geo;
    std::vector<Path> paths;
    for (auto [a, b] : intervals) {
        if (b - a < 2) throw Error(ErrorCode::ParameterOutOfRange, "interval shorter than 2");
        paths.push_back(geo.top_row(a, b));
    }
    return path_system_from_geometry(geo.pts, std::move(paths));
}

PathSystem gen_pk(int k) {
    if (k < 1 || k > 16) throw Error(ErrorCode::ParameterOutOfRange, "k must be in [1,16]");
    return gen_top_row(pk_intervals(k));
}

PathSystem gen_counterexample4(int k, int j) {
    if (k < 2 || k > 16 || j < 1 || j >= k)
        throw Error(ErrorCode::ParameterOutOfRange, "need 1 <= j < k <= 16");
    Geo geo;
    std::vector<Path> paths;
    for (auto [a, b] : pk_intervals(k)) paths.push_back(geo.top_row(a, b));
    int width = 1 << (k - j + 1);
    for (int s = 0; s < (1 << k); s += width) {
        add_gadget(geo, paths, s, false);
        add_gadget(geo, paths, s + width - 2, true);
    }
    return path_system_from_geometry(geo.pts, std::move(paths));
}

PathSystem gen_gadget_isolated(int chain) {
    if (chain < 2 || chain > 14) throw Error(ErrorCode::ParameterOutOfRange, "chain in [2,14]");
    int n = 1 << chain;
    Geo geo;
    std::vector<Path> paths{geo.top_row(0, n + 4), geo.top_row(2, n + 2)};
    for (int i = 1; i < chain; ++i) {
        int len = n >> i;
        paths.push_back(geo.top_row(2, 2 + len));
        paths.push_back(geo.top_row(n + 2 - len, n + 2));
    }
    add_gadget(geo, paths, 2, false);
    add_gadget(geo, paths, n, true);
    return path_system_from_geometry(geo.pts, std::move(paths));
}

PathSystem gen_crossing_fan(int r) {
    if (r < 2 || r > 12) throw Error(ErrorCode::ParameterOutOfRange, "r must be in [2,12]");
    int m = 2 * r;
    double right = m + 1;
    Geo geo;
    std::vector<Path> paths;
    for (int i = 1; i <= m; ++i) {
        std::vector<std::pair<double, int>> pts;
        for (int j = 1; j <= m; ++j)
            if (j != i) pts.push_back({(i + j) / 2.0, j});
        std::sort(pts.begin(), pts.end());
        Path p{geo.at(0, -1.0 * i * i)};
        for (auto [x, j] : pts) p.push_back(geo.at(x, 1.0 * i * j));
        p.push_back(geo.at(right, 2.0 * i * right - 1.0 * i * i));
        paths.push_back(p);
    }
    return path_system_from_geometry(geo.pts, std::move(paths));
}

PathSystem gen_random_ncs(int n_pairs, int depth, std::uint64_t seed) {
    if (n_pairs < 1) throw Error(ErrorCode::ParameterOutOfRange, "n_pairs must be >= 1");
    if (depth < 1) depth = 1;
    std::mt19937_64 rng(seed);
    auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    auto coin = [&](int num, int den) { return uni(0, den - 1) < num; };

    int width = 6 * n_pairs + 6;
    struct Node {
        int a, b, level;
        std::vector<int> h; // heights over columns a..b
        bool expanded = false;
    };
    std::vector<Node> nodes;
    {
        Node root{0, width, 0, std::vector<int>(width + 1, depth + 1)};
        root.h.front() = root.h.back() = 0;
        nodes.push_back(root);
    }
    static const int weights[] = {1, 2, 4, 2, 1};
    std::discrete_distribution<int> child_count(std::begin(weights), std::end(weights));
    int fan = std::max(1, static_cast<int>(std::ceil(std::pow(n_pairs, 1.0 / depth) / 2.5)));
    auto full = [&] { return static_cast<int>(nodes.size()) >= n_pairs; };
    for (int pass = 0; pass < 8 && !full(); ++pass)
    for (size_t idx = 0; idx < nodes.size() && !full(); ++idx) {
        if (nodes[idx].expanded || nodes[idx].level >= depth) continue;
        Node par = nodes[idx];
        // child t lives in slot t of the interior; neighbours may share the
        // slot boundary as a common terminal, the outer children may share the
        // parent's terminals
        int room = par.b - par.a - 1;
        int r = child_count(rng) * fan;
        if (pass > 0) r = std::max(r, 1);
        r = std::min({r, n_pairs - static_cast<int>(nodes.size()), room / 4});
        if (r <= 0) continue;
        nodes[idx].expanded = true;
        std::vector<std::array<int, 2>> iv;
        std::vector<int> cut(r + 1);
        for (int t = 0; t <= r; ++t) cut[t] = par.a + 1 + room * t / r;
        for (int t = 0; t < r; ++t) {
            int lo = cut[t], hi = cut[t + 1] - 2;
            int slack = (hi - lo - 2) / 4;
            iv.push_back({uni(lo, lo + slack), uni(hi - slack, hi)});
        }
        for (int t = 0; t + 1 < r; ++t)
            if (coin(1, 2)) iv[t][1] = iv[t + 1][0] = cut[t + 1] - 1;
        bool glue_a = coin(1, 3), glue_b = coin(1, 3) && !(r == 1 && glue_a);
        if (glue_a) iv.front()[0] = par.a;
        if (glue_b) iv.back()[1] = par.b;

        // equality interval E with the parent; columns at height 1 are forced in
        std::vector<std::array<int, 2>> E(iv.size());
        for (size_t t = 0; t < iv.size(); ++t) {
            auto [s, e] = iv[t];
            int fmin = e, fmax = s;
            for (int c = s + 1; c < e; ++c)
                if (par.h[c - par.a] == 1) {
                    fmin = std::min(fmin, c);
                    fmax = std::max(fmax, c);
                }
            if (s == par.a) fmin = s + 1;
            if (e == par.b) fmax = e - 1;
            int lo, hi;
            if (fmin <= fmax) {
                lo = s == par.a ? s + 1 : uni(s + 1, fmin);
                hi = e == par.b ? e - 1 : uni(fmax, e - 1);
            } else if (s == par.a) {
                lo = s + 1;
                hi = uni(lo, std::min(e - 1, lo + uni(0, 3)));
            } else if (e == par.b) {
                hi = e - 1;
                lo = uni(std::max(s + 1, hi - uni(0, 3)), hi);
            } else {
                lo = uni(s + 1, e - 1);
                hi = uni(lo, std::min(e - 1, lo + uni(0, 3)));
            }
            E[t] = {lo, hi};
        }
        for (size_t t = 0; t < iv.size(); ++t) {
            auto [s, e] = iv[t];
            Node ch{s, e, par.level + 1, std::vector<int>(e - s + 1, 0)};
            for (int c = s + 1; c < e; ++c) {
                int hp = par.h[c - par.a];
                bool in = c >= E[t][0] && c <= E[t][1];
                ch.h[c - s] = in ? hp : hp - 1;
            }
            nodes.push_back(ch);
        }
    }

    Geo geo;
    std::vector<Path> paths;
    for (const Node& nd : nodes) {
        Path p;
        for (int c = nd.a; c <= nd.b; ++c) p.push_back(geo.at(c, nd.h[c - nd.a]));
        paths.push_back(p);
    }
    return path_system_from_geometry(geo.pts, std::move(paths));
}

PathSystem generate(const GenSpec& spec) {
    switch (spec.family) {
    case Family::PK: return gen_pk(spec.k);
    case Family::COUNTEREXAMPLE4: return gen_counterexample4(spec.k, spec.j);
    case Family::CROSSING_FAN: return gen_crossing_fan(spec.r);
    case Family::RANDOM: return gen_random_ncs(spec.n_pairs, spec.depth, spec.seed);
    case Family::WITNESS3: return gen_witness3();
    }
    throw Error(ErrorCode::ParameterOutOfRange, "unknown family");
}

} // namespace ncf
