#include "ncforest/render.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace ncf {

std::vector<Point> tutte_layout(const PlaneGraph& g, int iterations) {
    int n = g.vertex_count();
    std::vector<Point> pos(n, {0.5, 0.5});
    std::vector<char> pinned(n, 0);
    std::vector<Vertex> ring;
    for (Vertex v : g.outer_walk())
        if (!pinned[v]) {
            pinned[v] = 1;
            ring.push_back(v);
        }
    const double pi = std::acos(-1.0);
    int k = static_cast<int>(ring.size());
    for (int i = 0; i < k; ++i) {
        // clockwise walk, so angles decrease
        double a = pi / 2 - 2 * pi * i / std::max(k, 1);
        pos[ring[i]] = {0.5 + 0.45 * std::cos(a), 0.5 + 0.45 * std::sin(a)};
    }
    for (Vertex v = 0; v < n; ++v)
        if (g.degree(v) == 0) pinned[v] = 1;
    for (int it = 0; it < iterations; ++it) {
        double moved = 0;
        for (Vertex v = 0; v < n; ++v) {
            if (pinned[v]) continue;
            Point s{0, 0};
            for (Vertex w : g.rotation(v)) {
                s.x += pos[w].x;
                s.y += pos[w].y;
            }
            s.x /= g.degree(v);
            s.y /= g.degree(v);
            moved = std::max(moved, std::abs(s.x - pos[v].x) + std::abs(s.y - pos[v].y));
            pos[v] = s;
        }
        if (moved < 1e-12) break;
    }
    return pos;
}

std::string render_svg(const PathSystem& ps, const std::vector<int>& labels) {
    static const char* palette[] = {"#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00",
                                    "#a65628", "#f781bf", "#999999", "#66c2a5", "#fc8d62",
                                    "#8da0cb", "#e78ac3", "#a6d854", "#ffd92f", "#1b9e77"};
    const PlaneGraph& g = ps.graph;
    auto pos = tutte_layout(g);
    const double size = 800;
    auto fmt = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };
    auto X = [&](Vertex v) { return fmt(pos[v].x * size); };
    auto Y = [&](Vertex v) { return fmt((1 - pos[v].y) * size); };
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
        << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
        << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<g stroke=\"#cccccc\" stroke-width=\"3\">\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        Dart d = g.dart(g.edge_dart(e));
        out << "<line x1=\"" << X(d.tail) << "\" y1=\"" << Y(d.tail) << "\" x2=\"" << X(d.head) << "\" y2=\""
            << Y(d.head) << "\"/>\n";
    }
    out << "</g>\n<g fill=\"none\" stroke-width=\"1.5\" stroke-linejoin=\"round\">\n";
    for (int p = 0; p < ps.size(); ++p) {
        int c = p < static_cast<int>(labels.size()) && labels[p] > 0 ? labels[p] - 1 : p;
        out << "<polyline data-path=\"" << p << "\"";
        if (p < static_cast<int>(labels.size())) out << " data-label=\"" << labels[p] << "\"";
        out << " stroke=\"" << palette[c % 15] << "\" points=\"";
        for (size_t i = 0; i < ps.paths[p].size(); ++i)
            out << (i ? " " : "") << X(ps.paths[p][i]) << "," << Y(ps.paths[p][i]);
        out << "\"/>\n";
    }
    out << "</g>\n<g fill=\"black\">\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        out << "<circle cx=\"" << X(v) << "\" cy=\"" << Y(v) << "\" r=\"2\"/>\n";
    out << "</g>\n</svg>\n";
    return out.str();
}

} // namespace ncf
