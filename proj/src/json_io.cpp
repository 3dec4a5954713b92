#include "ncforest/json_io.hpp"

#include <fstream>
#include <iostream>

namespace ncf {

Json instance_to_json(const PathSystem& ps) {
    const PlaneGraph& g = ps.graph;
    Json j;
    j["vertices"] = g.vertex_count();
    j["rotation"] = g.rotations();
    j["outer_dart"] = {g.outer_dart().tail, g.outer_dart().head};
    j["paths"] = ps.paths;
    bool any_aux = false;
    for (char c : ps.auxiliary) any_aux |= c != 0;
    if (any_aux) {
        std::vector<int> aux(ps.auxiliary.begin(), ps.auxiliary.end());
        j["auxiliary"] = aux;
    }
    return j;
}

PathSystem instance_from_json(const Json& j) {
    try {
        int n = j.at("vertices").get<int>();
        auto rot = j.at("rotation").get<std::vector<std::vector<Vertex>>>();
        auto od = j.at("outer_dart").get<std::vector<Vertex>>();
        if (od.size() != 2) throw Error(ErrorCode::ParseError, "outer_dart needs two vertices");
        PathSystem ps;
        ps.graph = PlaneGraph::build(n, std::move(rot), {od[0], od[1]});
        ps.paths = j.at("paths").get<std::vector<Path>>();
        ps.auxiliary.assign(ps.paths.size(), 0);
        if (j.contains("auxiliary")) {
            auto aux = j["auxiliary"].get<std::vector<int>>();
            for (size_t i = 0; i < aux.size() && i < ps.auxiliary.size(); ++i) ps.auxiliary[i] = aux[i] != 0;
        }
        for (const Path& p : ps.paths)
            for (Vertex v : p)
                if (v < 0 || v >= n) throw Error(ErrorCode::InvalidVertex, "path vertex " + std::to_string(v));
        return ps;
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

Json read_json(std::istream& in) {
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, e.what());
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    return read_json(in);
}

void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
    out << j.dump(1) << "\n";
}

} // namespace ncf
