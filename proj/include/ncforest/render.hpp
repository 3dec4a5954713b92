#pragma once

#include <string>
#include <vector>

#include "ncforest/path_system.hpp"

namespace ncf {

// Barycentric layout with the outer walk pinned to a regular polygon, in [0,1]^2.
std::vector<Point> tutte_layout(const PlaneGraph& g, int iterations = 4000);

// SVG 1.1 drawing; paths are colored by label when labels is non-empty, else by index.
std::string render_svg(const PathSystem& ps, const std::vector<int>& labels = {});

} // namespace ncf
