#pragma once

// Static diagram rendering: labeled polygon triangulations and coherent
// graphs, as standalone SVG or plain-text grids.

#include "wormhole/coherent.hpp"
#include "wormhole/triangulation.hpp"

#include <string>

namespace wormhole {

std::string render_triangulation_svg(const FramedTriangulation& ft);
std::string render_triangulation_ascii(const FramedTriangulation& ft);

std::string render_coherent_graph_svg(const CoherentGraph& g);
std::string render_coherent_graph_ascii(const CoherentGraph& g);

} // namespace wormhole
