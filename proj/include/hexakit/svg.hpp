#pragma once

#include <hexakit/cluster.hpp>

#include <string>

namespace hexakit {

// Standalone SVG: cells filled by edge count k (legend included), chamber-0
// voids hatched, the outer boundary stroked, arcs as true circular paths.
// Deterministic bytes for a given cluster.
std::string cluster_svg(const Cluster& c);

} // namespace hexakit
