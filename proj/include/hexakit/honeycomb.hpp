#pragma once

#include <hexakit/cluster.hpp>
#include <hexakit/cluster_io.hpp>

#include <vector>

namespace hexakit {

struct SpiralSpec {
    int n = 1;
    double hex_area = 1.0;
    bool smooth_boundary = false;
};

// Raw file form of the spiral: center cell, then ring r clockwise starting
// at the east neighbor, regular hexagons of area hex_area on the pointy-top
// lattice.  Shared vertices are deduplicated exactly (integer lattice keys),
// the exterior cell walks the outer boundary once.  smooth_boundary bulges
// every boundary edge outward by a 30-degree arc (chamber areas then exceed
// hex_area; intended for plots and gap experiments).
ClusterFileV1 spiral_file(const SpiralSpec& spec);

// spiral_file fed through the degree-2 merge.
Cluster generate_spiral(const SpiralSpec& spec);

// (P - 12^(1/4) N) / sqrt(N), the measured class constant of the cluster.
double energy_gap(const Cluster& c);

// Perimeters of the straight unit-area spirals N = 1..n_max in one sweep
// (shared-edge counting; matches perimeter(generate_spiral(N)) exactly).
std::vector<double> spiral_perimeters(int n_max);

struct PsiBounds {
    double lower = 0.0;
    double upper = 0.0;
};

// lower = 12^(1/4) N + K0 sqrt(N), upper = 12^(1/4) N + M0 sqrt(N) + 3, for
// N >= 2.
PsiBounds psi_bounds(int n);

double k0_constant(); // sqrt(pi) - 3^(1/4)/sqrt(2)
double m0_constant(); // pi / sqrt(3 sqrt(3) / 2)

} // namespace hexakit
