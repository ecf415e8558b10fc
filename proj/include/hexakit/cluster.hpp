#pragma once

#include <hexakit/geometry.hpp>

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace hexakit {

// Edge of the stored model: a chain of circular arcs between two degree-3
// vertices.  Interior points are plain coordinates, not vertices (the
// importer merges degree-2 junctions away).  A chain with v0 = v1 = -1 is a
// free loop: `interior` is the full cyclic point list (>= 2 points) and
// bulges[i] spans interior[i] -> interior[i+1 mod m].
struct EdgeChain {
    int v0 = -1;
    int v1 = -1;
    std::vector<Point> interior;
    std::vector<double> bulges;

    bool is_loop() const { return v0 < 0; }
    std::size_t arc_count() const {
        return is_loop() ? interior.size() : interior.size() + 1;
    }
};

// Closed boundary loop of a cell: (edge id, orientation) entries, orientation
// +1 when the chain is traversed v0 -> v1.  A free loop must be the sole
// entry of its cell.
struct Cell {
    std::vector<std::pair<int, int>> loop;
};

// Chamber 0 is the exterior: its infinite_cell bounds the unbounded
// component, any further cells are interior voids.  Chambers 1..N each hold
// the cells of one unit-area region.
struct Chamber {
    std::vector<int> cells;
    bool exterior = false;
    int infinite_cell = -1;
};

struct Cluster {
    std::vector<Point> vertices;
    std::vector<EdgeChain> edges;
    std::vector<Cell> cells;
    std::vector<Chamber> chambers;
    int merged_vertex_count = 0; // degree-2 junctions removed on import

    int n() const { return static_cast<int>(chambers.size()) - 1; }
    int infinite_cell_id() const { return chambers.at(0).infinite_cell; }
};

// Topology sanity: chamber 0 exterior (and only it), ids in range, every
// cell a closed walk, every edge used exactly twice with opposite
// orientations.  Throws std::invalid_argument with a description.
void check_structure(const Cluster& c);

// Number of edge chains bounding the cell; free loops contribute 0.
int cell_k(const Cluster& c, int cell_id);

// Boundary loop as a curve whose corners are the cell's vertices.
PolyChainCurve cell_curve(const Cluster& c, int cell_id);

double cell_area(const Cluster& c, int cell_id); // oriented
double cell_perimeter(const Cluster& c, int cell_id);
double edge_chain_length(const Cluster& c, int edge_id);

// Total boundary length, every edge counted once.
double perimeter(const Cluster& c);

// sum over finite cells of (6 - k) minus (6 + k of the infinite cell);
// zero for compliant degree-3 clusters with connected boundary.
int euler_residual(const Cluster& c);

// |2P - (p_ext + sum of finite cell perimeters)|.
double double_counting_check(const Cluster& c);

struct ValidationItem {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<ValidationItem> items;
    bool pass = false;
};

// C1 simple cells, C2 well-formed arcs used twice, C3 vertex degree 3 with
// >= 2 edges per cell, C4 connected boundary and the perimeter bound
// P <= 12^(1/4) N + M sqrt(N), C5 cell area >= 1/100 for 2 <= k <= 6, plus
// positive finite-cell orientation and unit chamber areas (1e-6 relative).
ValidationReport validate(const Cluster& c, double m_bound);

struct ClusterMetrics {
    int n = 0;
    double perimeter = 0.0;
    int hex_count = 0;            // chambers with one six-edged cell
    std::map<int, int> ch_k;      // chambers containing a cell with k edges
    double p_ext = 0.0;           // perimeter of the infinite cell
    int edge_ext = 0;             // its edge count
    double void_area = 0.0;       // finite cells of chamber 0
    double mean_dhex_sq = 0.0;    // over hexagonal chambers, 0 when none
};

ClusterMetrics metrics(const Cluster& c);

struct TheoremRow {
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    bool pass = false;
};

struct TheoremReport {
    int n = 0;
    double m = 0.0;  // energy-gap constant used for the bounds
    double c0 = 0.0;
    std::vector<TheoremRow> rows;
    bool exists_k_le_5 = false;
    bool all_pass = false;
};

// Checks the six structure conclusions with constant C0: hexagon count,
// mean squared hexagonal distance, exterior perimeter and edge count, void
// area, and per-k chamber counts, plus the existence of a k <= 5 chamber.
// Pass m_bound <= 0 to use the measured gap (P - 12^(1/4) N)/sqrt(N).
TheoremReport theorem1_report(const Cluster& c, double m_bound, double c0);

} // namespace hexakit
