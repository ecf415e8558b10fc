#include <hexakit/honeycomb.hpp>

#include <hexakit/arc_profile.hpp>
#include <hexakit/hexfit.hpp>

#include <cmath>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <unordered_set>
#include <utility>

namespace hexakit {

namespace {

// Axial cell list: center, then ring r clockwise from (r, 0).
std::vector<std::pair<int, int>> spiral_axial(int n) {
    std::vector<std::pair<int, int>> cells{{0, 0}};
    static const int dq[6] = {0, -1, -1, 0, 1, 1};
    static const int dr[6] = {-1, 0, 1, 1, 0, -1};
    for (int r = 1; static_cast<int>(cells.size()) < n; ++r) {
        int q = r, rr = 0;
        for (int d = 0; d < 6 && static_cast<int>(cells.size()) < n; ++d)
            for (int s = 0; s < r && static_cast<int>(cells.size()) < n; ++s) {
                cells.emplace_back(q, rr);
                q += dq[d];
                rr += dr[d];
            }
    }
    return cells;
}

// Corner keys of cell (q, r) on the half-unit lattice, counter-clockwise
// from the corner at -30 degrees.
void corner_keys(int q, int r, std::pair<int, int> out[6]) {
    int cx = 2 * q + r, cy = 3 * r;
    static const int ox[6] = {1, 1, 0, -1, -1, 0};
    static const int oy[6] = {-1, 1, 2, 1, -1, -2};
    for (int i = 0; i < 6; ++i) out[i] = {cx + ox[i], cy + oy[i]};
}

} // namespace

ClusterFileV1 spiral_file(const SpiralSpec& spec) {
    if (spec.n < 1) throw std::invalid_argument("spiral needs n >= 1");
    if (!(spec.hex_area > 0.0))
        throw std::invalid_argument("hex_area must be positive");
    const double side = hex_unit_circumradius() * std::sqrt(spec.hex_area);
    const double ux = std::sqrt(3.0) * side / 2.0, uy = side / 2.0;

    ClusterFileV1 f;
    std::map<std::pair<int, int>, int> vertex_id;
    auto vertex_of = [&](std::pair<int, int> key) {
        auto it = vertex_id.find(key);
        if (it != vertex_id.end()) return it->second;
        int id = static_cast<int>(f.vertices.size());
        vertex_id.emplace(key, id);
        f.vertices.push_back(Point{key.first * ux, key.second * uy});
        return id;
    };

    std::map<std::pair<int, int>, int> edge_id; // (min v, max v) -> id
    std::vector<int> edge_uses(0);
    std::vector<int> owner_dir(0); // orientation used by the first (owning) cell

    for (auto [q, r] : spiral_axial(spec.n)) {
        std::pair<int, int> keys[6];
        corner_keys(q, r, keys);
        int v[6];
        for (int i = 0; i < 6; ++i) v[i] = vertex_of(keys[i]);
        FileCell cell;
        for (int i = 0; i < 6; ++i) {
            int a = v[i], b = v[(i + 1) % 6];
            auto key = std::minmax(a, b);
            auto it = edge_id.find(key);
            int eid, orient;
            if (it == edge_id.end()) {
                eid = static_cast<int>(f.edges.size());
                edge_id.emplace(key, eid);
                f.edges.push_back(FileEdge{a, b, 0.0});
                edge_uses.push_back(0);
                owner_dir.push_back(1);
                orient = 1;
            } else {
                eid = it->second;
                orient = f.edges[eid].v0 == a ? 1 : -1;
            }
            ++edge_uses[eid];
            cell.edges.emplace_back(eid, orient);
        }
        f.cells.push_back(std::move(cell));
    }

    // boundary edges are used once; the exterior cell walks them reversed.
    // ext_from[v] = boundary edge whose owner traversal ends at v.
    std::map<int, int> ext_from;
    int start_edge = -1;
    for (std::size_t e = 0; e < f.edges.size(); ++e) {
        if (edge_uses[e] != 1) continue;
        if (start_edge < 0) start_edge = static_cast<int>(e);
        int end_v = owner_dir[e] > 0 ? f.edges[e].v1 : f.edges[e].v0;
        ext_from[end_v] = static_cast<int>(e);
    }
    FileCell exterior;
    if (start_edge >= 0) {
        int e = start_edge;
        std::size_t boundary_count = ext_from.size();
        do {
            exterior.edges.emplace_back(e, -owner_dir[e]);
            int arrive = owner_dir[e] > 0 ? f.edges[e].v0 : f.edges[e].v1;
            auto it = ext_from.find(arrive);
            if (it == ext_from.end())
                throw std::logic_error("boundary walk broke off");
            e = it->second;
        } while (e != start_edge &&
                 exterior.edges.size() <= boundary_count);
        if (e != start_edge || exterior.edges.size() != boundary_count)
            throw std::logic_error("boundary is not a single loop");
    }

    if (spec.smooth_boundary) {
        const double bulge = p_of_theta(M_PI / 6.0) * side * side;
        for (auto [e, o] : exterior.edges) {
            (void)o;
            f.edges[e].bulge_area = owner_dir[e] * bulge;
        }
    }

    int ext_cell = static_cast<int>(f.cells.size());
    f.cells.push_back(std::move(exterior));

    FileChamber ext_chamber;
    ext_chamber.cells = {ext_cell};
    ext_chamber.exterior = true;
    ext_chamber.infinite_cell = ext_cell;
    f.chambers.push_back(std::move(ext_chamber));
    for (int i = 0; i < spec.n; ++i) {
        FileChamber ch;
        ch.cells = {i};
        f.chambers.push_back(std::move(ch));
    }
    return f;
}

Cluster generate_spiral(const SpiralSpec& spec) {
    return build_cluster(spiral_file(spec));
}

double energy_gap(const Cluster& c) {
    double n = static_cast<double>(c.n());
    return (perimeter(c) - std::pow(12.0, 0.25) * n) / std::sqrt(n);
}

std::vector<double> spiral_perimeters(int n_max) {
    if (n_max < 1) throw std::invalid_argument("need n_max >= 1");
    const double side = hex_unit_circumradius();
    auto cells = spiral_axial(n_max);
    std::unordered_set<std::int64_t> present;
    auto pack = [](int q, int r) {
        return (static_cast<std::int64_t>(q) << 32) ^
               static_cast<std::int64_t>(static_cast<std::uint32_t>(r));
    };
    static const int nq[6] = {1, 1, 0, -1, -1, 0};
    static const int nr[6] = {0, -1, 1, 0, 1, -1};
    std::vector<double> out;
    out.reserve(n_max);
    long shared = 0;
    for (int i = 0; i < n_max; ++i) {
        auto [q, r] = cells[i];
        for (int d = 0; d < 6; ++d)
            if (present.count(pack(q + nq[d], r + nr[d]))) ++shared;
        present.insert(pack(q, r));
        // every edge counts once: 6(N) slots minus one per shared pair
        out.push_back(side * (6.0 * (i + 1) - shared));
    }
    return out;
}

double k0_constant() {
    return std::sqrt(M_PI) - std::pow(3.0, 0.25) / std::sqrt(2.0);
}

double m0_constant() { return M_PI / std::sqrt(1.5 * std::sqrt(3.0)); }

PsiBounds psi_bounds(int n) {
    if (n < 2) throw std::invalid_argument("psi_bounds needs n >= 2");
    double t4 = std::pow(12.0, 0.25), sq = std::sqrt(static_cast<double>(n));
    return PsiBounds{t4 * n + k0_constant() * sq,
                     t4 * n + m0_constant() * sq + 3.0};
}

} // namespace hexakit
