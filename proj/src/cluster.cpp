#include <hexakit/cluster.hpp>

#include <hexakit/arc_profile.hpp>
#include <hexakit/hexfit.hpp>
#include <hexakit/parallel.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hexakit {

namespace {

void fail(const std::string& what) { throw std::invalid_argument(what); }

// Union-find over vertex ids.
struct Uf {
    std::vector<int> parent;
    explicit Uf(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

std::vector<int> vertex_degrees(const Cluster& c) {
    std::vector<int> deg(c.vertices.size(), 0);
    for (const EdgeChain& e : c.edges) {
        if (e.is_loop()) continue;
        ++deg[e.v0];
        ++deg[e.v1];
    }
    return deg;
}

} // namespace

void check_structure(const Cluster& c) {
    if (c.chambers.empty()) fail("cluster has no chambers");
    for (std::size_t h = 0; h < c.chambers.size(); ++h) {
        const Chamber& ch = c.chambers[h];
        if (ch.exterior != (h == 0))
            fail("chamber 0 must be the unique exterior chamber");
        if (ch.cells.empty()) fail("chamber without cells");
        for (int cid : ch.cells)
            if (cid < 0 || cid >= static_cast<int>(c.cells.size()))
                fail("cell id out of range");
        if (h == 0) {
            if (std::find(ch.cells.begin(), ch.cells.end(), ch.infinite_cell) ==
                ch.cells.end())
                fail("exterior chamber must contain its infinite cell");
        } else if (ch.infinite_cell != -1) {
            fail("finite chamber tagged with an infinite cell");
        }
    }
    std::vector<int> seen(c.cells.size(), 0);
    for (const Chamber& ch : c.chambers)
        for (int cid : ch.cells) ++seen[cid];
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (seen[i] != 1) fail("every cell must belong to exactly one chamber");

    int nv = static_cast<int>(c.vertices.size());
    for (const EdgeChain& e : c.edges) {
        if (e.is_loop()) {
            if (e.v0 != -1 || e.v1 != -1) fail("loop chain with one endpoint");
            if (e.interior.size() < 2) fail("loop chain needs >= 2 points");
            if (e.bulges.size() != e.interior.size())
                fail("loop chain bulge count mismatch");
        } else {
            if (e.v0 < 0 || e.v0 >= nv || e.v1 < 0 || e.v1 >= nv)
                fail("chain endpoint out of range");
            if (e.bulges.size() != e.interior.size() + 1)
                fail("chain bulge count mismatch");
            if (e.v0 == e.v1 && e.interior.empty())
                fail("self-loop chain needs interior points");
        }
        for (double b : e.bulges)
            if (!std::isfinite(b)) fail("non-finite bulge");
        for (const Point& p : e.interior)
            if (!std::isfinite(p.x) || !std::isfinite(p.y))
                fail("non-finite interior point");
    }
    for (const Point& p : c.vertices)
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) fail("non-finite vertex");

    int ne = static_cast<int>(c.edges.size());
    for (const Cell& cell : c.cells) {
        if (cell.loop.empty()) fail("cell with empty loop");
        for (auto [eid, d] : cell.loop) {
            if (eid < 0 || eid >= ne) fail("cell references unknown edge");
            if (d != 1 && d != -1) fail("cell orientation must be +-1");
            if (c.edges[eid].is_loop() && cell.loop.size() != 1)
                fail("free loop must be the sole entry of its cell");
        }
        if (cell.loop.size() == 1 && c.edges[cell.loop[0].first].is_loop())
            continue;
        // the walk must close: each entry starts where the previous ended
        int expect = -1, first = -1;
        for (auto [eid, d] : cell.loop) {
            const EdgeChain& e = c.edges[eid];
            if (e.is_loop()) fail("free loop mixed into a multi-edge cell");
            int s = d > 0 ? e.v0 : e.v1;
            int t = d > 0 ? e.v1 : e.v0;
            if (first < 0) first = s;
            else if (s != expect) fail("cell walk does not chain");
            expect = t;
        }
        if (expect != first) fail("cell walk does not close");
    }
}

int cell_k(const Cluster& c, int cell_id) {
    const Cell& cell = c.cells.at(cell_id);
    int k = 0;
    for (auto [eid, d] : cell.loop) {
        (void)d;
        if (!c.edges.at(eid).is_loop()) ++k;
    }
    return k;
}

PolyChainCurve cell_curve(const Cluster& c, int cell_id) {
    const Cell& cell = c.cells.at(cell_id);
    if (cell.loop.empty()) fail("cell with empty loop");

    std::vector<Point> pts;
    std::vector<double> bulges;
    std::vector<std::size_t> nodes;

    if (cell.loop.size() == 1 && c.edges.at(cell.loop[0].first).is_loop()) {
        const EdgeChain& e = c.edges[cell.loop[0].first];
        std::size_t m = e.interior.size();
        if (cell.loop[0].second > 0) {
            pts = e.interior;
            bulges = e.bulges;
        } else {
            // reversed cycle anchored at the same first point
            pts.push_back(e.interior[0]);
            for (std::size_t i = m; i-- > 1;) pts.push_back(e.interior[i]);
            for (std::size_t i = m; i-- > 0;) bulges.push_back(-e.bulges[i]);
        }
        nodes = {0, m / 2};
        return PolyChainCurve(std::move(pts), std::move(bulges), std::move(nodes));
    }

    for (auto [eid, d] : cell.loop) {
        const EdgeChain& e = c.edges.at(eid);
        int s = d > 0 ? e.v0 : e.v1;
        nodes.push_back(pts.size());
        pts.push_back(c.vertices.at(s));
        if (d > 0) {
            pts.insert(pts.end(), e.interior.begin(), e.interior.end());
            bulges.insert(bulges.end(), e.bulges.begin(), e.bulges.end());
        } else {
            pts.insert(pts.end(), e.interior.rbegin(), e.interior.rend());
            for (std::size_t i = e.bulges.size(); i-- > 0;)
                bulges.push_back(-e.bulges[i]);
        }
    }
    // a single self-loop chain yields one corner; add a midpoint stand-in
    if (nodes.size() < 2) nodes.push_back(pts.size() / 2);
    return PolyChainCurve(std::move(pts), std::move(bulges), std::move(nodes));
}

double cell_area(const Cluster& c, int cell_id) {
    return oriented_area(cell_curve(c, cell_id));
}

double cell_perimeter(const Cluster& c, int cell_id) {
    return curve_length(cell_curve(c, cell_id));
}

double edge_chain_length(const Cluster& c, int edge_id) {
    const EdgeChain& e = c.edges.at(edge_id);
    double len = 0.0;
    if (e.is_loop()) {
        std::size_t m = e.interior.size();
        for (std::size_t i = 0; i < m; ++i)
            len += arc_length(ArcSegment{e.interior[i], e.interior[(i + 1) % m],
                                         e.bulges[i]});
        return len;
    }
    std::vector<Point> run;
    run.reserve(e.interior.size() + 2);
    run.push_back(c.vertices.at(e.v0));
    run.insert(run.end(), e.interior.begin(), e.interior.end());
    run.push_back(c.vertices.at(e.v1));
    for (std::size_t i = 0; i + 1 < run.size(); ++i)
        len += arc_length(ArcSegment{run[i], run[i + 1], e.bulges[i]});
    return len;
}

double perimeter(const Cluster& c) {
    double p = 0.0;
    for (std::size_t i = 0; i < c.edges.size(); ++i)
        p += edge_chain_length(c, static_cast<int>(i));
    return p;
}

int euler_residual(const Cluster& c) {
    int inf = c.infinite_cell_id();
    int sum = 0;
    for (const Chamber& ch : c.chambers)
        for (int cid : ch.cells)
            if (cid != inf) sum += 6 - cell_k(c, cid);
    return sum - (6 + cell_k(c, inf));
}

double double_counting_check(const Cluster& c) {
    int inf = c.infinite_cell_id();
    double sum = cell_perimeter(c, inf);
    for (const Chamber& ch : c.chambers)
        for (int cid : ch.cells)
            if (cid != inf) sum += cell_perimeter(c, cid);
    return std::fabs(2.0 * perimeter(c) - sum);
}

namespace {

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

} // namespace

ValidationReport validate(const Cluster& c, double m_bound) {
    check_structure(c);
    ValidationReport rep;
    int inf = c.infinite_cell_id();
    int ncells = static_cast<int>(c.cells.size());

    // geometry guarded once: later checks reuse curves and flag failures
    std::vector<PolyChainCurve> curves(ncells);
    std::vector<std::string> geom_error(ncells);
    bool geom_ok = true;
    for (int i = 0; i < ncells; ++i) {
        try {
            curves[i] = cell_curve(c, i);
        } catch (const std::exception& ex) {
            geom_error[i] = ex.what();
            geom_ok = false;
        }
    }

    { // C1: every cell boundary a simple closed curve
        bool pass = geom_ok;
        std::string detail;
        for (int i = 0; i < ncells && pass; ++i) {
            double a = std::fabs(oriented_area(curves[i]));
            if (!curve_is_simple(curves[i], 1e-6 * std::sqrt(a + 1.0))) {
                pass = false;
                detail = "cell " + std::to_string(i) + " self-crosses";
            }
        }
        if (!geom_ok) detail = "arc geometry invalid";
        rep.items.push_back({"C1.simple_cells", pass, detail});
    }

    { // C2: arcs well formed, each edge bounding exactly two sides
        bool pass = geom_ok;
        std::string detail;
        for (int i = 0; i < ncells && !geom_ok; ++i)
            if (!geom_error[i].empty()) {
                detail = "cell " + std::to_string(i) + ": " + geom_error[i];
                break;
            }
        std::vector<int> plus(c.edges.size(), 0), minus(c.edges.size(), 0);
        for (const Cell& cell : c.cells)
            for (auto [eid, d] : cell.loop) (d > 0 ? plus : minus)[eid]++;
        for (std::size_t e = 0; e < c.edges.size() && pass; ++e)
            if (plus[e] != 1 || minus[e] != 1) {
                pass = false;
                detail = "edge " + std::to_string(e) +
                         " not used once per side (" + std::to_string(plus[e]) +
                         "+/" + std::to_string(minus[e]) + "-)";
            }
        rep.items.push_back({"C2.edges_two_sided", pass, detail});
    }

    { // C3: vertex degrees exactly 3 and >= 2 edges per cell
        bool pass = true;
        std::string detail;
        std::vector<int> deg = vertex_degrees(c);
        for (std::size_t v = 0; v < deg.size() && pass; ++v)
            if (deg[v] != 3) {
                pass = false;
                detail = "vertex " + std::to_string(v) + " has degree " +
                         std::to_string(deg[v]);
            }
        for (int i = 0; i < ncells && pass; ++i)
            if (cell_k(c, i) < 2) {
                pass = false;
                detail = "cell " + std::to_string(i) + " has fewer than 2 edges";
            }
        rep.items.push_back({"C3.degree_three", pass, detail});
    }

    { // C4a: boundary connectivity over chains and free loops
        Uf uf(c.vertices.size());
        std::size_t loops = 0;
        std::vector<char> touched(c.vertices.size(), 0);
        for (const EdgeChain& e : c.edges) {
            if (e.is_loop()) {
                ++loops;
                continue;
            }
            uf.unite(e.v0, e.v1);
            touched[e.v0] = touched[e.v1] = 1;
        }
        std::size_t comps = loops;
        std::vector<char> root_seen(c.vertices.size(), 0);
        for (std::size_t v = 0; v < c.vertices.size(); ++v) {
            if (!touched[v]) continue;
            int r = uf.find(static_cast<int>(v));
            if (!root_seen[r]) {
                root_seen[r] = 1;
                ++comps;
            }
        }
        bool pass = comps == 1;
        rep.items.push_back({"C4.boundary_connected", pass,
                             pass ? "" : std::to_string(comps) + " components"});
    }

    double per = 0.0;
    { // C4b: perimeter within the class bound
        bool pass = geom_ok;
        std::string detail = geom_ok ? "" : "arc geometry invalid";
        if (geom_ok) {
            per = perimeter(c);
            double cap = std::pow(12.0, 0.25) * c.n() +
                         m_bound * std::sqrt(static_cast<double>(c.n()));
            pass = per <= cap;
            detail = "P = " + fmt(per) + ", bound = " + fmt(cap);
        }
        rep.items.push_back({"C4.perimeter_bound", pass, detail});
    }

    std::vector<double> areas(ncells, 0.0);
    if (geom_ok)
        for (int i = 0; i < ncells; ++i)
            if (i != inf) areas[i] = oriented_area(curves[i]);

    { // finite cells positively oriented
        bool pass = geom_ok;
        std::string detail = geom_ok ? "" : "arc geometry invalid";
        for (int i = 0; i < ncells && pass; ++i)
            if (i != inf && areas[i] <= 0.0) {
                pass = false;
                detail = "cell " + std::to_string(i) + " not counter-clockwise";
            }
        rep.items.push_back({"orientation.finite_ccw", pass, detail});
    }

    { // C5: area floor for small-edge-count cells
        bool pass = geom_ok;
        std::string detail = geom_ok ? "" : "arc geometry invalid";
        for (int i = 0; i < ncells && pass; ++i) {
            if (i == inf) continue;
            int k = cell_k(c, i);
            if (k >= 2 && k <= 6 && areas[i] < 0.01) {
                pass = false;
                detail = "cell " + std::to_string(i) + " (k=" + std::to_string(k) +
                         ") has area " + fmt(areas[i]);
            }
        }
        rep.items.push_back({"C5.min_cell_area", pass, detail});
    }

    { // chambers 1..N have unit area
        bool pass = geom_ok;
        std::string detail = geom_ok ? "" : "arc geometry invalid";
        for (std::size_t h = 1; h < c.chambers.size() && pass; ++h) {
            double a = 0.0;
            for (int cid : c.chambers[h].cells) a += areas[cid];
            if (std::fabs(a - 1.0) > 1e-6) {
                pass = false;
                detail = "chamber " + std::to_string(h) + " has area " + fmt(a);
            }
        }
        rep.items.push_back({"unit_area.chambers", pass, detail});
    }

    rep.pass = std::all_of(rep.items.begin(), rep.items.end(),
                           [](const ValidationItem& it) { return it.pass; });
    return rep;
}

ClusterMetrics metrics(const Cluster& c) {
    check_structure(c);
    ClusterMetrics m;
    m.n = c.n();
    m.perimeter = perimeter(c);
    int inf = c.infinite_cell_id();
    m.p_ext = cell_perimeter(c, inf);
    m.edge_ext = cell_k(c, inf);

    for (int cid : c.chambers[0].cells)
        if (cid != inf) m.void_area += std::fabs(cell_area(c, cid));

    std::vector<int> hex_chambers;
    for (std::size_t h = 1; h < c.chambers.size(); ++h) {
        const Chamber& ch = c.chambers[h];
        bool is_hex = ch.cells.size() == 1 && cell_k(c, ch.cells[0]) == 6;
        if (is_hex) {
            ++m.hex_count;
            hex_chambers.push_back(ch.cells[0]);
        }
        std::map<int, bool> ks;
        for (int cid : ch.cells) ks[cell_k(c, cid)] = true;
        for (auto& [k, present] : ks)
            if (present) ++m.ch_k[k];
    }

    if (!hex_chambers.empty()) {
        std::vector<double> d2(hex_chambers.size(), 0.0);
        parallel_for(hex_chambers.size(), [&](std::size_t i) {
            Region rg(as_marked(cell_curve(c, hex_chambers[i])));
            double d = d_hex(rg);
            d2[i] = d * d;
        });
        // deterministic index-order accumulation
        double sum = 0.0;
        for (double v : d2) sum += v;
        m.mean_dhex_sq = sum / static_cast<double>(hex_chambers.size());
    }
    return m;
}

TheoremReport theorem1_report(const Cluster& c, double m_bound, double c0) {
    ClusterMetrics mt = metrics(c);
    TheoremReport rep;
    rep.n = mt.n;
    rep.c0 = c0;
    double sqn = std::sqrt(static_cast<double>(mt.n));
    double t4 = std::pow(12.0, 0.25);
    rep.m = m_bound > 0.0 ? m_bound : (mt.perimeter - t4 * mt.n) / sqn;

    double big = c0 * rep.m * sqn;
    rep.rows.push_back({"hex_count", static_cast<double>(mt.hex_count),
                        mt.n - big, mt.hex_count >= mt.n - big});
    rep.rows.push_back({"mean_dhex_sq", mt.mean_dhex_sq, c0 * rep.m / sqn,
                        mt.mean_dhex_sq <= c0 * rep.m / sqn});
    rep.rows.push_back({"p_ext", mt.p_ext, big, mt.p_ext <= big});
    rep.rows.push_back({"edge_ext", static_cast<double>(mt.edge_ext), big,
                        mt.edge_ext <= big});
    rep.rows.push_back({"void_area", mt.void_area, big, mt.void_area <= big});
    for (auto& [k, count] : mt.ch_k) {
        if (k == 6) continue;
        double bound = big / std::fabs(k - 6.0);
        rep.rows.push_back({"ch_" + std::to_string(k),
                            static_cast<double>(count), bound, count <= bound});
        if (k <= 5 && count > 0) rep.exists_k_le_5 = true;
    }
    rep.all_pass =
        rep.exists_k_le_5 &&
        std::all_of(rep.rows.begin(), rep.rows.end(),
                    [](const TheoremRow& r) { return r.pass; });
    return rep;
}

} // namespace hexakit
