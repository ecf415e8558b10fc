#include <hexakit/certifier.hpp>
#include <hexakit/cluster.hpp>
#include <hexakit/cluster_io.hpp>
#include <hexakit/hexfit.hpp>
#include <hexakit/honeycomb.hpp>
#include <hexakit/polygon_iso.hpp>
#include <hexakit/svg.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

namespace {

using hexakit::Cluster;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitBadInput = 2;

ordered_json validation_json(const hexakit::ValidationReport& rep) {
    ordered_json j;
    j["pass"] = rep.pass;
    j["items"] = ordered_json::array();
    for (const auto& it : rep.items) {
        ordered_json e;
        e["name"] = it.name;
        e["pass"] = it.pass;
        e["detail"] = it.detail;
        j["items"].push_back(e);
    }
    return j;
}

void print_validation(const hexakit::ValidationReport& rep) {
    for (const auto& it : rep.items) {
        std::cout << "  " << it.name << ": " << (it.pass ? "pass" : "FAIL");
        if (!it.detail.empty()) std::cout << " (" << it.detail << ")";
        std::cout << "\n";
    }
    std::cout << "validate: " << (rep.pass ? "PASS" : "FAIL") << "\n";
}

int cmd_validate(const std::string& path, double m, bool as_json) {
    Cluster c = hexakit::load_cluster(path);
    hexakit::ValidationReport rep = hexakit::validate(c, m);
    if (as_json)
        std::cout << validation_json(rep).dump(1) << "\n";
    else
        print_validation(rep);
    return rep.pass ? kExitOk : kExitCheckFailed;
}

int cmd_report(const std::string& path, double m, double c0, bool as_json) {
    Cluster c = hexakit::load_cluster(path);
    hexakit::ClusterMetrics mt = hexakit::metrics(c);
    hexakit::TheoremReport rep = hexakit::theorem1_report(c, m, c0);
    if (as_json) {
        ordered_json j;
        j["n"] = mt.n;
        j["perimeter"] = mt.perimeter;
        j["m"] = rep.m;
        j["c0"] = rep.c0;
        ordered_json met;
        met["hex_count"] = mt.hex_count;
        met["p_ext"] = mt.p_ext;
        met["edge_ext"] = mt.edge_ext;
        met["void_area"] = mt.void_area;
        met["mean_dhex_sq"] = mt.mean_dhex_sq;
        ordered_json chk = ordered_json::object();
        for (auto& [k, count] : mt.ch_k) chk[std::to_string(k)] = count;
        met["ch_k"] = std::move(chk);
        j["metrics"] = std::move(met);
        j["rows"] = ordered_json::array();
        for (const auto& r : rep.rows) {
            ordered_json e;
            e["name"] = r.name;
            e["measured"] = r.measured;
            e["bound"] = r.bound;
            e["pass"] = r.pass;
            j["rows"].push_back(e);
        }
        j["exists_k_le_5"] = rep.exists_k_le_5;
        j["all_pass"] = rep.all_pass;
        std::cout << j.dump(1) << "\n";
    } else {
        std::printf("N = %d  P = %.12g  M = %.12g  C0 = %.12g\n", mt.n,
                    mt.perimeter, rep.m, rep.c0);
        for (const auto& r : rep.rows)
            std::printf("  %-14s measured = %-16.10g bound = %-16.10g %s\n",
                        r.name.c_str(), r.measured, r.bound,
                        r.pass ? "pass" : "FAIL");
        std::printf("  some chamber with k <= 5: %s\n",
                    rep.exists_k_le_5 ? "yes" : "NO");
        std::printf("report: %s\n", rep.all_pass ? "PASS" : "FAIL");
    }
    return rep.all_pass ? kExitOk : kExitCheckFailed;
}

int cmd_generate(int n, double area, bool smooth, const std::string& out) {
    hexakit::SpiralSpec spec;
    spec.n = n;
    spec.hex_area = area;
    spec.smooth_boundary = smooth;
    std::string text = hexakit::serialize_cluster_file(hexakit::spiral_file(spec));
    if (out.empty()) {
        std::cout << text;
    } else {
        hexakit::write_text_atomic(out, text);
        std::cerr << "wrote " << out << "\n";
    }
    return kExitOk;
}

int cmd_certify(const std::string& out, int grid, bool tamper) {
    hexakit::Certificate cert =
        tamper ? hexakit::check_scalar_ledger(0.2) : hexakit::check_scalar_ledger();
    std::vector<hexakit::CheckResult> scans;
    if (grid > 0) scans = hexakit::scan_rows(grid);
    std::string text = hexakit::certificate_json(cert, scans);
    int certified = 0;
    for (const auto& it : cert.items) certified += it.status == "certified";
    if (out.empty()) {
        std::cout << text << "\n";
    } else {
        hexakit::write_text_atomic(out, text + "\n");
        std::printf("certified %d/%zu items; working_c in [%.17g, %.17g]\n",
                    certified, cert.items.size(), cert.working_c.lo,
                    cert.working_c.hi);
        for (const auto& it : cert.items)
            if (it.status != "certified")
                std::printf("  %s: %s\n", it.id.c_str(), it.status.c_str());
    }
    return cert.all_certified ? kExitOk : kExitCheckFailed;
}

int cmd_dhex(const std::string& path) {
    Cluster c = hexakit::load_cluster(path);
    ordered_json rows = ordered_json::array();
    double sum_sq = 0.0;
    int hexes = 0;
    for (std::size_t h = 1; h < c.chambers.size(); ++h) {
        if (c.chambers[h].cells.size() != 1) continue;
        int cid = c.chambers[h].cells[0];
        hexakit::Region rg(as_marked(cell_curve(c, cid)));
        hexakit::HexFit fit = hexakit::fit_hexagon(rg);
        int k = cell_k(c, cid);
        ordered_json e;
        e["chamber"] = h;
        e["k"] = k;
        e["area"] = rg.area;
        e["d_hex"] = fit.sym_diff;
        e["center"] = {fit.center.x, fit.center.y};
        e["angle"] = fit.angle;
        e["scale"] = fit.scale;
        rows.push_back(std::move(e));
        if (k == 6) {
            sum_sq += fit.sym_diff * fit.sym_diff;
            ++hexes;
        }
    }
    ordered_json j;
    j["chambers"] = std::move(rows);
    j["hex_count"] = hexes;
    j["mean_dhex_sq"] = hexes > 0 ? sum_sq / hexes : 0.0;
    std::cout << j.dump(1) << "\n";
    return kExitOk;
}

int cmd_polyiso(int count, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> kdist(3, 12);
    std::uniform_real_distribution<double> coord(0.0, 1.0);
    double min_rel = 1e300, min_margin = 1e300;
    int worst_k = 0;
    for (int t = 0; t < count; ++t) {
        int k = kdist(rng);
        std::vector<hexakit::Point> v;
        while (static_cast<int>(v.size()) < k) {
            hexakit::Point p{coord(rng), coord(rng)};
            if (!v.empty() && hexakit::dist(v.back(), p) < 1e-9) continue;
            v.push_back(p);
        }
        if (hexakit::dist(v.front(), v.back()) < 1e-9) {
            --t;
            continue;
        }
        double per = hexakit::polygon_perimeter(v);
        double margin = hexakit::immersed_iso_margin(v);
        double rel = margin / (per * per);
        if (rel < min_rel) {
            min_rel = rel;
            min_margin = margin;
            worst_k = k;
        }
    }
    bool pass = min_rel >= -1e-9;
    ordered_json j;
    j["count"] = count;
    j["seed"] = seed;
    j["min_margin"] = min_margin;
    j["min_margin_rel"] = min_rel;
    j["worst_k"] = worst_k;
    j["pass"] = pass;
    std::cout << j.dump(1) << "\n";
    return pass ? kExitOk : kExitCheckFailed;
}

int cmd_plot(const std::string& path, const std::string& out) {
    Cluster c = hexakit::load_cluster(path);
    std::string svg = hexakit::cluster_svg(c);
    if (out.empty()) {
        std::cout << svg;
    } else {
        hexakit::write_text_atomic(out, svg);
        std::cerr << "wrote " << out << "\n";
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hexakit: low-energy planar cluster toolkit"};
    app.require_subcommand(1);

    std::string path, out;
    double m_validate = 2.5, m_report = 0.0, c0 = 10.0, area = 1.0;
    int n = 7, grid = 0, count = 1000;
    unsigned long long seed = 1;
    bool as_json = false, smooth = false, tamper = false;

    auto* v = app.add_subcommand("validate", "class conditions C1-C5 on a cluster file");
    v->add_option("path", path, "cluster JSON file")->required();
    v->add_option("--M", m_validate, "perimeter-bound constant (default 2.5)");
    v->add_flag("--json", as_json, "machine-readable output");

    auto* r = app.add_subcommand("report", "structure-theorem metrics and bounds");
    r->add_option("path", path, "cluster JSON file")->required();
    r->add_option("--M", m_report, "gap constant; <= 0 means measured");
    r->add_option("--C0", c0, "bound multiplier (default 10)");
    r->add_flag("--json", as_json, "machine-readable output");

    auto* g = app.add_subcommand("generate", "spiral honeycomb cluster file");
    g->add_option("--N", n, "number of chambers")->required()->check(CLI::PositiveNumber);
    g->add_option("--area", area, "chamber area (default 1)");
    g->add_flag("--smooth", smooth, "bulge boundary edges outward");
    g->add_option("--out", out, "output path (default stdout)");

    auto* ce = app.add_subcommand("certify", "run the scalar-inequality ledger");
    ce->add_option("--out", out, "certificate path (default stdout)");
    ce->add_option("--grid", grid, "add heuristic scan rows at this resolution");
    ce->add_flag("--tamper", tamper)->group(""); // test hook: breaks constant a

    auto* dh = app.add_subcommand("dhex", "hexagon-fit distances per chamber");
    dh->add_option("path", path, "cluster JSON file")->required();

    auto* pi = app.add_subcommand("polyiso", "random immersed-polygon inequality trials");
    pi->add_option("--random", count, "number of trials")->required();
    pi->add_option("--seed", seed, "RNG seed (default 1)");

    auto* pl = app.add_subcommand("plot", "render a cluster file as SVG");
    pl->add_option("path", path, "cluster JSON file")->required();
    pl->add_option("--out", out, "SVG path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (v->parsed()) return cmd_validate(path, m_validate, as_json);
        if (r->parsed()) return cmd_report(path, m_report, c0, as_json);
        if (g->parsed()) return cmd_generate(n, area, smooth, out);
        if (ce->parsed()) return cmd_certify(out, grid, tamper);
        if (dh->parsed()) return cmd_dhex(path);
        if (pi->parsed()) return cmd_polyiso(count, seed);
        if (pl->parsed()) return cmd_plot(path, out);
    } catch (const hexakit::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitOk;
}
