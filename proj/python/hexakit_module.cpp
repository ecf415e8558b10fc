#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <hexakit/arc_profile.hpp>
#include <hexakit/certifier.hpp>
#include <hexakit/cluster.hpp>
#include <hexakit/cluster_io.hpp>
#include <hexakit/hales.hpp>
#include <hexakit/hexfit.hpp>
#include <hexakit/honeycomb.hpp>
#include <hexakit/polygon_iso.hpp>
#include <hexakit/svg.hpp>

#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;

namespace {

using pair_list = std::vector<std::pair<double, double>>;

std::vector<hexakit::Point> to_points(const pair_list& xy) {
    std::vector<hexakit::Point> out;
    out.reserve(xy.size());
    for (const auto& [x, y] : xy) out.push_back({x, y});
    return out;
}

hexakit::MarkedCurve make_curve(const pair_list& nodes,
                                const std::vector<double>& bulges) {
    return hexakit::MarkedCurve(to_points(nodes), bulges);
}

hexakit::PolyChainCurve make_chain(const pair_list& nodes,
                                   const std::vector<double>& bulges) {
    std::vector<std::size_t> idx(nodes.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    return hexakit::PolyChainCurve(to_points(nodes), bulges, idx);
}

hexakit::Cluster cluster_from_text(const std::string& text) {
    return hexakit::build_cluster(hexakit::parse_cluster_file(text));
}

py::dict validate_dict(const std::string& text, double m) {
    hexakit::ValidationReport rep = hexakit::validate(cluster_from_text(text), m);
    py::list items;
    for (const auto& it : rep.items) {
        py::dict e;
        e["name"] = it.name;
        e["pass"] = it.pass;
        e["detail"] = it.detail;
        items.append(e);
    }
    py::dict out;
    out["pass"] = rep.pass;
    out["items"] = items;
    return out;
}

py::dict report_dict(const std::string& text, double m, double c0) {
    hexakit::Cluster c = cluster_from_text(text);
    hexakit::ClusterMetrics mt = hexakit::metrics(c);
    hexakit::TheoremReport rep = hexakit::theorem1_report(c, m, c0);
    py::dict metrics;
    metrics["hex_count"] = mt.hex_count;
    metrics["p_ext"] = mt.p_ext;
    metrics["edge_ext"] = mt.edge_ext;
    metrics["void_area"] = mt.void_area;
    metrics["mean_dhex_sq"] = mt.mean_dhex_sq;
    py::dict chk;
    for (auto& [k, count] : mt.ch_k) chk[py::int_(k)] = count;
    metrics["ch_k"] = chk;
    py::list rows;
    for (const auto& r : rep.rows) {
        py::dict e;
        e["name"] = r.name;
        e["measured"] = r.measured;
        e["bound"] = r.bound;
        e["pass"] = r.pass;
        rows.append(e);
    }
    py::dict out;
    out["n"] = mt.n;
    out["perimeter"] = mt.perimeter;
    out["m"] = rep.m;
    out["c0"] = rep.c0;
    out["metrics"] = metrics;
    out["rows"] = rows;
    out["exists_k_le_5"] = rep.exists_k_le_5;
    out["all_pass"] = rep.all_pass;
    return out;
}

py::dict certify_dict() {
    hexakit::Certificate cert = hexakit::check_scalar_ledger();
    py::list items;
    for (const auto& it : cert.items) {
        py::dict e;
        e["id"] = it.id;
        e["claim"] = it.claim;
        e["status"] = it.status;
        e["enclosure"] = py::make_tuple(it.enclosure.lo, it.enclosure.hi);
        e["margin"] = it.margin;
        items.append(e);
    }
    py::dict out;
    out["all_certified"] = cert.all_certified;
    out["working_c"] = py::make_tuple(cert.working_c.lo, cert.working_c.hi);
    out["a2"] = py::make_tuple(cert.a2.lo, cert.a2.hi);
    out["items"] = items;
    return out;
}

py::dict fit_dict(const pair_list& nodes, const std::vector<double>& bulges) {
    hexakit::Region rg(make_curve(nodes, bulges));
    hexakit::HexFit fit = hexakit::fit_hexagon(rg);
    py::dict out;
    out["center"] = py::make_tuple(fit.center.x, fit.center.y);
    out["angle"] = fit.angle;
    out["scale"] = fit.scale;
    out["sym_diff"] = fit.sym_diff;
    out["area"] = rg.area;
    return out;
}

} // namespace

PYBIND11_MODULE(_hexakit, m) {
    m.doc() = "low-energy planar cluster toolkit";

    // arc profile
    m.def("arc1", &hexakit::arc1, py::arg("x"),
          "length of the unit-chord circular arc enclosing area x");
    m.def("arc_len", &hexakit::arc_len, py::arg("chord"), py::arg("x"));
    m.def("arc1_deriv", &hexakit::arc1_deriv, py::arg("x"));
    m.def("solve_theta", &hexakit::solve_theta, py::arg("x"));
    m.def("p_of_theta", &hexakit::p_of_theta, py::arg("theta"));

    // constants
    m.def("twelve_quarter", &hexakit::twelve_quarter);
    m.def("hex_unit_circumradius", &hexakit::hex_unit_circumradius);
    m.def("k0_constant", &hexakit::k0_constant);
    m.def("m0_constant", &hexakit::m0_constant);

    // curve functionals; curves are (nodes, bulges) with nodes a list of
    // (x, y) pairs and bulges the per-edge signed secant areas
    m.def(
        "curve_length",
        [](const pair_list& n, const std::vector<double>& b) {
            return hexakit::curve_length(make_curve(n, b));
        },
        py::arg("nodes"), py::arg("bulges"));
    m.def(
        "oriented_area",
        [](const pair_list& n, const std::vector<double>& b) {
            return hexakit::oriented_area(make_curve(n, b));
        },
        py::arg("nodes"), py::arg("bulges"));
    m.def(
        "sigma",
        [](const pair_list& n, const std::vector<double>& b) {
            return hexakit::sigma(make_curve(n, b));
        },
        py::arg("nodes"), py::arg("bulges"));
    m.def(
        "deficit",
        [](const pair_list& n, const std::vector<double>& b) {
            return hexakit::deficit(make_curve(n, b));
        },
        py::arg("nodes"), py::arg("bulges"));
    m.def(
        "quantitative_gap",
        [](const pair_list& n, const std::vector<double>& b) {
            return hexakit::quantitative_gap(make_chain(n, b));
        },
        py::arg("nodes"), py::arg("bulges"));
    m.def(
        "canonicalize",
        [](const pair_list& n, const std::vector<double>& b) {
            hexakit::MarkedCurve r = hexakit::canonicalize(make_chain(n, b));
            pair_list nodes;
            for (const auto& p : r.nodes) nodes.emplace_back(p.x, p.y);
            return py::make_tuple(nodes, r.bulges);
        },
        py::arg("nodes"), py::arg("bulges"));

    // hexagon fitting
    m.def(
        "d_hex",
        [](const pair_list& n, const std::vector<double>& b) {
            return hexakit::d_hex(hexakit::Region(make_curve(n, b)));
        },
        py::arg("nodes"), py::arg("bulges"));
    m.def("fit_hexagon", &fit_dict, py::arg("nodes"), py::arg("bulges"));

    // immersed polygons
    m.def("p_of_k", &hexakit::p_of_k, py::arg("k"));
    m.def(
        "polygon_perimeter",
        [](const pair_list& v) { return hexakit::polygon_perimeter(to_points(v)); },
        py::arg("vertices"));
    m.def(
        "polygon_oriented_area",
        [](const pair_list& v) {
            return hexakit::polygon_oriented_area(to_points(v));
        },
        py::arg("vertices"));
    m.def(
        "immersed_iso_margin",
        [](const pair_list& v) {
            return hexakit::immersed_iso_margin(to_points(v));
        },
        py::arg("vertices"));
    m.def("circle_config_ratio", &hexakit::circle_config_ratio, py::arg("k"),
          py::arg("n"));
    m.def("area_ratio", &hexakit::area_ratio, py::arg("angles"));
    m.def("area_ratio_gradient", &hexakit::area_ratio_gradient, py::arg("angles"));

    // clusters travel as file-format JSON text
    m.def(
        "generate_spiral",
        [](int n, double area, bool smooth) {
            return hexakit::serialize_cluster_file(
                hexakit::spiral_file({n, area, smooth}));
        },
        py::arg("n"), py::arg("hex_area") = 1.0, py::arg("smooth") = false);
    m.def("validate", &validate_dict, py::arg("text"), py::arg("m") = 2.5);
    m.def("report", &report_dict, py::arg("text"), py::arg("m") = 0.0,
          py::arg("c0") = 10.0);
    m.def(
        "perimeter",
        [](const std::string& text) {
            return hexakit::perimeter(cluster_from_text(text));
        },
        py::arg("text"));
    m.def(
        "energy_gap",
        [](const std::string& text) {
            return hexakit::energy_gap(cluster_from_text(text));
        },
        py::arg("text"));
    m.def(
        "euler_residual",
        [](const std::string& text) {
            return hexakit::euler_residual(cluster_from_text(text));
        },
        py::arg("text"));
    m.def(
        "cluster_svg",
        [](const std::string& text) {
            return hexakit::cluster_svg(cluster_from_text(text));
        },
        py::arg("text"));
    m.def("spiral_perimeters", &hexakit::spiral_perimeters, py::arg("n_max"));
    m.def(
        "psi_bounds",
        [](int n) {
            hexakit::PsiBounds b = hexakit::psi_bounds(n);
            return py::make_tuple(b.lower, b.upper);
        },
        py::arg("n"));

    // certification
    m.def("certify", &certify_dict);
}
