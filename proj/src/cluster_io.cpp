#include <hexakit/cluster_io.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace hexakit {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        bad(std::string("missing integer field '") + key + "'");
    return j[key].get<int>();
}

double num_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        bad(std::string("missing numeric field '") + key + "'");
    double v = j[key].get<double>();
    if (!std::isfinite(v)) bad(std::string("non-finite field '") + key + "'");
    return v;
}

} // namespace

ClusterFileV1 parse_cluster_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& ex) {
        bad(std::string("invalid JSON: ") + ex.what());
    }
    if (!j.is_object()) bad("top level must be an object");
    if (!j.contains("version") || j["version"] != 1)
        bad("unsupported or missing version (want 1)");
    for (const char* key : {"vertices", "edges", "cells", "chambers"})
        if (!j.contains(key) || !j[key].is_array())
            bad(std::string("missing array '") + key + "'");

    ClusterFileV1 f;
    for (const json& v : j["vertices"]) {
        if (!v.is_array() || v.size() != 2 || !v[0].is_number() ||
            !v[1].is_number())
            bad("vertex must be [x, y]");
        Point p{v[0].get<double>(), v[1].get<double>()};
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            bad("non-finite vertex");
        f.vertices.push_back(p);
    }
    int nv = static_cast<int>(f.vertices.size());

    for (const json& e : j["edges"]) {
        if (!e.is_object()) bad("edge must be an object");
        FileEdge fe{int_field(e, "v0"), int_field(e, "v1"),
                    num_field(e, "bulge_area")};
        if (fe.v0 < 0 || fe.v0 >= nv || fe.v1 < 0 || fe.v1 >= nv)
            bad("edge endpoint out of range");
        if (fe.v0 == fe.v1) bad("edge endpoints must differ");
        f.edges.push_back(fe);
    }
    int ne = static_cast<int>(f.edges.size());

    for (const json& cj : j["cells"]) {
        if (!cj.is_object() || !cj.contains("edges") || !cj["edges"].is_array())
            bad("cell must be {\"edges\": [[edge, orient], ...]}");
        FileCell fc;
        for (const json& entry : cj["edges"]) {
            if (!entry.is_array() || entry.size() != 2 ||
                !entry[0].is_number_integer() || !entry[1].is_number_integer())
                bad("cell entry must be [edge, orient]");
            int eid = entry[0].get<int>();
            int orient = entry[1].get<int>();
            if (eid < 0 || eid >= ne) bad("cell references unknown edge");
            if (orient != 1 && orient != -1) bad("orient must be +-1");
            fc.edges.emplace_back(eid, orient);
        }
        if (fc.edges.empty()) bad("cell without edges");
        f.cells.push_back(std::move(fc));
    }
    int nc = static_cast<int>(f.cells.size());

    int exterior_seen = 0;
    for (const json& hj : j["chambers"]) {
        if (!hj.is_object() || !hj.contains("cells") || !hj["cells"].is_array())
            bad("chamber must be {\"cells\": [...], ...}");
        FileChamber fh;
        for (const json& cid : hj["cells"]) {
            if (!cid.is_number_integer()) bad("chamber cell id must be integer");
            int id = cid.get<int>();
            if (id < 0 || id >= nc) bad("chamber references unknown cell");
            fh.cells.push_back(id);
        }
        if (hj.contains("exterior")) {
            if (!hj["exterior"].is_boolean()) bad("exterior must be boolean");
            fh.exterior = hj["exterior"].get<bool>();
        }
        if (fh.exterior) {
            ++exterior_seen;
            fh.infinite_cell = int_field(hj, "infinite_cell");
            if (std::find(fh.cells.begin(), fh.cells.end(), fh.infinite_cell) ==
                fh.cells.end())
                bad("infinite_cell must be one of the chamber's cells");
        } else if (hj.contains("infinite_cell")) {
            bad("infinite_cell only belongs to the exterior chamber");
        }
        f.chambers.push_back(std::move(fh));
    }
    if (exterior_seen != 1) bad("need exactly one exterior chamber");
    return f;
}

std::string serialize_cluster_file(const ClusterFileV1& f) {
    ordered_json j;
    j["version"] = 1;
    ordered_json verts = ordered_json::array();
    for (const Point& p : f.vertices) verts.push_back({p.x, p.y});
    j["vertices"] = std::move(verts);

    ordered_json edges = ordered_json::array();
    for (const FileEdge& e : f.edges) {
        ordered_json ej;
        ej["v0"] = e.v0;
        ej["v1"] = e.v1;
        ej["bulge_area"] = e.bulge_area;
        edges.push_back(std::move(ej));
    }
    j["edges"] = std::move(edges);

    ordered_json cells = ordered_json::array();
    for (const FileCell& c : f.cells) {
        ordered_json entries = ordered_json::array();
        for (auto [e, o] : c.edges) entries.push_back({e, o});
        ordered_json cj;
        cj["edges"] = std::move(entries);
        cells.push_back(std::move(cj));
    }
    j["cells"] = std::move(cells);

    ordered_json chambers = ordered_json::array();
    for (const FileChamber& h : f.chambers) {
        ordered_json hj;
        hj["cells"] = h.cells;
        hj["exterior"] = h.exterior;
        if (h.exterior) hj["infinite_cell"] = h.infinite_cell;
        chambers.push_back(std::move(hj));
    }
    j["chambers"] = std::move(chambers);
    return j.dump(1) + "\n";
}

namespace {

struct RunStep {
    int edge = -1;
    int dir = 0; // +1 when walked v0 -> v1
};

} // namespace

Cluster build_cluster(const ClusterFileV1& f) {
    int nv = static_cast<int>(f.vertices.size());
    int ne = static_cast<int>(f.edges.size());

    std::vector<int> deg(nv, 0);
    std::vector<std::vector<int>> adj(nv);
    for (int e = 0; e < ne; ++e) {
        ++deg[f.edges[e].v0];
        ++deg[f.edges[e].v1];
        adj[f.edges[e].v0].push_back(e);
        adj[f.edges[e].v1].push_back(e);
    }
    auto far_end = [&](int e, int v) {
        return f.edges[e].v0 == v ? f.edges[e].v1 : f.edges[e].v0;
    };
    auto other_at = [&](int v, int not_edge) {
        return adj[v][0] == not_edge ? adj[v][1] : adj[v][0];
    };

    Cluster out;
    std::vector<int> chain_of(ne, -1);
    std::vector<int> dir_in_chain(ne, 0);
    std::vector<char> visited(ne, 0);

    for (int seed = 0; seed < ne; ++seed) {
        if (visited[seed]) continue;
        visited[seed] = 1;
        std::vector<RunStep> run{{seed, 1}};
        std::vector<int> verts{f.edges[seed].v0, f.edges[seed].v1};

        bool closed = false;
        while (deg[verts.back()] == 2) { // grow forward
            int v = verts.back();
            int nxt = other_at(v, run.back().edge);
            if (visited[nxt]) {
                // only the seed edge can reappear, closing a cycle
                closed = verts.front() == verts.back();
                break;
            }
            visited[nxt] = 1;
            run.push_back({nxt, f.edges[nxt].v0 == v ? 1 : -1});
            verts.push_back(far_end(nxt, v));
            if (verts.back() == verts.front() && deg[verts.front()] == 2) {
                closed = true;
                break;
            }
        }
        if (!closed) {
            while (deg[verts.front()] == 2) { // grow backward
                int v = verts.front();
                int nxt = other_at(v, run.front().edge);
                if (visited[nxt]) break;
                visited[nxt] = 1;
                run.insert(run.begin(), {nxt, f.edges[nxt].v1 == v ? 1 : -1});
                verts.insert(verts.begin(), far_end(nxt, v));
            }
        }

        auto reverse_run = [&]() {
            std::reverse(run.begin(), run.end());
            for (RunStep& s : run) s.dir = -s.dir;
            std::reverse(verts.begin(), verts.end());
        };

        EdgeChain chain;
        if (closed) {
            verts.pop_back(); // cyclic list; last repeats the first
            std::size_t m = run.size();
            std::size_t anchor = static_cast<std::size_t>(
                std::min_element(verts.begin(), verts.end()) - verts.begin());
            // canonical direction: walk toward the smaller neighbor first
            int succ = verts[(anchor + 1) % m];
            int pred = verts[(anchor + m - 1) % m];
            if (pred < succ) {
                reverse_run();
                anchor = m - 1 - anchor;
            }
            std::rotate(run.begin(), run.begin() + anchor, run.end());
            std::rotate(verts.begin(), verts.begin() + anchor, verts.end());
            chain.v0 = chain.v1 = -1;
            for (std::size_t i = 0; i < m; ++i) {
                chain.interior.push_back(f.vertices[verts[i]]);
                chain.bulges.push_back(run[i].dir *
                                       f.edges[run[i].edge].bulge_area);
            }
        } else {
            if (verts.front() > verts.back()) reverse_run();
            chain.v0 = verts.front();
            chain.v1 = verts.back();
            for (std::size_t i = 1; i + 1 < verts.size(); ++i)
                chain.interior.push_back(f.vertices[verts[i]]);
            for (const RunStep& s : run)
                chain.bulges.push_back(s.dir * f.edges[s.edge].bulge_area);
        }
        int cid = static_cast<int>(out.edges.size());
        for (const RunStep& s : run) {
            chain_of[s.edge] = cid;
            dir_in_chain[s.edge] = s.dir;
        }
        out.edges.push_back(std::move(chain));
    }

    // cells: rewrite raw loops onto chains; a full chain traversal consumes
    // arc_count consecutive raw entries of equal (chain, direction)
    for (const FileCell& fc : f.cells) {
        std::size_t m = fc.edges.size();
        std::vector<std::pair<int, int>> mapped(m);
        for (std::size_t i = 0; i < m; ++i) {
            auto [e, d] = fc.edges[i];
            mapped[i] = {chain_of[e], d * dir_in_chain[e]};
        }
        // rotate to a group boundary so no traversal straddles the wrap
        std::size_t start = 0;
        for (std::size_t i = 0; i < m; ++i) {
            if (mapped[i] != mapped[(i + m - 1) % m]) {
                start = i;
                break;
            }
        }
        Cell cell;
        std::size_t i = 0;
        while (i < m) {
            std::size_t j = i;
            auto cur = mapped[(start + i) % m];
            while (j < m && mapped[(start + j) % m] == cur) ++j;
            std::size_t len = j - i;
            std::size_t ac = out.edges[cur.first].arc_count();
            if (len % ac != 0) bad("cell enters an edge chain mid-run");
            for (std::size_t t = 0; t < len / ac; ++t)
                cell.loop.emplace_back(cur.first, cur.second);
            i = j;
        }
        out.cells.push_back(std::move(cell));
    }

    // keep non-merged vertices (degree-2 junctions vanish into chains)
    std::vector<int> remap(nv, -1);
    for (int v = 0; v < nv; ++v) {
        if (deg[v] == 2) {
            ++out.merged_vertex_count;
            continue;
        }
        remap[v] = static_cast<int>(out.vertices.size());
        out.vertices.push_back(f.vertices[v]);
    }
    for (EdgeChain& e : out.edges) {
        if (e.is_loop()) continue;
        e.v0 = remap[e.v0];
        e.v1 = remap[e.v1];
    }

    for (const FileChamber& fh : f.chambers) {
        Chamber ch;
        ch.cells = fh.cells;
        ch.exterior = fh.exterior;
        ch.infinite_cell = fh.infinite_cell;
        out.chambers.push_back(std::move(ch));
    }

    check_structure(out);
    return out;
}

ClusterFileV1 read_cluster_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) bad("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_cluster_file(buf.str());
}

Cluster load_cluster(const std::string& path) {
    ClusterFileV1 f = read_cluster_file(path);
    try {
        return build_cluster(f);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception& ex) {
        bad(std::string("malformed cluster: ") + ex.what());
    }
}

void write_text_atomic(const std::string& path, const std::string& text) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out << text;
        if (!out.good())
            throw std::runtime_error("short write to '" + tmp.string() + "'");
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp);
        throw std::runtime_error("cannot rename into '" + path + "'");
    }
}

} // namespace hexakit
