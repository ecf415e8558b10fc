#pragma once

#include <hexakit/cluster.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hexakit {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// On-disk form: every edge a single arc, degree-2 vertices permitted.
// {version:1, vertices:[[x,y]..], edges:[{v0,v1,bulge_area}..],
//  cells:[{edges:[[edge,orient]..]}..],
//  chambers:[{cells:[..], exterior:bool, infinite_cell?:int}..]}
struct FileEdge {
    int v0 = 0;
    int v1 = 0;
    double bulge_area = 0.0;
};

struct FileCell {
    std::vector<std::pair<int, int>> edges;
};

struct FileChamber {
    std::vector<int> cells;
    bool exterior = false;
    int infinite_cell = -1;
};

struct ClusterFileV1 {
    std::vector<Point> vertices;
    std::vector<FileEdge> edges;
    std::vector<FileCell> cells;
    std::vector<FileChamber> chambers;
};

// Strict parse; any structural defect throws ParseError.
ClusterFileV1 parse_cluster_file(const std::string& text);

// Canonical bytes: parse(serialize(f)) round-trips exactly.
std::string serialize_cluster_file(const ClusterFileV1& f);

// In-memory model: maximal runs through degree-2 vertices become one edge
// chain (closed runs become free loops), consumed vertices are dropped and
// counted in merged_vertex_count.  Cell loops are rewritten onto the chains.
Cluster build_cluster(const ClusterFileV1& f);

ClusterFileV1 read_cluster_file(const std::string& path); // ParseError on IO
Cluster load_cluster(const std::string& path);

// Temp file in the target directory, then rename.
void write_text_atomic(const std::string& path, const std::string& text);

} // namespace hexakit
