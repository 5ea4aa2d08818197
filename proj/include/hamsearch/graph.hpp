#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace hamsearch {

// Vertex ids are dense 1..n.
using VertexId = int;

struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_no(line) {}
    int line_no;
};

struct DegreeProfile {
    std::vector<int> deg;      // undirected degree (directed: in+out)
    std::vector<int> out_deg;  // 1-indexed; entry 0 unused
    std::vector<int> in_deg;
};

// Immutable after construction (the builder interface is add_edge/add_arc
// before first query); safe to share read-only across threads.
class Graph {
public:
    Graph() : Graph(0, false) {}
    Graph(int n, bool directed, bool weighted = false);

    int n() const { return n_; }
    bool directed() const { return directed_; }
    bool weighted() const { return weighted_; }
    int edge_count() const { return edge_count_; }

    // Loop queries (u == v) return false; loops are never stored.
    bool has_arc(VertexId u, VertexId v) const;
    double weight(VertexId u, VertexId v) const;

    // add_edge on a directed graph adds the single arc (u, v).
    void add_edge(VertexId u, VertexId v);
    void add_edge(VertexId u, VertexId v, double w);

    // Neighbor lists are sorted ascending; for undirected graphs all three
    // accessors return the same list.
    const std::vector<VertexId>& out_neighbors(VertexId u) const;
    const std::vector<VertexId>& in_neighbors(VertexId u) const;
    const std::vector<VertexId>& neighbors(VertexId u) const { return out_neighbors(u); }

    DegreeProfile degrees() const;
    int degree(VertexId u) const;      // undirected degree / total degree
    int out_degree(VertexId u) const;
    int in_degree(VertexId u) const;

    bool operator==(const Graph& other) const;

    void check_vertex(VertexId u) const;

private:
    static std::uint64_t key(VertexId u, VertexId v) {
        return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
               static_cast<std::uint32_t>(v);
    }
    void insert_arc(VertexId u, VertexId v);

    int n_ = 0;
    bool directed_ = false;
    bool weighted_ = false;
    int edge_count_ = 0;  // edges (undirected) or arcs (directed)
    std::vector<std::vector<VertexId>> out_;
    std::vector<std::vector<VertexId>> in_;
    std::unordered_set<std::uint64_t> arcs_;
    std::unordered_map<std::uint64_t, double> weights_;
};

// Text format: header "n m FLAGS" with FLAGS in {U, D, UW, DW}, then m lines
// "u v" or "u v w". Lines starting with '#' are comments. Serialization is
// canonical: edges sorted ascending (u < v for undirected).
Graph parse_graph(const std::string& text);
std::string serialize_graph(const Graph& g);

Graph load_graph_file(const std::string& path);
void save_graph_file(const Graph& g, const std::string& path);

}  // namespace hamsearch
