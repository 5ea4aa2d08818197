#pragma once

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hamsearch/graph.hpp"
#include "hamsearch/tour.hpp"

namespace hamsearch {

struct ContractError : InputError {
    explicit ContractError(const std::string& what) : InputError(what) {}
};

// Raised when the input graph is exactly one cycle: it is its own Hamilton
// circuit and there is nothing to contract or search.
struct TriviallyHamiltonian : InputError {
    explicit TriviallyHamiltonian(std::vector<VertexId> circuit_order)
        : InputError("graph is a single cycle (trivially Hamiltonian)"),
          order(std::move(circuit_order)) {}
    std::vector<VertexId> order;
};

// A collapsed chain: endpoints plus the interior vertices every Hamilton
// circuit is forced to traverse in order.
struct RVertex {
    VertexId id = 0;               // id in the contracted graph
    std::vector<VertexId> path;    // original vertices, endpoint to endpoint
    VertexId first() const { return path.front(); }
    VertexId last() const { return path.back(); }
    std::string name() const;      // "v1-v2-...-vr"
};

enum class Orientation { Forward, Reversed };
using OrientationMap = std::map<VertexId, Orientation>;

struct ContractedGraph {
    Graph original;
    Graph g_prime;
    std::vector<RVertex> r_vertices;        // sorted by id
    std::vector<VertexId> to_prime;         // original id -> contracted id
    std::vector<VertexId> from_prime;       // contracted id -> original id; 0 for r-vertices

    bool is_r(VertexId prime_id) const { return r_index_.count(prime_id) != 0; }
    const RVertex& r_of(VertexId prime_id) const { return r_vertices[r_index_.at(prime_id)]; }
    std::string display_name(VertexId prime_id) const;

    // Endpoint of a node seen by an incoming / outgoing original arc under
    // the given orientation. Passthrough nodes are their own endpoint.
    VertexId enter_endpoint(VertexId prime_id, Orientation o) const;
    VertexId exit_endpoint(VertexId prime_id, Orientation o) const;

    std::unordered_map<VertexId, std::size_t> r_index_;
};

// Collapse maximal chains whose interior vertices carry exactly two usable
// edges. The endpoint-to-endpoint shortcut edge is dropped; so is every
// non-chain edge at an interior vertex. Throws TriviallyHamiltonian when the
// graph is one cycle, ContractError on graphs that cannot carry a Hamilton
// circuit or that collapse below 3 vertices.
ContractedGraph contract(const Graph& g);

// Directed analogue; r-vertices keep the fixed orientation first -> last.
// Non-chain arcs emanating from the first vertex or terminating in the last
// are dropped.
ContractedGraph contract_digraph(const Graph& d);

// Replace every r-vertex of a contracted-graph circuit by its path in the
// given orientation (missing entries mean Forward). Throws InputError
// ("unexpandable tour") when a boundary arc is not an arc of the original.
Tour expand_tour(const ContractedGraph& cg, const Tour& t_prime, const OrientationMap& orientations);

// A consistent orientation assignment for the r-vertices on t_prime, or
// nullopt when none exists. Deterministic (prefers Forward).
std::optional<OrientationMap> infer_orientations(const ContractedGraph& cg, const Tour& t_prime);

// Collapse a Hamilton circuit of the original graph onto the contracted
// graph. Throws when the tour does not traverse some chain contiguously.
Tour map_tour_to_contracted(const ContractedGraph& cg, const Tour& t);

}  // namespace hamsearch
