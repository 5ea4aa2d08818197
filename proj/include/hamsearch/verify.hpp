#pragma once

#include "hamsearch/graph.hpp"
#include "hamsearch/tour.hpp"

namespace hamsearch {

// Independent Hamilton-circuit check: t is a single n-cycle over g's vertex
// set (guaranteed by the Tour type) and every tour arc is a graph arc.
inline bool verify_hamiltonian(const Graph& g, const Tour& t) {
    if (g.n() != t.n()) throw InputError("graph and tour sizes differ");
    for (VertexId v = 1; v <= t.n(); ++v)
        if (!g.has_arc(v, t.succ(v))) return false;
    return true;
}

inline Tour parse_tour(const std::string& line) {
    std::vector<VertexId> order;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\n' || line[i] == '\r')) ++i;
        if (i >= line.size() || line[i] == '#') break;
        std::size_t start = i;
        long val = 0;
        bool any = false;
        while (i < line.size() && line[i] >= '0' && line[i] <= '9') {
            val = val * 10 + (line[i] - '0');
            ++i;
            any = true;
        }
        if (!any || (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\n' && line[i] != '\r'))
            throw InputError("bad tour token at offset " + std::to_string(start));
        order.push_back(static_cast<VertexId>(val));
    }
    return Tour::from_order(order);
}

inline std::string serialize_tour(const Tour& t) {
    std::string out;
    for (VertexId v : t.order()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    out += '\n';
    return out;
}

}  // namespace hamsearch
