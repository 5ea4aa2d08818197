#include "hamsearch/contraction.hpp"

#include <algorithm>
#include <set>

namespace hamsearch {

std::string RVertex::name() const {
    std::string s;
    for (VertexId v : path) {
        if (!s.empty()) s += '-';
        s += std::to_string(v);
    }
    return s;
}

std::string ContractedGraph::display_name(VertexId prime_id) const {
    if (is_r(prime_id)) return r_of(prime_id).name();
    return std::to_string(from_prime[static_cast<std::size_t>(prime_id)]);
}

VertexId ContractedGraph::enter_endpoint(VertexId prime_id, Orientation o) const {
    if (!is_r(prime_id)) return from_prime[static_cast<std::size_t>(prime_id)];
    const RVertex& r = r_of(prime_id);
    return o == Orientation::Forward ? r.first() : r.last();
}

VertexId ContractedGraph::exit_endpoint(VertexId prime_id, Orientation o) const {
    if (!is_r(prime_id)) return from_prime[static_cast<std::size_t>(prime_id)];
    const RVertex& r = r_of(prime_id);
    return o == Orientation::Forward ? r.last() : r.first();
}

namespace {

struct ForcedStructure {
    std::vector<std::vector<VertexId>> chains;  // each with >= 3 vertices
    std::vector<char> interior;                 // original id -> 1 if chain interior
    std::vector<VertexId> chain_of;             // original id -> chain index + 1, 0 = none
};

// Walk maximal paths and cycles of the forced subgraph. forced_nbrs[v] holds
// the forced neighbors (forward arcs only, for digraphs, with forced_preds
// supplied separately).
ForcedStructure collect_chains_undirected(const Graph& g) {
    const int n = g.n();
    std::vector<std::vector<VertexId>> forced(static_cast<std::size_t>(n) + 1);
    for (VertexId v = 1; v <= n; ++v) {
        if (g.degree(v) != 2) continue;
        for (VertexId w : g.neighbors(v)) {
            auto& fv = forced[static_cast<std::size_t>(v)];
            auto& fw = forced[static_cast<std::size_t>(w)];
            if (std::find(fv.begin(), fv.end(), w) == fv.end()) fv.push_back(w);
            if (std::find(fw.begin(), fw.end(), v) == fw.end()) fw.push_back(v);
        }
    }
    for (VertexId v = 1; v <= n; ++v)
        if (forced[static_cast<std::size_t>(v)].size() > 2)
            throw ContractError("vertex " + std::to_string(v) +
                                " is forced onto more than two circuit edges; no Hamilton circuit exists");

    ForcedStructure fs;
    fs.interior.assign(static_cast<std::size_t>(n) + 1, 0);
    fs.chain_of.assign(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);

    // Maximal paths start at vertices with exactly one forced edge.
    for (VertexId v = 1; v <= n; ++v) {
        if (visited[static_cast<std::size_t>(v)] || forced[static_cast<std::size_t>(v)].size() != 1) continue;
        std::vector<VertexId> path{v};
        visited[static_cast<std::size_t>(v)] = 1;
        VertexId prev = v, cur = forced[static_cast<std::size_t>(v)].front();
        while (true) {
            path.push_back(cur);
            visited[static_cast<std::size_t>(cur)] = 1;
            const auto& fn = forced[static_cast<std::size_t>(cur)];
            if (fn.size() == 1) break;
            VertexId next = fn[0] == prev ? fn[1] : fn[0];
            prev = cur;
            cur = next;
        }
        if (path.back() < path.front()) std::reverse(path.begin(), path.end());
        fs.chains.push_back(std::move(path));
    }
    // Whatever forced vertices remain lie on forced cycles.
    for (VertexId v = 1; v <= n; ++v) {
        if (visited[static_cast<std::size_t>(v)] || forced[static_cast<std::size_t>(v)].empty()) continue;
        std::vector<VertexId> cyc{v};
        visited[static_cast<std::size_t>(v)] = 1;
        VertexId prev = v, cur = forced[static_cast<std::size_t>(v)].front();
        while (cur != v) {
            cyc.push_back(cur);
            visited[static_cast<std::size_t>(cur)] = 1;
            const auto& fn = forced[static_cast<std::size_t>(cur)];
            VertexId next = fn[0] == prev ? fn[1] : fn[0];
            prev = cur;
            cur = next;
        }
        if (static_cast<int>(cyc.size()) == n) throw TriviallyHamiltonian(std::move(cyc));
        throw ContractError("forced edges close a cycle of length " + std::to_string(cyc.size()) +
                            " through vertex " + std::to_string(v) + "; no Hamilton circuit exists");
    }

    for (std::size_t ci = 0; ci < fs.chains.size(); ++ci) {
        const auto& path = fs.chains[ci];
        for (std::size_t k = 0; k < path.size(); ++k) {
            fs.chain_of[static_cast<std::size_t>(path[k])] = static_cast<VertexId>(ci + 1);
            if (k > 0 && k + 1 < path.size()) fs.interior[static_cast<std::size_t>(path[k])] = 1;
        }
    }
    std::sort(fs.chains.begin(), fs.chains.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    // chain_of must follow the sort.
    for (std::size_t ci = 0; ci < fs.chains.size(); ++ci)
        for (VertexId v : fs.chains[ci]) fs.chain_of[static_cast<std::size_t>(v)] = static_cast<VertexId>(ci + 1);
    return fs;
}

ForcedStructure collect_chains_directed(const Graph& g) {
    const int n = g.n();
    std::vector<VertexId> forced_out(static_cast<std::size_t>(n) + 1, 0),
        forced_in(static_cast<std::size_t>(n) + 1, 0);
    auto set_forced_out = [&](VertexId u, VertexId v) {
        VertexId& slot = forced_out[static_cast<std::size_t>(u)];
        if (slot != 0 && slot != v)
            throw ContractError("vertex " + std::to_string(u) +
                                " is forced onto two outgoing circuit arcs; no Hamilton cycle exists");
        slot = v;
    };
    auto set_forced_in = [&](VertexId v, VertexId u) {
        VertexId& slot = forced_in[static_cast<std::size_t>(v)];
        if (slot != 0 && slot != u)
            throw ContractError("vertex " + std::to_string(v) +
                                " is forced onto two incoming circuit arcs; no Hamilton cycle exists");
        slot = u;
    };
    for (VertexId v = 1; v <= n; ++v) {
        if (g.out_degree(v) != 1 || g.in_degree(v) != 1) continue;
        VertexId succ = g.out_neighbors(v).front();
        VertexId pred = g.in_neighbors(v).front();
        set_forced_out(v, succ);
        set_forced_in(succ, v);
        set_forced_in(v, pred);
        set_forced_out(pred, v);
    }

    ForcedStructure fs;
    fs.interior.assign(static_cast<std::size_t>(n) + 1, 0);
    fs.chain_of.assign(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> visited(static_cast<std::size_t>(n) + 1, 0);

    for (VertexId v = 1; v <= n; ++v) {
        if (visited[static_cast<std::size_t>(v)]) continue;
        if (forced_out[static_cast<std::size_t>(v)] == 0 || forced_in[static_cast<std::size_t>(v)] != 0) continue;
        // v starts a maximal forced path.
        std::vector<VertexId> path{v};
        visited[static_cast<std::size_t>(v)] = 1;
        VertexId cur = forced_out[static_cast<std::size_t>(v)];
        while (true) {
            path.push_back(cur);
            visited[static_cast<std::size_t>(cur)] = 1;
            if (forced_out[static_cast<std::size_t>(cur)] == 0) break;
            cur = forced_out[static_cast<std::size_t>(cur)];
        }
        fs.chains.push_back(std::move(path));
    }
    for (VertexId v = 1; v <= n; ++v) {
        if (visited[static_cast<std::size_t>(v)] || forced_out[static_cast<std::size_t>(v)] == 0) continue;
        std::vector<VertexId> cyc{v};
        visited[static_cast<std::size_t>(v)] = 1;
        VertexId cur = forced_out[static_cast<std::size_t>(v)];
        while (cur != v) {
            cyc.push_back(cur);
            visited[static_cast<std::size_t>(cur)] = 1;
            cur = forced_out[static_cast<std::size_t>(cur)];
        }
        if (static_cast<int>(cyc.size()) == n) throw TriviallyHamiltonian(std::move(cyc));
        throw ContractError("forced arcs close a cycle of length " + std::to_string(cyc.size()) +
                            " through vertex " + std::to_string(v) + "; no Hamilton cycle exists");
    }

    std::sort(fs.chains.begin(), fs.chains.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    for (std::size_t ci = 0; ci < fs.chains.size(); ++ci) {
        const auto& path = fs.chains[ci];
        for (std::size_t k = 0; k < path.size(); ++k) {
            fs.chain_of[static_cast<std::size_t>(path[k])] = static_cast<VertexId>(ci + 1);
            if (k > 0 && k + 1 < path.size()) fs.interior[static_cast<std::size_t>(path[k])] = 1;
        }
    }
    return fs;
}

ContractedGraph assemble(const Graph& g, ForcedStructure fs, bool directed) {
    const int n = g.n();
    ContractedGraph cg;
    cg.original = g;
    cg.to_prime.assign(static_cast<std::size_t>(n) + 1, 0);

    std::vector<VertexId> passthrough;
    for (VertexId v = 1; v <= n; ++v)
        if (fs.chain_of[static_cast<std::size_t>(v)] == 0) passthrough.push_back(v);

    const int n_prime = static_cast<int>(passthrough.size() + fs.chains.size());
    if (n_prime == 1) {
        // one chain swallowed everything: a circuit exists only through the
        // endpoint-to-endpoint arc
        const auto& path = fs.chains.front();
        if (g.has_arc(path.back(), path.front())) throw TriviallyHamiltonian(path);
        throw ContractError("degenerate after contraction");
    }
    if (n_prime < 2) throw ContractError("degenerate after contraction");

    cg.from_prime.assign(static_cast<std::size_t>(n_prime) + 1, 0);
    VertexId next_id = 1;
    for (VertexId v : passthrough) {
        cg.to_prime[static_cast<std::size_t>(v)] = next_id;
        cg.from_prime[static_cast<std::size_t>(next_id)] = v;
        ++next_id;
    }
    for (std::size_t ci = 0; ci < fs.chains.size(); ++ci) {
        RVertex r;
        r.id = next_id;
        r.path = fs.chains[ci];
        for (VertexId v : r.path) cg.to_prime[static_cast<std::size_t>(v)] = next_id;
        cg.r_index_[next_id] = cg.r_vertices.size();
        cg.r_vertices.push_back(std::move(r));
        ++next_id;
    }

    auto chain_index = [&](VertexId v) { return fs.chain_of[static_cast<std::size_t>(v)]; };
    auto is_first_of_chain = [&](VertexId v) {
        VertexId c = chain_index(v);
        return c != 0 && fs.chains[static_cast<std::size_t>(c - 1)].front() == v;
    };
    auto is_last_of_chain = [&](VertexId v) {
        VertexId c = chain_index(v);
        return c != 0 && fs.chains[static_cast<std::size_t>(c - 1)].back() == v;
    };

    std::set<std::pair<VertexId, VertexId>> arcs;
    for (VertexId u = 1; u <= n; ++u) {
        for (VertexId v : g.out_neighbors(u)) {
            if (!directed && v < u) continue;
            if (fs.interior[static_cast<std::size_t>(u)] || fs.interior[static_cast<std::size_t>(v)]) continue;
            if (chain_index(u) != 0 && chain_index(u) == chain_index(v)) continue;  // shortcut / chain arc
            if (directed) {
                // keep only arcs terminating in a chain head or leaving a chain tail
                if (chain_index(u) != 0 && !is_last_of_chain(u)) continue;
                if (chain_index(v) != 0 && !is_first_of_chain(v)) continue;
            }
            VertexId a = cg.to_prime[static_cast<std::size_t>(u)];
            VertexId b = cg.to_prime[static_cast<std::size_t>(v)];
            if (a == b) continue;
            if (directed)
                arcs.insert({a, b});
            else
                arcs.insert({std::min(a, b), std::max(a, b)});
        }
    }

    Graph gp(n_prime, directed);
    for (const auto& [a, b] : arcs) gp.add_edge(a, b);
    cg.g_prime = std::move(gp);
    return cg;
}

}  // namespace

ContractedGraph contract(const Graph& g) {
    if (g.directed()) throw InputError("contract expects an undirected graph");
    return assemble(g, collect_chains_undirected(g), false);
}

ContractedGraph contract_digraph(const Graph& d) {
    if (!d.directed()) throw InputError("contract_digraph expects a directed graph");
    return assemble(d, collect_chains_directed(d), true);
}

namespace {

Orientation orient_of(const OrientationMap& m, VertexId id) {
    auto it = m.find(id);
    return it == m.end() ? Orientation::Forward : it->second;
}

}  // namespace

Tour expand_tour(const ContractedGraph& cg, const Tour& t_prime, const OrientationMap& orientations) {
    if (t_prime.n() != cg.g_prime.n()) throw InputError("expand_tour: tour does not match contracted graph");
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(cg.original.n()));
    for (VertexId node : t_prime.order()) {
        if (!cg.is_r(node)) {
            out.push_back(cg.from_prime[static_cast<std::size_t>(node)]);
            continue;
        }
        const RVertex& r = cg.r_of(node);
        if (orient_of(orientations, node) == Orientation::Forward)
            out.insert(out.end(), r.path.begin(), r.path.end());
        else
            out.insert(out.end(), r.path.rbegin(), r.path.rend());
    }
    Tour expanded = Tour::from_order(out);
    for (VertexId v = 1; v <= expanded.n(); ++v)
        if (!cg.original.has_arc(v, expanded.succ(v)))
            throw InputError("unexpandable tour: (" + std::to_string(v) + "," +
                             std::to_string(expanded.succ(v)) + ") is not an arc of the original graph");
    return expanded;
}

std::optional<OrientationMap> infer_orientations(const ContractedGraph& cg, const Tour& t_prime) {
    const auto order = t_prime.order();
    const int N = static_cast<int>(order.size());
    auto states_of = [&](VertexId node) { return cg.is_r(node) ? 2 : 1; };
    auto ok = [&](VertexId a, int sa, VertexId b, int sb) {
        VertexId from = cg.exit_endpoint(a, sa == 0 ? Orientation::Forward : Orientation::Reversed);
        VertexId to = cg.enter_endpoint(b, sb == 0 ? Orientation::Forward : Orientation::Reversed);
        return cg.original.has_arc(from, to);
    };

    // Cyclic chain of per-node orientation states; try both anchors.
    for (int anchor = 0; anchor < states_of(order[0]); ++anchor) {
        std::vector<std::array<int, 2>> back(static_cast<std::size_t>(N), {-1, -1});
        std::array<bool, 2> feasible{false, false};
        feasible[static_cast<std::size_t>(anchor)] = true;
        std::vector<std::array<bool, 2>> layer(static_cast<std::size_t>(N));
        layer[0] = feasible;
        for (int i = 1; i < N; ++i) {
            layer[static_cast<std::size_t>(i)] = {false, false};
            for (int sb = 0; sb < states_of(order[static_cast<std::size_t>(i)]); ++sb)
                for (int sa = 0; sa < states_of(order[static_cast<std::size_t>(i - 1)]); ++sa)
                    if (layer[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(sa)] &&
                        ok(order[static_cast<std::size_t>(i - 1)], sa, order[static_cast<std::size_t>(i)], sb) &&
                        back[static_cast<std::size_t>(i)][static_cast<std::size_t>(sb)] < 0) {
                        layer[static_cast<std::size_t>(i)][static_cast<std::size_t>(sb)] = true;
                        back[static_cast<std::size_t>(i)][static_cast<std::size_t>(sb)] = sa;
                    }
        }
        for (int slast = 0; slast < states_of(order[static_cast<std::size_t>(N - 1)]); ++slast) {
            if (!layer[static_cast<std::size_t>(N - 1)][static_cast<std::size_t>(slast)]) continue;
            if (!ok(order[static_cast<std::size_t>(N - 1)], slast, order[0], anchor)) continue;
            OrientationMap result;
            int s = slast;
            for (int i = N - 1; i >= 0; --i) {
                VertexId node = order[static_cast<std::size_t>(i)];
                if (cg.is_r(node))
                    result[node] = s == 0 ? Orientation::Forward : Orientation::Reversed;
                s = i > 0 ? back[static_cast<std::size_t>(i)][static_cast<std::size_t>(s)] : s;
            }
            return result;
        }
    }
    return std::nullopt;
}

Tour map_tour_to_contracted(const ContractedGraph& cg, const Tour& t) {
    if (t.n() != cg.original.n()) throw InputError("map_tour_to_contracted: tour does not match original graph");
    std::vector<VertexId> order = t.order();
    // Rotate so the walk starts on a node boundary.
    int cut = 0;
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
        VertexId prev = order[static_cast<std::size_t>((i + order.size() - 1) % order.size())];
        if (cg.to_prime[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] !=
            cg.to_prime[static_cast<std::size_t>(prev)]) {
            cut = i;
            break;
        }
    }
    std::rotate(order.begin(), order.begin() + cut, order.end());

    std::vector<VertexId> compressed;
    std::size_t i = 0;
    while (i < order.size()) {
        VertexId node = cg.to_prime[static_cast<std::size_t>(order[i])];
        std::size_t j = i;
        while (j < order.size() && cg.to_prime[static_cast<std::size_t>(order[j])] == node) ++j;
        if (cg.is_r(node)) {
            const RVertex& r = cg.r_of(node);
            std::vector<VertexId> run(order.begin() + static_cast<long>(i), order.begin() + static_cast<long>(j));
            std::vector<VertexId> rev(run.rbegin(), run.rend());
            if (run != r.path && rev != r.path)
                throw InputError("tour does not traverse r-vertex " + r.name() + " contiguously");
        }
        compressed.push_back(node);
        i = j;
    }
    return Tour::from_order(compressed);
}

}  // namespace hamsearch
