#include "hamsearch/graph.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace hamsearch {

Graph::Graph(int n, bool directed, bool weighted)
    : n_(n), directed_(directed), weighted_(weighted) {
    if (n < 0) throw InputError("vertex count must be nonnegative");
    out_.resize(static_cast<std::size_t>(n) + 1);
    if (directed) in_.resize(static_cast<std::size_t>(n) + 1);
}

void Graph::check_vertex(VertexId u) const {
    if (u < 1 || u > n_)
        throw InputError("vertex id " + std::to_string(u) + " out of range 1.." + std::to_string(n_));
}

bool Graph::has_arc(VertexId u, VertexId v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return arcs_.count(key(u, v)) != 0;
}

double Graph::weight(VertexId u, VertexId v) const {
    if (!weighted_) throw InputError("graph carries no weights");
    auto it = weights_.find(key(u, v));
    if (it == weights_.end())
        throw InputError("no weight for arc (" + std::to_string(u) + "," + std::to_string(v) + ")");
    return it->second;
}

void Graph::insert_arc(VertexId u, VertexId v) {
    arcs_.insert(key(u, v));
    auto& lst = out_[static_cast<std::size_t>(u)];
    lst.insert(std::lower_bound(lst.begin(), lst.end(), v), v);
    if (directed_) {
        auto& il = in_[static_cast<std::size_t>(v)];
        il.insert(std::lower_bound(il.begin(), il.end(), u), u);
    }
}

void Graph::add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InputError("loops are not allowed");
    if (arcs_.count(key(u, v))) throw InputError("duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    insert_arc(u, v);
    if (!directed_) insert_arc(v, u);
    ++edge_count_;
}

void Graph::add_edge(VertexId u, VertexId v, double w) {
    if (!weighted_) throw InputError("graph carries no weights");
    if (w < 0 || !std::isfinite(w)) throw InputError("weights must be finite and nonnegative");
    add_edge(u, v);
    weights_[key(u, v)] = w;
    if (!directed_) weights_[key(v, u)] = w;
}

const std::vector<VertexId>& Graph::out_neighbors(VertexId u) const {
    check_vertex(u);
    return out_[static_cast<std::size_t>(u)];
}

const std::vector<VertexId>& Graph::in_neighbors(VertexId u) const {
    check_vertex(u);
    return directed_ ? in_[static_cast<std::size_t>(u)] : out_[static_cast<std::size_t>(u)];
}

DegreeProfile Graph::degrees() const {
    DegreeProfile p;
    p.deg.assign(static_cast<std::size_t>(n_) + 1, 0);
    p.out_deg.assign(static_cast<std::size_t>(n_) + 1, 0);
    p.in_deg.assign(static_cast<std::size_t>(n_) + 1, 0);
    for (VertexId v = 1; v <= n_; ++v) {
        p.out_deg[static_cast<std::size_t>(v)] = static_cast<int>(out_[static_cast<std::size_t>(v)].size());
        p.in_deg[static_cast<std::size_t>(v)] =
            directed_ ? static_cast<int>(in_[static_cast<std::size_t>(v)].size())
                      : p.out_deg[static_cast<std::size_t>(v)];
        p.deg[static_cast<std::size_t>(v)] =
            directed_ ? p.out_deg[static_cast<std::size_t>(v)] + p.in_deg[static_cast<std::size_t>(v)]
                      : p.out_deg[static_cast<std::size_t>(v)];
    }
    return p;
}

int Graph::degree(VertexId u) const {
    check_vertex(u);
    int out = static_cast<int>(out_[static_cast<std::size_t>(u)].size());
    if (!directed_) return out;
    return out + static_cast<int>(in_[static_cast<std::size_t>(u)].size());
}

int Graph::out_degree(VertexId u) const {
    check_vertex(u);
    return static_cast<int>(out_[static_cast<std::size_t>(u)].size());
}

int Graph::in_degree(VertexId u) const {
    check_vertex(u);
    return directed_ ? static_cast<int>(in_[static_cast<std::size_t>(u)].size())
                     : static_cast<int>(out_[static_cast<std::size_t>(u)].size());
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && directed_ == other.directed_ && weighted_ == other.weighted_ &&
           arcs_ == other.arcs_ && weights_ == other.weights_;
}

namespace {

std::string format_weight(double w) {
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, w);
    (void)ec;
    return std::string(buf, end);
}

struct Tokenizer {
    std::istringstream in;
    int line_no = 0;
    std::string line;

    explicit Tokenizer(const std::string& text) : in(text) {}

    // Next content line split into whitespace tokens; skips blanks/comments.
    bool next(std::vector<std::string>& out_tokens) {
        while (std::getline(in, line)) {
            ++line_no;
            std::size_t pos = line.find('#');
            std::string payload = pos == std::string::npos ? line : line.substr(0, pos);
            std::istringstream ls(payload);
            out_tokens.clear();
            std::string tok;
            while (ls >> tok) out_tokens.push_back(tok);
            if (!out_tokens.empty()) return true;
        }
        return false;
    }
};

long parse_int(const std::string& tok, int line) {
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected integer, got '" + tok + "'");
    return value;
}

double parse_double(const std::string& tok, int line) {
    try {
        std::size_t used = 0;
        double value = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, "expected number, got '" + tok + "'");
    }
}

}  // namespace

Graph parse_graph(const std::string& text) {
    Tokenizer tz(text);
    std::vector<std::string> toks;
    if (!tz.next(toks)) throw ParseError(1, "missing header");
    if (toks.size() != 3) throw ParseError(tz.line_no, "header must be 'n m FLAGS'");
    long n = parse_int(toks[0], tz.line_no);
    long m = parse_int(toks[1], tz.line_no);
    const std::string& flags = toks[2];
    bool directed, weighted;
    if (flags == "U") { directed = false; weighted = false; }
    else if (flags == "D") { directed = true; weighted = false; }
    else if (flags == "UW") { directed = false; weighted = true; }
    else if (flags == "DW") { directed = true; weighted = true; }
    else throw ParseError(tz.line_no, "FLAGS must be one of U, D, UW, DW");
    if (n < 0 || n > 50'000'000) throw ParseError(tz.line_no, "vertex count out of range");
    if (m < 0) throw ParseError(tz.line_no, "edge count out of range");

    Graph g(static_cast<int>(n), directed, weighted);
    for (long i = 0; i < m; ++i) {
        if (!tz.next(toks)) throw ParseError(tz.line_no + 1, "expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
        std::size_t expect = weighted ? 3 : 2;
        if (toks.size() != expect)
            throw ParseError(tz.line_no, weighted ? "expected 'u v w'" : "expected 'u v'");
        long u = parse_int(toks[0], tz.line_no);
        long v = parse_int(toks[1], tz.line_no);
        if (u < 1 || u > n || v < 1 || v > n) throw ParseError(tz.line_no, "vertex id out of range");
        try {
            if (weighted)
                g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v), parse_double(toks[2], tz.line_no));
            else
                g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
        } catch (const InputError& e) {
            throw ParseError(tz.line_no, e.what());
        }
    }
    if (tz.next(toks)) throw ParseError(tz.line_no, "trailing content after " + std::to_string(m) + " edges");
    return g;
}

std::string serialize_graph(const Graph& g) {
    std::string flags = g.directed() ? (g.weighted() ? "DW" : "D") : (g.weighted() ? "UW" : "U");
    std::string out = std::to_string(g.n()) + " " + std::to_string(g.edge_count()) + " " + flags + "\n";
    for (VertexId u = 1; u <= g.n(); ++u) {
        for (VertexId v : g.out_neighbors(u)) {
            if (!g.directed() && v < u) continue;
            out += std::to_string(u) + " " + std::to_string(v);
            if (g.weighted()) out += " " + format_weight(g.weight(u, v));
            out += "\n";
        }
    }
    return out;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_graph(ss.str());
}

void save_graph_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write " + path);
    out << serialize_graph(g);
}

}  // namespace hamsearch
