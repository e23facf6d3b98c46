#include "queuelab/core.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace queuelab {

OrderedEdge normalize_edge(int u, int v)
{
    if (u < 1 || v < 1)
        throw std::invalid_argument("vertex indices are 1-based, got " + std::to_string(u) +
                                    " " + std::to_string(v));
    return u <= v ? OrderedEdge{u, v} : OrderedEdge{v, u};
}

namespace {

void check_edges(int n, std::vector<OrderedEdge>& edges, const char* what)
{
    if (n < 0)
        throw std::invalid_argument(std::string(what) + ": negative vertex count");
    for (const auto& e : edges) {
        if (e.left > e.right)
            throw std::invalid_argument(std::string(what) + ": edge not normalized");
        if (e.left < 1 || e.right > n)
            throw std::invalid_argument(std::string(what) + ": endpoint out of range 1.." +
                                        std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument(std::string(what) + ": duplicate edge");
}

} // namespace

OrderedGraph::OrderedGraph(int n, std::vector<OrderedEdge> edges)
    : n_(n), edges_(std::move(edges))
{
    check_edges(n_, edges_, "OrderedGraph");
}

bool OrderedGraph::has_edge(OrderedEdge e) const
{
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

OrderedGraph OrderedGraph::reversed() const
{
    std::vector<OrderedEdge> rev;
    rev.reserve(edges_.size());
    for (const auto& e : edges_)
        rev.push_back({n_ + 1 - e.right, n_ + 1 - e.left});
    return OrderedGraph(n_, std::move(rev));
}

LabelledGraph::LabelledGraph(int n, std::vector<OrderedEdge> edges, bool simple)
    : n_(n), simple_(simple), edges_(std::move(edges))
{
    check_edges(n_, edges_, "LabelledGraph");
    if (simple_) {
        for (const auto& e : edges_)
            if (e.left == e.right)
                throw std::invalid_argument("LabelledGraph: loop in simple graph");
    }
    adj_.assign(n_ + 1, {});
    for (const auto& e : edges_) {
        adj_[e.left].push_back(e.right);
        if (e.left != e.right)
            adj_[e.right].push_back(e.left);
    }
    for (auto& nbrs : adj_)
        std::sort(nbrs.begin(), nbrs.end());
}

bool LabelledGraph::has_edge(int u, int v) const
{
    OrderedEdge e = normalize_edge(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::vector<int> LabelledGraph::degrees() const
{
    std::vector<int> deg(n_ + 1, 0);
    for (const auto& e : edges_) {
        deg[e.left] += 1;
        deg[e.right] += 1; // loop counts twice
    }
    return deg;
}

bool LabelledGraph::is_regular(int delta) const
{
    auto deg = degrees();
    for (int v = 1; v <= n_; ++v)
        if (deg[v] != delta)
            return false;
    return true;
}

ParseError::ParseError(int line_no, const std::string& message)
    : std::runtime_error("line " + std::to_string(line_no) + ": " + message), line(line_no)
{
}

namespace {

struct RawGraph {
    int n = 0;
    std::vector<OrderedEdge> edges;
    std::vector<int> edge_lines; // source line of each edge, for error reports
};

RawGraph parse_graph_text(std::istream& in)
{
    RawGraph raw;
    std::string line;
    int line_no = 0;
    bool have_n = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first) || first[0] == '#')
            continue;
        if (!have_n) {
            try {
                std::size_t pos = 0;
                raw.n = std::stoi(first, &pos);
                if (pos != first.size() || raw.n < 0)
                    throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError(line_no, "expected vertex count, got '" + first + "'");
            }
            std::string extra;
            if (ls >> extra)
                throw ParseError(line_no, "trailing tokens after vertex count");
            have_n = true;
            continue;
        }
        int u = 0, v = 0;
        std::istringstream es(line);
        if (!(es >> u >> v))
            throw ParseError(line_no, "expected 'u v', got '" + line + "'");
        std::string extra;
        if (es >> extra)
            throw ParseError(line_no, "trailing tokens after edge");
        if (u < 1 || v < 1 || u > raw.n || v > raw.n)
            throw ParseError(line_no, "vertex out of range 1.." + std::to_string(raw.n));
        raw.edges.push_back(normalize_edge(u, v));
        raw.edge_lines.push_back(line_no);
    }
    if (!have_n)
        throw ParseError(line_no == 0 ? 1 : line_no, "missing vertex count");
    // duplicate detection reports the later of the two source lines
    for (std::size_t i = 0; i < raw.edges.size(); ++i)
        for (std::size_t j = i + 1; j < raw.edges.size(); ++j)
            if (raw.edges[i] == raw.edges[j])
                throw ParseError(raw.edge_lines[j],
                                 "duplicate edge " + std::to_string(raw.edges[j].left) + " " +
                                     std::to_string(raw.edges[j].right));
    return raw;
}

} // namespace

OrderedGraph read_ordered_graph(std::istream& in)
{
    RawGraph raw = parse_graph_text(in);
    return OrderedGraph(raw.n, std::move(raw.edges));
}

LabelledGraph read_labelled_graph(std::istream& in, bool simple)
{
    RawGraph raw = parse_graph_text(in);
    if (simple) {
        for (std::size_t i = 0; i < raw.edges.size(); ++i)
            if (raw.edges[i].left == raw.edges[i].right)
                throw ParseError(raw.edge_lines[i], "loop forbidden in simple graph");
    }
    return LabelledGraph(raw.n, std::move(raw.edges), simple);
}

namespace {

template <typename Graph>
Graph read_file(const std::string& path, Graph (*reader)(std::istream&))
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return reader(in);
}

std::string edges_to_text(int n, const std::vector<OrderedEdge>& edges)
{
    std::string out = std::to_string(n) + "\n";
    for (const auto& e : edges)
        out += std::to_string(e.left) + " " + std::to_string(e.right) + "\n";
    return out;
}

} // namespace

OrderedGraph read_ordered_graph_file(const std::string& path)
{
    return read_file(path, read_ordered_graph);
}

LabelledGraph read_labelled_graph_file(const std::string& path, bool simple)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return read_labelled_graph(in, simple);
}

std::string to_text(const OrderedGraph& g)
{
    return edges_to_text(g.vertex_count(), g.edges());
}

std::string to_text(const LabelledGraph& g)
{
    return edges_to_text(g.vertex_count(), g.edges());
}

} // namespace queuelab
