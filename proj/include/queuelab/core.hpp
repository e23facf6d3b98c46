#pragma once

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace queuelab {

// Edge of an ordered graph, normalized so left <= right.
// left == right encodes a loop.
struct OrderedEdge {
    int left = 0;
    int right = 0;
    friend auto operator<=>(const OrderedEdge&, const OrderedEdge&) = default;
};

// Normalizes an endpoint pair; endpoints are 1-based.
OrderedEdge normalize_edge(int u, int v);

// True iff f lies strictly inside e: left(e) < left(f) and right(f) < right(e).
// Strict on both sides, so edges sharing an endpoint never nest.
inline bool is_nested(OrderedEdge e, OrderedEdge f)
{
    return e.left < f.left && f.right < e.right;
}

inline bool are_nested(OrderedEdge e, OrderedEdge f)
{
    return is_nested(e, f) || is_nested(f, e);
}

// Graph on the ordered vertex set {1..n}; loops allowed, no parallel edges.
// Edges are kept in canonical order (left asc, right asc), so enumeration
// and serialization are deterministic. Immutable after construction.
class OrderedGraph {
public:
    OrderedGraph() = default;
    OrderedGraph(int n, std::vector<OrderedEdge> edges);

    int vertex_count() const { return n_; }
    const std::vector<OrderedEdge>& edges() const { return edges_; }
    bool has_edge(OrderedEdge e) const;

    // Maps every vertex v to n+1-v; nesting structure is preserved.
    OrderedGraph reversed() const;

    friend bool operator==(const OrderedGraph&, const OrderedGraph&) = default;

private:
    int n_ = 0;
    std::vector<OrderedEdge> edges_;
};

// Abstract graph on labelled vertices 1..n. When simple is set, loops are
// rejected. Stores a sorted edge list plus adjacency lists (loops appear
// once in the list of their vertex and count twice toward the degree).
class LabelledGraph {
public:
    LabelledGraph() = default;
    LabelledGraph(int n, std::vector<OrderedEdge> edges, bool simple = true);

    int vertex_count() const { return n_; }
    bool simple() const { return simple_; }
    const std::vector<OrderedEdge>& edges() const { return edges_; }
    bool has_edge(int u, int v) const;

    // neighbors(v) is sorted ascending; index 0 of the outer vector is unused.
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    std::vector<int> degrees() const;
    bool is_regular(int delta) const;

    friend bool operator==(const LabelledGraph&, const LabelledGraph&) = default;

private:
    int n_ = 0;
    bool simple_ = true;
    std::vector<OrderedEdge> edges_;
    std::vector<std::vector<int>> adj_;
};

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& message);
    int line;
};

// Text format: first line "n"; each further non-empty line "u v" (1-based);
// loops as "v v"; lines starting with '#' are ignored.
OrderedGraph read_ordered_graph(std::istream& in);
OrderedGraph read_ordered_graph_file(const std::string& path);
LabelledGraph read_labelled_graph(std::istream& in, bool simple = true);
LabelledGraph read_labelled_graph_file(const std::string& path, bool simple = true);

// Canonical serialization: "n\n" then one "left right\n" per edge in
// canonical order. Parsing the output reproduces the same bytes.
std::string to_text(const OrderedGraph& g);
std::string to_text(const LabelledGraph& g);

} // namespace queuelab
