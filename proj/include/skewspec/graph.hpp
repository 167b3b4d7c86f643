#pragma once
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Graph and orientation data model: simple undirected graphs, orientations
// (one direction per edge), the skew adjacency matrix, switching operations,
// arc-count statistics, generators and file ingestion.
//
// Vertex indices are 0-based everywhere. Edges are kept in canonical form
// (each pair with the smaller endpoint first, list sorted ascending), so graph
// and orientation equality is plain set equality. All values are immutable
// after construction and safe to share across threads.

namespace skew {

using Edge = std::pair<int, int>;
using Arc = std::pair<int, int>;  // (tail, head)

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UndirectedGraph {
public:
    UndirectedGraph() = default;
    // Validates: no loops, no duplicate edges, endpoints in [0, n).
    UndirectedGraph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& degrees() const { return degrees_; }
    int degree(int v) const;
    int max_degree() const;
    double average_degree() const;  // 2m/n, 0 for the empty vertex set
    bool is_regular() const;
    bool is_connected() const;
    bool has_edge(int u, int v) const;
    std::vector<int> neighbors(int v) const;
    // Index of edge {u,v} in the canonical list, or -1.
    int edge_index(int u, int v) const;

    bool operator==(const UndirectedGraph&) const = default;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<int> degrees_;
};

// An orientation is stored as one flag per canonical edge: forward means the
// arc runs from the smaller to the larger endpoint. This makes the arc set a
// pure function of (underlying graph, bit vector), which is what the
// orientation-enumeration machinery counts over.
class OrientedGraph {
public:
    OrientedGraph() = default;
    OrientedGraph(UndirectedGraph underlying, std::vector<std::uint8_t> forward);
    // Validates: arcs project bijectively onto a simple edge set (no loops,
    // no duplicate or opposite arc pairs), endpoints in [0, n).
    static OrientedGraph from_arcs(int n, const std::vector<Arc>& arcs);

    const UndirectedGraph& underlying() const { return underlying_; }
    int vertex_count() const { return underlying_.vertex_count(); }
    int arc_count() const { return underlying_.edge_count(); }
    bool forward(int edge) const { return forward_[edge] != 0; }
    const std::vector<std::uint8_t>& forward_flags() const { return forward_; }
    Arc arc(int edge) const;
    std::vector<Arc> arcs() const;
    int out_degree(int v) const;
    int in_degree(int v) const;
    // Packed orientation bits over canonical edge order (bit e set = edge e
    // reversed, i.e. directed high->low). Requires m <= 64.
    std::uint64_t bits() const;

    bool operator==(const OrientedGraph&) const = default;

private:
    UndirectedGraph underlying_;
    std::vector<std::uint8_t> forward_;
};

// n x n skew-symmetric matrix with entries in {-1, 0, +1}; entry (i,j) = +1
// exactly when (i,j) is an arc.
class SkewMatrix {
public:
    explicit SkewMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}

    int size() const { return n_; }
    int at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }
    const std::vector<std::int8_t>& data() const { return a_; }
    // Inner product of columns i and j, (S_i, S_j) = S_i^T S_j, exact.
    long long column_dot(int i, int j) const;
    // S^T S as a row-major integer matrix (symmetric positive semidefinite).
    std::vector<long long> gram() const;

    bool operator==(const SkewMatrix&) const = default;

private:
    friend SkewMatrix skew_adjacency(const OrientedGraph&);
    void set(int i, int j, int v) { a_[static_cast<std::size_t>(i) * n_ + j] = static_cast<std::int8_t>(v); }

    int n_ = 0;
    std::vector<std::int8_t> a_;
};

SkewMatrix skew_adjacency(const OrientedGraph& o);

// Net degrees d~_i = out-degree minus in-degree; they always sum to zero.
std::vector<int> net_degrees(const OrientedGraph& o);

// Number of arcs with tail in A and head in B. A and B may overlap; arcs
// inside the intersection count. Throws std::out_of_range on a bad index.
long long gamma(const OrientedGraph& o, const std::vector<int>& a, const std::vector<int>& b);

// Reverses every arc with exactly one endpoint in W; an involution that
// preserves the skew spectrum.
OrientedGraph switched(const OrientedGraph& o, const std::vector<int>& w);

// Switches with respect to the in-neighborhood of v, after which every arc
// incident with v has tail v. The result is switching-equivalent to o.
OrientedGraph switched_to_source(const OrientedGraph& o, int v);

// Sub-orientation induced by A, with A relabeled to 0..|A|-1 preserving
// relative order.
OrientedGraph induced_suborientation(const OrientedGraph& o, const std::vector<int>& a);

// --- Generators (deterministic; randomized ones take an explicit seed) ---

UndirectedGraph path_graph(int n);
UndirectedGraph cycle_graph(int n);           // n >= 3
UndirectedGraph star_graph(int n);            // center 0 plus n-1 leaves
UndirectedGraph complete_graph(int n);
UndirectedGraph random_gnp(int n, double p, std::uint64_t seed);
UndirectedGraph random_regular(int n, int d, std::uint64_t seed);  // nd even, d < n
OrientedGraph random_orientation(const UndirectedGraph& g, std::uint64_t seed);
OrientedGraph directed_path(int n);           // arcs i -> i+1
OrientedGraph directed_cycle(int n);          // arcs i -> i+1 mod n
// Orientation of C_n (n even) with exactly one arc reversed relative to the
// directed cycle; satisfies S^T S = 2I.
OrientedGraph odd_oriented_cycle(int n);

// --- File formats ---
//
// Edge list: first line "n m", then m lines "t h" (tail head, 0-based ASCII
// decimal). The undirected variant reads the same layout with unordered
// pairs. graph6: standard ASCII encoding, n <= 62, optional ">>graph6<<"
// prefix. Parse errors carry the offending line number.

OrientedGraph parse_edge_list(std::string_view text);
UndirectedGraph parse_undirected_edge_list(std::string_view text);
std::string to_edge_list(const OrientedGraph& o);
std::string to_edge_list(const UndirectedGraph& g);
UndirectedGraph parse_graph6(std::string_view line);
std::string to_graph6(const UndirectedGraph& g);  // n <= 62

}  // namespace skew
