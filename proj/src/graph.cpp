#include "skewspec/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "skewspec/rng.hpp"

namespace skew {

namespace {

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n) {
        throw std::out_of_range(std::string(what) + ": vertex " + std::to_string(v) +
                                " out of range [0, " + std::to_string(n) + ")");
    }
}

std::vector<char> make_mask(int n, const std::vector<int>& vs, const char* what) {
    std::vector<char> mask(n, 0);
    for (int v : vs) {
        check_vertex(v, n, what);
        mask[v] = 1;
    }
    return mask;
}

}  // namespace

UndirectedGraph::UndirectedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw std::invalid_argument("UndirectedGraph: negative vertex count");
    for (auto& [u, v] : edges_) {
        check_vertex(u, n, "UndirectedGraph");
        check_vertex(v, n, "UndirectedGraph");
        if (u == v) throw std::invalid_argument("UndirectedGraph: loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
        throw std::invalid_argument("UndirectedGraph: duplicate edge");
    }
    degrees_.assign(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++degrees_[u];
        ++degrees_[v];
    }
}

int UndirectedGraph::degree(int v) const {
    check_vertex(v, n_, "degree");
    return degrees_[v];
}

int UndirectedGraph::max_degree() const {
    return degrees_.empty() ? 0 : *std::max_element(degrees_.begin(), degrees_.end());
}

double UndirectedGraph::average_degree() const {
    return n_ == 0 ? 0.0 : 2.0 * edge_count() / n_;
}

bool UndirectedGraph::is_regular() const {
    return n_ == 0 || std::all_of(degrees_.begin(), degrees_.end(),
                                  [&](int d) { return d == degrees_[0]; });
}

bool UndirectedGraph::is_connected() const {
    if (n_ <= 1) return true;
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int components = n_;
    for (const auto& [u, v] : edges_) {
        int ru = find(u), rv = find(v);
        if (ru != rv) {
            parent[ru] = rv;
            --components;
        }
    }
    return components == 1;
}

bool UndirectedGraph::has_edge(int u, int v) const {
    return edge_index(u, v) >= 0;
}

int UndirectedGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || *it != Edge{u, v}) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::vector<int> UndirectedGraph::neighbors(int v) const {
    check_vertex(v, n_, "neighbors");
    std::vector<int> out;
    for (const auto& [a, b] : edges_) {
        if (a == v) out.push_back(b);
        else if (b == v) out.push_back(a);
    }
    return out;
}

OrientedGraph::OrientedGraph(UndirectedGraph underlying, std::vector<std::uint8_t> forward)
    : underlying_(std::move(underlying)), forward_(std::move(forward)) {
    if (static_cast<int>(forward_.size()) != underlying_.edge_count()) {
        throw std::invalid_argument("OrientedGraph: one direction flag per edge required");
    }
}

OrientedGraph OrientedGraph::from_arcs(int n, const std::vector<Arc>& arcs) {
    std::vector<Edge> edges(arcs.begin(), arcs.end());
    UndirectedGraph g(n, std::move(edges));  // rejects loops, duplicate and opposite arc pairs
    std::vector<std::uint8_t> forward(g.edge_count(), 0);
    for (const auto& [t, h] : arcs) {
        forward[g.edge_index(t, h)] = t < h ? 1 : 0;
    }
    return OrientedGraph(std::move(g), std::move(forward));
}

Arc OrientedGraph::arc(int edge) const {
    const auto& [u, v] = underlying_.edges()[edge];
    return forward_[edge] ? Arc{u, v} : Arc{v, u};
}

std::vector<Arc> OrientedGraph::arcs() const {
    std::vector<Arc> out(arc_count());
    for (int e = 0; e < arc_count(); ++e) out[e] = arc(e);
    return out;
}

int OrientedGraph::out_degree(int v) const {
    int d = 0;
    for (int e = 0; e < arc_count(); ++e) d += arc(e).first == v;
    return d;
}

int OrientedGraph::in_degree(int v) const {
    int d = 0;
    for (int e = 0; e < arc_count(); ++e) d += arc(e).second == v;
    return d;
}

std::uint64_t OrientedGraph::bits() const {
    if (arc_count() > 64) throw std::invalid_argument("bits: more than 64 arcs");
    std::uint64_t b = 0;
    for (int e = 0; e < arc_count(); ++e) {
        if (!forward_[e]) b |= std::uint64_t{1} << e;
    }
    return b;
}

SkewMatrix skew_adjacency(const OrientedGraph& o) {
    SkewMatrix s(o.vertex_count());
    for (int e = 0; e < o.arc_count(); ++e) {
        const auto [t, h] = o.arc(e);
        s.set(t, h, 1);
        s.set(h, t, -1);
    }
    return s;
}

long long SkewMatrix::column_dot(int i, int j) const {
    long long dot = 0;
    for (int k = 0; k < n_; ++k) dot += static_cast<long long>(at(k, i)) * at(k, j);
    return dot;
}

std::vector<long long> SkewMatrix::gram() const {
    std::vector<long long> g(static_cast<std::size_t>(n_) * n_, 0);
    for (int k = 0; k < n_; ++k) {
        for (int i = 0; i < n_; ++i) {
            const int ski = at(k, i);
            if (ski == 0) continue;
            for (int j = 0; j < n_; ++j) {
                g[static_cast<std::size_t>(i) * n_ + j] += static_cast<long long>(ski) * at(k, j);
            }
        }
    }
    return g;
}

std::vector<int> net_degrees(const OrientedGraph& o) {
    std::vector<int> d(o.vertex_count(), 0);
    for (int e = 0; e < o.arc_count(); ++e) {
        const auto [t, h] = o.arc(e);
        ++d[t];
        --d[h];
    }
    return d;
}

long long gamma(const OrientedGraph& o, const std::vector<int>& a, const std::vector<int>& b) {
    const int n = o.vertex_count();
    const auto in_a = make_mask(n, a, "gamma");
    const auto in_b = make_mask(n, b, "gamma");
    long long count = 0;
    for (int e = 0; e < o.arc_count(); ++e) {
        const auto [t, h] = o.arc(e);
        count += in_a[t] && in_b[h];
    }
    return count;
}

OrientedGraph switched(const OrientedGraph& o, const std::vector<int>& w) {
    const auto in_w = make_mask(o.vertex_count(), w, "switched");
    auto forward = o.forward_flags();
    const auto& edges = o.underlying().edges();
    for (std::size_t e = 0; e < forward.size(); ++e) {
        if (in_w[edges[e].first] != in_w[edges[e].second]) forward[e] ^= 1;
    }
    return OrientedGraph(o.underlying(), std::move(forward));
}

OrientedGraph switched_to_source(const OrientedGraph& o, int v) {
    check_vertex(v, o.vertex_count(), "switched_to_source");
    std::vector<int> in_neighbors;
    for (int e = 0; e < o.arc_count(); ++e) {
        const auto [t, h] = o.arc(e);
        if (h == v) in_neighbors.push_back(t);
    }
    return switched(o, in_neighbors);
}

OrientedGraph induced_suborientation(const OrientedGraph& o, const std::vector<int>& a) {
    const int n = o.vertex_count();
    const auto in_a = make_mask(n, a, "induced_suborientation");
    std::vector<int> relabel(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (in_a[v]) relabel[v] = next++;
    }
    std::vector<Arc> arcs;
    for (int e = 0; e < o.arc_count(); ++e) {
        const auto [t, h] = o.arc(e);
        if (in_a[t] && in_a[h]) arcs.emplace_back(relabel[t], relabel[h]);
    }
    return OrientedGraph::from_arcs(next, arcs);
}

UndirectedGraph path_graph(int n) {
    if (n < 0) throw std::invalid_argument("path_graph: negative n");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: need n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star_graph: need n >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(0, i);
    return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph complete_graph(int n) {
    if (n < 0) throw std::invalid_argument("complete_graph: negative n");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph random_gnp(int n, double p, std::uint64_t seed) {
    if (n < 0 || p < 0.0 || p > 1.0) throw std::invalid_argument("random_gnp: bad parameters");
    Rng rng(seed);
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.next_bool(p)) edges.emplace_back(i, j);
    return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph random_regular(int n, int d, std::uint64_t seed) {
    if (n < 0 || d < 0 || d >= std::max(n, 1) || (static_cast<long long>(n) * d) % 2 != 0) {
        throw std::invalid_argument("random_regular: infeasible parameters");
    }
    if (d == 0) return UndirectedGraph(n, {});
    Rng rng(seed);
    // Pairing model: shuffle nd half-edge stubs, pair consecutively, retry on
    // loops or multi-edges.
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * d);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        stubs.clear();
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < d; ++k) stubs.push_back(v);
        for (std::size_t i = stubs.size(); i > 1; --i) {
            std::swap(stubs[i - 1], stubs[rng.next_below(i)]);
        }
        std::vector<Edge> edges;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) ok = false;
            else edges.emplace_back(std::min(u, v), std::max(u, v));
        }
        if (!ok) continue;
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) continue;
        return UndirectedGraph(n, std::move(edges));
    }
    throw std::runtime_error("random_regular: pairing model failed to converge");
}

OrientedGraph random_orientation(const UndirectedGraph& g, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::uint8_t> forward(g.edge_count());
    for (auto& f : forward) f = rng.next_u64() & 1;
    return OrientedGraph(g, std::move(forward));
}

OrientedGraph directed_path(int n) {
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
    return OrientedGraph::from_arcs(n, arcs);
}

OrientedGraph directed_cycle(int n) {
    if (n < 3) throw std::invalid_argument("directed_cycle: need n >= 3");
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i) arcs.emplace_back(i, (i + 1) % n);
    return OrientedGraph::from_arcs(n, arcs);
}

OrientedGraph odd_oriented_cycle(int n) {
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("odd_oriented_cycle: need even n >= 4");
    std::vector<Arc> arcs;
    for (int i = 0; i + 1 < n; ++i) arcs.emplace_back(i, i + 1);
    arcs.emplace_back(0, n - 1);  // the reversed arc
    return OrientedGraph::from_arcs(n, arcs);
}

namespace {

struct LineReader {
    std::string_view text;
    std::size_t pos = 0;
    int line_no = 0;

    // Returns the next non-empty line, or empty optional at end.
    bool next(std::string_view& out) {
        while (pos < text.size()) {
            std::size_t eol = text.find('\n', pos);
            if (eol == std::string_view::npos) eol = text.size();
            std::string_view line = text.substr(pos, eol - pos);
            pos = eol + 1;
            ++line_no;
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            if (line.find_first_not_of(" \t") != std::string_view::npos) {
                out = line;
                return true;
            }
        }
        return false;
    }
};

std::pair<int, int> parse_int_pair(std::string_view line, int line_no) {
    int vals[2];
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (int k = 0; k < 2; ++k) {
        while (p < end && (*p == ' ' || *p == '\t')) ++p;
        auto [next, ec] = std::from_chars(p, end, vals[k]);
        if (ec != std::errc{} || next == p) {
            throw ParseError("line " + std::to_string(line_no) + ": expected two integers");
        }
        p = next;
    }
    while (p < end && (*p == ' ' || *p == '\t')) ++p;
    if (p != end) throw ParseError("line " + std::to_string(line_no) + ": trailing characters");
    return {vals[0], vals[1]};
}

std::vector<Arc> parse_pair_lines(std::string_view text) {
    LineReader reader{text};
    std::string_view line;
    if (!reader.next(line)) throw ParseError("line 1: missing \"n m\" header");
    const auto [n, m] = parse_int_pair(line, reader.line_no);
    if (n < 0 || m < 0) throw ParseError("line " + std::to_string(reader.line_no) + ": malformed header");
    std::vector<Arc> arcs;
    arcs.reserve(m);
    // Stash n in a sentinel so both parsers share this walk.
    arcs.emplace_back(n, m);
    for (int k = 0; k < m; ++k) {
        if (!reader.next(line)) {
            throw ParseError("line " + std::to_string(reader.line_no + 1) + ": expected " +
                             std::to_string(m) + " arc lines, got " + std::to_string(k));
        }
        const auto [t, h] = parse_int_pair(line, reader.line_no);
        if (t < 0 || t >= n || h < 0 || h >= n) {
            throw ParseError("line " + std::to_string(reader.line_no) + ": vertex index out of range");
        }
        arcs.emplace_back(t, h);
    }
    if (reader.next(line)) {
        throw ParseError("line " + std::to_string(reader.line_no) + ": trailing data");
    }
    return arcs;
}

}  // namespace

OrientedGraph parse_edge_list(std::string_view text) {
    auto arcs = parse_pair_lines(text);
    const int n = arcs.front().first;
    arcs.erase(arcs.begin());
    try {
        return OrientedGraph::from_arcs(n, arcs);
    } catch (const std::exception& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

UndirectedGraph parse_undirected_edge_list(std::string_view text) {
    auto pairs = parse_pair_lines(text);
    const int n = pairs.front().first;
    pairs.erase(pairs.begin());
    try {
        return UndirectedGraph(n, std::move(pairs));
    } catch (const std::exception& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

std::string to_edge_list(const OrientedGraph& o) {
    std::string out = std::to_string(o.vertex_count()) + " " + std::to_string(o.arc_count()) + "\n";
    for (int e = 0; e < o.arc_count(); ++e) {
        const auto [t, h] = o.arc(e);
        out += std::to_string(t) + " " + std::to_string(h) + "\n";
    }
    return out;
}

std::string to_edge_list(const UndirectedGraph& g) {
    std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

UndirectedGraph parse_graph6(std::string_view line) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (line.substr(0, kHeader.size()) == kHeader) line.remove_prefix(kHeader.size());
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.empty()) throw ParseError("graph6: empty input");
    const int n = static_cast<unsigned char>(line[0]) - 63;
    if (n < 0 || n > 62) throw ParseError("graph6: unsupported order byte (need n <= 62)");
    const int bits_needed = n * (n - 1) / 2;
    const int bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<int>(line.size()) != 1 + bytes_needed) {
        throw ParseError("graph6: body length " + std::to_string(line.size() - 1) + " does not match order " +
                         std::to_string(n) + " (expected " + std::to_string(bytes_needed) + " bytes)");
    }
    std::vector<Edge> edges;
    int bit = 0;
    // Bit order: columns of the upper triangle, x(0,1), x(0,2), x(1,2), ...
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            const int byte = static_cast<unsigned char>(line[1 + bit / 6]) - 63;
            if (byte < 0 || byte > 63) throw ParseError("graph6: byte out of range");
            if ((byte >> (5 - bit % 6)) & 1) edges.emplace_back(row, col);
        }
    }
    // Padding bits past the triangle must be zero.
    for (int b = bits_needed; b < bytes_needed * 6; ++b) {
        const int byte = static_cast<unsigned char>(line[1 + b / 6]) - 63;
        if ((byte >> (5 - b % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
    }
    return UndirectedGraph(n, std::move(edges));
}

std::string to_graph6(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("to_graph6: n <= 62 supported");
    const int bits_needed = n * (n - 1) / 2;
    std::string out(1 + (bits_needed + 5) / 6, char(63));
    out[0] = static_cast<char>(63 + n);
    int bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            if (g.has_edge(row, col)) out[1 + bit / 6] += char(1 << (5 - bit % 6));
        }
    }
    return out;
}

}  // namespace skew
