#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace thick {

// Sorted, duplicate-free list of vertex indices.
using VertexSet = std::vector<int>;
using Edge = std::pair<int, int>;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
// Raised when a caller breaks a documented precondition.
struct ContractError : std::logic_error {
    using std::logic_error::logic_error;
};
// Raised when an input exceeds a configured size cap.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    // Duplicate pairs collapse; self-loops and bad endpoints throw InputError.
    static Graph from_edge_list(int n, const std::vector<Edge>& pairs);

    int n() const { return n_; }
    std::int64_t m() const { return m_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;
    // All edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    static constexpr int kBitsetLimit = 4096;
    int n_ = 0;
    std::int64_t m_ = 0;
    int words_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<std::uint64_t> bits_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;  // new index -> vertex of the source graph
};

Graph complement(const Graph& g);
InducedSubgraph induced(const Graph& g, const VertexSet& s);

std::vector<VertexSet> components(const Graph& g);
// Components of g[s], each sorted, ordered by least vertex.
std::vector<VertexSet> components_within(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);

bool is_clique(const Graph& g, const VertexSet& s);
// True iff g[s] is a disjoint union of cliques.
bool is_cluster(const Graph& g, const VertexSet& s);
// True iff g - s has at least two components.
bool separates(const Graph& g, const VertexSet& s);

// Per-component 2-colouring; the least vertex of each component goes first.
std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Graph& g);

VertexSet all_vertices(int n);
VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_minus(const VertexSet& a, const VertexSet& b);
VertexSet set_intersect(const VertexSet& a, const VertexSet& b);
bool is_subset(const VertexSet& a, const VertexSet& b);
VertexSet normalized(VertexSet s);
// Vertices outside s adjacent to some vertex of s.
VertexSet open_neighborhood(const Graph& g, const VertexSet& s);
// Vertices outside s adjacent to every vertex of s.
VertexSet common_neighbors(const Graph& g, const VertexSet& s);

}  // namespace thick
