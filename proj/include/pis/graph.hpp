#pragma once

#include <string>
#include <vector>

#include "pis/bitset.hpp"
#include "pis/ideal.hpp"

namespace pis {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Labeled simple undirected graph with bitset adjacency rows.
struct Graph {
    int n = 0;
    std::vector<Bitset> adj;
    std::vector<std::string> labels;

    Graph() = default;
    explicit Graph(int n, std::vector<std::string> labels = {});

    bool has_edge(int u, int v) const { return adj[u].test(v); }
    void add_edge(int u, int v);
    int degree(int v) const { return adj[v].count(); }
    long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, lexicographic
};

// Vertices are the nonzero proper ideals in lattice order; I ~ J iff I + J
// is a prime ideal.
Graph pis_graph(const FiniteRing& R, const IdealLattice& lattice);

Graph complement(const Graph& G);
Graph induced(const Graph& G, const std::vector<int>& vertices);

Graph path_graph(int n);
Graph complete_graph(int n);
Graph star_graph(int leaves);  // K_{1,leaves}, center is vertex 0
Graph complete_bipartite(int m, int n);
Graph disjoint_copies(int copies, const Graph& G);
Graph disjoint_union(const Graph& A, const Graph& B);

// L(H): one vertex per edge of H, adjacent when the edges share an endpoint.
Graph line_graph(const Graph& H);

// Backtracking isomorphism test for graphs of at most 10 vertices.
bool is_isomorphic_small(const Graph& a, const Graph& b);

// Minimum adjacency code over all vertex permutations; equal codes iff
// isomorphic.  Same size limit as is_isomorphic_small.
std::string canonical_code(const Graph& G);

void export_dot(const Graph& G, const std::string& path);
std::string dot_text(const Graph& G);

// First line n, then one whitespace-separated neighbor list per vertex.
std::string adjacency_text(const Graph& G);

}  // namespace pis
