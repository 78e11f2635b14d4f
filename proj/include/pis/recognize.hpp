#pragma once

#include <array>
#include <optional>

#include "pis/graph.hpp"

namespace pis {

// The nine minimal non-line graphs (4..6 vertices).  Index 0 is K_{1,3};
// the remaining eight are ordered by vertex count, then edge count.  The
// library self-validates at construction against the Krausz oracle.
struct ForbiddenLibrary {
    std::array<Graph, 9> graphs;
    std::array<Graph, 9> complements;
};

const ForbiddenLibrary& forbidden_library();

// Edge partition into cliques with every vertex in at most two cliques.
// Cliques are vertex sets; isolated vertices get a singleton clique so
// that every vertex is covered.  nullopt when no partition exists.
std::optional<std::vector<std::vector<int>>> krausz_partition(const Graph& G);

// Scans vertex subsets of sizes 4, 5, 6 in deterministic order
// (increasing size, lexicographic by vertex index); returns the first
// subset inducing some library graph, with its library index.
std::optional<std::pair<std::vector<int>, int>> find_forbidden_induced(
    const Graph& G, const ForbiddenLibrary& library, int vertexCap = 64);

// H with L(H) isomorphic to G: one vertex per clique plus an auxiliary
// vertex for each G-vertex covered by a single clique.
Graph root_graph_from_partition(const Graph& G, const std::vector<std::vector<int>>& partition);

struct LineVerdict {
    bool isLine = false;
    // negative witness: induced(G, witnessSubset) is isomorphic to
    // forbidden_library().graphs[libraryIndex]
    std::vector<int> witnessSubset;
    int libraryIndex = -1;
    // positive witness
    Graph rootGraph;
    std::vector<std::vector<int>> krauszCliques;
};

// Runs both deciders and requires them to agree; a disagreement throws
// (it would contradict the forbidden-subgraph characterization).
LineVerdict is_line_graph(const Graph& G);

// is_line_graph on the complement; witness indices refer to G's vertices,
// so a negative witness subset induces the complement of a library graph
// in G itself.
LineVerdict is_complement_line_graph(const Graph& G);

}  // namespace pis
