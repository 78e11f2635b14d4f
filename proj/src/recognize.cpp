#include "pis/recognize.hpp"

#include <algorithm>
#include <stdexcept>

namespace pis {

namespace {

// -------------------------------------------------------- Krausz search

class KrauszSearch {
public:
    explicit KrauszSearch(const Graph& G) : G_(G), edges_(G.edges()) {
        edgeId_.assign(size_t(G.n) * G.n, -1);
        for (size_t i = 0; i < edges_.size(); ++i) {
            auto [u, v] = edges_[i];
            edgeId_[size_t(u) * G.n + v] = static_cast<int>(i);
            edgeId_[size_t(v) * G.n + u] = static_cast<int>(i);
        }
        assigned_.assign(edges_.size(), false);
        cliqueCount_.assign(G.n, 0);
    }

    std::optional<std::vector<std::vector<int>>> run() {
        if (!solve()) return std::nullopt;
        // Isolated vertices get a singleton clique so every vertex is
        // covered; root reconstruction then treats them uniformly.
        for (int v = 0; v < G_.n; ++v)
            if (cliqueCount_[v] == 0) cliques_.push_back({v});
        return cliques_;
    }

private:
    const Graph& G_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<int> edgeId_;
    std::vector<bool> assigned_;
    std::vector<int> cliqueCount_;
    std::vector<std::vector<int>> cliques_;

    int eid(int u, int v) const { return edgeId_[size_t(u) * G_.n + v]; }

    bool solve() {
        int e = -1;
        for (size_t i = 0; i < edges_.size(); ++i)
            if (!assigned_[i]) {
                e = static_cast<int>(i);
                break;
            }
        if (e < 0) return true;
        auto [u, v] = edges_[e];
        if (cliqueCount_[u] >= 2 || cliqueCount_[v] >= 2) return false;

        std::vector<int> cand;
        for (int w = 0; w < G_.n; ++w) {
            if (w == u || w == v || cliqueCount_[w] >= 2) continue;
            if (G_.has_edge(u, w) && G_.has_edge(v, w) && !assigned_[eid(u, w)] &&
                !assigned_[eid(v, w)])
                cand.push_back(w);
        }
        std::vector<int> chosen{u, v};
        return try_extensions(cand, 0, chosen);
    }

    // Enumerates every clique through the seed edge; larger extensions are
    // tried before committing the clique as-is.
    bool try_extensions(const std::vector<int>& cand, size_t from, std::vector<int>& chosen) {
        for (size_t i = from; i < cand.size(); ++i) {
            int w = cand[i];
            bool compatible = true;
            for (size_t j = 2; j < chosen.size() && compatible; ++j) {
                int x = chosen[j];
                if (!G_.has_edge(w, x) || assigned_[eid(w, x)]) compatible = false;
            }
            if (!compatible) continue;
            chosen.push_back(w);
            if (try_extensions(cand, i + 1, chosen)) return true;
            chosen.pop_back();
        }
        return commit(chosen);
    }

    bool commit(const std::vector<int>& clique) {
        std::vector<int> marked;
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j) {
                int id = eid(clique[i], clique[j]);
                assigned_[id] = true;
                marked.push_back(id);
            }
        for (int w : clique) ++cliqueCount_[w];

        // A vertex now in two cliques may no longer acquire edges; if it
        // still has an uncovered incident edge, this branch is dead.
        bool feasible = true;
        for (int w : clique) {
            if (cliqueCount_[w] < 2) continue;
            for (int x : G_.adj[w].members())
                if (!assigned_[eid(w, x)]) {
                    feasible = false;
                    break;
                }
            if (!feasible) break;
        }

        bool ok = false;
        if (feasible) {
            cliques_.push_back(clique);
            ok = solve();
            if (!ok) cliques_.pop_back();
        }
        if (!ok) {
            for (int w : clique) --cliqueCount_[w];
            for (int id : marked) assigned_[id] = false;
        }
        return ok;
    }
};

// ----------------------------------------------- Beineke forbidden library
//
// Edge lists generated by exhaustive search: the graphs on 4..6 vertices
// admitting no Krausz partition while every vertex-deleted subgraph admits
// one.  Index 0 is K_{1,3}; the rest are ordered by (vertices, edges).
struct LibraryEntry {
    int n;
    std::vector<std::pair<int, int>> edges;
};

// Filled in from the generator output below.
const std::vector<LibraryEntry>& beineke_entries();

ForbiddenLibrary build_library() {
    ForbiddenLibrary lib;
    const auto& entries = beineke_entries();
    if (entries.size() != 9) throw std::logic_error("forbidden library: expected 9 graphs");
    for (size_t i = 0; i < 9; ++i) {
        Graph g(entries[i].n);
        for (auto [u, v] : entries[i].edges) g.add_edge(u, v);
        lib.graphs[i] = g;
        lib.complements[i] = complement(g);
    }

    // Self-validation against the independent Krausz oracle.
    if (!is_isomorphic_small(lib.graphs[0], star_graph(3)))
        throw std::logic_error("forbidden library: graph 0 is not K_{1,3}");
    for (size_t i = 0; i < 9; ++i) {
        const Graph& g = lib.graphs[i];
        if (g.n < 4 || g.n > 6)
            throw std::logic_error("forbidden library: size out of range");
        if (KrauszSearch(g).run())
            throw std::logic_error("forbidden library: graph " + std::to_string(i) +
                                   " is a line graph");
        for (int v = 0; v < g.n; ++v) {
            std::vector<int> keep;
            for (int w = 0; w < g.n; ++w)
                if (w != v) keep.push_back(w);
            if (!KrauszSearch(induced(g, keep)).run())
                throw std::logic_error("forbidden library: graph " + std::to_string(i) +
                                       " is not vertex-minimal");
        }
        for (size_t j = i + 1; j < 9; ++j)
            if (is_isomorphic_small(lib.graphs[i], lib.graphs[j]))
                throw std::logic_error("forbidden library: duplicate graphs");
    }
    for (size_t i = 2; i < 9; ++i) {
        auto key = [&](const Graph& g) { return std::pair(g.n, g.edge_count()); };
        if (key(lib.graphs[i]) < key(lib.graphs[i - 1]))
            throw std::logic_error("forbidden library: ordering violated");
    }
    return lib;
}

}  // namespace

const ForbiddenLibrary& forbidden_library() {
    static const ForbiddenLibrary lib = build_library();
    return lib;
}

std::optional<std::vector<std::vector<int>>> krausz_partition(const Graph& G) {
    return KrauszSearch(G).run();
}

std::optional<std::pair<std::vector<int>, int>> find_forbidden_induced(
    const Graph& G, const ForbiddenLibrary& library, int vertexCap) {
    if (G.n > vertexCap)
        throw GraphError("find_forbidden_induced: graph exceeds subset-scan cap");
    for (int size = 4; size <= 6; ++size) {
        if (size > G.n) break;
        std::vector<int> subset(size);
        for (int i = 0; i < size; ++i) subset[i] = i;
        while (true) {
            Graph H = induced(G, subset);
            for (int idx = 0; idx < 9; ++idx) {
                if (library.graphs[idx].n != size) continue;
                if (is_isomorphic_small(H, library.graphs[idx]))
                    return std::pair(subset, idx);
            }
            // next combination, lexicographic
            int i = size - 1;
            while (i >= 0 && subset[i] == G.n - size + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
        }
    }
    return std::nullopt;
}

Graph root_graph_from_partition(const Graph& G,
                                const std::vector<std::vector<int>>& partition) {
    // Cliques covering each vertex (every vertex is in 1 or 2 cliques).
    std::vector<std::vector<int>> covering(G.n);
    for (size_t c = 0; c < partition.size(); ++c)
        for (int v : partition[c]) covering[v].push_back(static_cast<int>(c));

    int n = static_cast<int>(partition.size());
    std::vector<std::string> labels;
    for (int c = 0; c < n; ++c) labels.push_back("Q" + std::to_string(c));
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < G.n; ++v) {
        const auto& cov = covering[v];
        if (cov.size() == 1) {
            labels.push_back("p:" + G.labels[v]);
            edges.emplace_back(cov[0], n);
            ++n;
        } else if (cov.size() == 2) {
            edges.emplace_back(cov[0], cov[1]);
        } else {
            throw GraphError("root_graph_from_partition: invalid partition");
        }
    }
    Graph H(n, labels);
    for (auto [u, v] : edges) H.add_edge(u, v);
    return H;
}

LineVerdict is_line_graph(const Graph& G) {
    LineVerdict verdict;
    auto partition = krausz_partition(G);
    std::optional<std::pair<std::vector<int>, int>> forbidden;
    if (G.n >= 4) forbidden = find_forbidden_induced(G, forbidden_library());

    if (partition.has_value() == forbidden.has_value())
        throw std::logic_error(
            "line-graph deciders disagree: forbidden scan vs Krausz partition");

    if (partition) {
        verdict.isLine = true;
        verdict.krauszCliques = *partition;
        verdict.rootGraph = root_graph_from_partition(G, *partition);
    } else {
        verdict.isLine = false;
        verdict.witnessSubset = forbidden->first;
        verdict.libraryIndex = forbidden->second;
    }
    return verdict;
}

LineVerdict is_complement_line_graph(const Graph& G) {
    return is_line_graph(complement(G));
}

}  // namespace pis

namespace pis {
namespace {
const std::vector<LibraryEntry>& beineke_entries() {
    static const std::vector<LibraryEntry> entries = {
        {4, {{0, 1}, {0, 2}, {0, 3}}},  // K_{1,3}
        {5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}}},
        {5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}}},
        {6, {{0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 3}}},
        {6, {{0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 4}, {3, 4}}},
        {6, {{0, 1}, {0, 2}, {0, 5}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}}},
        {6, {{0, 1}, {0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {2, 4}, {3, 4}}},
        {6,
         {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}}},
        {6,
         {{0, 1},
          {0, 2},
          {0, 3},
          {0, 4},
          {0, 5},
          {1, 2},
          {1, 3},
          {1, 4},
          {1, 5},
          {2, 5},
          {3, 4}}},
    };
    return entries;
}
}  // namespace
}  // namespace pis
