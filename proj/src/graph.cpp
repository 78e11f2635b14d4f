#include "pis/graph.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

namespace pis {

Graph::Graph(int n, std::vector<std::string> labels) : n(n), labels(std::move(labels)) {
    adj.assign(n, Bitset(n));
    if (this->labels.empty()) {
        this->labels.resize(n);
        for (int v = 0; v < n; ++v) this->labels[v] = "v" + std::to_string(v);
    }
}

void Graph::add_edge(int u, int v) {
    if (u == v) throw GraphError("self-loop");
    adj[u].set(v);
    adj[v].set(u);
}

long Graph::edge_count() const {
    long twice = 0;
    for (const auto& row : adj) twice += row.count();
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

Graph pis_graph(const FiniteRing& R, const IdealLattice& lattice) {
    std::vector<int> vertices;
    for (size_t i = 0; i < lattice.ideals.size(); ++i) {
        int sz = lattice.ideals[i].members.count();
        if (sz > 1 && sz < R.order) vertices.push_back(static_cast<int>(i));
    }
    std::vector<std::string> labels;
    for (int i : vertices) labels.push_back(ideal_label(R, lattice.ideals[i]));
    Graph G(static_cast<int>(vertices.size()), labels);
    for (size_t a = 0; a < vertices.size(); ++a)
        for (size_t b = a + 1; b < vertices.size(); ++b) {
            int sum = lattice.sumTable[vertices[a]][vertices[b]];
            if (lattice.primeFlags[sum]) G.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    return G;
}

Graph complement(const Graph& G) {
    Graph C(G.n, G.labels);
    for (int u = 0; u < G.n; ++u)
        for (int v = u + 1; v < G.n; ++v)
            if (!G.has_edge(u, v)) C.add_edge(u, v);
    return C;
}

Graph induced(const Graph& G, const std::vector<int>& vertices) {
    std::vector<std::string> labels;
    for (int v : vertices) labels.push_back(G.labels[v]);
    Graph H(static_cast<int>(vertices.size()), labels);
    for (size_t a = 0; a < vertices.size(); ++a)
        for (size_t b = a + 1; b < vertices.size(); ++b)
            if (G.has_edge(vertices[a], vertices[b]))
                H.add_edge(static_cast<int>(a), static_cast<int>(b));
    return H;
}

Graph path_graph(int n) {
    if (n < 0) throw GraphError("path_graph: negative size");
    Graph G(n);
    for (int v = 0; v + 1 < n; ++v) G.add_edge(v, v + 1);
    return G;
}

Graph complete_graph(int n) {
    if (n < 0) throw GraphError("complete_graph: negative size");
    Graph G(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) G.add_edge(u, v);
    return G;
}

Graph star_graph(int leaves) {
    if (leaves < 0) throw GraphError("star_graph: negative size");
    Graph G(leaves + 1);
    for (int v = 1; v <= leaves; ++v) G.add_edge(0, v);
    return G;
}

Graph complete_bipartite(int m, int n) {
    if (m < 0 || n < 0) throw GraphError("complete_bipartite: negative size");
    Graph G(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) G.add_edge(u, m + v);
    return G;
}

Graph disjoint_union(const Graph& A, const Graph& B) {
    std::vector<std::string> labels = A.labels;
    labels.insert(labels.end(), B.labels.begin(), B.labels.end());
    Graph G(A.n + B.n, labels);
    for (auto [u, v] : A.edges()) G.add_edge(u, v);
    for (auto [u, v] : B.edges()) G.add_edge(A.n + u, A.n + v);
    return G;
}

Graph disjoint_copies(int copies, const Graph& G) {
    if (copies < 1) throw GraphError("disjoint_copies: need at least one copy");
    Graph out = G;
    for (int i = 1; i < copies; ++i) out = disjoint_union(out, G);
    return out;
}

Graph line_graph(const Graph& H) {
    auto es = H.edges();
    std::vector<std::string> labels;
    for (auto [u, v] : es)
        labels.push_back(H.labels[u] + "-" + H.labels[v]);
    Graph L(static_cast<int>(es.size()), labels);
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                L.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return L;
}

namespace {

constexpr int kIsoLimit = 10;

bool extend_mapping(const Graph& a, const Graph& b, std::vector<int>& map,
                    std::vector<bool>& used, int v) {
    if (v == a.n) return true;
    for (int w = 0; w < b.n; ++w) {
        if (used[w] || a.degree(v) != b.degree(w)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (a.has_edge(u, v) != b.has_edge(map[u], w)) ok = false;
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (extend_mapping(a, b, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

}  // namespace

bool is_isomorphic_small(const Graph& a, const Graph& b) {
    if (a.n > kIsoLimit || b.n > kIsoLimit)
        throw GraphError("is_isomorphic_small: graph exceeds " + std::to_string(kIsoLimit) +
                         " vertices");
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> da, db;
    for (int v = 0; v < a.n; ++v) da.push_back(a.degree(v));
    for (int v = 0; v < b.n; ++v) db.push_back(b.degree(v));
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;

    std::vector<int> map(a.n, -1);
    std::vector<bool> used(b.n, false);
    return extend_mapping(a, b, map, used, 0);
}

std::string canonical_code(const Graph& G) {
    if (G.n > kIsoLimit)
        throw GraphError("canonical_code: graph exceeds " + std::to_string(kIsoLimit) +
                         " vertices");
    std::vector<int> perm(G.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string code;
        code.reserve(size_t(G.n) * G.n);
        for (int u = 0; u < G.n; ++u)
            for (int v = u + 1; v < G.n; ++v)
                code += G.has_edge(perm[u], perm[v]) ? '1' : '0';
        if (best.empty() || code < best) best = code;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::string dot_text(const Graph& G) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v = 0; v < G.n; ++v)
        out << "  n" << v << " [label=\"" << G.labels[v] << "\"];\n";
    for (auto [u, v] : G.edges()) out << "  n" << u << " -- n" << v << ";\n";
    out << "}\n";
    return out.str();
}

void export_dot(const Graph& G, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw GraphError("cannot open for writing: " + path);
    out << dot_text(G);
    if (!out) throw GraphError("write failed: " + path);
}

std::string adjacency_text(const Graph& G) {
    std::ostringstream out;
    out << G.n << "\n";
    for (int v = 0; v < G.n; ++v) {
        bool first = true;
        for (int w : G.adj[v].members()) {
            if (!first) out << " ";
            out << w;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace pis
