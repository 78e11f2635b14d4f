#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "helpers.hpp"

using namespace pis;
using testutil::ring;

namespace {

Graph pis_of(const std::string& spec) {
    FiniteRing R = ring(spec);
    IdealLattice L = enumerate_ideals(R);
    return pis_graph(R, L);
}

}  // namespace

TEST_CASE("forbidden library: validated, claw first, ordered") {
    const ForbiddenLibrary& lib = forbidden_library();
    CHECK(is_isomorphic_small(lib.graphs[0], star_graph(3)));
    for (int i = 0; i < 9; ++i) {
        CAPTURE(i);
        CHECK(lib.graphs[i].n >= 4);
        CHECK(lib.graphs[i].n <= 6);
        CHECK_FALSE(krausz_partition(lib.graphs[i]).has_value());
        // minimality: every vertex-deleted subgraph is a line graph
        for (int v = 0; v < lib.graphs[i].n; ++v) {
            std::vector<int> keep;
            for (int w = 0; w < lib.graphs[i].n; ++w)
                if (w != v) keep.push_back(w);
            CHECK(krausz_partition(induced(lib.graphs[i], keep)).has_value());
        }
        CHECK(is_isomorphic_small(lib.complements[i], complement(lib.graphs[i])));
        for (int j = i + 1; j < 9; ++j)
            CHECK_FALSE(is_isomorphic_small(lib.graphs[i], lib.graphs[j]));
    }
}

TEST_CASE("krausz_partition: basics") {
    auto k3 = krausz_partition(complete_graph(3));
    REQUIRE(k3);
    CHECK(k3->size() == 1);

    CHECK_FALSE(krausz_partition(star_graph(3)).has_value());

    // K4 plus a pendant edge admits a partition
    auto p = krausz_partition(pis_of("mon 2 [x,y] / (x^2,y^2)"));
    CHECK(p.has_value());

    // every vertex in at most two cliques, edges partitioned exactly
    Graph G = pis_of("prod(Z 4, GF 2 1)");
    auto part = krausz_partition(G);
    REQUIRE(part);
    std::vector<int> coverCount(G.n, 0);
    long coveredEdges = 0;
    for (const auto& clique : *part) {
        for (size_t i = 0; i < clique.size(); ++i) {
            ++coverCount[clique[i]];
            for (size_t j = i + 1; j < clique.size(); ++j) {
                CHECK(G.has_edge(clique[i], clique[j]));
                ++coveredEdges;
            }
        }
    }
    CHECK(coveredEdges == G.edge_count());
    for (int v = 0; v < G.n; ++v) {
        CHECK(coverCount[v] >= 1);
        CHECK(coverCount[v] <= 2);
    }
}

TEST_CASE("root graph reconstruction") {
    // K1 -> K2
    Graph k1(1);
    Graph r1 = root_graph_from_partition(k1, *krausz_partition(k1));
    CHECK(is_isomorphic_small(r1, complete_graph(2)));
    // P3 -> P4
    Graph p3 = path_graph(3);
    CHECK(is_isomorphic_small(root_graph_from_partition(p3, *krausz_partition(p3)),
                              path_graph(4)));
    // K4 -> K_{1,4}
    Graph k4 = complete_graph(4);
    CHECK(is_isomorphic_small(root_graph_from_partition(k4, *krausz_partition(k4)),
                              star_graph(4)));
}

TEST_CASE("find_forbidden_induced: deterministic first witness") {
    Graph G = pis_of("Z 32");  // K_{1,4}
    auto hit = find_forbidden_induced(G, forbidden_library());
    REQUIRE(hit);
    CHECK(hit->second == 0);  // claw
    CHECK(is_isomorphic_small(induced(G, hit->first), star_graph(3)));
    // run twice: same witness
    auto again = find_forbidden_induced(G, forbidden_library());
    CHECK(hit->first == again->first);

    CHECK_FALSE(find_forbidden_induced(path_graph(3), forbidden_library()).has_value());
}

TEST_CASE("is_line_graph on hand-checked PIS graphs") {
    LineVerdict v = is_line_graph(pis_of("Z 16"));
    CHECK(v.isLine);
    CHECK(is_isomorphic_small(v.rootGraph, path_graph(4)));

    v = is_line_graph(pis_of("Z 32"));
    CHECK_FALSE(v.isLine);
    CHECK(v.libraryIndex == 0);

    CHECK(is_line_graph(pis_of("prod(Z 2, Z 3, Z 5)")).isLine);

    // empty and tiny graphs
    LineVerdict e = is_line_graph(Graph(0));
    CHECK(e.isLine);
    CHECK(e.rootGraph.n == 0);
    CHECK(is_line_graph(Graph(1)).isLine);
}

TEST_CASE("is_complement_line_graph") {
    CHECK(is_complement_line_graph(pis_of("Z 64")).isLine);  // star complement
    LineVerdict v = is_complement_line_graph(pis_of("mon 2 [x,y] / (x^2,y^2)"));
    CHECK_FALSE(v.isLine);
    CHECK(v.libraryIndex == 0);
    // witness induces the complement of the claw in the PIS graph itself
    Graph G = pis_of("mon 2 [x,y] / (x^2,y^2)");
    CHECK(is_isomorphic_small(induced(G, v.witnessSubset),
                              complement(star_graph(3))));

    v = is_complement_line_graph(pis_of("prod(Z 8, GF 2 1)"));
    CHECK_FALSE(v.isLine);
    CHECK(v.witnessSubset.size() == 6);
}

TEST_CASE("decider agreement and soundness on random graphs") {
    std::mt19937 rng(20240817);
    for (int trial = 0; trial < 1000; ++trial) {
        int n = 4 + static_cast<int>(rng() % 6);  // 4..9
        double p = 0.15 + 0.7 * (rng() % 100) / 100.0;
        Graph G(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (std::uniform_real_distribution<>(0, 1)(rng) < p) G.add_edge(u, v);

        auto part = krausz_partition(G);
        auto forb = find_forbidden_induced(G, forbidden_library());
        CAPTURE(trial);
        REQUIRE(part.has_value() != forb.has_value());

        if (part) {
            Graph root = root_graph_from_partition(G, *part);
            CHECK(is_isomorphic_small(line_graph(root), G));
        } else {
            CHECK(is_isomorphic_small(induced(G, forb->first),
                                      forbidden_library().graphs[forb->second]));
        }
    }
}

TEST_CASE("closure: the line graph of every graph with <= 6 edges is a line graph") {
    // All labeled graphs on 7 vertices with at most 6 edges; extra isolated
    // vertices in H do not change L(H), so this covers every smaller vertex
    // count too.  Pure matchings beyond 7 vertices are checked separately.
    const int n = 7;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    int m = static_cast<int>(pairs.size());

    long tested = 0;
    std::vector<int> chosen;
    auto run = [&](auto&& self, int from, int remaining) -> void {
        Graph H(n);
        for (int e : chosen) H.add_edge(pairs[e].first, pairs[e].second);
        Graph L = line_graph(H);
        LineVerdict v = is_line_graph(L);
        CHECK(v.isLine);
        ++tested;
        if (v.isLine && L.n <= 10)
            CHECK(is_isomorphic_small(line_graph(v.rootGraph), L));
        if (remaining == 0) return;
        for (int e = from; e < m; ++e) {
            chosen.push_back(e);
            self(self, e + 1, remaining - 1);
            chosen.pop_back();
        }
    };
    run(run, 0, 6);
    CHECK(tested > 80000);

    for (int k = 1; k <= 6; ++k)
        CHECK(is_line_graph(line_graph(disjoint_copies(k, complete_graph(2)))).isLine);
}
