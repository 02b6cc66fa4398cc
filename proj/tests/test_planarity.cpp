#include <doctest.h>

#include <vector>

#include "planq/error.hpp"
#include "planq/generate.hpp"
#include "planq/planarity.hpp"

using namespace planq;

namespace {

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, 5 + (i + 2) % 5);
    }
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

}  // namespace

TEST_CASE("small planar graphs embed with the right face count") {
    Embedding k4 = planar_embed(complete_graph(4));
    CHECK(is_valid_embedding(k4));
    CHECK(trace_faces(k4).num_faces() == 4);

    Embedding c4 = planar_embed(cycle_graph(4));
    CHECK(is_valid_embedding(c4));
    CHECK(trace_faces(c4).num_faces() == 2);

    Embedding path = planar_embed(parse_graph("4 3\n0 1\n1 2\n2 3\n"));
    CHECK(is_valid_embedding(path));
    CHECK(trace_faces(path).num_faces() == 1);

    Embedding k5e = planar_embed([] {
        Graph g = complete_graph(5);
        Graph h(5);
        for (auto [u, v] : g.edge_list())
            if (!(u == 0 && v == 1)) h.add_edge(u, v);
        return h;
    }());
    CHECK(is_valid_embedding(k5e));
    CHECK(trace_faces(k5e).num_faces() == 6);  // 5 - 9 + f = 2
}

TEST_CASE("nonplanar graphs are rejected") {
    CHECK(!is_planar(complete_graph(5)));
    CHECK(!is_planar(complete_bipartite(3, 3)));
    CHECK(!is_planar(petersen()));
    try {
        planar_embed(complete_bipartite(3, 3));
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == "NonPlanar");
    }
    // K5 with each edge subdivided once: still nonplanar, defeats the m > 3n-6 shortcut
    Graph sub(5 + 10);
    int next = 5;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) {
            sub.add_edge(u, next);
            sub.add_edge(v, next);
            ++next;
        }
    CHECK(!is_planar(sub));
}

TEST_CASE("tiny and degenerate graphs embed") {
    CHECK(is_valid_embedding(planar_embed(Graph(0))));
    Embedding single = planar_embed(Graph(1));
    CHECK(is_valid_embedding(single));
    CHECK(single.outer_face == -1);
    Embedding edge = planar_embed(parse_graph("2 1\n0 1\n"));
    CHECK(is_valid_embedding(edge));
    CHECK(trace_faces(edge).num_faces() == 1);
    Embedding lonely = planar_embed(parse_graph("3 1\n0 2\n"));
    CHECK(is_valid_embedding(lonely));
}

TEST_CASE("disconnected planar graphs embed") {
    Graph g(6);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 4);
    g.add_edge(4, 5);
    g.add_edge(5, 3);
    Embedding emb = planar_embed(g);
    CHECK(is_valid_embedding(emb));
    CHECK(trace_faces(emb).num_faces() == 4);
}

TEST_CASE("structured families embed and validate") {
    CHECK(is_valid_embedding(planar_embed(grid_graph(7))));
    CHECK(is_valid_embedding(planar_embed(fan_graph(2))));
    CHECK(is_valid_embedding(planar_embed(random_tree(40, 3))));
    CHECK(is_valid_embedding(planar_embed(cycle_graph(17))));
}

TEST_CASE("random triangulations round trip through the embedder") {
    for (int n : {5, 8, 16, 40, 100}) {
        for (std::uint64_t seed = 0; seed < 3; ++seed) {
            auto sample = random_triangulation(n, seed);
            CHECK(is_valid_embedding(sample.embedding));
            CHECK(sample.graph.num_edges() == 3 * n - 6);
            Embedding emb = planar_embed(sample.graph);
            CHECK(is_valid_embedding(emb));
            CHECK(trace_faces(emb).num_faces() == 2 * n - 4);
        }
    }
}

TEST_CASE("one extra edge over the planar bound is rejected") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        auto sample = random_triangulation(30, seed);
        Graph g = sample.graph;
        bool added = false;
        for (int u = 0; u < g.n && !added; ++u)
            for (int v = u + 1; v < g.n && !added; ++v)
                if (!g.has_edge(u, v)) {
                    g.add_edge(u, v);
                    added = true;
                }
        REQUIRE(added);
        CHECK(!is_planar(g));
    }
}

TEST_CASE("embedding output is deterministic") {
    Graph g = grid_graph(5);
    Embedding a = planar_embed(g);
    Embedding b = planar_embed(g);
    CHECK(a.rotation == b.rotation);
    CHECK(a.outer_face == b.outer_face);
}

TEST_CASE("embedding validity check spots corruption") {
    Embedding emb = planar_embed(complete_graph(4));
    REQUIRE(is_valid_embedding(emb));
    Embedding swapped = emb;
    std::swap(swapped.rotation[0][0], swapped.rotation[0][1]);
    // K4 has a unique embedding up to reflection; a transposition inside one
    // rotation breaks Euler's relation
    CHECK(!is_valid_embedding(swapped));
    Embedding missing = emb;
    missing.rotation[2].pop_back();
    CHECK(!is_valid_embedding(missing));
    Embedding badouter = emb;
    badouter.outer_face = 99;
    CHECK(!is_valid_embedding(badouter));
}
