#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "planq/error.hpp"
#include "planq/generate.hpp"
#include "planq/planarity.hpp"
#include "planq/triangulate.hpp"

using namespace planq;

namespace {

// Full certification of a triangulation result against its input.
void certify(const Embedding& input, const TriangulateResult& res, int outer_vertex) {
    const Graph& g = res.embedding.graph;
    REQUIRE(g.n == input.graph.n);
    CHECK(is_valid_embedding(res.embedding));
    CHECK(g.num_edges() == 3 * g.n - 6);
    CHECK(num_components(g) == 1);
    for (auto [u, v] : input.graph.edge_list()) CHECK(g.has_edge(u, v));
    CHECK(static_cast<int>(res.added_edges.size()) == g.num_edges() - input.graph.num_edges());
    for (auto [u, v] : res.added_edges) {
        CHECK(!input.graph.has_edge(u, v));
        CHECK(g.has_edge(u, v));
    }
    FaceTrace ft = trace_faces(res.embedding);
    CHECK(ft.num_faces() == 2 * g.n - 4);
    for (const auto& face : ft.faces) CHECK(face.size() == 3);
    const auto& outer = ft.faces[res.embedding.outer_face];
    CHECK(std::find(outer.begin(), outer.end(), outer_vertex) != outer.end());
}

}  // namespace

TEST_CASE("a 4-cycle gains both chords of its two quadrilateral faces") {
    Embedding emb = planar_embed(cycle_graph(4));
    TriangulateResult res = triangulate(emb, 0);
    certify(emb, res, 0);
    CHECK(res.added_edges.size() == 2);
    CHECK(res.embedding.graph.num_edges() == 6);  // it is K4 now
}

TEST_CASE("a triangle passes through unchanged") {
    Embedding emb = planar_embed(cycle_graph(3));
    for (int r = 0; r < 3; ++r) {
        TriangulateResult res = triangulate(emb, r);
        certify(emb, res, r);
        CHECK(res.added_edges.empty());
        CHECK(res.embedding.rotation == emb.rotation);
    }
}

TEST_CASE("paths, stars and edgeless graphs triangulate") {
    Embedding path = planar_embed(parse_graph("4 3\n0 1\n1 2\n2 3\n"));
    certify(path, triangulate(path, 3), 3);

    Embedding star = planar_embed(parse_graph("5 4\n0 1\n0 2\n0 3\n0 4\n"));
    certify(star, triangulate(star, 0), 0);

    Embedding empty = planar_embed(Graph(5));
    certify(empty, triangulate(empty, 2), 2);
}

TEST_CASE("disconnected pieces are joined before filling") {
    Graph g(7);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 0);
    g.add_edge(3, 4);
    g.add_edge(5, 6);
    Embedding emb = planar_embed(g);
    TriangulateResult res = triangulate(emb, 6);
    certify(emb, res, 6);
}

TEST_CASE("an existing triangulation is left alone") {
    auto sample = random_triangulation(30, 7);
    TriangulateResult res = triangulate(sample.embedding, 5);
    certify(sample.embedding, res, 5);
    CHECK(res.added_edges.empty());
    CHECK(res.embedding.rotation == sample.embedding.rotation);
}

TEST_CASE("every vertex can be required on the outer face") {
    Embedding emb = planar_embed(grid_graph(4));
    for (int r = 0; r < emb.graph.n; ++r) {
        TriangulateResult res = triangulate(emb, r);
        certify(emb, res, r);
    }
}

TEST_CASE("random trees triangulate at many sizes") {
    for (int n : {3, 4, 5, 9, 20, 50}) {
        for (std::uint64_t seed = 0; seed < 4; ++seed) {
            Embedding emb = planar_embed(random_tree(n, seed));
            TriangulateResult res = triangulate(emb, n - 1);
            certify(emb, res, n - 1);
        }
    }
}

TEST_CASE("random sparsified triangulations exercise every repair phase") {
    std::mt19937_64 rng(123);
    for (int trial = 0; trial < 30; ++trial) {
        auto sample = random_triangulation(30, trial);
        // keep each edge with probability about 1/2: leaves cut vertices,
        // separated components, isolated vertices and large faces behind
        Graph g(sample.graph.n);
        for (auto [u, v] : sample.graph.edge_list())
            if (rng() % 2 == 0) g.add_edge(u, v);
        Embedding emb = planar_embed(g);
        int r = static_cast<int>(rng() % g.n);
        TriangulateResult res = triangulate(emb, r);
        certify(emb, res, r);
    }
}

TEST_CASE("triangulation output is deterministic") {
    Embedding emb = planar_embed(grid_graph(5));
    TriangulateResult a = triangulate(emb, 0);
    TriangulateResult b = triangulate(emb, 0);
    CHECK(a.added_edges == b.added_edges);
    CHECK(a.embedding.rotation == b.embedding.rotation);
    CHECK(a.embedding.outer_face == b.embedding.outer_face);
}

TEST_CASE("bad triangulation inputs are rejected") {
    Embedding tiny = planar_embed(parse_graph("2 1\n0 1\n"));
    try {
        triangulate(tiny, 0);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == "TooSmall");
    }
    Embedding ok = planar_embed(cycle_graph(4));
    CHECK_THROWS_AS(triangulate(ok, -1), Error);
    CHECK_THROWS_AS(triangulate(ok, 4), Error);
    Embedding broken = ok;
    std::swap(broken.rotation[0], broken.rotation[1]);
    CHECK_THROWS_AS(triangulate(broken, 0), Error);
}
