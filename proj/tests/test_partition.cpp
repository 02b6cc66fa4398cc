#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "planq/embedding.hpp"
#include "planq/error.hpp"
#include "planq/generate.hpp"
#include "planq/graph.hpp"
#include "planq/layering.hpp"
#include "planq/partition.hpp"
#include "planq/planarity.hpp"
#include "planq/triangulate.hpp"

using namespace planq;

namespace {

std::vector<int> outer_vertices(const Embedding& emb) {
    FaceTrace ft = trace_faces(emb);
    return ft.faces[emb.outer_face];
}

BfsForest forest_from(const Graph& g, int root) { return bfs_layering(g, {root}).forest; }

// shared sanity bundle for a vertical-path result
void check_width1(const Embedding& tri, const PartitionResult& res) {
    const Partition& p = res.partition;
    CHECK(p.declared_layered_width == 1);
    int covered = 0;
    for (const auto& part : p.parts) covered += static_cast<int>(part.size());
    CHECK(covered == tri.graph.n);

    auto rep = validate_partition(tri.graph, p, res.layering);
    CHECK(rep.is_valid);
    CHECK(rep.measured_layered_width == 1);
    CHECK(rep.quotient_edge_diff == 0);

    CHECK(parts_are_vertical_paths(p, res.forest));
    CHECK(p.legs.size() == p.parts.size());
    for (int q = 0; q < p.num_parts(); ++q) {
        REQUIRE(p.legs[q].size() == 1);
        CHECK(is_vertical_path(res.forest, p.legs[q][0]));
        std::vector<int> sorted = p.legs[q][0];
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == p.parts[q]);
    }

    auto outer = outer_vertices(tri);
    for (int i = 0; i < 3; ++i) CHECK(p.parts[i] == std::vector<int>{outer[i]});
    REQUIRE(!res.td.bags.empty());
    for (int i = 0; i < 3; ++i)
        CHECK(std::binary_search(res.td.bags[0].begin(), res.td.bags[0].end(), i));

    for (const auto& bag : res.td.bags) CHECK(bag.size() <= 9);
    auto trep = validate_tree_decomposition(p.quotient, res.td);
    INFO(trep.violation);
    CHECK(trep.is_valid);
    CHECK(trep.width <= 8);
}

void check_tripod(const Embedding& tri, const PartitionResult& res) {
    const Partition& p = res.partition;
    CHECK(p.declared_layered_width == 3);
    int covered = 0;
    for (const auto& part : p.parts) covered += static_cast<int>(part.size());
    CHECK(covered == tri.graph.n);

    auto rep = validate_partition(tri.graph, p, res.layering);
    CHECK(rep.is_valid);
    CHECK(rep.measured_layered_width <= 3);

    CHECK(parts_are_tripods(p, res.forest, tri.graph));

    auto outer = outer_vertices(tri);
    std::vector<int> roots = outer;
    std::sort(roots.begin(), roots.end());
    CHECK(res.forest.roots == roots);

    for (const auto& bag : res.td.bags) CHECK(bag.size() <= 4);
    auto trep = validate_tree_decomposition(p.quotient, res.td);
    INFO(trep.violation);
    CHECK(trep.is_valid);
    CHECK(trep.width <= 3);
    CHECK(is_planar(p.quotient));
}

}  // namespace

TEST_CASE("single triangle splits into three singleton parts") {
    Embedding tri = triangulate(planar_embed(cycle_graph(3)), 0).embedding;
    auto outer = outer_vertices(tri);
    auto res = vertical_path_partition(tri, forest_from(tri.graph, outer[0]));
    CHECK(res.partition.num_parts() == 3);
    CHECK(res.td.num_nodes() == 1);
    CHECK(res.td.bags[0] == std::vector<int>{0, 1, 2});
    check_width1(tri, res);

    auto tres = tripod_partition(tri, forest_from(tri.graph, outer[0]));
    CHECK(tres.partition.num_parts() == 3);
    check_tripod(tri, tres);
}

TEST_CASE("complete graph on four vertices") {
    Embedding tri = triangulate(planar_embed(complete_graph(4)), 0).embedding;
    auto outer = outer_vertices(tri);
    auto res = vertical_path_partition(tri, forest_from(tri.graph, outer[0]));
    check_width1(tri, res);
    auto tres = tripod_partition(tri, forest_from(tri.graph, outer[0]));
    check_tripod(tri, tres);
}

TEST_CASE("octahedron") {
    Graph g(6);
    for (auto [u, v] : std::vector<std::pair<int, int>>{{0, 1},
                                                        {0, 2},
                                                        {0, 3},
                                                        {0, 4},
                                                        {1, 2},
                                                        {1, 4},
                                                        {1, 5},
                                                        {2, 3},
                                                        {2, 5},
                                                        {3, 4},
                                                        {3, 5},
                                                        {4, 5}})
        g.add_edge(u, v);
    Embedding tri = triangulate(planar_embed(g), 0).embedding;
    auto outer = outer_vertices(tri);
    auto res = vertical_path_partition(tri, forest_from(tri.graph, outer[0]));
    check_width1(tri, res);
    auto tres = tripod_partition(tri, forest_from(tri.graph, outer[0]));
    check_tripod(tri, tres);
}

TEST_CASE("triangulated grids") {
    for (int n : {2, 4, 6}) {
        CAPTURE(n);
        Embedding tri = triangulate(planar_embed(grid_graph(n)), 0).embedding;
        auto outer = outer_vertices(tri);
        auto forest = forest_from(tri.graph, outer[0]);
        check_width1(tri, vertical_path_partition(tri, forest));
        check_tripod(tri, tripod_partition(tri, forest));
    }
}

TEST_CASE("random triangulations, both modes, every outer root") {
    for (int n : {6, 12, 25, 60, 200}) {
        for (unsigned seed : {1u, 2u, 3u}) {
            CAPTURE(n);
            CAPTURE(seed);
            Embedding tri = random_triangulation(n, seed).embedding;
            auto outer = outer_vertices(tri);
            for (int r : outer) {
                auto forest = forest_from(tri.graph, r);
                check_width1(tri, vertical_path_partition(tri, forest));
                check_tripod(tri, tripod_partition(tri, forest));
            }
        }
    }
}

TEST_CASE("partition is deterministic") {
    Embedding tri = random_triangulation(40, 7).embedding;
    auto forest = forest_from(tri.graph, outer_vertices(tri)[0]);
    auto a = vertical_path_partition(tri, forest);
    auto b = vertical_path_partition(tri, forest);
    CHECK(a.partition.parts == b.partition.parts);
    CHECK(a.td.bags == b.td.bags);
    CHECK(a.td.tree_edges == b.td.tree_edges);
    auto ta = tripod_partition(tri, forest);
    auto tb = tripod_partition(tri, forest);
    CHECK(ta.partition.parts == tb.partition.parts);
    CHECK(ta.td.bags == tb.td.bags);
}

TEST_CASE("root must lie on the outer face") {
    Embedding tri = random_triangulation(30, 5).embedding;
    auto outer = outer_vertices(tri);
    int inner = -1;
    for (int v = 0; v < tri.graph.n && inner == -1; ++v)
        if (std::find(outer.begin(), outer.end(), v) == outer.end()) inner = v;
    REQUIRE(inner != -1);
    CHECK_THROWS_WITH_AS(vertical_path_partition(tri, forest_from(tri.graph, inner)),
                         doctest::Contains("outer face"), Error);
    try {
        tripod_partition(tri, forest_from(tri.graph, inner));
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code == "RootNotOnOuterFace");
    }
}

TEST_CASE("partition rejects non-triangulations and broken forests") {
    Embedding grid = planar_embed(grid_graph(3));
    try {
        vertical_path_partition(grid, forest_from(grid.graph, outer_vertices(grid)[0]));
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code == "ParseError");
    }

    Embedding tri = random_triangulation(12, 3).embedding;
    auto forest = forest_from(tri.graph, outer_vertices(tri)[0]);
    auto broken = forest;
    broken.depth[tri.graph.n - 1] += 1;
    try {
        vertical_path_partition(tri, broken);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code == "BadParameters");
    }
    auto shrunk = forest;
    shrunk.parent.pop_back();
    CHECK_THROWS_AS(tripod_partition(tri, shrunk), Error);
}

TEST_CASE("boundary colouring fills the interior by rootward chains") {
    Embedding tri = random_triangulation(25, 11).embedding;
    auto outer = outer_vertices(tri);
    auto forest = forest_from(tri.graph, outer[0]);
    auto colour = sperner_colour(tri, forest, {outer[0]}, {outer[1]}, {outer[2]});
    REQUIRE(static_cast<int>(colour.size()) == tri.graph.n);
    CHECK(colour[outer[0]] == 1);
    CHECK(colour[outer[1]] == 2);
    CHECK(colour[outer[2]] == 3);
    for (int v = 0; v < tri.graph.n; ++v) {
        CHECK(colour[v] >= 1);
        CHECK(colour[v] <= 3);
    }
    // every non-boundary vertex matches the colour of its parent
    for (int v = 0; v < tri.graph.n; ++v) {
        if (v == outer[0] || v == outer[1] || v == outer[2]) continue;
        CHECK(colour[v] == colour[forest.parent[v]]);
    }

    int face = find_sperner_triangle(tri, colour);
    CHECK(face != tri.outer_face);
    FaceTrace ft = trace_faces(tri);
    std::set<int> seen;
    for (int v : ft.faces[face]) seen.insert(colour[v]);
    CHECK(seen == std::set<int>{1, 2, 3});
}

TEST_CASE("boundary blocks may rotate but not permute") {
    Embedding tri = random_triangulation(15, 2).embedding;
    auto outer = outer_vertices(tri);
    auto forest = forest_from(tri.graph, outer[0]);
    auto colour = sperner_colour(tri, forest, {outer[1]}, {outer[2]}, {outer[0]});
    CHECK(colour[outer[1]] == 1);
    try {
        sperner_colour(tri, forest, {outer[0]}, {outer[2]}, {outer[1]});
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code == "BrokenFrame");
    }
    CHECK_THROWS_AS(sperner_colour(tri, forest, {outer[0]}, {outer[1]}, {}), Error);
}

TEST_CASE("no trichromatic face under a constant colouring") {
    Embedding tri = random_triangulation(10, 4).embedding;
    std::vector<int> flat(tri.graph.n, 1);
    try {
        find_sperner_triangle(tri, flat);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code == "NoTrichromaticFace");
    }
}

TEST_CASE("widening a tripod partition reaches width one") {
    for (int n : {8, 30, 120}) {
        for (unsigned seed : {1u, 9u}) {
            CAPTURE(n);
            CAPTURE(seed);
            Embedding tri = random_triangulation(n, seed).embedding;
            auto forest = forest_from(tri.graph, outer_vertices(tri)[0]);
            auto res = tripod_partition(tri, forest);
            auto wide = widen_to_width1(tri.graph, res.partition, res.layering, res.td);
            CHECK(wide.partition.declared_layered_width == 1);
            auto rep = validate_partition(tri.graph, wide.partition, res.layering);
            CHECK(rep.is_valid);
            CHECK(rep.measured_layered_width == 1);
            auto trep = validate_tree_decomposition(wide.partition.quotient, wide.td);
            INFO(trep.violation);
            CHECK(trep.is_valid);
            CHECK(trep.width <= 11);
        }
    }
}

TEST_CASE("widening a width-one partition changes nothing") {
    Embedding tri = random_triangulation(20, 6).embedding;
    auto forest = forest_from(tri.graph, outer_vertices(tri)[0]);
    auto res = vertical_path_partition(tri, forest);
    auto wide = widen_to_width1(tri.graph, res.partition, res.layering, res.td);
    CHECK(wide.partition.parts == res.partition.parts);
    CHECK(wide.td.bags == res.td.bags);
}

TEST_CASE("widening checks the declared width") {
    Embedding tri = random_triangulation(30, 8).embedding;
    auto forest = forest_from(tri.graph, outer_vertices(tri)[0]);
    auto res = tripod_partition(tri, forest);
    auto rep = validate_partition(tri.graph, res.partition, res.layering);
    REQUIRE(rep.measured_layered_width > 1);  // seed chosen to have a real tripod
    Partition lied = res.partition;
    lied.declared_layered_width = 1;
    try {
        widen_to_width1(tri.graph, lied, res.layering, res.td);
        FAIL("expected a throw");
    } catch (const Error& e) {
        CHECK(e.code == "WidthMismatch");
    }
}

TEST_CASE("partition validation notices tampering") {
    Embedding tri = random_triangulation(18, 12).embedding;
    auto forest = forest_from(tri.graph, outer_vertices(tri)[0]);
    auto res = vertical_path_partition(tri, forest);
    auto good = validate_partition(tri.graph, res.partition, res.layering);
    REQUIRE(good.is_valid);

    Partition bad = res.partition;
    bad.part_of[0] = (bad.part_of[0] + 1) % bad.num_parts();
    CHECK_FALSE(validate_partition(tri.graph, bad, res.layering).is_valid);

    Partition spurious = res.partition;
    bool added = false;
    for (int a = 0; a < spurious.quotient.n && !added; ++a)
        for (int b = a + 1; b < spurious.quotient.n && !added; ++b)
            added = spurious.quotient.add_edge_if_absent(a, b);
    REQUIRE(added);
    auto rep = validate_partition(tri.graph, spurious, res.layering);
    CHECK_FALSE(rep.is_valid);
    CHECK(rep.quotient_edge_diff == 1);
}

TEST_CASE("tree decomposition validation names the defect") {
    Graph tri3 = cycle_graph(3);

    TreeDecomposition ok;
    ok.bags = {{0, 1, 2}};
    CHECK(validate_tree_decomposition(tri3, ok).is_valid);
    CHECK(validate_tree_decomposition(tri3, ok).width == 2);

    TreeDecomposition missing_edge;
    missing_edge.bags = {{0, 1}, {1, 2}};
    missing_edge.tree_edges = {{0, 1}};
    auto rep = validate_tree_decomposition(tri3, missing_edge);
    CHECK_FALSE(rep.is_valid);
    CHECK(rep.violation == "edge (0,2) is in no bag");

    TreeDecomposition uncovered;
    uncovered.bags = {{0, 1}};
    rep = validate_tree_decomposition(tri3, uncovered);
    CHECK_FALSE(rep.is_valid);
    CHECK(rep.violation == "vertex 2 is in no bag");

    Graph path4(4);
    path4.add_edge(0, 1);
    path4.add_edge(1, 2);
    path4.add_edge(2, 3);
    TreeDecomposition torn;
    torn.bags = {{0, 1}, {1, 2}, {2, 3}, {0, 1}};
    torn.tree_edges = {{0, 1}, {1, 2}, {2, 3}};
    rep = validate_tree_decomposition(path4, torn);
    CHECK_FALSE(rep.is_valid);
    CHECK(rep.violation == "vertex 0 has disconnected occurrences");

    TreeDecomposition loops;
    loops.bags = {{0, 1, 2}, {0, 1, 2}};
    loops.tree_edges = {{0, 0}};
    rep = validate_tree_decomposition(tri3, loops);
    CHECK_FALSE(rep.is_valid);
    CHECK(rep.violation == "tree edges do not form a tree");
}

TEST_CASE("structural predicates reject wrong shapes") {
    Graph g(4);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    auto lr = bfs_layering(g, {0});

    Partition chains;
    chains.parts = {{0, 1}, {2, 3}};
    chains.part_of = {0, 0, 1, 1};
    CHECK(parts_are_vertical_paths(chains, lr.forest));

    Partition split;
    split.parts = {{0, 2}, {1, 3}};
    split.part_of = {0, 1, 0, 1};
    CHECK_FALSE(parts_are_vertical_paths(split, lr.forest));

    // two legs whose lower ends are not adjacent cannot form a tripod
    Partition twolegs;
    twolegs.parts = {{1, 3}};
    twolegs.part_of = {-1, 0, -1, 0};
    twolegs.legs = {{{1}, {3}}};
    CHECK_FALSE(parts_are_tripods(twolegs, lr.forest, g));
    Graph host(4);
    host.add_edge(1, 3);
    CHECK(parts_are_tripods(twolegs, lr.forest, host));
}
