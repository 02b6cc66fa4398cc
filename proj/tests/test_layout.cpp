#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "planq/error.hpp"
#include "planq/generate.hpp"
#include "planq/layout.hpp"

using namespace planq;

namespace {

// Quadratic reference: longest chain under strict containment of position
// intervals.
int rainbow_reference(const Graph& g, const std::vector<int>& order) {
    auto pos = positions_of(order);
    std::vector<std::pair<int, int>> iv;
    for (auto [u, v] : g.edge_list()) {
        int a = std::min(pos[u], pos[v]), b = std::max(pos[u], pos[v]);
        iv.push_back({a, b});
    }
    std::sort(iv.begin(), iv.end(),
              [](auto& x, auto& y) { return (x.second - x.first) < (y.second - y.first); });
    std::vector<int> chain(iv.size(), 1);
    int best = iv.empty() ? 0 : 1;
    for (std::size_t i = 0; i < iv.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j)
            if (iv[i].first < iv[j].first && iv[j].second < iv[i].second)
                chain[i] = std::max(chain[i], chain[j] + 1);
        best = std::max(best, chain[i]);
    }
    return best;
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() % 1000) < p * 1000) g.add_edge(u, v);
    return g;
}

std::vector<int> random_order(int n, std::mt19937_64& rng) {
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(order[i], order[rng() % (i + 1)]);
    return order;
}

}  // namespace

TEST_CASE("rainbow counting on hand-checked cases") {
    std::vector<int> natural{0, 1, 2, 3};
    Graph path(4);
    path.add_edge(0, 1);
    path.add_edge(1, 2);
    path.add_edge(2, 3);
    CHECK(max_rainbow(path, natural) == 1);

    Graph nested(4);
    nested.add_edge(0, 3);
    nested.add_edge(1, 2);
    CHECK(max_rainbow(nested, natural) == 2);

    // edges sharing the left endpoint never nest
    Graph star(4);
    star.add_edge(0, 1);
    star.add_edge(0, 2);
    star.add_edge(0, 3);
    CHECK(max_rainbow(star, natural) == 1);

    // and sharing the right endpoint never nests either
    Graph rstar(4);
    rstar.add_edge(0, 3);
    rstar.add_edge(1, 3);
    rstar.add_edge(2, 3);
    CHECK(max_rainbow(rstar, natural) == 1);

    Graph empty(4);
    CHECK(max_rainbow(empty, natural) == 0);

    std::vector<int> k6order{0, 1, 2, 3, 4, 5};
    CHECK(max_rainbow(complete_graph(6), k6order) == 3);
    CHECK(max_rainbow(complete_graph(7), {0, 1, 2, 3, 4, 5, 6}) == 3);
}

TEST_CASE("depth assignment matches the rainbow bound and validates") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 2000; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Graph g = random_graph(n, 0.4, rng);
        auto order = random_order(n, rng);
        int reference = rainbow_reference(g, order);
        CHECK(max_rainbow(g, order) == reference);
        QueueLayout layout = assign_queues_by_depth(g, order);
        CHECK(layout.queue_count == reference);
        LayoutReport rep = validate_queue_layout(g, layout);
        CHECK(rep.is_valid);
        CHECK(rep.first_violation.empty());
    }
}

TEST_CASE("validation pinpoints a planted nested pair") {
    Graph g(4);
    g.add_edge(0, 3);
    g.add_edge(1, 2);
    QueueLayout bad;
    bad.order = {0, 1, 2, 3};
    bad.pos = positions_of(bad.order);
    bad.queue_of = {0, 0};
    bad.queue_count = 1;
    LayoutReport rep = validate_queue_layout(g, bad);
    CHECK(!rep.is_valid);
    CHECK(rep.first_violation == "edges (0,3) and (1,2) nest in queue 0");

    bad.queue_of = {0, 1};
    bad.queue_count = 2;
    CHECK(validate_queue_layout(g, bad).is_valid);

    QueueLayout shape = bad;
    shape.queue_of = {0};
    CHECK(!validate_queue_layout(g, shape).is_valid);
    QueueLayout range = bad;
    range.queue_of = {0, 2};
    CHECK(!validate_queue_layout(g, range).is_valid);
    QueueLayout perm = bad;
    perm.order = {0, 1, 2, 2};
    CHECK(!validate_queue_layout(g, perm).is_valid);
}

TEST_CASE("complete graph layouts use exactly floor(l/2) queues") {
    for (int l = 1; l <= 40; ++l) {
        Graph g = complete_graph(l);
        QueueLayout layout = complete_graph_layout(l);
        CHECK(layout.queue_count == l / 2);
        LayoutReport rep = validate_queue_layout(g, layout);
        CHECK(rep.is_valid);
        // the natural order is optimal for complete graphs
        CHECK(max_rainbow(g, layout.order) == l / 2);
    }
}

TEST_CASE("grid layouts use one queue") {
    for (int n = 1; n <= 8; ++n) {
        Graph g = grid_graph(n);
        QueueLayout layout = grid_layout(n);
        CHECK(layout.queue_count == (n >= 2 ? 1 : 0));
        CHECK(validate_queue_layout(g, layout).is_valid);
        if (n >= 2) CHECK(max_rainbow(g, layout.order) == 1);
    }
}

TEST_CASE("blowing up a one-queue host keeps queues below the block size") {
    Graph host(5);
    for (int i = 0; i + 1 < 5; ++i) host.add_edge(i, i + 1);
    QueueLayout host_layout = assign_queues_by_depth(host, {0, 1, 2, 3, 4});
    REQUIRE(host_layout.queue_count == 1);

    std::vector<int> sizes{2, 3, 1, 2, 2};
    std::vector<int> offset{0};
    for (int s : sizes) offset.push_back(offset.back() + s);
    Graph blown(offset.back());
    for (auto [u, v] : host.edge_list())
        for (int a = offset[u]; a < offset[u + 1]; ++a)
            for (int b = offset[v]; b < offset[v + 1]; ++b) blown.add_edge(a, b);

    QueueLayout layout = blowup_layout(host, host_layout, sizes, blown);
    CHECK(validate_queue_layout(blown, layout).is_valid);
    CHECK(layout.queue_count <= 3);  // max block size
    CHECK(layout.queue_count >= 2);  // a 2x3 bundle already nests twice
}

TEST_CASE("blowup rejects bad hosts and stray edges") {
    Graph host(3);
    host.add_edge(0, 1);
    host.add_edge(1, 2);
    QueueLayout host_layout = assign_queues_by_depth(host, {0, 1, 2});

    Graph intra(6);
    intra.add_edge(0, 1);  // inside block 0
    try {
        blowup_layout(host, host_layout, {2, 2, 2}, intra);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == "HostMismatch");
    }
    Graph skip(6);
    skip.add_edge(0, 4);  // blocks 0 and 2 are not host-adjacent
    CHECK_THROWS_AS(blowup_layout(host, host_layout, {2, 2, 2}, skip), Error);

    QueueLayout two_queues = assign_queues_by_depth(complete_graph(4), {0, 1, 2, 3});
    REQUIRE(two_queues.queue_count == 2);
    Graph blown4(8);
    try {
        blowup_layout(complete_graph(4), two_queues, {2, 2, 2, 2}, blown4);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code == "NotAOneQueueHost");
    }
    Graph wrong(5);
    CHECK_THROWS_AS(blowup_layout(host, host_layout, {2, 2, 2}, wrong), Error);
}
