#include "planq/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "planq/error.hpp"
#include "planq/layout.hpp"

namespace planq {

ExactQueueResult exact_queue_number(const Graph& g) {
    require(g.n <= 9, "TooLarge", "exhaustive queue search is limited to 9 vertices");
    ExactQueueResult res;
    res.witness_order.resize(g.n);
    std::iota(res.witness_order.begin(), res.witness_order.end(), 0);
    if (g.num_edges() == 0) return res;
    res.value = max_rainbow(g, res.witness_order);
    if (res.value == 1) return res;

    std::vector<int> order;
    std::vector<char> used(g.n, 0);
    bool stop = false;
    // induced_subgraph maps order[i] -> i, so the prefix is evaluated under
    // the identity ordering of the relabeled graph
    auto prefix_rainbow = [&]() {
        std::vector<int> identity(order.size());
        std::iota(identity.begin(), identity.end(), 0);
        return max_rainbow(induced_subgraph(g, order), identity);
    };

    // rainbow of the placed prefix only grows as vertices are appended, so a
    // prefix at the incumbent value can be cut; reversing an ordering keeps
    // every rainbow, so only orderings with front < back are visited
    auto dfs = [&](auto&& self) -> void {
        if (stop) return;
        if (static_cast<int>(order.size()) == g.n) {
            if (order.front() > order.back()) return;
            int value = prefix_rainbow();
            if (value < res.value) {
                res.value = value;
                res.witness_order = order;
                if (res.value == 1) stop = true;
            }
            return;
        }
        for (int v = 0; v < g.n && !stop; ++v) {
            if (used[v]) continue;
            order.push_back(v);
            used[v] = 1;
            if (prefix_rainbow() < res.value) self(self);
            order.pop_back();
            used[v] = 0;
        }
    };
    dfs(dfs);
    return res;
}

int exact_treewidth(const Graph& g) {
    require(g.n <= 12, "TooLarge", "exact treewidth is limited to 12 vertices");
    if (g.n == 0) return -1;
    int n = g.n;
    std::vector<int> nb(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.adj[v]) nb[v] |= 1 << w;

    // q(S, v): vertices outside S+{v} reachable from v through S
    auto q_count = [&](int S, int v) {
        int seen = 1 << v, frontier = nb[v];
        int inside = frontier & S;
        int outside = frontier & ~S & ~seen;
        while (inside) {
            int u = __builtin_ctz(inside);
            inside &= inside - 1;
            if (seen & (1 << u)) continue;
            seen |= 1 << u;
            int nxt = nb[u] & ~seen;
            inside |= nxt & S;
            outside |= nxt & ~S;
        }
        return __builtin_popcount(outside & ~(1 << v));
    };

    int full = (1 << n) - 1;
    std::vector<int> f(full + 1, 0);
    f[0] = -1;
    for (int S = 1; S <= full; ++S) {
        int best = n;
        for (int bits = S; bits; bits &= bits - 1) {
            int v = __builtin_ctz(bits);
            int T = S & ~(1 << v);
            best = std::min(best, std::max(f[T], q_count(T, v)));
        }
        f[S] = best;
    }
    return f[full];
}

}  // namespace planq
