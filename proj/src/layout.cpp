#include "planq/layout.hpp"

#include <algorithm>
#include <cassert>
#include <string>
#include <vector>

#include "planq/error.hpp"
#include "planq/generate.hpp"

namespace planq {

namespace {

struct Interval {
    int l, r;   // positions, l < r
    int index;  // into edge_list order
};

std::vector<Interval> edge_intervals(const Graph& g, const std::vector<int>& pos) {
    std::vector<Interval> iv;
    auto edges = g.edge_list();
    iv.reserve(edges.size());
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
        int a = pos[edges[i].first], b = pos[edges[i].second];
        iv.push_back({std::min(a, b), std::max(a, b), i});
    }
    return iv;
}

void check_order(const Graph& g, const std::vector<int>& order) {
    require(static_cast<int>(order.size()) == g.n, "BadParameters", "ordering has wrong length");
    std::vector<char> seen(g.n, 0);
    for (int v : order) {
        require(v >= 0 && v < g.n && !seen[v], "BadParameters", "ordering is not a permutation");
        seen[v] = 1;
    }
}

// Prefix-maximum Fenwick tree over ranks.
struct FenwickMax {
    std::vector<int> best;
    explicit FenwickMax(int n) : best(n + 1, -1) {}
    void update(int i, int val) {
        for (++i; i < static_cast<int>(best.size()); i += i & -i)
            best[i] = std::max(best[i], val);
    }
    int query(int i) const {  // max over [0, i], -1 when empty
        int res = -1;
        for (++i; i > 0; i -= i & -i) res = std::max(res, best[i]);
        return res;
    }
};

// Nesting depth per edge: the length of the longest chain of strictly
// containing edges. Edges sorted by left ascending; same-left groups are
// queried before insertion so equal lefts never chain; right endpoints are
// ranked descending so "strictly containing" becomes a strict prefix.
std::vector<int> nesting_depths(const std::vector<Interval>& iv_in) {
    std::vector<Interval> iv = iv_in;
    std::sort(iv.begin(), iv.end(), [](const Interval& a, const Interval& b) {
        if (a.l != b.l) return a.l < b.l;
        return a.r < b.r;
    });
    std::vector<int> rights;
    rights.reserve(iv.size());
    for (const auto& e : iv) rights.push_back(e.r);
    std::sort(rights.begin(), rights.end(), std::greater<int>());
    rights.erase(std::unique(rights.begin(), rights.end()), rights.end());
    auto rank_of = [&](int r) {
        return static_cast<int>(std::lower_bound(rights.begin(), rights.end(), r,
                                                 std::greater<int>()) -
                                rights.begin());
    };
    FenwickMax fw(static_cast<int>(rights.size()));
    std::vector<int> depth(iv.size(), 0);
    std::size_t i = 0;
    while (i < iv.size()) {
        std::size_t j = i;
        while (j < iv.size() && iv[j].l == iv[i].l) ++j;
        for (std::size_t k = i; k < j; ++k) {
            int rk = rank_of(iv[k].r);
            depth[iv[k].index] = fw.query(rk - 1) + 1;  // containing edges have larger r
        }
        for (std::size_t k = i; k < j; ++k)
            fw.update(rank_of(iv[k].r), depth[iv[k].index]);
        i = j;
    }
    return depth;
}

}  // namespace

std::vector<int> positions_of(const std::vector<int>& order) {
    std::vector<int> pos(order.size(), -1);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) pos[order[i]] = i;
    return pos;
}

int max_rainbow(const Graph& g, const std::vector<int>& order) {
    check_order(g, order);
    auto iv = edge_intervals(g, positions_of(order));
    if (iv.empty()) return 0;
    auto depth = nesting_depths(iv);
    return *std::max_element(depth.begin(), depth.end()) + 1;
}

QueueLayout assign_queues_by_depth(const Graph& g, const std::vector<int>& order) {
    check_order(g, order);
    QueueLayout res;
    res.order = order;
    res.pos = positions_of(order);
    auto iv = edge_intervals(g, res.pos);
    if (iv.empty()) return res;
    res.queue_of = nesting_depths(iv);
    res.queue_count = *std::max_element(res.queue_of.begin(), res.queue_of.end()) + 1;
    return res;
}

LayoutReport validate_queue_layout(const Graph& g, const QueueLayout& layout) {
    LayoutReport rep;
    rep.queue_count = layout.queue_count;
    auto edges = g.edge_list();
    if (static_cast<int>(layout.order.size()) != g.n ||
        static_cast<int>(layout.queue_of.size()) != static_cast<int>(edges.size())) {
        rep.first_violation = "layout shape does not match the graph";
        return rep;
    }
    {
        std::vector<char> seen(g.n, 0);
        for (int v : layout.order) {
            if (v < 0 || v >= g.n || seen[v]) {
                rep.first_violation = "ordering is not a permutation";
                return rep;
            }
            seen[v] = 1;
        }
    }
    if (layout.pos != positions_of(layout.order)) {
        rep.first_violation = "pos is inconsistent with order";
        return rep;
    }
    for (int q : layout.queue_of)
        if (q < 0 || q >= layout.queue_count) {
            rep.first_violation = "queue index out of range";
            return rep;
        }

    auto iv = edge_intervals(g, layout.pos);
    auto name = [&](int i) {
        return "(" + std::to_string(edges[i].first) + "," + std::to_string(edges[i].second) + ")";
    };
    auto report_pair = [&](int outer, int inner, int q) {
        rep.first_violation = "edges " + name(outer) + " and " + name(inner) +
                              " nest in queue " + std::to_string(q);
    };

    if (edges.size() <= 10000) {
        for (std::size_t a = 0; a < iv.size(); ++a)
            for (std::size_t b = 0; b < iv.size(); ++b) {
                if (layout.queue_of[iv[a].index] != layout.queue_of[iv[b].index]) continue;
                if (iv[a].l < iv[b].l && iv[b].r < iv[a].r) {
                    report_pair(iv[a].index, iv[b].index, layout.queue_of[iv[a].index]);
                    return rep;
                }
            }
    } else {
        // per queue: sort by left; an edge nests under the max-right edge seen
        // at a strictly smaller left, so one sweep with same-left batching finds
        // a violation if any exists
        std::vector<std::vector<Interval>> by_queue(layout.queue_count);
        for (const auto& e : iv) by_queue[layout.queue_of[e.index]].push_back(e);
        for (int q = 0; q < layout.queue_count; ++q) {
            auto& list = by_queue[q];
            std::sort(list.begin(), list.end(), [](const Interval& a, const Interval& b) {
                if (a.l != b.l) return a.l < b.l;
                return a.r < b.r;
            });
            int best_r = -1, best_idx = -1;
            std::size_t i = 0;
            while (i < list.size()) {
                std::size_t j = i;
                while (j < list.size() && list[j].l == list[i].l) ++j;
                for (std::size_t k = i; k < j; ++k)
                    if (best_r > list[k].r) {
                        report_pair(best_idx, list[k].index, q);
                        return rep;
                    }
                for (std::size_t k = i; k < j; ++k)
                    if (list[k].r > best_r) {
                        best_r = list[k].r;
                        best_idx = list[k].index;
                    }
                i = j;
            }
        }
    }
    rep.is_valid = true;
    return rep;
}

QueueLayout complete_graph_layout(int l) {
    require(l >= 1, "BadParameters", "complete layout needs at least 1 vertex");
    QueueLayout res;
    res.order.resize(l);
    for (int i = 0; i < l; ++i) res.order[i] = i;
    res.pos = res.order;
    for (int u = 0; u < l; ++u)
        for (int v = u + 1; v < l; ++v) res.queue_of.push_back((v - u - 1) / 2);
    res.queue_count = l / 2;
    return res;
}

QueueLayout grid_layout(int n) {
    require(n >= 1, "BadParameters", "grid layout needs a positive side");
    Graph g = grid_graph(n);
    QueueLayout res;
    res.order.resize(g.n);
    for (int i = 0; i < g.n; ++i) res.order[i] = i;
    std::sort(res.order.begin(), res.order.end(), [n](int a, int b) {
        int sa = a / n + a % n, sb = b / n + b % n;
        if (sa != sb) return sa < sb;
        return a % n < b % n;
    });
    res.pos = positions_of(res.order);
    res.queue_of.assign(g.num_edges(), 0);
    res.queue_count = g.num_edges() > 0 ? 1 : 0;
    return res;
}

QueueLayout blowup_layout(const Graph& host, const QueueLayout& host_layout,
                          const std::vector<int>& block_sizes, const Graph& blown) {
    require(host_layout.queue_count <= 1, "NotAOneQueueHost",
            "host layout must use a single queue");
    check_order(host, host_layout.order);
    require(static_cast<int>(block_sizes.size()) == host.n, "BadParameters",
            "one block size per host vertex required");
    std::vector<int> offset(host.n + 1, 0);
    for (int i = 0; i < host.n; ++i) {
        require(block_sizes[i] >= 0, "BadParameters", "negative block size");
        offset[i + 1] = offset[i] + block_sizes[i];
    }
    require(blown.n == offset[host.n], "BadParameters",
            "blown graph order does not match total block size");
    std::vector<int> block_of(blown.n);
    for (int i = 0; i < host.n; ++i)
        for (int v = offset[i]; v < offset[i + 1]; ++v) block_of[v] = i;
    for (auto [u, v] : blown.edge_list()) {
        int bu = block_of[u], bv = block_of[v];
        require(bu != bv && host.has_edge(bu, bv), "HostMismatch",
                "edge joins blocks of non-adjacent host vertices");
    }
    std::vector<int> order;
    order.reserve(blown.n);
    for (int hv : host_layout.order)
        for (int v = offset[hv]; v < offset[hv + 1]; ++v) order.push_back(v);
    return assign_queues_by_depth(blown, order);
}

}  // namespace planq
