#include "planq/assemble.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

#include "planq/error.hpp"
#include "planq/planarity.hpp"
#include "planq/triangulate.hpp"

namespace planq {

namespace {

void internal_check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(std::string("assemble: ") + msg);
}

Graph quotient_of(const Graph& g, const std::vector<int>& part_of, int num_parts) {
    Graph q(num_parts);
    for (auto [u, v] : g.edge_list()) {
        int a = part_of[u], b = part_of[v];
        if (a != b) q.add_edge_if_absent(std::min(a, b), std::max(a, b));
    }
    return q;
}

struct PrefixMax {
    std::vector<int> tree;
    explicit PrefixMax(int n) : tree(n + 1, -1) {}
    void raise(int i, int v) {
        for (++i; i < static_cast<int>(tree.size()); i += i & -i) tree[i] = std::max(tree[i], v);
    }
    int best_up_to(int i) const {  // max over [0, i], -1 when empty or i < 0
        int r = -1;
        for (++i; i > 0; i -= i & -i) r = std::max(r, tree[i]);
        return r;
    }
};

// Nesting depth inside one edge class: depth of an interval = longest chain of
// strictly containing class intervals. Writes offset + depth per edge and
// returns the number of queues the class uses.
int assign_class_depths(std::vector<std::array<int, 3>>& iv, std::vector<int>& queue_of,
                        int offset) {
    if (iv.empty()) return 0;
    std::sort(iv.begin(), iv.end());
    std::vector<int> rights;
    rights.reserve(iv.size());
    for (const auto& a : iv) rights.push_back(a[1]);
    std::sort(rights.begin(), rights.end(), std::greater<int>());
    rights.erase(std::unique(rights.begin(), rights.end()), rights.end());
    auto rank = [&](int r) {
        return static_cast<int>(std::lower_bound(rights.begin(), rights.end(), r,
                                                 std::greater<int>()) -
                                rights.begin());
    };
    PrefixMax fw(static_cast<int>(rights.size()));
    int used = 0;
    for (std::size_t i = 0; i < iv.size();) {
        std::size_t j = i;
        while (j < iv.size() && iv[j][0] == iv[i][0]) ++j;
        for (std::size_t t = i; t < j; ++t) {
            int depth = fw.best_up_to(rank(iv[t][1]) - 1) + 1;
            queue_of[iv[t][2]] = offset + depth;
            used = std::max(used, depth + 1);
        }
        for (std::size_t t = i; t < j; ++t)
            fw.raise(rank(iv[t][1]), queue_of[iv[t][2]] - offset);
        i = j;
    }
    return used;
}

}  // namespace

QueueLayout tree_decomposition_layout(const Graph& h, const TreeDecomposition& td) {
    auto rep = validate_tree_decomposition(h, td);
    require(rep.is_valid, "InvalidDecomposition",
            "decomposition does not cover the graph: " + rep.violation);
    QueueLayout out;
    if (h.n == 0) return out;

    int max_bag = 1;
    for (const auto& bag : td.bags) max_bag = std::max(max_bag, static_cast<int>(bag.size()));
    const int cap = std::min(max_bag, h.n);
    const int t = td.num_nodes();

    // Sliding-clique walk over the decomposition tree: each vertex is
    // introduced exactly once, into the clique of current residents. Drops
    // never evict a member of the bag in hand, so every co-bag pair is
    // co-resident at some moment, and residency is a single interval of the
    // walk; hence attach[v] (the residents at v's introduction) generate a
    // chordal supergraph of h per decomposition component, with cliques of at
    // most cap vertices.
    std::vector<std::vector<int>> attach(h.n);
    std::vector<int> intro(h.n, -1);
    std::vector<std::vector<int>> sup(h.n);
    {
        std::vector<std::vector<int>> nbr(t);
        for (auto [a, b] : td.tree_edges) {
            nbr[a].push_back(b);
            nbr[b].push_back(a);
        }
        std::vector<char> seen(t, 0);
        std::vector<char> in_bag_now(h.n, 0);
        int next_rank = 0;
        for (int start = 0; start < t; ++start) {
            if (seen[start]) continue;
            std::vector<std::pair<int, std::vector<int>>> stack;
            stack.push_back({start, {}});
            seen[start] = 1;
            while (!stack.empty()) {
                auto [x, cur] = std::move(stack.back());
                stack.pop_back();
                std::vector<int> bag = td.bags[x];
                std::sort(bag.begin(), bag.end());
                for (int v : bag) in_bag_now[v] = 1;
                for (int v : bag) {
                    if (intro[v] != -1) continue;
                    while (static_cast<int>(cur.size()) >= cap) {
                        int at = -1;
                        for (std::size_t i = 0; i < cur.size(); ++i)
                            if (!in_bag_now[cur[i]]) {
                                at = static_cast<int>(i);
                                break;
                            }
                        internal_check(at >= 0, "resident clique stuck at capacity");
                        cur.erase(cur.begin() + at);
                    }
                    attach[v] = cur;
                    for (int u : cur) {
                        sup[u].push_back(v);
                        sup[v].push_back(u);
                    }
                    intro[v] = next_rank++;
                    cur.push_back(v);
                }
                for (int v : bag) in_bag_now[v] = 0;
                for (int y : nbr[x])
                    if (!seen[y]) {
                        seen[y] = 1;
                        stack.push_back({y, cur});
                    }
            }
        }
        internal_check(next_rank == h.n, "walk missed vertices");
    }

    std::vector<int> order;
    order.reserve(h.n);
    std::vector<int> pos(h.n, -1);
    auto place = [&](int v) {
        internal_check(pos[v] == -1, "vertex placed twice");
        pos[v] = static_cast<int>(order.size());
        order.push_back(v);
    };

    // scratch stamps, valid only while the stored epoch matches the reader's
    std::vector<long long> member_epoch(h.n, 0), depth_epoch(h.n, 0);
    std::vector<int> depth_of(h.n, -1);
    long long epoch = 0;

    // emit(cell): split the cell into levels by distance from its attachment
    // roots (members whose attachment clique lies outside the cell), recurse
    // level by level. A cell that is all roots is placed sorted by the
    // positions of its attachment cliques, ascending lexicographic, ties by
    // id. Levels sit in nested position intervals and each member keeps at
    // least one attachment in the level above, so every level strictly
    // shrinks the attachment cliques: nesting ends after at most cap splits.
    std::function<void(std::vector<int>&)> emit = [&](std::vector<int>& cell) {
        if (cell.size() == 1) {
            place(cell[0]);
            return;
        }
        const long long my = ++epoch;
        for (int v : cell) member_epoch[v] = my;
        std::vector<int> roots;
        for (int v : cell) {
            bool rooted = true;
            for (int u : attach[v])
                if (member_epoch[u] == my) {
                    rooted = false;
                    break;
                }
            if (rooted) roots.push_back(v);
        }
        internal_check(!roots.empty(), "cell without attachment roots");
        if (roots.size() == cell.size()) {
            std::vector<std::pair<std::vector<int>, int>> keyed;
            keyed.reserve(cell.size());
            for (int v : cell) {
                std::vector<int> key;
                key.reserve(attach[v].size());
                for (int u : attach[v]) {
                    internal_check(pos[u] >= 0, "attachment not placed before its cell");
                    key.push_back(pos[u]);
                }
                std::sort(key.begin(), key.end(), std::greater<int>());
                keyed.push_back({std::move(key), v});
            }
            std::sort(keyed.begin(), keyed.end());
            for (auto& kv : keyed) place(kv.second);
            return;
        }
        std::vector<std::vector<int>> levels;
        levels.push_back(std::move(roots));
        for (int v : levels[0]) {
            depth_epoch[v] = my;
            depth_of[v] = 0;
        }
        std::size_t covered = levels[0].size();
        while (true) {
            std::vector<int> next;
            for (int u : levels.back())
                for (int w : sup[u])
                    if (member_epoch[w] == my && depth_epoch[w] != my) {
                        depth_epoch[w] = my;
                        depth_of[w] = static_cast<int>(levels.size());
                        next.push_back(w);
                    }
            if (next.empty()) break;
            std::sort(next.begin(), next.end());
            covered += next.size();
            levels.push_back(std::move(next));
        }
        internal_check(covered == cell.size(), "levels miss part of a cell");
        // distance from the roots must equal one plus the nearest attachment
        for (std::size_t d = 1; d < levels.size(); ++d)
            for (int v : levels[d]) {
                int best = -1;
                for (int u : attach[v])
                    if (member_epoch[u] == my)
                        best = best < 0 ? depth_of[u] : std::min(best, depth_of[u]);
                internal_check(best == static_cast<int>(d) - 1,
                               "level distance disagrees with the attachment structure");
            }
        // Assign every member to the cluster of the root reached by always
        // stepping to the shallowest (oldest on ties) in-cell attachment.
        // Clusters are emitted contiguously, ordered by the positions of their
        // root's attachment clique, one level at a time inside each cluster.
        {
            std::vector<int> croot(h.n, -1);
            for (int v : levels[0]) croot[v] = v;
            for (std::size_t d = 1; d < levels.size(); ++d)
                for (int v : levels[d]) {
                    int best = -1;
                    for (int u : attach[v])
                        if (member_epoch[u] == my && depth_of[u] == static_cast<int>(d) - 1 &&
                            (best == -1 || intro[u] < intro[best]))
                            best = u;
                    internal_check(best >= 0, "member without a shallower attachment");
                    croot[v] = croot[best];
                    internal_check(croot[v] >= 0, "cluster root unresolved");
                }
            std::vector<std::pair<std::vector<int>, int>> keyed_roots;
            keyed_roots.reserve(levels[0].size());
            for (int r : levels[0]) {
                std::vector<int> key;
                key.reserve(attach[r].size());
                for (int u : attach[r]) {
                    internal_check(pos[u] >= 0, "root attachment not placed");
                    key.push_back(pos[u]);
                }
                std::sort(key.begin(), key.end(), std::greater<int>());
                keyed_roots.push_back({std::move(key), r});
            }
            std::sort(keyed_roots.begin(), keyed_roots.end());
            for (auto& kr : keyed_roots) {
                const int r = kr.second;
                for (std::size_t d = 0; d < levels.size(); ++d) {
                    std::vector<int> slice;
                    for (int v : levels[d])
                        if (croot[v] == r) slice.push_back(v);
                    if (slice.empty()) {
                        if (d > 0) break;
                        continue;
                    }
                    emit(slice);
                }
            }
        }
    };
    std::vector<int> all(h.n);
    std::iota(all.begin(), all.end(), 0);
    emit(all);
    internal_check(static_cast<int>(order.size()) == h.n, "order misses vertices");
    return assign_queues_by_depth(h, order);
}

QueueLayout partition_queue_layout(const Graph& g, const Partition& p, const Layering& l,
                                   const QueueLayout& host_layout, AssignStrategy strategy) {
    int n = g.n, np = p.num_parts();
    require(static_cast<int>(p.part_of.size()) == n, "BadParameters",
            "partition does not match the graph");
    require(is_valid_layering(g, l), "BadParameters", "layering does not cover the graph");
    for (int v = 0; v < n; ++v)
        require(p.part_of[v] >= 0 && p.part_of[v] < np, "BadParameters",
                "vertex outside every part");

    require(static_cast<int>(host_layout.order.size()) == np &&
                static_cast<int>(host_layout.pos.size()) == np,
            "HostMismatch", "host layout is not over the quotient's vertices");
    {
        std::vector<char> hit(np, 0);
        for (int x : host_layout.order) {
            require(x >= 0 && x < np && !hit[x], "HostMismatch",
                    "host layout is not over the quotient's vertices");
            hit[x] = 1;
            require(host_layout.pos[x] >= 0 &&
                        host_layout.order[host_layout.pos[x]] == x,
                    "HostMismatch", "host layout positions disagree with its order");
        }
    }

    int measured = 0;
    {
        std::vector<std::vector<int>> per_part_layer(np);
        for (int v = 0; v < n; ++v) {
            auto& counts = per_part_layer[p.part_of[v]];
            int d = l.layer_of[v];
            if (d >= static_cast<int>(counts.size())) counts.resize(d + 1, 0);
            measured = std::max(measured, ++counts[d]);
        }
    }
    require(measured <= p.declared_layered_width, "WidthMismatch",
            "measured layered width exceeds the declared width");

    QueueLayout out;
    out.order.resize(n);
    std::iota(out.order.begin(), out.order.end(), 0);
    std::sort(out.order.begin(), out.order.end(), [&](int a, int b) {
        if (l.layer_of[a] != l.layer_of[b]) return l.layer_of[a] < l.layer_of[b];
        int pa = host_layout.pos[p.part_of[a]], pb = host_layout.pos[p.part_of[b]];
        if (pa != pb) return pa < pb;
        return a < b;
    });
    out.pos = positions_of(out.order);

    if (strategy == AssignStrategy::Depth) return assign_queues_by_depth(g, out.order);

    auto hrep = validate_queue_layout(p.quotient, host_layout);
    require(hrep.is_valid, "HostMismatch",
            "host layout is not a queue layout of the quotient: " + hrep.first_violation);

    // position inside the (layer, part) cell; cells are consecutive runs of
    // the vertex order
    std::vector<int> cellpos(n, 0);
    for (int i = 0; i < n; ++i) {
        int v = out.order[i];
        if (i > 0) {
            int u = out.order[i - 1];
            if (l.layer_of[u] == l.layer_of[v] && p.part_of[u] == p.part_of[v])
                cellpos[v] = cellpos[u] + 1;
        }
    }

    auto edges = g.edge_list();
    auto qedges = p.quotient.edge_list();
    int m = static_cast<int>(edges.size());
    out.queue_of.assign(m, -1);
    int k = host_layout.queue_count;

    // four classes: same part same layer, same part adjacent layers, distinct
    // parts per host queue (same layer), distinct parts per host queue and
    // direction (adjacent layers)
    int pair_used = 0;
    std::vector<int> pair_queue(m, -1);
    std::vector<std::array<int, 3>> within;
    std::vector<std::vector<std::array<int, 3>>> level(k), up(k), down(k);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = edges[e];
        int lo = out.pos[u] < out.pos[v] ? u : v, hi = lo == u ? v : u;
        std::array<int, 3> iv{out.pos[lo], out.pos[hi], e};
        int P = p.part_of[u], Q = p.part_of[v];
        if (P == Q) {
            if (l.layer_of[u] == l.layer_of[v]) {
                pair_queue[e] = (cellpos[hi] - cellpos[lo] - 1) / 2;
                pair_used = std::max(pair_used, pair_queue[e] + 1);
            } else {
                within.push_back(iv);
            }
            continue;
        }
        int qi = edge_index(qedges, P, Q);
        require(qi >= 0, "HostMismatch", "edge joins parts that are not adjacent in the quotient");
        int hq = host_layout.queue_of[qi];
        if (l.layer_of[u] == l.layer_of[v]) {
            level[hq].push_back(iv);
        } else {
            int base = l.layer_of[u] < l.layer_of[v] ? u : v;
            int peak = base == u ? v : u;
            bool forward = host_layout.pos[p.part_of[base]] < host_layout.pos[p.part_of[peak]];
            (forward ? up : down)[hq].push_back(iv);
        }
    }

    internal_check(pair_used <= measured / 2, "cell pairing exceeded its budget");
    int offset = pair_used;
    for (int e = 0; e < m; ++e)
        if (pair_queue[e] >= 0) out.queue_of[e] = pair_queue[e];
    int used = assign_class_depths(within, out.queue_of, offset);
    internal_check(used <= measured, "within-part class exceeded its budget");
    offset += used;
    for (auto* family : {&level, &up, &down})
        for (int q = 0; q < k; ++q) {
            used = assign_class_depths((*family)[q], out.queue_of, offset);
            internal_check(used <= measured, "cross-part class exceeded its budget");
            offset += used;
        }
    out.queue_count = offset;
    for (int e = 0; e < m; ++e) internal_check(out.queue_of[e] >= 0, "edge left unassigned");
    return out;
}

PipelineResult planar_pipeline(const Graph& g, PartitionMode mode, AssignStrategy strategy) {
    PipelineResult res;
    if (g.n < 3) {
        res.triangulation = planar_embed(g);
        auto lr = bfs_layering_auto(g);
        res.layering = lr.layering;
        res.forest = lr.forest;
        for (int v = 0; v < g.n; ++v) {
            res.partition.parts.push_back({v});
            res.partition.legs.push_back({{v}});
            res.partition.part_of.push_back(v);
        }
        res.partition.quotient = quotient_of(g, res.partition.part_of, g.n);
        if (g.n > 0) {
            std::vector<int> all(g.n);
            std::iota(all.begin(), all.end(), 0);
            res.td.bags.push_back(all);
        }
        res.host_layout = tree_decomposition_layout(res.partition.quotient, res.td);
        res.layout =
            partition_queue_layout(g, res.partition, res.layering, res.host_layout, strategy);
        return res;
    }

    Embedding emb = planar_embed(g);
    auto tr = triangulate(emb, 0);
    res.triangulation = tr.embedding;
    res.added_edges = tr.added_edges;
    res.augmented = !tr.added_edges.empty();

    auto forest = bfs_layering(res.triangulation.graph, {0}).forest;
    PartitionResult part = mode == PartitionMode::Width1
                               ? vertical_path_partition(res.triangulation, forest)
                               : tripod_partition(res.triangulation, forest);
    res.layering = part.layering;
    res.forest = part.forest;
    res.partition = std::move(part.partition);
    res.td = std::move(part.td);
    // the layout of the input graph only needs the quotient edges the input
    // itself induces
    res.partition.quotient =
        quotient_of(g, res.partition.part_of, res.partition.num_parts());

    res.host_layout = tree_decomposition_layout(res.partition.quotient, res.td);
    res.layout = partition_queue_layout(g, res.partition, res.layering, res.host_layout, strategy);
    return res;
}

}  // namespace planq
