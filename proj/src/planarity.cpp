#include "planq/planarity.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <vector>

#include "planq/error.hpp"

namespace planq {

namespace {

/* Left-right planarity test with embedding phase. Directed edge ids: the
 * undirected edge k = (u, v) with u < v becomes 2k (u -> v) and 2k + 1
 * (v -> u); twin(e) = e ^ 1. -1 plays the role of "none" throughout. */
struct LRState {
    const Graph& g;
    int n, m;
    std::vector<std::pair<int, int>> edges;
    std::vector<int> esrc, edst;
    std::vector<std::vector<int>> out;  // out[v][i] = directed id of (v, adj[v][i])

    std::vector<int> height, parent_edge, roots;
    std::vector<int> lowpt, lowpt2;
    std::vector<long long> nesting_depth;  // doubled lowpt, sign-adjusted later
    std::vector<char> oriented;            // per undirected edge
    std::vector<int> orient_dir;           // directed id the edge was oriented as

    struct Interval {
        int lo = -1, hi = -1;
        bool empty() const { return lo == -1 && hi == -1; }
    };
    struct ConflictPair {
        Interval L, R;
    };
    std::vector<ConflictPair> S;
    std::vector<std::size_t> stack_bottom;
    std::vector<int> lowpt_edge, ref, side;
    std::vector<std::vector<int>> ordered;  // oriented out-edges sorted by nesting depth

    // rotation linked lists over directed edges, clockwise around the source
    std::vector<int> nxt_cw, nxt_ccw;
    std::vector<int> first_he, left_ref, right_ref;

    std::vector<int> ind;        // per-vertex adjacency cursor, reused per phase
    std::vector<char> returned;  // per directed edge: child DFS finished marker

    explicit LRState(const Graph& graph)
        : g(graph), n(graph.n), m(graph.num_edges()), edges(graph.edge_list()) {
        esrc.resize(2 * m);
        edst.resize(2 * m);
        for (int k = 0; k < m; ++k) {
            esrc[2 * k] = edges[k].first;
            edst[2 * k] = edges[k].second;
            esrc[2 * k + 1] = edges[k].second;
            edst[2 * k + 1] = edges[k].first;
        }
        out.resize(n);
        for (int v = 0; v < n; ++v) {
            out[v].reserve(g.adj[v].size());
            for (int w : g.adj[v]) {
                int k = edge_index(edges, v, w);
                out[v].push_back(2 * k + (v < w ? 0 : 1));
            }
        }
        height.assign(n, -1);
        parent_edge.assign(n, -1);
        lowpt.assign(2 * m, 0);
        lowpt2.assign(2 * m, 0);
        nesting_depth.assign(2 * m, 0);
        oriented.assign(m, 0);
        orient_dir.assign(m, -1);
        stack_bottom.assign(2 * m, 0);
        lowpt_edge.assign(2 * m, -1);
        ref.assign(2 * m, -1);
        side.assign(2 * m, 1);
        ind.assign(n, 0);
        returned.assign(2 * m, 0);
    }

    void dfs_orientation(int root) {
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            int pe = parent_edge[v];
            bool descended = false;
            while (ind[v] < static_cast<int>(out[v].size())) {
                int e = out[v][ind[v]];
                int w = edst[e];
                if (!returned[e]) {
                    if (oriented[e >> 1]) {
                        ++ind[v];
                        continue;
                    }
                    oriented[e >> 1] = 1;
                    orient_dir[e >> 1] = e;
                    lowpt[e] = height[v];
                    lowpt2[e] = height[v];
                    if (height[w] == -1) {  // tree edge
                        parent_edge[w] = e;
                        height[w] = height[v] + 1;
                        returned[e] = 1;
                        stack.push_back(w);
                        descended = true;
                        break;
                    }
                    lowpt[e] = height[w];  // back edge
                } else {
                    returned[e] = 0;  // post-processing after the child finished
                }
                nesting_depth[e] = 2 * lowpt[e];
                if (lowpt2[e] < height[v]) ++nesting_depth[e];  // chordal
                if (pe != -1) {
                    if (lowpt[e] < lowpt[pe]) {
                        lowpt2[pe] = std::min(lowpt[pe], lowpt2[e]);
                        lowpt[pe] = lowpt[e];
                    } else if (lowpt[e] > lowpt[pe]) {
                        lowpt2[pe] = std::min(lowpt2[pe], lowpt[e]);
                    } else {
                        lowpt2[pe] = std::min(lowpt2[pe], lowpt2[e]);
                    }
                }
                ++ind[v];
            }
            if (!descended) stack.pop_back();
        }
    }

    void sort_adjacency() {
        for (int v = 0; v < n; ++v) {
            ordered[v].clear();
            for (int e : out[v])
                if (oriented[e >> 1] && orient_dir[e >> 1] == e) ordered[v].push_back(e);
            std::stable_sort(ordered[v].begin(), ordered[v].end(),
                             [&](int a, int b) { return nesting_depth[a] < nesting_depth[b]; });
        }
    }

    static bool interval_conflicting(const Interval& i, int b, const std::vector<int>& lp) {
        return !i.empty() && lp[i.hi] > lp[b];
    }

    long long pair_lowest(const ConflictPair& p) const {
        if (p.L.empty() && p.R.empty()) return std::numeric_limits<long long>::min();
        if (p.L.empty()) return lowpt[p.R.lo];
        if (p.R.empty()) return lowpt[p.L.lo];
        return std::min(lowpt[p.L.lo], lowpt[p.R.lo]);
    }

    bool add_constraints(int ei, int e) {
        ConflictPair P;
        // merge return edges of ei into P.R
        do {
            assert(!S.empty());
            ConflictPair Q = S.back();
            S.pop_back();
            if (!Q.L.empty()) std::swap(Q.L, Q.R);
            if (!Q.L.empty()) return false;
            assert(Q.R.lo != -1);
            if (lowpt[Q.R.lo] > lowpt[e]) {
                if (P.R.empty()) P.R.hi = Q.R.hi;
                else ref[P.R.lo] = Q.R.hi;
                P.R.lo = Q.R.lo;
            } else {
                ref[Q.R.lo] = lowpt_edge[e];
            }
        } while (S.size() > stack_bottom[ei]);
        // merge conflicting return edges of earlier siblings into P.L
        while (!S.empty() && (interval_conflicting(S.back().L, ei, lowpt) ||
                              interval_conflicting(S.back().R, ei, lowpt))) {
            ConflictPair Q = S.back();
            S.pop_back();
            if (interval_conflicting(Q.R, ei, lowpt)) std::swap(Q.L, Q.R);
            if (interval_conflicting(Q.R, ei, lowpt)) return false;
            if (P.R.lo != -1) ref[P.R.lo] = Q.R.hi;  // merge below lowpt(ei) into P.R
            if (Q.R.lo != -1) P.R.lo = Q.R.lo;
            if (P.L.empty()) P.L.hi = Q.L.hi;
            else ref[P.L.lo] = Q.L.hi;
            P.L.lo = Q.L.lo;
        }
        if (!(P.L.empty() && P.R.empty())) S.push_back(P);
        return true;
    }

    void remove_back_edges(int e) {
        int u = esrc[e];
        // drop entire conflict pairs returning to u
        while (!S.empty() && pair_lowest(S.back()) == height[u]) {
            ConflictPair P = S.back();
            S.pop_back();
            if (P.L.lo != -1) side[P.L.lo] = -1;
        }
        if (!S.empty()) {  // one more pair: trim its intervals at u
            ConflictPair P = S.back();
            S.pop_back();
            while (P.L.hi != -1 && edst[P.L.hi] == u) P.L.hi = ref[P.L.hi];
            if (P.L.hi == -1 && P.L.lo != -1) {
                ref[P.L.lo] = P.R.lo;
                side[P.L.lo] = -1;
                P.L.lo = -1;
            }
            while (P.R.hi != -1 && edst[P.R.hi] == u) P.R.hi = ref[P.R.hi];
            if (P.R.hi == -1 && P.R.lo != -1) {
                ref[P.R.lo] = P.L.lo;
                side[P.R.lo] = -1;
                P.R.lo = -1;
            }
            S.push_back(P);
        }
        if (lowpt[e] < height[u] && !S.empty()) {  // side of e = side of a highest return edge
            int hl = S.back().L.hi, hr = S.back().R.hi;
            if (hl != -1 && (hr == -1 || lowpt[hl] > lowpt[hr])) ref[e] = hl;
            else ref[e] = hr;
        }
    }

    bool dfs_testing(int root) {
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            int e = parent_edge[v];
            bool descended = false;
            while (ind[v] < static_cast<int>(ordered[v].size())) {
                int ei = ordered[v][ind[v]];
                int w = edst[ei];
                if (!returned[ei]) {
                    stack_bottom[ei] = S.size();
                    if (ei == parent_edge[w]) {  // tree edge
                        returned[ei] = 1;
                        stack.push_back(w);
                        descended = true;
                        break;
                    }
                    lowpt_edge[ei] = ei;  // back edge
                    S.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
                } else {
                    returned[ei] = 0;
                }
                if (lowpt[ei] < height[v]) {  // ei has a return edge below v
                    if (ind[v] == 0) {
                        lowpt_edge[e] = lowpt_edge[ei];
                    } else if (!add_constraints(ei, e)) {
                        return false;
                    }
                }
                ++ind[v];
            }
            if (descended) continue;
            stack.pop_back();
            if (e != -1) remove_back_edges(e);
        }
        return true;
    }

    int sign_of(int e) {
        std::vector<int> chain;
        while (ref[e] != -1) {
            chain.push_back(e);
            e = ref[e];
        }
        int s = side[e];
        for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
            side[*it] *= s;
            s = side[*it];
            ref[*it] = -1;
        }
        return s;
    }

    // --- rotation list surgery (clockwise linked lists per source vertex) ---
    void list_init(int v, int e) {
        nxt_cw[e] = e;
        nxt_ccw[e] = e;
        first_he[v] = e;
    }
    void insert_after(int refE, int newE) {
        int nxt = nxt_cw[refE];
        nxt_cw[refE] = newE;
        nxt_ccw[newE] = refE;
        nxt_cw[newE] = nxt;
        nxt_ccw[nxt] = newE;
    }
    void insert_before(int refE, int newE) { insert_after(nxt_ccw[refE], newE); }
    void add_half_edge_first(int v, int e) {
        if (first_he[v] == -1) {
            list_init(v, e);
        } else {
            insert_before(first_he[v], e);
            first_he[v] = e;
        }
    }

    void dfs_embedding(int root) {
        std::vector<int> stack{root};
        while (!stack.empty()) {
            int v = stack.back();
            bool descended = false;
            while (ind[v] < static_cast<int>(ordered[v].size())) {
                int ei = ordered[v][ind[v]];
                int w = edst[ei];
                if (returned[ei]) {
                    returned[ei] = 0;
                    ++ind[v];
                    continue;
                }
                if (ei == parent_edge[w]) {  // tree edge: reversed half goes first at w
                    add_half_edge_first(w, ei ^ 1);
                    left_ref[v] = ei;
                    right_ref[v] = ei;
                    returned[ei] = 1;
                    stack.push_back(w);
                    descended = true;
                    break;
                }
                if (side[ei] == 1) {  // back edge on the right: after right_ref[w]
                    insert_after(right_ref[w], ei ^ 1);
                } else {  // on the left: before left_ref[w], becoming leftmost
                    insert_before(left_ref[w], ei ^ 1);
                    if (first_he[w] == left_ref[w]) first_he[w] = ei ^ 1;
                    left_ref[w] = ei ^ 1;
                }
                ++ind[v];
            }
            if (!descended) stack.pop_back();
        }
    }

    bool run(Embedding& result) {
        if (n > 2 && m > 3 * n - 6) return false;
        for (int v = 0; v < n; ++v)
            if (height[v] == -1) {
                height[v] = 0;
                roots.push_back(v);
                dfs_orientation(v);
            }
        ordered.resize(n);
        sort_adjacency();
        std::fill(ind.begin(), ind.end(), 0);
        for (int r : roots)
            if (!dfs_testing(r)) return false;

        for (int v = 0; v < n; ++v)
            for (int e : ordered[v]) nesting_depth[e] *= sign_of(e);
        sort_adjacency();  // now by signed nesting depth

        nxt_cw.assign(2 * m, -1);
        nxt_ccw.assign(2 * m, -1);
        first_he.assign(n, -1);
        left_ref.assign(n, -1);
        right_ref.assign(n, -1);
        for (int v = 0; v < n; ++v) {
            int prev = -1;
            for (int e : ordered[v]) {
                if (prev == -1) list_init(v, e);
                else insert_after(prev, e);
                prev = e;
            }
        }
        std::fill(ind.begin(), ind.end(), 0);
        for (int r : roots) dfs_embedding(r);

        result.graph = g;
        result.rotation.assign(n, {});
        for (int v = 0; v < n; ++v) {
            int start = first_he[v];
            if (start == -1) continue;
            int e = start;
            do {
                result.rotation[v].push_back(edst[e]);
                e = nxt_cw[e];
            } while (e != start);
            assert(result.rotation[v].size() == g.adj[v].size());
        }
        result.outer_face = m > 0 ? 0 : -1;
        return true;
    }
};

}  // namespace

Embedding planar_embed(const Graph& g) {
    LRState state(g);
    Embedding emb;
    require(state.run(emb), "NonPlanar", "graph admits no planar embedding");
    return emb;
}

bool is_planar(const Graph& g) {
    LRState state(g);
    Embedding emb;
    return state.run(emb);
}

}  // namespace planq
