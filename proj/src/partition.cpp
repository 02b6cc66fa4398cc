#include "planq/partition.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "planq/error.hpp"

namespace planq {

namespace {

void internal_check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(std::string("partition: ") + msg);
}

Graph make_quotient(const Graph& g, const std::vector<int>& part_of, int num_parts) {
    Graph q(num_parts);
    for (auto [u, v] : g.edge_list()) {
        int p = part_of[u], r = part_of[v];
        if (p != r) q.add_edge_if_absent(std::min(p, r), std::max(p, r));
    }
    return q;
}

Layering layering_from_depths(const std::vector<int>& depth) {
    Layering l;
    l.layer_of = depth;
    int height = 0;
    for (int d : depth) height = std::max(height, d + 1);
    l.layers.assign(height, {});
    for (int v = 0; v < static_cast<int>(depth.size()); ++v)
        if (depth[v] >= 0) l.layers[depth[v]].push_back(v);
    return l;
}

// Checks forest is a breadth-first spanning forest of g: parents are edges one
// layer up and no edge skips a layer.
bool is_bfs_forest(const Graph& g, const BfsForest& f) {
    int n = g.n;
    if (static_cast<int>(f.parent.size()) != n || static_cast<int>(f.depth.size()) != n)
        return false;
    std::vector<char> is_root(n, 0);
    for (int r : f.roots) {
        if (r < 0 || r >= n || is_root[r]) return false;
        is_root[r] = 1;
        if (f.depth[r] != 0 || f.parent[r] != -1) return false;
    }
    for (int v = 0; v < n; ++v) {
        if (is_root[v]) continue;
        int p = f.parent[v];
        if (p < 0 || p >= n || !g.has_edge(p, v)) return false;
        if (f.depth[v] != f.depth[p] + 1) return false;
    }
    for (int u = 0; u < n; ++u)
        for (int v : g.adj[u])
            if (std::abs(f.depth[u] - f.depth[v]) > 1) return false;
    return true;
}

bool is_triangulation(const Embedding& emb) {
    if (emb.graph.n < 3) return false;
    if (!is_valid_embedding(emb)) return false;
    if (num_components(emb.graph) != 1) return false;
    if (emb.graph.num_edges() != 3 * emb.graph.n - 6) return false;
    FaceTrace ft = trace_faces(emb);
    for (const auto& face : ft.faces)
        if (face.size() != 3) return false;
    return true;
}

// The recursive frame: a simple cycle (walk, in the direction whose forward
// faces lie outside the remaining region) split into maximal runs that each
// live inside one already-created part. arc_of[0] == 0 and run indices ascend
// with walk position, so a run never spans the position wrap.
struct Frame {
    std::vector<int> walk;
    std::vector<int> arc_of;
    std::vector<int> arc_parts;
    int parent_bag = -1;
};

enum class Mode { Width1, Tripod };

struct Engine {
    const Graph& g;
    const std::vector<std::vector<int>>& rot;
    const BfsForest& forest;
    Mode mode;

    FaceTrace ft;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::array<int, 2>> face_side;  // per edge (u<v): face of u->v, face of v->u

    std::vector<std::vector<int>> parts;
    std::vector<int> part_of;
    std::vector<std::vector<std::vector<int>>> legs;
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> tree_edges;

    // epoch-stamped scratch
    int epoch = 0;
    std::vector<int> walk_pos_epoch, walk_pos;
    std::vector<int> edge_epoch;
    std::vector<int> face_epoch;
    std::vector<int> vert_epoch;
    std::vector<int> colour_epoch, colour;

    Engine(const Graph& g_, const std::vector<std::vector<int>>& rot_, const BfsForest& forest_,
           Mode mode_, const Embedding& emb)
        : g(g_), rot(rot_), forest(forest_), mode(mode_) {
        ft = trace_faces(emb);
        edges = g.edge_list();
        face_side.assign(edges.size(), {-1, -1});
        for (int u = 0; u < g.n; ++u)
            for (int i = 0; i < static_cast<int>(rot[u].size()); ++i) {
                int v = rot[u][i];
                int k = edge_index(edges, u, v);
                face_side[k][u < v ? 0 : 1] = ft.face_of[u][i];
            }
        walk_pos_epoch.assign(g.n, -1);
        walk_pos.assign(g.n, -1);
        edge_epoch.assign(edges.size(), -1);
        face_epoch.assign(ft.num_faces(), -1);
        vert_epoch.assign(g.n, -1);
        colour_epoch.assign(g.n, -1);
        colour.assign(g.n, 0);
    }

    int edge_id(int u, int v) const { return edge_index(edges, u, v); }

    // Face on the region side of the forward walk edge (a -> b).
    int inside_face(int a, int b) const {
        int k = edge_id(a, b);
        return face_side[k][a < b ? 1 : 0];
    }

    int new_part(std::vector<std::vector<int>> part_legs) {
        int id = static_cast<int>(parts.size());
        std::vector<int> verts;
        for (const auto& leg : part_legs) verts.insert(verts.end(), leg.begin(), leg.end());
        std::sort(verts.begin(), verts.end());
        internal_check(std::adjacent_find(verts.begin(), verts.end()) == verts.end(),
                       "part vertices repeat");
        for (int v : verts) {
            internal_check(part_of[v] == -1, "vertex assigned twice");
            part_of[v] = id;
        }
        parts.push_back(std::move(verts));
        legs.push_back(std::move(part_legs));
        return id;
    }

    void run(const std::vector<int>& outer_walk) {
        part_of.assign(g.n, -1);
        Frame init;
        init.walk = outer_walk;
        for (int i = 0; i < 3; ++i) {
            init.arc_of.push_back(i);
            init.arc_parts.push_back(new_part({{outer_walk[i]}}));
        }
        std::vector<Frame> stack{std::move(init)};
        while (!stack.empty()) {
            Frame f = std::move(stack.back());
            stack.pop_back();
            process(f, stack);
        }
    }

    void process(const Frame& f, std::vector<Frame>& stack) {
        const auto& W = f.walk;
        int L = static_cast<int>(W.size());
        int max_arcs = mode == Mode::Width1 ? 6 : 3;
        internal_check(L >= 3, "frame walk too short");
        internal_check(static_cast<int>(f.arc_parts.size()) <= max_arcs, "too many frame arcs");

        ++epoch;
        for (int p = 0; p < L; ++p) {
            internal_check(walk_pos_epoch[W[p]] != epoch, "frame walk revisits a vertex");
            walk_pos_epoch[W[p]] = epoch;
            walk_pos[W[p]] = p;
            edge_epoch[edge_id(W[p], W[(p + 1) % L])] = epoch;
        }

        // region sweep: faces reachable from the inside without crossing walk
        // edges; notes every region vertex and whether any is interior
        std::vector<int> region_verts;
        bool has_interior = false;
        {
            std::vector<int> todo{inside_face(W[0], W[1])};
            face_epoch[todo[0]] = epoch;
            while (!todo.empty()) {
                int fc = todo.back();
                todo.pop_back();
                const auto& fv = ft.faces[fc];
                for (int i = 0; i < 3; ++i) {
                    int a = fv[i], b = fv[(i + 1) % 3];
                    if (vert_epoch[a] != epoch) {
                        vert_epoch[a] = epoch;
                        region_verts.push_back(a);
                        if (walk_pos_epoch[a] != epoch) has_interior = true;
                    }
                    int k = edge_id(a, b);
                    if (edge_epoch[k] == epoch) continue;
                    int other = face_side[k][0] == fc ? face_side[k][1] : face_side[k][0];
                    if (face_epoch[other] != epoch) {
                        face_epoch[other] = epoch;
                        todo.push_back(other);
                    }
                }
            }
        }

        int bag_id = static_cast<int>(bags.size());
        std::vector<int> bag = f.arc_parts;
        if (f.parent_bag != -1) tree_edges.emplace_back(f.parent_bag, bag_id);

        if (!has_interior) {
            std::sort(bag.begin(), bag.end());
            bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
            bags.push_back(std::move(bag));
            return;
        }

        // three nonempty contiguous position blocks starting at position 0
        std::array<int, 3> bsize = block_sizes(f);
        auto block_of = [&](int p) { return p < bsize[0] ? 0 : (p < bsize[0] + bsize[1] ? 1 : 2); };

        // walk vertices take their block colour, interior vertices the colour
        // of the first walk vertex on their rootward chain
        for (int p = 0; p < L; ++p) {
            colour_epoch[W[p]] = epoch;
            colour[W[p]] = block_of(p);
        }
        for (int v : region_verts) {
            if (colour_epoch[v] == epoch) continue;
            std::vector<int> chain;
            int x = v;
            while (colour_epoch[x] != epoch) {
                chain.push_back(x);
                x = forest.parent[x];
                internal_check(x != -1, "rootward chain left the region");
            }
            for (int c : chain) {
                colour_epoch[c] = epoch;
                colour[c] = colour[x];
            }
        }

        int tau = sperner_walk(W, bsize);

        // corner per colour, then its leg: the rootward chain up to but not
        // including the first walk vertex
        std::array<int, 3> corner{};
        for (int v : ft.faces[tau]) corner[colour[v]] = v;
        std::array<std::vector<int>, 3> leg;
        std::array<int, 3> attach_pos{};
        for (int c = 0; c < 3; ++c) {
            int x = corner[c];
            while (walk_pos_epoch[x] != epoch) {
                leg[c].push_back(x);
                x = forest.parent[x];
            }
            internal_check(block_of(walk_pos[x]) == c, "leg attaches outside its block");
            attach_pos[c] = walk_pos[x];
        }

        std::array<int, 3> leg_part{-1, -1, -1};
        if (mode == Mode::Width1) {
            for (int c = 0; c < 3; ++c)
                if (!leg[c].empty()) leg_part[c] = new_part({leg[c]});
        } else {
            std::vector<std::vector<int>> tripod_legs;
            for (int c = 0; c < 3; ++c)
                if (!leg[c].empty()) tripod_legs.push_back(leg[c]);
            if (!tripod_legs.empty()) {
                int y = new_part(std::move(tripod_legs));
                for (int c = 0; c < 3; ++c)
                    if (!leg[c].empty()) leg_part[c] = y;
            }
        }
        for (int c = 0; c < 3; ++c)
            if (leg_part[c] != -1) bag.push_back(leg_part[c]);
        std::sort(bag.begin(), bag.end());
        bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
        internal_check(static_cast<int>(bag.size()) <= (mode == Mode::Width1 ? 9 : 4),
                       "bag too large");
        bags.push_back(std::move(bag));

        // children: forward arc between consecutive attachments, then down the
        // next corner's leg and back up this corner's leg
        for (int c = 2; c >= 0; --c) {
            int d = (c + 1) % 3;
            Frame child;
            child.parent_bag = bag_id;
            int runs = 0, prev_arc = -1;
            bool first = true;
            for (int p = attach_pos[c];; p = (p + 1) % L) {
                if (!first && p == attach_pos[c]) internal_check(false, "arc wrapped fully");
                int arc = f.arc_of[p];
                if (first || arc != prev_arc || p == 0) {
                    child.arc_parts.push_back(f.arc_parts[arc]);
                    ++runs;
                }
                child.walk.push_back(W[p]);
                child.arc_of.push_back(runs - 1);
                prev_arc = arc;
                first = false;
                if (p == attach_pos[d]) break;
            }
            auto push_leg_run = [&](const std::vector<int>& verts, int part) {
                if (verts.empty()) return;
                child.arc_parts.push_back(part);
                ++runs;
                for (int v : verts) {
                    child.walk.push_back(v);
                    child.arc_of.push_back(runs - 1);
                }
            };
            std::vector<int> down(leg[d].rbegin(), leg[d].rend());
            if (mode == Mode::Tripod) {
                std::vector<int> both = down;
                both.insert(both.end(), leg[c].begin(), leg[c].end());
                push_leg_run(both, leg_part[c] != -1 ? leg_part[c] : leg_part[d]);
            } else {
                push_leg_run(down, leg_part[d]);
                push_leg_run(leg[c], leg_part[c]);
            }
            if (child.walk.size() <= 2) continue;
            stack.push_back(std::move(child));
        }
    }

    std::array<int, 3> block_sizes(const Frame& f) const {
        int L = static_cast<int>(f.walk.size());
        int k = static_cast<int>(f.arc_parts.size());
        auto arc_len = [&](int a) {
            int len = 0;
            for (int x : f.arc_of)
                if (x == a) ++len;
            return len;
        };
        if (k >= 3) {
            int a = (k + 2) / 3, b = (k - a + 1) / 2;
            int s1 = 0, s2 = 0;
            for (int i = 0; i < a; ++i) s1 += arc_len(i);
            for (int i = a; i < a + b; ++i) s2 += arc_len(i);
            return {s1, s2, L - s1 - s2};
        }
        if (k == 2) {
            int l0 = arc_len(0), l1 = arc_len(1);
            bool split0 = l0 != l1 ? l0 > l1 : f.walk[0] < f.walk[l0];
            if (split0) return {(l0 + 1) / 2, l0 - (l0 + 1) / 2, l1};
            return {l0, (l1 + 1) / 2, l1 - (l1 + 1) / 2};
        }
        int s1 = (L + 2) / 3, s2 = (L - s1 + 1) / 2;
        return {s1, s2, L - s1 - s2};
    }

    // From the unique walk edge between blocks 0 and 1, cross (0,1)-coloured
    // edges face to face until a face shows all three colours.
    int sperner_walk(const std::vector<int>& W, const std::array<int, 3>& bsize) {
        const int limit = 2 * ft.num_faces() + 3;
        int a = W[bsize[0] - 1], b = W[bsize[0]];
        int entry = edge_id(a, b);
        int cur = inside_face(a, b);
        for (int step = 0; step < limit; ++step) {
            const auto& fv = ft.faces[cur];
            bool c0 = false, c1 = false, c2 = false;
            for (int v : fv) {
                c0 |= colour[v] == 0;
                c1 |= colour[v] == 1;
                c2 |= colour[v] == 2;
            }
            if (c0 && c1 && c2) return cur;
            int exit_edge = -1;
            for (int i = 0; i < 3; ++i) {
                int u = fv[i], v = fv[(i + 1) % 3];
                if (colour[u] + colour[v] != 1) continue;  // need colours {0,1}
                int k = edge_id(u, v);
                if (k != entry) exit_edge = k;
            }
            internal_check(exit_edge != -1, "no exit edge during face walk");
            internal_check(edge_epoch[exit_edge] != epoch, "face walk tried to cross the frame");
            cur = face_side[exit_edge][0] == cur ? face_side[exit_edge][1] : face_side[exit_edge][0];
            entry = exit_edge;
        }
        internal_check(false, "face walk did not terminate");
        return -1;
    }
};

}  // namespace

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& bag : bags) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

std::vector<int> sperner_colour(const Embedding& near_tri, const BfsForest& forest,
                                const std::vector<int>& r1, const std::vector<int>& r2,
                                const std::vector<int>& r3) {
    const Graph& g = near_tri.graph;
    require(is_valid_embedding(near_tri), "ParseError", "invalid embedding");
    require(static_cast<int>(forest.parent.size()) == g.n, "BadParameters",
            "forest does not match the graph");
    require(!r1.empty() && !r2.empty() && !r3.empty(), "BrokenFrame",
            "all three boundary blocks must be nonempty");
    FaceTrace ft = trace_faces(near_tri);
    require(near_tri.outer_face >= 0 && near_tri.outer_face < ft.num_faces(), "BrokenFrame",
            "embedding has no outer face");
    const auto& outer = ft.faces[near_tri.outer_face];

    std::vector<int> joined;
    joined.insert(joined.end(), r1.begin(), r1.end());
    joined.insert(joined.end(), r2.begin(), r2.end());
    joined.insert(joined.end(), r3.begin(), r3.end());
    int L = static_cast<int>(outer.size());
    bool match = false;
    if (static_cast<int>(joined.size()) == L) {
        for (int s = 0; s < L && !match; ++s) {
            bool ok = true;
            for (int i = 0; i < L && ok; ++i) ok = joined[i] == outer[(s + i) % L];
            match = ok;
        }
    }
    require(match, "BrokenFrame", "blocks do not split the outer face walk");

    std::vector<int> colour(g.n, 0);
    for (int v : r1) colour[v] = 1;
    for (int v : r2) colour[v] = 2;
    for (int v : r3) colour[v] = 3;
    for (int v = 0; v < g.n; ++v) {
        if (colour[v] != 0) continue;
        std::vector<int> chain;
        int x = v;
        while (x != -1 && colour[x] == 0) {
            chain.push_back(x);
            x = forest.parent[x];
        }
        require(x != -1, "BrokenFrame", "rootward chain misses the boundary");
        for (int c : chain) colour[c] = colour[x];
    }
    return colour;
}

int find_sperner_triangle(const Embedding& near_tri, const std::vector<int>& colour) {
    FaceTrace ft = trace_faces(near_tri);
    for (int f = 0; f < ft.num_faces(); ++f) {
        if (f == near_tri.outer_face) continue;
        bool c1 = false, c2 = false, c3 = false;
        for (int v : ft.faces[f]) {
            if (v < 0 || v >= static_cast<int>(colour.size())) continue;
            c1 |= colour[v] == 1;
            c2 |= colour[v] == 2;
            c3 |= colour[v] == 3;
        }
        if (c1 && c2 && c3) return f;
    }
    fail("NoTrichromaticFace", "no internal face carries all three colours");
}

namespace {

PartitionResult package(Engine& eng, const Graph& base, const BfsForest& forest) {
    PartitionResult res;
    res.partition.parts = std::move(eng.parts);
    res.partition.part_of = std::move(eng.part_of);
    res.partition.legs = std::move(eng.legs);
    res.partition.quotient =
        make_quotient(base, res.partition.part_of, res.partition.num_parts());
    res.td.bags = std::move(eng.bags);
    res.td.tree_edges = std::move(eng.tree_edges);
    res.forest = forest;
    res.layering = layering_from_depths(res.forest.depth);
    return res;
}

}  // namespace

PartitionResult vertical_path_partition(const Embedding& tri, const BfsForest& forest) {
    require(is_triangulation(tri), "ParseError", "input is not a plane triangulation");
    require(is_bfs_forest(tri.graph, forest) && forest.roots.size() == 1, "BadParameters",
            "forest is not a single-root breadth-first tree of the input");
    FaceTrace ft = trace_faces(tri);
    const auto& outer = ft.faces[tri.outer_face];
    require(std::find(outer.begin(), outer.end(), forest.roots[0]) != outer.end(),
            "RootNotOnOuterFace", "the root must lie on the outer face");

    Engine eng(tri.graph, tri.rotation, forest, Mode::Width1, tri);
    eng.run(outer);
    for (int v = 0; v < tri.graph.n; ++v)
        internal_check(eng.part_of[v] != -1, "vertex left unassigned");
    PartitionResult res = package(eng, tri.graph, forest);
    res.partition.declared_layered_width = 1;
    return res;
}

PartitionResult tripod_partition(const Embedding& tri, const BfsForest& forest) {
    require(is_triangulation(tri), "ParseError", "input is not a plane triangulation");
    require(is_bfs_forest(tri.graph, forest) && forest.roots.size() == 1, "BadParameters",
            "forest is not a single-root breadth-first tree of the input");
    FaceTrace ft = trace_faces(tri);
    const auto outer = ft.faces[tri.outer_face];
    require(std::find(outer.begin(), outer.end(), forest.roots[0]) != outer.end(),
            "RootNotOnOuterFace", "the root must lie on the outer face");

    // augmented instance: a starter vertex inside the old outer face, adjacent
    // to its three vertices; every face of the result is again a triangle
    int n = tri.graph.n;
    int star = n;
    Embedding aug;
    aug.graph = Graph(n + 1);
    for (auto [u, v] : tri.graph.edge_list()) aug.graph.add_edge(u, v);
    for (int x : outer) aug.graph.add_edge(x, star);
    aug.rotation = tri.rotation;
    aug.rotation.emplace_back(outer.rbegin(), outer.rend());
    for (int i = 0; i < 3; ++i) {
        int a = outer[i], b = outer[(i + 1) % 3];
        auto& rb = aug.rotation[b];
        rb.insert(rb.begin() + rotation_index(tri, b, a) + 1, star);
    }
    FaceTrace aft = trace_faces(aug);
    aug.outer_face = -1;
    for (int fc = 0; fc < aft.num_faces() && aug.outer_face == -1; ++fc) {
        const auto& fv = aft.faces[fc];
        bool s = false, a0 = false, a1 = false;
        for (int v : fv) {
            s |= v == star;
            a0 |= v == outer[0];
            a1 |= v == outer[1];
        }
        if (s && a0 && a1) aug.outer_face = fc;
    }
    internal_check(aug.outer_face != -1 && is_triangulation(aug), "augmentation failed");

    auto star_bfs = bfs_layering(aug.graph, {star});
    Engine eng(aug.graph, aug.rotation, star_bfs.forest, Mode::Tripod, aug);
    eng.run(aft.faces[aug.outer_face]);
    for (int v = 0; v <= n; ++v) internal_check(eng.part_of[v] != -1, "vertex left unassigned");

    // strip the starter vertex: its singleton part disappears and the roots
    // become the three old outer vertices
    int drop = eng.part_of[star];
    internal_check(eng.parts[drop] == std::vector<int>{star}, "starter vertex not alone");
    eng.parts.erase(eng.parts.begin() + drop);
    eng.legs.erase(eng.legs.begin() + drop);
    eng.part_of.pop_back();
    for (int& p : eng.part_of) {
        internal_check(p != drop, "starter part still referenced");
        if (p > drop) --p;
    }
    for (auto& bag : eng.bags) {
        bag.erase(std::remove(bag.begin(), bag.end(), drop), bag.end());
        for (int& p : bag)
            if (p > drop) --p;
        internal_check(!bag.empty(), "bag emptied by the strip");
    }

    std::vector<int> roots = outer;
    std::sort(roots.begin(), roots.end());
    auto multi = bfs_layering_multi(tri.graph, roots);
    PartitionResult res = package(eng, tri.graph, multi.forest);
    res.partition.declared_layered_width = 3;
    return res;
}

WidenResult widen_to_width1(const Graph& g, const Partition& p, const Layering& l,
                            const TreeDecomposition& td) {
    require(static_cast<int>(p.part_of.size()) == g.n, "BadParameters",
            "partition does not match the graph");
    require(static_cast<int>(l.layer_of.size()) == g.n, "BadParameters",
            "layering does not match the graph");
    // slot of v = rank of v inside (part, layer); parts store vertices sorted,
    // so ranks follow id order
    std::vector<int> slot(g.n, -1);
    int measured = 0;
    std::vector<std::vector<std::vector<int>>> groups(p.num_parts());
    for (int q = 0; q < p.num_parts(); ++q) {
        std::vector<std::vector<int>>& by_layer = groups[q];
        for (int v : p.parts[q]) {
            int d = l.layer_of[v];
            require(d >= 0, "BadParameters", "vertex missing from the layering");
            if (d >= static_cast<int>(by_layer.size())) by_layer.resize(d + 1);
            slot[v] = static_cast<int>(by_layer[d].size());
            by_layer[d].push_back(v);
            measured = std::max(measured, slot[v] + 1);
        }
    }
    require(measured <= p.declared_layered_width, "WidthMismatch",
            "measured layered width exceeds the declared width");

    WidenResult res;
    // new parts ordered by (old part, slot)
    std::vector<std::vector<int>> ids(p.num_parts());
    for (int q = 0; q < p.num_parts(); ++q) {
        int slots = 0;
        for (int v : p.parts[q]) slots = std::max(slots, slot[v] + 1);
        ids[q].resize(slots);
        for (int s = 0; s < slots; ++s) {
            std::vector<int> verts;
            for (int v : p.parts[q])
                if (slot[v] == s) verts.push_back(v);
            ids[q][s] = res.partition.num_parts();
            res.partition.parts.push_back(std::move(verts));
        }
    }
    res.partition.part_of.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v)
        if (p.part_of[v] >= 0) res.partition.part_of[v] = ids[p.part_of[v]][slot[v]];
    res.partition.quotient = make_quotient(g, res.partition.part_of, res.partition.num_parts());
    res.partition.declared_layered_width = 1;

    res.td.tree_edges = td.tree_edges;
    for (const auto& bag : td.bags) {
        std::vector<int> wide;
        for (int q : bag) {
            require(q >= 0 && q < p.num_parts(), "BadParameters", "bag names a missing part");
            wide.insert(wide.end(), ids[q].begin(), ids[q].end());
        }
        std::sort(wide.begin(), wide.end());
        res.td.bags.push_back(std::move(wide));
    }
    return res;
}

PartitionReport validate_partition(const Graph& g, const Partition& p, const Layering& l) {
    PartitionReport rep;
    if (static_cast<int>(p.part_of.size()) != g.n) return rep;
    if (!is_valid_layering(g, l)) return rep;
    std::vector<int> seen(g.n, -1);
    for (int q = 0; q < p.num_parts(); ++q) {
        if (!std::is_sorted(p.parts[q].begin(), p.parts[q].end())) return rep;
        for (int v : p.parts[q]) {
            if (v < 0 || v >= g.n || seen[v] != -1) return rep;
            seen[v] = q;
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (seen[v] == -1 || seen[v] != p.part_of[v]) return rep;

    for (int q = 0; q < p.num_parts(); ++q) {
        std::vector<int> count;
        for (int v : p.parts[q]) {
            int d = l.layer_of[v];
            if (d >= static_cast<int>(count.size())) count.resize(d + 1, 0);
            rep.measured_layered_width = std::max(rep.measured_layered_width, ++count[d]);
        }
    }

    if (p.quotient.n != p.num_parts()) return rep;
    Graph expect = make_quotient(g, p.part_of, p.num_parts());
    auto a = expect.edge_list(), b = p.quotient.edge_list();
    std::vector<std::pair<int, int>> diff;
    std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(diff));
    rep.quotient_edge_diff = static_cast<int>(diff.size());
    rep.is_valid = rep.quotient_edge_diff == 0;
    return rep;
}

TdReport validate_tree_decomposition(const Graph& g, const TreeDecomposition& td) {
    TdReport rep;
    int nodes = td.num_nodes();
    std::vector<std::vector<int>> tadj(nodes);
    if (static_cast<int>(td.tree_edges.size()) != std::max(0, nodes - 1)) {
        rep.violation = "tree edges do not form a tree";
        return rep;
    }
    for (auto [a, b] : td.tree_edges) {
        if (a < 0 || a >= nodes || b < 0 || b >= nodes || a == b) {
            rep.violation = "tree edges do not form a tree";
            return rep;
        }
        tadj[a].push_back(b);
        tadj[b].push_back(a);
    }
    if (nodes > 0) {
        std::vector<char> seen(nodes, 0);
        std::vector<int> todo{0};
        seen[0] = 1;
        int reached = 1;
        while (!todo.empty()) {
            int x = todo.back();
            todo.pop_back();
            for (int y : tadj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    todo.push_back(y);
                }
        }
        if (reached != nodes) {
            rep.violation = "tree edges do not form a tree";
            return rep;
        }
    }

    std::vector<std::vector<int>> holding(g.n);
    for (int x = 0; x < nodes; ++x) {
        if (!std::is_sorted(td.bags[x].begin(), td.bags[x].end())) {
            rep.violation = "bag " + std::to_string(x) + " is not sorted";
            return rep;
        }
        for (int v : td.bags[x]) {
            if (v < 0 || v >= g.n) {
                rep.violation = "bag " + std::to_string(x) + " names a missing vertex";
                return rep;
            }
            holding[v].push_back(x);
        }
    }
    for (int v = 0; v < g.n; ++v)
        if (holding[v].empty()) {
            rep.violation = "vertex " + std::to_string(v) + " is in no bag";
            return rep;
        }
    for (auto [u, v] : g.edge_list()) {
        bool covered = false;
        for (int x : holding[u])
            if (std::binary_search(td.bags[x].begin(), td.bags[x].end(), v)) {
                covered = true;
                break;
            }
        if (!covered) {
            rep.violation =
                "edge (" + std::to_string(u) + "," + std::to_string(v) + ") is in no bag";
            return rep;
        }
    }
    for (int v = 0; v < g.n; ++v) {
        std::vector<char> inset(nodes, 0);
        for (int x : holding[v]) inset[x] = 1;
        std::vector<int> todo{holding[v][0]};
        std::vector<char> seen(nodes, 0);
        seen[todo[0]] = 1;
        int reached = 1;
        while (!todo.empty()) {
            int x = todo.back();
            todo.pop_back();
            for (int y : tadj[x])
                if (inset[y] && !seen[y]) {
                    seen[y] = 1;
                    ++reached;
                    todo.push_back(y);
                }
        }
        if (reached != static_cast<int>(holding[v].size())) {
            rep.violation = "vertex " + std::to_string(v) + " has disconnected occurrences";
            return rep;
        }
    }
    rep.is_valid = true;
    rep.width = td.width();
    return rep;
}

bool parts_are_vertical_paths(const Partition& p, const BfsForest& f) {
    for (const auto& part : p.parts) {
        std::vector<int> path = part;
        std::sort(path.begin(), path.end(),
                  [&](int a, int b) { return f.depth[a] > f.depth[b]; });
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            if (f.parent[path[i]] != path[i + 1]) return false;
    }
    return true;
}

bool parts_are_tripods(const Partition& p, const BfsForest& f, const Graph& clique_host) {
    if (p.legs.size() != p.parts.size()) return false;
    for (int q = 0; q < p.num_parts(); ++q) {
        const auto& legs = p.legs[q];
        if (legs.empty() || legs.size() > 3) return false;
        std::vector<int> all;
        for (const auto& leg : legs) {
            if (leg.empty()) return false;
            if (!is_vertical_path(f, leg)) return false;
            all.insert(all.end(), leg.begin(), leg.end());
        }
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end()) return false;
        if (all != p.parts[q]) return false;
        for (std::size_t i = 0; i < legs.size(); ++i)
            for (std::size_t j = i + 1; j < legs.size(); ++j)
                if (!clique_host.has_edge(legs[i].front(), legs[j].front())) return false;
    }
    return true;
}

}  // namespace planq
