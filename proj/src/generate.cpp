#include "fct/generate.h"

#include <algorithm>
#include <set>

namespace fct {

namespace {

int pick(Rng& rng, int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

Graph polygon(int n) {
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i < n; ++i) rot[i] = {(i + n - 1) % n, (i + 1) % n};
    return Graph(std::move(rot));
}

bool keeps_i6c(const Graph& g) {
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) < 5) return false;
    return short_circuits(g).empty();
}

// Random dart whose left face is bounded and not a triangle.
std::optional<std::pair<int, int>> open_face(Rng& rng, const Graph& g, int outer_u, int outer_v) {
    auto outer = g.face_of(outer_u, outer_v);
    std::vector<std::pair<int, int>> cands;
    std::set<std::pair<int, int>> outer_darts;
    for (size_t i = 0; i < outer.size(); ++i) outer_darts.insert({outer[i], outer[(i + 1) % outer.size()]});
    for (const auto& f : g.faces()) {
        std::pair<int, int> d{f[0], f[1 % f.size()]};
        if (f.size() <= 3 || outer_darts.count(d)) continue;
        cands.push_back(d);
    }
    if (cands.empty()) return std::nullopt;
    return cands[pick(rng, static_cast<int>(cands.size()))];
}

}  // namespace

Graph random_i6c_triangulation(Rng& rng, int moves) {
    Graph g = pick(rng, 4) == 0 ? icosahedron() : subdivide(icosahedron());
    for (int step = 0; step < moves; ++step) {
        Graph before = g;
        bool done = false;
        if (pick(rng, 3) != 0) {
            int x = pick(rng, g.size());
            int y = g.rot(x)[pick(rng, g.degree(x))];
            if (g.degree(x) >= 6 && g.degree(y) >= 6) done = flip_edge(g, x, y);
        } else {
            std::vector<int> big;
            for (int v = 0; v < g.size(); ++v)
                if (g.degree(v) >= 8) big.push_back(v);
            if (!big.empty()) {
                int v = big[pick(rng, static_cast<int>(big.size()))];
                int d = g.degree(v);
                int arc = 4 + pick(rng, d - 5);  // both halves keep degree >= 5
                int i = pick(rng, d);
                split_vertex(g, v, i, (i + arc - 1) % d);
                done = true;
            }
        }
        if (done && !keeps_i6c(g)) g = before;
    }
    return g;
}

bool add_chord_in_face(Graph& g, int u, int v, int a, int b) {
    auto walk = g.face_of(u, v);
    const int k = static_cast<int>(walk.size());
    int pa = walk[a % k], pb = walk[b % k];
    if (pa == pb || g.adjacent(pa, pb)) return false;
    g.add_edge(pa, walk[(a + k - 1) % k], pb, walk[(b + k - 1) % k]);
    return true;
}

std::optional<DiskGraph> random_disk_graph(Rng& rng, int ring_min, int ring_max, int max_internal) {
    int len = ring_min + pick(rng, ring_max - ring_min + 1);
    Graph g = polygon(len);
    int k = pick(rng, max_internal + 1);
    for (int i = 0; i < k; ++i) {
        auto f = open_face(rng, g, 1, 0);
        std::pair<int, int> d = f ? *f : std::pair<int, int>{0, 1};
        auto walk = g.face_of(d.first, d.second);
        std::set<int> uniq(walk.begin(), walk.end());
        if (uniq.size() != walk.size()) continue;
        insert_in_face(g, d.first, d.second);
    }
    for (int tries = 0; tries < 12; ++tries) {
        auto f = open_face(rng, g, 1, 0);
        if (!f) break;
        auto walk = g.face_of(f->first, f->second);
        int a = pick(rng, static_cast<int>(walk.size()));
        int b = pick(rng, static_cast<int>(walk.size()));
        add_chord_in_face(g, f->first, f->second, a, b);
    }
    int deletions = pick(rng, 4);
    for (int t = 0; t < deletions; ++t) {
        int x = pick(rng, g.size());
        if (g.degree(x) == 0) continue;
        int y = g.rot(x)[pick(rng, g.degree(x))];
        Graph h = g;
        h.remove_edge(x, y);
        if (h.connected()) g = std::move(h);
    }
    auto faces = g.faces();
    std::vector<int> order(faces.size());
    for (size_t i = 0; i < faces.size(); ++i) order[i] = static_cast<int>(i);
    std::shuffle(order.begin(), order.end(), rng);
    for (int fi : order) {
        int L = static_cast<int>(faces[fi].size());
        if (L < ring_min || L > ring_max) continue;
        std::set<int> on(faces[fi].begin(), faces[fi].end());
        int internal = g.size() - static_cast<int>(on.size());
        if (internal > max_internal) continue;
        DiskGraph dg;
        dg.graph = g;
        dg.face = fi;
        dg.wrap = wrap_ring(g, fi);
        dg.internal = internal;
        return dg;
    }
    return std::nullopt;
}

DiskGraph random_ring_bounded_graph(Rng& rng, int ring, int max_internal) {
    Graph g = polygon(ring);
    int k = 1 + pick(rng, max_internal);
    for (int i = 0; i < k; ++i) {
        auto f = open_face(rng, g, 1, 0);
        std::pair<int, int> d = f ? *f : std::pair<int, int>{0, 1};
        auto walk = g.face_of(d.first, d.second);
        std::set<int> uniq(walk.begin(), walk.end());
        if (uniq.size() != walk.size()) continue;
        int x = insert_in_face(g, d.first, d.second);
        // drop some spokes so later faces are not all triangles
        for (int drop = pick(rng, g.degree(x) - 1); drop > 0 && g.degree(x) > 2; --drop) {
            Graph h = g;
            h.remove_edge(x, h.rot(x)[pick(rng, h.degree(x))]);
            if (h.connected()) g = std::move(h);
        }
    }
    for (int tries = 0; tries < 16; ++tries) {
        auto f = open_face(rng, g, 1, 0);
        if (!f) break;
        auto walk = g.face_of(f->first, f->second);
        int a = pick(rng, static_cast<int>(walk.size()));
        int b = pick(rng, static_cast<int>(walk.size()));
        int pa = walk[a], pb = walk[b];
        if (pa < ring && pb < ring) continue;
        add_chord_in_face(g, f->first, f->second, a, b);
    }
    int deletions = pick(rng, 4);
    for (int t = 0; t < deletions; ++t) {
        int x = ring + pick(rng, g.size() - ring);
        if (g.degree(x) == 0) continue;
        int y = g.rot(x)[pick(rng, g.degree(x))];
        Graph h = g;
        h.remove_edge(x, y);
        if (h.connected()) g = std::move(h);
    }
    DiskGraph dg;
    dg.graph = g;
    auto faces = g.faces();
    auto outer = g.face_of(1, 0);
    for (size_t i = 0; i < faces.size(); ++i) {
        auto f = faces[i];
        if (f.size() == outer.size() && std::is_permutation(f.begin(), f.end(), outer.begin())) {
            std::set<int> s(f.begin(), f.end());
            bool ringonly = true;
            for (int v : s) ringonly &= v < ring;
            if (ringonly && static_cast<int>(s.size()) == ring) dg.face = static_cast<int>(i);
        }
    }
    // ring positions in cyclic order 0,1,..,ring-1
    dg.wrap.face = dg.face;
    dg.wrap.length = ring;
    for (int i = 0; i < ring; ++i) dg.wrap.phi.push_back(i);
    dg.internal = g.size() - ring;
    return dg;
}

}  // namespace fct
