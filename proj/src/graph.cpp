#include "fct/graph.h"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

namespace fct {

Graph::Graph(std::vector<std::vector<int>> rotation) : rot_(std::move(rotation)) {}

Graph Graph::from_faces(int n, const std::vector<std::vector<int>>& faces) {
    std::vector<std::map<int, int>> next(n);
    std::set<std::pair<int, int>> darts;
    for (const auto& f : faces) {
        const int k = static_cast<int>(f.size());
        if (k < 2) throw GraphError("face walk shorter than 2");
        for (int i = 0; i < k; ++i) {
            int x = f[(i + k - 1) % k], y = f[i], z = f[(i + 1) % k];
            if (x < 0 || y < 0 || z < 0 || x >= n || y >= n || z >= n)
                throw GraphError("face vertex out of range");
            if (!darts.insert({y, z}).second)
                throw GraphError("dart " + std::to_string(y) + "->" + std::to_string(z) +
                                 " used by two faces");
            if (!next[y].emplace(x, z).second)
                throw GraphError("two corners leave vertex " + std::to_string(y) + " after " +
                                 std::to_string(x));
        }
    }
    for (auto [u, v] : darts)
        if (!darts.count({v, u}))
            throw GraphError("dart " + std::to_string(u) + "->" + std::to_string(v) +
                             " has no reverse");
    std::vector<std::vector<int>> rot(n);
    for (int y = 0; y < n; ++y) {
        if (next[y].empty()) continue;
        int start = next[y].begin()->first;
        int cur = start;
        do {
            rot[y].push_back(cur);
            auto it = next[y].find(cur);
            if (it == next[y].end()) throw GraphError("open corner chain at vertex " + std::to_string(y));
            cur = it->second;
        } while (cur != start && rot[y].size() <= next[y].size());
        if (rot[y].size() != next[y].size() || cur != start)
            throw GraphError("corners around vertex " + std::to_string(y) + " do not form one cycle");
    }
    return Graph(std::move(rot));
}

int Graph::edge_count() const {
    int s = 0;
    for (const auto& r : rot_) s += static_cast<int>(r.size());
    return s / 2;
}

int Graph::index_of(int v, int w) const {
    const auto& r = rot_[v];
    for (int i = 0; i < static_cast<int>(r.size()); ++i)
        if (r[i] == w) return i;
    return -1;
}

int Graph::succ(int v, int w) const {
    int i = index_of(v, w);
    if (i < 0) throw GraphError("succ: not adjacent");
    return rot_[v][(i + 1) % rot_[v].size()];
}

int Graph::pred(int v, int w) const {
    int i = index_of(v, w);
    if (i < 0) throw GraphError("pred: not adjacent");
    const int d = degree(v);
    return rot_[v][(i + d - 1) % d];
}

std::vector<std::vector<int>> Graph::faces() const {
    std::vector<std::vector<char>> seen(size());
    for (int v = 0; v < size(); ++v) seen[v].assign(rot_[v].size(), 0);
    std::vector<std::vector<int>> out;
    for (int u = 0; u < size(); ++u) {
        for (int i = 0; i < degree(u); ++i) {
            if (seen[u][i]) continue;
            std::vector<int> walk;
            int a = u, ia = i;
            while (!seen[a][ia]) {
                seen[a][ia] = 1;
                walk.push_back(a);
                int b = rot_[a][ia];
                int nb = succ(b, a);
                ia = index_of(b, nb);
                a = b;
            }
            out.push_back(std::move(walk));
        }
    }
    return out;
}

std::vector<int> Graph::face_of(int u, int v) const {
    std::vector<int> walk;
    int a = u, b = v;
    do {
        walk.push_back(a);
        int c = succ(b, a);
        a = b;
        b = c;
        if (walk.size() > static_cast<size_t>(2 * edge_count() + 2)) throw GraphError("face walk does not close");
    } while (!(a == u && b == v));
    return walk;
}

Graph Graph::mirror() const {
    auto r = rot_;
    for (auto& x : r) std::reverse(x.begin(), x.end());
    Graph g(std::move(r));
    g.labels = labels;
    return g;
}

Graph Graph::induced(const std::vector<int>& keep) const {
    std::vector<int> idx(size(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) idx[keep[i]] = i;
    std::vector<std::vector<int>> r(keep.size());
    std::vector<int> lab;
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) {
        for (int w : rot_[keep[i]])
            if (idx[w] >= 0) r[i].push_back(idx[w]);
        lab.push_back(label(keep[i]));
    }
    Graph g(std::move(r));
    g.labels = std::move(lab);
    return g;
}

std::vector<int> Graph::distances(int src) const {
    std::vector<int> dist(size(), -1);
    std::queue<int> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : rot_[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

int Graph::component_count(int removed) const {
    std::vector<char> seen(size(), 0);
    if (removed >= 0) seen[removed] = 1;
    int comps = 0;
    for (int s = 0; s < size(); ++s) {
        if (seen[s]) continue;
        ++comps;
        std::vector<int> stack{s};
        seen[s] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : rot_[v])
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

int Graph::add_vertex() {
    rot_.emplace_back();
    if (!labels.empty()) labels.push_back(*std::max_element(labels.begin(), labels.end()) + 1);
    return size() - 1;
}

void Graph::add_edge(int u, int after_u, int v, int after_v) {
    auto put = [&](int a, int after, int b) {
        auto& r = rot_[a];
        if (after < 0 || r.empty()) {
            r.insert(r.begin(), b);
            return;
        }
        int i = index_of(a, after);
        if (i < 0) throw GraphError("add_edge: anchor not adjacent");
        r.insert(r.begin() + i + 1, b);
    };
    if (adjacent(u, v)) throw GraphError("add_edge: parallel edge");
    put(u, after_u, v);
    put(v, after_v, u);
}

void Graph::remove_edge(int u, int v) {
    auto drop = [&](int a, int b) {
        int i = index_of(a, b);
        if (i < 0) throw GraphError("remove_edge: not adjacent");
        rot_[a].erase(rot_[a].begin() + i);
    };
    drop(u, v);
    drop(v, u);
}

ValidationReport validate_embedding(const std::vector<std::vector<int>>& rotation) {
    ValidationReport rep;
    const int n = static_cast<int>(rotation.size());
    for (int v = 0; v < n; ++v) {
        std::set<int> seen;
        for (int w : rotation[v]) {
            if (w < 0 || w >= n) {
                rep.fail("dangling edge-end " + std::to_string(v) + "->" + std::to_string(w));
                continue;
            }
            if (w == v) rep.fail("loop at " + std::to_string(v));
            if (!seen.insert(w).second)
                rep.fail("duplicate edge-end " + std::to_string(v) + "->" + std::to_string(w));
        }
    }
    if (!rep.ok) return rep;
    for (int v = 0; v < n; ++v)
        for (int w : rotation[v]) {
            const auto& r = rotation[w];
            if (std::find(r.begin(), r.end(), v) == r.end())
                rep.fail("dangling edge-end " + std::to_string(v) + "->" + std::to_string(w) +
                         " (no reverse)");
        }
    if (!rep.ok) return rep;

    Graph g(rotation);
    auto faces = g.faces();
    std::vector<int> comp(n, -1);
    int ncomp = 0;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> st{s};
        comp[s] = ncomp;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int w : g.rot(v))
                if (comp[w] < 0) {
                    comp[w] = ncomp;
                    st.push_back(w);
                }
        }
        ++ncomp;
    }
    std::vector<long> cv(ncomp, 0), ce(ncomp, 0), cf(ncomp, 0);
    for (int v = 0; v < n; ++v) {
        cv[comp[v]]++;
        ce[comp[v]] += g.degree(v);
    }
    for (const auto& f : faces) cf[comp[f[0]]]++;
    for (int c = 0; c < ncomp; ++c) {
        long e = ce[c] / 2;
        long f = e == 0 ? 1 : cf[c];
        if (cv[c] - e + f != 2)
            rep.fail("Euler failure: V-E+F=" + std::to_string(cv[c] - e + f) + " in component " +
                     std::to_string(c));
    }
    long e = g.edge_count();
    rep.faces = ncomp <= 1 ? (e == 0 ? (n ? 1 : 0) : static_cast<int>(faces.size()))
                           : static_cast<int>(1 + ncomp - n + e);
    return rep;
}

ValidationReport validate_embedding(const Graph& g) { return validate_embedding(g.rotation()); }

bool is_triangulation(const Graph& g) {
    if (g.size() < 3 || !validate_embedding(g).ok || !g.connected()) return false;
    for (const auto& f : g.faces())
        if (f.size() != 3) return false;
    return true;
}

int circuit_side_count(const Graph& g, const Circuit& c) {
    const int k = static_cast<int>(c.size());
    std::vector<char> blocked(g.size(), 0), seen(g.size(), 0);
    for (int v : c) blocked[v] = 1;
    std::vector<int> stack;
    for (int i = 0; i < k; ++i) {
        int v = c[i], prev = c[(i + k - 1) % k], next = c[(i + 1) % k];
        for (int w = g.succ(v, next); w != prev; w = g.succ(v, w))
            if (!blocked[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    int count = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        ++count;
        for (int w : g.rot(v))
            if (!blocked[w] && !seen[w]) {
                seen[w] = 1;
                stack.push_back(w);
            }
    }
    return count;
}

namespace {

void cycles_from(const Graph& g, int s, std::vector<int>& path, std::vector<char>& on,
                 std::vector<Circuit>& out, int maxlen) {
    int v = path.back();
    for (int w : g.rot(v)) {
        if (w == s && path.size() >= 3 && path[1] < path.back()) out.push_back(path);
        if (w <= s || on[w] || static_cast<int>(path.size()) >= maxlen) continue;
        on[w] = 1;
        path.push_back(w);
        cycles_from(g, s, path, on, out, maxlen);
        path.pop_back();
        on[w] = 0;
    }
}

}  // namespace

std::vector<Circuit> short_circuits(const Graph& g) {
    if (!is_triangulation(g)) throw GraphError("short_circuits requires a triangulation");
    std::vector<Circuit> cycles, out;
    std::vector<char> on(g.size(), 0);
    for (int s = 0; s < g.size(); ++s) {
        std::vector<int> path{s};
        on[s] = 1;
        cycles_from(g, s, path, on, cycles, 5);
        on[s] = 0;
    }
    for (auto& c : cycles) {
        const int len = static_cast<int>(c.size());
        int a = circuit_side_count(g, c);
        int b = g.size() - len - a;
        int need = len <= 4 ? 1 : 2;
        if (a >= need && b >= need) out.push_back(c);
    }
    return out;
}

bool is_internally_six_connected(const Graph& g) {
    if (!is_triangulation(g)) throw GraphError("internal 6-connectivity requires a triangulation");
    for (int v = 0; v < g.size(); ++v)
        if (g.degree(v) < 5) return false;
    return short_circuits(g).empty();
}

bool induces_circuit(const Graph& g, const std::vector<int>& set) {
    if (set.size() < 3) return false;
    std::vector<char> in(g.size(), 0);
    for (int v : set) in[v] = 1;
    for (int v : set) {
        int d = 0;
        for (int w : g.rot(v)) d += in[w];
        if (d != 2) return false;
    }
    // 2-regular; connected iff one cycle covers the set
    int start = set[0], prev = -1, cur = start;
    size_t steps = 0;
    do {
        int nxt = -1;
        for (int w : g.rot(cur))
            if (in[w] && w != prev) {
                nxt = w;
                break;
            }
        prev = cur;
        cur = nxt;
        ++steps;
    } while (cur != start && steps <= set.size());
    return steps == set.size();
}

SecondNeighborhood second_neighborhood(const Graph& g, int v) {
    if (v < 0 || v >= g.size()) throw GraphError("vertex absent");
    SecondNeighborhood sn;
    auto dist = g.distances(v);
    sn.vertices.push_back(v);
    for (int w : g.rot(v)) sn.first.push_back(w);
    for (int w : sn.first)
        for (int x : g.rot(w))
            if (dist[x] == 2 && std::find(sn.second.begin(), sn.second.end(), x) == sn.second.end())
                sn.second.push_back(x);
    sn.vertices.insert(sn.vertices.end(), sn.first.begin(), sn.first.end());
    sn.vertices.insert(sn.vertices.end(), sn.second.begin(), sn.second.end());
    sn.graph = g.induced(sn.vertices);
    sn.well_behaved = induces_circuit(g, sn.first) && induces_circuit(g, sn.second);
    return sn;
}

FaceWrap wrap_ring(const Graph& g, int face) {
    auto faces = g.faces();
    if (face < 0 || face >= static_cast<int>(faces.size())) throw GraphError("face id invalid");
    FaceWrap fw;
    fw.face = face;
    fw.phi = faces[face];
    fw.length = static_cast<int>(fw.phi.size());
    return fw;
}

Graph icosahedron() {
    std::vector<std::vector<int>> f;
    auto up = [](int i) { return 1 + (i % 5); };
    auto lo = [](int i) { return 6 + (i % 5); };
    for (int i = 0; i < 5; ++i) {
        f.push_back({0, up(i), up(i + 1)});
        f.push_back({up(i), lo(i), up(i + 1)});
        f.push_back({up(i + 1), lo(i), lo(i + 1)});
        f.push_back({11, lo(i + 1), lo(i)});
    }
    return Graph::from_faces(12, f);
}

Graph octahedron() {
    std::vector<std::vector<int>> f;
    for (int i = 0; i < 4; ++i) {
        int a = 1 + i, b = 1 + (i + 1) % 4;
        f.push_back({0, a, b});
        f.push_back({5, b, a});
    }
    return Graph::from_faces(6, f);
}

Graph cube() {
    std::vector<std::vector<int>> f{{0, 1, 2, 3}, {4, 7, 6, 5}};
    for (int i = 0; i < 4; ++i) {
        int j = (i + 1) % 4;
        f.push_back({j, i, i + 4, j + 4});
    }
    return Graph::from_faces(8, f);
}

Graph subdivide(const Graph& tri) {
    std::map<std::pair<int, int>, int> mid;
    int n = tri.size();
    auto m = [&](int a, int b) {
        auto key = std::minmax(a, b);
        auto it = mid.find(key);
        if (it != mid.end()) return it->second;
        mid[key] = n;
        return n++;
    };
    std::vector<std::vector<int>> out;
    for (const auto& f : tri.faces()) {
        if (f.size() != 3) throw GraphError("subdivide requires a triangulation");
        int a = f[0], b = f[1], c = f[2];
        int ab = m(a, b), bc = m(b, c), ca = m(c, a);
        out.push_back({a, ab, ca});
        out.push_back({ab, b, bc});
        out.push_back({ca, bc, c});
        out.push_back({ab, bc, ca});
    }
    return Graph::from_faces(n, out);
}

bool flip_edge(Graph& g, int x, int y) {
    int z = g.succ(y, x);
    int w = g.succ(x, y);
    if (z == w || g.adjacent(z, w)) return false;
    g.remove_edge(x, y);
    g.add_edge(z, y, w, x);
    return true;
}

int split_vertex(Graph& g, int v, int i, int j) {
    const std::vector<int> r = g.rot(v);
    const int d = static_cast<int>(r.size());
    if (i == j || i < 0 || j < 0 || i >= d || j >= d) throw GraphError("split_vertex: bad arc");
    std::vector<int> a, b;
    for (int k = i;; k = (k + 1) % d) {
        a.push_back(r[k]);
        if (k == j) break;
    }
    for (int k = j;; k = (k + 1) % d) {
        b.push_back(r[k]);
        if (k == i) break;
    }
    int nv = g.add_vertex();
    std::vector<std::vector<int>> rot = g.rotation();
    rot[v] = a;
    rot[v].push_back(nv);
    rot[nv] = b;
    rot[nv].push_back(v);
    for (size_t k = 1; k + 1 < b.size(); ++k) {
        auto& rr = rot[b[k]];
        *std::find(rr.begin(), rr.end(), v) = nv;
    }
    int ni = r[i], nj = r[j];
    {
        auto& rr = rot[ni];
        auto it = std::find(rr.begin(), rr.end(), v);
        rr.insert(it + 1, nv);
    }
    {
        auto& rr = rot[nj];
        auto it = std::find(rr.begin(), rr.end(), v);
        rr.insert(it, nv);
    }
    auto labels = g.labels;
    g = Graph(std::move(rot));
    g.labels = std::move(labels);
    return nv;
}

int insert_in_face(Graph& g, int a, int b) {
    auto walk = g.face_of(a, b);
    std::set<int> uniq(walk.begin(), walk.end());
    if (uniq.size() != walk.size()) throw GraphError("insert_in_face: face boundary not simple");
    const int k = static_cast<int>(walk.size());
    int x = g.add_vertex();
    std::vector<std::vector<int>> rot = g.rotation();
    for (int i = 0; i < k; ++i) {
        int p = walk[i], before = walk[(i + k - 1) % k];
        auto& rr = rot[p];
        auto it = std::find(rr.begin(), rr.end(), before);
        rr.insert(it + 1, x);
    }
    for (int i = k - 1; i >= 0; --i) rot[x].push_back(walk[i]);
    auto labels = g.labels;
    g = Graph(std::move(rot));
    g.labels = std::move(labels);
    return x;
}

}  // namespace fct
