#include "fct/configuration.h"

#include <algorithm>
#include <map>
#include <set>

namespace fct {

namespace {

std::string lab(const Configuration& k, int v) { return std::to_string(k.graph.label(v)); }

bool same_cycle(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    for (size_t s = 0; s < a.size(); ++s) {
        bool ok = true;
        for (size_t i = 0; i < a.size() && ok; ++i) ok = a[i] == b[(i + s) % b.size()];
        if (ok) return true;
    }
    return false;
}

int outer_face_index(const Configuration& k, const std::vector<std::vector<int>>& faces) {
    if (k.outer_dart.first < 0) return -1;
    auto walk = k.graph.face_of(k.outer_dart.first, k.outer_dart.second);
    for (size_t i = 0; i < faces.size(); ++i)
        if (same_cycle(faces[i], walk)) return static_cast<int>(i);
    return -1;
}

FreeCompletion build_completion(const Configuration& k) {
    const Graph& g = k.graph;
    const int n = g.size();
    FreeCompletion fc;
    std::vector<std::vector<int>> faces;

    if (g.edge_count() == 0) {
        if (n != 1) throw GraphError("configuration graph is not connected");
        const int r = k.gamma[0];
        if (r < 3) throw GraphError("ring shorter than 3");
        fc.ring = r;
        std::vector<int> outer;
        for (int j = 0; j < r; ++j) {
            faces.push_back({r, (j + 1) % r, j});
            outer.push_back(j);
        }
        faces.push_back(outer);
        fc.graph = Graph::from_faces(r + 1, faces);
        fc.core_map = {r};
    } else {
        auto walk = outer_walk(k);
        const int m = static_cast<int>(walk.size());
        // rotate to the lexicographically least label sequence
        int best = 0;
        auto key = [&](int s) {
            std::vector<int> seq(m);
            for (int i = 0; i < m; ++i) seq[i] = g.label(walk[(s + i) % m]);
            return seq;
        };
        for (int s = 1; s < m; ++s)
            if (key(s) < key(best)) best = s;
        std::rotate(walk.begin(), walk.begin() + best, walk.end());

        std::map<int, int> occ;
        for (int v : walk) occ[v]++;
        std::vector<int> kk(m);
        int r = 0;
        for (int i = 0; i < m; ++i) {
            int v = walk[i];
            int extra = k.gamma[v] - g.degree(v);
            if (occ[v] == 1) {
                kk[i] = extra;
            } else if (occ[v] == 2 && extra == 2) {
                kk[i] = 1;
            } else {
                throw GraphError("boundary vertex " + lab(k, v) + " cannot be completed");
            }
            if (kk[i] < 1) throw GraphError("boundary vertex " + lab(k, v) + " has no room for ring neighbours");
            r += kk[i] - 1;
        }
        if (r < 3) throw GraphError("ring shorter than 3");
        fc.ring = r;
        auto core = [&](int v) { return r + v; };
        std::vector<int> start(m + 1);
        int cur = 0;
        for (int i = 0; i < m; ++i) {
            start[i] = cur % r;
            cur += kk[i] - 1;
        }
        start[m] = start[0];

        const auto kfaces = g.faces();
        const int outer = outer_face_index(k, kfaces);
        for (int f = 0; f < static_cast<int>(kfaces.size()); ++f) {
            if (f == outer) continue;
            std::vector<int> mapped;
            for (int v : kfaces[f]) mapped.push_back(core(v));
            faces.push_back(mapped);
        }
        for (int i = 0; i < m; ++i) {
            int v = walk[i], nxt = walk[(i + 1) % m];
            faces.push_back({core(v), core(nxt), start[i + 1]});
            for (int j = 0; j + 1 < kk[i]; ++j) {
                int xj = (start[i] + j) % r, xj1 = (start[i] + j + 1) % r;
                faces.push_back({core(v), xj1, xj});
            }
        }
        std::vector<int> ring(r);
        for (int j = 0; j < r; ++j) ring[j] = j;
        faces.push_back(ring);
        fc.graph = Graph::from_faces(r + n, faces);
        for (int v = 0; v < n; ++v) fc.core_map.push_back(core(v));
    }
    fc.graph.labels.resize(fc.graph.size());
    for (int v = 0; v < fc.graph.size(); ++v) fc.graph.labels[v] = v + 1;

    // completion conditions
    if (!validate_embedding(fc.graph).ok) throw GraphError("completion is not a plane embedding");
    auto ringface = fc.graph.face_of(1, 0);
    for (int j = 0; j < fc.ring; ++j)
        if (!fc.graph.adjacent(j, (j + 1) % fc.ring)) throw GraphError("ring is not a circuit");
    for (int v = 0; v < n; ++v) {
        int s = fc.core_map[v];
        if (fc.graph.degree(s) != k.gamma[v]) throw GraphError("core vertex degree differs from gamma");
        std::vector<int> restricted;
        for (int w : fc.graph.rot(s))
            if (w >= fc.ring) restricted.push_back(w - fc.ring);
        if (!same_cycle(restricted, g.rot(v)) && !(restricted.empty() && g.degree(v) == 0))
            throw GraphError("core rotation not preserved");
    }
    (void)ringface;
    return fc;
}

}  // namespace

std::vector<int> outer_walk(const Configuration& k) {
    if (k.graph.edge_count() == 0) return k.graph.size() == 1 ? std::vector<int>{0} : std::vector<int>{};
    return k.graph.face_of(k.outer_dart.first, k.outer_dart.second);
}

std::vector<char> on_boundary(const Configuration& k) {
    std::vector<char> b(k.size(), 0);
    for (int v : outer_walk(k)) b[v] = 1;
    return b;
}

Configuration make_configuration(std::string name, Graph g, std::vector<int> gamma) {
    Configuration k;
    k.name = std::move(name);
    k.graph = std::move(g);
    k.gamma = std::move(gamma);
    if (k.graph.edge_count() == 0) return k;
    auto faces = k.graph.faces();
    std::vector<int> big;
    for (size_t i = 0; i < faces.size(); ++i)
        if (faces[i].size() != 3) big.push_back(static_cast<int>(i));
    if (big.size() == 1) {
        k.outer_dart = {faces[big[0]][0], faces[big[0]][1 % faces[big[0]].size()]};
        return k;
    }
    for (const auto& f : faces) {
        k.outer_dart = {f[0], f[1 % f.size()]};
        if (validate_configuration(k).ok) return k;
    }
    if (!faces.empty()) k.outer_dart = {faces[0][0], faces[0][1 % faces[0].size()]};
    return k;
}

int ring_size_formula(const Configuration& k) {
    auto b = on_boundary(k);
    int sum = 0;
    for (int v = 0; v < k.size(); ++v)
        if (b[v] && k.graph.component_count(v) <= 1) sum += k.gamma[v] - k.graph.degree(v) - 1;
    return sum;
}

ValidationReport validate_configuration(const Configuration& k) {
    ValidationReport rep;
    const Graph& g = k.graph;
    if (g.size() == 0) {
        rep.fail("empty configuration");
        return rep;
    }
    auto emb = validate_embedding(g);
    if (!emb.ok) {
        for (auto& s : emb.issues) rep.fail("embedding: " + s);
        return rep;
    }
    if (!g.connected()) {
        rep.fail("G(K) is not connected");
        return rep;
    }
    if (static_cast<int>(k.gamma.size()) != g.size()) {
        rep.fail("gamma has wrong length");
        return rep;
    }
    if (g.edge_count() > 0) {
        auto [a, b] = k.outer_dart;
        if (a < 0 || b < 0 || a >= g.size() || b >= g.size() || !g.adjacent(a, b)) {
            rep.fail("infinite region not designated");
            return rep;
        }
        auto faces = g.faces();
        int outer = outer_face_index(k, faces);
        for (int f = 0; f < static_cast<int>(faces.size()); ++f)
            if (f != outer && faces[f].size() != 3) {
                rep.fail("not a near-triangulation: bounded face of length " + std::to_string(faces[f].size()) +
                         " at vertex " + lab(k, faces[f][0]));
            }
    }
    auto bnd = on_boundary(k);
    for (int v = 0; v < g.size(); ++v) {
        int comps = g.component_count(v);
        int d = g.degree(v);
        if (comps > 2) rep.fail("(i) vertex " + lab(k, v) + ": removal leaves " + std::to_string(comps) + " components");
        if (comps == 2 && k.gamma[v] != d + 2)
            rep.fail("(i) cut vertex " + lab(k, v) + ": gamma " + std::to_string(k.gamma[v]) + " != degree+2 = " +
                     std::to_string(d + 2));
        if (k.gamma[v] < 5) rep.fail("(ii) vertex " + lab(k, v) + ": gamma " + std::to_string(k.gamma[v]) + " < 5");
        if (!bnd[v] && k.gamma[v] != d)
            rep.fail("(ii) internal vertex " + lab(k, v) + ": gamma " + std::to_string(k.gamma[v]) + " != degree " +
                     std::to_string(d));
        if (bnd[v] && k.gamma[v] <= d)
            rep.fail("(ii) boundary vertex " + lab(k, v) + ": gamma " + std::to_string(k.gamma[v]) + " <= degree " +
                     std::to_string(d));
    }
    if (!rep.ok) return rep;
    int formula = ring_size_formula(k);
    if (g.edge_count() > 0 && formula < 2) rep.fail("(iii) ring-size " + std::to_string(formula) + " < 2");
    if (!rep.ok) return rep;
    try {
        auto fc = build_completion(k);
        // a lone vertex has no boundary edge, so its ring is gamma rather than gamma-1
        if (g.edge_count() > 0 && fc.ring != formula)
            rep.fail("ring-size formula " + std::to_string(formula) + " disagrees with completion ring " +
                     std::to_string(fc.ring));
    } catch (const GraphError& e) {
        rep.fail(std::string("free completion: ") + e.what());
    }
    return rep;
}

int ring_size(const Configuration& k) { return free_completion(k).ring; }

FreeCompletion free_completion(const Configuration& k) {
    auto rep = validate_configuration(k);
    if (!rep.ok) throw GraphError("invalid configuration " + k.name + ": " + rep.issues.front());
    return build_completion(k);
}

Configuration configuration_from_completion(std::string name, const Graph& s, int ring) {
    const int n = s.size() - ring;
    if (n <= 0) throw GraphError("completion has no internal vertices");
    std::vector<int> keep;
    for (int v = ring; v < s.size(); ++v) keep.push_back(v);
    Configuration k;
    k.name = std::move(name);
    k.graph = s.induced(keep);
    for (int v = ring; v < s.size(); ++v) k.gamma.push_back(s.degree(v));
    for (int v = ring; v < s.size() && k.outer_dart.first < 0; ++v) {
        const auto& r = s.rot(v);
        const int d = static_cast<int>(r.size());
        for (int i = 0; i < d; ++i) {
            int a = r[i], x = r[(i + 1) % d];
            if (a >= ring && x < ring) {
                k.outer_dart = {a - ring, v - ring};
                break;
            }
        }
    }
    return k;
}

int radius(const Configuration& k) {
    int best = -1;
    for (int v = 0; v < k.size(); ++v) {
        auto d = k.graph.distances(v);
        int ecc = 0;
        for (int x : d) ecc = std::max(ecc, x < 0 ? 1 << 20 : x);
        if (best < 0 || ecc < best) best = ecc;
    }
    return best;
}

std::vector<std::string> structural_screens(const Configuration& k) {
    std::vector<std::string> w;
    const Graph& g = k.graph;
    for (int v = 0; v < k.size(); ++v)
        if (k.gamma[v] > g.degree(v) + 3)
            w.push_back("tutte-whitney: vertex " + lab(k, v) + " gamma " + std::to_string(k.gamma[v]) + " > degree+3");
    for (int v = 0; v < k.size(); ++v)
        for (int u : g.rot(v))
            if (v < u && g.degree(v) == 2 && g.degree(u) == 2 && k.gamma[v] == 5 && k.gamma[u] == 5)
                w.push_back("hanging 5-5 pair: " + lab(k, v) + "-" + lab(k, u));
    int r = radius(k);
    if (r > 2) w.push_back("radius " + std::to_string(r) + " > 2");
    return w;
}

std::optional<Configuration> random_configuration(Rng& rng, const Graph& t, int max_size) {
    std::uniform_int_distribution<int> pickv(0, t.size() - 1);
    int target = 1 + static_cast<int>(rng() % std::max(1, max_size));
    std::vector<int> set{pickv(rng)};
    std::vector<char> in(t.size(), 0);
    in[set[0]] = 1;
    while (static_cast<int>(set.size()) < target) {
        std::vector<int> frontier;
        for (int v : set)
            for (int w : t.rot(v))
                if (!in[w]) frontier.push_back(w);
        if (frontier.empty()) break;
        int w = frontier[rng() % frontier.size()];
        in[w] = 1;
        set.push_back(w);
    }
    std::sort(set.begin(), set.end());
    Graph g = t.induced(set);
    std::vector<int> gamma;
    for (int v : set) gamma.push_back(t.degree(v));

    std::set<std::vector<int>> tfaces;
    for (auto f : t.faces()) {
        std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
        tfaces.insert(f);
    }
    Configuration k;
    k.name = "random";
    k.graph = g;
    k.gamma = gamma;
    if (g.edge_count() > 0) {
        int others = 0;
        for (const auto& f : g.faces()) {
            std::vector<int> amb;
            for (int v : f) amb.push_back(set[v]);
            std::rotate(amb.begin(), std::min_element(amb.begin(), amb.end()), amb.end());
            if (amb.size() == 3 && tfaces.count(amb)) continue;
            ++others;
            k.outer_dart = {f[0], f[1 % f.size()]};
        }
        if (others != 1) return std::nullopt;
    }
    if (!validate_configuration(k).ok) return std::nullopt;
    return k;
}

}  // namespace fct
