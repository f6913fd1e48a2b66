#include "fct/rules.h"

#include <algorithm>
#include <set>

#include "fct/match.h"

namespace fct {

namespace {

std::string lab(const Rule& r, int v) { return std::to_string(r.graph.label(v)); }

std::vector<int> outer_of(const Rule& r) {
    if (r.outer_dart.first < 0) return {};
    return r.graph.face_of(r.outer_dart.first, r.outer_dart.second);
}

}  // namespace

Rule make_rule(std::string id, int q, Graph g, std::vector<Bounds> bounds, int source, int sink) {
    Rule r;
    r.id = std::move(id);
    r.q = q;
    r.graph = std::move(g);
    r.bounds = std::move(bounds);
    r.source = source;
    r.sink = sink;
    if (r.graph.edge_count() == 0) return r;
    auto faces = r.graph.faces();
    std::vector<int> big;
    for (size_t i = 0; i < faces.size(); ++i)
        if (faces[i].size() != 3) big.push_back(static_cast<int>(i));
    auto dart = [&](const std::vector<int>& f) { return std::pair<int, int>{f[0], f[1 % f.size()]}; };
    if (big.size() == 1) {
        r.outer_dart = dart(faces[big[0]]);
        return r;
    }
    for (const auto& f : faces) {
        r.outer_dart = dart(f);
        if (validate_rule(r).ok) return r;
    }
    r.outer_dart = dart(faces[0]);
    return r;
}

ValidationReport validate_rule(const Rule& r) {
    ValidationReport rep;
    const Graph& g = r.graph;
    const int n = g.size();
    if (n < 2) {
        rep.fail("rule graph needs at least two vertices");
        return rep;
    }
    auto emb = validate_embedding(g);
    if (!emb.ok) {
        for (auto& s : emb.issues) rep.fail("embedding: " + s);
        return rep;
    }
    if (!g.connected()) rep.fail("rule graph is disconnected");
    if (static_cast<int>(r.bounds.size()) != n) {
        rep.fail("bounds missing for some vertex");
        return rep;
    }
    if (r.source < 0 || r.source >= n || r.sink < 0 || r.sink >= n || !g.adjacent(r.source, r.sink)) {
        rep.fail("source and sink must be adjacent vertices");
        return rep;
    }
    auto outer = outer_of(r);
    std::set<std::pair<int, int>> outer_darts;
    for (size_t i = 0; i < outer.size(); ++i) outer_darts.insert({outer[i], outer[(i + 1) % outer.size()]});
    for (const auto& f : g.faces()) {
        if (outer_darts.count({f[0], f[1 % f.size()]})) continue;
        if (f.size() != 3) rep.fail("bounded face of length " + std::to_string(f.size()));
    }
    if (n >= 3)
        for (int v = 0; v < n; ++v)
            if (g.component_count(v) > 1) rep.fail("cut vertex " + lab(r, v));
    auto ds = g.distances(r.source), dt = g.distances(r.sink);
    std::vector<char> bnd(n, 0);
    for (int v : outer) bnd[v] = 1;
    for (int v = 0; v < n; ++v) {
        if (ds[v] < 0 || ds[v] > 2 || dt[v] < 0 || dt[v] > 2)
            rep.fail("vertex " + lab(r, v) + " is farther than two from source or sink");
        const Bounds& b = r.bounds[v];
        const int d = g.degree(v);
        if (b.lo < 5 || b.lo >= kInfinity || b.lo > b.hi) {
            rep.fail("vertex " + lab(r, v) + ": bad bounds");
            continue;
        }
        if (!bnd[v] && !(b.lo == d && b.hi == d))
            rep.fail("internal vertex " + lab(r, v) + " must have both bounds equal to its degree");
        if (bnd[v] && !(d <= b.lo && b.hi > d))
            rep.fail("boundary vertex " + lab(r, v) + " needs degree <= lower bound < upper bound > degree");
    }
    return rep;
}

Rule triangle_rule(int q) {
    Graph g({{1, 2}, {2, 0}, {0, 1}});
    return make_rule("triangle", q, g, std::vector<Bounds>(3), 0, 1);
}

int rule_images(const Graph& host, const std::vector<int>& gamma, const Rule& r, int u, int w) {
    MatchSpec spec;
    spec.pattern = &r.graph;
    spec.host = &host;
    spec.anchors = {{r.source, u}, {r.sink, w}};
    spec.allowed = [&](int v, int x) { return r.bounds[v].contains(gamma[x]); };
    std::set<std::vector<int>> images;
    for_each_embedding(spec, [&](const std::vector<int>& m, bool) {
        std::vector<int> s = m;
        std::sort(s.begin(), s.end());
        images.insert(s);
        return true;
    });
    return static_cast<int>(images.size());
}

int rule_images(const Graph& t, const Rule& r, int u, int w) {
    std::vector<int> deg(t.size());
    for (int v = 0; v < t.size(); ++v) deg[v] = t.degree(v);
    return rule_images(t, deg, r, u, w);
}

int rule_transfer(const Graph& t, int u, int w, const RuleSet& rules) {
    if (!t.adjacent(u, w)) throw GraphError("rule transfer between non-adjacent vertices");
    int total = 0;
    for (const auto& r : rules) total += r.q * rule_images(t, r, u, w);
    return total;
}

int vertex_charge(const Graph& t, int u, const RuleSet& rules) {
    int c = 10 * (6 - t.degree(u));
    for (int w : t.rot(u)) c += rule_transfer(t, w, u, rules) - rule_transfer(t, u, w, rules);
    return c;
}

bool appears_in_triangulation(const Configuration& k, const Graph& t) {
    MatchSpec spec;
    spec.pattern = &k.graph;
    spec.host = &t;
    spec.allowed = [&](int v, int x) { return k.gamma[v] == t.degree(x); };
    spec.faces = bounded_faces(k.graph, k.outer_dart);
    bool found = false;
    for_each_embedding(spec, [&](const std::vector<int>&, bool) {
        found = true;
        return false;
    });
    return found;
}

}  // namespace fct
