#include "oracle.h"

#include <algorithm>
#include <map>

namespace oracle {

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::vector<int>> rot(g.size());
    for (int v = 0; v < g.size(); ++v)
        for (int w : g.rot(v)) rot[perm[v]].push_back(perm[w]);
    return Graph(std::move(rot));
}

namespace {

void extend(const Graph& g, std::vector<int>& path, std::set<std::vector<int>>& seen,
            std::vector<std::vector<int>>& out) {
    if (path.size() >= 3 && g.adjacent(path.back(), path.front())) {
        // canonical: rotate to smallest, pick direction with smaller second entry
        auto c = path;
        std::rotate(c.begin(), std::min_element(c.begin(), c.end()), c.end());
        if (c[1] > c.back()) std::reverse(c.begin() + 1, c.end());
        if (seen.insert(c).second) out.push_back(c);
    }
    if (path.size() == 5) return;
    for (int w = 0; w < g.size(); ++w) {
        if (!g.adjacent(path.back(), w)) continue;
        if (std::find(path.begin(), path.end(), w) != path.end()) continue;
        path.push_back(w);
        extend(g, path, seen, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<std::vector<int>> short_circuits(const Graph& g) {
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> cycles, out;
    for (int s = 0; s < g.size(); ++s) {
        std::vector<int> path{s};
        extend(g, path, seen, cycles);
    }
    auto faces = g.faces();
    // edge -> incident faces
    std::map<std::pair<int, int>, std::vector<int>> by_edge;
    for (size_t f = 0; f < faces.size(); ++f)
        for (size_t i = 0; i < faces[f].size(); ++i) {
            int a = faces[f][i], b = faces[f][(i + 1) % faces[f].size()];
            by_edge[std::minmax(a, b)].push_back(static_cast<int>(f));
        }
    for (const auto& c : cycles) {
        std::set<std::pair<int, int>> cut;
        for (size_t i = 0; i < c.size(); ++i) cut.insert(std::minmax(c[i], c[(i + 1) % c.size()]));
        std::vector<int> region(faces.size(), -1);
        int nreg = 0;
        for (size_t f0 = 0; f0 < faces.size(); ++f0) {
            if (region[f0] >= 0) continue;
            std::vector<int> st{static_cast<int>(f0)};
            region[f0] = nreg;
            while (!st.empty()) {
                int f = st.back();
                st.pop_back();
                for (size_t i = 0; i < faces[f].size(); ++i) {
                    auto e = std::minmax(faces[f][i], faces[f][(i + 1) % faces[f].size()]);
                    if (cut.count(e)) continue;
                    for (int h : by_edge[e])
                        if (region[h] < 0) {
                            region[h] = nreg;
                            st.push_back(h);
                        }
                }
            }
            ++nreg;
        }
        if (nreg != 2) continue;
        std::set<int> side[2];
        for (size_t f = 0; f < faces.size(); ++f)
            for (int v : faces[f])
                if (std::find(c.begin(), c.end(), v) == c.end()) side[region[f]].insert(v);
        int need = c.size() <= 4 ? 1 : 2;
        if (static_cast<int>(side[0].size()) >= need && static_cast<int>(side[1].size()) >= need)
            out.push_back(c);
    }
    return out;
}

std::vector<std::vector<int>> colorings(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<int> col(g.size(), -1);
    auto rec = [&](auto&& self, int v) -> void {
        if (v == g.size()) {
            out.push_back(col);
            return;
        }
        for (int c = 0; c < 4; ++c) {
            bool ok = true;
            for (int w : g.rot(v))
                if (w < v && col[w] == c) ok = false;
            if (!ok) continue;
            col[v] = c;
            self(self, v + 1);
        }
        col[v] = -1;
    };
    rec(rec, 0);
    return out;
}

long cycle_colorings(int r) {
    long count = 0, total = 1;
    for (int i = 0; i < r; ++i) total *= 4;
    for (long w = 0; w < total; ++w) {
        std::vector<int> c(r);
        long x = w;
        for (int i = 0; i < r; ++i) {
            c[i] = x % 4;
            x /= 4;
        }
        bool ok = true;
        for (int i = 0; i < r; ++i) ok &= c[i] != c[(i + 1) % r];
        count += ok;
    }
    return count;
}

}  // namespace oracle

namespace oracle {

namespace {

const int kPairs[3][2][2] = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};

int pair_index(int theta, int x) { return (x == kPairs[theta][0][0] || x == kPairs[theta][0][1]) ? 0 : 1; }

// connected pieces of a vertex subset of the r-cycle, each listed clockwise from its first vertex
std::vector<std::vector<int>> pieces(int r, const std::vector<char>& in) {
    std::vector<std::vector<int>> out;
    bool whole = std::all_of(in.begin(), in.end(), [](char x) { return x; });
    if (whole) {
        std::vector<int> all(r);
        for (int i = 0; i < r; ++i) all[i] = i;
        return {all};
    }
    for (int i = 0; i < r; ++i) {
        if (!in[i] || in[(i + r - 1) % r]) continue;
        std::vector<int> p;
        for (int j = i; in[j % r] && static_cast<int>(p.size()) < r; ++j) p.push_back(j % r);
        out.push_back(p);
    }
    return out;
}

std::set<std::set<int>> as_sets(const std::vector<std::vector<int>>& ps) {
    std::set<std::set<int>> s;
    for (auto& p : ps) s.insert(std::set<int>(p.begin(), p.end()));
    return s;
}

// V_i lies in one connected component of R minus V_j, for all i != j
bool arrangement_ok(int r, const std::vector<int>& label) {
    int n = *std::max_element(label.begin(), label.end()) + 1;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            std::vector<char> rest(r);
            for (int v = 0; v < r; ++v) rest[v] = label[v] != j;
            int hits = 0;
            for (auto& p : pieces(r, rest))
                hits += std::any_of(p.begin(), p.end(), [&](int v) { return label[v] == i; });
            if (hits > 1) return false;
        }
    return true;
}

struct Arr {
    std::vector<int> label;
    std::vector<std::vector<int>> comps;  // all pieces of all groups
    std::vector<int> group, sign;
};

bool fits(const std::vector<int>& c, int theta, const Arr& p) {
    const int r = static_cast<int>(c.size());
    // maximal runs coloured within one pair
    std::vector<std::vector<int>> runs;
    for (int k = 0; k < 2; ++k) {
        std::vector<char> in(r);
        for (int v = 0; v < r; ++v) in[v] = pair_index(theta, c[v]) == k;
        for (auto& q : pieces(r, in)) runs.push_back(q);
    }
    if (as_sets(runs) != as_sets(p.comps)) return false;
    for (size_t a = 0; a < p.comps.size(); ++a)
        for (size_t b = a + 1; b < p.comps.size(); ++b) {
            if (p.group[a] != p.group[b]) continue;
            if (pair_index(theta, c[p.comps[a][0]]) != pair_index(theta, c[p.comps[b][0]])) return false;
            bool same = c[p.comps[a][0]] == c[p.comps[b][0]];
            if ((p.sign[a] == p.sign[b]) != same) return false;
        }
    return true;
}

std::vector<std::vector<int>> vertex_partitions(int r) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int next) -> void {
        if (static_cast<int>(cur.size()) == r) {
            out.push_back(cur);
            return;
        }
        for (int b = 0; b <= next; ++b) {
            cur.push_back(b);
            self(self, std::max(next, b + 1));
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

Arr make_arr(int r, const std::vector<int>& label) {
    Arr a;
    a.label = label;
    int n = *std::max_element(label.begin(), label.end()) + 1;
    for (int i = 0; i < n; ++i) {
        std::vector<char> in(r);
        for (int v = 0; v < r; ++v) in[v] = label[v] == i;
        for (auto& q : pieces(r, in)) {
            a.comps.push_back(q);
            a.group.push_back(i);
        }
    }
    a.sign.assign(a.comps.size(), 0);
    return a;
}

// all arrangements with every sign function that theta-fit c
std::vector<Arr> fitting(const std::vector<int>& c, int theta) {
    const int r = static_cast<int>(c.size());
    std::vector<Arr> out;
    for (auto& label : vertex_partitions(r)) {
        if (!arrangement_ok(r, label)) continue;
        Arr a = make_arr(r, label);
        const int k = static_cast<int>(a.comps.size());
        for (int mask = 0; mask < (1 << k); ++mask) {
            for (int j = 0; j < k; ++j) a.sign[j] = (mask >> j) & 1;
            if (fits(c, theta, a)) out.push_back(a);
        }
    }
    return out;
}

}  // namespace

ColorSet all_cycle_colorings(int r) {
    ColorSet s;
    long total = 1;
    for (int i = 0; i < r; ++i) total *= 4;
    for (long w = 0; w < total; ++w) {
        std::vector<int> c(r);
        long x = w;
        for (int i = 0; i < r; ++i) {
            c[i] = x % 4;
            x /= 4;
        }
        bool ok = true;
        for (int i = 0; i < r; ++i) ok &= c[i] != c[(i + 1) % r];
        if (ok) s.insert(c);
    }
    return s;
}

ColorSet lifts(const Graph& g, const std::vector<int>& phi) {
    ColorSet s;
    for (auto& col : colorings(g)) {
        std::vector<int> c;
        for (int v : phi) c.push_back(col[v]);
        s.insert(c);
    }
    return s;
}

std::vector<std::vector<int>> fitting_partitions(const std::vector<int>& c, int theta) {
    std::set<std::vector<int>> labels;
    for (auto& a : fitting(c, theta)) labels.insert(a.label);
    return {labels.begin(), labels.end()};
}

bool condition_holds(const ColorSet& s, const std::vector<int>& c) {
    const int r = static_cast<int>(c.size());
    static thread_local std::map<int, ColorSet> universe;
    if (!universe.count(r)) universe[r] = all_cycle_colorings(r);
    for (int theta = 0; theta < 3; ++theta) {
        bool found = false;
        for (auto& p : fitting(c, theta)) {
            bool inside = true;
            for (auto& d : universe[r]) {
                bool f = false;
                for (int t = 0; t < 3 && !f; ++t) f = fits(d, t, p);
                if (f && !s.count(d)) {
                    inside = false;
                    break;
                }
            }
            if (inside) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

bool consistent(const ColorSet& s) {
    for (auto& c : s)
        if (!condition_holds(s, c)) return false;
    return true;
}

ColorSet max_consistent(ColorSet s) {
    for (;;) {
        ColorSet next;
        for (auto& c : s)
            if (condition_holds(s, c)) next.insert(c);
        if (next == s) return s;
        s = std::move(next);
    }
}

}  // namespace oracle

namespace oracle {

namespace {

bool same_cyclic(std::vector<int> a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a == b) return true;
        std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    return a.empty();
}

}  // namespace

int rule_images(const Graph& host, const std::vector<int>& gamma, const fct::Rule& r, int u, int w) {
    const Graph& L = r.graph;
    const int n = L.size();
    auto dist = host.distances(u);
    std::vector<int> near;
    for (int x = 0; x < host.size(); ++x)
        if (dist[x] >= 0 && dist[x] <= 2) near.push_back(x);
    std::set<std::vector<int>> images;
    std::vector<int> f(n, -1);
    std::function<void(int)> go = [&](int v) {
        if (v == n) {
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y)
                    if (x != y && L.adjacent(x, y) != host.adjacent(f[x], f[y])) return;
            std::vector<int> back(host.size(), -1);
            for (int x = 0; x < n; ++x) back[f[x]] = x;
            for (int sign : {1, -1}) {
                bool ok = true;
                for (int x = 0; x < n && ok; ++x) {
                    std::vector<int> seen;
                    for (int y : host.rot(f[x]))
                        if (back[y] >= 0) seen.push_back(back[y]);
                    if (sign < 0) std::reverse(seen.begin(), seen.end());
                    ok = same_cyclic(seen, L.rot(x));
                }
                if (ok) {
                    auto s = f;
                    std::sort(s.begin(), s.end());
                    images.insert(s);
                }
            }
            return;
        }
        std::vector<int> cands = near;
        if (v == r.source) cands = {u};
        if (v == r.sink) cands = {w};
        for (int x : cands) {
            if (std::find(f.begin(), f.begin() + v, x) != f.begin() + v) continue;
            if (!r.bounds[v].contains(gamma[x])) continue;
            f[v] = x;
            go(v + 1);
            f[v] = -1;
        }
    };
    go(0);
    return static_cast<int>(images.size());
}

void for_each_cartwheel(int d, int spoke_max, int outer_max, const std::function<void(const fct::Part&)>& f) {
    std::vector<int> spokes(d, 5);
    while (true) {
        fct::Part base;
        base.degree = d;
        base.bounds[0] = {d, d};
        std::vector<int> outer;
        for (int k = 1; k <= d; ++k) {
            base.bounds[k] = {spokes[k - 1], spokes[k - 1]};
            outer.push_back(fct::hat_id(d, k));
            for (int l = 1; l <= spokes[k - 1] - 5; ++l) outer.push_back(fct::fan_id(d, k, l));
        }
        std::vector<int> deg(outer.size(), 5);
        while (true) {
            fct::Part p = base;
            for (size_t i = 0; i < outer.size(); ++i) p.bounds[outer[i]] = {deg[i], deg[i]};
            f(p);
            size_t i = 0;
            while (i < deg.size() && deg[i] == outer_max) deg[i++] = 5;
            if (i == deg.size()) break;
            ++deg[i];
        }
        int k = 0;
        while (k < d && spokes[k] == spoke_max) spokes[k++] = 5;
        if (k == d) break;
        ++spokes[k];
    }
}

}  // namespace oracle
