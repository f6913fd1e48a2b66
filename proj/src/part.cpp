#include "fct/part.h"

#include <algorithm>

namespace fct {

namespace {

int mod1(int k, int d) { return ((k - 1) % d + d) % d + 1; }

// spoke k and fan index l of a fan number
std::pair<int, int> fan_parts(int d, int id) {
    int k = (id - 1) % d + 1;
    return {k, (id - k) / d - 1};
}

}  // namespace

const Bounds& Part::at(int id) const {
    auto it = bounds.find(id);
    if (it == bounds.end()) throw PartError("vertex " + std::to_string(id) + " is not in the part");
    return it->second;
}

Part trivial_part(int d) {
    if (d < 3) throw PartError("hub degree must be at least 3");
    Part p;
    p.degree = d;
    p.bounds[0] = {d, d};
    for (int id = 1; id <= 2 * d; ++id) p.bounds[id] = {};
    return p;
}

bool narrow(Part& p, int id, const Bounds& b) {
    Bounds& cur = p.bounds.at(id);
    Bounds nb{std::max(cur.lo, b.lo), std::min(cur.hi, b.hi)};
    if (nb.lo > nb.hi) return false;
    bool was = cur.exact();
    cur = nb;
    const int d = p.degree;
    if (id >= 1 && id <= d && nb.exact() && !was)
        for (int l = 1; l <= nb.lo - 5; ++l) p.bounds[fan_id(d, id, l)] = {};
    return true;
}

ValidationReport validate_part(const Part& p) {
    ValidationReport rep;
    const int d = p.degree;
    if (d < 3) {
        rep.fail("hub degree below 3");
        return rep;
    }
    if (!p.has(0) || p.at(0) != Bounds{d, d}) rep.fail("hub bounds must equal the hub degree");
    for (int id = 1; id <= 2 * d; ++id)
        if (!p.has(id)) rep.fail("missing vertex " + std::to_string(id));
    for (auto [id, b] : p.bounds) {
        if (b.lo < 5 && id != 0) rep.fail("vertex " + std::to_string(id) + ": lower bound below 5");
        if (b.lo > b.hi || b.lo >= kInfinity) rep.fail("vertex " + std::to_string(id) + ": bad interval");
        if (id > 2 * d) {
            auto [k, l] = fan_parts(d, id);
            if (!p.has(k) || !p.expanded(k) || l > p.fans(k))
                rep.fail("fan " + std::to_string(id) + " over an unexpanded spoke");
        }
    }
    if (!rep.ok) return rep;
    for (int k = 1; k <= d; ++k)
        for (int l = 1; l <= p.fans(k); ++l)
            if (!p.has(fan_id(d, k, l))) rep.fail("missing fan " + std::to_string(fan_id(d, k, l)));
    return rep;
}

PartGraph part_graph(const Part& p) {
    const int d = p.degree;
    PartGraph pg;
    for (auto& [id, b] : p.bounds) {
        pg.index[id] = static_cast<int>(pg.id.size());
        pg.id.push_back(id);
    }
    std::vector<std::vector<int>> rot(pg.id.size());
    auto add = [&](int id, std::vector<int> nbrs) {
        auto& r = rot[pg.index.at(id)];
        for (int x : nbrs) r.push_back(pg.index.at(x));
    };
    std::vector<int> hub;
    for (int k = 1; k <= d; ++k) hub.push_back(k);
    add(0, hub);
    for (int k = 1; k <= d; ++k) {
        int pk = prev_spoke(d, k), nk = next_spoke(d, k);
        std::vector<int> r{0, pk, hat_id(d, pk)};
        for (int l = 1; l <= p.fans(k); ++l) r.push_back(fan_id(d, k, l));
        r.push_back(hat_id(d, k));
        r.push_back(nk);
        add(k, r);

        std::vector<int> h{k};
        if (p.fans(k) > 0) h.push_back(fan_id(d, k, p.fans(k)));
        else if (p.fans(k) == 0) h.push_back(hat_id(d, pk));
        if (p.fans(nk) > 0) h.push_back(fan_id(d, nk, 1));
        else if (p.fans(nk) == 0) h.push_back(hat_id(d, nk));
        h.push_back(nk);
        add(hat_id(d, k), h);

        const int m = p.fans(k);
        for (int l = 1; l <= m; ++l) {
            int before = l == 1 ? hat_id(d, pk) : fan_id(d, k, l - 1);
            int after = l == m ? hat_id(d, k) : fan_id(d, k, l + 1);
            add(fan_id(d, k, l), {k, before, after});
        }
    }
    pg.graph = Graph(std::move(rot));
    pg.graph.labels = pg.id;
    return pg;
}

std::pair<Part, Part> refine(const Part& p, int m, int n) {
    if (m <= 0 || !p.has(m)) throw PartError("vertex " + std::to_string(m) + " is outside the numbering scheme");
    const Bounds b = p.at(m);
    if (b.exact()) throw PartError("vertex " + std::to_string(m) + " already has equal bounds");
    Part a = p, c = p;
    if (n > 0) {
        if (n <= b.lo || n > b.hi) throw PartError("condition leaves an empty interval");
        narrow(a, m, {n, kInfinity});
        narrow(c, m, {5, n - 1});
    } else if (n < 0) {
        if (-n < b.lo || -n >= b.hi) throw PartError("condition leaves an empty interval");
        narrow(a, m, {5, -n});
        narrow(c, m, {-n + 1, kInfinity});
    } else {
        throw PartError("condition bound must be nonzero");
    }
    return {a, c};
}

std::optional<Part> and_parts(const Part& p, const Part& q) {
    if (p.degree != q.degree) throw PartError("hub degrees differ");
    const int d = p.degree;
    Part r = p;
    // spokes first so their fans exist before fan bounds are merged
    for (auto& [id, b] : q.bounds)
        if (id <= 2 * d && !narrow(r, id, b)) return std::nullopt;
    for (auto& [id, b] : q.bounds) {
        if (id <= 2 * d) continue;
        if (!r.has(id) || !narrow(r, id, b)) return std::nullopt;
    }
    return r;
}

int transform_id(const Part& p, int id, int rot, bool mirror) {
    const int d = p.degree;
    auto spoke = [&](int k) {
        if (mirror) k = mod1(2 - k, d);
        return mod1(k + rot, d);
    };
    if (id == 0) return 0;
    if (id <= d) return spoke(id);
    if (id <= 2 * d) {
        int a = spoke(id - d), b = spoke(next_spoke(d, id - d));
        return hat_id(d, b == next_spoke(d, a) ? a : b);
    }
    auto [k, l] = fan_parts(d, id);
    int m = p.fans(k);
    return fan_id(d, spoke(k), mirror ? m + 1 - l : l);
}

Part transform(const Part& p, int rot, bool mirror) {
    Part r;
    r.degree = p.degree;
    for (auto& [id, b] : p.bounds) r.bounds[transform_id(p, id, rot, mirror)] = b;
    return r;
}

bool implies(const Part& p, const Part& q) {
    if (p.degree != q.degree) return false;
    for (auto& [id, b] : q.bounds) {
        auto it = p.bounds.find(id);
        if (it == p.bounds.end() || it->second.lo < b.lo || it->second.hi > b.hi) return false;
    }
    return true;
}

Cartwheel cartwheel_from_part(const Part& p) {
    auto rep = validate_part(p);
    if (!rep.ok) throw PartError("invalid part: " + rep.issues.front());
    for (auto& [id, b] : p.bounds)
        if (!b.exact()) throw PartError("cartwheel needs exact degrees");
    Cartwheel w;
    w.exact = p;
    auto pg = part_graph(p);
    w.graph = std::move(pg.graph);
    w.id = std::move(pg.id);
    for (int id : w.id) w.gamma.push_back(p.at(id).lo);
    return w;
}

Cartwheel extract_cartwheel(const Graph& t, int v) {
    auto sn = second_neighborhood(t, v);
    if (!sn.well_behaved) throw GraphError("second neighbourhood of the hub is not well behaved");
    const int d = t.degree(v);
    Part p;
    p.degree = d;
    p.bounds[0] = {d, d};
    const auto& spokes = t.rot(v);
    std::vector<int> hat_left(d + 1), hat_right(d + 1);
    std::map<int, int> where{{0, v}};
    for (int k = 1; k <= d; ++k) {
        int s = spokes[k - 1];
        // clockwise from the hub: previous spoke, hat, fans, hat, next spoke
        std::vector<int> around;
        for (int i = 0, x = v; i < t.degree(s); ++i, x = t.succ(s, x)) around.push_back(x);
        const int deg = static_cast<int>(around.size());
        if (deg < 5 || around[1] != spokes[prev_spoke(d, k) - 1] || around[deg - 1] != spokes[next_spoke(d, k) - 1])
            throw GraphError("spoke rotation does not match the hub");
        p.bounds[k] = {deg, deg};
        where[k] = s;
        hat_left[k] = around[2];
        hat_right[k] = around[deg - 2];
        for (int l = 1; l <= deg - 5; ++l) {
            int g = t.degree(around[2 + l]);
            p.bounds[fan_id(d, k, l)] = {g, g};
            where[fan_id(d, k, l)] = around[2 + l];
        }
    }
    for (int k = 1; k <= d; ++k) {
        int h = hat_right[k];
        if (h != hat_left[next_spoke(d, k)]) throw GraphError("hats of adjacent spokes disagree");
        p.bounds[hat_id(d, k)] = {t.degree(h), t.degree(h)};
        where[hat_id(d, k)] = h;
    }
    auto w = cartwheel_from_part(p);
    for (int id : w.id) w.origin.push_back(where.at(id));
    return w;
}

bool part_fits(const Cartwheel& w, const Part& p) {
    if (p.degree != w.degree()) return false;
    for (int mirror = 0; mirror < 2; ++mirror)
        for (int r = 0; r < p.degree; ++r)
            if (implies(w.exact, transform(p, r, mirror))) return true;
    return false;
}

int cartwheel_charge(const Cartwheel& w, const RuleSet& rules) {
    int c = 10 * (6 - w.degree());
    for (int x : w.graph.rot(0))
        for (const auto& r : rules) c += r.q * (rule_images(w.graph, w.gamma, r, x, 0) - rule_images(w.graph, w.gamma, r, 0, x));
    return c;
}

}  // namespace fct
