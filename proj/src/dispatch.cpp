#include "fct/dispatch.h"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "fct/match.h"

namespace fct {

namespace {

int mod1(int k, int d) { return ((k - 1) % d + d) % d + 1; }

int floor_div(int a, int b) { return a >= 0 ? a / b : -((-a + b - 1) / b); }

bool same_cycle(std::vector<int> a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a == b) return true;
        std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    return a.empty();
}

bool in_outer(const Graph& g, std::pair<int, int> outer_dart, int x, int y) {
    auto f = g.face_of(outer_dart.first, outer_dart.second);
    for (size_t i = 0; i < f.size(); ++i)
        if (f[i] == x && f[(i + 1) % f.size()] == y) return true;
    return false;
}

// Injective, exact degrees, induced, one orientation for every rotation, and
// a spoke present whenever both of its hats are.
bool first_principles(const Configuration& k, const Part& p, const PartGraph& pg, const std::vector<int>& img) {
    const int n = k.size();
    std::set<int> used;
    for (int v = 0; v < n; ++v) {
        if (img[v] < 0 || !used.insert(img[v]).second) return false;
        const Bounds& b = p.at(pg.id[img[v]]);
        if (!b.exact() || b.lo != k.gamma[v]) return false;
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (k.graph.adjacent(a, b) != pg.graph.adjacent(img[a], img[b])) return false;
    std::vector<int> back(pg.graph.size(), -1);
    for (int v = 0; v < n; ++v) back[img[v]] = v;
    bool oriented = false;
    for (int sign : {1, -1}) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v) {
            std::vector<int> seen;
            for (int y : pg.graph.rot(img[v]))
                if (back[y] >= 0) seen.push_back(back[y]);
            if (sign < 0) std::reverse(seen.begin(), seen.end());
            ok = same_cycle(seen, k.graph.rot(v));
        }
        oriented |= ok;
    }
    if (!oriented) return false;
    const int d = p.degree;
    std::set<int> ids;
    for (int v = 0; v < n; ++v) ids.insert(pg.id[img[v]]);
    for (int s = 1; s <= d; ++s)
        if (ids.count(hat_id(d, prev_spoke(d, s))) && ids.count(hat_id(d, s)) && !ids.count(s)) return false;
    return true;
}

std::vector<int> to_ids(const PartGraph& pg, const std::vector<int>& img) {
    std::vector<int> out;
    for (int x : img) out.push_back(pg.id[x]);
    return out;
}

// third corner of the triangle on the chosen side of x->y, or -1
int third(const Graph& g, int x, int y, int orient) {
    auto f = orient > 0 ? g.face_of(x, y) : g.face_of(y, x);
    return f.size() == 3 ? f[2] : -1;
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

}  // namespace

std::vector<Placement> rule_as_parts(const Rule& r, int d) {
    const Graph& L = r.graph;
    std::vector<Placement> out;
    for (bool outward : {false, true}) {
        const int h = outward ? r.source : r.sink;
        const int o = outward ? r.sink : r.source;
        if (!r.bounds[h].contains(d)) continue;
        const auto& rt = L.rot(h);
        const int c = static_cast<int>(rt.size());
        int start = 0;
        bool boundary = false;
        for (int i = 0; i < c; ++i)
            if (in_outer(L, r.outer_dart, rt[i], h)) {
                start = (i + 1) % c;
                boundary = true;
            }
        if (c > d) continue;
        std::vector<int> chain;
        for (int i = 0; i < c; ++i) chain.push_back(rt[(start + i) % c]);
        const int i0 = static_cast<int>(std::find(chain.begin(), chain.end(), o) - chain.begin());
        bool found = false;
        for (int orient : {1, -1}) {
            Part q = trivial_part(d);
            std::vector<int> spoke(c);
            bool ok = true;
            for (int j = 0; j < c; ++j) {
                spoke[j] = mod1(1 + orient * (j - i0), d);
                ok = ok && narrow(q, spoke[j], r.bounds[chain[j]]);
            }
            if (!ok) continue;
            auto pg = part_graph(q);
            MatchSpec spec;
            spec.pattern = &L;
            spec.host = &pg.graph;
            spec.orientation = orient;
            spec.anchors.push_back({h, pg.index.at(0)});
            for (int j = 0; j < c; ++j) spec.anchors.push_back({chain[j], pg.index.at(spoke[j])});
            for_each_embedding(spec, [&](const std::vector<int>& m, bool) {
                Placement pl;
                pl.rule = &r;
                pl.source_at_hub = outward;
                pl.reversed = orient < 0;
                pl.part = q;
                pl.image = to_ids(pg, m);
                for (int v = 0; v < L.size(); ++v)
                    if (!narrow(pl.part, pl.image[v], r.bounds[v])) return true;
                found = true;
                for (const auto& e : out)
                    if (e.source_at_hub == outward && e.part == pl.part && e.image == pl.image) return true;
                out.push_back(std::move(pl));
                return true;
            });
        }
        if (!found && !(boundary && c == d))
            throw UnencodableRule("rule " + r.id + " cannot be laid onto a part of degree " + std::to_string(d) +
                                  (outward ? " with its source" : " with its sink") + " at the hub");
    }
    return out;
}

Placement rotate_to(const Placement& p, int spoke) {
    Placement r = p;
    r.spoke = spoke;
    r.part = transform(p.part, spoke - 1, false);
    for (auto& id : r.image) id = transform_id(p.part, id, spoke - 1, false);
    return r;
}

bool forced(const Placement& pl, const Part& p) {
    if (!implies(p, pl.part)) return false;
    const int d = p.degree;
    std::set<int> ids(pl.image.begin(), pl.image.end());
    for (int k = 1; k <= d; ++k) {
        if (!ids.count(hat_id(d, prev_spoke(d, k))) || !ids.count(hat_id(d, k))) continue;
        // the hats touch when the spoke has degree 5
        if (!pl.part.expanded(k) && p.at(k).lo < 6) return false;
    }
    return true;
}

std::optional<std::vector<int>> well_positioned_by_search(const Configuration& k, const Part& p) {
    auto pg = part_graph(p);
    MatchSpec spec;
    spec.pattern = &k.graph;
    spec.host = &pg.graph;
    spec.allowed = [&](int v, int x) {
        const Bounds& b = p.at(pg.id[x]);
        return b.exact() && b.lo == k.gamma[v];
    };
    spec.faces = bounded_faces(k.graph, k.outer_dart);
    std::optional<std::vector<int>> res;
    for_each_embedding(spec, [&](const std::vector<int>& m, bool) {
        if (!first_principles(k, p, pg, m)) return true;
        res = to_ids(pg, m);
        return false;
    });
    return res;
}

std::optional<std::vector<int>> well_positioned_appearance(const Configuration& k, const Part& p) {
    auto faces = bounded_faces(k.graph, k.outer_dart);
    const int n = k.size();
    // spanning tree of faces through shared edges, in face order
    std::map<std::pair<int, int>, std::vector<int>> by_edge;
    for (size_t f = 0; f < faces.size(); ++f)
        for (size_t i = 0; i < faces[f].size(); ++i)
            by_edge[std::minmax(faces[f][i], faces[f][(i + 1) % faces[f].size()])].push_back(static_cast<int>(f));
    std::vector<int> order;
    std::vector<char> seen(faces.size(), 0);
    if (!faces.empty()) {
        order.push_back(0);
        seen[0] = 1;
    }
    for (size_t i = 0; i < order.size(); ++i) {
        const auto& f = faces[order[i]];
        for (size_t j = 0; j < f.size(); ++j)
            for (int g : by_edge[std::minmax(f[j], f[(j + 1) % f.size()])])
                if (!seen[g]) {
                    seen[g] = 1;
                    order.push_back(g);
                }
    }
    std::set<int> covered;
    for (int f : order) covered.insert(faces[f].begin(), faces[f].end());
    if (faces.empty() || order.size() != faces.size() || static_cast<int>(covered.size()) != n)
        return well_positioned_by_search(k, p);

    auto pg = part_graph(p);
    const Graph& H = pg.graph;
    for (int x = 0; x < H.size(); ++x)
        for (int y : H.rot(x))
            for (int orient : {1, -1}) {
                std::vector<int> img(n, -1);
                const auto& f0 = faces[order[0]];
                img[f0[0]] = x;
                img[f0[1]] = y;
                img[f0[2]] = third(H, x, y, orient);
                bool ok = img[f0[2]] >= 0;
                for (size_t i = 1; i < order.size() && ok; ++i) {
                    const auto& f = faces[order[i]];
                    int j = 0;
                    while (j < 3 && (img[f[j]] < 0 || img[f[(j + 1) % 3]] < 0)) ++j;
                    if (j == 3) {
                        ok = false;
                        break;
                    }
                    int z = third(H, img[f[j]], img[f[(j + 1) % 3]], orient);
                    int c = f[(j + 2) % 3];
                    if (z < 0 || (img[c] >= 0 && img[c] != z)) ok = false;
                    else img[c] = z;
                }
                if (ok && first_principles(k, p, pg, img)) return to_ids(pg, img);
            }
    return std::nullopt;
}

std::optional<std::string> tau_R(const Part& p, const std::vector<Configuration>& u) {
    for (const auto& k : u)
        if (well_positioned_appearance(k, p)) return k.name;
    return std::nullopt;
}

DischargeContext make_context(int d, const RuleSet& rules, const std::vector<Configuration>& configs) {
    DischargeContext ctx;
    ctx.degree = d;
    ctx.configs = &configs;
    for (const auto& r : rules)
        for (auto& pl : rule_as_parts(r, d)) (pl.source_at_hub ? ctx.outward : ctx.inward).push_back(std::move(pl));
    return ctx;
}

int zeta_bound(const Part& p, int u, int v, const DischargeContext& ctx) {
    std::vector<int> spokes{u};
    if (v != u) spokes.push_back(v);
    std::vector<Placement> in, out;
    for (int s : spokes) {
        for (const auto& pl : ctx.inward) {
            auto r = rotate_to(pl, s);
            if (and_parts(p, r.part)) in.push_back(std::move(r));
        }
        for (const auto& pl : ctx.outward) out.push_back(rotate_to(pl, s));
    }
    int best = -kInfinity;
    std::function<void(size_t, const Part&, int)> go = [&](size_t i, const Part& cur, int sum) {
        if (tau_R(cur, *ctx.configs)) return;
        // an image reached twice through symmetric placements still moves q once
        std::set<std::tuple<const Rule*, int, std::vector<int>>> taken;
        int lost = 0;
        for (const auto& o : out)
            if (forced(o, cur) && taken.insert({o.rule, o.spoke, sorted(o.image)}).second) lost += o.q();
        best = std::max(best, sum - lost);
        for (size_t j = i; j < in.size(); ++j)
            if (auto nxt = and_parts(cur, in[j].part)) go(j + 1, *nxt, sum + in[j].q());
    };
    go(0, p, 0);
    return best;
}

void check_hubcap(const std::vector<Triplet>& h, int d) {
    std::vector<int> count(d + 1, 0);
    for (const auto& t : h) {
        if (t.u < 1 || t.u > d || t.v < 1 || t.v > d) throw PartError("hubcap names a vertex that is not a spoke");
        ++count[t.u];
        if (t.v != t.u) ++count[t.v];
    }
    for (int k = 1; k <= d; ++k)
        if (count[k] != 2)
            throw PartError("spoke " + std::to_string(k) + " appears in " + std::to_string(count[k]) +
                            " triplets instead of two");
}

HubcapResult tau_H(const Part& p, const std::vector<Triplet>& h, const DischargeContext& ctx) {
    check_hubcap(h, p.degree);
    HubcapResult res;
    res.ok = true;
    int sum = 0;
    for (const auto& t : h) {
        int z = zeta_bound(p, t.u, t.v, ctx);
        res.zeta.push_back(z);
        if (z > t.q) res.ok = false;
        sum += t.q;
    }
    res.total = 10 * (6 - p.degree) + floor_div(sum, 2);
    if (res.total > 0) res.ok = false;
    return res;
}

bool tau_S(const Part& p, int ref, int rot, bool mirror, const std::vector<Part>& history) {
    if (ref < 1 || ref > static_cast<int>(history.size()))
        throw PartError("symmetry reference " + std::to_string(ref) + " names no dispatched part");
    return transform(p, rot, mirror) == history[ref - 1];
}

DischargeReport run_presentation(const Presentation& s, const RuleSet& rules,
                                 const std::vector<Configuration>& configs, bool verbose) {
    DischargeReport rep;
    rep.degree = s.degree;
    if (s.degree < 5 || s.degree > 11) throw PartError("hub degree must be between 5 and 11");
    auto ctx = make_context(s.degree, rules, configs);
    std::vector<Part> stack{trivial_part(s.degree)}, history;
    auto fail = [&](const ScriptLine& l, std::string why) {
        rep.failed_line = l.line;
        rep.reason = std::move(why);
        if (verbose) rep.trace.push_back("line " + std::to_string(l.line) + " failed: " + rep.reason);
        return rep;
    };
    for (const auto& l : s.lines) {
        if (l.depth != static_cast<int>(stack.size()))
            return fail(l, "depth " + std::to_string(l.depth) + " but " + std::to_string(stack.size()) + " parts on the stack");
        std::ostringstream tr;
        tr << "line " << l.line << " L" << l.depth << ' ' << l.kind;
        Part top = stack.back();
        if (l.kind == 'C') {
            try {
                auto [a, b] = refine(top, l.m, l.n);
                stack.back() = b;
                stack.push_back(a);
            } catch (const PartError& e) {
                return fail(l, e.what());
            }
            tr << ' ' << l.m << ' ' << l.n;
            if (verbose) rep.trace.push_back(tr.str());
            continue;
        }
        if (l.kind == 'R') {
            auto name = tau_R(top, configs);
            if (!name) return fail(l, "no configuration appears well positioned");
            tr << ' ' << *name;
        } else if (l.kind == 'H') {
            HubcapResult h;
            try {
                h = tau_H(top, l.hubcap, ctx);
            } catch (const PartError& e) {
                return fail(l, e.what());
            }
            tr << " zeta";
            for (size_t i = 0; i < h.zeta.size(); ++i) {
                tr << ' ' << l.hubcap[i].u << ',' << l.hubcap[i].v << ':';
                if (h.zeta[i] == -kInfinity) tr << "none";
                else tr << h.zeta[i];
                tr << "<=" << l.hubcap[i].q;
            }
            tr << " total " << h.total;
            if (!h.ok) return fail(l, "hubcap does not dispatch the part:" + tr.str().substr(tr.str().find(" zeta")));
        } else if (l.kind == 'S') {
            try {
                if (!tau_S(top, l.ref, l.rotation, l.mirror, history)) return fail(l, "part is not the symmetric image of part " + std::to_string(l.ref));
            } catch (const PartError& e) {
                return fail(l, e.what());
            }
            tr << ' ' << l.ref << ' ' << l.rotation << (l.mirror ? " M" : "");
        } else {
            return fail(l, std::string("unknown line kind ") + l.kind);
        }
        history.push_back(top);
        stack.pop_back();
        ++rep.dispatched;
        if (verbose) rep.trace.push_back(tr.str());
    }
    if (!stack.empty()) {
        rep.reason = std::to_string(stack.size()) + " parts left on the stack";
        return rep;
    }
    rep.ok = true;
    return rep;
}

}  // namespace fct
