#include "fct/overcharge.h"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <tuple>

namespace fct {

namespace {

using ImageKey = std::pair<const Rule*, std::vector<int>>;

ImageKey key_of(const Placement& p) {
    auto s = p.image;
    std::sort(s.begin(), s.end());
    return {p.rule, s};
}

}  // namespace

EdgeBound max_edge_transfer(int du, const RuleSet& rules, const std::vector<Configuration>& screen) {
    std::vector<Placement> cands;
    for (const auto& r : rules)
        for (auto& pl : rule_as_parts(r, du))
            if (pl.source_at_hub) cands.push_back(std::move(pl));
    EdgeBound best;
    best.degree = du;
    best.witness = trivial_part(du);
    best.bound = 0;
    std::vector<int> chosen;
    std::set<ImageKey> keys;
    std::function<void(size_t, const Part&, int)> go = [&](size_t i, const Part& cur, int sum) {
        if (tau_R(cur, screen)) return;
        if (sum > best.bound) {
            best.bound = sum;
            best.witness = cur;
            best.placements.clear();
            for (int c : chosen) best.placements.push_back(cands[c]);
        }
        for (size_t j = i; j < cands.size(); ++j) {
            auto k = key_of(cands[j]);
            if (keys.count(k)) continue;
            auto nxt = and_parts(cur, cands[j].part);
            if (!nxt) continue;
            keys.insert(k);
            chosen.push_back(static_cast<int>(j));
            go(j + 1, *nxt, sum + cands[j].q());
            chosen.pop_back();
            keys.erase(k);
        }
    };
    go(0, trivial_part(du), 0);
    return best;
}

int reevaluate(const EdgeBound& e, const std::vector<Configuration>& screen) {
    Part cur = trivial_part(e.degree);
    std::set<ImageKey> keys;
    int sum = 0;
    for (const auto& pl : e.placements) {
        if (!pl.source_at_hub || pl.spoke != 1) return -1;
        auto nxt = and_parts(cur, pl.part);
        if (!nxt) return -1;
        cur = *nxt;
        if (keys.insert(key_of(pl)).second) sum += pl.q();
    }
    if (!(cur == e.witness) || tau_R(cur, screen)) return -1;
    return sum;
}

int wildcard_cap(const RuleSet& rules, const std::vector<Configuration>& screen) {
    int top = 8;
    for (const auto& r : rules)
        for (const auto& b : r.bounds) {
            top = std::max(top, b.lo);
            if (b.hi < kInfinity) top = std::max(top, b.hi);
        }
    for (const auto& k : screen)
        for (int g : k.gamma) top = std::max(top, g);
    return top + 1;
}

OverchargeReport verify_overcharge_bound(const RuleSet& rules, const std::vector<Configuration>& screen,
                                         int threshold) {
    OverchargeReport rep;
    rep.threshold = threshold;
    rep.cap = wildcard_cap(rules, screen);
    for (const auto& r : rules)
        if (r.bounds[r.source].hi >= 9) rep.high_sources = true;
    int last = rep.high_sources ? rep.cap : 9;
    for (int d = 5; d <= last; ++d) {
        rep.rows.push_back(max_edge_transfer(d, rules, screen));
        if (rep.rows.back().bound > threshold) rep.ok = false;
        if (!rep.high_sources && d == 9 && rep.rows.back().bound != 0) rep.ok = false;
    }
    return rep;
}

std::vector<std::string> scene_dump(const Part& p, int cap) {
    auto pg = part_graph(p);
    std::vector<std::string> out;
    for (int v = 0; v < pg.graph.size(); ++v) {
        std::ostringstream s;
        s << pg.id[v] + 1 << " :";
        for (int w : pg.graph.rot(v)) s << ' ' << pg.id[w] + 1;
        s << " ;";
        out.push_back(s.str());
    }
    for (int v = 0; v < pg.graph.size(); ++v) {
        const Bounds& b = p.at(pg.id[v]);
        std::ostringstream s;
        s << "deg " << pg.id[v] + 1 << ' ';
        if (b.lo >= cap) s << cap << '+';
        else if (b.exact()) s << b.lo;
        else if (b.hi >= kInfinity) s << b.lo << '+';
        else s << b.lo << ".." << b.hi;
        out.push_back(s.str());
    }
    return out;
}

}  // namespace fct
