#include "fct/match.h"

#include <set>

namespace fct {

namespace {

struct Search {
    const MatchSpec& spec;
    const std::function<bool(const std::vector<int>&, bool)>& visit;
    int orient = 1;
    std::vector<int> order, parent;
    std::vector<int> img, used;
    std::set<std::vector<int>>* seen = nullptr;
    bool record = false;
    bool stop = false;

    Search(const MatchSpec& s, const std::function<bool(const std::vector<int>&, bool)>& v) : spec(s), visit(v) {}

    const Graph& P() const { return *spec.pattern; }
    const Graph& H() const { return *spec.host; }

    // Assigned neighbours of v, in pattern rotation order, must appear in
    // the same (or reversed) cyclic order around the image.
    bool rotation_ok(int v) const {
        std::vector<int> pos;
        for (int w : P().rot(v))
            if (img[w] >= 0) pos.push_back(H().index_of(img[v], img[w]));
        const int k = static_cast<int>(pos.size());
        if (k < 3) return true;
        int breaks = 0;
        for (int i = 0; i < k; ++i) {
            int a = pos[i], b = pos[(i + 1) % k];
            if (orient > 0 ? b < a : b > a) ++breaks;
        }
        return breaks <= 1;
    }

    bool faces_ok() const {
        for (const auto& f : spec.faces) {
            const int k = static_cast<int>(f.size());
            std::vector<int> want(k);
            for (int i = 0; i < k; ++i) want[i] = img[f[i]];
            std::vector<int> got;
            if (orient > 0) {
                got = H().face_of(want[0], want[1 % k]);
            } else {
                // face right of the dart, read backwards from want[0]
                auto walk = H().face_of(want[1 % k], want[0]);
                if (static_cast<int>(walk.size()) != k) return false;
                got.resize(k);
                for (int i = 0; i < k; ++i) got[i] = walk[(k + 1 - i) % k];
            }
            if (got != want) return false;
        }
        return true;
    }

    bool fits(int v, int x) {
        if (used[x]) return false;
        if (spec.allowed && !spec.allowed(v, x)) return false;
        for (int w = 0; w < P().size(); ++w) {
            if (img[w] < 0) continue;
            bool pe = P().adjacent(v, w), he = H().adjacent(x, img[w]);
            if (pe && !he) return false;
            if (spec.induced && he && !pe) return false;
        }
        return true;
    }

    void step(int i) {
        if (stop) return;
        if (i == static_cast<int>(order.size())) {
            if (!faces_ok()) return;
            if (record) seen->insert(img);
            else if (seen->count(img)) return;
            if (!visit(img, orient < 0)) stop = true;
            return;
        }
        int v = order[i];
        std::vector<int> cands;
        int fixed = -1;
        for (auto [a, b] : spec.anchors)
            if (a == v) fixed = b;
        if (fixed >= 0) {
            cands = {fixed};
        } else if (parent[v] >= 0) {
            cands = H().rot(img[parent[v]]);
        } else {
            for (int x = 0; x < H().size(); ++x) cands.push_back(x);
        }
        for (int x : cands) {
            if (!fits(v, x)) continue;
            img[v] = x;
            used[x] = 1;
            bool ok = rotation_ok(v);
            for (int w : P().rot(v))
                if (ok && img[w] >= 0) ok = rotation_ok(w);
            if (ok) step(i + 1);
            img[v] = -1;
            used[x] = 0;
            if (stop) return;
        }
    }
};

}  // namespace

void for_each_embedding(const MatchSpec& spec,
                        const std::function<bool(const std::vector<int>&, bool)>& visit) {
    const Graph& P = *spec.pattern;
    const int n = P.size();
    if (n == 0 || n > spec.host->size()) return;
    Search s(spec, visit);
    s.parent.assign(n, -1);
    std::vector<char> seen_v(n, 0);
    int root = spec.anchors.empty() ? 0 : spec.anchors.front().first;
    // BFS order so every later vertex has an assigned neighbour
    s.order.push_back(root);
    seen_v[root] = 1;
    for (size_t i = 0; i < s.order.size(); ++i) {
        for (int w : P.rot(s.order[i])) {
            if (seen_v[w]) continue;
            seen_v[w] = 1;
            s.parent[w] = s.order[i];
            s.order.push_back(w);
        }
    }
    if (static_cast<int>(s.order.size()) != n) throw GraphError("pattern must be connected");

    std::set<std::vector<int>> found;
    for (int o : {1, -1}) {
        if (spec.orientation != 0 && o != spec.orientation) continue;
        s.orient = o;
        s.img.assign(n, -1);
        s.used.assign(spec.host->size(), 0);
        s.record = o == 1 && spec.orientation == 0;
        s.seen = &found;
        s.step(0);
        if (s.stop) return;
    }
}

int count_embeddings(const MatchSpec& spec) {
    int n = 0;
    for_each_embedding(spec, [&](const std::vector<int>&, bool) {
        ++n;
        return true;
    });
    return n;
}

std::vector<std::vector<int>> bounded_faces(const Graph& g, std::pair<int, int> outer_dart) {
    std::vector<std::vector<int>> out;
    if (g.edge_count() == 0) return out;
    for (auto& f : g.faces()) {
        bool outer = false;
        for (size_t i = 0; i < f.size(); ++i)
            if (f[i] == outer_dart.first && f[(i + 1) % f.size()] == outer_dart.second) outer = true;
        if (!outer) out.push_back(f);
    }
    return out;
}

}  // namespace fct
