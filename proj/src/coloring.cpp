#include "fct/coloring.h"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

namespace fct {

namespace {

constexpr char kNames[] = "rgby";

std::size_t pow3(int e) {
    std::size_t p = 1;
    for (int i = 0; i < e; ++i) p *= 3;
    return p;
}

// every set partition of k items, as restricted growth strings
void set_partitions(int k, std::vector<int>& cur, int next, std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int b = 0; b <= next; ++b) {
        cur.push_back(b);
        set_partitions(k, cur, std::max(next, b + 1), out);
        cur.pop_back();
    }
}

// blocks i and j cross iff their cyclic pattern alternates more than twice
bool crossing_free(const std::vector<int>& label) {
    const int m = static_cast<int>(label.size());
    int blocks = m ? *std::max_element(label.begin(), label.end()) + 1 : 0;
    for (int i = 0; i < blocks; ++i)
        for (int j = i + 1; j < blocks; ++j) {
            std::vector<int> seq;
            for (int x : label)
                if (x == i || x == j) seq.push_back(x);
            int changes = 0;
            for (size_t t = 0; t < seq.size(); ++t) changes += seq[t] != seq[(t + 1) % seq.size()];
            if (changes > 2) return false;
        }
    return true;
}

std::vector<std::vector<int>> compute_noncrossing(int k) {
    std::vector<std::vector<int>> all, out;
    std::vector<int> cur;
    set_partitions(k, cur, 0, all);
    for (auto& p : all)
        if (crossing_free(p)) out.push_back(p);
    return out;
}

const std::vector<std::vector<int>>& noncrossing_partitions(int k) {
    static const auto table = [] {
        std::vector<std::vector<std::vector<int>>> t;
        for (int i = 0; i <= 8; ++i) t.push_back(compute_noncrossing(i));
        return t;
    }();
    if (k <= 8) return table[k];
    thread_local std::vector<std::vector<int>> big;
    big = compute_noncrossing(k);
    return big;
}

// coarsest grouping of the gaps between k points compatible with alpha;
// gap t lies between point t and point t+1
std::vector<int> kreweras(const std::vector<int>& alpha) {
    const int k = static_cast<int>(alpha.size());
    std::vector<int> parent(k);
    for (int i = 0; i < k; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int p = 0; p < k; ++p)
        for (int q = p + 1; q < k; ++q) {
            // the chord from gap p to gap q has points p+1..q on one side
            bool separated = false;
            for (int a = 0; a < k && !separated; ++a) {
                bool in = a > p && a <= q;
                for (int b = 0; b < k && !separated; ++b)
                    if (alpha[a] == alpha[b] && in != (b > p && b <= q)) separated = true;
            }
            if (!separated) parent[find(q)] = find(p);
        }
    std::vector<int> label(k, -1), ids(k, -1);
    int next = 0;
    for (int i = 0; i < k; ++i) {
        int r = find(i);
        if (ids[r] < 0) ids[r] = next++;
        label[i] = ids[r];
    }
    return label;
}

std::vector<int> components_pairs(const Coloring& c, int theta) {
    std::vector<int> p(c.size());
    for (size_t i = 0; i < c.size(); ++i) p[i] = pair_of(theta, c[i]);
    return p;
}

// partner of x in its pair under theta
int partner(int theta, int x) {
    auto cp = color_partition(theta);
    if (cp.first[0] == x) return cp.first[1];
    if (cp.first[1] == x) return cp.first[0];
    if (cp.second[0] == x) return cp.second[1];
    return cp.second[0];
}

bool check_elapsed(const Budget& b, std::chrono::steady_clock::time_point t0) {
    if (b.max_millis <= 0) return false;
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return ms > b.max_millis;
}

}  // namespace

bool is_proper(const Coloring& c) {
    const int r = static_cast<int>(c.size());
    for (int i = 0; i < r; ++i) {
        if (c[i] < 0 || c[i] > 3) return false;
        if (r > 1 && c[i] == c[(i + 1) % r]) return false;
    }
    return true;
}

std::string to_string(const Coloring& c) {
    std::string s;
    for (int x : c) s += kNames[x];
    return s;
}

Coloring coloring_from_string(const std::string& s) {
    Coloring c;
    for (char ch : s) {
        const char* p = std::find(kNames, kNames + 4, ch);
        if (p == kNames + 4) throw std::invalid_argument(std::string("bad colour '") + ch + "'");
        c.push_back(static_cast<int>(p - kNames));
    }
    return c;
}

Coloring canonical_class(const Coloring& c) {
    int map[4] = {-1, -1, -1, -1};
    int next = 0;
    Coloring out(c.size());
    for (size_t i = 0; i < c.size(); ++i) {
        if (map[c[i]] < 0) map[c[i]] = next++;
        out[i] = map[c[i]];
    }
    return out;
}

int orbit_size(const Coloring& c) {
    int used = 0;
    for (int x : c) used |= 1 << x;
    int k = std::popcount(static_cast<unsigned>(used));
    int n = 1;
    for (int i = 0; i < k; ++i) n *= 4 - i;
    return n;
}

ColoringSet::ColoringSet(int ring) : ring_(ring), codes_(ring > 0 ? pow3(ring - 1) : 0), bits_((codes_ + 63) / 64, 0) {}

std::size_t ColoringSet::code(const Coloring& c) const {
    std::size_t k = 0, place = 1;
    for (int i = 1; i < ring_; ++i) {
        int d = ((c[i] - c[i - 1]) % 4 + 4) % 4 - 1;
        k += static_cast<std::size_t>(d) * place;
        place *= 3;
    }
    return k;
}

Coloring ColoringSet::decode(std::size_t k) const {
    Coloring c(ring_, 0);
    for (int i = 1; i < ring_; ++i) {
        c[i] = (c[i - 1] + static_cast<int>(k % 3) + 1) % 4;
        k /= 3;
    }
    return c;
}

bool ColoringSet::contains(const Coloring& c) const {
    if (static_cast<int>(c.size()) != ring_ || !is_proper(c)) return false;
    return test_code(code(canonical_class(c)));
}

void ColoringSet::insert(const Coloring& c) {
    if (static_cast<int>(c.size()) != ring_ || !is_proper(c)) throw std::invalid_argument("not a proper ring colouring");
    auto k = code(canonical_class(c));
    bits_[k >> 6] |= std::uint64_t{1} << (k & 63);
}

void ColoringSet::erase(const Coloring& c) {
    if (static_cast<int>(c.size()) != ring_ || !is_proper(c)) return;
    auto k = code(canonical_class(c));
    bits_[k >> 6] &= ~(std::uint64_t{1} << (k & 63));
}

std::size_t ColoringSet::classes() const {
    std::size_t n = 0;
    for (auto w : bits_) n += std::popcount(w);
    return n;
}

std::size_t ColoringSet::size() const {
    std::size_t n = 0;
    for (const auto& c : representatives()) n += orbit_size(c);
    return n;
}

std::vector<Coloring> ColoringSet::representatives() const {
    std::vector<Coloring> out;
    for (std::size_t w = 0; w < bits_.size(); ++w) {
        auto x = bits_[w];
        while (x) {
            int b = std::countr_zero(x);
            out.push_back(decode(w * 64 + b));
            x &= x - 1;
        }
    }
    return out;
}

std::vector<Coloring> ColoringSet::expanded() const {
    std::vector<Coloring> out;
    int perm[4] = {0, 1, 2, 3};
    for (const auto& c : representatives()) {
        std::set<Coloring> seen;
        std::sort(perm, perm + 4);
        do {
            Coloring d(c.size());
            for (size_t i = 0; i < c.size(); ++i) d[i] = perm[c[i]];
            if (seen.insert(d).second) out.push_back(d);
        } while (std::next_permutation(perm, perm + 4));
    }
    return out;
}

void ColoringSet::check(const ColoringSet& o) const {
    if (ring_ != o.ring_) throw std::invalid_argument("ring lengths differ");
}

ColoringSet ColoringSet::operator|(const ColoringSet& o) const {
    check(o);
    ColoringSet r = *this;
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] |= o.bits_[i];
    return r;
}

ColoringSet ColoringSet::operator&(const ColoringSet& o) const {
    check(o);
    ColoringSet r = *this;
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= o.bits_[i];
    return r;
}

ColoringSet ColoringSet::operator-(const ColoringSet& o) const {
    check(o);
    ColoringSet r = *this;
    for (size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= ~o.bits_[i];
    return r;
}

bool ColoringSet::subset_of(const ColoringSet& o) const {
    check(o);
    for (size_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] & ~o.bits_[i]) return false;
    return true;
}

ColoringSet ColoringSet::all(int ring) {
    if (ring < 2) throw std::invalid_argument("ring length must be at least 2");
    ColoringSet s(ring);
    Coloring c(ring, 0);
    std::function<void(int, int)> rec = [&](int i, int used) {
        if (i == ring) {
            if (c[ring - 1] != c[0]) s.insert(c);
            return;
        }
        for (int x = 0; x <= std::min(used, 3); ++x) {
            if (x == c[i - 1]) continue;
            c[i] = x;
            rec(i + 1, std::max(used, x + 1));
        }
    };
    rec(1, 1);
    return s;
}

ColoringSet enumerate_colorings(int ring) { return ColoringSet::all(ring); }

ColorPartition color_partition(int theta) {
    int t = theta + 1;
    std::array<int, 2> rest{};
    int k = 0;
    for (int x = 1; x < 4; ++x)
        if (x != t) rest[k++] = x;
    return {{0, t}, rest};
}

int pair_of(int theta, int x) { return (x == 0 || x == theta + 1) ? 0 : 1; }

std::vector<Run> theta_components(const Coloring& c, int theta) {
    const int r = static_cast<int>(c.size());
    auto p = components_pairs(c, theta);
    std::vector<Run> runs;
    std::vector<int> starts;
    for (int i = 0; i < r; ++i)
        if (p[i] != p[(i + r - 1) % r]) starts.push_back(i);
    if (starts.empty()) return {{0, r, c[0], p[0]}};
    for (size_t j = 0; j < starts.size(); ++j) {
        int s = starts[j];
        int e = j + 1 < starts.size() ? starts[j + 1] : starts[0] + r;
        runs.push_back({s, e - s, c[s], p[s]});
    }
    return runs;
}

bool SignedPathArrangement::operator<(const SignedPathArrangement& o) const {
    return std::tie(ring, components, group, sign) < std::tie(o.ring, o.components, o.group, o.sign);
}

SignedPathArrangement normalized(SignedPathArrangement p) {
    std::vector<int> id, first_sign;
    std::vector<int> map;
    for (size_t i = 0; i < p.group.size(); ++i) {
        int g = p.group[i];
        if (g >= static_cast<int>(map.size())) map.resize(g + 1, -1);
        if (map[g] < 0) {
            map[g] = static_cast<int>(first_sign.size());
            first_sign.push_back(p.sign[i]);
        }
        p.group[i] = map[g];
        p.sign[i] ^= first_sign[map[g]];
    }
    return p;
}

bool noncrossing(const SignedPathArrangement& p) { return crossing_free(normalized(p).group); }

bool theta_fits(const Coloring& c, int theta, const SignedPathArrangement& p) {
    if (static_cast<int>(c.size()) != p.ring) return false;
    auto runs = theta_components(c, theta);
    if (runs.size() != p.components.size()) return false;
    for (size_t j = 0; j < runs.size(); ++j)
        if (runs[j].start != p.components[j].first || runs[j].length != p.components[j].second) return false;
    if (runs.size() == 1) return true;
    for (size_t a = 0; a < runs.size(); ++a)
        for (size_t b = a + 1; b < runs.size(); ++b) {
            if (p.group[a] != p.group[b]) continue;
            // a group is interchanged as one Kempe component, so it stays inside one pair
            if (runs[a].pair != runs[b].pair) return false;
            if ((p.sign[a] == p.sign[b]) != (runs[a].first_color == runs[b].first_color)) return false;
        }
    return true;
}

std::vector<SignedPathArrangement> fitting_arrangements(const Coloring& c, int theta) {
    auto runs = theta_components(c, theta);
    const int m = static_cast<int>(runs.size());
    SignedPathArrangement base;
    base.ring = static_cast<int>(c.size());
    for (const auto& run : runs) base.components.push_back({run.start, run.length});
    if (m == 1) {
        base.group = {0};
        base.sign = {0};
        return {base};
    }
    std::vector<int> ai, bi;
    for (int j = 0; j < m; ++j) (runs[j].pair == runs[0].pair ? ai : bi).push_back(j);
    auto pa = noncrossing_partitions(static_cast<int>(ai.size()));
    auto pb = noncrossing_partitions(static_cast<int>(bi.size()));
    std::set<SignedPathArrangement> seen;
    std::vector<SignedPathArrangement> out;
    for (const auto& alpha : pa) {
        int na = *std::max_element(alpha.begin(), alpha.end()) + 1;
        for (const auto& beta : pb) {
            SignedPathArrangement p = base;
            p.group.assign(m, 0);
            p.sign.assign(m, 0);
            for (size_t t = 0; t < ai.size(); ++t) p.group[ai[t]] = alpha[t];
            for (size_t t = 0; t < bi.size(); ++t) p.group[bi[t]] = na + beta[t];
            if (!crossing_free(normalized(p).group)) continue;
            std::vector<int> lead(m, -1);
            for (int j = 0; j < m; ++j) {
                int g = p.group[j];
                if (lead[g] < 0) lead[g] = runs[j].first_color;
                p.sign[j] = runs[j].first_color == lead[g] ? 0 : 1;
            }
            auto n = normalized(p);
            if (seen.insert(n).second) out.push_back(n);
        }
    }
    return out;
}

ColoringSet colorings_fitting(const SignedPathArrangement& p) {
    ColoringSet out(p.ring);
    const int m = static_cast<int>(p.components.size());
    if (m == 0) return out;
    if (m == 1) {
        if (p.components[0].second != p.ring || p.ring % 2) return out;
        Coloring c(p.ring);
        for (int i = 0; i < p.ring; ++i) c[i] = i % 2;
        out.insert(c);
        return out;
    }
    auto n = normalized(p);
    int groups = *std::max_element(n.group.begin(), n.group.end()) + 1;
    // adjacent runs lie in different pairs
    std::vector<int> cls(groups, -1);
    cls[n.group[0]] = 0;
    for (int pass = 0; pass < m + 1; ++pass)
        for (int j = 0; j < m; ++j) {
            int a = n.group[j], b = n.group[(j + 1) % m];
            if (cls[a] >= 0 && cls[b] < 0) cls[b] = 1 - cls[a];
            if (cls[b] >= 0 && cls[a] < 0) cls[a] = 1 - cls[b];
        }
    for (int j = 0; j < m; ++j) {
        int a = n.group[j], b = n.group[(j + 1) % m];
        if (cls[a] < 0 || cls[a] == cls[b]) return out;
    }
    const int pairs[2][2] = {{0, 1}, {2, 3}};
    for (long mask = 0; mask < (1L << (groups - 1)); ++mask) {
        Coloring c(p.ring, -1);
        for (int j = 0; j < m; ++j) {
            int g = n.group[j];
            int flip = g == 0 ? 0 : (mask >> (g - 1)) & 1;
            int x = pairs[cls[g]][n.sign[j] ^ flip], y = pairs[cls[g]][1 - (n.sign[j] ^ flip)];
            for (int t = 0; t < n.components[j].second; ++t) c[(n.components[j].first + t) % p.ring] = t % 2 ? y : x;
        }
        if (is_proper(c)) out.insert(c);
    }
    return out;
}

bool is_consistent(const ColoringSet& s) {
    for (const auto& c : s.representatives())
        for (int theta = 0; theta < 3; ++theta) {
            bool found = false;
            for (const auto& p : fitting_arrangements(c, theta))
                if (colorings_fitting(p).subset_of(s)) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
    return true;
}

bool survives(const ColoringSet& s, const Coloring& c) {
    if (!s.contains(c)) return false;
    const int r = static_cast<int>(c.size());
    for (int theta = 0; theta < 3; ++theta) {
        auto runs = theta_components(c, theta);
        const int m = static_cast<int>(runs.size());
        if (m == 1) continue;
        const int k = m / 2;
        bool ok = false;
        for (const auto& alpha : noncrossing_partitions(k)) {
            auto beta = kreweras(alpha);
            int na = *std::max_element(alpha.begin(), alpha.end()) + 1;
            int nb = *std::max_element(beta.begin(), beta.end()) + 1;
            // run 2t belongs to alpha[t], run 2t+1 to beta[t]
            std::vector<int> group(m);
            for (int t = 0; t < k; ++t) {
                group[2 * t] = alpha[t];
                group[2 * t + 1] = na + beta[t];
            }
            const int groups = na + nb;
            bool all_in = true;
            Coloring d(r);
            for (long mask = 1; mask < (1L << (groups - 1)) && all_in; ++mask) {
                d = c;
                for (int j = 0; j < m; ++j) {
                    int g = group[j];
                    if (g == 0 || !((mask >> (g - 1)) & 1)) continue;
                    for (int t = 0; t < runs[j].length; ++t) {
                        int& x = d[(runs[j].start + t) % r];
                        x = partner(theta, x);
                    }
                }
                all_in = s.contains(d);
            }
            if (all_in) {
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return true;
}

FixedPoint max_consistent_subset(const ColoringSet& s, const Budget& budget) {
    FixedPoint fp{s, 0};
    auto t0 = std::chrono::steady_clock::now();
    while (!fp.result.empty()) {
        if (budget.max_rounds > 0 && fp.rounds >= budget.max_rounds)
            throw BudgetExceeded("fixed point exceeded " + std::to_string(budget.max_rounds) + " rounds");
        ColoringSet next = fp.result;
        std::size_t visited = 0;
        for (const auto& c : fp.result.representatives()) {
            if (!survives(fp.result, c)) next.erase(c);
            if ((++visited & 1023) == 0 && check_elapsed(budget, t0))
                throw BudgetExceeded("fixed point exceeded " + std::to_string(budget.max_millis) + " ms");
        }
        ++fp.rounds;
        if (next == fp.result) break;
        fp.result = std::move(next);
    }
    return fp;
}

ColoringSet lifted_colorings(const Graph& g, const std::vector<int>& phi) {
    const int r = static_cast<int>(phi.size());
    const int n = g.size();
    ColoringSet out(r);
    std::vector<char> fixed(n, 0);
    for (int v : phi) fixed[v] = 1;
    // free vertices in breadth-first order from the ring
    std::vector<int> order, dist(n, -1);
    for (int v = 0; v < n; ++v)
        if (fixed[v]) dist[v] = 0;
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (fixed[v]) queue.push_back(v);
    for (size_t h = 0; h < queue.size(); ++h)
        for (int w : g.rot(queue[h]))
            if (dist[w] < 0) {
                dist[w] = dist[queue[h]] + 1;
                queue.push_back(w);
                order.push_back(w);
            }
    for (int v = 0; v < n; ++v)
        if (dist[v] < 0) order.push_back(v);

    std::vector<int> col(n, -1);
    std::function<bool(size_t)> extend = [&](size_t i) {
        if (i == order.size()) return true;
        int v = order[i];
        for (int x = 0; x < 4; ++x) {
            bool ok = true;
            for (int w : g.rot(v))
                if (col[w] == x) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            col[v] = x;
            if (extend(i + 1)) {
                col[v] = -1;
                return true;
            }
        }
        col[v] = -1;
        return false;
    };
    for (const auto& c : ColoringSet::all(r).representatives()) {
        std::fill(col.begin(), col.end(), -1);
        bool ok = true;
        for (int i = 0; i < r && ok; ++i) {
            if (col[phi[i]] >= 0 && col[phi[i]] != c[i]) ok = false;
            col[phi[i]] = c[i];
        }
        for (int v = 0; v < n && ok; ++v)
            if (fixed[v])
                for (int w : g.rot(v))
                    if (col[w] == col[v]) ok = false;
        if (ok && extend(0)) out.insert(c);
    }
    return out;
}

ColoringSet extendable_colorings(const FreeCompletion& s) {
    std::vector<int> phi(s.ring);
    for (int i = 0; i < s.ring; ++i) phi[i] = i;
    return lifted_colorings(s.graph, phi);
}

Verdict is_d_reducible(const Configuration& k, const ReduceOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    auto fc = free_completion(k);
    if (fc.ring > opt.max_ring)
        throw GraphError("ring " + std::to_string(fc.ring) + " exceeds cap " + std::to_string(opt.max_ring));
    Verdict v;
    v.name = k.name;
    v.ring = fc.ring;
    v.internal = fc.internal();
    auto rest = ColoringSet::all(fc.ring) - extendable_colorings(fc);
    auto fp = max_consistent_subset(rest, opt.budget);
    v.reducible = fp.result.empty();
    v.remainder = fp.result.size();
    v.rounds = fp.rounds;
    v.millis = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    return v;
}

Coloring kempe_class_a(int i) {
    Coloring base{0, 1, 0, 1, 2};
    std::rotate(base.rbegin(), base.rbegin() + ((i - 1) % 5 + 5) % 5, base.rend());
    return base;
}

Coloring kempe_class_b(int i) {
    Coloring base{0, 1, 0, 3, 2};
    std::rotate(base.rbegin(), base.rbegin() + ((i - 1) % 5 + 5) % 5, base.rend());
    return base;
}

}  // namespace fct
