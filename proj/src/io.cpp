#include "fct/io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "fct/part.h"

namespace fct {

namespace {

struct Line {
    int number = 0;
    std::vector<std::string> tok;
};

// Strips comments and splits on whitespace, with `:`, `;`, `(` and `)` as
// tokens of their own.
std::vector<Line> lex(std::istream& in) {
    std::vector<Line> out;
    std::string s;
    int n = 0;
    while (std::getline(in, s)) {
        ++n;
        if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
        std::string spaced;
        for (char c : s) {
            if (c == ':' || c == ';' || c == '(' || c == ')') {
                spaced += ' ';
                spaced += c;
                spaced += ' ';
            } else {
                spaced += c;
            }
        }
        std::istringstream ss(spaced);
        Line l{n, {}};
        for (std::string t; ss >> t;) l.tok.push_back(t);
        if (!l.tok.empty()) out.push_back(std::move(l));
    }
    return out;
}

int to_int(const std::string& t, int line) {
    int v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size()) throw ParseError("expected an integer, got '" + t + "'", line);
    return v;
}

// `<id> : <n1> ... ;` starting at token i; returns id and neighbours as given.
std::pair<int, std::vector<int>> adjacency(const Line& l, size_t i) {
    if (l.tok.size() < i + 3 || l.tok[i + 1] != ":" || l.tok.back() != ";")
        throw ParseError("expected '<id> : <neighbours> ;'", l.number);
    int id = to_int(l.tok[i], l.number);
    std::vector<int> nb;
    for (size_t j = i + 2; j + 1 < l.tok.size(); ++j) nb.push_back(to_int(l.tok[j], l.number));
    return {id, nb};
}

std::string join_ids(const std::vector<int>& xs) {
    std::string s;
    for (int x : xs) s += ' ' + std::to_string(x + 1);
    return s;
}

std::string adjacency_line(const Graph& g, int v) { return std::to_string(v + 1) + " :" + join_ids(g.rot(v)) + " ;"; }

// Rotation table from 1-based adjacency lines covering ids 1..n exactly once.
std::vector<std::vector<int>> rotation_from(const std::map<int, std::pair<int, std::vector<int>>>& rows, int n,
                                            int first_line) {
    std::vector<std::vector<int>> rot(n);
    for (int id = 1; id <= n; ++id) {
        auto it = rows.find(id);
        if (it == rows.end()) throw ParseError("vertex " + std::to_string(id) + " has no adjacency line", first_line);
        for (int w : it->second.second) {
            if (w < 1 || w > n || w == id)
                throw ParseError("neighbour " + std::to_string(w) + " out of range", it->second.first);
            rot[id - 1].push_back(w - 1);
        }
    }
    return rot;
}

void check_symmetric(const std::vector<std::vector<int>>& rot, int line) {
    for (int v = 0; v < static_cast<int>(rot.size()); ++v) {
        std::set<int> seen;
        for (int w : rot[v]) {
            if (!seen.insert(w).second)
                throw ParseError("vertex " + std::to_string(v + 1) + " lists " + std::to_string(w + 1) + " twice", line);
            if (std::find(rot[w].begin(), rot[w].end(), v) == rot[w].end())
                throw ParseError("edge " + std::to_string(v + 1) + "-" + std::to_string(w + 1) + " is one-sided", line);
        }
    }
}

bool same_cycle(std::vector<int> a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    if (a.empty()) return true;
    auto it = std::find(a.begin(), a.end(), b[0]);
    if (it == a.end()) return false;
    std::rotate(a.begin(), it, a.end());
    return a == b;
}

std::vector<int> canonical_cycle(std::vector<int> f) {
    std::rotate(f.begin(), std::min_element(f.begin(), f.end()), f.end());
    return f;
}

// Completion graph from the internal rows: every corner of an internal vertex
// is a triangle, and the ring closes the remaining darts.
Graph completion_from(const std::vector<std::vector<int>>& internal_rot, int ring) {
    const int n = ring + static_cast<int>(internal_rot.size());
    std::set<std::vector<int>> tris;
    for (int i = 0; i < static_cast<int>(internal_rot.size()); ++i) {
        const auto& r = internal_rot[i];
        const int d = static_cast<int>(r.size());
        for (int j = 0; j < d; ++j) tris.insert(canonical_cycle({r[j], ring + i, r[(j + 1) % d]}));
    }
    std::vector<std::vector<int>> faces(tris.begin(), tris.end());
    std::set<std::pair<int, int>> used;
    for (const auto& f : faces)
        for (int j = 0; j < 3; ++j) used.insert({f[j], f[(j + 1) % 3]});
    std::vector<int> outer;
    for (int i = 0; i < ring; ++i) outer.push_back(i);
    if (ring >= 2 && used.count({0, 1})) std::reverse(outer.begin(), outer.end());
    faces.push_back(outer);
    return Graph::from_faces(n, faces);
}

}  // namespace

Graph parse_graph(std::istream& in) {
    std::map<int, std::pair<int, std::vector<int>>> rows;
    int first = 0;
    for (const auto& l : lex(in)) {
        auto [id, nb] = adjacency(l, 0);
        if (id < 1) throw ParseError("vertex ids are positive", l.number);
        if (!rows.emplace(id, std::pair{l.number, nb}).second)
            throw ParseError("vertex " + std::to_string(id) + " listed twice", l.number);
        if (!first) first = l.number;
    }
    const int n = rows.empty() ? 0 : rows.rbegin()->first;
    auto rot = rotation_from(rows, n, first);
    check_symmetric(rot, first);
    return Graph(rot);
}

std::string emit_graph(const Graph& g) {
    std::string s;
    for (int v = 0; v < g.size(); ++v) s += adjacency_line(g, v) + "\n";
    return s;
}

std::vector<Configuration> parse_configs(std::istream& in) {
    auto lines = lex(in);
    std::vector<Configuration> out;
    std::set<std::string> names;
    size_t i = 0;
    auto expect = [&](const std::string& key) -> const Line& {
        if (i >= lines.size()) throw ParseError("unexpected end of file, expected '" + key + "'");
        const Line& l = lines[i++];
        if (l.tok[0] != key || l.tok.size() != 2) throw ParseError("expected '" + key + " <value>'", l.number);
        return l;
    };
    while (i < lines.size()) {
        const Line& head = expect("config");
        std::string name = head.tok[1];
        if (!names.insert(name).second) throw ParseError("duplicate configuration '" + name + "'", head.number, name);
        const Line& rl = expect("ring");
        int ring = to_int(rl.tok[1], rl.number);
        const Line& nl = expect("internal");
        int internal = to_int(nl.tok[1], nl.number);
        if (ring < 2 || internal < 1) throw ParseError("ring and internal sizes must be positive", nl.number, name);
        std::map<int, std::pair<int, std::vector<int>>> rows;
        while (i < lines.size() && lines[i].tok[0] != "end") {
            const Line& l = lines[i++];
            auto [id, nb] = adjacency(l, 0);
            if (id <= ring || id > ring + internal)
                throw ParseError("internal vertex ids are " + std::to_string(ring + 1) + ".." +
                                     std::to_string(ring + internal),
                                 l.number, name);
            if (!rows.emplace(id - ring, std::pair{l.number, nb}).second)
                throw ParseError("vertex " + std::to_string(id) + " listed twice", l.number, name);
        }
        if (i >= lines.size()) throw ParseError("record '" + name + "' has no 'end'", head.number, name);
        ++i;
        std::vector<std::vector<int>> irot(internal);
        for (int v = 1; v <= internal; ++v) {
            auto it = rows.find(v);
            if (it == rows.end())
                throw ParseError("vertex " + std::to_string(ring + v) + " has no line", head.number, name);
            for (int w : it->second.second) {
                if (w < 1 || w > ring + internal || w == ring + v)
                    throw ParseError("neighbour " + std::to_string(w) + " out of range", it->second.first, name);
                irot[v - 1].push_back(w - 1);
            }
        }
        Configuration k;
        try {
            Graph s = completion_from(irot, ring);
            for (int v = 0; v < internal; ++v)
                if (!same_cycle(s.rot(ring + v), irot[v]))
                    throw GraphError("neighbours of " + std::to_string(ring + v + 1) + " do not close into triangles");
            auto fr = validate_embedding(s);
            if (!fr.ok) throw GraphError(fr.issues.front());
            k = configuration_from_completion(name, s, ring);
            auto rep = validate_configuration(k);
            if (!rep.ok) throw GraphError(rep.issues.front());
            if (ring_size(k) != ring) throw GraphError("ring size does not match the completion");
        } catch (const GraphError& e) {
            throw ParseError("configuration '" + name + "': " + e.what(), head.number, name);
        }
        out.push_back(std::move(k));
    }
    return out;
}

std::string emit_config(const Configuration& k) {
    auto fc = free_completion(k);
    std::string s = "config " + k.name + "\nring " + std::to_string(fc.ring) + "\ninternal " +
                    std::to_string(fc.internal()) + "\n";
    // each row starts at its smallest internal neighbour, if it has one
    for (int v = fc.ring; v < fc.graph.size(); ++v) {
        auto r = fc.graph.rot(v);
        auto key = [&](int x) { return x >= fc.ring ? x - fc.graph.size() : x; };
        std::rotate(r.begin(), std::min_element(r.begin(), r.end(), [&](int a, int b) { return key(a) < key(b); }),
                    r.end());
        s += std::to_string(v + 1) + " :" + join_ids(r) + " ;\n";
    }
    return s + "end\n";
}

std::string emit_configs(const std::vector<Configuration>& ks) {
    std::string s;
    for (const auto& k : ks) s += emit_config(k);
    return s;
}

RuleSet parse_rules(std::istream& in, std::vector<std::string>* warnings) {
    auto lines = lex(in);
    RuleSet out;
    std::set<std::string> names;
    size_t i = 0;
    while (i < lines.size()) {
        const Line& head = lines[i++];
        if (head.tok[0] != "rule" || head.tok.size() != 2) throw ParseError("expected 'rule <id>'", head.number);
        std::string id = head.tok[1];
        if (!names.insert(id).second) throw ParseError("duplicate rule '" + id + "'", head.number, id);
        int q = 0, source = -1, sink = -1;
        bool has_q = false;
        std::map<int, std::pair<int, Bounds>> verts;
        std::map<int, std::pair<int, std::vector<int>>> rows;
        for (;;) {
            if (i >= lines.size()) throw ParseError("rule '" + id + "' has no 'end'", head.number, id);
            const Line& l = lines[i++];
            const auto& t = l.tok;
            if (t[0] == "end" && t.size() == 1) break;
            if (t[0] == "q" && t.size() == 2) {
                q = to_int(t[1], l.number);
                has_q = true;
            } else if (t[0] == "vertex" && t.size() == 4) {
                int v = to_int(t[1], l.number);
                Bounds b{to_int(t[2], l.number), t[3] == "*" ? kInfinity : to_int(t[3], l.number)};
                if (!verts.emplace(v, std::pair{l.number, b}).second)
                    throw ParseError("vertex " + std::to_string(v) + " declared twice", l.number, id);
            } else if (t[0] == "adj") {
                auto [v, nb] = adjacency(l, 1);
                if (!rows.emplace(v, std::pair{l.number, nb}).second)
                    throw ParseError("adjacency of " + std::to_string(v) + " given twice", l.number, id);
            } else if (t[0] == "source" && t.size() == 4 && t[2] == "sink") {
                source = to_int(t[1], l.number) - 1;
                sink = to_int(t[3], l.number) - 1;
            } else {
                throw ParseError("unknown line in rule '" + id + "'", l.number, id);
            }
        }
        if (!has_q) throw ParseError("rule '" + id + "' has no q", head.number, id);
        if (source < 0 || sink < 0) throw ParseError("rule '" + id + "' has no source and sink", head.number, id);
        const int n = static_cast<int>(verts.size());
        if (n == 0 || verts.rbegin()->first != n || verts.begin()->first != 1)
            throw ParseError("rule vertices must be numbered 1..n", head.number, id);
        if (source >= n || sink >= n) throw ParseError("source or sink out of range", head.number, id);
        std::vector<Bounds> bounds;
        for (auto& [v, p] : verts) bounds.push_back(p.second);
        for (auto& [v, p] : rows)
            if (v < 1 || v > n) throw ParseError("adjacency for unknown vertex", p.first, id);
        auto rot = rotation_from(rows, n, head.number);
        check_symmetric(rot, head.number);
        Rule r;
        try {
            r = make_rule(id, q, Graph(rot), bounds, source, sink);
            auto rep = validate_rule(r);
            if (!rep.ok) throw GraphError(rep.issues.front());
            for (int d = 5; d <= 11; ++d) rule_as_parts(r, d);
        } catch (const GraphError& e) {
            throw ParseError("rule '" + id + "': " + e.what(), head.number, id);
        } catch (const UnencodableRule& e) {
            throw ParseError("rule '" + id + "' cannot be laid onto a part: " + e.what(), head.number, id);
        }
        if (warnings && q != 1 && q != 2)
            warnings->push_back("rule '" + id + "' moves " + std::to_string(q) + "/10, outside {1/10, 2/10}");
        out.push_back(std::move(r));
    }
    return out;
}

std::string emit_rule(const Rule& r) {
    std::string s = "rule " + r.id + "\nq " + std::to_string(r.q) + "\n";
    for (int v = 0; v < r.graph.size(); ++v) {
        const Bounds& b = r.bounds[v];
        s += "vertex " + std::to_string(v + 1) + " " + std::to_string(b.lo) + " " +
             (b.hi >= kInfinity ? std::string("*") : std::to_string(b.hi)) + "\n";
    }
    for (int v = 0; v < r.graph.size(); ++v) s += "adj " + adjacency_line(r.graph, v) + "\n";
    return s + "source " + std::to_string(r.source + 1) + " sink " + std::to_string(r.sink + 1) + "\nend\n";
}

std::string emit_rules(const RuleSet& rs) {
    std::string s;
    for (const auto& r : rs) s += emit_rule(r);
    return s;
}

Presentation parse_presentation(std::istream& in, int degree) {
    if (degree < 5 || degree > 11) throw ParseError("hub degree " + std::to_string(degree) + " outside 5..11");
    Presentation p;
    p.degree = degree;
    int stack = 1;
    for (const auto& l : lex(in)) {
        const auto& t = l.tok;
        if (t[0].size() < 2 || t[0][0] != 'L') throw ParseError("line must start with L<depth>", l.number);
        ScriptLine s;
        s.line = l.number;
        s.depth = to_int(t[0].substr(1), l.number);
        if (stack == 0) throw ParseError("line after the last part was dispatched", l.number);
        if (s.depth != stack)
            throw ParseError("depth " + std::to_string(s.depth) + " but the stack holds " + std::to_string(stack),
                             l.number);
        if (t.size() < 2 || t[1].size() != 1) throw ParseError("missing line kind", l.number);
        s.kind = t[1][0];
        switch (s.kind) {
            case 'C':
                if (t.size() != 4) throw ParseError("expected 'C <m> <n>'", l.number);
                s.m = to_int(t[2], l.number);
                s.n = to_int(t[3], l.number);
                if (s.m <= 0 || s.n == 0) throw ParseError("bad condition", l.number);
                ++stack;
                break;
            case 'R':
                if (t.size() != 2) throw ParseError("R takes no arguments", l.number);
                --stack;
                break;
            case 'H': {
                size_t j = 2;
                while (j < t.size()) {
                    if (j + 4 >= t.size() || t[j] != "(" || t[j + 4] != ")")
                        throw ParseError("expected '(<u> <v> <q>)'", l.number);
                    s.hubcap.push_back(
                        {to_int(t[j + 1], l.number), to_int(t[j + 2], l.number), to_int(t[j + 3], l.number)});
                    j += 5;
                }
                try {
                    check_hubcap(s.hubcap, degree);
                } catch (const PartError& e) {
                    throw ParseError(std::string("bad hubcap: ") + e.what(), l.number);
                }
                --stack;
                break;
            }
            case 'S':
                if (t.size() != 4 && !(t.size() == 5 && t[4] == "M"))
                    throw ParseError("expected 'S <part> <rotation> [M]'", l.number);
                s.ref = to_int(t[2], l.number);
                s.rotation = to_int(t[3], l.number);
                s.mirror = t.size() == 5;
                if (s.ref < 1) throw ParseError("part references start at 1", l.number);
                --stack;
                break;
            default:
                throw ParseError("unknown line kind '" + t[1] + "'", l.number);
        }
        p.lines.push_back(std::move(s));
    }
    return p;
}

std::string emit_presentation(const Presentation& p) {
    std::string s;
    for (const auto& l : p.lines) {
        s += "L" + std::to_string(l.depth) + " " + l.kind;
        switch (l.kind) {
            case 'C': s += " " + std::to_string(l.m) + " " + std::to_string(l.n); break;
            case 'H':
                for (const auto& h : l.hubcap)
                    s += " (" + std::to_string(h.u) + " " + std::to_string(h.v) + " " + std::to_string(h.q) + ")";
                break;
            case 'S':
                s += " " + std::to_string(l.ref) + " " + std::to_string(l.rotation);
                if (l.mirror) s += " M";
                break;
            default: break;
        }
        s += "\n";
    }
    return s;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

}  // namespace fct
