#include "commands.h"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "fct/coloring.h"
#include "fct/dispatch.h"
#include "fct/io.h"
#include "fct/overcharge.h"
#include "fct/rules.h"

namespace fct::cli {

namespace {

int to_int(const std::string& s, const std::string& what) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::logic_error&) {
        throw ParseError("bad " + what + " '" + s + "'");
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep))
        if (!cur.empty()) out.push_back(cur);
    return out;
}

std::vector<Configuration> load_configs(const std::string& path) {
    std::istringstream in(read_file(path));
    return parse_configs(in);
}

RuleSet load_rules(const std::string& path, std::ostream& err) {
    std::istringstream in(read_file(path));
    std::vector<std::string> warn;
    auto rs = parse_rules(in, &warn);
    for (const auto& w : warn) err << "warning: " << w << "\n";
    return rs;
}

// Configurations used for screening must have radius at most 2.
void screen_radius(const std::vector<Configuration>& ks, bool warn_only, std::ostream& err) {
    for (const auto& k : ks) {
        int r = radius(k);
        if (r <= 2) continue;
        std::string msg = "configuration '" + k.name + "' has radius " + std::to_string(r);
        if (!warn_only) throw ParseError(msg + " (use --radius-warn to continue)", 0, k.name);
        err << "warning: " << msg << "\n";
    }
}

// Runs f(i) for i in [0, n) on up to jobs threads.
template <class F>
void parallel_for(int n, int jobs, F f) {
    jobs = std::max(1, std::min(jobs, n));
    std::atomic<int> next{0};
    auto work = [&] {
        for (int i; (i = next++) < n;) f(i);
    };
    if (jobs == 1) {
        work();
        return;
    }
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
}

std::string percent(long part, long whole) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.1f", whole ? 100.0 * part / whole : 0.0);
    return buf;
}

}  // namespace

std::function<bool(const Configuration&)> parse_filter(const std::string& expr) {
    std::vector<std::function<bool(const Configuration&)>> terms;
    for (const auto& t : split(expr, ',')) {
        size_t p = t.find_first_of("<>=!");
        if (p == std::string::npos || p == 0) throw ParseError("bad filter term '" + t + "'");
        size_t q = t.find_first_not_of("<>=!", p);
        if (q == std::string::npos) throw ParseError("bad filter term '" + t + "'");
        std::string field = t.substr(0, p), op = t.substr(p, q - p), value = t.substr(q);
        if (field == "name") {
            if (op != "=" && op != "==" && op != "!=") throw ParseError("names compare with = or !=");
            bool eq = op != "!=";
            terms.push_back([=](const Configuration& k) { return (k.name == value) == eq; });
            continue;
        }
        if (field != "ring" && field != "internal") throw ParseError("unknown filter field '" + field + "'");
        int v = to_int(value, "filter value");
        std::function<bool(int)> cmp;
        if (op == "<=") cmp = [v](int x) { return x <= v; };
        else if (op == ">=") cmp = [v](int x) { return x >= v; };
        else if (op == "<") cmp = [v](int x) { return x < v; };
        else if (op == ">") cmp = [v](int x) { return x > v; };
        else if (op == "=" || op == "==") cmp = [v](int x) { return x == v; };
        else if (op == "!=") cmp = [v](int x) { return x != v; };
        else throw ParseError("unknown filter operator '" + op + "'");
        bool ring = field == "ring";
        terms.push_back([=](const Configuration& k) { return cmp(ring ? ring_size(k) : k.size()); });
    }
    return [terms](const Configuration& k) {
        return std::all_of(terms.begin(), terms.end(), [&](const auto& f) { return f(k); });
    };
}

std::vector<int> parse_degrees(const std::string& s) {
    std::vector<int> out;
    if (auto p = s.find(".."); p != std::string::npos) {
        int a = to_int(s.substr(0, p), "degree"), b = to_int(s.substr(p + 2), "degree");
        for (int d = a; d <= b; ++d) out.push_back(d);
    } else {
        for (const auto& t : split(s, ',')) out.push_back(to_int(t, "degree"));
    }
    if (out.empty()) throw ParseError("no degrees in '" + s + "'");
    for (int d : out)
        if (d < 5 || d > 11) throw ParseError("hub degree " + std::to_string(d) + " outside 5..11");
    return out;
}

int parse_tenths(const std::string& s) {
    auto p = s.find('/');
    if (p == std::string::npos) return to_int(s, "bound");
    if (s.substr(p + 1) != "10") throw ParseError("bounds are given in tenths, e.g. 5/10");
    return to_int(s.substr(0, p), "bound");
}

int cmd_validate(const std::string& path, int degree, std::ostream& out, std::ostream& err) {
    try {
        std::string text = read_file(path);
        std::istringstream probe(text);
        std::string first;
        for (std::string line; std::getline(probe, line);) {
            auto h = line.find('#');
            std::istringstream ls(line.substr(0, h));
            if (ls >> first) break;
        }
        std::istringstream in(text);
        if (first == "config") {
            auto ks = parse_configs(in);
            for (const auto& k : ks) {
                out << "config\t" << k.name << "\tring " << ring_size(k) << "\tinternal " << k.size();
                for (const auto& w : structural_screens(k)) out << "\twarning: " << w;
                out << "\n";
            }
            out << "ok\t" << ks.size() << " configurations\n";
        } else if (first == "rule") {
            std::vector<std::string> warn;
            auto rs = parse_rules(in, &warn);
            for (const auto& w : warn) err << "warning: " << w << "\n";
            for (const auto& r : rs) out << "rule\t" << r.id << "\tq " << r.q << "/10\tvertices " << r.graph.size() << "\n";
            out << "ok\t" << rs.size() << " rules\n";
        } else if (!first.empty() && first[0] == 'L') {
            if (degree == 0) {
                auto stem = std::filesystem::path(path).stem().string();
                auto p = stem.find_last_not_of("0123456789");
                if (p + 1 < stem.size()) degree = std::stoi(stem.substr(p + 1));
            }
            if (degree == 0) throw ParseError("cannot tell the hub degree; pass --degree");
            auto s = parse_presentation(in, degree);
            out << "ok\tdegree " << degree << "\t" << s.lines.size() << " lines\n";
        } else {
            auto g = parse_graph(in);
            auto rep = validate_embedding(g);
            if (!rep.ok) {
                for (const auto& i : rep.issues) err << "error: " << i << "\n";
                return kInputError;
            }
            bool tri = is_triangulation(g);
            out << "graph\t" << g.size() << " vertices\t" << g.edge_count() << " edges\t" << rep.faces << " faces\t"
                << (tri ? "triangulation" : "not a triangulation");
            if (tri) out << "\t" << (is_internally_six_connected(g) ? "internally 6-connected" : "not internally 6-connected");
            out << "\nok\n";
        }
        return kPass;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

int cmd_reduce(const ReduceArgs& a, std::ostream& out, std::ostream& err) {
    std::vector<Configuration> ks;
    try {
        ks = load_configs(a.configs);
        if (!a.filter.empty()) {
            auto keep = parse_filter(a.filter);
            std::erase_if(ks, [&](const Configuration& k) { return !keep(k); });
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    struct Row {
        Verdict v;
        std::string outcome;
    };
    std::vector<Row> rows(ks.size());
    ReduceOptions opt;
    opt.max_ring = a.max_ring;
    opt.budget = {a.max_rounds, a.max_millis};
    parallel_for(static_cast<int>(ks.size()), a.jobs, [&](int i) {
        Row& r = rows[i];
        r.v.name = ks[i].name;
        r.v.internal = ks[i].size();
        try {
            r.v.ring = ring_size(ks[i]);
            r.v = is_d_reducible(ks[i], opt);
            r.outcome = r.v.reducible ? "yes" : "no";
        } catch (const BudgetExceeded&) {
            r.outcome = "budget";
        } catch (const std::exception& e) {
            r.outcome = "error";
        }
    });
    std::ostringstream tsv;
    tsv << "name\tring\tinternal\td_reducible\tremainder\trounds\tmillis\n";
    int code = kPass;
    auto worse = [&](int c) {
        static const int rank[] = {0, 1, 3, 2};
        if (rank[c] > rank[code]) code = c;
    };
    for (const auto& r : rows) {
        tsv << r.v.name << "\t" << r.v.ring << "\t" << r.v.internal << "\t" << r.outcome << "\t";
        if (r.outcome == "yes" || r.outcome == "no")
            tsv << r.v.remainder << "\t" << r.v.rounds << "\t" << (a.no_timing ? std::string("-") : std::to_string(r.v.millis));
        else
            tsv << "-\t-\t-";
        tsv << "\n";
        if (r.outcome == "no") worse(kFail);
        if (r.outcome == "budget") worse(kBudget);
        if (r.outcome == "error") worse(kInputError);
    }
    if (a.report.empty()) {
        out << tsv.str();
    } else {
        std::ofstream f(a.report);
        if (!f) {
            err << "error: cannot write " << a.report << "\n";
            return kInputError;
        }
        f << tsv.str();
    }
    return code;
}

int cmd_discharge(const DischargeArgs& a, std::ostream& out, std::ostream& err) {
    RuleSet rules;
    std::vector<Configuration> configs;
    std::vector<Presentation> scripts;
    try {
        rules = load_rules(a.rules, err);
        configs = load_configs(a.configs);
        screen_radius(configs, a.radius_warn, err);
        for (int d : parse_degrees(a.degrees)) {
            auto path = (std::filesystem::path(a.present) / ("present" + std::to_string(d) + ".txt")).string();
            std::istringstream in(read_file(path));
            try {
                scripts.push_back(parse_presentation(in, d));
            } catch (const ParseError& e) {
                throw ParseError(path + ": " + e.what(), e.line);
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    std::vector<DischargeReport> reps(scripts.size());
    std::vector<std::string> errors(scripts.size());
    parallel_for(static_cast<int>(scripts.size()), a.jobs, [&](int i) {
        try {
            reps[i] = run_presentation(scripts[i], rules, configs, a.verbose);
        } catch (const std::exception& e) {
            errors[i] = e.what();
        }
    });
    out << "degree\toutcome\tfailed_line\tdispatched\treason\n";
    int code = kPass;
    for (size_t i = 0; i < reps.size(); ++i) {
        if (!errors[i].empty()) {
            out << scripts[i].degree << "\terror\t-\t-\t" << errors[i] << "\n";
            code = kInputError;
            continue;
        }
        const auto& r = reps[i];
        out << r.degree << "\t" << (r.ok ? "pass" : "fail") << "\t" << r.failed_line << "\t" << r.dispatched << "\t"
            << (r.reason.empty() ? "-" : r.reason) << "\n";
        if (!r.ok && code == kPass) code = kFail;
    }
    if (a.verbose)
        for (size_t i = 0; i < reps.size(); ++i)
            for (const auto& t : reps[i].trace) out << "trace\t" << scripts[i].degree << "\t" << t << "\n";
    return code;
}

int cmd_overcharge(const OverchargeArgs& a, std::ostream& out, std::ostream& err) {
    RuleSet rules;
    std::vector<Configuration> configs;
    int bound = 0;
    try {
        bound = parse_tenths(a.bound);
        rules = load_rules(a.rules, err);
        configs = load_configs(a.configs);
        screen_radius(configs, a.radius_warn, err);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    auto rep = verify_overcharge_bound(rules, configs, bound);
    for (const auto& row : rep.rows) {
        out << "deg " << row.degree << " bound " << row.bound << "/10 witness";
        for (const auto& l : scene_dump(row.witness, rep.cap)) out << " " << l;
        out << "\n";
    }
    out << "overcharge " << (rep.ok ? "pass" : "fail") << " threshold " << rep.threshold << "/10 cap " << rep.cap
        << "\n";
    return rep.ok ? kPass : kFail;
}

int cmd_stats(const std::string& configs, std::ostream& out, std::ostream& err) {
    std::vector<Configuration> ks;
    try {
        ks = load_configs(configs);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    std::map<int, long> hist;
    for (const auto& k : ks) ++hist[ring_size(k)];
    out << "ring\tcount\tpercent\n";
    for (auto [r, c] : hist) out << r << "\t" << c << "\t" << percent(c, static_cast<long>(ks.size())) << "\n";
    out << "total\t" << ks.size() << "\t" << (ks.empty() ? "0.0" : "100.0") << "\n";
    return kPass;
}

int cmd_oracle_consistency(const std::string& path, int face, std::ostream& out, std::ostream& err) {
    Graph g;
    FaceWrap w;
    try {
        std::istringstream in(read_file(path));
        g = parse_graph(in);
        auto rep = validate_embedding(g);
        if (!rep.ok) throw GraphError(rep.issues.front());
        auto faces = g.faces();
        if (face < 0) {
            face = 0;
            for (int i = 0; i < static_cast<int>(faces.size()); ++i)
                if (faces[i].size() > faces[face].size()) face = i;
        }
        if (face >= static_cast<int>(faces.size())) throw ParseError("no face " + std::to_string(face));
        w = wrap_ring(g, face);
        if (w.length < 2 || w.length > 12) throw ParseError("ring length " + std::to_string(w.length) + " outside 2..12");
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    auto s = lifted_colorings(g, w.phi);
    bool direct = is_consistent(s);
    auto fp = max_consistent_subset(s);
    bool fixed = fp.result == s;
    out << "face\t" << face << "\nring\t" << w.length << "\ncolorings\t" << s.size() << "\nconsistent\t"
        << (direct ? "yes" : "no") << "\nfixed_point_keeps_all\t" << (fixed ? "yes" : "no") << "\n";
    return direct && fixed ? kPass : kFail;
}

}  // namespace fct::cli
