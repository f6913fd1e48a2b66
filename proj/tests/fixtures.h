#pragma once

// Small rule sets shared by the discharging tests and the acceptance run.

#include "fct/configuration.h"
#include "fct/dispatch.h"
#include "fct/rules.h"

namespace fixtures {

using fct::Bounds;
using fct::Graph;
using fct::kInfinity;

/// Degree-5 source, sink of degree at least 7, one side vertex.
inline fct::Rule five_to_big() {
    Graph g({{1, 2}, {2, 0}, {0, 1}});
    return fct::make_rule("five-to-big", 2, g, {{5, 5}, {7, kInfinity}, {5, kInfinity}}, 0, 1);
}

/// Source is the centre of a 5-wheel, sink on the rim with degree at least 6.
inline fct::Rule wheel_rule() {
    std::vector<std::vector<int>> f{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1}, {1, 5, 4, 3, 2}};
    Graph g = Graph::from_faces(6, f);
    std::vector<Bounds> b(6);
    b[0] = {5, 5};
    b[1] = {6, kInfinity};
    return fct::make_rule("wheel", 1, g, b, 0, 1);
}

/// Two triangles on the edge source-sink.
inline fct::Rule diamond_rule() {
    Graph g = Graph::from_faces(4, {{0, 1, 2}, {1, 0, 3}, {2, 1, 3, 0}});
    return fct::make_rule("diamond", 1, g, {{5, 6}, {6, kInfinity}, {5, 5}, {5, kInfinity}}, 0, 1);
}

inline fct::RuleSet multi_rules() { return {five_to_big(), wheel_rule(), diamond_rule()}; }

inline std::vector<fct::RuleSet> standard_rule_sets() {
    return {{}, {fct::triangle_rule(1)}, multi_rules()};
}

inline fct::Configuration birkhoff() {
    auto g = Graph::from_faces(4, {{0, 1, 2}, {2, 1, 3}, {0, 2, 3, 1}});
    return fct::make_configuration("birkhoff", g, {5, 5, 5, 5});
}

/// Degree-5 source sends to a sink of degree at least 6, once per side.
inline fct::Rule five_to_six(int q) {
    Graph g({{1, 2}, {2, 0}, {0, 1}});
    return fct::make_rule("five-to-six", q, g, {{5, 5}, {6, kInfinity}, {5, kInfinity}}, 0, 1);
}

/// Degree-6 source sends 3/10 across each side triangle: 6/10 per edge.
inline fct::Rule six_out() {
    Graph g({{1, 2}, {2, 0}, {0, 1}});
    return fct::make_rule("six-out", 3, g, {{6, 6}, {5, kInfinity}, {5, kInfinity}}, 0, 1);
}

/// Degree-5 script: spokes 1..3 of degree at least 6 are dispatched by
/// hubcaps, and the remaining part holds a diamond of degree-5 vertices.
inline fct::Presentation toy_script() {
    using fct::ScriptLine;
    fct::Presentation p;
    p.degree = 5;
    auto cap = [](int k) {
        std::vector<fct::Triplet> h{{k, k, -10}, {k, k, -10}};
        std::vector<int> rest;
        for (int s = 1; s <= 5; ++s)
            if (s != k) rest.push_back(s);
        for (size_t i = 0; i < rest.size(); ++i) h.push_back({rest[i], rest[(i + 1) % rest.size()], 0});
        return h;
    };
    int line = 1;
    for (int k = 1; k <= 3; ++k) {
        ScriptLine c;
        c.line = line++;
        c.depth = 1;
        c.kind = 'C';
        c.m = k;
        c.n = 6;
        p.lines.push_back(c);
        ScriptLine h;
        h.line = line++;
        h.depth = 2;
        h.kind = 'H';
        h.hubcap = cap(k);
        p.lines.push_back(h);
    }
    ScriptLine r;
    r.line = line;
    r.depth = 1;
    r.kind = 'R';
    p.lines.push_back(r);
    return p;
}

}  // namespace fixtures
