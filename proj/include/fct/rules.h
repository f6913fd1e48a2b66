#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fct/configuration.h"
#include "fct/graph.h"

namespace fct {

constexpr int kInfinity = 1 << 20;

/// Degree interval; hi == kInfinity means unbounded.
struct Bounds {
    int lo = 5;
    int hi = kInfinity;

    bool exact() const { return lo == hi; }
    bool contains(int g) const { return lo <= g && g <= hi; }
    bool operator==(const Bounds&) const = default;
};

/// Charges are integers in tenths throughout.
struct Rule {
    std::string id;
    int q = 1;
    Graph graph;
    std::vector<Bounds> bounds;
    int source = -1;
    int sink = -1;
    std::pair<int, int> outer_dart{-1, -1};

    bool operator==(const Rule& o) const {
        return id == o.id && q == o.q && graph.rotation() == o.graph.rotation() && bounds == o.bounds &&
               source == o.source && sink == o.sink && outer_dart == o.outer_dart;
    }
};

using RuleSet = std::vector<Rule>;

/// Picks the infinite region like make_configuration does.
Rule make_rule(std::string id, int q, Graph g, std::vector<Bounds> bounds, int source, int sink);
ValidationReport validate_rule(const Rule& r);

/// The rule on a triangle: every vertex (5, inf).
Rule triangle_rule(int q);

/// Number of distinct images of the rule with source u and sink w, judging
/// the bounds against gamma.
int rule_images(const Graph& host, const std::vector<int>& gamma, const Rule& r, int u, int w);
/// As above with gamma the degrees of the triangulation T.
int rule_images(const Graph& t, const Rule& r, int u, int w);
/// r(u, w) in tenths; throws GraphError for non-adjacent u, w.
int rule_transfer(const Graph& t, int u, int w, const RuleSet& rules);
/// 10 * (6 - d(u)) minus outgoing plus incoming transfers.
int vertex_charge(const Graph& t, int u, const RuleSet& rules);

/// K appears in T with gamma equal to the degree in T.
bool appears_in_triangulation(const Configuration& k, const Graph& t);

}  // namespace fct
