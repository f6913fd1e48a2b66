#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fct/graph.h"
#include "fct/rules.h"

namespace fct {

class PartError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Vertex numbers around a hub of degree d: hub 0, spokes 1..d clockwise,
/// hat d+k between spokes k and k+1, fan l (from 1) over spoke k is k+(l+1)d.
inline int hat_id(int d, int k) { return d + k; }
inline int fan_id(int d, int k, int l) { return k + (l + 1) * d; }
inline int next_spoke(int d, int k) { return k % d + 1; }
inline int prev_spoke(int d, int k) { return (k + d - 2) % d + 1; }

/// A spoke is expanded (internal, fans present) exactly when its bounds meet.
struct Part {
    int degree = 0;
    std::map<int, Bounds> bounds;

    bool has(int id) const { return bounds.count(id) > 0; }
    const Bounds& at(int id) const;
    bool expanded(int k) const { return at(k).exact(); }
    /// Number of fans of spoke k, or -1 when unexpanded.
    int fans(int k) const { return expanded(k) ? at(k).lo - 5 : -1; }

    bool operator==(const Part&) const = default;
};

Part trivial_part(int d);
ValidationReport validate_part(const Part& p);

/// Narrows the bounds of id to b and creates fans for a spoke that became exact.
/// Returns false if the interval would be empty.
bool narrow(Part& p, int id, const Bounds& b);

/// Graph vertices are listed in increasing part number, so the hub is vertex 0.
struct PartGraph {
    Graph graph;
    std::vector<int> id;
    std::map<int, int> index;
};

PartGraph part_graph(const Part& p);

/// Condition line (m, n): n > 0 raises the lower bound of m to n, n < 0 lowers
/// the upper bound to -n. Returns (P', P'').
std::pair<Part, Part> refine(const Part& p, int m, int n);

std::optional<Part> and_parts(const Part& p, const Part& q);

/// Mirror (fixing spoke 1) then rotate clockwise by rot spokes.
int transform_id(const Part& p, int id, int rot, bool mirror);
Part transform(const Part& p, int rot, bool mirror);

/// True iff every cartwheel fitting p (unrotated) also fits q.
bool implies(const Part& p, const Part& q);

struct Cartwheel {
    Part exact;
    Graph graph;
    std::vector<int> id;
    std::vector<int> gamma;
    std::vector<int> origin;  // ambient vertex per graph vertex, when extracted

    int degree() const { return exact.degree; }
};

/// p must have every spoke expanded and every bound exact.
Cartwheel cartwheel_from_part(const Part& p);
Cartwheel extract_cartwheel(const Graph& t, int v);

bool part_fits(const Cartwheel& w, const Part& p);

int cartwheel_charge(const Cartwheel& w, const RuleSet& rules);

}  // namespace fct
