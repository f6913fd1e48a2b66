#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fct/configuration.h"
#include "fct/part.h"
#include "fct/rules.h"

namespace fct {

class UnencodableRule : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A rule laid onto the part graph with the hub at source or sink and the
/// other end at spoke 1 (after rotation, at spoke `spoke`).
struct Placement {
    const Rule* rule = nullptr;
    bool source_at_hub = false;
    bool reversed = false;
    int spoke = 1;
    Part part;
    std::vector<int> image;  // part number of each rule vertex

    int q() const { return rule->q; }
};

/// Placements with the far end at spoke 1, both roles and orientations.
/// Throws UnencodableRule when the rule cannot be laid onto a part graph.
std::vector<Placement> rule_as_parts(const Rule& r, int d);
Placement rotate_to(const Placement& p, int spoke);

/// The placement appears in every cartwheel that fits p.
bool forced(const Placement& pl, const Part& p);

/// Image of K (part numbers per vertex) appearing well positioned in P, found
/// by unfolding a spanning tree of faces and confirmed from first principles.
std::optional<std::vector<int>> well_positioned_appearance(const Configuration& k, const Part& p);
/// Same question answered by the generic matcher; used as a cross-check.
std::optional<std::vector<int>> well_positioned_by_search(const Configuration& k, const Part& p);

/// Name of the first configuration that appears well positioned, if any.
std::optional<std::string> tau_R(const Part& p, const std::vector<Configuration>& u);

/// Rule placements for one hub degree, shared by every test on that degree.
struct DischargeContext {
    int degree = 0;
    const std::vector<Configuration>* configs = nullptr;
    std::vector<Placement> inward;   // sink at hub
    std::vector<Placement> outward;  // source at hub
};

DischargeContext make_context(int d, const RuleSet& rules, const std::vector<Configuration>& configs);

/// Upper bound (tenths) on the net charge sent from spokes {u, v} to the hub
/// over cartwheels that fit p and contain no configuration. Returns
/// -kInfinity when every such cartwheel contains a configuration.
int zeta_bound(const Part& p, int u, int v, const DischargeContext& ctx);

struct Triplet {
    int u = 0, v = 0, q = 0;
    bool operator==(const Triplet&) const = default;
};

/// Throws PartError unless every spoke 1..d occurs exactly twice.
void check_hubcap(const std::vector<Triplet>& h, int d);

struct HubcapResult {
    bool ok = false;
    std::vector<int> zeta;
    int total = 0;  // 10(6 - d) + floor(sum q / 2)
};

HubcapResult tau_H(const Part& p, const std::vector<Triplet>& h, const DischargeContext& ctx);

/// Mirror then rotate p and compare with history[ref - 1]. Throws PartError
/// for a dangling reference.
bool tau_S(const Part& p, int ref, int rot, bool mirror, const std::vector<Part>& history);

struct ScriptLine {
    int line = 0;
    int depth = 0;
    char kind = 'R';
    int m = 0, n = 0;
    std::vector<Triplet> hubcap;
    int ref = 0, rotation = 0;
    bool mirror = false;
    bool operator==(const ScriptLine&) const = default;
};

struct Presentation {
    int degree = 0;
    std::vector<ScriptLine> lines;
    bool operator==(const Presentation&) const = default;
};

struct DischargeReport {
    int degree = 0;
    bool ok = false;
    int failed_line = 0;  // source line, 0 when the failure is not tied to one
    std::string reason;
    int dispatched = 0;
    std::vector<std::string> trace;
};

DischargeReport run_presentation(const Presentation& s, const RuleSet& rules,
                                 const std::vector<Configuration>& configs, bool verbose = false);

}  // namespace fct
