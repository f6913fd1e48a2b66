#pragma once

#include <string>
#include <vector>

#include "fct/configuration.h"
#include "fct/dispatch.h"
#include "fct/part.h"
#include "fct/rules.h"

namespace fct {

/// Largest charge (tenths) any rule combination moves from a hub of the given
/// degree to spoke 1 without a screening configuration appearing well
/// positioned. The witness is the part forced by the chosen placements.
struct EdgeBound {
    int degree = 0;
    int bound = 0;
    Part witness;
    std::vector<Placement> placements;
};

EdgeBound max_edge_transfer(int du, const RuleSet& rules, const std::vector<Configuration>& screen);

/// Recomputes the charge of a witness: the placements must and to the witness
/// part, the part must be unscreened, and each distinct image counts once.
/// Returns -1 if the witness does not hold together.
int reevaluate(const EdgeBound& e, const std::vector<Configuration>& screen);

/// Degrees at or above the cap behave alike for these rules and screens.
int wildcard_cap(const RuleSet& rules, const std::vector<Configuration>& screen);

struct OverchargeReport {
    bool ok = true;
    int threshold = 5;
    int cap = 0;
    bool high_sources = false;  // some rule source admits degree 9 or more
    std::vector<EdgeBound> rows;
};

OverchargeReport verify_overcharge_bound(const RuleSet& rules, const std::vector<Configuration>& screen,
                                         int threshold = 5);

/// Part graph in the embedded-graph text format (labels are part numbers plus
/// one) followed by one `deg <v> <label>` line per vertex.
std::vector<std::string> scene_dump(const Part& p, int cap);

}  // namespace fct
