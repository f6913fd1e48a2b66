#pragma once

// Independent brute-force implementations used to cross-check the library.

#include <set>
#include <vector>

#include "fct/graph.h"

namespace oracle {

using fct::Graph;

/// Relabels vertices by perm (old -> new), keeping the embedding.
Graph relabel(const Graph& g, const std::vector<int>& perm);

/// Short circuits found by listing vertex sequences and splitting the faces of
/// the triangulation into the two regions on either side of the circuit.
std::vector<std::vector<int>> short_circuits(const Graph& g);

/// All proper 4-colourings of g as colour vectors.
std::vector<std::vector<int>> colorings(const Graph& g);

/// Number of proper colourings of an r-cycle counted over all 4^r words.
long cycle_colorings(int r);

}  // namespace oracle

namespace oracle {

using ColorSet = std::set<std::vector<int>>;

/// Every proper colouring of an r-cycle.
ColorSet all_cycle_colorings(int r);

/// Lifts of all colourings of g through the ring map phi.
ColorSet lifts(const Graph& g, const std::vector<int>& phi);

/// Partitions of the ring vertices (as group labels per vertex) that theta-fit
/// c with some sign function, read straight from the definition. Groups are
/// interchanged as single Kempe components, so a group uses one colour pair.
std::vector<std::vector<int>> fitting_partitions(const std::vector<int>& c, int theta);

/// Whether c satisfies the consistency condition inside s.
bool condition_holds(const ColorSet& s, const std::vector<int>& c);
bool consistent(const ColorSet& s);

/// Greatest consistent subset by repeated deletion.
ColorSet max_consistent(ColorSet s);

}  // namespace oracle

#include <functional>

#include "fct/part.h"
#include "fct/rules.h"

namespace oracle {

/// Distinct images of a rule found by trying every assignment of host
/// vertices near u, then comparing restricted rotations as cyclic words.
int rule_images(const Graph& host, const std::vector<int>& gamma, const fct::Rule& r, int u, int w);

/// Every exact cartwheel of hub degree d with spoke degrees in [5, spoke_max]
/// and outer degrees in [5, outer_max], given as a fully expanded part.
void for_each_cartwheel(int d, int spoke_max, int outer_max, const std::function<void(const fct::Part&)>& f);

}  // namespace oracle
