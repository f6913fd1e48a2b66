#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "fct/graph.h"

namespace fct {

/// Embeddings of a connected pattern into a host: injective maps that keep
/// adjacency (both ways when induced) and the cyclic order of every rotation,
/// either all as is or all reversed.
struct MatchSpec {
    const Graph* pattern = nullptr;
    const Graph* host = nullptr;
    std::function<bool(int, int)> allowed;         // pattern vertex -> host vertex
    std::vector<std::pair<int, int>> anchors;      // fixed images
    int orientation = 0;                           // 0 both, +1 kept, -1 reversed
    bool induced = true;
    std::vector<std::vector<int>> faces;           // pattern faces that must land on host faces
};

/// Calls visit(map, reversed) for each embedding; visit returns false to stop.
/// A map found in both orientations is reported once.
void for_each_embedding(const MatchSpec& spec,
                        const std::function<bool(const std::vector<int>&, bool)>& visit);

int count_embeddings(const MatchSpec& spec);

/// Faces other than the one left of outer_dart (all faces if it is unset).
std::vector<std::vector<int>> bounded_faces(const Graph& g, std::pair<int, int> outer_dart);

}  // namespace fct
