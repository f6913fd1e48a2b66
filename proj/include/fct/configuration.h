#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fct/generate.h"
#include "fct/graph.h"

namespace fct {

/// A near-triangulation G(K) with a degree specification. The infinite region
/// is the face to the left of outer_dart (absent when G(K) has no edges).
struct Configuration {
    std::string name;
    Graph graph;
    std::vector<int> gamma;
    std::pair<int, int> outer_dart{-1, -1};

    int size() const { return graph.size(); }
    bool operator==(const Configuration& o) const {
        return name == o.name && graph.rotation() == o.graph.rotation() && gamma == o.gamma &&
               outer_dart == o.outer_dart;
    }
};

/// Builds a configuration, choosing the infinite region as the unique
/// non-triangular face, or the first face that yields a valid configuration.
Configuration make_configuration(std::string name, Graph g, std::vector<int> gamma);

/// Boundary walk of the infinite region; a lone vertex gives {0}.
std::vector<int> outer_walk(const Configuration& k);
std::vector<char> on_boundary(const Configuration& k);

ValidationReport validate_configuration(const Configuration& k);

/// Condition (iii) evaluated literally.
int ring_size_formula(const Configuration& k);
/// Length of the ring of the free completion.
int ring_size(const Configuration& k);

/// Ring vertices are 0..ring-1 in clockwise order (labels 1..ring); core vertex
/// i of G(K) is vertex ring+i (label ring+1+i).
struct FreeCompletion {
    Graph graph;
    int ring = 0;
    std::vector<int> core_map;

    int internal() const { return graph.size() - ring; }
};

/// Throws GraphError if the configuration has no valid completion.
FreeCompletion free_completion(const Configuration& k);

/// Recovers the configuration S \ R from a completion whose ring is 0..ring-1.
Configuration configuration_from_completion(std::string name, const Graph& s, int ring);

int radius(const Configuration& k);

std::vector<std::string> structural_screens(const Configuration& k);

/// Random induced sub-near-triangulation of T with gamma taken from T.
std::optional<Configuration> random_configuration(Rng& rng, const Graph& t, int max_size);

}  // namespace fct
