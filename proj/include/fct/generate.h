#pragma once

#include <optional>
#include <random>

#include "fct/graph.h"

namespace fct {

using Rng = std::mt19937_64;

/// Random internally 6-connected triangulation: the icosahedron or its
/// 4-fold subdivision, perturbed by edge flips and vertex splits that keep
/// minimum degree 5 and never introduce a short circuit.
Graph random_i6c_triangulation(Rng& rng, int moves);

struct DiskGraph {
    Graph graph;
    int face = -1;  // the face the ring is wrapped around
    FaceWrap wrap;
    int internal = 0;  // vertices not on the wrapped face
};

/// Random connected planar graph with a face whose boundary walk has length in
/// [ring_min, ring_max] and at most max_internal vertices off that face. Edges
/// are deleted at random, so the face may carry bridges and cut vertices.
std::optional<DiskGraph> random_disk_graph(Rng& rng, int ring_min, int ring_max, int max_internal);

/// Random graph bounded by a chordless circuit of the given length with an
/// injective ring wrap, as used by the Kempe-chain implication checks.
DiskGraph random_ring_bounded_graph(Rng& rng, int ring, int max_internal);

/// Adds the chord p_a - p_b inside the bounded face to the left of dart u->v.
bool add_chord_in_face(Graph& g, int u, int v, int a, int b);

}  // namespace fct
