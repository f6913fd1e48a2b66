#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fct {

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Planar graph stored as a rotation system: rot(v) lists the neighbours of v
/// in clockwise order. Vertices are 0..n-1; labels carry external ids.
///
/// Faces are traced with next(u->v) = v->succ_v(u), which walks bounded faces
/// counterclockwise and the unbounded face clockwise.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::vector<std::vector<int>> rotation);

    /// Builds a rotation system from face walks. Every directed edge must occur
    /// in exactly one walk and the corners around each vertex must form a single
    /// cycle.
    static Graph from_faces(int n, const std::vector<std::vector<int>>& faces);

    int size() const { return static_cast<int>(rot_.size()); }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    const std::vector<int>& rot(int v) const { return rot_[v]; }
    const std::vector<std::vector<int>>& rotation() const { return rot_; }
    int edge_count() const;

    int index_of(int v, int w) const;
    bool adjacent(int v, int w) const { return index_of(v, w) >= 0; }
    /// Clockwise successor / predecessor of neighbour w around v.
    int succ(int v, int w) const;
    int pred(int v, int w) const;

    /// Face walks as vertex sequences; face i starts with its smallest dart.
    std::vector<std::vector<int>> faces() const;
    /// Face walk containing the dart u->v.
    std::vector<int> face_of(int u, int v) const;

    Graph mirror() const;
    /// Subgraph induced by keep (in that order); rotations are restricted.
    Graph induced(const std::vector<int>& keep) const;

    std::vector<int> distances(int src) const;
    int component_count(int removed = -1) const;
    bool connected() const { return component_count() <= 1; }

    int add_vertex();
    /// Inserts edge u-v with v placed immediately clockwise after after_u in
    /// rot(u) (or first if after_u < 0), and likewise for u in rot(v).
    void add_edge(int u, int after_u, int v, int after_v);
    void remove_edge(int u, int v);

    std::vector<int> labels;

    int label(int v) const { return labels.empty() ? v + 1 : labels[v]; }
    bool operator==(const Graph& o) const { return rot_ == o.rot_ && labels == o.labels; }

private:
    std::vector<std::vector<int>> rot_;
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> issues;
    int faces = 0;

    void fail(std::string msg) {
        ok = false;
        issues.push_back(std::move(msg));
    }
};

/// Checks a raw rotation table for structural problems and Euler's relation.
ValidationReport validate_embedding(const std::vector<std::vector<int>>& rotation);
ValidationReport validate_embedding(const Graph& g);

bool is_triangulation(const Graph& g);

using Circuit = std::vector<int>;

/// All circuits of length <= 5 that leave enough vertices on both sides.
/// Each circuit is reported once, starting at its smallest vertex.
std::vector<Circuit> short_circuits(const Graph& g);
/// Vertices strictly on the left (clockwise-wedge) side of a circuit.
int circuit_side_count(const Graph& g, const Circuit& c);
bool is_internally_six_connected(const Graph& g);

struct SecondNeighborhood {
    std::vector<int> vertices;  // distance <= 2, in BFS order
    std::vector<int> first;     // distance 1
    std::vector<int> second;    // distance 2
    Graph graph;                // induced on vertices
    bool well_behaved = false;
};

SecondNeighborhood second_neighborhood(const Graph& g, int v);
/// True iff the subgraph induced on set is a single circuit of length >= 3.
bool induces_circuit(const Graph& g, const std::vector<int>& set);

struct FaceWrap {
    int face = -1;
    int length = 0;
    std::vector<int> phi;  // ring position -> graph vertex
};

FaceWrap wrap_ring(const Graph& g, int face);

// Standard solids and triangulation moves used by generators and tests.
Graph icosahedron();
Graph octahedron();
Graph cube();
Graph subdivide(const Graph& tri);

/// Flips edge x-y of a triangulation. Returns false when the flip would
/// create a parallel edge.
bool flip_edge(Graph& g, int x, int y);
/// Splits v into v and a new vertex; v keeps the clockwise arc rot[i]..rot[j].
int split_vertex(Graph& g, int v, int i, int j);
/// Inserts a new vertex inside the bounded face to the left of dart a->b.
int insert_in_face(Graph& g, int a, int b);

}  // namespace fct
