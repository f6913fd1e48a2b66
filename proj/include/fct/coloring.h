#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "fct/configuration.h"
#include "fct/graph.h"

namespace fct {

/// Colours 0..3 stand for r, g, b, y; position i is ring vertex i clockwise.
using Coloring = std::vector<int>;

bool is_proper(const Coloring& c);
std::string to_string(const Coloring& c);
Coloring coloring_from_string(const std::string& s);

/// Least member of the colour-permutation orbit: colours renumbered by first appearance.
Coloring canonical_class(const Coloring& c);

/// Number of distinct colourings in the permutation orbit of c.
int orbit_size(const Coloring& c);

/// Set of ring colourings closed under the 24 colour permutations. Only orbit
/// representatives are stored, one bit each, indexed by the base-3 code of
/// successive colour differences.
class ColoringSet {
public:
    explicit ColoringSet(int ring = 0);

    static ColoringSet all(int ring);

    int ring() const { return ring_; }
    bool contains(const Coloring& c) const;
    void insert(const Coloring& c);
    void erase(const Coloring& c);

    /// Number of orbits.
    std::size_t classes() const;
    /// Number of colourings, counting every permutation.
    std::size_t size() const;
    bool empty() const { return classes() == 0; }

    std::vector<Coloring> representatives() const;
    std::vector<Coloring> expanded() const;

    ColoringSet operator|(const ColoringSet& o) const;
    ColoringSet operator&(const ColoringSet& o) const;
    ColoringSet operator-(const ColoringSet& o) const;
    bool subset_of(const ColoringSet& o) const;
    bool operator==(const ColoringSet& o) const { return ring_ == o.ring_ && bits_ == o.bits_; }

    std::size_t code(const Coloring& canonical) const;
    Coloring decode(std::size_t code) const;
    bool test_code(std::size_t k) const { return (bits_[k >> 6] >> (k & 63)) & 1u; }
    std::size_t code_count() const { return codes_; }

private:
    void check(const ColoringSet& o) const;

    int ring_;
    std::size_t codes_;
    std::vector<std::uint64_t> bits_;
};

ColoringSet enumerate_colorings(int ring);

/// The three colour partitions; partition t pairs colour 0 with colour t+1.
struct ColorPartition {
    std::array<int, 2> first, second;
};
ColorPartition color_partition(int theta);
/// Index 0 or 1 of the pair of theta containing colour x.
int pair_of(int theta, int x);

/// A maximal ring run coloured within one pair of a colour partition.
struct Run {
    int start = 0;
    int length = 0;
    int first_color = 0;
    int pair = 0;
};

std::vector<Run> theta_components(const Coloring& c, int theta);

/// Components are maximal ring runs given by start and length, listed by
/// start. group[i] and sign[i] belong to component i.
struct SignedPathArrangement {
    int ring = 0;
    std::vector<std::pair<int, int>> components;
    std::vector<int> group;
    std::vector<int> sign;

    bool operator==(const SignedPathArrangement& o) const = default;
    bool operator<(const SignedPathArrangement& o) const;
};

/// Renumbers groups by first appearance and sets the first sign of every group to 0.
SignedPathArrangement normalized(SignedPathArrangement p);

/// True iff no two groups cross on the ring.
bool noncrossing(const SignedPathArrangement& p);

bool theta_fits(const Coloring& c, int theta, const SignedPathArrangement& p);
std::vector<SignedPathArrangement> fitting_arrangements(const Coloring& c, int theta);
ColoringSet colorings_fitting(const SignedPathArrangement& p);

bool is_consistent(const ColoringSet& s);

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Budget {
    int max_rounds = 0;  // 0 means unlimited
    long max_millis = 0;
};

struct FixedPoint {
    ColoringSet result;
    int rounds = 0;
};

/// True iff for every colour partition some maximal arrangement that fits c
/// has all of its fitting colourings in s.
bool survives(const ColoringSet& s, const Coloring& c);

FixedPoint max_consistent_subset(const ColoringSet& s, const Budget& budget = {});

/// Ring colourings c such that assigning c[i] to phi[i] extends to a proper
/// colouring of g. phi may repeat vertices.
ColoringSet lifted_colorings(const Graph& g, const std::vector<int>& phi);
ColoringSet extendable_colorings(const FreeCompletion& s);

struct Verdict {
    std::string name;
    int ring = 0;
    int internal = 0;
    bool reducible = false;
    std::size_t remainder = 0;
    int rounds = 0;
    long millis = 0;
};

struct ReduceOptions {
    int max_ring = 16;
    Budget budget;
};

Verdict is_d_reducible(const Configuration& k, const ReduceOptions& opt = {});

/// Classes A_i and B_i of 5-ring colourings, i = 1..5.
Coloring kempe_class_a(int i);
Coloring kempe_class_b(int i);

}  // namespace fct
