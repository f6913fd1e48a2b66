#include <set>

#include "doctest.h"
#include "fct/configuration.h"
#include "fct/generate.h"
#include "oracle.h"

using namespace fct;

namespace {

Configuration birkhoff() {
    auto g = Graph::from_faces(4, {{0, 1, 2}, {2, 1, 3}, {0, 2, 3, 1}});
    return make_configuration("birkhoff", g, {5, 5, 5, 5});
}

Graph path(int n) {
    std::vector<std::vector<int>> rot(n);
    for (int i = 0; i + 1 < n; ++i) {
        rot[i].push_back(i + 1);
        rot[i + 1].push_back(i);
    }
    return Graph(rot);
}

}  // namespace

TEST_CASE("birkhoff diamond") {
    auto k = birkhoff();
    auto rep = validate_configuration(k);
    REQUIRE(rep.ok);
    CHECK(ring_size_formula(k) == 6);
    auto fc = free_completion(k);
    CHECK(fc.ring == 6);
    CHECK(fc.internal() == 4);
    CHECK(is_triangulation(fc.graph) == false);
    CHECK(validate_embedding(fc.graph).ok);
    for (int v : fc.core_map) CHECK(fc.graph.degree(v) == 5);
    for (int j = 0; j < fc.ring; ++j) CHECK(fc.graph.adjacent(j, (j + 1) % fc.ring));
    CHECK(radius(k) == 1);
    CHECK(structural_screens(k).empty());
}

TEST_CASE("small configurations") {
    Configuration one = make_configuration("wheel", Graph(std::vector<std::vector<int>>{{}}), {5});
    REQUIRE(validate_configuration(one).ok);
    auto fc = free_completion(one);
    CHECK(fc.ring == 5);
    CHECK(fc.graph.degree(5) == 5);
    CHECK(radius(one) == 0);

    auto edge = make_configuration("pair", path(2), {5, 5});
    REQUIRE(validate_configuration(edge).ok);
    CHECK(ring_size(edge) == 6);
    CHECK(structural_screens(edge).size() == 2);  // gamma exceeds degree + 3 at both ends

    auto tw = make_configuration("tw", path(2), {5, 6});
    CHECK(structural_screens(tw).size() == 2);
    auto tri = make_configuration("tri", Graph::from_faces(3, {{0, 1, 2}, {0, 2, 1}}), {5, 5, 5});
    REQUIRE(validate_configuration(tri).ok);
    int hanging = 0;
    for (auto& w : structural_screens(tri)) hanging += w.find("hanging") != std::string::npos;
    CHECK(hanging == 3);

    Graph bowtie(std::vector<std::vector<int>>{{1, 2, 3, 4}, {2, 0}, {0, 1}, {4, 0}, {0, 3}});
    auto cut = make_configuration("cut", bowtie, {7, 5, 5, 5, 5});
    auto crep = validate_configuration(cut);
    CHECK_FALSE(crep.ok);
    CHECK(crep.issues[0].find("(i)") != std::string::npos);
    auto cut6 = make_configuration("cut", bowtie, {6, 5, 5, 5, 5});
    CHECK(validate_configuration(cut6).ok);
    CHECK(ring_size(cut6) == 8);  // the cut vertex contributes nothing

    auto low = make_configuration("low", Graph(std::vector<std::vector<int>>{{}}), {4});
    CHECK_FALSE(validate_configuration(low).ok);
    CHECK_THROWS_AS(free_completion(low), GraphError);

    auto p5 = make_configuration("p5", path(5), {5, 6, 6, 6, 5});
    CHECK(radius(p5) == 2);
    CHECK_FALSE(validate_configuration(p5).ok);  // interior cut vertices need gamma = degree + 2

    auto p5ok = make_configuration("p5", path(5), {5, 4, 4, 4, 5});
    CHECK_FALSE(validate_configuration(p5ok).ok);
}

TEST_CASE("internal vertex with wrong gamma is rejected") {
    auto g = icosahedron();
    std::vector<int> keep{0, 1, 2, 3, 4, 5};
    auto k = make_configuration("cap", g.induced(keep), {6, 5, 5, 5, 5, 5});
    auto rep = validate_configuration(k);
    CHECK_FALSE(rep.ok);
    auto k2 = make_configuration("cap", g.induced(keep), {5, 5, 5, 5, 5, 5});
    CHECK(validate_configuration(k2).ok);
    CHECK(ring_size(k2) == 5);
}

TEST_CASE("random configurations round-trip through their completion") {
    Rng rng(3);
    int tried = 0;
    for (int t = 0; t < 6; ++t) {
        auto tri = random_i6c_triangulation(rng, 20);
        for (int s = 0; s < 40; ++s) {
            auto k = random_configuration(rng, tri, 9);
            if (!k) continue;
            ++tried;
            auto fc = free_completion(*k);
            CHECK(validate_embedding(fc.graph).ok);
            if (k->graph.edge_count() > 0) CHECK(fc.ring == ring_size_formula(*k));
            // every bounded face of the completion is a triangle
            auto faces = fc.graph.faces();
            int big = 0;
            for (auto& f : faces) big += f.size() != 3;
            CHECK(big == (fc.ring == 3 ? 0 : 1));
            auto back = configuration_from_completion(k->name, fc.graph, fc.ring);
            CHECK(back.gamma == k->gamma);
            REQUIRE(validate_configuration(back).ok);
            auto fc2 = free_completion(back);
            CHECK(fc2.ring == fc.ring);
            CHECK(fc2.graph.edge_count() == fc.graph.edge_count());
            auto fc3 = free_completion(configuration_from_completion(k->name, fc2.graph, fc2.ring));
            CHECK(fc3.graph == fc2.graph);
        }
    }
    CHECK(tried > 20);
}
