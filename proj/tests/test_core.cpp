#include <random>
#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

#include "turankit/canonical.hpp"
#include "turankit/errors.hpp"
#include "turankit/hg_io.hpp"
#include "turankit/zoo.hpp"

using namespace turankit;

TEST_CASE("hypergraph normalizes edges") {
    Hypergraph h(4, 2, {{1, 0}, {3, 2}, {0, 1}});
    CHECK(h.size() == 2);
    CHECK(h.contains({0, 1}));
    CHECK_FALSE(h.contains({0, 2}));
    CHECK_THROWS_AS(Hypergraph(3, 2, {{0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(Hypergraph(3, 2, {{0, 3}}), InvalidArgument);
    CHECK_THROWS_AS(Hypergraph(3, 2, {{0, 1, 2}}), InvalidArgument);
}

TEST_CASE("complete graphs and joins have binomial sizes") {
    for (std::size_t n = 0; n <= 8; ++n)
        for (std::size_t r = 1; r <= 4; ++r) CHECK(complete(n, r).size() == static_cast<std::size_t>(oracle::binom(n, r)));
    // join(t, empty) = every r-set meeting the apex
    const auto j = join(2, empty_graph(5, 3));
    CHECK(j.size() == static_cast<std::size_t>(oracle::binom(7, 3) - oracle::binom(5, 3)));
}

TEST_CASE("degrees") {
    const auto d = degrees(zoo::turan(7, 2));
    CHECK(d.min == 3);
    CHECK(d.max == 4);
    CHECK(d.average == make_rational(2 * 12, 7));
}

TEST_CASE("canonical form matches brute-force isomorphism") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 3 + trial % 5, r = 2 + trial % 2;
        const auto a = oracle::random_graph(n, r, 0.5, rng);
        const auto b = oracle::random_graph(n, r, 0.5, rng);
        CHECK(are_isomorphic(a, b) == oracle::isomorphic(a, b));
        const auto c = a.relabeled(oracle::random_perm(n, rng));
        CHECK(are_isomorphic(a, c));
        CHECK(canonical_form(a).graph == canonical_form(c).graph);
        CHECK(canonical_form(a).hash == canonical_form(c).hash);
    }
}

TEST_CASE("canonical perm maps the input onto the canonical graph") {
    std::mt19937_64 rng(3);
    const auto h = oracle::random_graph(7, 3, 0.4, rng);
    const auto cf = canonical_form(h);
    CHECK(h.relabeled(cf.perm) == cf.graph);
}

TEST_CASE("regular graphs with equal degree sequences are told apart") {
    // C6 versus two triangles: both 2-regular on 6 vertices
    Hypergraph c6(6, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}});
    Hypergraph two_k3(6, 2, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK_FALSE(are_isomorphic(c6, two_k3));
    CHECK(canonical_form(c6).hash != canonical_form(two_k3).hash);
}

TEST_CASE("hg round trip") {
    for (const auto& name : zoo::names()) {
        zoo::ZooSpec spec{name, 7, 2, 3, std::nullopt, 2, std::nullopt};
        if (name == "expansion_of") spec.payload = complete(3, 2);
        if (name == "tree_expansion") spec.payload = Hypergraph(3, 2, {{0, 1}, {1, 2}});
        if (name == "odd_bipartite" || name == "expanded_triangle") spec.r = 2;
        if (name == "turan") spec.r = 2;
        if (name == "expansion_complete") spec.l = 3;
        const auto h = zoo::construct(spec);
        CAPTURE(name);
        CHECK(parse_hg(format_hg(h)) == h);
    }
    CHECK_THROWS_AS(parse_hg("n 3\nr 2\n0 5\n"), InvalidArgument);
}

TEST_CASE("zoo sizes") {
    CHECK(zoo::turan(10, 2).size() == 25);
    CHECK(zoo::turan(9, 3).size() == 27);
    CHECK(zoo::fano().size() == 7);
    CHECK(zoo::bipartite3(7).size() == 30);
    CHECK(zoo::bipartite3(8).size() == 48);
    // S_3(n) with split maximized: a * C(n - a, 2)
    CHECK(zoo::semibipartite(9, 3).size() == 45);
    CHECK(zoo::even_quad(8).size() == 36);
    CHECK(zoo::f7() == zoo::f43());
    CHECK(zoo::chromatic_number(zoo::turan(9, 3)) == 3);
    CHECK(zoo::chromatic_number(Hypergraph(5, 2, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}})) == 3);
    CHECK_THROWS_AS(zoo::construct({"nope", {}, {}, {}, {}, {}, {}}), InvalidArgument);
}

TEST_CASE("fano plane: every pair lies in exactly one line") {
    const auto f = zoo::fano();
    for (Vertex a = 0; a < 7; ++a)
        for (Vertex b = a + 1; b < 7; ++b) {
            int count = 0;
            for (std::size_t i = 0; i < f.size(); ++i) {
                auto e = f.edge(i);
                count += std::count(e.begin(), e.end(), a) && std::count(e.begin(), e.end(), b);
            }
            CHECK(count == 1);
        }
}
