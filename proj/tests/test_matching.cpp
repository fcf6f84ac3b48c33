#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "turankit/errors.hpp"
#include "turankit/matching.hpp"
#include "turankit/zoo.hpp"

using namespace turankit;
using namespace turankit::matching;

namespace {

std::vector<Hypergraph> small_patterns(std::size_t r) {
    if (r == 2)
        return {complete(2, 2), complete(3, 2), Hypergraph(3, 2, {{0, 1}, {1, 2}}), Hypergraph(4, 2, {{0, 1}, {1, 2}, {2, 3}})};
    return {complete(3, 3), Hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}}), Hypergraph(5, 3, {{0, 1, 2}, {2, 3, 4}})};
}

}  // namespace

TEST_CASE("matching number agrees with exhaustive tuple search") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = 2 + trial % 2;
        const std::size_t n = 4 + trial % 6;
        const auto h = oracle::random_graph(n, r, r == 2 ? 0.55 : 0.35, rng);
        for (const auto& f : small_patterns(r)) {
            const auto res = matching_number(f, h);
            CHECK(res.nu == oracle::nu(f, h));
            CHECK(res.witness.copies.size() == res.nu);
            std::vector<Hypergraph> hosts(res.nu, h), pats(res.nu, f);
            CHECK(validate_witness(res.witness, hosts, pats));
            const auto capped = matching_number(f, h, 1);
            CHECK(capped.nu == std::min<std::size_t>(1, res.nu));
        }
    }
}

TEST_CASE("embed respects forbidden vertices") {
    const auto h = zoo::turan(6, 3);
    const auto e = embed(complete(3, 2), h);
    REQUIRE(e.has_value());
    const std::vector<Vertex> forbid{0, 1};
    // T(6,3) minus one part is K_{2,2}: no triangle left
    CHECK_FALSE(embed(complete(3, 2), h, forbid).has_value());
    CHECK_FALSE(embed(complete(3, 2), zoo::turan(10, 2)).has_value());
}

TEST_CASE("disjoint configurations") {
    const auto k3 = complete(3, 2);
    const auto p3 = Hypergraph(3, 2, {{0, 1}, {1, 2}});
    const auto h = complete(6, 2);
    std::vector<Family> both{{k3, 1}, {p3, 1}};
    const auto w = has_disjoint_config(h, both);
    REQUIRE(w.has_value());
    CHECK(w->copies.size() == 2);
    std::vector<Family> too_many{{k3, 2}, {p3, 1}};
    CHECK_FALSE(has_disjoint_config(h, too_many).has_value());
    CHECK_THROWS_AS(matching_number(k3, complete(65, 2)), BudgetExceeded);
}

TEST_CASE("rainbow matchings") {
    const auto k3 = complete(3, 2);
    // two hosts: K_1 join T(8,2) on 9 vertices both times; the apex is in every triangle
    const auto boundary = join(1, zoo::turan(8, 2));
    const std::vector<Hypergraph> hosts{boundary, boundary};
    CHECK_FALSE(rainbow_matching(hosts, k3).has_value());
    const std::vector<Hypergraph> rich{complete(9, 2), boundary};
    const auto w = rainbow_matching(rich, k3);
    REQUIRE(w.has_value());
    const std::vector<Hypergraph> pats{k3, k3};
    CHECK(validate_witness(*w, rich, pats));
}
