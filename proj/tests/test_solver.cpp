#include <filesystem>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "turankit/canonical.hpp"
#include "turankit/errors.hpp"
#include "turankit/solver.hpp"
#include "turankit/zoo.hpp"

using namespace turankit;
using namespace turankit::solver;

namespace {

ForbiddenConfig single(const Hypergraph& f, std::size_t t = 1) { return ForbiddenConfig({{f, t}}); }

SolverOptions plain() {
    SolverOptions o;
    o.use_bounds = false;
    o.auto_seed = false;
    o.use_memo = false;
    return o;
}

}  // namespace

TEST_CASE("solver matches brute force on tiny graphs") {
    const auto k3 = complete(3, 2);
    const auto p3 = Hypergraph(3, 2, {{0, 1}, {1, 2}});
    const auto c4 = Hypergraph(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    for (std::size_t n = 2; n <= 6; ++n) {
        CAPTURE(n);
        CHECK(max_edges(n, single(k3)).value == oracle::ex(n, k3, 1));
        CHECK(max_edges(n, single(p3)).value == oracle::ex(n, p3, 1));
        CHECK(max_edges(n, single(c4)).value == oracle::ex(n, c4, 1));
        CHECK(max_edges(n, single(complete(2, 2), 2)).value == oracle::ex(n, complete(2, 2), 2));
    }
    const auto k4m = Hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}});
    for (std::size_t n = 3; n <= 5; ++n) {
        CAPTURE(n);
        CHECK(max_edges(n, single(k4m)).value == oracle::ex(n, k4m, 1));
        CHECK(max_edges(n, single(complete(4, 3))).value == oracle::ex(n, complete(4, 3), 1));
        CHECK(max_edges(n, single(complete(3, 3), 2)).value == oracle::ex(n, complete(3, 3), 2));
    }
}

TEST_CASE("bounds and seeding do not change answers") {
    const auto k3 = complete(3, 2);
    const auto k4 = complete(4, 2);
    const auto f32 = zoo::f32();
    for (std::size_t n = 3; n <= 8; ++n) {
        CAPTURE(n);
        CHECK(max_edges(n, single(k3)).value == max_edges(n, single(k3), {}, plain()).value);
        CHECK(max_edges(n, single(k4)).value == max_edges(n, single(k4), {}, plain()).value);
        CHECK(max_edges(n, single(k3, 2)).value == max_edges(n, single(k3, 2), {}, plain()).value);
    }
    for (std::size_t n = 5; n <= 6; ++n) CHECK(max_edges(n, single(f32)).value == max_edges(n, single(f32), {}, plain()).value);
}

TEST_CASE("enumeration finds every extremal graph") {
    // ex(5, C4) = 6 with brute-force classes counted directly
    const auto c4 = Hypergraph(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const auto rec = enumerate_extremal(5, single(c4));
    CHECK(rec.enumerated);
    std::vector<Hypergraph> classes;
    const auto all = oracle::all_rsets(5, 2);
    for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
        if (__builtin_popcount(mask) != rec.value) continue;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (mask >> i & 1) edges.push_back(all[i]);
        const Hypergraph h(5, 2, edges);
        if (oracle::contains_copies(c4, 1, h)) continue;
        const auto canon = canonical_form(h).graph;
        if (std::find(classes.begin(), classes.end(), canon) == classes.end()) classes.push_back(canon);
    }
    CHECK(rec.extremal.size() == classes.size());
    for (const auto& g : rec.extremal) CHECK(std::find(classes.begin(), classes.end(), g) != classes.end());
    CHECK(validate_record(rec, single(c4)));
}

TEST_CASE("seeds are validated") {
    const auto k3 = complete(3, 2);
    CHECK(max_edges(6, single(k3), zoo::turan(6, 2)).seeded_lower == 9);
    CHECK_THROWS_AS(max_edges(6, single(k3), complete(6, 2)), InvalidArgument);
}

TEST_CASE("node limit yields bounds") {
    SolverOptions o;
    o.node_limit = 5;
    o.auto_seed = false;
    o.use_memo = false;
    const auto rec = max_edges(9, single(complete(3, 2), 2), {}, o);
    CHECK(rec.status == Status::Bounds);
    CHECK(rec.value <= 24);
    CHECK(rec.upper >= 24);
}

TEST_CASE("config normalization") {
    const auto k3 = complete(3, 2);
    const std::vector<Vertex> perm{2, 0, 1};
    const ForbiddenConfig a({{k3, 1}, {k3.relabeled(perm), 1}});
    CHECK(a.families().size() == 1);
    CHECK(a.families()[0].second == 2);
    CHECK(a.hash() == single(k3, 2).hash());
    const auto p3 = Hypergraph(3, 2, {{0, 1}, {1, 2}});
    CHECK(ForbiddenConfig({{k3, 1}, {p3, 2}}).hash() == ForbiddenConfig({{p3, 2}, {k3, 1}}).hash());
    CHECK(a.min_vertices() == 6);
    CHECK_THROWS_AS(ForbiddenConfig(std::vector<matching::Family>{}), InvalidArgument);
    CHECK_THROWS_AS(ForbiddenConfig({{k3, 0}}), InvalidArgument);
    CHECK_THROWS_AS(ForbiddenConfig({{k3, 1}, {complete(3, 3), 1}}), InvalidArgument);
}

TEST_CASE("tables and the cache") {
    const auto dir = std::filesystem::temp_directory_path() / "turankit-test-cache";
    std::filesystem::remove_all(dir);
    SolverOptions o;
    o.cache_dir = dir;
    const auto cfg = single(complete(3, 2));
    const auto table = ex_table(cfg, 3, 8, o, true);
    for (std::size_t n = 3; n <= 8; ++n) CHECK(table.ex(n) == static_cast<std::int64_t>(n * n / 4));
    CHECK(table.delta(5) == 2);
    CHECK(table.d(6) == 3);
    const auto loaded = cache_load(dir, cfg, 7);
    REQUIRE(loaded.has_value());
    CHECK(loaded->value == 12);
    CHECK(loaded->enumerated);
    // round trip through JSON
    const auto again = record_from_json(record_to_json(*loaded));
    CHECK(again.value == loaded->value);
    CHECK(again.extremal == loaded->extremal);
    // a tampered record is rejected on load
    auto bad = *loaded;
    bad.extremal = {complete(7, 2)};
    cache_store(dir, bad);
    CHECK_FALSE(cache_load(dir, cfg, 7).has_value());
    std::filesystem::remove_all(dir);
}
