#include <set>

#include "doctest.h"
#include "oracles.hpp"

#include "turankit/errors.hpp"
#include "turankit/pattern.hpp"
#include "turankit/zoo.hpp"

using namespace turankit;
using namespace turankit::patterns;

namespace {

Pattern s3() { return Pattern(2, 3, {{0, 1, 1}}); }
Pattern b4_even() { return Pattern(2, 4, {{0, 0, 1, 1}}); }
// recursive-free pattern with a loop multiset, to exercise multiplicities
Pattern with_loop() { return Pattern(2, 3, {{0, 0, 1}, {1, 1, 1}}); }

// Counts r-subsets of the blowup vertex set whose profile lies in E.
std::int64_t profile_filter_count(const Pattern& p, const Composition& c) {
    std::vector<Part> assignment;
    for (std::size_t i = 0; i < c.size(); ++i) assignment.insert(assignment.end(), c[i], static_cast<Part>(i));
    const std::set<Multiset> allowed(p.multisets().begin(), p.multisets().end());
    std::int64_t count = 0;
    for_each_subset(assignment.size(), p.r(), [&](std::span<const Vertex> s) {
        count += allowed.count(profile(s, assignment)) ? 1 : 0;
    });
    return count;
}

void for_each_composition(std::size_t n, std::size_t k, const std::function<void(const Composition&)>& fn) {
    Composition c(k, 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
        if (i + 1 == k) {
            c[i] = left;
            fn(c);
            return;
        }
        for (std::size_t x = 0; x <= left; ++x) {
            c[i] = x;
            self(self, i + 1, left - x);
        }
    };
    rec(rec, 0, n);
}

}  // namespace

TEST_CASE("blowup count agrees with the blowup and a profile filter") {
    for (const auto& p : {s3(), b4_even(), with_loop(), complete_pattern(3), complete_pattern(4, 3)}) {
        for (std::size_t n = 0; n <= 8; ++n) {
            for_each_composition(n, p.k(), [&](const Composition& c) {
                const auto direct = profile_filter_count(p, c);
                CHECK(blowup_count(p, c) == direct);
                CHECK(static_cast<std::int64_t>(blowup(p, c).size()) == direct);
            });
        }
    }
}

TEST_CASE("blowups of named patterns are the zoo constructions") {
    CHECK(blowup(complete_pattern(2), {5, 4}) == zoo::turan(9, 2));
    CHECK(blowup(s3(), {3, 6}) == zoo::semibipartite(9, 3));
    CHECK(blowup(b4_even(), {4, 4}) == zoo::even_quad(8));
}

TEST_CASE("lambda_n matches exhaustive composition search") {
    for (const auto& p : {s3(), b4_even(), with_loop(), complete_pattern(3)}) {
        for (std::size_t n = 1; n <= 14; ++n) {
            std::int64_t best = -1;
            for_each_composition(n, p.k(), [&](const Composition& c) { best = std::max(best, blowup_count(p, c)); });
            const auto got = lambda_n(p, n);
            CHECK(got.value == best);
            CHECK(blowup_count(p, got.best) == best);
        }
    }
}

TEST_CASE("lagrangian brackets contain the known densities") {
    struct Case {
        Pattern p;
        Rational target;
    };
    const std::vector<Case> cases = {{s3(), make_rational(4, 9)},
                                     {b4_even(), make_rational(3, 8)},
                                     {complete_pattern(2), make_rational(1, 2)},
                                     {complete_pattern(3), make_rational(2, 3)},
                                     {complete_pattern(4), make_rational(3, 4)},
                                     {complete_pattern(5), make_rational(4, 5)}};
    for (const auto& c : cases) {
        const auto est = lagrangian(c.p);
        CHECK(est.lower <= c.target);
        CHECK(c.target <= est.upper);
        CHECK(est.lower == c.target);
        CHECK(density_poly_eval(c.p, std::span<const Rational>(est.witness)) == est.lower);
        Rational sum = 0;
        for (const auto& x : est.witness) sum += x;
        CHECK(sum == 1);
    }
}

TEST_CASE("density polynomial at rational points") {
    const std::vector<Rational> third{make_rational(1, 3), make_rational(2, 3)};
    CHECK(density_poly_eval(s3(), std::span<const Rational>(third)) == make_rational(4, 9));
    const std::vector<double> half{0.5, 0.5};
    CHECK(density_poly_eval(b4_even(), std::span<const double>(half)) == doctest::Approx(0.375));
}

TEST_CASE("minimality") {
    CHECK(is_minimal(complete_pattern(3)).status == Minimality::Minimal);
    CHECK(is_minimal(s3()).status == Minimality::Minimal);
    // a part touching no multiset adds nothing
    const Pattern padded(3, 2, {{0, 1}});
    CHECK(is_minimal(padded).status == Minimality::NotMinimal);
}

TEST_CASE("subconstruction and construction recovery") {
    const auto t = zoo::turan(8, 2);
    CHECK(is_subconstruction(t, complete_pattern(2)).has_value());
    CHECK(find_construction(t, complete_pattern(2)).has_value());
    CHECK_FALSE(is_subconstruction(complete(3, 2), complete_pattern(2)).has_value());
    const auto sub = t.without_edge(std::vector<Vertex>{0, 4});
    CHECK(is_subconstruction(sub, complete_pattern(2)).has_value());
    CHECK_FALSE(find_construction(sub, complete_pattern(2)).has_value());
}

TEST_CASE("pattern files") {
    const auto p = parse_pattern(R"({"k": 2, "r": 3, "multisets": [[1, 2, 2]]})");
    CHECK(p == s3());
    CHECK(parse_pattern(format_pattern(b4_even())) == b4_even());
    CHECK_THROWS_AS(parse_pattern(R"({"k": 2, "r": 3, "multisets": [[1, 2, 3]]})"), InvalidArgument);
    CHECK_THROWS_AS(parse_pattern(R"({"k": 2, "r": 3, "multisets": [], "extra": 1})"), InvalidArgument);
}
