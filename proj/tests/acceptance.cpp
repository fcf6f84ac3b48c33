// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Every solver call here runs the search; the on-disk cache is never consulted.

#include <chrono>
#include <cstdio>
#include <deque>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"

#include "turankit/canonical.hpp"
#include "turankit/matching.hpp"
#include "turankit/pattern.hpp"
#include "turankit/solver.hpp"
#include "turankit/verify.hpp"
#include "turankit/zoo.hpp"

using namespace turankit;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

const Hypergraph k3 = complete(3, 2);
const Hypergraph k4 = complete(4, 2);
const Hypergraph two_k3(6, 2, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});

solver::ForbiddenConfig single(const Hypergraph& f, std::size_t t = 1) { return solver::ForbiddenConfig({{f, t}}); }

std::string str(const Rational& q) { return to_string(q); }

// Tables are shared between criteria 8, 9 and 12.
std::deque<std::pair<std::string, solver::TuranTable>> g_tables;  // stable references

const solver::TuranTable& table(const std::string& name, const Hypergraph& f, std::size_t lo, std::size_t hi) {
    for (const auto& [n, t] : g_tables)
        if (n == name) return t;
    g_tables.emplace_back(name, solver::ex_table(single(f), lo, hi));
    return g_tables.back().second;
}

Outcome mantel() {
    Outcome o;
    for (std::size_t n = 3; n <= 10; ++n) {
        const auto rec = solver::max_edges(n, single(k3));
        o.expect(rec.status == solver::Status::Exact && rec.value == static_cast<std::int64_t>(n * n / 4),
                 "ex(" + std::to_string(n) + ",K3)=" + std::to_string(rec.value));
    }
    for (std::size_t n = 3; n <= 9; ++n) {
        const auto rec = solver::enumerate_extremal(n, single(k3));
        o.expect(rec.extremal.size() == 1 && are_isomorphic(rec.extremal[0], zoo::turan(n, 2)),
                 "EX(" + std::to_string(n) + ",K3) has " + std::to_string(rec.extremal.size()) + " classes");
    }
    return o;
}

Outcome moon() {
    Outcome o;
    const auto rec = solver::enumerate_extremal(9, single(k3, 2));
    o.expect(rec.status == solver::Status::Exact && rec.value == 24, "ex(9,2K3)=" + std::to_string(rec.value));
    o.expect(rec.extremal.size() == 1, std::to_string(rec.extremal.size()) + " extremal classes");
    o.expect(!rec.extremal.empty() && are_isomorphic(rec.extremal[0], join(1, zoo::turan(8, 2))),
             "extremal graph is not K1 join T(8,2)");
    if (o.ok) o.detail = std::to_string(rec.nodes) + " search nodes";
    return o;
}

Outcome fano() {
    Outcome o;
    const auto rec = solver::enumerate_extremal(7, single(zoo::fano()));
    o.expect(rec.status == solver::Status::Exact && rec.value == 30, "ex(7,Fano)=" + std::to_string(rec.value));
    bool found = false;
    for (const auto& h : rec.extremal) found = found || are_isomorphic(h, zoo::bipartite3(7));
    o.expect(found, "B3(7) not among the extremal graphs");
    if (o.ok) o.detail = std::to_string(rec.extremal.size()) + " extremal classes";
    return o;
}

Outcome main_theorem() {
    Outcome o;
    const auto rep = verify::check_main_theorem(k3, 9, 1);
    o.expect(rep.status == verify::CheckStatus::Pass, "main-theorem report is " + verify::to_string(rep.status));
    return o;
}

Outcome remark() {
    Outcome o;
    const auto rep = verify::check_remark_2k3(30, 2);
    o.expect(rep.status == verify::CheckStatus::Pass, "remark-2k3 report is " + verify::to_string(rep.status));
    return o;
}

Outcome matching_theorems() {
    Outcome o;
    const std::vector<std::pair<std::size_t, std::size_t>> eg{{6, 1}, {6, 2}, {7, 1}, {7, 2}, {8, 2}};
    for (auto [n, t] : eg) {
        const auto rep = verify::check_matching_theorems(n, t, 2);
        o.expect(rep.status == verify::CheckStatus::Pass,
                 "Erdos-Gallai (" + std::to_string(n) + "," + std::to_string(t) + ") " + verify::to_string(rep.status));
    }
    const auto rep = verify::check_matching_theorems(7, 1, 3);
    o.expect(rep.status == verify::CheckStatus::Pass, "(7,1,3) report is " + verify::to_string(rep.status));
    const auto rec = solver::max_edges(7, single(zoo::matching(2, 3)));
    o.expect(rec.status == solver::Status::Exact && rec.value == 15, "ex(7, 2 disjoint triples)=" + std::to_string(rec.value));
    return o;
}

Outcome lagrangians() {
    Outcome o;
    struct Case {
        std::string name;
        patterns::Pattern p;
        Rational target;
        std::vector<Rational> analytic;
    };
    std::vector<Case> cases{
        {"S3", patterns::Pattern(2, 3, {{0, 1, 1}}), make_rational(4, 9), {make_rational(1, 3), make_rational(2, 3)}},
        {"B4even", patterns::Pattern(2, 4, {{0, 0, 1, 1}}), make_rational(3, 8), {make_rational(1, 2), make_rational(1, 2)}}};
    for (std::size_t l = 2; l <= 5; ++l)
        cases.push_back({"K" + std::to_string(l), patterns::complete_pattern(l), 1 - make_rational(1, l),
                         std::vector<Rational>(l, make_rational(1, l))});
    const Rational width = make_rational(5, 100);
    for (const auto& c : cases) {
        const auto est = patterns::lagrangian(c.p);
        o.expect(est.N == 120, c.name + " N=" + std::to_string(est.N));
        o.expect(est.lower <= c.target && c.target <= est.upper,
                 c.name + " bracket [" + str(est.lower) + ", " + str(est.upper) + "] misses target");
        o.expect(est.upper - est.lower <= width, c.name + " width " + str(est.upper - est.lower));
        o.expect(est.lower == c.target, c.name + " lower " + str(est.lower) + " != target");
        o.expect(patterns::density_poly_eval(c.p, std::span<const Rational>(c.analytic)) == c.target,
                 c.name + " analytic witness value differs");
    }
    return o;
}

Outcome smoothness() {
    Outcome o;
    const auto g = verify::Selector::parse("binom_n1_r2:4");
    for (const auto* t : {&table("K3", k3, 3, 10), &table("K4", k4, 4, 9), &table("Fano", zoo::fano(), 7, 8)}) {
        const auto rep = verify::check_smoothness(*t, g);
        o.expect(rep.status == verify::CheckStatus::Pass, "table r=" + std::to_string(t->r) + " from " +
                                                              std::to_string(t->n_lo()) + ": " + verify::to_string(rep.status));
    }
    return o;
}

Outcome lemmas() {
    Outcome o;
    std::vector<solver::TuranTable> tables;
    for (const auto& [name, t] : g_tables) tables.push_back(t);
    o.expect(tables.size() == 3, "expected the three smoothness tables");
    const auto rep = verify::check_lemmas(200, tables);
    o.expect(rep.status == verify::CheckStatus::Pass, "lemmas report is " + verify::to_string(rep.status));
    return o;
}

Outcome rainbow() {
    Outcome o;
    const auto rep = verify::check_rainbow(k3, 9, 1, 200, 42);
    o.expect(rep.status == verify::CheckStatus::Pass, "rainbow report is " + verify::to_string(rep.status));
    for (const auto& v : rep.violations) o.expect(false, v.instance);
    return o;
}

Outcome oracles() {
    Outcome o;
    std::mt19937_64 rng(0xacce55);
    const std::vector<Hypergraph> pats2{complete(2, 2), k3, Hypergraph(3, 2, {{0, 1}, {1, 2}}),
                                        Hypergraph(4, 2, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})};
    const std::vector<Hypergraph> pats3{complete(3, 3), Hypergraph(4, 3, {{0, 1, 2}, {0, 1, 3}}),
                                        Hypergraph(5, 3, {{0, 1, 2}, {2, 3, 4}})};
    int mismatches = 0;
    for (int i = 0; i < 100; ++i) {
        const std::size_t r = 2 + i % 2;
        const std::size_t n = 4 + (i / 2) % 6;
        const auto& pats = r == 2 ? pats2 : pats3;
        const auto& f = pats[i % pats.size()];
        const auto h = oracle::random_graph(n, r, r == 2 ? 0.5 : 0.3, rng);
        if (matching::matching_number(f, h).nu != oracle::nu(f, h)) ++mismatches;
    }
    o.expect(mismatches == 0, std::to_string(mismatches) + " matching mismatches");
    const std::vector<Hypergraph> fixtures{zoo::fano(),        zoo::f32(),          zoo::f7(),
                                           zoo::turan(9, 3),   zoo::bipartite3(8),  zoo::semibipartite(8, 3),
                                           zoo::even_quad(8),  zoo::gen_triangle(4), join(1, zoo::turan(8, 2)),
                                           zoo::matching(3, 3), oracle::random_graph(9, 3, 0.3, rng)};
    int bad = 0;
    for (const auto& h : fixtures) {
        const auto cf = canonical_form(h);
        for (int i = 0; i < 100; ++i) {
            const auto g = h.relabeled(oracle::random_perm(h.n(), rng));
            const auto cg = canonical_form(g);
            if (cg.graph != cf.graph || cg.hash != cf.hash) ++bad;
        }
    }
    o.expect(bad == 0, std::to_string(bad) + " canonical-form disagreements");
    return o;
}

Outcome monotonicity() {
    Outcome o;
    for (const auto& [name, t] : g_tables) {
        for (std::size_t n = t.n_lo() + 1; n <= t.n_hi(); ++n) {
            const Rational prev = make_rational(t.ex(n - 1), binomial(n - 1, t.r));
            const Rational cur = make_rational(t.ex(n), binomial(n, t.r));
            o.expect(cur <= prev, name + " ratio increases at n=" + std::to_string(n));
        }
    }
    std::vector<std::pair<std::string, patterns::Pattern>> pats{
        {"S3", patterns::Pattern(2, 3, {{0, 1, 1}})},
        {"B4even", patterns::Pattern(2, 4, {{0, 0, 1, 1}})},
        {"B3", patterns::Pattern(2, 3, {{0, 0, 1}, {0, 1, 1}})}};
    for (std::size_t l = 2; l <= 5; ++l) pats.emplace_back("K" + std::to_string(l), patterns::complete_pattern(l));
    for (const auto& [name, p] : pats) {
        Rational prev = -1;
        for (std::size_t n = 3; n <= 60; ++n) {
            if (n < p.r()) continue;
            const Rational cur = make_rational(patterns::lambda_n(p, n).value, binomial(n, p.r()));
            o.expect(prev < 0 || cur <= prev, name + " Lambda ratio increases at n=" + std::to_string(n));
            prev = cur;
        }
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        double budget_s;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {"1 Mantel/Turan: ex(n,K3), EX(n,K3) = {T(n,2)}", 60, mantel},
        {"2 ex(9,2K3) = 24, EX = {K1 join T(8,2)}", 300, moon},
        {"3 ex(7,Fano) = 30 with B3(7) extremal", 600, fano},
        {"4 verify main-theorem K3 n=9 t=1", 600, main_theorem},
        {"5 remark-2k3 (30,2)", 1, remark},
        {"6 Erdos-Gallai and (7,1,3) = 15", 600, matching_theorems},
        {"7 Lagrangian brackets S3, B4even, K2..K5", 30, lagrangians},
        {"8 smoothness K3, K4, Fano tables", 900, smoothness},
        {"9 lemma suite n <= 200", 60, lemmas},
        {"10 rainbow K3 n=9 t=1, 200 trials", 600, rainbow},
        {"11 oracle equivalence (matching, canonical form)", 300, oracles},
        {"12 monotonicity of ex/C(n,r) and Lambda/C(n,r)", 60, monotonicity},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(Clock::now() - start).count();
        if (secs > c.budget_s) o.expect(false, "over the " + std::to_string(static_cast<int>(c.budget_s)) + " s budget");
        std::printf("%s  %-52s %8.2f s  %s\n", o.ok ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
        std::fflush(stdout);
        failed += o.ok ? 0 : 1;
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
