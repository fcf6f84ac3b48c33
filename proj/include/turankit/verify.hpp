#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "turankit/hypergraph.hpp"
#include "turankit/pattern.hpp"
#include "turankit/rational.hpp"
#include "turankit/solver.hpp"

namespace turankit::verify {

enum class CheckStatus { Pass, Fail, Observational };

std::string to_string(CheckStatus s);

struct Violation {
    std::string instance;
    std::string expected;
    std::string actual;
};

struct CheckReport {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
    CheckStatus status = CheckStatus::Pass;
    std::vector<Violation> violations;
    std::vector<std::string> notes;  // informational lines, e.g. computed values
    std::int64_t elapsed_ms = 0;

    /// False only for a hard failure.
    bool ok() const { return status != CheckStatus::Fail; }
};

/// Closed-form nonnegative functions of n: zero, c, c*C(n, r-1) or c*C(n-1, r-2).
struct Selector {
    enum class Kind { Zero, Constant, BinomNR1, BinomN1R2 };
    Kind kind = Kind::Zero;
    Rational c = 0;

    Rational eval(std::size_t n, std::size_t r) const;
    std::string describe() const;
    /// "0", "const:c", "binom_n_r1:c" or "binom_n1_r2:c" with c as in parse_rational.
    static Selector parse(const std::string& text);
};

struct BoundsParams {
    Selector f1, f2;
};

enum class BoundednessMode { ExtremalOnly, Enumerate };

/// |delta(n) - d(n-1)| <= g(n) for every consecutive pair in the table.
CheckReport check_smoothness(const solver::TuranTable& table, const Selector& g);

/// Max-degree condition for near-extremal F-free graphs; violations are observational.
CheckReport check_boundedness(const Hypergraph& f, std::size_t n, const BoundsParams& params, BoundednessMode mode,
                              const solver::SolverOptions& options = {});

/// Value, structure and tightness sub-checks for ex(n, (t+1)F).
CheckReport check_main_theorem(const Hypergraph& f, std::size_t n, std::size_t t,
                               const solver::SolverOptions& options = {});

/// The strict inequality showing F = 2K_3 breaks the (t+1)F formula. Needs n >= 6t + 6.
CheckReport check_remark_2k3(std::size_t n, std::size_t t);

/// Binomial lemmas up to n_max, plus the d(n) smoothness lemma on each table.
CheckReport check_lemmas(std::size_t n_max, std::span<const solver::TuranTable> tables = {});

/// Minimum degree of extremal graphs, and with a pattern the Turan-pair instance
/// and the maximum-degree bound for EX(n-1, F).
CheckReport check_facts(const Hypergraph& f, const std::optional<patterns::Pattern>& p, std::size_t n,
                        const solver::SolverOptions& options = {});

/// Solver value for (t+1) disjoint edges against max{C(r(t+1)-1, r), C(n,r) - C(n-t,r)}.
CheckReport check_matching_theorems(std::size_t n, std::size_t t, std::size_t r,
                                    const solver::SolverOptions& options = {});

/// Boundary hosts have no rainbow (t+1)-matching; random hosts above the threshold do.
CheckReport check_rainbow(const Hypergraph& f, std::size_t n, std::size_t t, std::size_t trials, std::uint64_t seed,
                          const solver::SolverOptions& options = {});

struct TrimResult {
    std::vector<Vertex> z;
    Hypergraph trimmed;
    CheckReport report;
};

/// Drops vertices of degree <= (pi_hat - 2 eps^{1/2}) C(n-1, r-1); exact arithmetic.
TrimResult trim_low_degree(const Hypergraph& h, const Rational& eps, const Rational& pi_hat);

/// Every F-free 2-graph on n <= 8 vertices up to isomorphism, grouped by edge count.
std::vector<Hypergraph> enumerate_free_graphs(const Hypergraph& f, std::size_t n);

/// Turan density for forbidden graphs with a known value (complete graphs,
/// Fano, F_{3,2}, a single edge); nothing otherwise.
std::optional<Rational> default_pi_hat(const Hypergraph& f);

}  // namespace turankit::verify
