#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "turankit/hypergraph.hpp"
#include "turankit/rational.hpp"

namespace turankit::patterns {

using Part = std::uint32_t;  // 0-based here, 1-based in .pat files

struct PartCount {
    Part part;
    std::uint32_t mult;
    friend auto operator<=>(const PartCount&, const PartCount&) = default;
};

/// An r-multiset over parts, as (part, multiplicity) pairs sorted by part.
using Multiset = std::vector<PartCount>;

/// A pattern (k, E): k parts and a set E of r-multisets over them.
class Pattern {
public:
    Pattern() = default;

    /// Each multiset is given as a list of parts with repetition, e.g.
    /// {0, 1, 1} for the multiset with one copy of part 0 and two of part 1.
    /// Duplicates are dropped. Throws InvalidArgument when a part is >= k or
    /// a multiset does not have exactly r elements.
    Pattern(std::size_t k, std::size_t r, std::vector<std::vector<Part>> multisets);

    std::size_t k() const { return k_; }
    std::size_t r() const { return r_; }
    const std::vector<Multiset>& multisets() const { return multisets_; }

    /// The multisets in list-with-repetition form.
    std::vector<std::vector<Part>> expanded() const;

    friend bool operator==(const Pattern&, const Pattern&) = default;

private:
    std::size_t k_ = 1;
    std::size_t r_ = 1;
    std::vector<Multiset> multisets_;
};

/// Part sizes n_1..n_k.
using Composition = std::vector<std::size_t>;

/// The pattern whose multisets are the edges of H (all simple).
Pattern from_hypergraph(const Hypergraph& h);

/// K_l as a graph pattern: l parts, every pair of distinct parts.
Pattern complete_pattern(std::size_t parts, std::size_t r = 2);

/// Blow(E; V_1..V_k) with V_i consecutive index ranges of the given sizes.
Hypergraph blowup(const Pattern& p, const Composition& c);

/// Sum over Y in E of prod_i C(n_i, mult_Y(i)).
std::int64_t blowup_count(const Pattern& p, const Composition& c);

struct LambdaN {
    std::int64_t value = 0;
    Composition best;
};

/// Lambda(P, n): maximum blowup size over compositions of n into k parts;
/// the returned maximizer is lexicographically largest. Budget k <= 6,
/// n <= 200 (BudgetExceeded otherwise).
LambdaN lambda_n(const Pattern& p, std::size_t n);

/// r! * sum over Y of prod_i x_i^{m_i} / m_i!, evaluated exactly.
Rational density_poly_eval(const Pattern& p, std::span<const Rational> x);
double density_poly_eval(const Pattern& p, std::span<const double> x);

struct LagrangianEstimate {
    Rational lower;                  // density polynomial at `witness`
    Rational upper;                  // Lambda(P, N) / C(N, r)
    std::vector<Rational> witness;   // point of the simplex
    std::size_t N = 0;
};

struct LagrangianOptions {
    double tol = 1e-9;
    std::size_t N = 120;
    std::size_t random_starts = 3;
    std::uint64_t seed = 0x5eed;
    std::size_t threads = 1;  // 0 = hardware concurrency
};

/// Certified bracket lower <= lambda(P) <= upper.
LagrangianEstimate lagrangian(const Pattern& p, const LagrangianOptions& options = {});

/// P - i: part i dropped, together with every multiset containing it.
Pattern remove_part(const Pattern& p, std::size_t i);

enum class Minimality { Minimal, NotMinimal, Indeterminate };

struct MinimalityReport {
    Minimality status = Minimality::Indeterminate;
    LagrangianEstimate whole;
    std::vector<LagrangianEstimate> without_part;  // bracket of lambda(P - i)
};

/// Minimal when every lambda(P - i) bracket sits strictly below lambda(P)'s;
/// not minimal when some lambda(P - i) lower bound reaches lambda(P)'s upper
/// bound; indeterminate otherwise.
MinimalityReport is_minimal(const Pattern& p, const LagrangianOptions& options = {});

/// A vertex -> part map under which every edge profile lies in E, if any.
/// Budget k <= 4, n <= 24.
std::optional<std::vector<Part>> is_subconstruction(const Hypergraph& h, const Pattern& p);

/// A vertex -> part map under which H is exactly the blowup of E, if any.
std::optional<std::vector<Part>> find_construction(const Hypergraph& h, const Pattern& p);

/// Profile of an r-set under a vertex -> part assignment.
Multiset profile(std::span<const Vertex> edge, std::span<const Part> assignment);

// ---- .pat JSON: {"k": int, "r": int, "multisets": [[1,2,2], ...]} ----------
Pattern parse_pattern(const std::string& json_text);
Pattern load_pattern(const std::filesystem::path& path);
std::string format_pattern(const Pattern& p);

}  // namespace turankit::patterns
