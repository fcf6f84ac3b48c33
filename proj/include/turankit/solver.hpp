#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "turankit/hypergraph.hpp"
#include "turankit/matching.hpp"
#include "turankit/rational.hpp"

namespace turankit::solver {

/// Forbids every simultaneous realization of t_i pairwise-disjoint copies
/// of each F_i. [(F, 1)] is plain F-freeness; [(F, t+1)] is (t+1)F-freeness.
class ForbiddenConfig {
public:
    ForbiddenConfig() = default;
    /// Throws InvalidArgument when empty, when uniformities differ, or when
    /// some t_i is zero. Families with isomorphic F are merged (counts add).
    explicit ForbiddenConfig(std::vector<matching::Family> families);

    /// Normalized families, sorted by the canonical hash of F_i.
    const std::vector<matching::Family>& families() const { return families_; }
    std::size_t r() const { return r_; }
    /// Invariant under family reordering and relabeling of each F_i.
    std::uint64_t hash() const { return hash_; }
    /// Sum of t_i * v(F_i): below this many vertices every graph is feasible.
    std::size_t min_vertices() const { return min_vertices_; }

    std::optional<matching::MatchingWitness> violation(const Hypergraph& h) const;
    bool feasible(const Hypergraph& h) const { return !violation(h).has_value(); }

    /// Human-readable summary like "K(3 vertices, 3 edges) x2".
    std::string describe() const;

private:
    std::vector<matching::Family> families_;
    std::size_t r_ = 0;
    std::uint64_t hash_ = 0;
    std::size_t min_vertices_ = 0;
};

enum class Status { Exact, Bounds };

std::string to_string(Status s);

struct TuranRecord {
    std::size_t n = 0;
    std::size_t r = 0;
    std::uint64_t config_hash = 0;
    Status status = Status::Exact;
    std::int64_t value = 0;   // exact value, or best feasible found for Bounds
    std::int64_t upper = 0;   // equals value when exact
    std::vector<Hypergraph> extremal;  // canonical forms, deduplicated
    std::uint64_t nodes = 0;
    std::int64_t elapsed_ms = 0;
    std::int64_t seeded_lower = -1;  // -1 when no seed was used
    bool enumerated = false;          // extremal is the complete EX(n, config)
};

struct SolverOptions {
    std::uint64_t node_limit = 20'000'000;
    std::size_t memo_bytes = std::size_t{1} << 28;
    std::size_t threads = 1;
    std::optional<std::filesystem::path> cache_dir;  // no persistence when empty
    bool use_bounds = true;  // packing and averaging bounds; off only for testing
    bool auto_seed = true;   // extend an extremal (n-1)-vertex graph as a seed
    bool use_memo = true;    // reuse records computed earlier in this process
};

/// Reads TURANKIT_NODE_LIMIT, TURANKIT_CACHE and TURANKIT_THREADS.
SolverOptions options_from_env();

/// ex(n, config) by deletion branch-and-bound from K_n^r.
TuranRecord max_edges(std::size_t n, const ForbiddenConfig& config, const std::optional<Hypergraph>& seed = {},
                      const SolverOptions& options = {});

/// EX(n, config) up to isomorphism; the record has enumerated = true.
TuranRecord enumerate_extremal(std::size_t n, const ForbiddenConfig& config, const SolverOptions& options = {});

struct TuranTable {
    std::uint64_t config_hash = 0;
    std::size_t r = 0;
    std::vector<TuranRecord> records;  // consecutive n

    std::size_t n_lo() const { return records.empty() ? 0 : records.front().n; }
    std::size_t n_hi() const { return records.empty() ? 0 : records.back().n; }
    bool has(std::size_t n) const { return !records.empty() && n >= n_lo() && n <= n_hi(); }
    const TuranRecord& at(std::size_t n) const;
    std::int64_t ex(std::size_t n) const { return at(n).value; }
    /// delta(n, F) = ex(n) - ex(n-1); needs n-1 in the table.
    Rational delta(std::size_t n) const;
    /// d(n, F) = r ex(n) / n.
    Rational d(std::size_t n) const;
};

/// Exact values for n_lo..n_hi (enumerated when `enumerate` is set).
TuranTable ex_table(const ForbiddenConfig& config, std::size_t n_lo, std::size_t n_hi, const SolverOptions& options = {},
                    bool enumerate = false);

/// ex(n, config) / C(n, r), an upper bound on the Turan density.
Rational pi_upper(const ForbiddenConfig& config, std::size_t n, const SolverOptions& options = {});

/// Exact status, and every extremal graph has n vertices, `value` edges and is feasible.
bool validate_record(const TuranRecord& rec, const ForbiddenConfig& config);

// ---- persistence (one JSON document per (config, n)) ------------------------

std::string record_to_json(const TuranRecord& rec);
TuranRecord record_from_json(const std::string& text);
std::filesystem::path cache_path(const std::filesystem::path& dir, std::uint64_t config_hash, std::size_t n);
/// A stored record whose extremal graphs all re-validate, else nothing.
std::optional<TuranRecord> cache_load(const std::filesystem::path& dir, const ForbiddenConfig& config, std::size_t n);
void cache_store(const std::filesystem::path& dir, const TuranRecord& rec);

}  // namespace turankit::solver
