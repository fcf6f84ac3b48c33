#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "turankit/hypergraph.hpp"

namespace turankit::matching {

/// embedding[f] is the host vertex that F's vertex f maps to.
using Embedding = std::vector<Vertex>;

struct Copy {
    std::size_t host = 0;    // host index (rainbow) or family index (configs)
    std::vector<Vertex> vertices;  // sorted image vertex set
    Embedding embedding;
};

struct MatchingWitness {
    std::vector<Copy> copies;
};

/// One (F_i, t_i) entry of a disjoint configuration.
using Family = std::pair<Hypergraph, std::size_t>;

/// Subgraph (not induced) embedding of F into H avoiding `forbidden`.
std::optional<Embedding> embed(const Hypergraph& f, const Hypergraph& h, std::span<const Vertex> forbidden = {});

struct MatchingResult {
    std::size_t nu = 0;
    MatchingWitness witness;
};

/// nu(F, H), or min(nu, cap) when a cap is given. Host limited to 64 vertices.
MatchingResult matching_number(const Hypergraph& f, const Hypergraph& h, std::optional<std::size_t> cap = {});

/// t_i pairwise-disjoint copies of every F_i, all disjoint from each other.
/// Witness copies carry the family index in `host`.
std::optional<MatchingWitness> has_disjoint_config(const Hypergraph& h, std::span<const Family> config);

/// Disjoint S_i with F contained in hosts[i][S_i] for every i.
std::optional<MatchingWitness> rainbow_matching(std::span<const Hypergraph> hosts, const Hypergraph& f);

/// Checks a witness against its hosts: disjointness plus every embedded edge present.
bool validate_witness(const MatchingWitness& w, std::span<const Hypergraph> hosts, std::span<const Hypergraph> patterns);

}  // namespace turankit::matching
