#pragma once

#include <cstdint>
#include <vector>

#include "turankit/hypergraph.hpp"

namespace turankit {

/// Canonical relabeling of a hypergraph.
///
/// `graph` is source.relabeled(perm); two hypergraphs are isomorphic exactly
/// when their canonical graphs are equal. The hash is a deterministic 64-bit
/// digest of the canonical edge list.
struct CanonicalForm {
    std::vector<Vertex> perm;  // perm[v] = canonical label of v
    Hypergraph graph;
    std::uint64_t hash = 0;
};

CanonicalForm canonical_form(const Hypergraph& h);

bool are_isomorphic(const Hypergraph& g, const Hypergraph& h);

/// Digest of (n, r, edge list) exactly as stored; platform independent.
std::uint64_t content_hash(const Hypergraph& h);

/// Mixing step shared by the content hashes (splitmix64 finalizer).
std::uint64_t mix64(std::uint64_t x);
std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value);

}  // namespace turankit
