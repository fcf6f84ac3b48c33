#pragma once

// Slow, obviously-correct reference implementations used as test oracles.
// Nothing here shares code with the library beyond the Hypergraph value type.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "turankit/hypergraph.hpp"

namespace oracle {

using turankit::Edge;
using turankit::Hypergraph;
using turankit::Vertex;

inline std::set<Edge> edge_set(const Hypergraph& h) {
    std::set<Edge> s;
    for (std::size_t i = 0; i < h.size(); ++i) s.insert(Edge(h.edge(i).begin(), h.edge(i).end()));
    return s;
}

inline Edge image(std::span<const Vertex> e, const std::vector<Vertex>& map) {
    Edge out;
    for (Vertex v : e) out.push_back(map[v]);
    std::sort(out.begin(), out.end());
    return out;
}

// Tries every permutation.
inline bool isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.n() != b.n() || a.r() != b.r() || a.size() != b.size()) return false;
    const auto target = edge_set(b);
    std::vector<Vertex> perm(a.n());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (std::size_t i = 0; i < a.size() && ok; ++i) ok = target.count(image(a.edge(i), perm)) > 0;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Does F (with v(F) == |subset|) fit inside H using exactly these vertices?
inline bool spans(const Hypergraph& f, const std::set<Edge>& host, const std::vector<Vertex>& subset) {
    std::vector<Vertex> map = subset;
    std::sort(map.begin(), map.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i < f.size() && ok; ++i) ok = host.count(image(f.edge(i), map)) > 0;
        if (ok) return true;
    } while (std::next_permutation(map.begin(), map.end()));
    return false;
}

// Vertex sets (as bitmasks) of all copies of F in H.
inline std::vector<std::uint32_t> copy_sets(const Hypergraph& f, const Hypergraph& h) {
    std::vector<std::uint32_t> out;
    const auto host = edge_set(h);
    const std::size_t n = h.n(), m = f.n();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcount(mask)) != m) continue;
        std::vector<Vertex> subset;
        for (Vertex v = 0; v < n; ++v)
            if (mask >> v & 1) subset.push_back(v);
        if (spans(f, host, subset)) out.push_back(mask);
    }
    return out;
}

// Maximum number of pairwise disjoint copies, by exhaustive search over tuples.
inline std::size_t nu(const Hypergraph& f, const Hypergraph& h) {
    const auto sets = copy_sets(f, h);
    std::size_t best = 0;
    auto rec = [&](auto&& self, std::size_t from, std::uint32_t used, std::size_t depth) -> void {
        best = std::max(best, depth);
        for (std::size_t i = from; i < sets.size(); ++i)
            if (!(sets[i] & used)) self(self, i + 1, used | sets[i], depth + 1);
    };
    rec(rec, 0, 0, 0);
    return best;
}

inline bool contains_copies(const Hypergraph& f, std::size_t t, const Hypergraph& h) { return nu(f, h) >= t; }

inline std::vector<Edge> all_rsets(std::size_t n, std::size_t r) {
    std::vector<Edge> out;
    turankit::for_each_subset(n, r, [&](std::span<const Vertex> s) { out.emplace_back(s.begin(), s.end()); });
    return out;
}

// ex(n, tF) by trying every subgraph of K_n^r. Only for tiny cases.
inline std::int64_t ex(std::size_t n, const Hypergraph& f, std::size_t t) {
    const auto all = all_rsets(n, f.r());
    std::int64_t best = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
        const auto e = static_cast<std::int64_t>(__builtin_popcountll(mask));
        if (e <= best) continue;
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < all.size(); ++i)
            if (mask >> i & 1) edges.push_back(all[i]);
        if (!contains_copies(f, t, Hypergraph(n, f.r(), edges))) best = e;
    }
    return best;
}

inline std::vector<Vertex> random_perm(std::size_t n, std::mt19937_64& rng) {
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

inline Hypergraph random_graph(std::size_t n, std::size_t r, double density, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (auto& e : all_rsets(n, r))
        if (coin(rng)) edges.push_back(e);
    return Hypergraph(n, r, edges);
}

inline std::int64_t binom(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    std::int64_t c = 1;
    for (std::int64_t i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

}  // namespace oracle
