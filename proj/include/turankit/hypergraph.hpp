#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "turankit/rational.hpp"

namespace turankit {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;

/// An immutable r-uniform hypergraph on vertices 0..n-1.
///
/// Edges are strictly increasing r-tuples kept in lexicographic order without
/// duplicates, stored contiguously (edge i occupies [i*r, (i+1)*r)).
class Hypergraph {
public:
    Hypergraph() = default;

    /// Normalizes the given edges (sorts each tuple, sorts the list, drops
    /// duplicates). Throws InvalidArgument if an edge has the wrong size, a
    /// repeated vertex, or a vertex >= n, or if r == 0.
    Hypergraph(std::size_t n, std::size_t r, std::vector<Edge> edges);
    Hypergraph(std::size_t n, std::size_t r, std::initializer_list<Edge> edges)
        : Hypergraph(n, r, std::vector<Edge>(edges)) {}

    /// Builds from an already sorted, duplicate-free flat edge array. Only
    /// cheap checks are performed; used by hot paths that construct edges in order.
    static Hypergraph from_sorted_flat(std::size_t n, std::size_t r, std::vector<Vertex> flat);

    std::size_t n() const { return n_; }
    std::size_t r() const { return r_; }
    std::size_t size() const { return r_ == 0 ? 0 : flat_.size() / r_; }
    bool empty() const { return flat_.empty(); }

    std::span<const Vertex> edge(std::size_t i) const {
        return {flat_.data() + i * r_, r_};
    }
    const std::vector<Vertex>& flat() const { return flat_; }
    std::vector<Edge> edges() const;

    /// Binary search; `e` must be sorted.
    bool contains(std::span<const Vertex> e) const;
    bool contains(std::initializer_list<Vertex> e) const {
        return contains(std::span<const Vertex>(e.begin(), e.size()));
    }

    /// Image under a vertex relabeling perm (perm[v] is the new label of v).
    Hypergraph relabeled(std::span<const Vertex> perm) const;

    /// Adds or removes edges, returning a new value.
    Hypergraph with_edge(std::span<const Vertex> e) const;
    Hypergraph without_edge(std::span<const Vertex> e) const;

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    std::size_t n_ = 0;
    std::size_t r_ = 1;
    std::vector<Vertex> flat_;
};

struct DegreeProfile {
    std::vector<std::int64_t> degrees;
    std::int64_t min = 0;  // delta(H)
    std::int64_t max = 0;  // Delta(H)
    Rational average;      // d(H) = r|H|/n, zero on the empty vertex set
};

/// K_n^r: every r-subset of n vertices.
Hypergraph complete(std::size_t n, std::size_t r);

/// The empty r-graph on n vertices.
Hypergraph empty_graph(std::size_t n, std::size_t r);

/// K_t^r joined with G: t apex vertices 0..t-1 followed by G shifted by t,
/// with every r-set that meets the apex set.
Hypergraph join(std::size_t t, const Hypergraph& g);

/// G and H placed side by side plus every r-set meeting both vertex classes.
Hypergraph general_join(const Hypergraph& g, const Hypergraph& h);

/// Vertex-disjoint union, each graph repeated by its multiplicity, vertices
/// numbered consecutively in list order. An empty list yields the empty
/// 1-graph on zero vertices.
Hypergraph disjoint_union(std::span<const std::pair<Hypergraph, std::size_t>> parts);

/// H[S], relabeled to 0..|S|-1 preserving vertex order.
Hypergraph induced(const Hypergraph& h, std::span<const Vertex> subset);

/// H minus the given vertices (induced on the complement).
Hypergraph remove_vertices(const Hypergraph& h, std::span<const Vertex> removed);

/// The (r-1)-graph on the other n-1 vertices formed by {e - v : v in e}.
/// Requires r >= 2.
Hypergraph link(const Hypergraph& h, Vertex v);

DegreeProfile degrees(const Hypergraph& h);

/// Lexicographic successor enumeration of all k-subsets of {0..n-1}; calls
/// fn(std::span<const Vertex>) for each.
template <typename Fn>
void for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
    if (k > n) return;
    std::vector<Vertex> s(k);
    for (std::size_t i = 0; i < k; ++i) s[i] = static_cast<Vertex>(i);
    while (true) {
        fn(std::span<const Vertex>(s));
        if (k == 0) return;
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

}  // namespace turankit
