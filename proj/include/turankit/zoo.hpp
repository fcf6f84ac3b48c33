#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "turankit/hypergraph.hpp"

namespace turankit::zoo {

/// A named construction plus its integer parameters.
///
/// Parameter meaning per name:
///   turan              n, l (parts), r (default 2)       T_r(n, l)
///   bipartite3         n                                 B_3(n)
///   odd_bipartite      n, r (edges have 2r vertices), m  B_2r^odd(n, m); m maximized when absent
///   even_quad          n                                 B_4^even(n), split maximized
///   semibipartite      n, r                              S_r(n), split maximized
///   fano                                                 Fano plane
///   gen_triangle       r                                 generalized triangle T_r
///   expansion_complete l, r                              H_{l+1}^r
///   expansion_of       payload (an r-graph F)            H^F_{v(F)}
///   tree_expansion     payload (a tree as a 2-graph), r  Exp(T)
///   expanded_triangle  r                                 C_3^{2r}
///   f7, f43                                              4-graphs on 7 vertices (see f43())
///   f32                                                  F_{3,2}
///   matching           k, r                              M_k^r
///   sunflower          k, r                              L_k^r
///   bgraph             r, l                              B(r, l+1)
struct ZooSpec {
    std::string name;
    std::optional<std::int64_t> n, l, r, m, k;
    std::optional<Hypergraph> payload;
};

/// All names accepted by construct().
const std::vector<std::string>& names();

/// Dispatches on spec.name. Throws InvalidArgument for unknown names or
/// parameters violating the construction's preconditions.
Hypergraph construct(const ZooSpec& spec);

/// Balanced part sizes for n vertices in `parts` parts, larger parts first.
std::vector<std::size_t> balanced_parts(std::size_t n, std::size_t parts);

Hypergraph turan(std::size_t n, std::size_t parts, std::size_t r = 2);
Hypergraph bipartite3(std::size_t n);

/// |V_1| = floor(n/2) + m; edges are the 2r-sets meeting V_1 in an odd number of vertices.
Hypergraph odd_bipartite(std::size_t n, std::size_t half_r, std::size_t m);
/// m in [0, ceil(n/2)] maximizing the edge count (ties: larger m).
std::size_t best_odd_bipartite_shift(std::size_t n, std::size_t half_r);

/// Size of the first part of B_4^even(n) (ties: larger first part).
std::size_t best_even_quad_split(std::size_t n);
Hypergraph even_quad(std::size_t n);

/// Size of V_1 in S_r(n) (ties: larger V_1).
std::size_t best_semibipartite_split(std::size_t n, std::size_t r);
Hypergraph semibipartite(std::size_t n, std::size_t r);

Hypergraph fano();
Hypergraph gen_triangle(std::size_t r);
Hypergraph expansion_of(const Hypergraph& f);
Hypergraph expansion_complete(std::size_t l, std::size_t r);
Hypergraph tree_expansion(const Hypergraph& tree, std::size_t r);
Hypergraph expanded_triangle(std::size_t half_r);
Hypergraph f7();
/// The edge listing given for F_{4,3} is identical to that of F_7, so this
/// returns the same hypergraph as f7(). Both names are kept so callers can
/// refer to either construction.
Hypergraph f43();
Hypergraph f32();
Hypergraph matching(std::size_t k, std::size_t r);
Hypergraph sunflower(std::size_t k, std::size_t r);
Hypergraph bgraph(std::size_t r, std::size_t l);

/// Exact chromatic number of a 2-graph with at most 16 vertices.
std::size_t chromatic_number(const Hypergraph& g);

/// True iff deleting some single edge lowers the chromatic number.
bool is_edge_critical(const Hypergraph& g);

}  // namespace turankit::zoo
