#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "turankit/errors.hpp"
#include "turankit/zoo.hpp"

namespace turankit::zoo {

namespace {

constexpr std::size_t kMaxColoringVertices = 16;

struct Colorer {
    std::vector<std::uint32_t> adj;
    std::vector<std::size_t> order;
    std::vector<int> color;
    std::size_t limit = 0;

    bool extend(std::size_t pos, int used) {
        if (pos == order.size()) return true;
        std::size_t v = order[pos];
        for (int c = 0; c < std::min<int>(used + 1, static_cast<int>(limit)); ++c) {
            bool clash = false;
            for (std::size_t u = 0; u < adj.size() && !clash; ++u) {
                if ((adj[v] >> u & 1U) && color[u] == c) clash = true;
            }
            if (clash) continue;
            color[v] = c;
            if (extend(pos + 1, std::max(used, c + 1))) return true;
            color[v] = -1;
        }
        return false;
    }
};

std::size_t chromatic_of(std::size_t n, const std::vector<std::uint32_t>& adj) {
    if (n == 0) return 0;
    Colorer c;
    c.adj = adj;
    c.order.resize(n);
    std::iota(c.order.begin(), c.order.end(), std::size_t{0});
    std::stable_sort(c.order.begin(), c.order.end(), [&](std::size_t a, std::size_t b) {
        return std::popcount(adj[a]) > std::popcount(adj[b]);
    });
    for (std::size_t k = 1; k <= n; ++k) {
        c.color.assign(n, -1);
        c.limit = k;
        if (c.extend(0, 0)) return k;
    }
    return n;
}

std::vector<std::uint32_t> adjacency(const Hypergraph& g) {
    if (g.r() != 2) throw InvalidArgument("chromatic number requires a 2-graph");
    if (g.n() > kMaxColoringVertices)
        throw BudgetExceeded("chromatic number limited to " + std::to_string(kMaxColoringVertices) + " vertices");
    std::vector<std::uint32_t> adj(g.n(), 0);
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto e = g.edge(i);
        adj[e[0]] |= 1U << e[1];
        adj[e[1]] |= 1U << e[0];
    }
    return adj;
}

}  // namespace

std::size_t chromatic_number(const Hypergraph& g) { return chromatic_of(g.n(), adjacency(g)); }

bool is_edge_critical(const Hypergraph& g) {
    auto adj = adjacency(g);
    if (g.empty()) throw InvalidArgument("is_edge_critical: graph has no edges");
    const std::size_t chi = chromatic_of(g.n(), adj);
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto e = g.edge(i);
        adj[e[0]] &= ~(1U << e[1]);
        adj[e[1]] &= ~(1U << e[0]);
        const bool lower = chromatic_of(g.n(), adj) < chi;
        adj[e[0]] |= 1U << e[1];
        adj[e[1]] |= 1U << e[0];
        if (lower) return true;
    }
    return false;
}

}  // namespace turankit::zoo
