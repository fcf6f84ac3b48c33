#include "turankit/zoo.hpp"

#include <algorithm>
#include <numeric>

#include "turankit/errors.hpp"

namespace turankit::zoo {

namespace {

void require(bool ok, const std::string& message) {
    if (!ok) throw InvalidArgument(message);
}

std::size_t need(const std::optional<std::int64_t>& value, const char* field, const std::string& name,
                 std::int64_t min_value = 0) {
    require(value.has_value(), name + ": missing parameter --" + field);
    require(*value >= min_value, name + ": parameter " + field + " must be >= " + std::to_string(min_value));
    return static_cast<std::size_t>(*value);
}

Hypergraph from_one_based(std::size_t n, std::size_t r, std::initializer_list<std::initializer_list<Vertex>> edges) {
    std::vector<Edge> out;
    for (const auto& e : edges) {
        Edge z;
        for (Vertex v : e) z.push_back(v - 1);
        out.push_back(std::move(z));
    }
    return Hypergraph(n, r, std::move(out));
}

// All r-subsets of [n] whose count of vertices below `split` satisfies pred.
template <typename Pred>
Hypergraph by_first_part_count(std::size_t n, std::size_t r, std::size_t split, Pred pred) {
    std::vector<Vertex> flat;
    for_each_subset(n, r, [&](std::span<const Vertex> s) {
        std::size_t inside = 0;
        for (Vertex v : s) inside += (v < split) ? 1 : 0;
        if (pred(inside)) flat.insert(flat.end(), s.begin(), s.end());
    });
    return Hypergraph::from_sorted_flat(n, r, std::move(flat));
}

std::int64_t odd_count(std::size_t n, std::size_t uniformity, std::size_t a) {
    std::int64_t total = 0;
    for (std::size_t j = 1; j <= uniformity; j += 2) {
        total += binomial64(static_cast<std::int64_t>(a), static_cast<std::int64_t>(j)) *
                 binomial64(static_cast<std::int64_t>(n - a), static_cast<std::int64_t>(uniformity - j));
    }
    return total;
}

}  // namespace

const std::vector<std::string>& names() {
    static const std::vector<std::string> kNames = {
        "turan",        "bipartite3",     "odd_bipartite", "even_quad",          "semibipartite",
        "fano",         "gen_triangle",   "expansion_complete", "expansion_of", "tree_expansion",
        "expanded_triangle", "f7",        "f43",           "f32",                "matching",
        "sunflower",    "bgraph"};
    return kNames;
}

std::vector<std::size_t> balanced_parts(std::size_t n, std::size_t parts) {
    require(parts >= 1, "balanced_parts: need at least one part");
    std::vector<std::size_t> sizes(parts, n / parts);
    for (std::size_t i = 0; i < n % parts; ++i) ++sizes[i];
    return sizes;
}

Hypergraph turan(std::size_t n, std::size_t parts, std::size_t r) {
    require(parts >= 1, "turan: l must be >= 1");
    require(r >= 1, "turan: r must be >= 1");
    auto sizes = balanced_parts(n, parts);
    std::vector<std::size_t> part_of;
    for (std::size_t i = 0; i < parts; ++i) part_of.insert(part_of.end(), sizes[i], i);
    std::vector<Vertex> flat;
    for_each_subset(n, r, [&](std::span<const Vertex> s) {
        for (std::size_t i = 1; i < s.size(); ++i)
            if (part_of[s[i]] == part_of[s[i - 1]]) return;
        flat.insert(flat.end(), s.begin(), s.end());
    });
    return Hypergraph::from_sorted_flat(n, r, std::move(flat));
}

Hypergraph bipartite3(std::size_t n) {
    return by_first_part_count(n, 3, n / 2, [](std::size_t inside) { return inside == 1 || inside == 2; });
}

Hypergraph odd_bipartite(std::size_t n, std::size_t half_r, std::size_t m) {
    require(half_r >= 1, "odd_bipartite: r must be >= 1");
    require(n / 2 + m <= n, "odd_bipartite: m must be at most ceil(n/2)");
    return by_first_part_count(n, 2 * half_r, n / 2 + m, [](std::size_t inside) { return inside % 2 == 1; });
}

std::size_t best_odd_bipartite_shift(std::size_t n, std::size_t half_r) {
    std::size_t best_m = 0;
    std::int64_t best = -1;
    for (std::size_t m = 0; n / 2 + m <= n; ++m) {
        std::int64_t count = odd_count(n, 2 * half_r, n / 2 + m);
        if (count >= best) {
            best = count;
            best_m = m;
        }
    }
    return best_m;
}

std::size_t best_even_quad_split(std::size_t n) {
    std::size_t best_a = 0;
    std::int64_t best = -1;
    for (std::size_t a = 0; a <= n; ++a) {
        std::int64_t count = binomial64(static_cast<std::int64_t>(a), 2) * binomial64(static_cast<std::int64_t>(n - a), 2);
        if (count >= best) {
            best = count;
            best_a = a;
        }
    }
    return best_a;
}

Hypergraph even_quad(std::size_t n) {
    return by_first_part_count(n, 4, best_even_quad_split(n), [](std::size_t inside) { return inside == 2; });
}

std::size_t best_semibipartite_split(std::size_t n, std::size_t r) {
    std::size_t best_a = 0;
    std::int64_t best = -1;
    for (std::size_t a = 0; a <= n; ++a) {
        std::int64_t count = static_cast<std::int64_t>(a) *
                             binomial64(static_cast<std::int64_t>(n - a), static_cast<std::int64_t>(r - 1));
        if (count >= best) {
            best = count;
            best_a = a;
        }
    }
    return best_a;
}

Hypergraph semibipartite(std::size_t n, std::size_t r) {
    require(r >= 2, "semibipartite: r must be >= 2");
    return by_first_part_count(n, r, best_semibipartite_split(n, r), [](std::size_t inside) { return inside == 1; });
}

Hypergraph fano() {
    return from_one_based(7, 3, {{1, 2, 3}, {3, 4, 5}, {5, 6, 1}, {1, 7, 4}, {2, 7, 5}, {3, 7, 6}, {2, 4, 6}});
}

Hypergraph gen_triangle(std::size_t r) {
    require(r >= 2, "gen_triangle: r must be >= 2");
    std::vector<Edge> edges(3);
    for (Vertex v = 0; v + 1 < r; ++v) {
        edges[0].push_back(v);
        edges[1].push_back(v);
    }
    edges[0].push_back(static_cast<Vertex>(r - 1));
    edges[1].push_back(static_cast<Vertex>(r));
    for (Vertex v = static_cast<Vertex>(r - 1); v < 2 * r - 1; ++v) edges[2].push_back(v);
    return Hypergraph(2 * r - 1, r, std::move(edges));
}

Hypergraph expansion_of(const Hypergraph& f) {
    const std::size_t r = f.r();
    require(r >= 2, "expansion_of: F must have uniformity >= 2");
    const std::size_t base = f.n();
    std::vector<std::vector<bool>> covered(base, std::vector<bool>(base, false));
    for (std::size_t i = 0; i < f.size(); ++i) {
        auto e = f.edge(i);
        for (std::size_t a = 0; a < r; ++a)
            for (std::size_t b = a + 1; b < r; ++b) covered[e[a]][e[b]] = true;
    }
    std::vector<Edge> edges = f.edges();
    auto next = static_cast<Vertex>(base);
    for (Vertex u = 0; u < base; ++u) {
        for (Vertex v = u + 1; v < base; ++v) {
            if (covered[u][v]) continue;
            Edge e{u, v};
            for (std::size_t i = 0; i + 2 < r; ++i) e.push_back(next++);
            edges.push_back(std::move(e));
        }
    }
    return Hypergraph(next, r, std::move(edges));
}

Hypergraph expansion_complete(std::size_t l, std::size_t r) {
    require(r >= 2 && l >= r, "expansion_complete: requires l >= r >= 2");
    return expansion_of(empty_graph(l + 1, r));
}

Hypergraph tree_expansion(const Hypergraph& tree, std::size_t r) {
    require(tree.r() == 2, "tree_expansion: payload must be a 2-graph");
    require(r >= 2, "tree_expansion: r must be >= 2");
    const std::size_t k = tree.n();
    require(k >= 1 && tree.size() + 1 == k, "tree_expansion: a tree on k vertices has k-1 edges");
    std::vector<std::size_t> parent(k);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (std::size_t i = 0; i < tree.size(); ++i) {
        auto a = find(tree.edge(i)[0]);
        auto b = find(tree.edge(i)[1]);
        require(a != b, "tree_expansion: payload contains a cycle");
        parent[a] = b;
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < tree.size(); ++i) {
        Edge e{tree.edge(i)[0], tree.edge(i)[1]};
        for (std::size_t j = 0; j + 2 < r; ++j) e.push_back(static_cast<Vertex>(k + j));
        edges.push_back(std::move(e));
    }
    return Hypergraph(k + r - 2, r, std::move(edges));
}

Hypergraph expanded_triangle(std::size_t half_r) {
    require(half_r >= 1, "expanded_triangle: r must be >= 1");
    const auto r = static_cast<Vertex>(half_r);
    auto block = [&](Vertex start, Edge& e) {
        for (Vertex v = start; v < start + r; ++v) e.push_back(v);
    };
    std::vector<Edge> edges(3);
    block(0, edges[0]);
    block(r, edges[0]);
    block(r, edges[1]);
    block(2 * r, edges[1]);
    block(0, edges[2]);
    block(2 * r, edges[2]);
    return Hypergraph(3 * half_r, 2 * half_r, std::move(edges));
}

Hypergraph f7() {
    return from_one_based(7, 4, {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 6}, {1, 2, 3, 7}, {4, 5, 6, 7}});
}

Hypergraph f43() {
    return from_one_based(7, 4, {{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 2, 3, 6}, {1, 2, 3, 7}, {4, 5, 6, 7}});
}

Hypergraph f32() { return from_one_based(5, 3, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {3, 4, 5}}); }

Hypergraph matching(std::size_t k, std::size_t r) {
    require(r >= 1, "matching: r must be >= 1");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < k; ++i) {
        Edge e;
        for (std::size_t j = 0; j < r; ++j) e.push_back(static_cast<Vertex>(i * r + j));
        edges.push_back(std::move(e));
    }
    return Hypergraph(k * r, r, std::move(edges));
}

Hypergraph sunflower(std::size_t k, std::size_t r) {
    require(r >= 2, "sunflower: r must be >= 2");
    require(k >= 1, "sunflower: k must be >= 1");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < k; ++i) {
        Edge e{0};
        for (std::size_t j = 0; j + 1 < r; ++j) e.push_back(static_cast<Vertex>(1 + i * (r - 1) + j));
        edges.push_back(std::move(e));
    }
    return Hypergraph(1 + k * (r - 1), r, std::move(edges));
}

Hypergraph bgraph(std::size_t r, std::size_t l) {
    require(r >= 2, "bgraph: r must be >= 2");
    require(l + 1 >= r, "bgraph: requires l + 1 >= r");
    // Vertex i here is i+1 in the 1-based description: [r] -> {0..r-1},
    // [2, l+1] -> {1..l}, [2, r] -> {1..r-1}.
    std::vector<Edge> edges;
    Edge first;
    for (Vertex v = 0; v < r; ++v) first.push_back(v);
    edges.push_back(first);
    for_each_subset(l, r, [&](std::span<const Vertex> s) {
        std::size_t low = 0;
        Edge e;
        for (Vertex v : s) {
            Vertex shifted = v + 1;
            if (shifted <= r - 1) ++low;
            e.push_back(shifted);
        }
        if (low <= 1) edges.push_back(std::move(e));
    });
    return Hypergraph(l + 1, r, std::move(edges));
}

Hypergraph construct(const ZooSpec& spec) {
    const std::string& name = spec.name;
    if (name == "turan") {
        return turan(need(spec.n, "n", name), need(spec.l, "l", name, 1), spec.r ? need(spec.r, "r", name, 1) : 2);
    }
    if (name == "bipartite3") return bipartite3(need(spec.n, "n", name));
    if (name == "odd_bipartite") {
        std::size_t n = need(spec.n, "n", name);
        std::size_t half = need(spec.r, "r", name, 1);
        std::size_t m = spec.m ? need(spec.m, "m", name) : best_odd_bipartite_shift(n, half);
        return odd_bipartite(n, half, m);
    }
    if (name == "even_quad") return even_quad(need(spec.n, "n", name));
    if (name == "semibipartite") return semibipartite(need(spec.n, "n", name), need(spec.r, "r", name, 2));
    if (name == "fano") return fano();
    if (name == "gen_triangle") return gen_triangle(need(spec.r, "r", name, 2));
    if (name == "expansion_complete") return expansion_complete(need(spec.l, "l", name, 1), need(spec.r, "r", name, 2));
    if (name == "expansion_of") {
        require(spec.payload.has_value(), name + ": missing payload hypergraph");
        return expansion_of(*spec.payload);
    }
    if (name == "tree_expansion") {
        require(spec.payload.has_value(), name + ": missing payload tree");
        return tree_expansion(*spec.payload, need(spec.r, "r", name, 2));
    }
    if (name == "expanded_triangle") return expanded_triangle(need(spec.r, "r", name, 1));
    if (name == "f7") return f7();
    if (name == "f43") return f43();
    if (name == "f32") return f32();
    if (name == "matching") return matching(need(spec.k, "k", name), need(spec.r, "r", name, 1));
    if (name == "sunflower") return sunflower(need(spec.k, "k", name, 1), need(spec.r, "r", name, 2));
    if (name == "bgraph") return bgraph(need(spec.r, "r", name, 2), need(spec.l, "l", name, 1));
    throw InvalidArgument("unknown construction '" + name + "'");
}

}  // namespace turankit::zoo
