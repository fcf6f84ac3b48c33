#include "turankit/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace turankit {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) {
    return mix64(seed ^ (mix64(value) + 0x632be59bd9b4e019ULL + (seed << 6) + (seed >> 2)));
}

std::uint64_t content_hash(const Hypergraph& h) {
    std::uint64_t x = hash_combine(mix64(h.n()), h.r());
    x = hash_combine(x, h.size());
    for (Vertex v : h.flat()) x = hash_combine(x, v);
    return x;
}

namespace {

// Individualization-refinement search for the lexicographically least
// relabeled edge list. Colors are cell start positions in the ordered
// partition, so a discrete coloring is itself the relabeling.
class Canonizer {
public:
    explicit Canonizer(const Hypergraph& h) : h_(h), n_(h.n()), r_(h.r()), incident_(h.n()) {
        for (std::size_t e = 0; e < h.size(); ++e) {
            for (Vertex v : h.edge(e)) incident_[v].push_back(static_cast<std::uint32_t>(e));
        }
    }

    CanonicalForm run() {
        std::vector<std::uint32_t> colors(n_, 0);
        std::vector<Vertex> prefix;
        search(colors, prefix);
        CanonicalForm out;
        out.perm = best_perm_;
        out.graph = Hypergraph::from_sorted_flat(n_, r_, best_cert_);
        out.hash = content_hash(out.graph);
        return out;
    }

private:
    void refine(std::vector<std::uint32_t>& colors) const {
        std::vector<std::uint64_t> sig(n_);
        std::vector<Vertex> order(n_);
        std::vector<std::uint64_t> local;
        std::vector<std::uint32_t> other;
        std::size_t cells = count_cells(colors);
        while (cells < n_) {
            for (std::size_t v = 0; v < n_; ++v) {
                local.clear();
                for (std::uint32_t e : incident_[v]) {
                    other.clear();
                    for (Vertex u : h_.edge(e)) {
                        if (u != v) other.push_back(colors[u]);
                    }
                    std::sort(other.begin(), other.end());
                    std::uint64_t x = 0x51ed2701ULL;
                    for (std::uint32_t c : other) x = hash_combine(x, c);
                    local.push_back(x);
                }
                std::sort(local.begin(), local.end());
                std::uint64_t x = hash_combine(0x2545f491ULL, local.size());
                for (std::uint64_t y : local) x = hash_combine(x, y);
                sig[v] = x;
            }
            std::iota(order.begin(), order.end(), Vertex{0});
            std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
                if (colors[a] != colors[b]) return colors[a] < colors[b];
                if (sig[a] != sig[b]) return sig[a] < sig[b];
                return a < b;
            });
            std::vector<std::uint32_t> next(n_);
            std::size_t new_cells = 0;
            for (std::size_t i = 0; i < n_; ++i) {
                Vertex v = order[i];
                if (i == 0 || colors[v] != colors[order[i - 1]] || sig[v] != sig[order[i - 1]]) {
                    next[v] = static_cast<std::uint32_t>(i);
                    ++new_cells;
                } else {
                    next[v] = next[order[i - 1]];
                }
            }
            colors.swap(next);
            if (new_cells == cells) break;
            cells = new_cells;
        }
    }

    std::size_t count_cells(const std::vector<std::uint32_t>& colors) const {
        std::vector<bool> seen(n_ + 1, false);
        std::size_t count = 0;
        for (auto c : colors) {
            if (!seen[c]) {
                seen[c] = true;
                ++count;
            }
        }
        return count;
    }

    std::vector<Vertex> certificate(const std::vector<std::uint32_t>& perm) const {
        std::vector<std::vector<Vertex>> edges(h_.size(), std::vector<Vertex>(r_));
        for (std::size_t e = 0; e < h_.size(); ++e) {
            auto src = h_.edge(e);
            for (std::size_t i = 0; i < r_; ++i) edges[e][i] = perm[src[i]];
            std::sort(edges[e].begin(), edges[e].end());
        }
        std::sort(edges.begin(), edges.end());
        std::vector<Vertex> flat;
        flat.reserve(h_.size() * r_);
        for (const auto& e : edges) flat.insert(flat.end(), e.begin(), e.end());
        return flat;
    }

    void leaf(const std::vector<std::uint32_t>& colors) {
        std::vector<Vertex> perm(colors.begin(), colors.end());
        std::vector<Vertex> cert = certificate(colors);
        if (!have_best_) {
            have_best_ = true;
            best_cert_ = cert;
            best_perm_ = perm;
            first_cert_ = cert;
            first_perm_ = perm;
            return;
        }
        if (cert == first_cert_) record_automorphism(first_perm_, perm);
        if (cert < best_cert_) {
            best_cert_ = std::move(cert);
            best_perm_ = std::move(perm);
        } else if (cert == best_cert_) {
            record_automorphism(best_perm_, perm);
        }
    }

    // Both labelings produce the same certificate, so v -> a^{-1}(b(v)) is an
    // automorphism.
    void record_automorphism(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
        std::vector<Vertex> inverse_a(n_);
        for (std::size_t v = 0; v < n_; ++v) inverse_a[a[v]] = static_cast<Vertex>(v);
        std::vector<Vertex> gamma(n_);
        bool identity = true;
        for (std::size_t v = 0; v < n_; ++v) {
            gamma[v] = inverse_a[b[v]];
            if (gamma[v] != v) identity = false;
        }
        if (identity || automorphisms_.size() >= kMaxGenerators) return;
        automorphisms_.push_back(std::move(gamma));
    }

    // Orbits of the subgroup generated by known automorphisms that fix every
    // prefix vertex.
    std::vector<Vertex> stabilizer_orbits(const std::vector<Vertex>& prefix) const {
        std::vector<Vertex> parent(n_);
        std::iota(parent.begin(), parent.end(), Vertex{0});
        auto find = [&](Vertex x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        for (const auto& gamma : automorphisms_) {
            bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex p) { return gamma[p] == p; });
            if (!fixes) continue;
            for (std::size_t v = 0; v < n_; ++v) {
                Vertex a = find(static_cast<Vertex>(v));
                Vertex b = find(gamma[v]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (std::size_t v = 0; v < n_; ++v) parent[v] = find(static_cast<Vertex>(v));
        return parent;
    }

    void search(std::vector<std::uint32_t> colors, std::vector<Vertex>& prefix) {
        refine(colors);
        // Smallest non-singleton cell, first in partition order.
        std::vector<std::size_t> cell_size(n_, 0);
        for (auto c : colors) ++cell_size[c];
        std::size_t target = n_;
        for (std::size_t c = 0; c < n_; ++c) {
            if (cell_size[c] > 1 && (target == n_ || cell_size[c] < cell_size[target])) target = c;
        }
        if (target == n_) {
            leaf(colors);
            return;
        }
        std::vector<Vertex> members;
        for (std::size_t v = 0; v < n_; ++v)
            if (colors[v] == target) members.push_back(static_cast<Vertex>(v));

        std::vector<Vertex> explored;
        for (Vertex w : members) {
            if (!explored.empty()) {
                auto orbit = stabilizer_orbits(prefix);
                bool equivalent = std::any_of(explored.begin(), explored.end(),
                                              [&](Vertex x) { return orbit[x] == orbit[w]; });
                if (equivalent) continue;
            }
            std::vector<std::uint32_t> child = colors;
            for (Vertex u : members) {
                if (u != w) child[u] = static_cast<std::uint32_t>(target + 1);
            }
            prefix.push_back(w);
            search(std::move(child), prefix);
            prefix.pop_back();
            explored.push_back(w);
        }
    }

    static constexpr std::size_t kMaxGenerators = 256;

    const Hypergraph& h_;
    std::size_t n_;
    std::size_t r_;
    std::vector<std::vector<std::uint32_t>> incident_;
    bool have_best_ = false;
    std::vector<Vertex> best_cert_, first_cert_;
    std::vector<Vertex> best_perm_, first_perm_;
    std::vector<std::vector<Vertex>> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form(const Hypergraph& h) {
    if (h.n() == 0) {
        CanonicalForm out;
        out.graph = h;
        out.hash = content_hash(h);
        return out;
    }
    return Canonizer(h).run();
}

bool are_isomorphic(const Hypergraph& g, const Hypergraph& h) {
    if (g.n() != h.n() || g.size() != h.size()) return false;
    if (g.size() > 0 && g.r() != h.r()) return false;
    return canonical_form(g).graph == canonical_form(h).graph;
}

}  // namespace turankit
