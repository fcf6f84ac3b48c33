#include "turankit/matching.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "turankit/errors.hpp"

namespace turankit::matching {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxMaskVertices = 64;

Mask bit(Vertex v) { return Mask{1} << v; }

std::vector<Vertex> mask_vertices(Mask m) {
    std::vector<Vertex> out;
    while (m) {
        out.push_back(static_cast<Vertex>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

Mask full_mask(std::size_t n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Host graph with edges as vertex masks when it fits in 64 vertices.
class Host {
public:
    explicit Host(const Hypergraph& h) : h_(h), use_masks_(h.n() <= kMaxMaskVertices), degree_(h.n(), 0) {
        for (std::size_t i = 0; i < h.size(); ++i) {
            Mask m = 0;
            for (Vertex v : h.edge(i)) {
                ++degree_[v];
                if (use_masks_) m |= bit(v);
            }
            if (use_masks_) masks_.push_back(m);
        }
        std::sort(masks_.begin(), masks_.end());
    }

    const Hypergraph& graph() const { return h_; }
    std::size_t degree(Vertex v) const { return degree_[v]; }

    bool has(std::span<const Vertex> image) const {
        if (use_masks_) {
            Mask m = 0;
            for (Vertex v : image) m |= bit(v);
            return std::binary_search(masks_.begin(), masks_.end(), m);
        }
        std::vector<Vertex> e(image.begin(), image.end());
        std::sort(e.begin(), e.end());
        return h_.contains(e);
    }

    std::size_t edges_inside(Mask s) const {
        std::size_t count = 0;
        for (Mask m : masks_) count += (m & ~s) == 0;
        return count;
    }

private:
    const Hypergraph& h_;
    bool use_masks_;
    std::vector<std::size_t> degree_;
    std::vector<Mask> masks_;
};

// F prepared for backtracking: vertices ordered most-constrained first, and
// for each position the edges that become fully placed there.
class Plan {
public:
    explicit Plan(const Hypergraph& f) : f_(f), degree_(f.n(), 0), closing_(f.n()) {
        for (std::size_t i = 0; i < f.size(); ++i)
            for (Vertex v : f.edge(i)) ++degree_[v];
        std::vector<char> placed(f.n(), 0);
        std::vector<std::size_t> placed_in_edge(f.size(), 0);
        for (std::size_t step = 0; step < f.n(); ++step) {
            // Prefer the vertex closing or touching the most placed edges, then degree.
            std::size_t best = f.n();
            std::pair<std::size_t, std::size_t> best_score{0, 0};
            for (Vertex v = 0; v < f.n(); ++v) {
                if (placed[v]) continue;
                std::size_t touching = 0;
                for (std::size_t i = 0; i < f.size(); ++i) {
                    auto e = f.edge(i);
                    if (std::find(e.begin(), e.end(), v) != e.end()) touching += placed_in_edge[i];
                }
                std::pair<std::size_t, std::size_t> score{touching, degree_[v]};
                if (best == f.n() || score > best_score) {
                    best = v;
                    best_score = score;
                }
            }
            placed[best] = 1;
            order_.push_back(static_cast<Vertex>(best));
            for (std::size_t i = 0; i < f.size(); ++i) {
                auto e = f.edge(i);
                if (std::find(e.begin(), e.end(), static_cast<Vertex>(best)) == e.end()) continue;
                if (++placed_in_edge[i] == f.r()) closing_[step].push_back(i);
            }
        }
    }

    std::size_t vertex_count() const { return f_.n(); }

    /// Embedding of F into host vertices allowed[v] != 0, or empty.
    std::optional<Embedding> find(const Host& host, const std::vector<char>& allowed) const {
        Embedding image(f_.n(), 0);
        std::vector<char> used(host.graph().n(), 0);
        if (extend(host, allowed, used, image, 0)) return image;
        return std::nullopt;
    }

private:
    bool extend(const Host& host, const std::vector<char>& allowed, std::vector<char>& used, Embedding& image,
                std::size_t pos) const {
        if (pos == order_.size()) return true;
        const Vertex fv = order_[pos];
        std::vector<Vertex> e(f_.r());
        for (Vertex hv = 0; hv < host.graph().n(); ++hv) {
            if (!allowed[hv] || used[hv] || host.degree(hv) < degree_[fv]) continue;
            image[fv] = hv;
            bool ok = true;
            for (std::size_t i : closing_[pos]) {
                auto edge = f_.edge(i);
                for (std::size_t j = 0; j < edge.size(); ++j) e[j] = image[edge[j]];
                if (!host.has(e)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            used[hv] = 1;
            if (extend(host, allowed, used, image, pos + 1)) return true;
            used[hv] = 0;
        }
        return false;
    }

    const Hypergraph& f_;
    std::vector<std::size_t> degree_;
    std::vector<Vertex> order_;
    std::vector<std::vector<std::size_t>> closing_;
};

std::vector<char> allowed_from_mask(std::size_t n, Mask m) {
    std::vector<char> allowed(n, 0);
    for (Vertex v = 0; v < n; ++v) allowed[v] = (m >> v) & 1;
    return allowed;
}

void require_same_uniformity(const Hypergraph& f, const Hypergraph& h) {
    if (f.r() != h.r()) throw InvalidArgument("pattern and host have different uniformity");
}

void require_mask_budget(const Hypergraph& h) {
    if (h.n() > kMaxMaskVertices) throw BudgetExceeded("matching search limited to 64 host vertices");
}

// Enumerates vertex sets S with v in S, S inside `avail`, |S| = v(F), such
// that F embeds into H[S]; results are cached per S.
class CopyFinder {
public:
    CopyFinder(const Host& host, const Hypergraph& f) : host_(host), f_(f), plan_(f) {}

    std::size_t size() const { return f_.n(); }
    const Plan& plan() const { return plan_; }

    template <typename Fn>
    bool for_each_copy_with(Vertex v, Mask avail, Fn&& fn) {
        const std::size_t m = f_.n();
        if (m == 0) return false;
        const Mask rest = avail & ~bit(v);
        const auto pool = mask_vertices(rest);
        if (pool.size() + 1 < m) return false;
        bool stop = false;
        for_each_subset(pool.size(), m - 1, [&](std::span<const Vertex> idx) {
            if (stop) return;
            Mask s = bit(v);
            for (Vertex i : idx) s |= bit(pool[i]);
            if (spans(s) && fn(s)) stop = true;
        });
        return stop;
    }

    bool spans(Mask s) {
        auto it = cache_.find(s);
        if (it != cache_.end()) return it->second;
        bool ok = host_.edges_inside(s) >= f_.size() && plan_.find(host_, allowed_from_mask(host_.graph().n(), s)).has_value();
        cache_.emplace(s, ok);
        return ok;
    }

    Embedding embedding_in(Mask s) const { return *plan_.find(host_, allowed_from_mask(host_.graph().n(), s)); }

private:
    const Host& host_;
    const Hypergraph& f_;
    Plan plan_;
    std::unordered_map<Mask, bool> cache_;
};

Copy make_copy(std::size_t index, Mask s, Embedding emb) {
    Copy c;
    c.host = index;
    c.vertices = mask_vertices(s);
    c.embedding = std::move(emb);
    return c;
}

}  // namespace

std::optional<Embedding> embed(const Hypergraph& f, const Hypergraph& h, std::span<const Vertex> forbidden) {
    require_same_uniformity(f, h);
    if (f.n() > h.n()) return std::nullopt;
    Host host(h);
    std::vector<char> allowed(h.n(), 1);
    for (Vertex v : forbidden) {
        if (v >= h.n()) throw InvalidArgument("forbidden vertex out of range");
        allowed[v] = 0;
    }
    return Plan(f).find(host, allowed);
}

MatchingResult matching_number(const Hypergraph& f, const Hypergraph& h, std::optional<std::size_t> cap) {
    require_same_uniformity(f, h);
    require_mask_budget(h);
    if (f.n() == 0) throw InvalidArgument("matching_number: F has no vertices");
    MatchingResult result;
    if (cap) {
        if (*cap == 0) return result;
        Family fam{f, *cap};
        if (auto w = has_disjoint_config(h, std::span<const Family>(&fam, 1))) {
            result.nu = *cap;
            result.witness = std::move(*w);
            return result;
        }
    }

    Host host(h);
    CopyFinder finder(host, f);
    const std::size_t m = f.n();
    // best[mask] = (nu on mask, chosen copy or 0 meaning "drop lowest vertex").
    std::unordered_map<Mask, std::pair<std::size_t, Mask>> memo;
    auto solve = [&](auto&& self, Mask avail) -> std::size_t {
        if (static_cast<std::size_t>(std::popcount(avail)) < m) return 0;
        if (auto it = memo.find(avail); it != memo.end()) return it->second.first;
        const std::size_t ceiling = static_cast<std::size_t>(std::popcount(avail)) / m;
        const Vertex v = static_cast<Vertex>(std::countr_zero(avail));
        std::size_t best = 0;
        Mask choice = 0;
        finder.for_each_copy_with(v, avail, [&](Mask s) {
            const std::size_t value = 1 + self(self, avail & ~s);
            if (value > best) {
                best = value;
                choice = s;
            }
            return best == ceiling;
        });
        if (best < ceiling) {
            const std::size_t dropped = self(self, avail & ~bit(v));
            if (dropped > best) {
                best = dropped;
                choice = 0;
            }
        }
        memo[avail] = {best, choice};
        return best;
    };
    Mask avail = full_mask(h.n());
    result.nu = solve(solve, avail);
    while (static_cast<std::size_t>(std::popcount(avail)) >= m) {
        auto it = memo.find(avail);
        if (it == memo.end() || it->second.first == 0) break;
        const Mask s = it->second.second;
        if (s == 0) {
            avail &= avail - 1;
            continue;
        }
        result.witness.copies.push_back(make_copy(0, s, finder.embedding_in(s)));
        avail &= ~s;
    }
    return result;
}

std::optional<MatchingWitness> has_disjoint_config(const Hypergraph& h, std::span<const Family> config) {
    require_mask_budget(h);
    std::vector<std::size_t> needs;
    std::size_t total_vertices = 0, total_copies = 0;
    for (const auto& [f, t] : config) {
        require_same_uniformity(f, h);
        if (f.n() == 0) throw InvalidArgument("configuration member has no vertices");
        if (t > 255 || config.size() > 8) throw InvalidArgument("configuration too large");
        needs.push_back(t);
        total_vertices += f.n() * t;
        total_copies += t;
    }
    if (total_copies == 0) return MatchingWitness{};
    if (total_vertices > h.n()) return std::nullopt;

    Host host(h);
    std::vector<CopyFinder> finders;
    finders.reserve(config.size());
    for (const auto& [f, t] : config) finders.emplace_back(host, f);

    // A single remaining copy is found by direct embedding.
    if (total_copies == 1) {
        for (std::size_t i = 0; i < config.size(); ++i) {
            if (needs[i] == 0) continue;
            auto emb = finders[i].plan().find(host, std::vector<char>(h.n(), 1));
            if (!emb) return std::nullopt;
            Mask s = 0;
            for (Vertex v : *emb) s |= bit(v);
            MatchingWitness w;
            w.copies.push_back(make_copy(i, s, std::move(*emb)));
            return w;
        }
    }

    struct KeyHash {
        std::size_t operator()(const std::pair<Mask, std::uint64_t>& k) const {
            return std::hash<Mask>()(k.first * 0x9e3779b97f4a7c15ULL ^ k.second);
        }
    };
    std::unordered_set<std::pair<Mask, std::uint64_t>, KeyHash> failed;
    std::vector<std::pair<std::size_t, Mask>> chosen;

    auto pack = [&]() {
        std::uint64_t key = 0;
        for (std::size_t t : needs) key = key << 8 | t;
        return key;
    };
    auto search = [&](auto&& self, Mask avail, std::size_t vertices_needed) -> bool {
        if (vertices_needed == 0) return true;
        if (static_cast<std::size_t>(std::popcount(avail)) < vertices_needed) return false;
        const auto key = std::make_pair(avail, pack());
        if (failed.count(key)) return false;
        const Vertex v = static_cast<Vertex>(std::countr_zero(avail));
        for (std::size_t i = 0; i < finders.size(); ++i) {
            if (needs[i] == 0) continue;
            const std::size_t m = finders[i].size();
            bool found = finders[i].for_each_copy_with(v, avail, [&](Mask s) {
                --needs[i];
                chosen.emplace_back(i, s);
                if (self(self, avail & ~s, vertices_needed - m)) return true;
                chosen.pop_back();
                ++needs[i];
                return false;
            });
            if (found) return true;
        }
        if (self(self, avail & ~bit(v), vertices_needed)) return true;
        failed.insert(key);
        return false;
    };
    if (!search(search, full_mask(h.n()), total_vertices)) return std::nullopt;
    MatchingWitness w;
    for (auto [i, s] : chosen) w.copies.push_back(make_copy(i, s, finders[i].embedding_in(s)));
    return w;
}

std::optional<MatchingWitness> rainbow_matching(std::span<const Hypergraph> hosts, const Hypergraph& f) {
    if (hosts.empty()) return MatchingWitness{};
    const std::size_t n = hosts[0].n();
    for (const auto& h : hosts) {
        if (h.n() != n || h.r() != hosts[0].r()) throw InvalidArgument("rainbow hosts must share n and r");
        require_same_uniformity(f, h);
    }
    require_mask_budget(hosts[0]);
    if (f.n() == 0) throw InvalidArgument("rainbow_matching: F has no vertices");
    if (hosts.size() * f.n() > n) return std::nullopt;

    std::vector<Host> index;
    index.reserve(hosts.size());
    for (const auto& h : hosts) index.emplace_back(h);
    std::vector<CopyFinder> finders;
    finders.reserve(hosts.size());
    for (const auto& h : index) finders.emplace_back(h, f);

    // Hosts are assigned in order; each takes some copy inside the remaining vertices.
    std::unordered_set<Mask> failed_at[64];
    std::vector<Mask> chosen(hosts.size(), 0);
    const std::size_t m = f.n();
    auto search = [&](auto&& self, std::size_t i, Mask avail) -> bool {
        if (i == hosts.size()) return true;
        if (failed_at[i % 64].count(avail)) return false;
        if (i + 1 == hosts.size()) {
            if (auto emb = finders[i].plan().find(index[i], allowed_from_mask(n, avail))) {
                Mask s = 0;
                for (Vertex v : *emb) s |= bit(v);
                chosen[i] = s;
                return true;
            }
            failed_at[i % 64].insert(avail);
            return false;
        }
        const auto pool = mask_vertices(avail);
        bool found = false;
        for_each_subset(pool.size(), m, [&](std::span<const Vertex> idx) {
            if (found) return;
            Mask s = 0;
            for (Vertex j : idx) s |= bit(pool[j]);
            if (!finders[i].spans(s)) return;
            if (static_cast<std::size_t>(std::popcount(avail & ~s)) < (hosts.size() - i - 1) * m) return;
            chosen[i] = s;
            if (self(self, i + 1, avail & ~s)) found = true;
        });
        if (!found) failed_at[i % 64].insert(avail);
        return found;
    };
    if (hosts.size() > 64) throw BudgetExceeded("rainbow_matching limited to 64 hosts");
    if (!search(search, 0, full_mask(n))) return std::nullopt;
    MatchingWitness w;
    for (std::size_t i = 0; i < hosts.size(); ++i) w.copies.push_back(make_copy(i, chosen[i], finders[i].embedding_in(chosen[i])));
    return w;
}

bool validate_witness(const MatchingWitness& w, std::span<const Hypergraph> hosts, std::span<const Hypergraph> patterns) {
    std::vector<Vertex> seen;
    for (const auto& c : w.copies) {
        const Hypergraph& h = hosts.size() == 1 ? hosts[0] : hosts[c.host];
        const Hypergraph& f = patterns.size() == 1 ? patterns[0] : patterns[c.host];
        if (c.embedding.size() != f.n()) return false;
        std::vector<Vertex> image = c.embedding;
        std::sort(image.begin(), image.end());
        if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
        if (image != c.vertices) return false;
        for (std::size_t i = 0; i < f.size(); ++i) {
            std::vector<Vertex> e;
            for (Vertex v : f.edge(i)) e.push_back(c.embedding[v]);
            std::sort(e.begin(), e.end());
            if (!h.contains(e)) return false;
        }
        seen.insert(seen.end(), image.begin(), image.end());
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

}  // namespace turankit::matching
