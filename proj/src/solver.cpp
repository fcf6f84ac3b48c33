#include "turankit/solver.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <list>
#include <map>
#include <mutex>
#include <set>
#include <unordered_map>

#include "turankit/canonical.hpp"
#include "turankit/errors.hpp"

namespace turankit::solver {

namespace {

// Visited set over canonical edge lists, least-recently-used eviction.
class VisitedSet {
public:
    explicit VisitedSet(std::size_t budget) : budget_(budget) {}

    /// True when the key was not present (and is now inserted).
    bool insert(std::string key) {
        if (auto it = index_.find(key); it != index_.end()) {
            order_.splice(order_.begin(), order_, it->second);
            return false;
        }
        bytes_ += cost(key);
        order_.push_front(std::move(key));
        index_.emplace(order_.front(), order_.begin());
        while (bytes_ > budget_ && order_.size() > 1) {
            bytes_ -= cost(order_.back());
            index_.erase(order_.back());
            order_.pop_back();
        }
        return true;
    }

private:
    static std::size_t cost(const std::string& key) { return 2 * key.size() + 128; }

    std::size_t budget_;
    std::size_t bytes_ = 0;
    std::list<std::string> order_;
    std::unordered_map<std::string, std::list<std::string>::iterator> index_;
};

std::string memo_key(const Hypergraph& canon) {
    std::string key;
    key.reserve(canon.flat().size() + 1);
    key.push_back(static_cast<char>(canon.n()));
    for (Vertex v : canon.flat()) key.push_back(static_cast<char>(v));
    return key;
}

std::vector<Edge> realization_edges(const ForbiddenConfig& config, const matching::MatchingWitness& w) {
    std::vector<Edge> edges;
    for (const auto& copy : w.copies) {
        const Hypergraph& f = config.families()[copy.host].first;
        for (std::size_t i = 0; i < f.size(); ++i) {
            Edge e;
            for (Vertex v : f.edge(i)) e.push_back(copy.embedding[v]);
            std::sort(e.begin(), e.end());
            edges.push_back(std::move(e));
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

Hypergraph remove_edges(const Hypergraph& g, const std::vector<Edge>& gone) {
    std::vector<Vertex> flat;
    flat.reserve(g.flat().size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto e = g.edge(i);
        Edge key(e.begin(), e.end());
        if (std::binary_search(gone.begin(), gone.end(), key)) continue;
        flat.insert(flat.end(), e.begin(), e.end());
    }
    return Hypergraph::from_sorted_flat(g.n(), g.r(), std::move(flat));
}

// Exact records computed in this process, keyed by (config hash, n).
std::mutex g_memo_mutex;
std::map<std::pair<std::uint64_t, std::size_t>, TuranRecord> g_memo;

std::optional<TuranRecord> memo_get(std::uint64_t hash, std::size_t n, bool need_enumerated) {
    std::lock_guard lock(g_memo_mutex);
    auto it = g_memo.find({hash, n});
    if (it == g_memo.end() || (need_enumerated && !it->second.enumerated)) return std::nullopt;
    return it->second;
}

void memo_put(const TuranRecord& rec) {
    if (rec.status != Status::Exact) return;
    std::lock_guard lock(g_memo_mutex);
    auto& slot = g_memo[{rec.config_hash, rec.n}];
    if (!slot.enumerated || rec.enumerated) slot = rec;
}

class Search {
public:
    Search(std::size_t n, const ForbiddenConfig& config, const SolverOptions& options, bool enumerate)
        : n_(n), config_(config), options_(options), enumerate_(enumerate), visited_(options.memo_bytes) {}

    void set_previous(std::int64_t ex_prev) { ex_prev_ = ex_prev; }

    void offer_seed(const Hypergraph& seed) {
        const auto e = static_cast<std::int64_t>(seed.size());
        if (e < best_) return;
        record(canonical_form(seed).graph);
    }

    TuranRecord run() {
        const auto start = std::chrono::steady_clock::now();
        TuranRecord rec;
        rec.n = n_;
        rec.r = config_.r();
        rec.config_hash = config_.hash();
        rec.enumerated = enumerate_;
        rec.seeded_lower = best_ >= 0 ? best_ : -1;

        Hypergraph root = complete(n_, config_.r());
        visited_.insert(memo_key(root));
        auto w = config_.violation(root);
        std::int64_t root_upper = static_cast<std::int64_t>(root.size());
        if (!w) {
            record(root);
        } else {
            root_upper = upper_bound(root, *w, -1);
            if (!pruned(root_upper)) expand(root, *w);
        }

        rec.nodes = nodes_;
        rec.elapsed_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        rec.value = best_;
        rec.extremal = std::move(extremal_);
        if (aborted_) {
            rec.status = Status::Bounds;
            rec.upper = std::max(root_upper, best_);
            rec.enumerated = false;
        } else {
            rec.status = Status::Exact;
            rec.upper = best_;
        }
        return rec;
    }

private:
    bool pruned(std::int64_t upper) const { return enumerate_ ? upper < best_ : upper <= best_; }

    void record(const Hypergraph& canon) {
        const auto e = static_cast<std::int64_t>(canon.size());
        if (e > best_) {
            best_ = e;
            extremal_.clear();
            extremal_keys_.clear();
        }
        if (e == best_ && extremal_keys_.insert(memo_key(canon)).second) extremal_.push_back(canon);
    }

    // Any feasible subgraph of g has at most this many edges. `threshold` lets
    // the packing loop stop as soon as the bound prunes.
    std::int64_t upper_bound(const Hypergraph& g, const matching::MatchingWitness& w, std::int64_t threshold) {
        const auto e = static_cast<std::int64_t>(g.size());
        std::int64_t ub = e;
        if (!options_.use_bounds) return ub;
        const std::size_t r = config_.r();
        if (ex_prev_ >= 0 && n_ > r) {
            // Deleting v from a feasible H leaves a feasible graph inside g - v.
            const auto prof = degrees(g);
            std::int64_t sum = 0;
            std::int64_t vertex_bound = ub;
            for (std::int64_t d : prof.degrees) {
                const std::int64_t rest = std::min(ex_prev_, e - d);
                sum += rest;
                vertex_bound = std::min(vertex_bound, rest + d);
            }
            ub = std::min({ub, vertex_bound, sum / static_cast<std::int64_t>(n_ - r)});
        }
        if (threshold >= 0 && (enumerate_ ? ub < threshold : ub <= threshold)) return ub;
        // Edge-disjoint violations each cost at least one edge.
        std::int64_t pack = 1;
        Hypergraph work = remove_edges(g, realization_edges(config_, w));
        while (true) {
            if (threshold >= 0) {
                const std::int64_t cur = std::min(ub, e - pack);
                if (enumerate_ ? cur < threshold : cur <= threshold) break;
            }
            auto next = config_.violation(work);
            if (!next) break;
            ++pack;
            work = remove_edges(work, realization_edges(config_, *next));
        }
        return std::min(ub, e - pack);
    }

    void expand(const Hypergraph& g, const matching::MatchingWitness& w) {
        for (const Edge& x : realization_edges(config_, w)) {
            if (aborted_) return;
            const auto child_edges = static_cast<std::int64_t>(g.size()) - 1;
            if (pruned(child_edges)) return;
            auto canon = canonical_form(g.without_edge(x));
            if (!visited_.insert(memo_key(canon.graph))) continue;
            visit(canon.graph);
        }
    }

    void visit(const Hypergraph& g) {
        if (++nodes_ > options_.node_limit) {
            aborted_ = true;
            return;
        }
        auto w = config_.violation(g);
        if (!w) {
            record(g);
            return;
        }
        if (pruned(upper_bound(g, *w, best_))) return;
        expand(g, *w);
    }

    std::size_t n_;
    const ForbiddenConfig& config_;
    const SolverOptions& options_;
    bool enumerate_;
    VisitedSet visited_;
    std::int64_t ex_prev_ = -1;
    std::int64_t best_ = -1;
    std::vector<Hypergraph> extremal_;
    std::set<std::string> extremal_keys_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
};

// Adds a vertex to g and greedily attaches edges through it, trying several
// starting points in the candidate order.
Hypergraph extend_greedily(const Hypergraph& g, const ForbiddenConfig& config) {
    const std::size_t n = g.n() + 1;
    const std::size_t r = g.r();
    const Vertex fresh = static_cast<Vertex>(g.n());
    std::vector<Edge> candidates;
    for_each_subset(g.n(), r - 1, [&](std::span<const Vertex> s) {
        Edge e(s.begin(), s.end());
        e.push_back(fresh);
        candidates.push_back(std::move(e));
    });
    Hypergraph best(n, r, g.edges());
    const std::size_t tries = std::min<std::size_t>(candidates.size(), 16);
    for (std::size_t t = 0; t < tries; ++t) {
        const std::size_t start = t * candidates.size() / std::max<std::size_t>(tries, 1);
        std::vector<Edge> edges = g.edges();
        for (std::size_t j = 0; j < candidates.size(); ++j) {
            edges.push_back(candidates[(start + j) % candidates.size()]);
            if (!config.feasible(Hypergraph(n, r, edges))) edges.pop_back();
        }
        Hypergraph h(n, r, std::move(edges));
        if (h.size() > best.size()) best = std::move(h);
    }
    return best;
}

void check_seed(const Hypergraph& seed, std::size_t n, const ForbiddenConfig& config) {
    if (seed.n() != n || seed.r() != config.r())
        throw InvalidArgument("seed must have " + std::to_string(n) + " vertices and uniformity " + std::to_string(config.r()));
    if (!config.feasible(seed)) throw InvalidArgument("seed graph violates the forbidden configuration");
}

bool revalidate(const TuranRecord& rec, const ForbiddenConfig& config) {
    if (rec.status != Status::Exact || rec.extremal.empty()) return false;
    for (const auto& h : rec.extremal) {
        if (h.n() != rec.n || h.r() != config.r()) return false;
        if (static_cast<std::int64_t>(h.size()) != rec.value) return false;
        if (!config.feasible(h)) return false;
    }
    return true;
}

TuranRecord solve(std::size_t n, const ForbiddenConfig& config, const std::optional<Hypergraph>& seed,
                  const SolverOptions& options, bool enumerate) {
    if (seed) check_seed(*seed, n, config);
    if (auto hit = options.use_memo ? memo_get(config.hash(), n, enumerate) : std::nullopt) {
        if (seed) hit->seeded_lower = static_cast<std::int64_t>(seed->size());
        return *hit;
    }
    if (options.cache_dir) {
        if (auto hit = cache_load(*options.cache_dir, config, n); hit && (!enumerate || hit->enumerated)) {
            memo_put(*hit);
            return *hit;
        }
    }

    Search search(n, config, options, enumerate);
    std::int64_t seeded = -1;
    if (seed) {
        search.offer_seed(*seed);
        seeded = static_cast<std::int64_t>(seed->size());
    }
    if (n > config.r() && n >= config.min_vertices()) {
        // The (n-1)-vertex answer feeds the averaging bound and the seed.
        TuranRecord prev = solve(n - 1, config, std::nullopt, options, false);
        if (prev.status == Status::Exact) search.set_previous(prev.value);
        if (options.auto_seed) {
            for (std::size_t i = 0; i < std::min<std::size_t>(prev.extremal.size(), 4); ++i) {
                Hypergraph ext = extend_greedily(prev.extremal[i], config);
                seeded = std::max(seeded, static_cast<std::int64_t>(ext.size()));
                search.offer_seed(ext);
            }
        }
    }
    TuranRecord rec = search.run();
    rec.seeded_lower = seeded;
    if (rec.status == Status::Exact) {
        if (options.use_memo) memo_put(rec);
        if (options.cache_dir) cache_store(*options.cache_dir, rec);
    }
    return rec;
}

}  // namespace

SolverOptions options_from_env() {
    SolverOptions options;
    if (const char* limit = std::getenv("TURANKIT_NODE_LIMIT"); limit && *limit) {
        try {
            options.node_limit = std::stoull(limit);
        } catch (const std::exception&) {
            throw InvalidArgument("TURANKIT_NODE_LIMIT must be a nonnegative integer");
        }
    }
    const char* cache = std::getenv("TURANKIT_CACHE");
    options.cache_dir = std::filesystem::path(cache && *cache ? cache : ".turankit-cache");
    if (const char* threads = std::getenv("TURANKIT_THREADS"); threads && *threads) {
        try {
            options.threads = std::stoull(threads);
        } catch (const std::exception&) {
            throw InvalidArgument("TURANKIT_THREADS must be a nonnegative integer");
        }
    }
    return options;
}

TuranRecord max_edges(std::size_t n, const ForbiddenConfig& config, const std::optional<Hypergraph>& seed,
                      const SolverOptions& options) {
    return solve(n, config, seed, options, false);
}

TuranRecord enumerate_extremal(std::size_t n, const ForbiddenConfig& config, const SolverOptions& options) {
    return solve(n, config, std::nullopt, options, true);
}

const TuranRecord& TuranTable::at(std::size_t n) const {
    if (!has(n)) throw InvalidArgument("table has no row for n = " + std::to_string(n));
    return records[n - n_lo()];
}

Rational TuranTable::delta(std::size_t n) const { return Rational(ex(n) - ex(n - 1)); }

Rational TuranTable::d(std::size_t n) const {
    if (n == 0) return 0;
    return Rational(static_cast<std::int64_t>(r) * ex(n), static_cast<std::int64_t>(n));
}

TuranTable ex_table(const ForbiddenConfig& config, std::size_t n_lo, std::size_t n_hi, const SolverOptions& options,
                    bool enumerate) {
    if (n_lo > n_hi) throw InvalidArgument("ex_table: empty range");
    TuranTable table;
    table.config_hash = config.hash();
    table.r = config.r();
    for (std::size_t n = n_lo; n <= n_hi; ++n) {
        TuranRecord rec = enumerate ? enumerate_extremal(n, config, options) : max_edges(n, config, std::nullopt, options);
        if (rec.status != Status::Exact)
            throw BudgetExceeded("node limit reached at n = " + std::to_string(n) + " (bounds " +
                                 std::to_string(rec.value) + ".." + std::to_string(rec.upper) + ")");
        table.records.push_back(std::move(rec));
    }
    return table;
}

Rational pi_upper(const ForbiddenConfig& config, std::size_t n, const SolverOptions& options) {
    if (n < config.r()) throw InvalidArgument("pi_upper needs n >= r");
    TuranRecord rec = max_edges(n, config, std::nullopt, options);
    return Rational(rec.upper) / Rational(binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(config.r())));
}

bool validate_record(const TuranRecord& rec, const ForbiddenConfig& config) { return revalidate(rec, config); }

}  // namespace turankit::solver
