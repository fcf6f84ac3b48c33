#include "turankit/pattern.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>

#include "json.hpp"

#include "turankit/errors.hpp"

namespace turankit::patterns {

namespace {

std::int64_t factorial(std::size_t m) {
    std::int64_t f = 1;
    for (std::size_t i = 2; i <= m; ++i) f *= static_cast<std::int64_t>(i);
    return f;
}

// Multiplicity of each part in every multiset, as dense k-vectors.
std::vector<std::vector<std::uint32_t>> dense_multiplicities(const Pattern& p) {
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(p.multisets().size());
    for (const auto& y : p.multisets()) {
        std::vector<std::uint32_t> mult(p.k(), 0);
        for (auto [part, m] : y) mult[part] = m;
        out.push_back(std::move(mult));
    }
    return out;
}

}  // namespace

Pattern::Pattern(std::size_t k, std::size_t r, std::vector<std::vector<Part>> multisets) : k_(k), r_(r) {
    if (r == 0) throw InvalidArgument("pattern uniformity must be at least 1");
    for (auto& y : multisets) {
        if (y.size() != r)
            throw InvalidArgument("multiset has " + std::to_string(y.size()) + " elements, expected " + std::to_string(r));
        std::sort(y.begin(), y.end());
        Multiset ms;
        for (Part part : y) {
            if (part >= k) throw InvalidArgument("multiset refers to part " + std::to_string(part + 1) + " > k");
            if (!ms.empty() && ms.back().part == part) {
                ++ms.back().mult;
            } else {
                ms.push_back({part, 1});
            }
        }
        multisets_.push_back(std::move(ms));
    }
    std::sort(multisets_.begin(), multisets_.end());
    multisets_.erase(std::unique(multisets_.begin(), multisets_.end()), multisets_.end());
}

std::vector<std::vector<Part>> Pattern::expanded() const {
    std::vector<std::vector<Part>> out;
    for (const auto& y : multisets_) {
        std::vector<Part> parts;
        for (auto [part, m] : y) parts.insert(parts.end(), m, part);
        out.push_back(std::move(parts));
    }
    return out;
}

Pattern from_hypergraph(const Hypergraph& h) {
    std::vector<std::vector<Part>> sets;
    for (std::size_t i = 0; i < h.size(); ++i) sets.emplace_back(h.edge(i).begin(), h.edge(i).end());
    return Pattern(h.n(), h.r(), std::move(sets));
}

Pattern complete_pattern(std::size_t parts, std::size_t r) {
    std::vector<std::vector<Part>> sets;
    for_each_subset(parts, r, [&](std::span<const Vertex> s) { sets.emplace_back(s.begin(), s.end()); });
    return Pattern(parts, r, std::move(sets));
}

Multiset profile(std::span<const Vertex> edge, std::span<const Part> assignment) {
    std::vector<Part> parts;
    for (Vertex v : edge) parts.push_back(assignment[v]);
    std::sort(parts.begin(), parts.end());
    Multiset ms;
    for (Part part : parts) {
        if (!ms.empty() && ms.back().part == part) {
            ++ms.back().mult;
        } else {
            ms.push_back({part, 1});
        }
    }
    return ms;
}

Hypergraph blowup(const Pattern& p, const Composition& c) {
    if (c.size() != p.k()) throw InvalidArgument("composition has " + std::to_string(c.size()) + " parts, pattern has " + std::to_string(p.k()));
    std::vector<std::size_t> start(p.k() + 1, 0);
    for (std::size_t i = 0; i < p.k(); ++i) start[i + 1] = start[i] + c[i];
    const std::size_t n = start[p.k()];
    std::vector<Edge> edges;
    for (const auto& y : p.multisets()) {
        // Cartesian product over the parts of Y of m_i-subsets of part i.
        std::vector<std::vector<std::vector<Vertex>>> choices;
        bool possible = true;
        for (auto [part, m] : y) {
            std::vector<std::vector<Vertex>> subsets;
            for_each_subset(c[part], m, [&](std::span<const Vertex> s) {
                std::vector<Vertex> shifted;
                for (Vertex v : s) shifted.push_back(static_cast<Vertex>(v + start[part]));
                subsets.push_back(std::move(shifted));
            });
            if (subsets.empty()) possible = false;
            choices.push_back(std::move(subsets));
        }
        if (!possible) continue;
        std::vector<std::size_t> idx(choices.size(), 0);
        while (true) {
            Edge e;
            for (std::size_t j = 0; j < choices.size(); ++j) {
                const auto& s = choices[j][idx[j]];
                e.insert(e.end(), s.begin(), s.end());
            }
            edges.push_back(std::move(e));
            std::size_t j = choices.size();
            while (j > 0) {
                --j;
                if (++idx[j] < choices[j].size()) break;
                idx[j] = 0;
                if (j == 0) {
                    j = choices.size() + 1;
                    break;
                }
            }
            if (j == choices.size() + 1 || choices.empty()) break;
        }
    }
    return Hypergraph(n, p.r(), std::move(edges));
}

std::int64_t blowup_count(const Pattern& p, const Composition& c) {
    if (c.size() != p.k()) throw InvalidArgument("composition size does not match pattern");
    std::int64_t total = 0;
    for (const auto& y : p.multisets()) {
        std::int64_t term = 1;
        for (auto [part, m] : y) {
            term *= binomial64(static_cast<std::int64_t>(c[part]), m);
            if (term == 0) break;
        }
        total += term;
    }
    return total;
}

// ---- Lambda(P, n) ------------------------------------------------------------

namespace {

constexpr std::size_t kMaxLambdaParts = 6;
constexpr std::size_t kMaxLambdaN = 200;
constexpr std::uint64_t kMaxLambdaNodes = 400'000'000;

class CompositionSearch {
public:
    CompositionSearch(const Pattern& p, std::size_t n)
        : p_(p), n_(n), k_(p.k()), mult_(dense_multiplicities(p)), sizes_(p.k(), 0) {
        for (const auto& y : p.multisets()) {
            std::vector<double> inv_fact;
            for (auto [part, m] : y) inv_fact.push_back(1.0 / static_cast<double>(factorial(m)));
            inv_factorials_.push_back(std::move(inv_fact));
        }
    }

    LambdaN run() {
        best_value_ = heuristic_value() - 1;
        recurse(0, n_);
        return {best_value_, best_};
    }

private:
    std::int64_t evaluate(const Composition& c) const { return blowup_count(p_, c); }

    // Hill climbing from the balanced composition; only seeds the bound.
    std::int64_t heuristic_value() const {
        Composition c(k_, n_ / k_);
        for (std::size_t i = 0; i < n_ % k_; ++i) ++c[i];
        std::int64_t value = evaluate(c);
        bool improved = true;
        while (improved) {
            improved = false;
            for (std::size_t a = 0; a < k_; ++a) {
                for (std::size_t b = 0; b < k_; ++b) {
                    if (a == b || c[a] == 0) continue;
                    --c[a];
                    ++c[b];
                    std::int64_t v = evaluate(c);
                    if (v > value) {
                        value = v;
                        improved = true;
                    } else {
                        ++c[a];
                        --c[b];
                    }
                }
            }
        }
        return value;
    }

    // Upper bound on any completion of sizes_[0..fixed) with `remaining`
    // vertices spread over the other parts: C(x, m) <= x^m / m!, and
    // prod x_i^{m_i} under sum x_i = R peaks at x_i = R m_i / s.
    double bound(std::size_t fixed, std::size_t remaining) const {
        double total = 0;
        for (std::size_t y = 0; y < mult_.size(); ++y) {
            double term = 1;
            std::size_t s = 0;
            for (std::size_t i = 0; i < k_ && term > 0; ++i) {
                const auto m = mult_[y][i];
                if (m == 0) continue;
                if (i < fixed) {
                    term *= static_cast<double>(binomial64(static_cast<std::int64_t>(sizes_[i]), m));
                } else {
                    s += m;
                }
            }
            if (term == 0) continue;
            if (s > 0) {
                std::size_t idx = 0;
                for (auto [part, m] : p_.multisets()[y]) {
                    const double f = inv_factorials_[y][idx++];
                    if (part < fixed) continue;
                    const double x = static_cast<double>(remaining) * m / static_cast<double>(s);
                    term *= std::pow(x, m) * f;
                }
            }
            total += term;
        }
        return total;
    }

    void recurse(std::size_t part, std::size_t remaining) {
        if (++nodes_ > kMaxLambdaNodes) throw BudgetExceeded("lambda_n: node budget exhausted");
        if (part + 1 >= k_) {
            sizes_[k_ - 1] = remaining;
            const std::int64_t value = evaluate(sizes_);
            if (value > best_value_) {
                best_value_ = value;
                best_ = sizes_;
            }
            return;
        }
        for (std::size_t s = remaining + 1; s-- > 0;) {
            sizes_[part] = s;
            // Later compositions are lexicographically smaller, so ties never
            // replace the incumbent: prune unless the bound beats it.
            const double b = bound(part + 1, remaining - s);
            if (b * (1 + 1e-12) + 1e-9 < static_cast<double>(best_value_) + 1) continue;
            recurse(part + 1, remaining - s);
        }
    }

    const Pattern& p_;
    std::size_t n_;
    std::size_t k_;
    std::vector<std::vector<std::uint32_t>> mult_;
    std::vector<std::vector<double>> inv_factorials_;
    Composition sizes_;
    Composition best_;
    std::int64_t best_value_ = 0;
    std::uint64_t nodes_ = 0;
};

}  // namespace

LambdaN lambda_n(const Pattern& p, std::size_t n) {
    if (p.k() > kMaxLambdaParts || n > kMaxLambdaN)
        throw BudgetExceeded("lambda_n: budget is k <= 6 and n <= 200");
    if (p.k() == 0) return {0, {}};
    return CompositionSearch(p, n).run();
}

// ---- density polynomial ----------------------------------------------------

Rational density_poly_eval(const Pattern& p, std::span<const Rational> x) {
    if (x.size() != p.k()) throw InvalidArgument("point dimension does not match pattern");
    Rational sum = 0;
    for (const Rational& xi : x) {
        if (xi < 0) throw InvalidArgument("point has a negative coordinate");
        sum += xi;
    }
    if (p.k() > 0 && sum != 1) throw InvalidArgument("point coordinates must sum to 1");
    const BigInt r_fact = factorial(p.r());
    Rational total = 0;
    for (const auto& y : p.multisets()) {
        Rational term = Rational(r_fact);
        for (auto [part, m] : y) {
            term /= factorial(m);
            for (std::uint32_t j = 0; j < m; ++j) term *= x[part];
        }
        total += term;
    }
    return total;
}

double density_poly_eval(const Pattern& p, std::span<const double> x) {
    const double r_fact = static_cast<double>(factorial(p.r()));
    double total = 0;
    for (const auto& y : p.multisets()) {
        double term = r_fact;
        for (auto [part, m] : y) term *= std::pow(x[part], m) / static_cast<double>(factorial(m));
        total += term;
    }
    return total;
}

Pattern remove_part(const Pattern& p, std::size_t i) {
    if (i >= p.k()) throw InvalidArgument("remove_part: part out of range");
    std::vector<std::vector<Part>> kept;
    for (const auto& y : p.expanded()) {
        if (std::find(y.begin(), y.end(), static_cast<Part>(i)) != y.end()) continue;
        std::vector<Part> relabeled;
        for (Part part : y) relabeled.push_back(part > i ? part - 1 : part);
        kept.push_back(std::move(relabeled));
    }
    return Pattern(p.k() - 1, p.r(), std::move(kept));
}

// ---- subconstruction search -------------------------------------------------

namespace {

constexpr std::size_t kMaxSubconstructionParts = 4;
constexpr std::size_t kMaxSubconstructionVertices = 24;

class AssignmentSearch {
public:
    AssignmentSearch(const Hypergraph& h, const Pattern& p, bool exact)
        : h_(h), p_(p), exact_(exact), base_(static_cast<std::uint32_t>(p.r() + 1)), incident_(h.n()) {
        // Profiles are encoded as base-(r+1) numbers of per-part counts.
        std::size_t codes = 1;
        for (std::size_t i = 0; i < p.k(); ++i) codes *= base_;
        allowed_partial_.assign(codes, false);
        in_pattern_.assign(codes, false);
        for (const auto& y : p.multisets()) {
            std::vector<std::uint32_t> mult(p.k(), 0);
            for (auto [part, m] : y) mult[part] = m;
            in_pattern_[encode(mult)] = true;
            mark_submultisets(mult, 0, std::vector<std::uint32_t>(p.k(), 0));
        }
        for (std::size_t e = 0; e < h.size(); ++e)
            for (Vertex v : h.edge(e)) incident_[v].push_back(e);
        order_.resize(h.n());
        std::iota(order_.begin(), order_.end(), Vertex{0});
        std::stable_sort(order_.begin(), order_.end(),
                         [&](Vertex a, Vertex b) { return incident_[a].size() > incident_[b].size(); });
        assignment_.assign(h.n(), kUnassigned);
    }

    std::optional<std::vector<Part>> run() {
        if (h_.r() != p_.r()) return std::nullopt;
        if (p_.k() == 0) {
            if (h_.n() == 0) return std::vector<Part>{};
            return std::nullopt;
        }
        if (extend(0)) return assignment_;
        return std::nullopt;
    }

private:
    static constexpr Part kUnassigned = static_cast<Part>(-1);

    std::size_t encode(const std::vector<std::uint32_t>& counts) const {
        std::size_t code = 0;
        for (std::size_t i = counts.size(); i-- > 0;) code = code * base_ + counts[i];
        return code;
    }

    void mark_submultisets(const std::vector<std::uint32_t>& full, std::size_t i, std::vector<std::uint32_t> cur) {
        if (i == full.size()) {
            allowed_partial_[encode(cur)] = true;
            return;
        }
        for (std::uint32_t c = 0; c <= full[i]; ++c) {
            cur[i] = c;
            mark_submultisets(full, i + 1, cur);
        }
    }

    bool edges_ok(Vertex v) const {
        std::vector<std::uint32_t> counts(p_.k());
        for (std::size_t e : incident_[v]) {
            std::fill(counts.begin(), counts.end(), 0);
            for (Vertex u : h_.edge(e)) {
                if (assignment_[u] != kUnassigned) ++counts[assignment_[u]];
            }
            if (!allowed_partial_[encode(counts)]) return false;
        }
        return true;
    }

    // Every fully assigned r-set through v whose profile is in E must be an edge.
    bool non_edges_ok(Vertex v) const {
        std::vector<Vertex> assigned;
        for (Vertex u = 0; u < h_.n(); ++u)
            if (u != v && assignment_[u] != kUnassigned) assigned.push_back(u);
        if (assigned.size() + 1 < p_.r()) return true;
        bool ok = true;
        std::vector<std::uint32_t> counts(p_.k());
        std::vector<Vertex> set(p_.r());
        for_each_subset(assigned.size(), p_.r() - 1, [&](std::span<const Vertex> idx) {
            if (!ok) return;
            std::fill(counts.begin(), counts.end(), 0);
            ++counts[assignment_[v]];
            for (std::size_t j = 0; j < idx.size(); ++j) {
                set[j] = assigned[idx[j]];
                ++counts[assignment_[set[j]]];
            }
            if (!in_pattern_[encode(counts)]) return;
            set[p_.r() - 1] = v;
            std::vector<Vertex> sorted = set;
            std::sort(sorted.begin(), sorted.end());
            if (!h_.contains(sorted)) ok = false;
        });
        return ok;
    }

    bool extend(std::size_t pos) {
        if (pos == order_.size()) return true;
        const Vertex v = order_[pos];
        for (Part part = 0; part < p_.k(); ++part) {
            assignment_[v] = part;
            if (edges_ok(v) && (!exact_ || non_edges_ok(v)) && extend(pos + 1)) return true;
        }
        assignment_[v] = kUnassigned;
        return false;
    }

    const Hypergraph& h_;
    const Pattern& p_;
    bool exact_;
    std::uint32_t base_;
    std::vector<std::vector<std::size_t>> incident_;
    std::vector<bool> allowed_partial_;
    std::vector<bool> in_pattern_;
    std::vector<Vertex> order_;
    std::vector<Part> assignment_;
};

void check_assignment_budget(const Hypergraph& h, const Pattern& p) {
    if (p.k() > kMaxSubconstructionParts || h.n() > kMaxSubconstructionVertices)
        throw BudgetExceeded("subconstruction search budget is k <= 4 and n <= 24");
}

}  // namespace

std::optional<std::vector<Part>> is_subconstruction(const Hypergraph& h, const Pattern& p) {
    check_assignment_budget(h, p);
    return AssignmentSearch(h, p, false).run();
}

std::optional<std::vector<Part>> find_construction(const Hypergraph& h, const Pattern& p) {
    check_assignment_budget(h, p);
    return AssignmentSearch(h, p, true).run();
}

// ---- .pat I/O -----------------------------------------------------------------

Pattern parse_pattern(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("pattern JSON: ") + e.what());
    }
    if (!doc.is_object()) throw InvalidArgument("pattern JSON must be an object");
    for (const auto& [key, value] : doc.items()) {
        if (key != "k" && key != "r" && key != "multisets") throw InvalidArgument("pattern JSON: unknown field '" + key + "'");
    }
    if (!doc.contains("k") || !doc["k"].is_number_integer() || doc["k"].get<long long>() < 0)
        throw InvalidArgument("pattern JSON: 'k' must be a nonnegative integer");
    if (!doc.contains("r") || !doc["r"].is_number_integer() || doc["r"].get<long long>() < 1)
        throw InvalidArgument("pattern JSON: 'r' must be a positive integer");
    if (!doc.contains("multisets") || !doc["multisets"].is_array())
        throw InvalidArgument("pattern JSON: 'multisets' must be an array");
    const auto k = doc["k"].get<std::size_t>();
    const auto r = doc["r"].get<std::size_t>();
    std::vector<std::vector<Part>> sets;
    for (const auto& y : doc["multisets"]) {
        if (!y.is_array()) throw InvalidArgument("pattern JSON: each multiset must be an array");
        std::vector<Part> parts;
        for (const auto& part : y) {
            if (!part.is_number_integer() || part.get<long long>() < 1 || part.get<std::size_t>() > k)
                throw InvalidArgument("pattern JSON: parts are integers in 1..k");
            parts.push_back(part.get<Part>() - 1);
        }
        sets.push_back(std::move(parts));
    }
    return Pattern(k, r, std::move(sets));
}

Pattern load_pattern(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path.string());
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_pattern(buffer.str());
    } catch (const InvalidArgument& e) {
        throw InvalidArgument(path.string() + ": " + e.what());
    }
}

std::string format_pattern(const Pattern& p) {
    nlohmann::ordered_json doc;
    doc["k"] = p.k();
    doc["r"] = p.r();
    doc["multisets"] = nlohmann::ordered_json::array();
    for (const auto& y : p.expanded()) {
        nlohmann::ordered_json parts = nlohmann::ordered_json::array();
        for (Part part : y) parts.push_back(part + 1);
        doc["multisets"].push_back(parts);
    }
    return doc.dump();
}

}  // namespace turankit::patterns
