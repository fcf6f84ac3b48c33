#include "turankit/hypergraph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "turankit/errors.hpp"

namespace turankit {

// ---- rational helpers -------------------------------------------------------

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        result *= (n - i);
        result /= (i + 1);
    }
    return result;
}

std::int64_t binomial64(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    __int128 result = 1;
    for (std::int64_t i = 0; i < k; ++i) {
        result = result * (n - i) / (i + 1);
    }
    return static_cast<std::int64_t>(result);
}

std::string to_string(const Rational& q) {
    const BigInt num = boost::multiprecision::numerator(q);
    const BigInt den = boost::multiprecision::denominator(q);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InvalidArgument("empty rational");
    try {
        if (auto slash = text.find('/'); slash != std::string::npos) {
            BigInt num(text.substr(0, slash));
            BigInt den(text.substr(slash + 1));
            if (den == 0) throw InvalidArgument("zero denominator in '" + text + "'");
            return Rational(num, den);
        }
        if (auto dot = text.find('.'); dot != std::string::npos) {
            std::string whole = text.substr(0, dot);
            std::string frac = text.substr(dot + 1);
            bool negative = !whole.empty() && whole[0] == '-';
            if (negative || (!whole.empty() && whole[0] == '+')) whole = whole.substr(1);
            if (whole.empty()) whole = "0";
            if (frac.empty()) frac = "0";
            if (frac.find_first_not_of("0123456789") != std::string::npos)
                throw InvalidArgument("bad decimal '" + text + "'");
            BigInt scale = 1;
            for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
            Rational value(BigInt(whole) * scale + BigInt(frac), scale);
            return negative ? Rational(-value) : value;
        }
        return Rational(BigInt(text));
    } catch (const InvalidArgument&) {
        throw;
    } catch (const std::exception&) {
        throw InvalidArgument("cannot parse rational '" + text + "'");
    }
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

// ---- Hypergraph -------------------------------------------------------------

namespace {

bool edge_less(std::span<const Vertex> a, std::span<const Vertex> b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

Hypergraph::Hypergraph(std::size_t n, std::size_t r, std::vector<Edge> edges) : n_(n), r_(r) {
    if (r == 0) throw InvalidArgument("uniformity must be at least 1");
    for (auto& e : edges) {
        if (e.size() != r) {
            throw InvalidArgument("edge has " + std::to_string(e.size()) + " vertices, expected " +
                                  std::to_string(r));
        }
        std::sort(e.begin(), e.end());
        if (std::adjacent_find(e.begin(), e.end()) != e.end())
            throw InvalidArgument("edge repeats a vertex");
        if (e.back() >= n)
            throw InvalidArgument("vertex " + std::to_string(e.back()) + " out of range for n=" +
                                  std::to_string(n));
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    flat_.reserve(edges.size() * r);
    for (const auto& e : edges) flat_.insert(flat_.end(), e.begin(), e.end());
}

Hypergraph Hypergraph::from_sorted_flat(std::size_t n, std::size_t r, std::vector<Vertex> flat) {
    if (r == 0) throw InvalidArgument("uniformity must be at least 1");
    if (flat.size() % r != 0) throw InvalidArgument("flat edge array not a multiple of r");
    Hypergraph h;
    h.n_ = n;
    h.r_ = r;
    h.flat_ = std::move(flat);
    return h;
}

std::vector<Edge> Hypergraph::edges() const {
    std::vector<Edge> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        auto e = edge(i);
        out.emplace_back(e.begin(), e.end());
    }
    return out;
}

bool Hypergraph::contains(std::span<const Vertex> e) const {
    if (e.size() != r_) return false;
    std::size_t lo = 0, hi = size();
    while (lo < hi) {
        std::size_t mid = (lo + hi) / 2;
        auto m = edge(mid);
        if (edge_less(m, e)) {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    return lo < size() && std::equal(e.begin(), e.end(), edge(lo).begin());
}

Hypergraph Hypergraph::relabeled(std::span<const Vertex> perm) const {
    if (perm.size() != n_) throw InvalidArgument("permutation size does not match vertex count");
    std::vector<Edge> out;
    out.reserve(size());
    for (std::size_t i = 0; i < size(); ++i) {
        Edge e;
        e.reserve(r_);
        for (Vertex v : edge(i)) e.push_back(perm[v]);
        out.push_back(std::move(e));
    }
    return Hypergraph(n_, r_, std::move(out));
}

Hypergraph Hypergraph::with_edge(std::span<const Vertex> e) const {
    auto all = edges();
    all.emplace_back(e.begin(), e.end());
    return Hypergraph(n_, r_, std::move(all));
}

Hypergraph Hypergraph::without_edge(std::span<const Vertex> e) const {
    std::vector<Vertex> flat;
    flat.reserve(flat_.size());
    Edge key(e.begin(), e.end());
    std::sort(key.begin(), key.end());
    for (std::size_t i = 0; i < size(); ++i) {
        auto f = edge(i);
        if (std::equal(f.begin(), f.end(), key.begin(), key.end())) continue;
        flat.insert(flat.end(), f.begin(), f.end());
    }
    return from_sorted_flat(n_, r_, std::move(flat));
}

// ---- constructions ----------------------------------------------------------

Hypergraph complete(std::size_t n, std::size_t r) {
    if (r == 0) throw InvalidArgument("uniformity must be at least 1");
    std::vector<Vertex> flat;
    for_each_subset(n, r, [&](std::span<const Vertex> s) { flat.insert(flat.end(), s.begin(), s.end()); });
    return Hypergraph::from_sorted_flat(n, r, std::move(flat));
}

Hypergraph empty_graph(std::size_t n, std::size_t r) { return Hypergraph(n, r, std::vector<Edge>{}); }

Hypergraph join(std::size_t t, const Hypergraph& g) {
    if (t == 0) return g;
    const std::size_t n = t + g.n();
    const std::size_t r = g.r();
    std::vector<Vertex> flat;
    // Every r-set meeting the apex set {0..t-1}, then G's edges shifted past it.
    for_each_subset(n, r, [&](std::span<const Vertex> s) {
        if (s[0] < t) flat.insert(flat.end(), s.begin(), s.end());
    });
    std::vector<Edge> all;
    all.reserve(flat.size() / r + g.size());
    for (std::size_t i = 0; i < flat.size(); i += r) all.emplace_back(flat.begin() + i, flat.begin() + i + r);
    for (std::size_t i = 0; i < g.size(); ++i) {
        Edge e;
        for (Vertex v : g.edge(i)) e.push_back(static_cast<Vertex>(v + t));
        all.push_back(std::move(e));
    }
    return Hypergraph(n, r, std::move(all));
}

Hypergraph general_join(const Hypergraph& g, const Hypergraph& h) {
    if (g.n() == 0) return h;
    if (h.n() == 0) return g;
    if (g.r() != h.r()) throw InvalidArgument("general_join: uniformities differ");
    const std::size_t r = g.r();
    const std::size_t n = g.n() + h.n();
    const auto split = static_cast<Vertex>(g.n());
    std::vector<Edge> all;
    for_each_subset(n, r, [&](std::span<const Vertex> s) {
        if (s.front() < split && s.back() >= split) all.emplace_back(s.begin(), s.end());
    });
    for (std::size_t i = 0; i < g.size(); ++i) all.emplace_back(g.edge(i).begin(), g.edge(i).end());
    for (std::size_t i = 0; i < h.size(); ++i) {
        Edge e;
        for (Vertex v : h.edge(i)) e.push_back(v + split);
        all.push_back(std::move(e));
    }
    return Hypergraph(n, r, std::move(all));
}

Hypergraph disjoint_union(std::span<const std::pair<Hypergraph, std::size_t>> parts) {
    std::size_t r = 0;
    std::size_t n = 0;
    std::vector<Edge> all;
    for (const auto& [g, mult] : parts) {
        if (r == 0) r = g.r();
        if (g.r() != r) throw InvalidArgument("disjoint_union: uniformities differ");
        for (std::size_t copy = 0; copy < mult; ++copy) {
            for (std::size_t i = 0; i < g.size(); ++i) {
                Edge e;
                for (Vertex v : g.edge(i)) e.push_back(static_cast<Vertex>(v + n));
                all.push_back(std::move(e));
            }
            n += g.n();
        }
    }
    return Hypergraph(n, r == 0 ? 1 : r, std::move(all));
}

Hypergraph induced(const Hypergraph& h, std::span<const Vertex> subset) {
    std::vector<Vertex> sorted(subset.begin(), subset.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    constexpr Vertex kAbsent = static_cast<Vertex>(-1);
    std::vector<Vertex> index(h.n(), kAbsent);
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] >= h.n()) throw InvalidArgument("induced: vertex out of range");
        index[sorted[i]] = static_cast<Vertex>(i);
    }
    // Order-preserving relabeling keeps lexicographic edge order.
    std::vector<Vertex> flat;
    for (std::size_t i = 0; i < h.size(); ++i) {
        auto e = h.edge(i);
        if (std::all_of(e.begin(), e.end(), [&](Vertex v) { return index[v] != kAbsent; })) {
            for (Vertex v : e) flat.push_back(index[v]);
        }
    }
    return Hypergraph::from_sorted_flat(sorted.size(), h.r(), std::move(flat));
}

Hypergraph remove_vertices(const Hypergraph& h, std::span<const Vertex> removed) {
    std::vector<bool> drop(h.n(), false);
    for (Vertex v : removed) {
        if (v >= h.n()) throw InvalidArgument("remove_vertices: vertex out of range");
        drop[v] = true;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < h.n(); ++v)
        if (!drop[v]) keep.push_back(v);
    return induced(h, keep);
}

Hypergraph link(const Hypergraph& h, Vertex v) {
    if (v >= h.n()) throw InvalidArgument("link: vertex out of range");
    if (h.r() < 2) throw InvalidArgument("link: uniformity must be at least 2");
    std::vector<Edge> out;
    for (std::size_t i = 0; i < h.size(); ++i) {
        auto e = h.edge(i);
        if (std::find(e.begin(), e.end(), v) == e.end()) continue;
        Edge rest;
        for (Vertex u : e) {
            if (u != v) rest.push_back(u < v ? u : u - 1);
        }
        out.push_back(std::move(rest));
    }
    return Hypergraph(h.n() - 1, h.r() - 1, std::move(out));
}

DegreeProfile degrees(const Hypergraph& h) {
    DegreeProfile p;
    p.degrees.assign(h.n(), 0);
    for (Vertex v : h.flat()) ++p.degrees[v];
    if (h.n() > 0) {
        p.min = *std::min_element(p.degrees.begin(), p.degrees.end());
        p.max = *std::max_element(p.degrees.begin(), p.degrees.end());
        p.average = Rational(static_cast<std::int64_t>(h.r() * h.size()), static_cast<std::int64_t>(h.n()));
    }
    return p;
}

}  // namespace turankit
