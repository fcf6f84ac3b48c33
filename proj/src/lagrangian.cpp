#include <algorithm>
#include <cmath>
#include <future>
#include <numeric>
#include <random>
#include <thread>

#include "turankit/errors.hpp"
#include "turankit/pattern.hpp"

namespace turankit::patterns {

namespace {

using Point = std::vector<double>;

double factorial_d(std::uint32_t m) {
    double f = 1;
    for (std::uint32_t i = 2; i <= m; ++i) f *= i;
    return f;
}

Point gradient(const Pattern& p, const Point& x) {
    const double r_fact = factorial_d(static_cast<std::uint32_t>(p.r()));
    Point g(p.k(), 0.0);
    for (const auto& y : p.multisets()) {
        for (std::size_t j = 0; j < y.size(); ++j) {
            double term = r_fact;
            for (std::size_t i = 0; i < y.size(); ++i) {
                const auto [part, m] = y[i];
                if (i == j) {
                    term *= std::pow(x[part], m - 1) / factorial_d(m - 1);
                } else {
                    term *= std::pow(x[part], m) / factorial_d(m);
                }
            }
            g[y[j].part] += term;
        }
    }
    return g;
}

// Euclidean projection onto the probability simplex.
Point project(const Point& v) {
    Point u = v;
    std::sort(u.begin(), u.end(), std::greater<>());
    double cum = 0, theta = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        cum += u[i];
        const double t = (cum - 1) / static_cast<double>(i + 1);
        if (u[i] - t > 0) theta = t;
    }
    Point out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = std::max(v[i] - theta, 0.0);
    return out;
}

Point ascend(const Pattern& p, Point x, double tol) {
    double fx = density_poly_eval(p, std::span<const double>(x));
    double step = 1.0;
    for (int iter = 0; iter < 100000; ++iter) {
        const Point g = gradient(p, x);
        bool accepted = false;
        double moved = 0;
        for (int halvings = 0; halvings < 60; ++halvings) {
            Point trial(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) trial[i] = x[i] + step * g[i];
            trial = project(trial);
            double dir = 0, dist2 = 0;
            for (std::size_t i = 0; i < x.size(); ++i) {
                dir += g[i] * (trial[i] - x[i]);
                dist2 += (trial[i] - x[i]) * (trial[i] - x[i]);
            }
            const double ft = density_poly_eval(p, std::span<const double>(trial));
            if (ft >= fx + 1e-4 * dir) {
                moved = std::sqrt(dist2);
                x = std::move(trial);
                fx = ft;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted || moved < tol) break;
        step = std::min(step * 2, 1e6);
    }
    return x;
}

// Best rational approximation with denominator <= max_den, by convergents.
Rational approximate(double value, std::int64_t max_den) {
    if (value <= 0) return 0;
    std::int64_t h0 = 0, h1 = 1, k0 = 1, k1 = 0;
    double rest = value;
    for (int i = 0; i < 64; ++i) {
        const double a_d = std::floor(rest);
        if (a_d > 1e12) break;
        const auto a = static_cast<std::int64_t>(a_d);
        const std::int64_t k2 = a * k1 + k0;
        if (k2 > max_den) break;
        const std::int64_t h2 = a * h1 + h0;
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
        const double frac = rest - a_d;
        if (frac < 1e-15) break;
        rest = 1 / frac;
    }
    if (k1 == 0) return 0;
    return Rational(h1, k1);
}

// Rational simplex point near x: round all but the largest coordinate, then
// let the largest absorb the remainder.
std::optional<std::vector<Rational>> snap(const Point& x, std::int64_t max_den) {
    const std::size_t big = static_cast<std::size_t>(std::max_element(x.begin(), x.end()) - x.begin());
    std::vector<Rational> q(x.size());
    Rational rest = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i == big) continue;
        q[i] = approximate(x[i], max_den);
        rest -= q[i];
    }
    if (rest < 0) return std::nullopt;
    q[big] = rest;
    return q;
}

struct Candidate {
    Rational value;
    std::vector<Rational> point;
};

bool better(const Candidate& a, const Candidate& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.point < b.point;
}

Candidate best_snap(const Pattern& p, const Point& x) {
    Candidate best{-1, {}};
    for (std::int64_t cap = 10; cap <= 1'000'000; cap *= 10) {
        auto q = snap(x, cap);
        if (!q) continue;
        Candidate c{density_poly_eval(p, std::span<const Rational>(*q)), std::move(*q)};
        if (best.point.empty() || better(c, best)) best = std::move(c);
    }
    return best;
}

std::vector<Point> starting_points(std::size_t k, const LagrangianOptions& options) {
    std::vector<Point> starts;
    starts.emplace_back(k, 1.0 / static_cast<double>(k));
    for (std::size_t i = 0; i < k; ++i) {
        Point e(k, 0.0);
        e[i] = 1.0;
        starts.push_back(std::move(e));
    }
    std::mt19937_64 rng(options.seed);
    std::exponential_distribution<double> expo(1.0);
    for (std::size_t s = 0; s < options.random_starts; ++s) {
        Point x(k);
        double sum = 0;
        for (auto& xi : x) sum += xi = expo(rng);
        for (auto& xi : x) xi /= sum;
        starts.push_back(std::move(x));
    }
    return starts;
}

}  // namespace

LagrangianEstimate lagrangian(const Pattern& p, const LagrangianOptions& options) {
    if (!(options.tol > 0)) throw InvalidArgument("lagrangian: tol must be positive");
    if (options.N < p.r()) throw InvalidArgument("lagrangian: N must be at least r");
    LagrangianEstimate est;
    est.N = options.N;
    if (p.k() == 0) {
        est.lower = est.upper = 0;
        return est;
    }
    const auto starts = starting_points(p.k(), options);
    std::vector<Candidate> results(starts.size());
    auto work = [&](std::size_t i) { results[i] = best_snap(p, ascend(p, starts[i], options.tol)); };

    std::size_t threads = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency()) : options.threads;
    if (threads <= 1) {
        for (std::size_t i = 0; i < starts.size(); ++i) work(i);
    } else {
        std::vector<std::future<void>> pending;
        for (std::size_t i = 0; i < starts.size(); ++i) pending.push_back(std::async(std::launch::async, work, i));
        for (auto& f : pending) f.get();
    }
    // The starts themselves are exact rational points too.
    std::vector<Rational> uniform(p.k(), Rational(1, static_cast<long long>(p.k())));
    Candidate best{density_poly_eval(p, std::span<const Rational>(uniform)), uniform};
    for (std::size_t i = 0; i < p.k(); ++i) {
        std::vector<Rational> e(p.k(), 0);
        e[i] = 1;
        Candidate c{density_poly_eval(p, std::span<const Rational>(e)), e};
        if (better(c, best)) best = std::move(c);
    }
    for (auto& c : results) {
        if (!c.point.empty() && better(c, best)) best = std::move(c);
    }
    est.lower = best.value;
    est.witness = std::move(best.point);
    est.upper = Rational(lambda_n(p, options.N).value) / Rational(binomial(options.N, p.r()));
    return est;
}

MinimalityReport is_minimal(const Pattern& p, const LagrangianOptions& options) {
    MinimalityReport report;
    report.whole = lagrangian(p, options);
    bool all_below = true;
    bool some_reaches = false;
    for (std::size_t i = 0; i < p.k(); ++i) {
        report.without_part.push_back(lagrangian(remove_part(p, i), options));
        const auto& sub = report.without_part.back();
        if (!(sub.upper < report.whole.lower)) all_below = false;
        if (sub.lower >= report.whole.upper) some_reaches = true;
        // A part no multiset touches contributes nothing, so lambda(P - i) = lambda(P).
        // The grid upper bound is never tight, so this is the common way to certify it.
        const bool unused = std::none_of(p.multisets().begin(), p.multisets().end(), [&](const Multiset& m) {
            return std::any_of(m.begin(), m.end(), [&](const PartCount& pc) { return pc.part == i; });
        });
        if (unused) some_reaches = true;
    }
    if (some_reaches) {
        report.status = Minimality::NotMinimal;
    } else if (all_below) {
        report.status = Minimality::Minimal;
    } else {
        report.status = Minimality::Indeterminate;
    }
    return report;
}

}  // namespace turankit::patterns
