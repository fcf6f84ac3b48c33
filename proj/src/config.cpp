#include <algorithm>
#include <map>
#include <sstream>

#include "turankit/canonical.hpp"
#include "turankit/errors.hpp"
#include "turankit/solver.hpp"

namespace turankit::solver {

ForbiddenConfig::ForbiddenConfig(std::vector<matching::Family> families) {
    if (families.empty()) throw InvalidArgument("forbidden configuration has no families");
    r_ = families.front().first.r();
    // Keyed by canonical graph so isomorphic members merge.
    std::map<std::pair<std::uint64_t, std::vector<Vertex>>, std::pair<Hypergraph, std::size_t>> merged;
    for (auto& [f, t] : families) {
        if (f.r() != r_) throw InvalidArgument("forbidden configuration mixes uniformities");
        if (t == 0) throw InvalidArgument("family count must be at least 1");
        if (f.n() == 0) throw InvalidArgument("forbidden hypergraph has no vertices");
        auto canon = canonical_form(f);
        auto key = std::make_pair(canon.hash, canon.graph.flat());
        auto [it, inserted] = merged.try_emplace(std::move(key), std::move(canon.graph), t);
        if (!inserted) {
            if (it->second.first.n() != f.n()) throw InvalidArgument("hash collision in forbidden configuration");
            it->second.second += t;
        }
    }
    hash_ = mix64(0xc0f1'6000 + r_);
    for (auto& [key, fam] : merged) {
        hash_ = hash_combine(hash_, key.first);
        hash_ = hash_combine(hash_, fam.second);
        min_vertices_ += fam.first.n() * fam.second;
        families_.push_back(std::move(fam));
    }
}

std::optional<matching::MatchingWitness> ForbiddenConfig::violation(const Hypergraph& h) const {
    if (h.r() != r_) throw InvalidArgument("host uniformity differs from the configuration");
    if (h.n() < min_vertices_) return std::nullopt;
    return matching::has_disjoint_config(h, families_);
}

std::string ForbiddenConfig::describe() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < families_.size(); ++i) {
        if (i) out << " + ";
        const auto& [f, t] = families_[i];
        out << t << " x (" << f.n() << " vertices, " << f.size() << " edges, r=" << f.r() << ")";
    }
    return out.str();
}

std::string to_string(Status s) { return s == Status::Exact ? "exact" : "bounds"; }

}  // namespace turankit::solver
