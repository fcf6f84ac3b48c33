#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "turankit/canonical.hpp"
#include "turankit/errors.hpp"
#include "turankit/solver.hpp"

namespace turankit::solver {

namespace {

std::string hex64(std::uint64_t x) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(x));
    return buf;
}

std::uint64_t parse_hex64(const std::string& s) {
    if (s.empty() || s.size() > 16) throw InvalidArgument("bad hex hash '" + s + "'");
    std::size_t used = 0;
    const auto v = std::stoull(s, &used, 16);
    if (used != s.size()) throw InvalidArgument("bad hex hash '" + s + "'");
    return v;
}

}  // namespace

std::string record_to_json(const TuranRecord& rec) {
    nlohmann::ordered_json doc;
    doc["n"] = rec.n;
    doc["r"] = rec.r;
    doc["config_hash"] = hex64(rec.config_hash);
    doc["status"] = to_string(rec.status);
    doc["value"] = rec.value;
    doc["upper"] = rec.upper;
    auto extremal = nlohmann::ordered_json::array();
    for (const auto& h : rec.extremal) {
        auto edges = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < h.size(); ++i) {
            auto e = h.edge(i);
            edges.push_back(std::vector<Vertex>(e.begin(), e.end()));
        }
        extremal.push_back(std::move(edges));
    }
    doc["extremal"] = std::move(extremal);
    doc["nodes"] = rec.nodes;
    doc["elapsed_ms"] = rec.elapsed_ms;
    doc["seeded_lower"] = rec.seeded_lower;
    doc["enumerated"] = rec.enumerated;
    return doc.dump();
}

TuranRecord record_from_json(const std::string& text) {
    TuranRecord rec;
    try {
        const auto doc = nlohmann::json::parse(text);
        static const std::vector<std::string> fields{"n",     "r",      "config_hash", "status",       "value",     "upper",
                                                     "extremal", "nodes", "elapsed_ms", "seeded_lower", "enumerated"};
        for (const auto& [key, value] : doc.items()) {
            if (std::find(fields.begin(), fields.end(), key) == fields.end())
                throw InvalidArgument("record JSON: unknown field '" + key + "'");
        }
        rec.n = doc.at("n").get<std::size_t>();
        rec.r = doc.at("r").get<std::size_t>();
        rec.config_hash = parse_hex64(doc.at("config_hash").get<std::string>());
        const auto status = doc.at("status").get<std::string>();
        if (status == "exact") {
            rec.status = Status::Exact;
        } else if (status == "bounds") {
            rec.status = Status::Bounds;
        } else {
            throw InvalidArgument("record JSON: bad status '" + status + "'");
        }
        rec.value = doc.at("value").get<std::int64_t>();
        rec.upper = doc.at("upper").get<std::int64_t>();
        for (const auto& edges : doc.at("extremal")) {
            std::vector<Edge> list;
            for (const auto& e : edges) list.push_back(e.get<Edge>());
            rec.extremal.emplace_back(rec.n, rec.r, std::move(list));
        }
        rec.nodes = doc.at("nodes").get<std::uint64_t>();
        rec.elapsed_ms = doc.at("elapsed_ms").get<std::int64_t>();
        rec.seeded_lower = doc.at("seeded_lower").get<std::int64_t>();
        rec.enumerated = doc.at("enumerated").get<bool>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("record JSON: ") + e.what());
    }
    return rec;
}

std::filesystem::path cache_path(const std::filesystem::path& dir, std::uint64_t config_hash, std::size_t n) {
    return dir / (hex64(hash_combine(config_hash, n)) + ".json");
}

std::optional<TuranRecord> cache_load(const std::filesystem::path& dir, const ForbiddenConfig& config, std::size_t n) {
    const auto path = cache_path(dir, config.hash(), n);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        TuranRecord rec = record_from_json(buffer.str());
        if (rec.n != n || rec.config_hash != config.hash() || rec.r != config.r()) return std::nullopt;
        // Stored graphs must still be feasible and of the stored size.
        if (!validate_record(rec, config)) return std::nullopt;
        return rec;
    } catch (const InvalidArgument&) {
        return std::nullopt;
    }
}

void cache_store(const std::filesystem::path& dir, const TuranRecord& rec) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) return;
    const auto path = cache_path(dir, rec.config_hash, rec.n);
    if (!rec.enumerated) {
        // Never replace a complete enumeration with a value-only record.
        std::ifstream existing(path);
        if (existing) {
            std::stringstream buffer;
            buffer << existing.rdbuf();
            try {
                if (record_from_json(buffer.str()).enumerated) return;
            } catch (const InvalidArgument&) {
            }
        }
    }
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << record_to_json(rec) << '\n';
    }
    std::filesystem::rename(tmp, path, ec);
}

}  // namespace turankit::solver
