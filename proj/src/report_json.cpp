#include "turankit/report_json.hpp"

#include "turankit/errors.hpp"

namespace turankit::report {

namespace {

std::string status_name(patterns::Minimality m) {
    switch (m) {
        case patterns::Minimality::Minimal:
            return "minimal";
        case patterns::Minimality::NotMinimal:
            return "not-minimal";
        case patterns::Minimality::Indeterminate:
            return "indeterminate";
    }
    return "indeterminate";
}

}  // namespace

Json to_json(const Hypergraph& h) {
    Json j;
    j["n"] = h.n();
    j["r"] = h.r();
    auto edges = Json::array();
    for (std::size_t i = 0; i < h.size(); ++i) {
        auto e = h.edge(i);
        edges.push_back(std::vector<Vertex>(e.begin(), e.end()));
    }
    j["edges"] = std::move(edges);
    return j;
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
    try {
        std::vector<Edge> edges;
        for (const auto& e : j.at("edges")) edges.push_back(e.get<Edge>());
        return Hypergraph(j.at("n").get<std::size_t>(), j.at("r").get<std::size_t>(), std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("hypergraph JSON: ") + e.what());
    }
}

Json to_json(const verify::CheckReport& rep) {
    Json j;
    j["name"] = rep.name;
    Json params = Json::object();
    for (const auto& [k, v] : rep.params) params[k] = v;
    j["params"] = std::move(params);
    j["status"] = verify::to_string(rep.status);
    auto violations = Json::array();
    for (const auto& v : rep.violations) {
        Json item;
        item["instance"] = v.instance;
        item["expected"] = v.expected;
        item["actual"] = v.actual;
        violations.push_back(std::move(item));
    }
    j["violations"] = std::move(violations);
    j["notes"] = rep.notes;
    j["elapsed_ms"] = rep.elapsed_ms;
    return j;
}

verify::CheckReport check_report_from_json(const nlohmann::json& j) {
    verify::CheckReport rep;
    try {
        rep.name = j.at("name").get<std::string>();
        for (const auto& [k, v] : j.at("params").items()) rep.params.emplace_back(k, v.get<std::string>());
        const auto status = j.at("status").get<std::string>();
        if (status == "pass") {
            rep.status = verify::CheckStatus::Pass;
        } else if (status == "fail") {
            rep.status = verify::CheckStatus::Fail;
        } else if (status == "observational") {
            rep.status = verify::CheckStatus::Observational;
        } else {
            throw InvalidArgument("check report JSON: bad status '" + status + "'");
        }
        for (const auto& v : j.at("violations"))
            rep.violations.push_back({v.at("instance").get<std::string>(), v.at("expected").get<std::string>(),
                                      v.at("actual").get<std::string>()});
        rep.notes = j.at("notes").get<std::vector<std::string>>();
        rep.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("check report JSON: ") + e.what());
    }
    return rep;
}

Json to_json(const patterns::LagrangianEstimate& est) {
    Json j;
    j["lower"] = to_string(est.lower);
    j["upper"] = to_string(est.upper);
    auto witness = Json::array();
    for (const auto& x : est.witness) witness.push_back(to_string(x));
    j["witness"] = std::move(witness);
    j["N"] = est.N;
    return j;
}

patterns::LagrangianEstimate estimate_from_json(const nlohmann::json& j) {
    patterns::LagrangianEstimate est;
    try {
        est.lower = parse_rational(j.at("lower").get<std::string>());
        est.upper = parse_rational(j.at("upper").get<std::string>());
        for (const auto& x : j.at("witness")) est.witness.push_back(parse_rational(x.get<std::string>()));
        est.N = j.at("N").get<std::size_t>();
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("estimate JSON: ") + e.what());
    }
    return est;
}

Json to_json(const patterns::MinimalityReport& rep) {
    Json j;
    j["status"] = status_name(rep.status);
    j["whole"] = to_json(rep.whole);
    auto parts = Json::array();
    for (const auto& est : rep.without_part) parts.push_back(to_json(est));
    j["without_part"] = std::move(parts);
    return j;
}

Json to_json(const matching::MatchingWitness& w) {
    auto copies = Json::array();
    for (const auto& c : w.copies) {
        Json item;
        item["host"] = c.host;
        item["vertices"] = c.vertices;
        item["embedding"] = c.embedding;
        copies.push_back(std::move(item));
    }
    Json j;
    j["copies"] = std::move(copies);
    return j;
}

Json to_json(const solver::TuranRecord& rec) { return Json::parse(solver::record_to_json(rec)); }

Json to_json(const solver::TuranTable& table) {
    Json j;
    j["r"] = table.r;
    auto rows = Json::array();
    for (const auto& rec : table.records) {
        Json row;
        row["n"] = rec.n;
        row["ex"] = rec.value;
        row["delta"] = table.has(rec.n - 1) ? Json(to_string(table.delta(rec.n))) : Json(nullptr);
        row["d"] = to_string(table.d(rec.n));
        row["record"] = to_json(rec);
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

}  // namespace turankit::report
