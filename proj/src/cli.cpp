#include "turankit/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "turankit/canonical.hpp"
#include "turankit/errors.hpp"
#include "turankit/hg_io.hpp"
#include "turankit/matching.hpp"
#include "turankit/pattern.hpp"
#include "turankit/report_json.hpp"
#include "turankit/verify.hpp"
#include "turankit/zoo.hpp"

namespace turankit::cli {

namespace {

using report::Json;

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    if (!text.empty() && text.back() == sep) parts.emplace_back();
    return parts;
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::int64_t parse_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const auto v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return v;
    } catch (const std::exception&) {
        throw InvalidArgument(what + ": '" + s + "' is not an integer");
    }
}

std::string hex(std::uint64_t x) {
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << x;
    return out.str();
}

std::string describe(const Hypergraph& h) {
    return "n=" + std::to_string(h.n()) + " r=" + std::to_string(h.r()) + " edges=" + std::to_string(h.size());
}

std::string rational_line(const Rational& q) {
    std::ostringstream out;
    out << to_string(q) << " (~" << std::setprecision(10) << to_double(q) << ")";
    return out.str();
}

patterns::LagrangianOptions lagrangian_options(double tol, std::size_t big_n, std::uint64_t seed) {
    patterns::LagrangianOptions o;
    o.tol = tol;
    o.N = big_n;
    o.seed = seed;
    if (const char* threads = std::getenv("TURANKIT_THREADS"); threads && *threads)
        o.threads = static_cast<std::size_t>(parse_int(threads, "TURANKIT_THREADS"));
    return o;
}

void print_witness(std::ostream& out, const matching::MatchingWitness& w) {
    for (const auto& c : w.copies) {
        out << "copy " << c.host << ":";
        for (std::size_t f = 0; f < c.embedding.size(); ++f) out << ' ' << f << "->" << c.embedding[f];
        out << '\n';
    }
}

void print_report(std::ostream& out, const verify::CheckReport& rep) {
    out << rep.name << ": " << verify::to_string(rep.status) << " (" << rep.elapsed_ms << " ms)\n";
    for (const auto& [k, v] : rep.params) out << "  " << k << " = " << v << '\n';
    for (const auto& note : rep.notes) out << "  " << note << '\n';
    for (const auto& v : rep.violations)
        out << "  violation: " << v.instance << "\n    expected " << v.expected << ", got " << v.actual << '\n';
}

// Turns a job object into command-line arguments: "command" first, then
// every other field as --field value.
std::vector<std::string> job_args(const nlohmann::json& job) {
    if (!job.is_object()) throw InvalidArgument("job must be a JSON object");
    if (!job.contains("command") || !job["command"].is_string()) throw InvalidArgument("job needs a string 'command'");
    const std::string command = job["command"].get<std::string>();
    if (command == "job") throw InvalidArgument("jobs cannot nest");
    std::vector<std::string> args{command};
    for (const auto& [key, value] : job.items()) {
        if (key == "command") continue;
        const std::string flag = "--" + key;
        if (value.is_boolean()) {
            if (value.get<bool>()) args.push_back(flag);
        } else if (value.is_string()) {
            args.push_back(flag);
            args.push_back(value.get<std::string>());
        } else if (value.is_number()) {
            args.push_back(flag);
            args.push_back(value.dump());
        } else if (value.is_array()) {
            std::string joined;
            for (const auto& item : value) {
                if (!joined.empty()) joined += ',';
                joined += item.is_string() ? item.get<std::string>() : item.dump();
            }
            args.push_back(flag);
            args.push_back(joined);
        } else {
            throw InvalidArgument("job field '" + key + "' has an unsupported type");
        }
    }
    return args;
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& args);

private:
    int emit(const Json& j) {
        out_ << j.dump(2) << '\n';
        return kOk;
    }

    std::ostream& out_;
    std::ostream& err_;
};

int Runner::run(const std::vector<std::string>& args) {
    CLI::App app{"Exact computations for hypergraph Turan problems", "turankit"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "JSON output")->configurable(false);

    // Shared option storage; each subcommand binds what it needs.
    std::string name, a, b, pattern_path, out_path, family, seed_path, hosts, payload, check;
    std::string f_spec, h_spec, parts, g_sel = "binom_n1_r2:4", f1_sel = "0", f2_sel = "0", mode = "extremal-only";
    std::string eps_text, pi_text, forbid;
    std::optional<std::int64_t> zn, zl, zr, zm, zk;
    std::size_t n = 0, t = 0, r = 0, cap = 0, from = 0, to = 0, n_max = 200, trials = 0, big_n = 120;
    std::uint64_t seed = 0;
    bool seed_given = false;
    double tol = 1e-9;
    std::uint64_t lag_seed = 0x5eed;

    auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", json, "JSON output"); };

    auto* zoo_cmd = app.add_subcommand("zoo", "Build a named construction");
    zoo_cmd->add_option("name,--name", name, "construction name")->required();
    zoo_cmd->add_option("--n", zn);
    zoo_cmd->add_option("--l", zl);
    zoo_cmd->add_option("--r", zr);
    zoo_cmd->add_option("--m", zm);
    zoo_cmd->add_option("--k", zk);
    zoo_cmd->add_option("--payload", payload, "graph for expansion_of / tree_expansion");
    zoo_cmd->add_option("-o,--out", out_path);
    json_flag(zoo_cmd);

    auto* canon_cmd = app.add_subcommand("canon", "Canonical form of a hypergraph");
    canon_cmd->add_option("input,--input", a)->required();
    json_flag(canon_cmd);

    auto* iso_cmd = app.add_subcommand("iso", "Isomorphism test");
    iso_cmd->add_option("a,--a", a)->required();
    iso_cmd->add_option("b,--b", b)->required();
    json_flag(iso_cmd);

    auto* nu_cmd = app.add_subcommand("nu", "F-matching number");
    nu_cmd->add_option("F,--F", f_spec)->required();
    nu_cmd->add_option("H,--H", h_spec)->required();
    nu_cmd->add_option("--cap", cap);
    json_flag(nu_cmd);

    auto* embed_cmd = app.add_subcommand("embed", "Find a copy of F in H");
    embed_cmd->add_option("F,--F", f_spec)->required();
    embed_cmd->add_option("H,--H", h_spec)->required();
    embed_cmd->add_option("--forbid", forbid, "comma-separated vertices to avoid");
    json_flag(embed_cmd);

    auto* blowup_cmd = app.add_subcommand("blowup", "Blowup of a pattern");
    blowup_cmd->add_option("pattern,--pattern", pattern_path)->required();
    blowup_cmd->add_option("--parts", parts, "part sizes a,b,...")->required();
    blowup_cmd->add_option("-o,--out", out_path);
    json_flag(blowup_cmd);

    auto* lambda_cmd = app.add_subcommand("lambda-n", "Maximum blowup size");
    lambda_cmd->add_option("pattern,--pattern", pattern_path)->required();
    lambda_cmd->add_option("--n", n)->required();
    json_flag(lambda_cmd);

    auto* lag_cmd = app.add_subcommand("lagrangian", "Certified Lagrangian bracket");
    lag_cmd->add_option("pattern,--pattern", pattern_path)->required();
    lag_cmd->add_option("--tol", tol);
    lag_cmd->add_option("--N", big_n);
    lag_cmd->add_option("--seed", lag_seed, "seed for the random starts");
    json_flag(lag_cmd);

    auto* min_cmd = app.add_subcommand("minimal", "Pattern minimality");
    min_cmd->add_option("pattern,--pattern", pattern_path)->required();
    min_cmd->add_option("--tol", tol);
    min_cmd->add_option("--N", big_n);
    min_cmd->add_option("--seed", lag_seed);
    json_flag(min_cmd);

    auto* sub_cmd = app.add_subcommand("subconstruction", "Part assignment making H a subgraph of a blowup");
    sub_cmd->add_option("H,--H", h_spec)->required();
    sub_cmd->add_option("pattern,--pattern", pattern_path)->required();
    json_flag(sub_cmd);

    auto* ex_cmd = app.add_subcommand("ex", "Exact Turan number");
    ex_cmd->add_option("--n", n)->required();
    ex_cmd->add_option("--family", family, "F.hg[:t],...")->required();
    ex_cmd->add_option("--seed", seed_path, "feasible graph giving a lower bound");
    json_flag(ex_cmd);

    auto* extremal_cmd = app.add_subcommand("extremal", "All extremal graphs up to isomorphism");
    extremal_cmd->add_option("--n", n)->required();
    extremal_cmd->add_option("--family", family)->required();
    extremal_cmd->add_option("-o,--out", out_path, "directory for .hg files");
    json_flag(extremal_cmd);

    auto* table_cmd = app.add_subcommand("table", "Turan numbers over a range of n");
    table_cmd->add_option("--family", family)->required();
    table_cmd->add_option("--from", from)->required();
    table_cmd->add_option("--to", to)->required();
    json_flag(table_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run a check");
    verify_cmd->add_option("check,--check", check,
                           "smoothness | boundedness | main-theorem | remark-2k3 | lemmas | facts | "
                           "matching-theorems | rainbow | trim")
        ->required();
    verify_cmd->add_option("--F", f_spec);
    verify_cmd->add_option("--H", h_spec);
    verify_cmd->add_option("--n", n);
    verify_cmd->add_option("--t", t);
    verify_cmd->add_option("--r", r);
    verify_cmd->add_option("--family", family);
    verify_cmd->add_option("--from", from);
    verify_cmd->add_option("--to", to);
    verify_cmd->add_option("--g", g_sel);
    verify_cmd->add_option("--f1", f1_sel);
    verify_cmd->add_option("--f2", f2_sel);
    verify_cmd->add_option("--mode", mode);
    verify_cmd->add_option("--n-max", n_max);
    verify_cmd->add_option("--pattern", pattern_path);
    verify_cmd->add_option("--trials", trials);
    verify_cmd->add_option("--seed", seed)->each([&](const std::string&) { seed_given = true; });
    verify_cmd->add_option("--eps", eps_text);
    verify_cmd->add_option("--pi-hat", pi_text);
    json_flag(verify_cmd);

    auto* rainbow_cmd = app.add_subcommand("rainbow", "Rainbow F-matching across hosts");
    rainbow_cmd->add_option("--hosts", hosts, "a.hg,b.hg,...")->required();
    rainbow_cmd->add_option("--F", f_spec)->required();
    json_flag(rainbow_cmd);

    auto* job_cmd = app.add_subcommand("job", "Run a JSON job file");
    job_cmd->add_option("file,--file", a)->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out_ << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err_ << "usage error: " << e.what() << '\n';
        for (auto* sub : app.get_subcommands()) err_ << sub->help();
        return kUsage;
    }
    for (auto* sub : app.get_subcommands()) {
        if (sub->get_help_ptr() && sub->get_help_ptr()->count()) {
            out_ << sub->help();
            return kOk;
        }
    }

    const solver::SolverOptions options = solver::options_from_env();
    auto need = [&](bool present, const std::string& what) {
        if (!present) throw InvalidArgument("verify " + check + " needs " + what);
    };

    if (zoo_cmd->parsed()) {
        zoo::ZooSpec spec{name, zn, zl, zr, zm, zk, std::nullopt};
        if (!payload.empty()) spec.payload = load_graph(payload);
        const Hypergraph h = zoo::construct(spec);
        if (!out_path.empty()) {
            save_hg(out_path, h);
            if (json) return emit(report::to_json(h));
            out_ << "wrote " << out_path << " (" << describe(h) << ")\n";
            return kOk;
        }
        if (json) return emit(report::to_json(h));
        out_ << format_hg(h);
        return kOk;
    }
    if (canon_cmd->parsed()) {
        const auto cf = canonical_form(load_graph(a));
        if (json) {
            Json j;
            j["hash"] = hex(cf.hash);
            j["perm"] = cf.perm;
            j["graph"] = report::to_json(cf.graph);
            return emit(j);
        }
        out_ << "# hash " << hex(cf.hash) << "\n# perm";
        for (Vertex v : cf.perm) out_ << ' ' << v;
        out_ << '\n' << format_hg(cf.graph);
        return kOk;
    }
    if (iso_cmd->parsed()) {
        const bool iso = are_isomorphic(load_graph(a), load_graph(b));
        if (json) {
            Json j;
            j["isomorphic"] = iso;
            emit(j);
        } else {
            out_ << (iso ? "isomorphic" : "not isomorphic") << '\n';
        }
        return iso ? kOk : kFailed;
    }
    if (nu_cmd->parsed()) {
        const Hypergraph f = load_graph(f_spec), h = load_graph(h_spec);
        const auto res = matching::matching_number(f, h, nu_cmd->count("--cap") ? std::optional<std::size_t>(cap) : std::nullopt);
        if (json) {
            Json j;
            j["nu"] = res.nu;
            j["witness"] = report::to_json(res.witness);
            return emit(j);
        }
        out_ << "nu = " << res.nu << '\n';
        print_witness(out_, res.witness);
        return kOk;
    }
    if (embed_cmd->parsed()) {
        std::vector<Vertex> avoid;
        if (!forbid.empty())
            for (const auto& s : split(forbid, ',')) avoid.push_back(static_cast<Vertex>(parse_int(s, "--forbid")));
        const auto emb = matching::embed(load_graph(f_spec), load_graph(h_spec), avoid);
        if (json) {
            Json j;
            j["embedding"] = emb ? Json(*emb) : Json(nullptr);
            emit(j);
        } else if (emb) {
            out_ << "embedding:";
            for (std::size_t f = 0; f < emb->size(); ++f) out_ << ' ' << f << "->" << (*emb)[f];
            out_ << '\n';
        } else {
            out_ << "none\n";
        }
        return emb ? kOk : kFailed;
    }
    if (blowup_cmd->parsed()) {
        const auto p = patterns::load_pattern(pattern_path);
        patterns::Composition c;
        for (const auto& s : split(parts, ',')) {
            const auto v = parse_int(s, "--parts");
            if (v < 0) throw InvalidArgument("--parts: sizes must be nonnegative");
            c.push_back(static_cast<std::size_t>(v));
        }
        const Hypergraph h = patterns::blowup(p, c);
        if (!out_path.empty()) save_hg(out_path, h);
        if (json) return emit(report::to_json(h));
        if (out_path.empty()) {
            out_ << format_hg(h);
        } else {
            out_ << "wrote " << out_path << " (" << describe(h) << ")\n";
        }
        return kOk;
    }
    if (lambda_cmd->parsed()) {
        const auto res = patterns::lambda_n(patterns::load_pattern(pattern_path), n);
        if (json) {
            Json j;
            j["n"] = n;
            j["value"] = res.value;
            j["best"] = res.best;
            return emit(j);
        }
        out_ << "Lambda = " << res.value << " at (";
        for (std::size_t i = 0; i < res.best.size(); ++i) out_ << (i ? "," : "") << res.best[i];
        out_ << ")\n";
        return kOk;
    }
    if (lag_cmd->parsed()) {
        const auto est = patterns::lagrangian(patterns::load_pattern(pattern_path), lagrangian_options(tol, big_n, lag_seed));
        if (json) return emit(report::to_json(est));
        out_ << "lower = " << rational_line(est.lower) << "\nupper = " << rational_line(est.upper) << "\nwitness = (";
        for (std::size_t i = 0; i < est.witness.size(); ++i) out_ << (i ? ", " : "") << to_string(est.witness[i]);
        out_ << ")\nN = " << est.N << '\n';
        return kOk;
    }
    if (min_cmd->parsed()) {
        const auto rep = patterns::is_minimal(patterns::load_pattern(pattern_path), lagrangian_options(tol, big_n, lag_seed));
        if (json) {
            emit(report::to_json(rep));
        } else {
            const char* word = rep.status == patterns::Minimality::Minimal      ? "minimal"
                               : rep.status == patterns::Minimality::NotMinimal ? "not minimal"
                                                                                 : "indeterminate";
            out_ << word << "\nlambda(P) in [" << rational_line(rep.whole.lower) << ", "
                 << rational_line(rep.whole.upper) << "]\n";
            for (std::size_t i = 0; i < rep.without_part.size(); ++i)
                out_ << "lambda(P - " << i + 1 << ") in [" << rational_line(rep.without_part[i].lower) << ", "
                     << rational_line(rep.without_part[i].upper) << "]\n";
        }
        switch (rep.status) {
            case patterns::Minimality::Minimal:
                return kOk;
            case patterns::Minimality::NotMinimal:
                return kFailed;
            case patterns::Minimality::Indeterminate:
                return kBudget;
        }
        return kBudget;
    }
    if (sub_cmd->parsed()) {
        const auto assignment = patterns::is_subconstruction(load_graph(h_spec), patterns::load_pattern(pattern_path));
        if (json) {
            Json j;
            if (assignment) {
                std::vector<std::size_t> one_based;
                for (auto p : *assignment) one_based.push_back(p + 1);
                j["assignment"] = one_based;
            } else {
                j["assignment"] = nullptr;
            }
            emit(j);
        } else if (assignment) {
            out_ << "assignment:";
            for (std::size_t v = 0; v < assignment->size(); ++v) out_ << ' ' << v << "->" << (*assignment)[v] + 1;
            out_ << '\n';
        } else {
            out_ << "none\n";
        }
        return assignment ? kOk : kFailed;
    }
    if (ex_cmd->parsed() || extremal_cmd->parsed()) {
        const auto config = parse_family(family);
        std::optional<Hypergraph> seed_graph;
        if (!seed_path.empty()) seed_graph = load_graph(seed_path);
        const auto rec = ex_cmd->parsed() ? solver::max_edges(n, config, seed_graph, options)
                                          : solver::enumerate_extremal(n, config, options);
        if (!out_path.empty()) {
            std::filesystem::create_directories(out_path);
            for (std::size_t i = 0; i < rec.extremal.size(); ++i)
                save_hg(std::filesystem::path(out_path) / ("extremal_" + std::to_string(i) + ".hg"), rec.extremal[i]);
        }
        if (json) {
            emit(report::to_json(rec));
        } else if (rec.status == solver::Status::Bounds) {
            out_ << "bounds " << rec.value << ".." << rec.upper << " (node limit reached after " << rec.nodes << " nodes)\n";
        } else if (ex_cmd->parsed()) {
            out_ << rec.value << '\n';
        } else {
            out_ << "ex = " << rec.value << ", " << rec.extremal.size() << " extremal graph(s)\n";
            for (const auto& h : rec.extremal) out_ << '\n' << format_hg(h);
        }
        return rec.status == solver::Status::Exact ? kOk : kBudget;
    }
    if (table_cmd->parsed()) {
        const auto table = solver::ex_table(parse_family(family), from, to, options);
        if (json) return emit(report::to_json(table));
        out_ << "n\tex\tdelta\td\n";
        for (const auto& rec : table.records) {
            out_ << rec.n << '\t' << rec.value << '\t' << (table.has(rec.n - 1) ? to_string(table.delta(rec.n)) : "-")
                 << '\t' << to_string(table.d(rec.n)) << '\n';
        }
        return kOk;
    }
    if (verify_cmd->parsed()) {
        verify::CheckReport rep;
        const bool has_n = verify_cmd->count("--n") > 0;
        if (check == "smoothness") {
            need(!family.empty() && verify_cmd->count("--from") && verify_cmd->count("--to"), "--family, --from, --to");
            rep = verify::check_smoothness(solver::ex_table(parse_family(family), from, to, options),
                                           verify::Selector::parse(g_sel));
        } else if (check == "boundedness") {
            need(!f_spec.empty() && has_n, "--F and --n");
            verify::BoundsParams params{verify::Selector::parse(f1_sel), verify::Selector::parse(f2_sel)};
            if (mode != "extremal-only" && mode != "enumerate") throw InvalidArgument("--mode is extremal-only or enumerate");
            rep = verify::check_boundedness(load_graph(f_spec), n, params,
                                            mode == "enumerate" ? verify::BoundednessMode::Enumerate
                                                                : verify::BoundednessMode::ExtremalOnly,
                                            options);
        } else if (check == "main-theorem") {
            need(!f_spec.empty() && has_n && verify_cmd->count("--t"), "--F, --n and --t");
            rep = verify::check_main_theorem(load_graph(f_spec), n, t, options);
        } else if (check == "remark-2k3") {
            need(has_n && verify_cmd->count("--t"), "--n and --t");
            rep = verify::check_remark_2k3(n, t);
        } else if (check == "lemmas") {
            std::vector<solver::TuranTable> tables;
            if (!family.empty()) {
                need(verify_cmd->count("--from") && verify_cmd->count("--to"), "--from and --to with --family");
                tables.push_back(solver::ex_table(parse_family(family), from, to, options));
            }
            rep = verify::check_lemmas(n_max, tables);
        } else if (check == "facts") {
            need(!f_spec.empty() && has_n, "--F and --n");
            std::optional<patterns::Pattern> p;
            if (!pattern_path.empty()) p = patterns::load_pattern(pattern_path);
            rep = verify::check_facts(load_graph(f_spec), p, n, options);
        } else if (check == "matching-theorems") {
            need(has_n && verify_cmd->count("--t") && verify_cmd->count("--r"), "--n, --t and --r");
            rep = verify::check_matching_theorems(n, t, r, options);
        } else if (check == "rainbow") {
            need(!f_spec.empty() && has_n && verify_cmd->count("--t"), "--F, --n and --t");
            need(seed_given, "--seed (randomized check)");
            rep = verify::check_rainbow(load_graph(f_spec), n, t, trials, seed, options);
        } else if (check == "trim") {
            need(!h_spec.empty() && !eps_text.empty(), "--H and --eps");
            const Hypergraph h = load_graph(h_spec);
            Rational pi_hat;
            if (!pi_text.empty()) {
                pi_hat = parse_rational(pi_text);
            } else {
                need(!f_spec.empty(), "--pi-hat or --F with a known density");
                auto known = verify::default_pi_hat(load_graph(f_spec));
                need(known.has_value(), "--pi-hat (no built-in density for this F)");
                pi_hat = *known;
            }
            rep = verify::trim_low_degree(h, parse_rational(eps_text), pi_hat).report;
        } else {
            throw InvalidArgument("unknown check '" + check + "'");
        }
        if (json) {
            emit(report::to_json(rep));
        } else {
            print_report(out_, rep);
        }
        return rep.ok() ? kOk : kFailed;
    }
    if (rainbow_cmd->parsed()) {
        std::vector<Hypergraph> host_graphs;
        for (const auto& s : split(hosts, ',')) host_graphs.push_back(load_graph(s));
        const auto w = matching::rainbow_matching(host_graphs, load_graph(f_spec));
        if (json) {
            Json j;
            j["witness"] = w ? report::to_json(*w) : Json(nullptr);
            emit(j);
        } else if (w) {
            print_witness(out_, *w);
        } else {
            out_ << "none\n";
        }
        return w ? kOk : kFailed;
    }
    if (job_cmd->parsed()) {
        std::ifstream in(a);
        if (!in) throw InvalidArgument("cannot open job file " + a);
        nlohmann::json doc;
        try {
            doc = nlohmann::json::parse(in);
        } catch (const nlohmann::json::exception& e) {
            throw InvalidArgument(std::string("job file: ") + e.what());
        }
        std::vector<nlohmann::json> jobs;
        if (doc.is_object() && doc.contains("jobs")) {
            if (doc.size() != 1 || !doc["jobs"].is_array()) throw InvalidArgument("batch file must be {\"jobs\": [...]}");
            for (const auto& j : doc["jobs"]) jobs.push_back(j);
        } else {
            jobs.push_back(doc);
        }
        int worst = kOk;
        for (const auto& j : jobs) worst = std::max(worst, cli::run(job_args(j), out_, err_));
        return worst;
    }
    return kUsage;
}

}  // namespace

Hypergraph load_graph(const std::string& spec) {
    if (spec.empty()) throw InvalidArgument("empty graph argument");
    if (spec[0] != '@') return load_hg(spec);
    const auto fields = split(spec.substr(1), ':');
    if (fields.empty() || fields[0].empty()) throw InvalidArgument("graph '" + spec + "': missing name");
    zoo::ZooSpec z;
    z.name = fields[0];
    for (std::size_t i = 1; i < fields.size(); ++i) {
        const auto eq = fields[i].find('=');
        if (eq == std::string::npos) throw InvalidArgument("graph '" + spec + "': expected key=value, got '" + fields[i] + "'");
        const std::string key = fields[i].substr(0, eq), value = fields[i].substr(eq + 1);
        if (key == "payload") {
            z.payload = load_hg(value);
            continue;
        }
        const auto v = parse_int(value, "graph parameter " + key);
        if (key == "n") {
            z.n = v;
        } else if (key == "l") {
            z.l = v;
        } else if (key == "r") {
            z.r = v;
        } else if (key == "m") {
            z.m = v;
        } else if (key == "k") {
            z.k = v;
        } else {
            throw InvalidArgument("graph '" + spec + "': unknown parameter '" + key + "'");
        }
    }
    if (z.name == "complete") {
        if (!z.n || !z.r || *z.n < 0 || *z.r < 1) throw InvalidArgument("@complete needs n >= 0 and r >= 1");
        return complete(static_cast<std::size_t>(*z.n), static_cast<std::size_t>(*z.r));
    }
    if (z.name == "edge") {
        if (!z.r || *z.r < 1) throw InvalidArgument("@edge needs r >= 1");
        return complete(static_cast<std::size_t>(*z.r), static_cast<std::size_t>(*z.r));
    }
    return zoo::construct(z);
}

solver::ForbiddenConfig parse_family(const std::string& text) {
    std::vector<matching::Family> families;
    for (const auto& item : split(text, ',')) {
        if (item.empty()) throw InvalidArgument("--family: empty item");
        std::string graph = item;
        std::size_t count = 1;
        const auto colon = item.rfind(':');
        if (colon != std::string::npos && all_digits(item.substr(colon + 1))) {
            graph = item.substr(0, colon);
            count = static_cast<std::size_t>(parse_int(item.substr(colon + 1), "--family count"));
        }
        families.emplace_back(load_graph(graph), count);
    }
    return solver::ForbiddenConfig(std::move(families));
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return Runner(out, err).run(args);
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

}  // namespace turankit::cli
