#include "turankit/hg_io.hpp"

#include <fstream>
#include <sstream>

#include "turankit/errors.hpp"

namespace turankit {

namespace {

std::string strip_comment(const std::string& line) {
    auto hash = line.find('#');
    return hash == std::string::npos ? line : line.substr(0, hash);
}

bool blank(const std::string& s) { return s.find_first_not_of(" \t\r") == std::string::npos; }

std::vector<long long> parse_ints(const std::string& s, std::size_t line_no) {
    std::istringstream in(s);
    std::vector<long long> out;
    std::string tok;
    while (in >> tok) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(tok, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != tok.size() || value < 0)
            throw InvalidArgument("line " + std::to_string(line_no) + ": bad integer '" + tok + "'");
        out.push_back(value);
    }
    return out;
}

}  // namespace

Hypergraph read_hg(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::size_t n = 0, r = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::string body = strip_comment(line);
        if (blank(body)) continue;
        auto ints = parse_ints(body, line_no);
        if (!have_header) {
            if (ints.size() != 2) throw InvalidArgument("line " + std::to_string(line_no) + ": expected header 'n r'");
            n = static_cast<std::size_t>(ints[0]);
            r = static_cast<std::size_t>(ints[1]);
            if (r == 0) throw InvalidArgument("uniformity must be at least 1");
            have_header = true;
            continue;
        }
        if (ints.size() != r) {
            throw InvalidArgument("line " + std::to_string(line_no) + ": expected " + std::to_string(r) +
                                  " vertices, got " + std::to_string(ints.size()));
        }
        Edge e;
        for (auto v : ints) {
            if (static_cast<std::size_t>(v) >= n)
                throw InvalidArgument("line " + std::to_string(line_no) + ": vertex " + std::to_string(v) +
                                      " out of range");
            e.push_back(static_cast<Vertex>(v));
        }
        edges.push_back(std::move(e));
    }
    if (!have_header) throw InvalidArgument("missing 'n r' header");
    return Hypergraph(n, r, std::move(edges));
}

Hypergraph parse_hg(const std::string& text) {
    std::istringstream in(text);
    return read_hg(in);
}

Hypergraph load_hg(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path.string());
    try {
        return read_hg(in);
    } catch (const InvalidArgument& e) {
        throw InvalidArgument(path.string() + ": " + e.what());
    }
}

void write_hg(std::ostream& out, const Hypergraph& h) {
    out << h.n() << ' ' << h.r() << '\n';
    for (std::size_t i = 0; i < h.size(); ++i) {
        auto e = h.edge(i);
        for (std::size_t j = 0; j < e.size(); ++j) out << (j ? " " : "") << e[j];
        out << '\n';
    }
}

std::string format_hg(const Hypergraph& h) {
    std::ostringstream out;
    write_hg(out, h);
    return out.str();
}

void save_hg(const std::filesystem::path& path, const Hypergraph& h) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path.string());
    write_hg(out, h);
}

}  // namespace turankit
