#include "tsw/io.hpp"

#include <fstream>
#include <sstream>

namespace tsw {

namespace {

// Strip a trailing '#' comment and surrounding whitespace.
std::string clean_line(const std::string& raw) {
    std::string s = raw;
    auto hash = s.find('#');
    if (hash != std::string::npos) s.erase(hash);
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
    std::size_t start = s.find_first_not_of(" \t");
    return start == std::string::npos ? std::string() : s.substr(start);
}

long parse_int(const std::string& tok, int line) {
    try {
        std::size_t pos = 0;
        long value = std::stol(tok, &pos);
        if (pos != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        throw ParseError(line, "expected integer, got '" + tok + "'");
    }
}

std::vector<int> parse_vertex_list(std::istringstream& in, int n, int line,
                                   const char* what) {
    std::vector<int> out;
    std::string tok;
    while (in >> tok) {
        long v = parse_int(tok, line);
        if (v < 1 || v > n) throw ParseError(line, std::string(what) + " out of range 1.." +
                                                       std::to_string(n));
        out.push_back((int)v - 1);
    }
    if ((int)out.size() != n)
        throw ParseError(line, std::string("expected ") + std::to_string(n) + " entries for " +
                                   what + ", got " + std::to_string(out.size()));
    return out;
}

}  // namespace

ColoredInstance Instance::as_colored() const {
    if (!colored()) throw Error("instance carries no colors");
    ColoredInstance c{graph, placement, *token_colors, *vertex_colors};
    c.validate_colors();
    return c;
}

Instance parse_instance(const std::string& text) {
    std::istringstream ss(text);
    std::string raw;
    int lineno = 0;

    int n = -1;
    long m = -1;
    std::vector<std::pair<int, int>> edges;
    std::optional<TokenPlacement> tokens;
    std::optional<std::vector<int>> cv, ct;

    while (std::getline(ss, raw)) {
        ++lineno;
        std::string line = clean_line(raw);
        if (line.empty()) continue;
        std::istringstream in(line);
        std::string kind;
        in >> kind;
        if (kind == "p") {
            std::string fmt;
            in >> fmt;
            if (fmt != "tsw") throw ParseError(lineno, "expected 'p tsw <n> <m>'");
            std::string a, b;
            if (!(in >> a >> b)) throw ParseError(lineno, "expected 'p tsw <n> <m>'");
            n = (int)parse_int(a, lineno);
            m = parse_int(b, lineno);
            if (n < 1) throw ParseError(lineno, "vertex count must be positive");
        } else if (kind == "e") {
            if (n < 0) throw ParseError(lineno, "edge before header");
            std::string a, b;
            if (!(in >> a >> b)) throw ParseError(lineno, "expected 'e <u> <v>'");
            long u = parse_int(a, lineno), v = parse_int(b, lineno);
            if (u < 1 || u > n || v < 1 || v > n || u == v)
                throw ParseError(lineno, "bad edge endpoints");
            edges.emplace_back((int)u - 1, (int)v - 1);
        } else if (kind == "t") {
            if (n < 0) throw ParseError(lineno, "token line before header");
            auto vals = parse_vertex_list(in, n, lineno, "token id");
            tokens = TokenPlacement(vals.begin(), vals.end());
        } else if (kind == "cv") {
            if (n < 0) throw ParseError(lineno, "color line before header");
            cv.emplace();
            std::string tok;
            while (in >> tok) cv->push_back((int)parse_int(tok, lineno));
            if ((int)cv->size() != n) throw ParseError(lineno, "expected n vertex colors");
        } else if (kind == "ct") {
            if (n < 0) throw ParseError(lineno, "color line before header");
            ct.emplace();
            std::string tok;
            while (in >> tok) ct->push_back((int)parse_int(tok, lineno));
            if ((int)ct->size() != n) throw ParseError(lineno, "expected n token colors");
        } else {
            throw ParseError(lineno, "unknown line kind '" + kind + "'");
        }
    }

    if (n < 0) throw ParseError(lineno, "missing 'p tsw' header");
    if ((long)edges.size() != m)
        throw ParseError(lineno, "header announced " + std::to_string(m) + " edges, file has " +
                                     std::to_string(edges.size()));
    if (!tokens) throw ParseError(lineno, "missing token line");
    if (!is_permutation(*tokens)) throw InvalidPermutation("token line is not a permutation of 1..n");
    if (cv.has_value() != ct.has_value())
        throw ParseError(lineno, "cv and ct must appear together");

    Instance inst;
    inst.graph = Graph(n, std::move(edges));
    if (!inst.graph.is_connected()) throw DisconnectedGraph();
    inst.placement = std::move(*tokens);
    inst.token_colors = std::move(ct);
    inst.vertex_colors = std::move(cv);
    if (inst.colored()) inst.as_colored();  // validates the color multisets
    return inst;
}

std::string emit_instance(const Instance& inst) {
    std::ostringstream out;
    out << "p tsw " << inst.graph.n << ' ' << inst.graph.edges.size() << '\n';
    for (auto [u, v] : inst.graph.edges) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    out << 't';
    for (int t : inst.placement) out << ' ' << t + 1;
    out << '\n';
    if (inst.vertex_colors) {
        out << "cv";
        for (int c : *inst.vertex_colors) out << ' ' << c;
        out << '\n';
        out << "ct";
        for (int c : *inst.token_colors) out << ' ' << c;
        out << '\n';
    }
    return out.str();
}

Instance load_instance_file(const std::string& path) { return parse_instance(read_file(path)); }

SwapSequence parse_swap_sequence(const std::string& text) {
    std::istringstream ss(text);
    std::string raw;
    int lineno = 0;
    SwapSequence seq;
    std::optional<long> count;
    while (std::getline(ss, raw)) {
        ++lineno;
        std::string line = clean_line(raw);
        if (line.empty()) continue;
        std::istringstream in(line);
        std::string kind;
        in >> kind;
        if (kind == "s") {
            std::string a, b;
            if (!(in >> a >> b)) throw ParseError(lineno, "expected 's <u> <v>'");
            long u = parse_int(a, lineno), v = parse_int(b, lineno);
            if (u < 1 || v < 1 || u == v) throw ParseError(lineno, "bad swap endpoints");
            seq.emplace_back((int)u - 1, (int)v - 1);
        } else if (kind == "k") {
            std::string a;
            if (!(in >> a)) throw ParseError(lineno, "expected 'k <count>'");
            count = parse_int(a, lineno);
        } else {
            throw ParseError(lineno, "unknown line kind '" + kind + "'");
        }
    }
    if (count && *count != (long)seq.size())
        throw ParseError(lineno, "swap count line disagrees with number of swaps");
    return seq;
}

std::string emit_swap_sequence(const SwapSequence& seq) {
    std::ostringstream out;
    for (auto [u, v] : seq) out << "s " << u + 1 << ' ' << v + 1 << '\n';
    out << "k " << seq.size() << '\n';
    return out.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot write file: " + path);
    out << content;
}

}  // namespace tsw
