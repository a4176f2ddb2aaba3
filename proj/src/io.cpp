#include "denopt/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "denopt/errors.hpp"

namespace denopt {

namespace {

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError(path + ": cannot open file");
    return in;
}

// Reads the next line, skipping blank ones; false at end of input.
bool next_line(std::istream& in, std::string& line, int& lineno) {
    while (std::getline(in, line)) {
        ++lineno;
        if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
}

long long parse_int(const std::string& name, int lineno, const std::string& token) {
    try {
        std::size_t pos = 0;
        long long value = std::stoll(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        return value;
    } catch (const std::exception&) {
        throw FormatError(name, lineno, "expected an integer, got '" + token + "'");
    }
}

std::vector<std::string> tokens_of(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string tok;
    while (ss >> tok) out.push_back(tok);
    return out;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t pos = 0;
            long long v = std::stoll(text, &pos);
            if (pos != text.size()) throw std::invalid_argument(text);
            return Rational(v);
        }
        std::size_t pos = 0;
        long long num = std::stoll(text.substr(0, slash), &pos);
        if (pos != slash) throw std::invalid_argument(text);
        long long den = std::stoll(text.substr(slash + 1), &pos);
        if (pos != text.size() - slash - 1) throw std::invalid_argument(text);
        return Rational(num, den);
    } catch (const std::domain_error&) {
        throw FormatError("'" + text + "' has a zero denominator");
    } catch (const std::exception&) {
        throw FormatError("'" + text + "' is not a rational number");
    }
}

SetFunctionOracle load_graph(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_graph(in, path);
}

SetFunctionOracle read_graph(std::istream& in, const std::string& name) {
    std::string line;
    int lineno = 0;
    if (!next_line(in, line, lineno)) throw FormatError(name, 1, "missing 'n m' header");
    auto header = tokens_of(line);
    if (header.size() != 2) throw FormatError(name, lineno, "header must be 'n m'");
    long long n = parse_int(name, lineno, header[0]);
    long long m = parse_int(name, lineno, header[1]);
    if (n < 1) throw FormatError(name, lineno, "need at least one vertex");
    if (m < 0) throw FormatError(name, lineno, "negative edge count");

    std::vector<Edge> edges;
    bool weighted = false;
    for (long long i = 0; i < m; ++i) {
        if (!next_line(in, line, lineno))
            throw FormatError(name, lineno + 1, "expected " + std::to_string(m) + " edges, got " +
                                                    std::to_string(i));
        auto toks = tokens_of(line);
        if (toks.size() != 2 && toks.size() != 3)
            throw FormatError(name, lineno, "edge line must be 'u v' or 'u v w'");
        long long u = parse_int(name, lineno, toks[0]);
        long long v = parse_int(name, lineno, toks[1]);
        long long w = 1;
        if (toks.size() == 3) {
            weighted = true;
            w = parse_int(name, lineno, toks[2]);
            if (w < 1) throw FormatError(name, lineno, "edge weight must be positive");
        }
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw FormatError(name, lineno, "vertex id out of range");
        if (u == v) throw FormatError(name, lineno, "self-loops are forbidden");
        edges.push_back({static_cast<int>(u), static_cast<int>(v), w});
    }
    if (next_line(in, line, lineno)) throw FormatError(name, lineno, "trailing content after edges");

    try {
        GroundSet ground(static_cast<int>(n));
        return weighted ? SetFunctionOracle::weighted_graph(ground, std::move(edges))
                        : SetFunctionOracle::graph(ground, std::move(edges));
    } catch (const InvalidInstanceError& e) {
        throw FormatError(name + ": " + e.what());
    }
}

SetFunctionOracle load_table(const std::string& path) {
    std::ifstream in = open_or_throw(path);
    return read_table(in, path);
}

SetFunctionOracle read_table(std::istream& in, const std::string& name) {
    std::string line;
    int lineno = 0;
    if (!next_line(in, line, lineno)) throw FormatError(name, 1, "missing element count");
    auto header = tokens_of(line);
    if (header.size() != 1) throw FormatError(name, lineno, "header must be a single 'n'");
    long long n = parse_int(name, lineno, header[0]);
    if (n < 1 || n > 24) throw FormatError(name, lineno, "element count must be in 1..24");

    const std::uint64_t size = std::uint64_t{1} << n;
    std::vector<Rational> values(size);
    std::vector<bool> seen(size, false);
    for (std::uint64_t i = 0; i < size; ++i) {
        if (!next_line(in, line, lineno))
            throw FormatError(name, lineno + 1,
                              "expected " + std::to_string(size) + " 'mask value' lines");
        auto toks = tokens_of(line);
        if (toks.size() != 2) throw FormatError(name, lineno, "table line must be 'mask value'");
        long long mask = parse_int(name, lineno, toks[0]);
        if (mask < 0 || static_cast<std::uint64_t>(mask) >= size)
            throw FormatError(name, lineno, "mask out of range");
        if (seen[mask]) throw FormatError(name, lineno, "duplicate mask " + std::to_string(mask));
        seen[mask] = true;
        try {
            values[mask] = parse_rational(toks[1]);
        } catch (const FormatError& e) {
            throw FormatError(name, lineno, e.what());
        }
    }
    if (next_line(in, line, lineno))
        throw FormatError(name, lineno, "trailing content after table");

    try {
        return SetFunctionOracle::table(GroundSet(static_cast<int>(n)), std::move(values));
    } catch (const InvalidInstanceError& e) {
        throw FormatError(name + ": " + e.what());
    }
}

MatroidOracle load_matroid(const std::string& path, const GroundSet& ground) {
    std::ifstream in = open_or_throw(path);
    return read_matroid(in, path, ground);
}

MatroidOracle read_matroid(std::istream& in, const std::string& name, const GroundSet& ground) {
    nlohmann::json spec;
    try {
        in >> spec;
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(name + ": invalid JSON: " + e.what());
    }
    try {
        std::string type = spec.at("type").get<std::string>();
        if (type == "cardinality")
            return MatroidOracle::cardinality(ground, spec.at("r").get<int>());
        if (type == "partition")
            return MatroidOracle::partition(ground,
                                            spec.at("blocks").get<std::vector<std::vector<int>>>(),
                                            spec.at("limits").get<std::vector<int>>());
        if (type == "explicit")
            return MatroidOracle::explicit_family(
                ground, spec.at("independent").get<std::vector<std::vector<int>>>());
        throw FormatError(name + ": unknown matroid type '" + type + "'");
    } catch (const nlohmann::json::exception& e) {
        throw FormatError(name + ": " + e.what());
    } catch (const Error& e) {
        throw FormatError(name + ": " + e.what());
    }
}

KnapsackConstraint load_weights(const std::string& path, int n, long long threshold) {
    std::ifstream in = open_or_throw(path);
    return read_weights(in, path, n, threshold);
}

KnapsackConstraint read_weights(std::istream& in, const std::string& name, int n,
                                long long threshold) {
    if (threshold < 0) throw FormatError(name + ": threshold must be nonnegative");
    KnapsackConstraint c;
    c.weights.assign(n, 0);
    c.threshold = threshold;
    std::string line;
    int lineno = 0;
    while (next_line(in, line, lineno)) {
        auto toks = tokens_of(line);
        if (toks.size() != 2) throw FormatError(name, lineno, "weight line must be 'id weight'");
        long long id = parse_int(name, lineno, toks[0]);
        long long w = parse_int(name, lineno, toks[1]);
        if (id < 0 || id >= n) throw FormatError(name, lineno, "element id out of range");
        if (w < 0) throw FormatError(name, lineno, "weights must be nonnegative");
        c.weights[id] = w;
    }
    return c;
}

DependencyDigraph load_arcs(const std::string& path, const GroundSet& ground) {
    std::ifstream in = open_or_throw(path);
    return read_arcs(in, path, ground);
}

DependencyDigraph read_arcs(std::istream& in, const std::string& name, const GroundSet& ground) {
    std::vector<std::pair<int, int>> arcs;
    std::string line;
    int lineno = 0;
    while (next_line(in, line, lineno)) {
        auto toks = tokens_of(line);
        if (toks.size() != 2) throw FormatError(name, lineno, "arc line must be 'a b'");
        long long a = parse_int(name, lineno, toks[0]);
        long long b = parse_int(name, lineno, toks[1]);
        if (a < 0 || a >= ground.size() || b < 0 || b >= ground.size())
            throw FormatError(name, lineno, "element id out of range");
        arcs.push_back({static_cast<int>(a), static_cast<int>(b)});
    }
    return DependencyDigraph(ground, std::move(arcs));
}

}  // namespace denopt
