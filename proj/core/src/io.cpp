#include "mclab/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace mclab {
namespace {

[[noreturn]] void fail(const std::string& name, int line, const std::string& msg) {
    throw InputError(name + ":" + std::to_string(line) + ": " + msg);
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> toks;
    std::istringstream ss(line);
    std::string t;
    while (ss >> t) toks.push_back(t);
    return toks;
}

int parse_int(const std::string& s, const std::string& name, int line) {
    int v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || p != s.data() + s.size())
        fail(name, line, "expected integer, got '" + s + "'");
    return v;
}

// Returns the value of a `key=value` token or fails.
std::string kv(const std::string& tok, const std::string& key,
               const std::string& name, int line) {
    std::string prefix = key + "=";
    if (tok.rfind(prefix, 0) != 0)
        fail(name, line, "expected " + key + "=..., got '" + tok + "'");
    return tok.substr(prefix.size());
}

} // namespace

ConceptClass read_mcc(std::istream& in, const std::string& name) {
    std::string line;
    int lineno = 0;
    if (!std::getline(in, line)) fail(name, 1, "empty file");
    ++lineno;
    auto header = split_ws(line);
    if (header.size() != 4 || header[0] != "mcc")
        fail(name, lineno, "header must be 'mcc k=<int> n=<int> mode=total|partial'");
    int k = parse_int(kv(header[1], "k", name, lineno), name, lineno);
    int n = parse_int(kv(header[2], "n", name, lineno), name, lineno);
    std::string mode_s = kv(header[3], "mode", name, lineno);
    ClassMode mode;
    if (mode_s == "total")
        mode = ClassMode::Total;
    else if (mode_s == "partial")
        mode = ClassMode::Partial;
    else
        fail(name, lineno, "mode must be total or partial");
    if (k < 1) fail(name, lineno, "k must be >= 1");
    if (n < 1) fail(name, lineno, "n must be >= 1");

    std::vector<Hypothesis> hyps;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (static_cast<int>(toks.size()) != n)
            fail(name, lineno, "expected " + std::to_string(n) + " tokens, got " +
                                   std::to_string(toks.size()));
        std::vector<int8_t> row;
        row.reserve(toks.size());
        for (const std::string& t : toks) {
            if (t == "*") {
                if (mode == ClassMode::Total)
                    fail(name, lineno, "'*' not allowed in total mode");
                row.push_back(static_cast<int8_t>(kStar));
            } else {
                int v = parse_int(t, name, lineno);
                if (v < 0 || v > k)
                    fail(name, lineno, "label " + t + " out of range 0.." + std::to_string(k));
                row.push_back(static_cast<int8_t>(v));
            }
        }
        hyps.emplace_back(std::move(row));
    }
    try {
        return ConceptClass(k, n, mode, std::move(hyps));
    } catch (const InputError& e) {
        throw InputError(name + ": " + e.what());
    }
}

ConceptClass read_mcc_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_mcc(in, path);
}

void write_mcc(std::ostream& out, const ConceptClass& cls) {
    out << "mcc k=" << cls.k() << " n=" << cls.domain_size() << " mode="
        << (cls.partial() ? "partial" : "total") << "\n";
    for (const Hypothesis& h : cls.hypotheses()) {
        for (int x = 0; x < cls.domain_size(); ++x) {
            if (x) out << ' ';
            Label v = h.at(x);
            if (is_star(v))
                out << '*';
            else
                out << v;
        }
        out << "\n";
    }
}

std::string mcc_to_string(const ConceptClass& cls) {
    std::ostringstream ss;
    write_mcc(ss, cls);
    return ss.str();
}

FiniteDistribution read_dist(std::istream& in, int domain_size, int k,
                             const std::string& name) {
    std::vector<Atom> atoms;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks.size() != 3) fail(name, lineno, "expected 'x y p'");
        int x = parse_int(toks[0], name, lineno);
        int y = parse_int(toks[1], name, lineno);
        double p = 0.0;
        try {
            size_t pos = 0;
            p = std::stod(toks[2], &pos);
            if (pos != toks[2].size()) throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            fail(name, lineno, "bad probability '" + toks[2] + "'");
        }
        atoms.push_back({x, y, p});
    }
    try {
        return FiniteDistribution(std::move(atoms), domain_size, k);
    } catch (const InputError& e) {
        throw InputError(name + ": " + e.what());
    }
}

FiniteDistribution read_dist_file(const std::string& path, int domain_size, int k) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    return read_dist(in, path, domain_size, k);
}

void write_dist(std::ostream& out, const FiniteDistribution& dist) {
    out.precision(17);
    for (const Atom& a : dist.atoms()) out << a.x << ' ' << a.y << ' ' << a.p << "\n";
}

} // namespace mclab
