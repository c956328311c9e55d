#include "qha/io.hpp"

#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "qha/errors.hpp"
#include "qha/quiver.hpp"
#include "qha/rational.hpp"
#include "qha/subspace.hpp"

namespace qha::io {

using exactla::Scalar;
using exactla::Subspace;
using exactla::Vec;
using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "' for reading");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open '" + path + "' for writing");
    out << text;
    if (!out) throw Error("write to '" + path + "' failed");
}

namespace {

[[noreturn]] void fail(std::size_t lineno, const std::string& what) {
    throw ParseError("line " + std::to_string(lineno) + ": " + what);
}

// Comment-stripped, whitespace-split lines with their 1-based numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> directives(const std::string& text) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
    std::istringstream in(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string w;
        while (ls >> w) tok.push_back(w);
        if (!tok.empty()) out.emplace_back(lineno, std::move(tok));
    }
    return out;
}

std::size_t parse_index(std::size_t lineno, const std::string& tok, std::size_t bound,
                        const std::string& what) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
        v = std::stoul(tok, &pos);
    } catch (const std::exception&) {
        fail(lineno, "bad " + what + " '" + tok + "'");
    }
    if (pos != tok.size()) fail(lineno, "bad " + what + " '" + tok + "'");
    if (v >= bound)
        fail(lineno, what + " " + tok + " out of range (dimension " + std::to_string(bound) + ")");
    return static_cast<std::size_t>(v);
}

Vec parse_vec(std::size_t lineno, const std::vector<std::string>& tok, std::size_t from,
              std::size_t n) {
    if (tok.size() != from + n)
        fail(lineno, "expected " + std::to_string(n) + " rationals, got " +
                         std::to_string(tok.size() - from));
    Vec v(n);
    for (std::size_t t = 0; t < n; ++t) {
        try {
            v[t] = exactla::parse_rational(tok[from + t]);
        } catch (const ParseError& e) {
            fail(lineno, e.what());
        }
    }
    return v;
}

std::string format_vec(const Vec& v) {
    std::string s;
    for (std::size_t t = 0; t < v.size(); ++t) {
        if (t) s += ' ';
        s += exactla::format_rational(v[t]);
    }
    return s;
}

std::size_t parse_dim_header(std::size_t lineno, const std::vector<std::string>& tok,
                             const std::string& keyword) {
    if (tok.size() != 2 || tok[0] != keyword || tok[1].rfind("dim=", 0) != 0)
        fail(lineno, "expected header '" + keyword + " dim=<n>'");
    const std::string num = tok[1].substr(4);
    std::size_t pos = 0;
    unsigned long n = 0;
    try {
        n = std::stoul(num, &pos);
    } catch (const std::exception&) {
        fail(lineno, "bad dimension '" + num + "'");
    }
    if (pos != num.size()) fail(lineno, "bad dimension '" + num + "'");
    return static_cast<std::size_t>(n);
}

}  // namespace

FDAlgebra parse_algebra(const std::string& text) {
    auto lines = directives(text);
    if (lines.empty()) throw ParseError("empty algebra file");
    const std::size_t n = parse_dim_header(lines[0].first, lines[0].second, "algebra");

    std::vector<std::vector<Vec>> table(n, std::vector<Vec>(n));
    std::vector<std::vector<bool>> seen(n, std::vector<bool>(n, false));
    std::vector<std::string> labels(n);
    bool any_label = false;
    Vec unit;
    std::size_t unit_line = 0;

    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto lineno = lines[k].first;
        const auto& tok = lines[k].second;
        if (tok[0] == "unit") {
            if (unit_line) fail(lineno, "duplicate unit line (first at line " +
                                            std::to_string(unit_line) + ")");
            unit = parse_vec(lineno, tok, 1, n);
            unit_line = lineno;
        } else if (tok[0] == "mul") {
            if (tok.size() < 3) fail(lineno, "expected: mul <i> <j> <rationals>");
            std::size_t i = parse_index(lineno, tok[1], n, "basis index");
            std::size_t j = parse_index(lineno, tok[2], n, "basis index");
            if (seen[i][j])
                fail(lineno, "duplicate product " + std::to_string(i) + " " + std::to_string(j));
            table[i][j] = parse_vec(lineno, tok, 3, n);
            seen[i][j] = true;
        } else if (tok[0] == "label") {
            if (tok.size() != 3) fail(lineno, "expected: label <i> <name>");
            std::size_t i = parse_index(lineno, tok[1], n, "basis index");
            labels[i] = tok[2];
            any_label = true;
        } else {
            fail(lineno, "unknown directive '" + tok[0] + "'");
        }
    }
    if (!unit_line && n > 0) throw ParseError("missing unit line");
    if (n == 0) unit = Vec{};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!seen[i][j])
                throw ParseError("missing product line for pair " + std::to_string(i) + " " +
                                 std::to_string(j));
    if (!any_label) labels.clear();
    return FDAlgebra(std::move(table), std::move(unit), std::move(labels));
}

std::string write_algebra(const FDAlgebra& a) {
    const std::size_t n = a.dim();
    std::string out = "algebra dim=" + std::to_string(n) + "\n";
    if (!a.labels().empty())
        for (std::size_t i = 0; i < n; ++i)
            out += "label " + std::to_string(i) + " " + a.label(i) + "\n";
    if (n > 0) out += "unit " + format_vec(a.unit()) + "\n";
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out += "mul " + std::to_string(i) + " " + std::to_string(j) + " " +
                   format_vec(a.table(i, j)) + "\n";
    return out;
}

FDAlgebra parse_algebra_auto(const std::string& text, std::size_t max_path_len) {
    auto lines = directives(text);
    if (lines.empty()) throw ParseError("empty algebra file");
    const std::string& head = lines[0].second[0];
    if (head == "algebra") return parse_algebra(text);
    if (head == "vertex")
        return quiver::build_path_algebra(quiver::parse_quiver(text), max_path_len).algebra;
    fail(lines[0].first, "expected an 'algebra' or 'vertex' header, got '" + head + "'");
}

namespace {

[[noreturn]] void jfail(const std::string& what) { throw ParseError("system file: " + what); }

// "i,j" with 1 <= i < j <= side, both 1-based.
std::pair<std::size_t, std::size_t> parse_key(const std::string& key, std::size_t side) {
    auto comma = key.find(',');
    if (comma == std::string::npos || comma == 0 || comma + 1 == key.size())
        jfail("bad position key '" + key + "' (expected \"i,j\")");
    std::size_t i = 0, j = 0;
    try {
        std::size_t pos = 0;
        i = std::stoul(key.substr(0, comma), &pos);
        if (pos != comma) jfail("bad position key '" + key + "'");
        j = std::stoul(key.substr(comma + 1), &pos);
        if (pos != key.size() - comma - 1) jfail("bad position key '" + key + "'");
    } catch (const std::exception&) {
        jfail("bad position key '" + key + "'");
    }
    if (i < 1 || j <= i || j > side)
        jfail("position " + key + " outside the strict upper triangle of side " +
              std::to_string(side));
    return {i, j};
}

Vec generator_from_json(const json& g, const FDAlgebra& r) {
    const std::size_t n = r.dim();
    if (g.is_string()) {
        const std::string name = g.get<std::string>();
        std::size_t found = n;
        for (std::size_t i = 0; i < n; ++i)
            if (r.label(i) == name) {
                if (found != n) jfail("basis label '" + name + "' is ambiguous");
                found = i;
            }
        if (found == n) jfail("unknown basis label '" + name + "'");
        return exactla::unit_vec(n, found);
    }
    if (g.is_array()) {
        if (g.size() != n)
            jfail("coordinate generator has " + std::to_string(g.size()) +
                  " entries, algebra dimension is " + std::to_string(n));
        Vec v(n);
        for (std::size_t t = 0; t < n; ++t) {
            const json& c = g[t];
            if (c.is_string())
                v[t] = exactla::parse_rational(c.get<std::string>());
            else if (c.is_number_integer())
                v[t] = Scalar(static_cast<long>(c.get<long long>()));
            else
                jfail("coordinate entries must be rational strings or integers");
        }
        return v;
    }
    jfail("a generator must be a basis label or a coordinate array");
}

}  // namespace

IdealSystem parse_system(const std::string& text, const FDAlgebra& parent) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        jfail(e.what());
    }
    if (!root.is_object()) jfail("top level must be an object");
    for (const auto& item : root.items())
        if (item.key() != "d" && item.key() != "ideals")
            jfail("unknown key '" + item.key() + "'");
    if (!root.contains("d") || !root["d"].is_number_integer() || root["d"].get<long long>() < 1)
        jfail("\"d\" must be a positive integer");
    const auto d = static_cast<std::size_t>(root["d"].get<long long>());
    if (d > 64) jfail("\"d\" too large");
    const std::size_t side = d + 1;
    const std::size_t n = parent.dim();

    // Default every strict-upper entry to the whole algebra.
    std::vector<algcore::Ideal> upper;
    std::map<std::pair<std::size_t, std::size_t>, algcore::Ideal> given;
    if (root.contains("ideals")) {
        if (!root["ideals"].is_object()) jfail("\"ideals\" must be an object");
        for (const auto& item : root["ideals"].items()) {
            auto pos = parse_key(item.key(), side);
            const json& val = item.value();
            if (val.is_string()) {
                if (val.get<std::string>() != "*")
                    jfail("entry " + item.key() + ": the only string value is \"*\"");
                given[pos] = Subspace::full(n);
            } else if (val.is_array()) {
                std::vector<Vec> gens;
                for (const json& g : val) gens.push_back(generator_from_json(g, parent));
                given[pos] = algcore::ideal_from_generators(parent, gens);
            } else {
                jfail("entry " + item.key() + ": expected \"*\" or a generator list");
            }
        }
    }
    for (std::size_t i = 1; i <= d; ++i)
        for (std::size_t j = i + 1; j <= side; ++j) {
            auto it = given.find({i, j});
            upper.push_back(it == given.end() ? Subspace::full(n) : it->second);
        }
    return systems::system_from_upper(parent, d, upper);
}

std::string write_system(const IdealSystem& s) {
    const FDAlgebra& r = s.parent();
    const std::size_t n = r.dim();
    json ideals = json::object();
    for (std::size_t i = 1; i <= s.d(); ++i)
        for (std::size_t j = i + 1; j <= s.d() + 1; ++j) {
            const auto& ideal = s.at(i, j);
            const std::string key = std::to_string(i) + "," + std::to_string(j);
            if (ideal.dim() == n) {
                ideals[key] = "*";
                continue;
            }
            json gens = json::array();
            for (std::size_t row = 0; row < ideal.dim(); ++row) {
                Vec v = ideal.basis().row(row);
                // A unit vector serializes as its basis label when that
                // label is unambiguous; anything else as coordinates.
                std::size_t support = n, extra = 0;
                for (std::size_t t = 0; t < n; ++t)
                    if (v[t] != 0) {
                        if (support == n && v[t] == 1)
                            support = t;
                        else
                            ++extra;
                    }
                bool as_label = support < n && extra == 0;
                if (as_label) {
                    const std::string name = r.label(support);
                    for (std::size_t t = 0; t < n && as_label; ++t)
                        if (t != support && r.label(t) == name) as_label = false;
                    if (as_label) {
                        gens.push_back(name);
                        continue;
                    }
                }
                json coords = json::array();
                for (std::size_t t = 0; t < n; ++t)
                    coords.push_back(exactla::format_rational(v[t]));
                gens.push_back(coords);
            }
            ideals[key] = gens;
        }
    json root;
    root["d"] = s.d();
    root["ideals"] = ideals;
    return root.dump(2) + "\n";
}

AModule parse_module(const std::string& text, const FDAlgebra& a) {
    auto lines = directives(text);
    if (lines.empty()) throw ParseError("empty module file");
    const std::size_t n = parse_dim_header(lines[0].first, lines[0].second, "module");
    const std::size_t adim = a.dim();

    std::vector<exactla::Matrix> action(adim, exactla::Matrix(n, n));
    std::vector<bool> seen(adim, false);
    for (std::size_t k = 1; k < lines.size(); ++k) {
        const auto lineno = lines[k].first;
        const auto& tok = lines[k].second;
        if (tok[0] != "act") fail(lineno, "unknown directive '" + tok[0] + "'");
        if (tok.size() < 2) fail(lineno, "expected: act <i> <rationals>");
        std::size_t i = parse_index(lineno, tok[1], adim, "algebra basis index");
        if (seen[i]) fail(lineno, "duplicate action for basis index " + std::to_string(i));
        Vec flat = parse_vec(lineno, tok, 2, n * n);
        for (std::size_t row = 0; row < n; ++row)
            for (std::size_t col = 0; col < n; ++col) action[i].at(row, col) = flat[row * n + col];
        seen[i] = true;
    }
    for (std::size_t i = 0; i < adim; ++i)
        if (!seen[i]) throw ParseError("missing action line for basis index " + std::to_string(i));
    return AModule(a, std::move(action), n);
}

std::string write_module(const AModule& m) {
    const std::size_t n = m.dim();
    std::string out = "module dim=" + std::to_string(n) + "\n";
    for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
        out += "act " + std::to_string(i);
        for (std::size_t row = 0; row < n; ++row)
            for (std::size_t col = 0; col < n; ++col)
                out += " " + exactla::format_rational(m.action(i).at(row, col));
        out += "\n";
    }
    return out;
}

}  // namespace qha::io
