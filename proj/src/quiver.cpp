#include "qha/quiver.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "qha/errors.hpp"

namespace qha::quiver {

using exactla::Subspace;
using exactla::Vec;

namespace {

bool valid_name(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw ParseError("quiver line " + std::to_string(line) + ": " + msg);
}

}  // namespace

Quiver parse_quiver(const std::string& text) {
    Quiver q;
    std::map<std::string, std::size_t> vtx, arr;
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string w; ls >> w;) tok.push_back(w);
        if (tok.empty()) continue;
        if (tok[0] == "vertex") {
            if (tok.size() < 2) fail(lineno, "vertex needs at least one name");
            for (std::size_t i = 1; i < tok.size(); ++i) {
                if (!valid_name(tok[i])) fail(lineno, "bad vertex name '" + tok[i] + "'");
                if (vtx.count(tok[i])) fail(lineno, "duplicate vertex '" + tok[i] + "'");
                vtx[tok[i]] = q.vertices.size();
                q.vertices.push_back(tok[i]);
            }
        } else if (tok[0] == "arrow") {
            if (tok.size() != 4) fail(lineno, "expected: arrow <label> <src> <tgt>");
            if (!valid_name(tok[1])) fail(lineno, "bad arrow label '" + tok[1] + "'");
            if (arr.count(tok[1]) || vtx.count(tok[1]))
                fail(lineno, "name '" + tok[1] + "' already in use");
            if (!vtx.count(tok[2])) fail(lineno, "unknown vertex '" + tok[2] + "'");
            if (!vtx.count(tok[3])) fail(lineno, "unknown vertex '" + tok[3] + "'");
            arr[tok[1]] = q.arrows.size();
            q.arrows.push_back({tok[1], vtx[tok[2]], vtx[tok[3]]});
        } else if (tok[0] == "relation") {
            // grammar: term (('+'|'-') term)* '=' '0'
            if (tok.size() < 4 || tok[tok.size() - 2] != "=" || tok.back() != "0")
                fail(lineno, "relation must end with '= 0'");
            Quiver::Relation rel;
            Scalar sign(1);
            bool expect_term = true;
            for (std::size_t i = 1; i + 2 < tok.size(); ++i) {
                const std::string& w = tok[i];
                if (!expect_term) {
                    if (w == "+") sign = 1;
                    else if (w == "-") sign = -1;
                    else fail(lineno, "expected + or - before '" + w + "'");
                    expect_term = true;
                    continue;
                }
                // term: [coef*]label(*label)*
                std::vector<std::string> pieces;
                std::string piece;
                std::istringstream ws(w);
                while (std::getline(ws, piece, '*')) pieces.push_back(piece);
                if (pieces.empty()) fail(lineno, "empty term");
                Quiver::Term term;
                term.coef = sign;
                std::size_t first = 0;
                if (!pieces[0].empty() &&
                    (std::isdigit(static_cast<unsigned char>(pieces[0][0])) ||
                     pieces[0][0] == '-' || pieces[0][0] == '+')) {
                    try {
                        term.coef = sign * exactla::parse_rational(pieces[0]);
                    } catch (const ParseError&) {
                        fail(lineno, "bad coefficient '" + pieces[0] + "'");
                    }
                    first = 1;
                }
                if (pieces.size() - first < 2)
                    fail(lineno, "relation term must be a path of length >= 2");
                for (std::size_t p = pieces.size(); p-- > first;) {
                    if (!arr.count(pieces[p]))
                        fail(lineno, "unknown arrow '" + pieces[p] + "'");
                    term.arrows_applied.push_back(arr[pieces[p]]);
                }
                // composability within the term
                for (std::size_t p = 0; p + 1 < term.arrows_applied.size(); ++p) {
                    const auto& a = q.arrows[term.arrows_applied[p]];
                    const auto& b = q.arrows[term.arrows_applied[p + 1]];
                    if (a.tgt != b.src)
                        fail(lineno, "path does not compose at '" + a.label + "'");
                }
                rel.push_back(std::move(term));
                expect_term = false;
            }
            if (expect_term) fail(lineno, "relation ends without a term");
            // all terms share endpoints
            const auto src0 = q.arrows[rel[0].arrows_applied.front()].src;
            const auto tgt0 = q.arrows[rel[0].arrows_applied.back()].tgt;
            for (const auto& t : rel) {
                if (q.arrows[t.arrows_applied.front()].src != src0 ||
                    q.arrows[t.arrows_applied.back()].tgt != tgt0)
                    fail(lineno, "relation terms have mismatched endpoints");
            }
            q.relations.push_back(std::move(rel));
        } else {
            fail(lineno, "unknown directive '" + tok[0] + "'");
        }
    }
    if (q.vertices.empty()) throw ParseError("quiver has no vertices");
    return q;
}

std::string write_quiver(const Quiver& q) {
    std::ostringstream out;
    out << "vertex";
    for (const auto& v : q.vertices) out << " " << v;
    out << "\n";
    for (const auto& a : q.arrows)
        out << "arrow " << a.label << " " << q.vertices[a.src] << " " << q.vertices[a.tgt]
            << "\n";
    for (const auto& rel : q.relations) {
        out << "relation ";
        for (std::size_t t = 0; t < rel.size(); ++t) {
            Scalar c = rel[t].coef;
            if (t == 0) {
                if (c < 0) {
                    out << "-";
                    c = -c;
                }
            } else {
                out << (c < 0 ? " - " : " + ");
                if (c < 0) c = -c;
            }
            if (c != 1) out << exactla::format_rational(c) << "*";
            for (std::size_t p = rel[t].arrows_applied.size(); p-- > 0;) {
                out << q.arrows[rel[t].arrows_applied[p]].label;
                if (p > 0) out << "*";
            }
        }
        out << " = 0\n";
    }
    return out.str();
}

namespace {

struct Path {
    std::size_t src, tgt;
    std::vector<std::size_t> arrows;  // first-applied first; empty = trivial at src
};

std::string path_label(const Quiver& q, const Path& p) {
    if (p.arrows.empty()) return "e_" + q.vertices[p.src];
    std::string s;
    for (std::size_t i = p.arrows.size(); i-- > 0;) {
        s += q.arrows[p.arrows[i]].label;
        if (i > 0) s += "*";
    }
    return s;
}

}  // namespace

PathAlgebra build_path_algebra(const Quiver& q, std::size_t max_path_len) {
    const std::size_t bound =
        max_path_len ? max_path_len : 2 * (q.vertices.size() + q.arrows.size());
    const std::size_t cap = 2 * bound;

    // enumerate paths by length up to cap; stop early if a length level is
    // empty. Trivial paths share the empty arrow list, so index by (src, seq).
    std::vector<Path> paths;
    std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> idx;
    std::vector<std::vector<std::size_t>> by_level(1);
    for (std::size_t v = 0; v < q.vertices.size(); ++v) {
        idx[{v, {}}] = paths.size();
        by_level[0].push_back(paths.size());
        paths.push_back({v, v, {}});
    }
    for (std::size_t len = 1; len <= cap; ++len) {
        std::vector<std::size_t> level;
        for (std::size_t pi : by_level[len - 1]) {
            // copy, since `paths` reallocates inside the loop
            const Path base = paths[pi];
            for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                if (q.arrows[a].src != base.tgt) continue;
                Path ext{base.src, q.arrows[a].tgt, base.arrows};
                ext.arrows.push_back(a);
                level.push_back(paths.size());
                idx[{ext.src, ext.arrows}] = paths.size();
                paths.push_back(std::move(ext));
            }
        }
        if (level.empty()) break;
        by_level.push_back(std::move(level));
    }
    const std::size_t n_paths = paths.size();
    const std::size_t longest = by_level.size() - 1;

    // relation ideal: seed vectors, then saturate by arrow composition on
    // both sides within the enumerated range. Composition only lengthens
    // paths, so this span is exactly the relation ideal on the range for
    // length-homogeneous relations (and a subspace of it otherwise).
    std::vector<Vec> seeds;
    for (const auto& rel : q.relations) {
        Vec v = exactla::zero_vec(n_paths);
        for (const auto& t : rel) {
            if (t.arrows_applied.size() > longest)
                throw ValidationError(
                    "relation term longer than the enumerated path range; raise the path "
                    "length bound");
            const auto key = std::make_pair(q.arrows[t.arrows_applied.front()].src,
                                            t.arrows_applied);
            v[idx.at(key)] += t.coef;
        }
        seeds.push_back(std::move(v));
    }
    Subspace ideal = Subspace::span(n_paths, seeds);
    std::vector<Vec> work = seeds;
    while (!work.empty()) {
        std::vector<Vec> next;
        for (const auto& v : work) {
            for (int side = 0; side < 2; ++side) {
                for (std::size_t a = 0; a < q.arrows.size(); ++a) {
                    Vec composed = exactla::zero_vec(n_paths);
                    bool any = false, overflow = false;
                    for (std::size_t p = 0; p < n_paths; ++p) {
                        if (v[p] == 0) continue;
                        const Path& base = paths[p];
                        if (side == 0) {  // arrow after the path
                            if (q.arrows[a].src != base.tgt) {
                                continue;
                            }
                            Path ext{base.src, q.arrows[a].tgt, base.arrows};
                            ext.arrows.push_back(a);
                            auto it = idx.find({ext.src, ext.arrows});
                            if (it == idx.end()) {
                                overflow = true;
                                break;
                            }
                            composed[it->second] += v[p];
                            any = true;
                        } else {  // arrow before the path
                            if (q.arrows[a].tgt != base.src) {
                                continue;
                            }
                            Path ext{q.arrows[a].src, base.tgt, {}};
                            ext.arrows.push_back(a);
                            ext.arrows.insert(ext.arrows.end(), base.arrows.begin(),
                                              base.arrows.end());
                            auto it = idx.find({ext.src, ext.arrows});
                            if (it == idx.end()) {
                                overflow = true;
                                break;
                            }
                            composed[it->second] += v[p];
                            any = true;
                        }
                    }
                    if (overflow || !any || exactla::is_zero_vec(composed)) continue;
                    if (!ideal.contains(composed)) {
                        ideal = sum(ideal, Subspace::span(n_paths, {composed}));
                        next.push_back(std::move(composed));
                    }
                }
            }
        }
        work = std::move(next);
    }

    // quotient basis: surviving path classes
    exactla::QuotientMap qm(ideal);
    const std::size_t dim = qm.dim();
    for (std::size_t t = 0; t < dim; ++t) {
        const Path& p = paths[qm.rep_coords()[t]];
        if (p.arrows.size() > bound)
            throw InfiniteDimensional(
                "path class '" + path_label(q, p) + "' of length " +
                std::to_string(p.arrows.size()) + " survives the relations; the quotient "
                "cannot be certified finite-dimensional within bound " +
                std::to_string(bound));
    }

    std::vector<std::vector<Vec>> table(dim, std::vector<Vec>(dim, exactla::zero_vec(dim)));
    for (std::size_t i = 0; i < dim; ++i) {
        const Path& pi = paths[qm.rep_coords()[i]];
        for (std::size_t j = 0; j < dim; ++j) {
            const Path& pj = paths[qm.rep_coords()[j]];
            // product pi * pj = "pj then pi"
            if (pj.tgt != pi.src) continue;
            Path prod{pj.src, pi.tgt, pj.arrows};
            prod.arrows.insert(prod.arrows.end(), pi.arrows.begin(), pi.arrows.end());
            auto it = idx.find({prod.src, prod.arrows});
            if (it == idx.end())
                throw InfiniteDimensional(
                    "product of surviving classes leaves the enumerated range; raise the "
                    "path length bound");
            table[i][j] = qm.project(exactla::unit_vec(n_paths, it->second));
        }
    }

    PathAlgebra pa;
    pa.quiver = q;
    pa.bound = bound;
    Vec unit = exactla::zero_vec(dim);
    std::vector<std::string> labels(dim);
    pa.vertex_units.assign(q.vertices.size(), 0);
    pa.arrow_elements.assign(q.arrows.size(), 0);
    for (std::size_t t = 0; t < dim; ++t) {
        const Path& p = paths[qm.rep_coords()[t]];
        labels[t] = path_label(q, p);
        pa.basis_paths.push_back(labels[t]);
        if (p.arrows.empty()) {
            unit[t] = 1;
            pa.vertex_units[p.src] = t;
        } else if (p.arrows.size() == 1) {
            pa.arrow_elements[p.arrows[0]] = t;
        }
    }
    pa.algebra = FDAlgebra(std::move(table), std::move(unit), std::move(labels));
    return pa;
}

}  // namespace qha::quiver
