#include "qha/systems.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "qha/errors.hpp"

namespace qha::systems {

using algcore::ideal_from_generators;
using algcore::ideal_product;
using algcore::is_ideal;
using algcore::jacobson_radical;
using algcore::quotient_algebra;
using exactla::kernel;
using exactla::Matrix;
using exactla::unit_vec;
using exactla::Vec;
using exactla::vstack;

IdealSystem::IdealSystem(FDAlgebra parent, std::size_t d,
                         std::vector<std::vector<Ideal>> grid)
    : parent_(std::move(parent)), d_(d), grid_(std::move(grid)) {
    if (d_ == 0) throw DimensionMismatch("ideal system: d must be at least 1");
    if (grid_.size() != d_ + 1)
        throw DimensionMismatch("ideal system: grid must have d+1 rows");
    for (const auto& row : grid_) {
        if (row.size() != d_ + 1)
            throw DimensionMismatch("ideal system: grid must have d+1 columns");
        for (const auto& entry : row)
            if (entry.ambient() != parent_.dim())
                throw DimensionMismatch("ideal system: entry ambient != algebra dimension");
    }
}

const Ideal& IdealSystem::at(std::size_t i, std::size_t j) const {
    if (i < 1 || j < 1 || i > d_ + 1 || j > d_ + 1)
        throw DimensionMismatch("ideal system: index out of range");
    return grid_[i - 1][j - 1];
}

IdealSystem system_from_upper(FDAlgebra parent, std::size_t d,
                              const std::vector<Ideal>& upper_row_major) {
    if (upper_row_major.size() != d * (d + 1) / 2)
        throw DimensionMismatch("system_from_upper: wrong number of entries");
    const Subspace full = Subspace::full(parent.dim());
    std::vector<std::vector<Ideal>> grid(d + 1, std::vector<Ideal>(d + 1, full));
    std::size_t t = 0;
    for (std::size_t i = 1; i <= d + 1; ++i)
        for (std::size_t j = i + 1; j <= d + 1; ++j) grid[i - 1][j - 1] = upper_row_major[t++];
    return IdealSystem(std::move(parent), d, std::move(grid));
}

void validate_system(const IdealSystem& s) {
    const FDAlgebra& r = s.parent();
    const std::size_t n = s.size();
    const Subspace full = Subspace::full(r.dim());
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) {
            if (i >= j && s.at(i, j) != full)
                throw ValidationError("grid entry (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") must be the whole algebra");
            if (!is_ideal(r, s.at(i, j)))
                throw ValidationError("grid entry (" + std::to_string(i) + "," +
                                      std::to_string(j) + ") is not a two-sided ideal");
        }
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            for (std::size_t k = 1; k <= n; ++k) {
                const Ideal prod = ideal_product(r, s.at(i, j), s.at(j, k));
                if (!s.at(i, k).contains(prod))
                    throw ValidationError(
                        "product axiom fails: I(" + std::to_string(i) + "," +
                        std::to_string(j) + ") * I(" + std::to_string(j) + "," +
                        std::to_string(k) + ") is not inside I(" + std::to_string(i) + "," +
                        std::to_string(k) + ")");
            }
}

std::vector<bool> semisimple_levels(const IdealSystem& s) {
    std::vector<bool> out;
    for (std::size_t k = 1; k <= s.d(); ++k) {
        const auto q = quotient_algebra(s.parent(), s.at(k, k + 1));
        out.push_back(algcore::is_semisimple(q.algebra));
    }
    return out;
}

bool is_semisimple_system(const IdealSystem& s) {
    const auto levels = semisimple_levels(s);
    return std::all_of(levels.begin(), levels.end(), [](bool b) { return b; });
}

Ideal transporter(const FDAlgebra& r, const Subspace& m, const Subspace& n) {
    const std::size_t dim = r.dim();
    if (m.dim() == 0) return Subspace::full(dim);
    // x*m lies in n for each basis m: rows of (reduce mod n) of right_mult(m)
    Matrix stacked(0, dim);
    bool first = true;
    for (std::size_t t = 0; t < m.dim(); ++t) {
        Matrix rm = r.right_mult(m.basis().row(t));
        // reduce each column modulo n: postcompose with the canonical projection
        Matrix reduced(dim, dim);
        for (std::size_t j = 0; j < dim; ++j) {
            Vec col(dim);
            for (std::size_t i = 0; i < dim; ++i) col[i] = rm.at(i, j);
            const Vec red = n.reduce(col);
            for (std::size_t i = 0; i < dim; ++i) reduced.at(i, j) = red[i];
        }
        stacked = first ? reduced : vstack(stacked, reduced);
        first = false;
    }
    return Subspace::span(dim, kernel(stacked));
}

IdealSystem power_system(const FDAlgebra& r, const Ideal& l, std::size_t d) {
    if (!is_ideal(r, l)) throw ValidationError("power_system: not a two-sided ideal");
    std::vector<Subspace> powers{Subspace::full(r.dim())};  // L^0 = R
    for (std::size_t k = 1; k <= d; ++k) powers.push_back(ideal_product(r, powers.back(), l));
    std::vector<std::vector<Ideal>> grid(d + 1, std::vector<Ideal>(d + 1));
    for (std::size_t i = 1; i <= d + 1; ++i)
        for (std::size_t j = 1; j <= d + 1; ++j)
            grid[i - 1][j - 1] = transporter(r, powers[d + 1 - j], powers[d + 1 - i]);
    return IdealSystem(r, d, std::move(grid));
}

IdealSystem jacobson_system(const FDAlgebra& r) {
    const std::size_t len = algcore::loewy_length(r);
    return power_system(r, jacobson_radical(r), len == 0 ? 1 : len);
}

IdealSystem dual_system(const IdealSystem& s) {
    const std::size_t n = s.size();
    std::vector<std::vector<Ideal>> grid(n, std::vector<Ideal>(n));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j)
            grid[i - 1][j - 1] = s.at(n + 1 - j, n + 1 - i);
    return IdealSystem(algcore::opposite(s.parent()), s.d(), std::move(grid));
}

IdealSystem truncate(const IdealSystem& s) {
    if (s.d() < 2) throw DimensionMismatch("truncate: need d >= 2");
    const std::size_t n = s.d();  // new side length
    std::vector<std::vector<Ideal>> grid(n, std::vector<Ideal>(n));
    for (std::size_t i = 1; i <= n; ++i)
        for (std::size_t j = 1; j <= n; ++j) grid[i - 1][j - 1] = s.at(i, j);
    return IdealSystem(s.parent(), s.d() - 1, std::move(grid));
}

RigidDualityReport verify_rigid_duality(const FDAlgebra& r) {
    RigidDualityReport rep;
    rep.rigidity = algcore::rigidity(r);
    const IdealSystem mine = jacobson_system(r);
    const IdealSystem theirs = jacobson_system(algcore::opposite(r));
    rep.dual_is_opposite_radical_grid = dual_system(mine) == theirs;
    rep.agree = rep.rigidity.rigid == rep.dual_is_opposite_radical_grid;
    return rep;
}

namespace {

std::string subspace_key(const Subspace& s) {
    std::string k = std::to_string(s.dim()) + "|";
    for (std::size_t i = 0; i < s.basis().rows(); ++i)
        for (std::size_t j = 0; j < s.basis().cols(); ++j)
            k += exactla::format_rational(s.basis().at(i, j)) + ",";
    return k;
}

}  // namespace

std::vector<Ideal> ideal_lattice(const FDAlgebra& r, std::size_t max_count) {
    const std::size_t n = r.dim();
    std::map<std::string, Ideal> seen;
    auto insert = [&](const Ideal& id) {
        const std::string key = subspace_key(id);
        if (seen.count(key)) return false;
        seen.emplace(key, id);
        return true;
    };
    insert(Subspace::zero(n));
    insert(Subspace::full(n));
    // principal ideals over the generator schedule
    std::vector<Vec> gens;
    for (std::size_t i = 0; i < n; ++i) gens.push_back(unit_vec(n, i));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            gens.push_back(exactla::add(unit_vec(n, i), unit_vec(n, j)));
            gens.push_back(exactla::sub(unit_vec(n, i), unit_vec(n, j)));
        }
    for (long t : {2, 3, 5}) {
        Vec v(n);
        exactla::Scalar w(1);
        for (std::size_t k = 0; k < n; ++k) {
            v[k] = w;
            w *= t;
        }
        gens.push_back(v);
    }
    for (const auto& g : gens) insert(ideal_from_generators(r, {g}));
    // close under sum, intersection, product
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Ideal> current;
        for (const auto& [k, v] : seen) current.push_back(v);
        for (std::size_t a = 0; a < current.size(); ++a)
            for (std::size_t b = 0; b < current.size(); ++b) {
                if (seen.size() > max_count)
                    throw Error("ideal lattice enumeration exceeded " +
                                std::to_string(max_count) + " members");
                if (a < b) {
                    grew |= insert(sum(current[a], current[b]));
                    grew |= insert(intersect(current[a], current[b]));
                }
                grew |= insert(ideal_product(r, current[a], current[b]));
            }
    }
    std::vector<Ideal> out;
    for (const auto& [k, v] : seen) out.push_back(v);
    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
        if (a.dim() != b.dim()) return a.dim() < b.dim();
        return subspace_key(a) < subspace_key(b);
    });
    return out;
}

std::vector<IdealSystem> enumerate_semisimple_systems(const FDAlgebra& r, std::size_t d) {
    return enumerate_semisimple_systems(r, d, ideal_lattice(r));
}

std::vector<IdealSystem> enumerate_semisimple_systems(const FDAlgebra& r, std::size_t d,
                                                      const std::vector<Ideal>& pool) {
    const std::size_t cells = d * (d + 1) / 2;
    std::vector<IdealSystem> out;
    // levels must be semisimple; precompute which pool members qualify
    std::vector<bool> level_ok(pool.size());
    for (std::size_t p = 0; p < pool.size(); ++p) {
        const auto q = quotient_algebra(r, pool[p]);
        level_ok[p] = algcore::is_semisimple(q.algebra);
    }
    // choice[t] indexes pool for the t-th upper-triangle cell (row-major)
    std::vector<std::size_t> choice(cells, 0);
    const auto cell_of = [&](std::size_t i, std::size_t j) {
        // 1 <= i < j <= d+1, row-major position
        std::size_t t = 0;
        for (std::size_t a = 1; a < i; ++a) t += d + 1 - a;
        return t + (j - i - 1);
    };
    for (;;) {
        // semisimple filter on the superdiagonal, then grid axioms
        bool ok = true;
        for (std::size_t k = 1; k <= d && ok; ++k)
            if (!level_ok[choice[cell_of(k, k + 1)]]) ok = false;
        if (ok) {
            std::vector<Ideal> upper(cells);
            for (std::size_t t = 0; t < cells; ++t) upper[t] = pool[choice[t]];
            IdealSystem cand = system_from_upper(r, d, upper);
            try {
                validate_system(cand);
                out.push_back(std::move(cand));
            } catch (const ValidationError&) {
            }
        }
        // odometer increment
        std::size_t t = cells;
        while (t-- > 0) {
            if (++choice[t] < pool.size()) break;
            choice[t] = 0;
            if (t == 0) return out;
        }
        if (choice == std::vector<std::size_t>(cells, 0)) return out;
    }
}

}  // namespace qha::systems
