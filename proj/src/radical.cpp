// Radical, semisimplicity, Loewy data, annihilators. The radical comes from
// the trace form (valid in characteristic 0) and is then certified
// structurally, so a wrong answer cannot escape.
#include <string>

#include "qha/algebra.hpp"
#include "qha/errors.hpp"

namespace qha::algcore {

using exactla::kernel;
using exactla::Matrix;
using exactla::unit_vec;
using exactla::vstack;

namespace {

Scalar trace_of_product(const Matrix& a, const Matrix& b) {
    Scalar t(0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a.at(i, j) != 0 && b.at(j, i) != 0) t += a.at(i, j) * b.at(j, i);
    return t;
}

Ideal radical_uncertified(const FDAlgebra& a) {
    const std::size_t n = a.dim();
    std::vector<Matrix> lm;
    lm.reserve(n);
    for (std::size_t i = 0; i < n; ++i) lm.push_back(a.left_mult(unit_vec(n, i)));
    Matrix gram(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            gram.at(i, j) = trace_of_product(lm[i], lm[j]);
            gram.at(j, i) = gram.at(i, j);
        }
    }
    return Subspace::span(n, kernel(gram));
}

}  // namespace

Ideal jacobson_radical(const FDAlgebra& a) {
    const Ideal j = radical_uncertified(a);
    if (!is_ideal(a, j))
        throw ValidationError("radical certification failed: not a two-sided ideal");
    // nilpotency: powers must reach zero within dim steps
    Ideal power = j;
    std::size_t steps = 0;
    while (power.dim() > 0) {
        if (++steps > a.dim() + 1)
            throw NotNilpotent("radical certification failed: power series does not vanish");
        Ideal next = ideal_product(a, power, j);
        if (next.dim() >= power.dim())
            throw NotNilpotent("radical certification failed: power series stalls at dim " +
                               std::to_string(power.dim()));
        power = next;
    }
    // the quotient must have zero trace-form radical
    if (j.dim() < a.dim()) {
        const QuotientAlgebra q = quotient_algebra(a, j);
        if (radical_uncertified(q.algebra).dim() != 0)
            throw ValidationError("radical certification failed: quotient not semisimple");
    }
    return j;
}

bool is_semisimple(const FDAlgebra& a) { return jacobson_radical(a).dim() == 0; }

std::vector<Ideal> radical_series(const FDAlgebra& a) {
    std::vector<Ideal> series{Subspace::full(a.dim())};
    const Ideal j = jacobson_radical(a);
    Ideal power = j;
    while (series.back().dim() > 0) {
        series.push_back(power);
        power = ideal_product(a, power, j);
    }
    return series;
}

std::size_t loewy_length(const FDAlgebra& a) { return radical_series(a).size() - 1; }

Subspace left_annihilator(const FDAlgebra& a, const Subspace& w) {
    const std::size_t n = a.dim();
    if (w.dim() == 0) return Subspace::full(n);
    Matrix stacked(0, n);
    for (std::size_t r = 0; r < w.dim(); ++r) {
        // x*w = right_mult(w) applied to x
        stacked = r == 0 ? a.right_mult(w.basis().row(r))
                         : vstack(stacked, a.right_mult(w.basis().row(r)));
    }
    return Subspace::span(n, kernel(stacked));
}

Subspace right_annihilator(const FDAlgebra& a, const Subspace& w) {
    const std::size_t n = a.dim();
    if (w.dim() == 0) return Subspace::full(n);
    Matrix stacked(0, n);
    for (std::size_t r = 0; r < w.dim(); ++r) {
        stacked = r == 0 ? a.left_mult(w.basis().row(r))
                         : vstack(stacked, a.left_mult(w.basis().row(r)));
    }
    return Subspace::span(n, kernel(stacked));
}

std::vector<Subspace> left_socle_series(const FDAlgebra& a) {
    const std::vector<Ideal> powers = radical_series(a);
    // soc_k = {x : J^k x = 0}; powers[k] = J^k with the convention J^0 = A
    std::vector<Subspace> socs;
    for (std::size_t k = 0; k < powers.size(); ++k)
        socs.push_back(right_annihilator(a, powers[k]));
    return socs;
}

RigidityReport rigidity(const FDAlgebra& a) {
    RigidityReport rep;
    const std::vector<Ideal> powers = radical_series(a);
    rep.loewy = powers.size() - 1;
    rep.rigid = true;
    for (std::size_t i = 0; i < powers.size(); ++i) {
        const Ideal& complement = powers[rep.loewy - i];  // J^(len-i)
        const Subspace killed_left = right_annihilator(a, complement);  // {x : w*x = 0}
        const Subspace killed_right = left_annihilator(a, complement);  // {x : x*w = 0}
        const bool match = killed_left == powers[i] && killed_right == powers[i];
        rep.levels.push_back({powers[i].dim(), killed_left.dim(), killed_right.dim(), match});
        if (!match && !rep.witness_i) {
            rep.rigid = false;
            rep.witness_i = i;
        }
    }
    return rep;
}

}  // namespace qha::algcore
