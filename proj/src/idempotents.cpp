// Primitive orthogonal idempotents, basic algebra, Gabriel quiver. The
// semisimple quotient is split by minimal-polynomial spectral projectors over
// a fixed candidate schedule; splits lift through the radical by the cubic
// Newton step. Any uncertainty ends in a typed error, never a wrong list.
#include <algorithm>
#include <numeric>
#include <optional>
#include <string>

#include "qha/algebra.hpp"
#include "qha/errors.hpp"

namespace qha::algcore {

using exactla::is_zero_vec;
using exactla::Matrix;
using exactla::mul_vec;
using exactla::sub;
using exactla::transpose;
using exactla::unit_vec;
using exactla::Vec;
using exactla::zero_vec;

namespace {

// --- polynomial helpers (coefficients low to high, no trailing zeros) ---

using Poly = std::vector<Scalar>;

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

std::size_t poly_deg(const Poly& p) { return p.empty() ? 0 : p.size() - 1; }

Poly poly_mul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    poly_trim(r);
    return r;
}

// quotient and remainder of a by b (b nonzero)
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
    if (b.empty()) throw Error("polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    Poly q(a.size() - b.size() + 1, Scalar(0));
    for (std::size_t shift = q.size(); shift-- > 0;) {
        const std::size_t d = shift + b.size() - 1;  // degree eliminated this step
        if (a[d] == 0) continue;
        const Scalar c = a[d] / b.back();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
    }
    poly_trim(a);
    poly_trim(q);
    return {q, a};
}

// g = gcd (monic), plus u with u*a + v*b = g; v returned too
struct ExtGcd {
    Poly g, u, v;
};

ExtGcd poly_ext_gcd(Poly a, Poly b) {
    Poly u0{Scalar(1)}, v0{}, u1{}, v1{Scalar(1)};
    while (!b.empty()) {
        auto [q, r] = poly_divmod(a, b);
        Poly u2 = u0, v2 = v0;
        // u2 -= q*u1, v2 -= q*v1
        Poly qu = poly_mul(q, u1), qv = poly_mul(q, v1);
        u2.resize(std::max(u2.size(), qu.size()), Scalar(0));
        for (std::size_t i = 0; i < qu.size(); ++i) u2[i] -= qu[i];
        poly_trim(u2);
        v2.resize(std::max(v2.size(), qv.size()), Scalar(0));
        for (std::size_t i = 0; i < qv.size(); ++i) v2[i] -= qv[i];
        poly_trim(v2);
        a = b;
        u0 = u1;
        v0 = v1;
        b = r;
        u1 = u2;
        v1 = v2;
    }
    if (!a.empty() && a.back() != 1) {
        const Scalar lead = a.back();
        for (auto& c : a) c /= lead;
        for (auto& c : u0) c /= lead;
        for (auto& c : v0) c /= lead;
    }
    return {a, u0, v0};
}

Scalar poly_eval(const Poly& p, const Scalar& x) {
    Scalar r(0);
    for (std::size_t i = p.size(); i-- > 0;) r = r * x + p[i];
    return r;
}

// all rational roots with multiplicity, ascending
std::vector<std::pair<Scalar, std::size_t>> rational_roots(Poly p) {
    std::vector<std::pair<Scalar, std::size_t>> roots;
    if (p.size() <= 1) return roots;
    // factor out t = 0
    std::size_t zero_mult = 0;
    while (p.size() > 1 && p[0] == 0) {
        p.erase(p.begin());
        ++zero_mult;
    }
    if (zero_mult) roots.push_back({Scalar(0), zero_mult});
    if (p.size() <= 1) {
        std::sort(roots.begin(), roots.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return roots;
    }
    // clear denominators to a primitive integer polynomial
    mpz_class den(1);
    for (const auto& c : p) den = lcm(den, c.get_den());
    std::vector<mpz_class> ip;
    for (const auto& c : p) ip.push_back(mpz_class(c.get_num() * (den / c.get_den())));
    mpz_class a0 = abs(ip.front()), an = abs(ip.back());
    auto divisors = [](const mpz_class& n) {
        std::vector<mpz_class> ds;
        for (mpz_class i = 1; i * i <= n; ++i)
            if (n % i == 0) {
                ds.push_back(i);
                if (i * i != n) ds.push_back(n / i);
            }
        return ds;
    };
    std::vector<std::pair<Scalar, std::size_t>> found;
    for (const auto& num : divisors(a0)) {
        for (const auto& q : divisors(an)) {
            for (int sgn : {1, -1}) {
                Scalar cand(sgn * num, q);
                cand.canonicalize();
                bool seen = false;
                for (const auto& f : found)
                    if (f.first == cand) seen = true;
                if (seen) continue;
                if (poly_eval(p, cand) != 0) continue;
                // strip (t - cand)^mult
                std::size_t mult = 0;
                Poly lin{-cand, Scalar(1)};
                for (;;) {
                    auto [quot, rem] = poly_divmod(p, lin);
                    if (!rem.empty()) break;
                    p = quot;
                    ++mult;
                }
                found.push_back({cand, mult});
                if (p.size() <= 1) goto done;
            }
        }
    }
done:
    for (auto& f : found) roots.push_back(f);
    std::sort(roots.begin(), roots.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return roots;
}

// --- algebra-side helpers ---

Vec poly_apply(const FDAlgebra& a, const Poly& p, const Vec& x) {
    Vec r = zero_vec(a.dim());
    for (std::size_t i = p.size(); i-- > 0;) {
        r = a.mul(r, x);
        if (p[i] != 0) {
            const Vec scaled = exactla::scale(p[i], a.unit());
            r = exactla::add(r, scaled);
        }
    }
    return r;
}

Poly minimal_polynomial(const FDAlgebra& a, const Vec& x) {
    const std::size_t n = a.dim();
    std::vector<Vec> powers{a.unit()};
    for (std::size_t k = 1; k <= n; ++k) {
        powers.push_back(a.mul(powers.back(), x));
        // does x^k depend on lower powers?
        Matrix m(k, n);
        for (std::size_t i = 0; i < k; ++i) m.set_row(i, powers[i]);
        const auto sol = exactla::solve(transpose(m), powers[k]);
        if (sol) {
            Poly mu(k + 1, Scalar(0));
            mu[k] = 1;
            for (std::size_t i = 0; i < k; ++i) mu[i] = -(*sol)[i];
            return mu;
        }
    }
    throw Error("minimal polynomial: no dependency within dimension bound");
}

// nontrivial idempotent in Q[x], if the minimal polynomial splits off a
// rational-root factor coprime to the rest
std::optional<Vec> splitting_idempotent(const FDAlgebra& a, const Vec& x) {
    const Poly mu = minimal_polynomial(a, x);
    if (poly_deg(mu) < 2) return std::nullopt;
    const auto roots = rational_roots(mu);
    if (roots.empty()) return std::nullopt;
    Poly p{Scalar(1)};
    {
        // p = (t - r0)^mult for the least root
        Poly lin{-roots[0].first, Scalar(1)};
        for (std::size_t i = 0; i < roots[0].second; ++i) p = poly_mul(p, lin);
    }
    if (poly_deg(p) == poly_deg(mu)) return std::nullopt;  // mu is a single linear power
    const Poly g = poly_divmod(mu, p).first;
    const ExtGcd e = poly_ext_gcd(p, g);
    if (poly_deg(e.g) != 0) throw Error("splitting idempotent: factors not coprime");
    // f = (v*g)(x) is 1 mod p and 0 mod g; rescale by the gcd constant
    Poly vg = poly_mul(e.v, g);
    for (auto& c : vg) c /= e.g[0];
    Vec f = poly_apply(a, vg, x);
    if (a.mul(f, f) != f || is_zero_vec(f) || f == a.unit())
        throw Error("splitting idempotent: certification failed");
    return f;
}

// complete primitive orthogonal decomposition of 1 in a semisimple algebra
void refine_semisimple(const FDAlgebra& ss, const Vec& e, std::vector<Vec>& out) {
    const CornerAlgebra c = corner_algebra(ss, e);
    const std::size_t m = c.algebra.dim();
    if (m == 0) throw Error("refine: zero corner for a nonzero idempotent");
    if (m == 1) {
        out.push_back(e);
        return;
    }
    std::vector<Vec> candidates;
    for (std::size_t k = 0; k < m; ++k) candidates.push_back(unit_vec(m, k));
    for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = k + 1; l < m; ++l) {
            candidates.push_back(exactla::add(unit_vec(m, k), unit_vec(m, l)));
            candidates.push_back(sub(unit_vec(m, k), unit_vec(m, l)));
        }
    for (long t : {2, 3, 5, 7, 11, 13}) {
        Vec v(m);
        Scalar w(1);
        for (std::size_t k = 0; k < m; ++k) {
            v[k] = w;
            w *= t;
        }
        candidates.push_back(v);
    }
    for (const auto& cand : candidates) {
        const auto split = splitting_idempotent(c.algebra, cand);
        if (!split) continue;
        const Vec f = c.embed(*split);
        refine_semisimple(ss, f, out);
        refine_semisimple(ss, sub(e, f), out);
        return;
    }
    throw NonSplitSemisimpleQuotient(
        "semisimple corner of dimension " + std::to_string(m) +
        " admits no rational spectral split; matrix block structure over Q "
        "cannot be certified");
}

}  // namespace

std::vector<Vec> primitive_orthogonal_idempotents(const FDAlgebra& a) {
    if (a.is_zero()) return {};
    const Ideal j = jacobson_radical(a);
    const QuotientAlgebra q = quotient_algebra(a, j);
    std::vector<Vec> bars;
    refine_semisimple(q.algebra, q.algebra.unit(), bars);

    std::vector<Vec> lifted;
    Vec c = a.unit();
    for (const Vec& bar : bars) {
        const Vec y = q.map.lift(bar);
        Vec z = a.mul(c, a.mul(y, c));
        bool idem = false;
        for (int iter = 0; iter < 64; ++iter) {
            if (a.mul(z, z) == z) {
                idem = true;
                break;
            }
            const Vec z2 = a.mul(z, z);
            const Vec z3 = a.mul(z2, z);
            z = sub(exactla::scale(Scalar(3), z2), exactla::scale(Scalar(2), z3));
        }
        if (!idem) throw Error("idempotent lift did not converge");
        lifted.push_back(z);
        c = sub(c, z);
    }
    // certify the complete system
    Vec total = zero_vec(a.dim());
    for (const auto& e : lifted) total = exactla::add(total, e);
    if (total != a.unit()) throw Error("idempotent system does not sum to 1");
    for (std::size_t i = 0; i < lifted.size(); ++i)
        for (std::size_t k = 0; k < lifted.size(); ++k) {
            const Vec prod = a.mul(lifted[i], lifted[k]);
            if (i == k ? prod != lifted[i] : !is_zero_vec(prod))
                throw Error("idempotent system is not orthogonal");
        }
    return lifted;
}

namespace {

// partition primitive idempotents by isomorphism class of their projectives:
// same Wedderburn block of A/J, i.e. nonzero corner between the images
std::vector<std::vector<std::size_t>> block_classes(const FDAlgebra& a,
                                                    const std::vector<Vec>& prims) {
    const Ideal j = jacobson_radical(a);
    const QuotientAlgebra q = quotient_algebra(a, j);
    const std::size_t m = q.algebra.dim();
    std::vector<Vec> bars;
    for (const auto& e : prims) bars.push_back(q.map.project(e));
    auto related = [&](std::size_t x, std::size_t y) {
        for (std::size_t k = 0; k < m; ++k) {
            const Vec mid = q.algebra.mul(bars[x], q.algebra.mul(unit_vec(m, k), bars[y]));
            if (!is_zero_vec(mid)) return true;
        }
        return false;
    };
    std::vector<long> cls(prims.size(), -1);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t i = 0; i < prims.size(); ++i) {
        if (cls[i] >= 0) continue;
        cls[i] = static_cast<long>(classes.size());
        classes.push_back({i});
        for (std::size_t k = i + 1; k < prims.size(); ++k)
            if (cls[k] < 0 && related(i, k)) {
                cls[k] = cls[i];
                classes.back().push_back(k);
            }
    }
    return classes;
}

}  // namespace

BasicAlgebra basic_algebra(const FDAlgebra& a) {
    const std::vector<Vec> prims = primitive_orthogonal_idempotents(a);
    const auto classes = block_classes(a, prims);
    Vec e = zero_vec(a.dim());
    for (const auto& cl : classes) e = exactla::add(e, prims[cl.front()]);
    const CornerAlgebra c = corner_algebra(a, e);
    return BasicAlgebra{c.algebra, e, classes, c.basis};
}

QuiverData gabriel_quiver(const FDAlgebra& a) {
    const std::vector<Vec> prims = primitive_orthogonal_idempotents(a);
    const auto classes = block_classes(a, prims);
    const Ideal j = jacobson_radical(a);
    const Ideal j2 = ideal_product(a, j, j);
    QuiverData q;
    for (std::size_t v = 0; v < classes.size(); ++v)
        q.vertex_names.push_back("v" + std::to_string(v));
    q.arrows.assign(classes.size(), std::vector<std::size_t>(classes.size(), 0));
    for (std::size_t tgt = 0; tgt < classes.size(); ++tgt)
        for (std::size_t src = 0; src < classes.size(); ++src) {
            const Vec& et = prims[classes[tgt].front()];
            const Vec& es = prims[classes[src].front()];
            std::vector<Vec> gens;
            for (std::size_t r = 0; r < j.dim(); ++r)
                gens.push_back(a.mul(et, a.mul(j.basis().row(r), es)));
            const Subspace w = Subspace::span(a.dim(), gens);
            q.arrows[tgt][src] = sum(w, j2).dim() - j2.dim();
        }
    return q;
}

std::vector<std::size_t> canonical_quiver_form(const QuiverData& q) {
    const std::size_t n = q.vertex_names.size();
    if (n > 9) throw Error("canonical quiver form: too many vertices");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::size_t> best;
    do {
        // key[a][b] = arrows[perm(a)][perm(b)]
        std::vector<std::size_t> key;
        key.reserve(n * n);
        for (std::size_t x = 0; x < n; ++x)
            for (std::size_t y = 0; y < n; ++y) key.push_back(q.arrows[perm[x]][perm[y]]);
        if (best.empty() || key < best) best = key;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool same_quiver_shape(const QuiverData& a, const QuiverData& b) {
    if (a.vertex_names.size() != b.vertex_names.size()) return false;
    return canonical_quiver_form(a) == canonical_quiver_form(b);
}

MorphismCheck check_algebra_morphism(const FDAlgebra& a, const FDAlgebra& b,
                                     const Matrix& phi) {
    MorphismCheck c;
    c.shape_ok = phi.rows() == b.dim() && phi.cols() == a.dim();
    if (!c.shape_ok) return c;
    c.unital = mul_vec(phi, a.unit()) == b.unit();
    c.multiplicative = true;
    for (std::size_t i = 0; i < a.dim() && c.multiplicative; ++i)
        for (std::size_t k = 0; k < a.dim(); ++k) {
            const Vec lhs = mul_vec(phi, a.table(i, k));
            const Vec rhs =
                b.mul(mul_vec(phi, unit_vec(a.dim(), i)), mul_vec(phi, unit_vec(a.dim(), k)));
            if (lhs != rhs) {
                c.multiplicative = false;
                break;
            }
        }
    c.bijective = a.dim() == b.dim() && exactla::rank(phi) == a.dim();
    return c;
}

}  // namespace qha::algcore
