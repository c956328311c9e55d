// Quivers with rational-coefficient path relations, a text format for them,
// and construction of the (finite-dimensional) path algebra modulo the
// relation ideal. Paths compose right to left: in "g*f", f acts first.
#ifndef QHA_QUIVER_HPP
#define QHA_QUIVER_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "qha/algebra.hpp"

namespace qha::quiver {

using algcore::FDAlgebra;
using exactla::Scalar;

struct Quiver {
    std::vector<std::string> vertices;
    struct Arrow {
        std::string label;
        std::size_t src, tgt;
    };
    std::vector<Arrow> arrows;
    // One term of a relation: coef * (arrow sequence, first-applied first).
    struct Term {
        Scalar coef;
        std::vector<std::size_t> arrows_applied;
    };
    using Relation = std::vector<Term>;
    std::vector<Relation> relations;  // each sums to zero in the path algebra
};

// Text format, one directive per line, '#' comments:
//   vertex a b ...
//   arrow f a b            (f: a -> b)
//   relation g*f = 0
//   relation h*g - 2*k*f = 0
// Relation terms are whitespace-separated, joined by + or -; a term is an
// optional rational coefficient and a * -joined arrow path. Every term must
// have length >= 2 (admissible relations) and all terms of one relation must
// share source and target.
Quiver parse_quiver(const std::string& text);
std::string write_quiver(const Quiver& q);

struct PathAlgebra {
    FDAlgebra algebra;
    Quiver quiver;
    std::vector<std::string> basis_paths;       // label per basis element
    std::vector<std::size_t> vertex_units;      // basis index of each e_v
    std::vector<std::size_t> arrow_elements;    // basis index of each arrow
    std::size_t bound = 0;                      // path length bound used
};

// Basis = path classes surviving the relation ideal, enumerated up to twice
// the bound (default bound: 2 * (vertices + arrows)). If any class of length
// beyond the bound survives, finiteness cannot be certified and
// InfiniteDimensional is raised.
PathAlgebra build_path_algebra(const Quiver& q, std::size_t max_path_len = 0);

}  // namespace qha::quiver

#endif
