// Text formats for algebras, ideal grids, and modules, plus the file helpers
// shared by the command-line tool. Parsers throw ParseError with line or key
// context; writers are deterministic, so identical values serialize to
// byte-identical text.
#ifndef QHA_IO_HPP
#define QHA_IO_HPP

#include <cstddef>
#include <string>

#include "qha/algebra.hpp"
#include "qha/module.hpp"
#include "qha/systems.hpp"

namespace qha::io {

using algcore::FDAlgebra;
using repmod::AModule;
using systems::IdealSystem;

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// Structure-constant format, '#' comments, blank lines ignored:
//   algebra dim=<n>
//   label <i> <name>          (optional, 0-based)
//   unit <n rationals>
//   mul <i> <j> <n rationals>  (coordinates of basis_i * basis_j; all n^2
//                               pairs required, each exactly once)
FDAlgebra parse_algebra(const std::string& text);
std::string write_algebra(const FDAlgebra& a);

// Dispatches on the first directive: "algebra" reads structure constants,
// "vertex" reads the quiver format and builds its path algebra.
FDAlgebra parse_algebra_auto(const std::string& text, std::size_t max_path_len = 0);

// Grid format (JSON): {"d": 2, "ideals": {"1,2": ["e_a","f"], ...}}.
// Keys are strict-upper positions "i,j" (1-based); a value is "*" for the
// whole algebra, a list of generators otherwise (basis label strings or
// coordinate vectors as rational-string arrays); each listed generator set
// is closed to a two-sided ideal. Missing positions default to "*".
IdealSystem parse_system(const std::string& text, const FDAlgebra& parent);
std::string write_system(const IdealSystem& s);

// Module format over a fixed algebra with a basis elements:
//   module dim=<n>
//   act <i> <n*n rationals>    (row-major action matrix of basis_i; all a
//                               indices required, each exactly once)
AModule parse_module(const std::string& text, const FDAlgebra& a);
std::string write_module(const AModule& m);

}  // namespace qha::io

#endif
