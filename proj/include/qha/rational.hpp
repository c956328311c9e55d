// Exact scalar type. All arithmetic in the toolkit runs over the rationals,
// backed by GMP; values are kept in canonical form (reduced, denominator > 0).
#ifndef QHA_RATIONAL_HPP
#define QHA_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

namespace qha::exactla {

using Scalar = mpq_class;
using Vec = std::vector<Scalar>;

// Accepts "p", "-p", "p/q" with optional sign on p; q must be positive and
// nonzero. Throws ParseError otherwise.
Scalar parse_rational(const std::string& text);

// Inverse of parse_rational: "p" for integers, "p/q" otherwise.
std::string format_rational(Scalar x);

// num/den in canonical form. mpq_class(num, den) alone does not reduce, and
// GMP comparisons assume reduced operands, so always build fractions here.
Scalar frac(long num, long den);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero_vec(const Vec& v);

Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Scalar& c, const Vec& a);

}  // namespace qha::exactla

#endif
