#include "qha/rational.hpp"

#include <cctype>

#include "qha/errors.hpp"

namespace qha::exactla {

namespace {

bool is_signed_integer(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Scalar parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    if (!is_signed_integer(num))
        throw ParseError("bad rational literal '" + text + "'");
    if (slash == std::string::npos) {
        Scalar x(num);
        x.canonicalize();
        return x;
    }
    const std::string den = text.substr(slash + 1);
    if (!is_signed_integer(den) || den[0] == '-' || den[0] == '+')
        throw ParseError("bad rational literal '" + text + "'");
    mpz_class d(den);
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    Scalar x(mpz_class(num), d);
    x.canonicalize();
    return x;
}

std::string format_rational(Scalar x) {
    x.canonicalize();
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Scalar frac(long num, long den) {
    Scalar x(num, den);
    x.canonicalize();
    return x;
}

Vec zero_vec(std::size_t n) { return Vec(n, Scalar(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
    Vec v(n, Scalar(0));
    v.at(i) = 1;
    return v;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector add: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw DimensionMismatch("vector sub: size mismatch");
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Scalar& c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

}  // namespace qha::exactla
