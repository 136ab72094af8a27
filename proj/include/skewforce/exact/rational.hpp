#ifndef SKEWFORCE_EXACT_RATIONAL_HPP
#define SKEWFORCE_EXACT_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <vector>

#include "skewforce/errors.hpp"
#include "skewforce/vertex_set.hpp"

namespace skewforce {

using Integer = mpz_class;
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
using IntegerVector = std::vector<Integer>;

// Always "p/q", including q = 1, so the text form is unambiguous.
inline std::string to_fraction_string(Rational q) {
    q.canonicalize();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

// Accepts "p/q" or a bare integer "p".
inline Rational parse_rational(const std::string& text) {
    Rational q;
    if (text.empty() || q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw ValidationError("not a rational number: '" + text + "'");
    q.canonicalize();
    return q;
}

// Zero locus: coordinates where x vanishes.
inline VertexSet zero_locus(const RationalVector& x) {
    VertexSet z(static_cast<int>(x.size()));
    for (std::size_t i = 0; i < x.size(); ++i)
        if (x[i] == 0) z.insert(static_cast<int>(i));
    return z;
}

// Divides by the gcd of the entries and makes the first nonzero entry positive.
inline void make_primitive(IntegerVector& v) {
    Integer g = 0;
    for (const Integer& x : v) g = gcd(g, x);
    if (g == 0) return;
    for (Integer& x : v) x /= g;
    for (const Integer& x : v) {
        if (x != 0) {
            if (x < 0)
                for (Integer& y : v) y = -y;
            break;
        }
    }
}

// Scales a rational vector to a primitive integer vector on the same line.
inline IntegerVector to_primitive_integer(const RationalVector& v) {
    Integer l = 1;
    for (const Rational& x : v) l = lcm(l, x.get_den());
    IntegerVector out;
    out.reserve(v.size());
    for (const Rational& x : v) out.push_back(Integer(x * l));
    make_primitive(out);
    return out;
}

inline RationalVector to_rational(const IntegerVector& v) { return RationalVector(v.begin(), v.end()); }

} // namespace skewforce

#endif // SKEWFORCE_EXACT_RATIONAL_HPP
