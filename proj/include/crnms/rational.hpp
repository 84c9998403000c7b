#ifndef CRNMS_RATIONAL_HPP
#define CRNMS_RATIONAL_HPP

/// \file rational.hpp
/// Exact arithmetic types used throughout the library: arbitrary-precision
/// rationals (GMP) plus string/JSON conversion helpers.  All results that
/// certify anything are carried in these types; no floating point is used
/// anywhere in the decision paths.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace crnms {

using Rat = mpq_class;
using Int = mpz_class;

/// Canonical text form: "p" for integers, "p/q" otherwise (q > 0, reduced).
inline std::string rat_to_string(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_str();
}

/// Parses "p", "p/q", optionally signed.  Throws std::invalid_argument on
/// malformed input or zero denominator.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("sign without digits: " + s);
    bool seen_slash = false;
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] == '/') {
            if (seen_slash || j == i || j + 1 == s.size())
                throw std::invalid_argument("malformed rational: " + s);
            seen_slash = true;
        } else if (s[j] < '0' || s[j] > '9') {
            throw std::invalid_argument("malformed rational: " + s);
        }
    }
    Rat x;
    if (x.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + s);
    if (x.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    x.canonicalize();
    return x;
}

inline int sgn(const Rat& x) { return mpq_sgn(x.get_mpq_t()); }
inline int sgn(const Int& x) { return mpz_sgn(x.get_mpz_t()); }

inline Rat rat_abs(const Rat& x) { return sgn(x) < 0 ? Rat(-x) : x; }

/// Closed interval with rational endpoints, used for isolating intervals.
struct RatInterval {
    Rat lo, hi;

    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
};

using RatVec = std::vector<Rat>;
using IntVec = std::vector<long>;

}  // namespace crnms

#endif  // CRNMS_RATIONAL_HPP
