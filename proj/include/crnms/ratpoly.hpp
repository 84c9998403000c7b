#ifndef CRNMS_RATPOLY_HPP
#define CRNMS_RATPOLY_HPP

/// \file ratpoly.hpp
/// Dense univariate polynomials over the rationals, together with the exact
/// real-root machinery the witness layer relies on: Yun square-free
/// factorization, Sturm-chain root counting, and bisection-based isolation
/// of all roots in an open interval with certified multiplicities.

#include <optional>
#include <string>
#include <vector>

#include "crnms/rational.hpp"

namespace crnms {

/// Polynomial stored low-degree-first; invariant: no trailing zero
/// coefficients (the zero polynomial has an empty coefficient vector).
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(RatVec coeffs);
    static RatPoly constant(const Rat& c);
    /// x - r
    static RatPoly linear_root(const Rat& r);
    /// c * x^k
    static RatPoly monomial(const Rat& c, int k);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rat& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
    const RatVec& coeffs() const { return c_; }
    const Rat& leading() const { return c_.back(); }

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rat& f) const;
    RatPoly operator-() const;
    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    RatPoly derivative() const;
    Rat eval(const Rat& x) const;
    /// Quotient and remainder; divisor must be nonzero.
    std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;
    /// Exact division; throws std::logic_error if the remainder is nonzero.
    RatPoly divide_exact(const RatPoly& d) const;

    /// Monic associate (zero polynomial stays zero).
    RatPoly monic() const;
    /// Integer-primitive associate with positive leading coefficient:
    /// scaled by a positive rational so coefficients are coprime integers.
    RatPoly primitive() const;

    /// Number of strict sign changes in the coefficient sequence; by
    /// Descartes' rule this bounds the positive-root count (with
    /// multiplicity) and matches its parity.
    int sign_variations() const;

    /// All real roots lie in [-B, B] with B = 1 + max |a_i / a_n| (Cauchy).
    Rat cauchy_root_bound() const;

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    RatVec c_;
};

RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Yun decomposition p = lc * prod f_i^i with the f_i squarefree, pairwise
/// coprime, monic.  Entry i-1 of the result is f_i (possibly constant 1).
std::vector<RatPoly> squarefree_decomposition(const RatPoly& p);

/// prod f_i without multiplicities (monic), the radical of p.
RatPoly squarefree_part(const RatPoly& p);

/// One isolated real root of a polynomial.
struct IsolatedRoot {
    RatInterval interval;   ///< contains exactly this one root of the input
    int multiplicity = 1;
    /// Sign of p' at the root: -1, +1 for simple roots, 0 when mult > 1.
    int deriv_sign = 0;
    /// True when the root is itself rational and interval.lo == interval.hi.
    bool exact = false;
    /// Squarefree factor (monic) vanishing at this root; enables later
    /// refinement of the isolating interval.
    RatPoly factor;

    Rat value_or_mid() const { return exact ? interval.lo : interval.mid(); }
};

struct RootIsolation {
    std::vector<IsolatedRoot> roots;  ///< ascending, pairwise disjoint intervals
    int descartes_bound = 0;          ///< sign variations of the input
    int count_with_multiplicity = 0;  ///< over (0, inf), asserted <= bound
};

/// Open-interval domain (lo, hi); hi absent means +infinity.
struct OpenDomain {
    Rat lo;
    std::optional<Rat> hi;
};

/// Isolates every real root of p inside the open domain, with certified
/// multiplicities and p'-signs at simple roots.  Roots at the domain
/// endpoints are excluded.  Requires p nonzero and domain.lo >= 0; the
/// Descartes bound over (0, inf) is asserted on every call.
RootIsolation isolate_positive_roots(const RatPoly& p, const OpenDomain& domain);

/// Shrinks the isolating interval (bisection on root.factor) until its
/// width is at most `width`.  Exact roots are left untouched.
void refine_root(IsolatedRoot& root, const Rat& width);

/// Number of distinct real roots of p in the open interval; counts each
/// root once regardless of multiplicity.
int count_distinct_roots(const RatPoly& p, const OpenDomain& domain);

}  // namespace crnms

#endif  // CRNMS_RATPOLY_HPP
