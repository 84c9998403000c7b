#include "crnms/ratpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace crnms {

RatPoly::RatPoly(RatVec coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::constant(const Rat& c) { return RatPoly(RatVec{c}); }

RatPoly RatPoly::linear_root(const Rat& r) { return RatPoly(RatVec{-r, Rat(1)}); }

RatPoly RatPoly::monomial(const Rat& c, int k) {
    RatVec v(static_cast<std::size_t>(k) + 1, Rat(0));
    v.back() = c;
    return RatPoly(std::move(v));
}

void RatPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

RatPoly RatPoly::operator+(const RatPoly& o) const {
    RatVec r(std::max(c_.size(), o.c_.size()), Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator-(const RatPoly& o) const { return *this + (-o); }

RatPoly RatPoly::operator-() const {
    RatVec r = c_;
    for (auto& x : r) x = -x;
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const RatPoly& o) const {
    if (is_zero() || o.is_zero()) return RatPoly();
    RatVec r(c_.size() + o.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RatPoly(std::move(r));
}

RatPoly RatPoly::operator*(const Rat& f) const {
    RatVec r = c_;
    for (auto& x : r) x *= f;
    return RatPoly(std::move(r));
}

RatPoly RatPoly::derivative() const {
    if (c_.size() <= 1) return RatPoly();
    RatVec r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rat(static_cast<long>(i));
    return RatPoly(std::move(r));
}

Rat RatPoly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
    if (d.is_zero()) throw std::invalid_argument("polynomial division by zero");
    RatVec rem = c_;
    if (static_cast<int>(rem.size()) - 1 < d.degree()) return {RatPoly(), *this};
    RatVec quo(rem.size() - d.c_.size() + 1, Rat(0));
    const Rat& lead = d.leading();
    for (std::size_t k = quo.size(); k-- > 0;) {
        Rat f = rem[k + d.c_.size() - 1] / lead;
        quo[k] = f;
        if (sgn(f) == 0) continue;
        for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] -= f * d.c_[j];
    }
    return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly RatPoly::divide_exact(const RatPoly& d) const {
    auto [q, r] = divmod(d);
    if (!r.is_zero()) throw std::logic_error("divide_exact: nonzero remainder");
    return q;
}

RatPoly RatPoly::monic() const {
    if (is_zero()) return *this;
    return *this * (Rat(1) / leading());
}

RatPoly RatPoly::primitive() const {
    if (is_zero()) return *this;
    Int den(1);
    for (const auto& c : c_) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    Int num(0);
    for (const auto& c : c_) {
        Int scaled = c.get_num() * (den / c.get_den());
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), scaled.get_mpz_t());
    }
    Rat f(den, num);
    f.canonicalize();
    if (sgn(leading()) < 0) f = -f;
    return *this * f;
}

int RatPoly::sign_variations() const {
    int var = 0, prev = 0;
    for (const auto& c : c_) {
        int s = sgn(c);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

Rat RatPoly::cauchy_root_bound() const {
    if (degree() < 1) return Rat(1);
    Rat m(0);
    for (std::size_t i = 0; i + 1 < c_.size(); ++i) m = std::max(m, rat_abs(c_[i] / leading()));
    return m + 1;
}

std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rat& c = c_[static_cast<std::size_t>(i)];
        if (sgn(c) == 0) continue;
        Rat a = rat_abs(c);
        if (first) {
            if (sgn(c) < 0) out << "-";
            first = false;
        } else {
            out << (sgn(c) < 0 ? " - " : " + ");
        }
        bool unit = (a == 1);
        if (!unit || i == 0) out << rat_to_string(a);
        if (i > 0) {
            if (!unit) out << "*";
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
    RatPoly x = a, y = b;
    while (!y.is_zero()) {
        RatPoly r = x.divmod(y).second;
        x = std::move(y);
        y = r.is_zero() ? RatPoly() : r.monic();  // normalize to tame coefficient growth
    }
    return x.monic();
}

std::vector<RatPoly> squarefree_decomposition(const RatPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
    std::vector<RatPoly> out;
    if (p.degree() == 0) return out;
    RatPoly pm = p.monic();
    RatPoly g = gcd(pm, pm.derivative());
    if (g.degree() == 0) {
        out.push_back(pm);
        return out;
    }
    // Yun's algorithm.
    RatPoly w = pm.divide_exact(g);
    RatPoly y = pm.derivative().divide_exact(g);
    RatPoly z = y - w.derivative();
    while (true) {
        if (z.is_zero()) {
            out.push_back(w.monic());
            break;
        }
        RatPoly gi = gcd(w, z);
        out.push_back(gi);
        w = w.divide_exact(gi);
        y = z.divide_exact(gi);
        z = y - w.derivative();
        if (w.degree() == 0) break;
    }
    return out;
}

RatPoly squarefree_part(const RatPoly& p) {
    RatPoly r = RatPoly::constant(Rat(1));
    for (const auto& f : squarefree_decomposition(p))
        if (f.degree() > 0) r = r * f;
    return r.monic();
}

namespace {

/// Sturm chain of a squarefree polynomial.
std::vector<RatPoly> sturm_chain(const RatPoly& p) {
    std::vector<RatPoly> chain{p, p.derivative()};
    while (!chain.back().is_zero()) {
        const RatPoly& a = chain[chain.size() - 2];
        const RatPoly& b = chain.back();
        RatPoly r = a.divmod(b).second;
        if (r.is_zero()) break;
        // Scale positively only: monic() would flip the sign when the leading
        // coefficient is negative, breaking the chain identity p_{i+1} =
        // -p_{i-1} (mod p_i) that the variation count depends on.
        RatPoly next = -r;
        chain.push_back(RatPoly::constant(Rat(1) / rat_abs(next.leading())) * next);
    }
    return chain;
}

int sturm_variations_at(const std::vector<RatPoly>& chain, const Rat& x) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        int s = sgn(q.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

int sturm_variations_at_inf(const std::vector<RatPoly>& chain) {
    int var = 0, prev = 0;
    for (const auto& q : chain) {
        if (q.is_zero()) continue;
        int s = sgn(q.leading());
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

/// Distinct roots of squarefree f in the OPEN interval (a, b).  With the
/// zeros-skipped sign convention the variation count V is right-continuous
/// (V(x) = V(x+) even at roots of chain members), so V(a) - V(b) counts the
/// roots in (a, b]; a root exactly at b is then excluded by inspection.
/// Endpoints being roots of f therefore need no special-casing.
int sturm_open_count(const std::vector<RatPoly>& chain, const RatPoly& f, const Rat& a,
                     const std::optional<Rat>& b) {
    int va = sturm_variations_at(chain, a);
    int vb = b ? sturm_variations_at(chain, *b) : sturm_variations_at_inf(chain);
    int n = va - vb;
    if (b && sgn(f.eval(*b)) == 0) --n;
    return n;
}

/// (a, b) holds exactly one root of f.  Shrink until both endpoints are
/// non-roots (so the interval has sign-definite endpoints and supports plain
/// sign bisection later), or until the root itself is hit exactly.
void emit_isolating(const RatPoly& f, const std::vector<RatPoly>& chain, Rat a, Rat b,
                    std::vector<RatInterval>& out) {
    while (sgn(f.eval(a)) == 0 || sgn(f.eval(b)) == 0) {
        Rat m = (a + b) / 2;
        if (sgn(f.eval(m)) == 0) {
            out.push_back({m, m});
            return;
        }
        if (sturm_open_count(chain, f, a, m) == 1)
            b = m;
        else
            a = m;
    }
    out.push_back({a, b});
}

/// Recursively bisects the open interval (a, b); midpoints that are roots
/// are emitted as exact point intervals, so (a,b) = (a,m) + {m} + (m,b).
void bisect_isolate(const RatPoly& f, const std::vector<RatPoly>& chain, const Rat& a,
                    const Rat& b, std::vector<RatInterval>& out) {
    int n = sturm_open_count(chain, f, a, b);
    if (n == 0) return;
    if (n == 1) {
        emit_isolating(f, chain, a, b, out);
        return;
    }
    Rat m = (a + b) / 2;
    if (sgn(f.eval(m)) == 0) out.push_back({m, m});
    bisect_isolate(f, chain, a, m, out);
    bisect_isolate(f, chain, m, b, out);
}

/// All roots of squarefree f in the open interval (lo, hi) as disjoint
/// isolating intervals, ascending; rational roots hit by bisection come back
/// as point intervals.  Non-point intervals have non-root endpoints.
std::vector<RatInterval> isolate_squarefree(const RatPoly& f, const Rat& lo,
                                            const std::optional<Rat>& hi) {
    std::vector<RatInterval> out;
    if (f.degree() < 1) return out;
    Rat right = hi ? *hi : f.cauchy_root_bound() + 1;
    if (right <= lo) return out;
    auto chain = sturm_chain(f);
    bisect_isolate(f, chain, lo, right, out);
    std::sort(out.begin(), out.end(),
              [](const RatInterval& a, const RatInterval& b) { return a.lo < b.lo; });
    return out;
}

}  // namespace

int count_distinct_roots(const RatPoly& p, const OpenDomain& domain) {
    if (p.is_zero()) throw std::invalid_argument("root count of the zero polynomial");
    if (p.degree() == 0) return 0;
    if (domain.hi && *domain.hi <= domain.lo) return 0;
    return static_cast<int>(isolate_squarefree(squarefree_part(p), domain.lo, domain.hi).size());
}

RootIsolation isolate_positive_roots(const RatPoly& p, const OpenDomain& domain) {
    if (p.is_zero()) throw std::invalid_argument("cannot isolate roots of the zero polynomial");
    if (sgn(domain.lo) < 0) throw std::invalid_argument("domain must lie in the nonnegative axis");
    if (domain.hi && *domain.hi <= domain.lo)
        throw std::invalid_argument("empty root-isolation domain");

    RootIsolation result;
    result.descartes_bound = p.sign_variations();

    auto factors = squarefree_decomposition(p);
    // Roots with multiplicity over all of (0, inf), for the Descartes check.
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() < 1) continue;
        auto ivs = isolate_squarefree(factors[i], Rat(0), std::nullopt);
        result.count_with_multiplicity += static_cast<int>(ivs.size()) * static_cast<int>(i + 1);
    }
    if (result.count_with_multiplicity > result.descartes_bound ||
        (result.descartes_bound - result.count_with_multiplicity) % 2 != 0)
        throw std::logic_error("positive-root count violates the Descartes bound");

    // Isolate per squarefree factor inside the requested domain.
    std::vector<IsolatedRoot> roots;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree() < 1) continue;
        for (const auto& iv : isolate_squarefree(factors[i], domain.lo, domain.hi)) {
            IsolatedRoot r;
            r.interval = iv;
            r.multiplicity = static_cast<int>(i + 1);
            r.exact = (iv.lo == iv.hi);
            r.factor = factors[i];
            roots.push_back(std::move(r));
        }
    }
    auto by_lo = [](const IsolatedRoot& a, const IsolatedRoot& b) {
        return a.interval.lo < b.interval.lo;
    };
    std::sort(roots.begin(), roots.end(), by_lo);

    // Refine until intervals from different factors are pairwise disjoint.
    bool overlapping = true;
    while (overlapping) {
        overlapping = false;
        for (std::size_t i = 0; i + 1 < roots.size(); ++i) {
            if (roots[i].interval.hi >= roots[i + 1].interval.lo &&
                !(roots[i].exact && roots[i + 1].exact)) {
                overlapping = true;
                refine_root(roots[i], roots[i].interval.width() / 4);
                refine_root(roots[i + 1], roots[i + 1].interval.width() / 4);
                std::sort(roots.begin(), roots.end(), by_lo);
            }
        }
    }

    // Derivative sign at simple roots: refine until p' has no root in the
    // interval, then read the constant sign at the midpoint.
    RatPoly dp = p.derivative();
    for (auto& r : roots) {
        if (r.multiplicity != 1) continue;
        if (r.exact) {
            r.deriv_sign = sgn(dp.eval(r.interval.lo));
        } else {
            while (count_distinct_roots(dp, {r.interval.lo, r.interval.hi}) > 0 ||
                   sgn(dp.eval(r.interval.mid())) == 0)
                refine_root(r, r.interval.width() / 4);
            r.deriv_sign = sgn(dp.eval(r.interval.mid()));
        }
        if (r.deriv_sign == 0) throw std::logic_error("simple root with vanishing derivative");
    }

    result.roots = std::move(roots);
    return result;
}

void refine_root(IsolatedRoot& root, const Rat& width) {
    if (root.exact) return;
    const RatPoly& f = root.factor;
    Rat lo = root.interval.lo, hi = root.interval.hi;
    int slo = sgn(f.eval(lo));
    while (hi - lo > width) {
        Rat mid = (lo + hi) / 2;
        int sm = sgn(f.eval(mid));
        if (sm == 0) {
            root.interval = {mid, mid};
            root.exact = true;
            return;
        }
        if (sm == slo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    root.interval = {lo, hi};
}

}  // namespace crnms
