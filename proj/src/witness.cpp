#include "crnms/witness.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "crnms/linalg.hpp"
#include "crnms/stoich.hpp"

namespace crnms {

namespace {

[[noreturn]] void refuse(const std::string& what) { throw WitnessFailure(what); }

void check(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("witness cross-check failed: " + what);
}

Rat rat_pow(const Rat& base, long e) {
    check(e >= 0, "rat_pow: negative exponent");
    Rat out = 1;
    for (long i = 0; i < e; ++i) out *= base;
    return out;
}

Rat pow2(long e) {
    Rat out = 1;
    for (long i = 0; i < e; ++i) out *= 2;
    for (long i = 0; i > e; --i) out /= 2;
    return out;
}

/// (c + g x)^e as a polynomial; exponents are reactant coefficients, so small.
RatPoly affine_power(const Rat& c, const Rat& g, long e) {
    RatPoly out = RatPoly::constant(1);
    if (e == 0) return out;
    RatPoly base(sgn(g) == 0 ? RatVec{c} : RatVec{c, g});
    for (long i = 0; i < e; ++i) out = out * base;
    return out;
}

/// Direction frame of a dim(S)=1 network: the pivot species (first with
/// nonzero net change) and gamma_i = v_i / v_pivot, shared by every reaction.
struct Frame {
    std::size_t pivot = 0;
    RatVec gamma;
};

std::optional<Frame> dim1_frame(const Network& net) {
    const std::size_t s = net.n_species();
    std::vector<long> w(s, 0);
    for (std::size_t i = 0; i < s; ++i) w[i] = net.change(0, i);
    for (std::size_t r = 1; r < net.n_reactions(); ++r)
        for (std::size_t i = 0; i < s; ++i)
            for (std::size_t j = i + 1; j < s; ++j)
                if (Int(net.change(r, i)) * Int(w[j]) != Int(net.change(r, j)) * Int(w[i]))
                    return std::nullopt;
    Frame f;
    while (f.pivot < s && w[f.pivot] == 0) ++f.pivot;
    check(f.pivot < s, "dim1_frame: zero reaction vector");
    f.gamma.resize(s);
    for (std::size_t i = 0; i < s; ++i) f.gamma[i] = Rat(w[i]) / Rat(w[f.pivot]);
    return f;
}

void validate_rates(const Network& net, const RatVec& rates) {
    if (rates.size() != net.n_reactions())
        throw std::invalid_argument("reduce: one rate per reaction required");
    for (const Rat& k : rates)
        if (sgn(k) <= 0) throw std::invalid_argument("reduce: rate constants must be positive");
}

/// Shared core of reduce_along_class; `mask` (when nonempty) selects which
/// reactions contribute terms (the domain and stripping always come from the
/// full network so that masked and unmasked reductions are directly
/// comparable).
ReducedSystem reduce_core(const Network& net, const RatVec& rates, const RatVec& offsets,
                          const std::vector<char>& mask) {
    const std::size_t s = net.n_species();
    validate_rates(net, rates);
    if (offsets.size() != s) throw std::invalid_argument("reduce: one offset per species required");
    auto fr = dim1_frame(net);
    if (!fr) throw std::invalid_argument("reduce: stoichiometric subspace is not one-dimensional");
    if (sgn(offsets[fr->pivot]) != 0)
        throw std::invalid_argument("reduce: the pivot offset must be zero");

    ReducedSystem red;
    red.pivot = fr->pivot;
    red.gamma = fr->gamma;
    red.offsets = offsets;

    Rat lo = 0;
    std::optional<Rat> hi;
    bool empty = false;
    for (std::size_t i = 0; i < s; ++i) {
        const Rat& g = red.gamma[i];
        const Rat& c = offsets[i];
        if (sgn(g) > 0) {
            Rat bound = -c / g;
            if (bound > lo) lo = bound;
        } else if (sgn(g) < 0) {
            Rat bound = -c / g;
            if (!hi || bound < *hi) hi = bound;
        } else if (sgn(c) <= 0) {
            empty = true;
        }
    }
    if (hi && *hi <= lo) empty = true;
    red.domain = {lo, hi};
    red.domain_empty = empty;

    std::vector<long> minexp(s, LONG_MAX);
    for (const Reaction& rx : net.reactions)
        for (std::size_t i = 0; i < s; ++i) minexp[i] = std::min(minexp[i], rx.reactant[i]);

    RatPoly h;
    for (std::size_t k = 0; k < net.n_reactions(); ++k) {
        if (!mask.empty() && !mask[k]) continue;
        long vp = net.change(k, red.pivot);
        check(vp != 0, "reduce: pivot net change vanished for a parallel reaction");
        RatPoly term = RatPoly::constant(rates[k] * Rat(vp));
        for (std::size_t i = 0; i < s; ++i)
            term = term * affine_power(offsets[i], red.gamma[i], net.reactions[k].reactant[i] - minexp[i]);
        h = h + term;
    }
    red.poly = h;
    return red;
}

/// Refine an isolated root for presentation and turn it into a certified
/// state with per-species enclosures.
CertifiedState make_state(const ReducedSystem& red, IsolatedRoot root) {
    refine_root(root, Rat(1) / 64);
    CertifiedState st;
    st.interval = root.interval;
    st.multiplicity = root.multiplicity;
    st.exact = root.exact;
    st.nondegenerate = root.multiplicity == 1;
    if (st.nondegenerate) st.stable = root.deriv_sign < 0;
    const std::size_t s = red.gamma.size();
    st.point_intervals.resize(s);
    for (std::size_t i = 0; i < s; ++i) {
        Rat a = red.offsets[i] + red.gamma[i] * root.interval.lo;
        Rat b = red.offsets[i] + red.gamma[i] * root.interval.hi;
        if (a > b) std::swap(a, b);
        st.point_intervals[i] = {a, b};
    }
    return st;
}

/// Isolate + package: the uniform tail of every builder.
Witness finish_witness(std::string kind, const RatVec& rates, ReducedSystem red) {
    Witness w;
    w.kind = std::move(kind);
    w.rates = rates;
    w.offsets = red.offsets;
    if (red.poly.is_zero()) {
        w.continuum = !red.domain_empty;
        check(w.continuum, w.kind + ": identically zero reduction on an empty class");
    } else if (!red.domain_empty) {
        RootIsolation iso = isolate_positive_roots(red.poly, red.domain);
        for (const IsolatedRoot& rt : iso.roots) w.states.push_back(make_state(red, rt));
    }
    for (const CertifiedState& st : w.states) {
        if (st.nondegenerate) ++w.n_nondegenerate;
        if (st.stable && *st.stable) ++w.n_stable;
    }
    w.reduced = std::move(red);
    return w;
}

/// Sorted reaction order and exponents for a one-species network.
struct OneSpeciesLayout {
    std::vector<std::size_t> order;  // reaction indices, ascending reactant
    std::vector<long> m;             // reactant exponents, ascending
    std::vector<long> n;             // matching product coefficients
};

OneSpeciesLayout one_species_layout(const Network& net, const std::vector<std::size_t>& which) {
    OneSpeciesLayout lay;
    lay.order = which;
    std::sort(lay.order.begin(), lay.order.end(), [&](std::size_t a, std::size_t b) {
        return net.reactions[a].reactant[0] < net.reactions[b].reactant[0];
    });
    for (std::size_t r : lay.order) {
        lay.m.push_back(net.reactions[r].reactant[0]);
        lay.n.push_back(net.reactions[r].product[0]);
    }
    return lay;
}

/// Solves the root-prescription system for a strictly alternating set of
/// one-species reactions: returns positive rates (indexed like `lay.order`)
/// whose reduced polynomial (over those reactions alone) has exactly the
/// targets as positive roots.  The kernel ray of the prescription system has
/// strictly alternating signs, which always match the arrow directions.
RatVec alternating_rates(const OneSpeciesLayout& lay, const std::vector<Rat>& targets) {
    const std::size_t q = lay.m.size();
    check(targets.size() + 1 == q, "alternating_rates: need one more reaction than targets");
    RatMat m(targets.size(), RatVec(q));
    for (std::size_t i = 0; i < targets.size(); ++i)
        for (std::size_t j = 0; j < q; ++j) m[i][j] = rat_pow(targets[i], lay.m[j]);
    std::vector<RatVec> basis = kernel_basis(m, q);
    check(basis.size() == 1, "alternating_rates: prescription kernel is not one-dimensional");
    RatVec c = basis[0];
    for (std::size_t j = 0; j < q; ++j)
        check(sgn(c[j]) != 0, "alternating_rates: prescription kernel has a zero coordinate");
    for (std::size_t j = 0; j + 1 < q; ++j)
        check(sgn(c[j]) == -sgn(c[j + 1]), "alternating_rates: kernel signs do not alternate");
    if (sgn(c[0]) != sgn(Int(lay.n[0] - lay.m[0])))
        for (Rat& x : c) x = -x;
    // normalize the ray to the primitive integer vector for stable output
    Int lcm_den = 1, gcd_num = 0;
    for (const Rat& x : c) lcm_den = lcm(lcm_den, x.get_den());
    for (const Rat& x : c) gcd_num = gcd(gcd_num, Int(x.get_num() * (lcm_den / x.get_den())));
    for (Rat& x : c) x *= Rat(lcm_den) / Rat(gcd_num);
    RatVec rates(q);
    for (std::size_t j = 0; j < q; ++j) {
        check(sgn(c[j]) == sgn(Int(lay.n[j] - lay.m[j])),
              "alternating_rates: kernel signs do not match the arrow directions");
        rates[j] = c[j] / Rat(lay.n[j] - lay.m[j]);
        check(sgn(rates[j]) > 0, "alternating_rates: nonpositive rate");
    }
    return rates;
}

bool strictly_alternating(const Network& net, const OneSpeciesAnalysis& an) {
    return an.diagram.reactant_coeffs.size() == net.n_reactions() &&
           an.t_max + 1 == static_cast<long>(net.n_reactions());
}

ReducedSystem one_species_reduced(const Network& net, const RatVec& rates) {
    // route through the general reduction so the stored polynomial carries the
    // same common-factor stripping that any later recomputation applies
    return reduce_core(net, rates, {Rat(0)}, {});
}

/// The exact tangency configuration of a mixed-sign reaction pair: a class
/// anchor where the reduced dynamics of the pair alone has a rational double
/// root, plus the rate of the second reaction achieving it with the first
/// rate set to 1.
struct TangencyCore {
    BetaData b;       // oriented pair data
    RatVec x_tilde;   // tangency state (all species, positive rationals)
    RatVec offsets;   // class anchor through x_tilde
    Rat k_second;     // rate for b.second when rates[b.first] == 1
    RatPoly pair_a;   // reduced contribution of b.first at rate 1
    RatPoly pair_b;   // reduced contribution of b.second at rate 1
};

/// rho > 0 with <beta, rho> = 0; `variant` deterministically varies the free
/// coordinates so callers can walk past second-order degeneracies.
RatVec balanced_rho(const std::vector<Int>& beta, long variant) {
    const std::size_t s = beta.size();
    RatVec rho(s, Rat(1));
    if (variant > 0) {
        std::size_t idx = static_cast<std::size_t>(variant - 1) % s;
        rho[idx] = Rat(2 + (variant - 1) / static_cast<long>(s));
    }
    Rat dot = 0;
    for (std::size_t i = 0; i < s; ++i) dot += Rat(beta[i]) * rho[i];
    if (sgn(dot) != 0) {
        // enlarge one coordinate whose beta sign opposes `dot` (the required
        // correction -dot/beta_i is then positive, keeping rho positive)
        std::size_t fix = s;
        for (std::size_t i = 0; i < s; ++i)
            if (sgn(beta[i]) == -sgn(dot) && (variant <= 0 || i != static_cast<std::size_t>(variant - 1) % s))
                fix = i;
        if (fix == s)
            for (std::size_t i = 0; i < s; ++i)
                if (sgn(beta[i]) == -sgn(dot)) fix = i;
        check(fix < s, "balanced_rho: no coordinate available to rebalance");
        rho[fix] += -dot / Rat(beta[fix]);
    }
    dot = 0;
    for (std::size_t i = 0; i < s; ++i) {
        check(sgn(rho[i]) > 0, "balanced_rho: nonpositive coordinate");
        dot += Rat(beta[i]) * rho[i];
    }
    check(sgn(dot) == 0, "balanced_rho: rebalancing failed");
    return rho;
}

TangencyCore tangency_core(const Network& net, std::size_t r1, std::size_t r2) {
    BetaData b = beta_oriented(net, r1, r2);
    if (!b.defined)
        refuse("tangency: the reaction vectors are not nonzero opposite multiples");
    if (!b.mixed())
        refuse("tangency: the sign vector is not mixed; no interior extremum exists");
    auto fr = dim1_frame(net);
    check(fr.has_value(), "tangency: parallel pair without a one-dimensional frame");
    const std::size_t s = net.n_species();

    for (long variant = 0; variant < 256; ++variant) {
        RatVec rho = balanced_rho(b.beta, variant);
        // second-order term sum_i d_i gamma_i^2 rho_i^2 must not vanish
        Rat second = 0;
        for (std::size_t i = 0; i < s; ++i)
            second += Rat(b.reactant_diff[i]) * fr->gamma[i] * fr->gamma[i] * rho[i] * rho[i];
        if (sgn(second) == 0) continue;

        TangencyCore core;
        core.b = b;
        core.x_tilde.resize(s);
        core.offsets.resize(s);
        for (std::size_t i = 0; i < s; ++i) core.x_tilde[i] = Rat(1) / rho[i];
        for (std::size_t i = 0; i < s; ++i)
            core.offsets[i] = core.x_tilde[i] - fr->gamma[i] * core.x_tilde[fr->pivot];
        core.offsets[fr->pivot] = 0;

        // contributions of the two reactions at unit rates, on this class
        RatVec unit(net.n_reactions(), Rat(1));
        std::vector<char> mask_a(net.n_reactions(), 0), mask_b(net.n_reactions(), 0);
        mask_a[b.first] = 1;
        mask_b[b.second] = 1;
        ReducedSystem ra = reduce_core(net, unit, core.offsets, mask_a);
        ReducedSystem rb = reduce_core(net, unit, core.offsets, mask_b);
        core.pair_a = ra.poly;
        core.pair_b = rb.poly;

        const Rat t = core.x_tilde[fr->pivot];
        Rat bval = core.pair_b.eval(t);
        check(sgn(bval) != 0, "tangency: second reaction's term vanishes at the anchor");
        core.k_second = -core.pair_a.eval(t) / bval;
        check(sgn(core.k_second) > 0, "tangency: nonpositive tangency rate");

        // the anchor must be an exact double root of the pair's reduction
        RatPoly h = core.pair_a + RatPoly::constant(core.k_second) * core.pair_b;
        check(sgn(h.eval(t)) == 0, "tangency: anchor is not a root");
        check(sgn(h.derivative().eval(t)) == 0,
              "tangency: anchor is not a critical point (rho construction disagrees)");
        if (sgn(h.derivative().derivative().eval(t)) == 0) continue;  // flat tangency; vary rho
        return core;
    }
    refuse("tangency: no nondegenerate tangency anchor found in 256 rational variants");
}

RatVec pair_rates(const Network& net, const TangencyCore& core, const Rat& k_second) {
    RatVec rates(net.n_reactions(), Rat(1));
    rates[core.b.first] = 1;
    rates[core.b.second] = k_second;
    return rates;
}

std::string case_refusal(const Verdict& v, const std::string& wanted) {
    return "witness refused: the classifier reports " +
           std::string(v.case_label == TwoRxnCase::NOT_APPLICABLE ? shape_to_string(v.shape)
                                                                  : case_to_string(v.case_label)) +
           ", which precludes " + wanted;
}

}  // namespace

// ---------------------------------------------------------------------------
// Reductions.
// ---------------------------------------------------------------------------

ReducedSystem reduce_along_class(const Network& net, const RatVec& rates, const RatVec& offsets) {
    return reduce_core(net, rates, offsets, {});
}

RatPoly reduce_one_species(const Network& net, const RatVec& rates) {
    if (net.n_species() != 1)
        throw std::invalid_argument("reduce_one_species: exactly one species required");
    validate_rates(net, rates);
    RatPoly p;
    for (std::size_t k = 0; k < net.n_reactions(); ++k) {
        long m = net.reactions[k].reactant[0];
        long n = net.reactions[k].product[0];
        p = p + RatPoly::monomial(rates[k] * Rat(n - m), static_cast<int>(m));
    }
    return p;
}

ReducedSystem reduce_two_reaction(const Network& net, const RatVec& rates,
                                  const RatVec& class_offsets) {
    if (net.n_reactions() != 2)
        throw std::invalid_argument("reduce_two_reaction: exactly two reactions required");
    if (!beta_oriented(net, 0, 1).defined)
        throw std::invalid_argument(
            "reduce_two_reaction: reaction vectors must be nonzero opposite multiples");
    return reduce_along_class(net, rates, class_offsets);
}

// ---------------------------------------------------------------------------
// Builders.
// ---------------------------------------------------------------------------

long search_budget() {
    if (const char* env = std::getenv("CRNMS_SEARCH_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return 100000;
}

Witness prescribe_roots_one_species(const Network& net, const std::vector<Rat>& targets) {
    if (net.n_species() != 1) refuse("prescribe-roots: one-species networks only");
    OneSpeciesAnalysis an = analyze_one_species(net);
    if (!strictly_alternating(net, an))
        refuse("prescribe-roots: the network is not strictly alternating (capacity " +
               std::to_string(an.t_max) + " with " + std::to_string(net.n_reactions()) +
               " reactions); use the general one-species builder");
    const long t = an.t_max;
    if (static_cast<long>(targets.size()) != t)
        refuse("prescribe-roots: exactly " + std::to_string(t) + " target roots required");
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (sgn(targets[i]) <= 0) refuse("prescribe-roots: targets must be positive");
        if (i + 1 < targets.size() && !(targets[i] < targets[i + 1]))
            refuse("prescribe-roots: targets must be strictly increasing");
    }

    std::vector<std::size_t> all(net.n_reactions());
    std::iota(all.begin(), all.end(), std::size_t{0});
    OneSpeciesLayout lay = one_species_layout(net, all);
    RatVec sorted_rates = alternating_rates(lay, targets);
    RatVec rates(net.n_reactions());
    for (std::size_t j = 0; j < lay.order.size(); ++j) rates[lay.order[j]] = sorted_rates[j];

    RatPoly p = reduce_one_species(net, rates);
    for (const Rat& r : targets)
        check(sgn(p.eval(r)) == 0, "prescribe-roots: a prescribed target is not a root");

    Witness w = finish_witness("prescribed-roots", rates, one_species_reduced(net, rates));
    check(static_cast<long>(w.states.size()) == t, "prescribe-roots: root count != targets");
    check(w.n_nondegenerate == t, "prescribe-roots: a prescribed root is not simple");
    for (std::size_t i = 0; i < w.states.size(); ++i)
        check(w.states[i].interval.contains(targets[i]),
              "prescribe-roots: isolated root does not match its target");
    bool lead_right = lay.n[0] > lay.m[0];
    long expect = lead_right ? (t + 1) / 2 : t / 2;
    check(w.n_stable == expect, "prescribe-roots: stable count != " + std::to_string(expect));
    return w;
}

Witness witness_one_species(const Network& net) {
    if (net.n_species() != 1) refuse("one-species builder: one-species networks only");
    OneSpeciesAnalysis an = analyze_one_species(net);
    if (an.t_max == 0)
        refuse("one-species builder: zero alternations; use the single-state or emptiness builders");
    std::vector<Rat> targets;
    for (long i = 1; i <= an.t_max; ++i) targets.emplace_back(i);
    if (strictly_alternating(net, an)) return prescribe_roots_one_species(net, targets);

    const AlternatingWitness& ch = *an.witness;
    OneSpeciesLayout lay = one_species_layout(net, ch.reactions);
    RatVec chain = alternating_rates(lay, targets);
    std::vector<char> in_chain(net.n_reactions(), 0);
    RatVec rates(net.n_reactions(), Rat(0));
    for (std::size_t j = 0; j < lay.order.size(); ++j) {
        rates[lay.order[j]] = chain[j];
        in_chain[lay.order[j]] = 1;
    }
    for (long h = 0; h <= 64; ++h) {
        Rat delta = pow2(-h);
        for (std::size_t k = 0; k < net.n_reactions(); ++k)
            if (!in_chain[k]) rates[k] = delta;
        Witness w = finish_witness("alternating-chain-damped", rates, one_species_reduced(net, rates));
        if (static_cast<long>(w.states.size()) == an.t_max && w.n_nondegenerate == an.t_max) {
            check(w.n_stable >= an.t_max / 2,
                  "one-species builder: fewer stable states than alternation guarantees");
            return w;
        }
    }
    refuse("one-species builder: damping search exhausted (64 halvings) at capacity " +
           std::to_string(an.t_max));
}

Witness witness_two_reaction(const Network& net, TwoReactionGoal goal) {
    Verdict v = classify(net);
    if (v.shape != Shape::TWO_IRREVERSIBLE)
        refuse("two-reaction builder: the network is not a two-reaction multi-species network (" +
               shape_to_string(v.shape) + ")");
    const char* wanted = goal == TwoReactionGoal::TWO_NONDEG
                             ? "two nondegenerate steady states in one class"
                             : goal == TwoReactionGoal::DOUBLE_DEGENERATE
                                   ? "an exact double steady state"
                                   : "a steady-state-free compatibility class";
    if (v.case_label != TwoRxnCase::CASE_3C) refuse(case_refusal(v, wanted));

    TangencyCore core = tangency_core(net, 0, 1);
    const std::size_t s = net.n_species();

    if (goal == TwoReactionGoal::DOUBLE_DEGENERATE) {
        RatVec rates = pair_rates(net, core, core.k_second);
        Witness w = finish_witness("tangency-degenerate", rates,
                                   reduce_along_class(net, rates, core.offsets));
        bool found = false;
        for (const CertifiedState& st : w.states)
            if (st.exact && st.multiplicity == 2 && st.interval.lo == core.x_tilde[w.reduced.pivot])
                found = true;
        check(found, "two-reaction builder: exact double root missing at the anchor");
        if (s == 2)
            check(w.states.size() == 1, "two-reaction builder: extra roots beside the tangency");
        return w;
    }

    for (long j = 1; j <= 64; ++j) {
        for (int dir : {-1, +1}) {
            Rat k2 = core.k_second * (Rat(1) + Rat(dir) * pow2(-j));
            RatVec rates = pair_rates(net, core, k2);
            Witness w = finish_witness(
                goal == TwoReactionGoal::TWO_NONDEG ? "tangency-split" : "tangency-avoided", rates,
                reduce_along_class(net, rates, core.offsets));
            if (goal == TwoReactionGoal::TWO_NONDEG) {
                bool ok = s == 2 ? (w.states.size() == 2 && w.n_nondegenerate == 2 && w.n_stable == 1)
                                 : (w.n_nondegenerate >= 2 && w.n_stable >= 1);
                if (ok) return w;
            } else {
                if (!w.continuum && w.states.empty()) return w;
            }
        }
    }
    refuse(std::string("two-reaction builder: rate perturbation search exhausted (64 halvings, "
                       "both directions) for goal ") +
           wanted);
}

Witness witness_degenerate(const Network& net) {
    Verdict v = classify(net);

    if (v.shape == Shape::ONE_SPECIES && v.one_species && v.one_species->diagram.all_both()) {
        // per-reactant balance: within each group of reactions sharing a
        // reactant coefficient, the up- and down-pointing contributions cancel
        std::map<long, std::vector<std::size_t>> groups;
        for (std::size_t k = 0; k < net.n_reactions(); ++k)
            groups[net.reactions[k].reactant[0]].push_back(k);
        RatVec rates(net.n_reactions());
        for (const auto& [m, members] : groups) {
            long nup = 0, ndown = 0;
            for (std::size_t k : members)
                (net.reactions[k].product[0] > m ? nup : ndown) += 1;
            check(nup > 0 && ndown > 0, "degenerate builder: a reactant group is one-directional");
            for (std::size_t k : members) {
                long diff = net.reactions[k].product[0] - m;
                rates[k] = Rat(1) / (Rat(diff > 0 ? nup : ndown) * Rat(std::abs(diff)));
            }
        }
        RatPoly p = reduce_one_species(net, rates);
        check(p.is_zero(), "degenerate builder: balanced rates do not zero the reduction");
        return finish_witness("balanced-continuum", rates, one_species_reduced(net, rates));
    }

    if (net.n_reactions() == 2 &&
        (v.case_label == TwoRxnCase::CASE_1 || v.case_label == TwoRxnCase::CASE_3B)) {
        BetaData b = beta_oriented(net, 0, 1);
        auto fr = dim1_frame(net);
        check(b.defined && fr.has_value(), "degenerate builder: pair data missing");
        const std::size_t s = net.n_species();
        RatVec offsets(s);

        if (v.case_label == TwoRxnCase::CASE_1) {
            // every species with nonzero net change has equal reactant
            // coefficients in both reactions, so the class through the
            // all-ones state cancels the two terms identically
            for (std::size_t i = 0; i < s; ++i) offsets[i] = Rat(1) - fr->gamma[i];
        } else {
            // slope -1 pair: put the two sign-carrying species on a common
            // ray through the origin; their ratio is then constant along the
            // class and the two terms are proportional as polynomials
            std::size_t i1 = s, i2 = s;
            for (std::size_t i = 0; i < s; ++i)
                if (sgn(b.beta[i]) != 0) (i1 == s ? i1 : i2) = i;
            check(i2 < s, "degenerate builder: mixed pair without two sign carriers");
            bool ray_positive = sgn(fr->gamma[i1]) > 0;
            Rat shift = ray_positive ? Rat(fr->pivot == i1 || fr->pivot == i2 ? 0 : 1) : Rat(-2);
            for (std::size_t i = 0; i < s; ++i) {
                if (i == i1 || i == i2)
                    offsets[i] = fr->gamma[i] * shift;
                else if (sgn(fr->gamma[i]) == 0)
                    offsets[i] = 1;
                else
                    offsets[i] = sgn(fr->gamma[i]) > 0 ? Rat(0) : -2 * fr->gamma[i];
            }
            offsets[fr->pivot] = 0;
        }

        RatVec unit(net.n_reactions(), Rat(1));
        std::vector<char> mask_a = {1, 0}, mask_b = {0, 1};
        RatPoly pa = reduce_core(net, unit, offsets, mask_a).poly;
        RatPoly pb = reduce_core(net, unit, offsets, mask_b).poly;
        check(!pb.is_zero(), "degenerate builder: second term vanished");
        // rate ratio cancelling the leading coefficients must cancel everything
        Rat k2 = -pa.leading() / pb.leading();
        check(sgn(k2) > 0, "degenerate builder: cancelling ratio is not positive");
        check((pa + RatPoly::constant(k2) * pb).is_zero(),
              "degenerate builder: aligned class does not cancel the terms identically");
        RatVec rates = {Rat(1), k2};
        Witness w = finish_witness("aligned-continuum", rates, reduce_along_class(net, rates, offsets));
        check(w.continuum, "degenerate builder: aligned class is empty");
        return w;
    }

    refuse(case_refusal(v, "a degenerate continuum of steady states"));
}

Witness witness_single(const Network& net) {
    PositiveKernel cons = consistency(net);
    if (!cons.feasible)
        refuse("single-state builder: the network is inconsistent; no positive steady state "
               "exists for any rate constants");
    auto fr = dim1_frame(net);
    if (!fr)
        refuse("single-state builder: the stoichiometric subspace is not one-dimensional");
    const std::size_t s = net.n_species();
    RatVec offsets(s);
    for (std::size_t i = 0; i < s; ++i) offsets[i] = Rat(1) - fr->gamma[i];
    offsets[fr->pivot] = 0;
    ReducedSystem red = reduce_along_class(net, cons.lambda, offsets);
    if (!red.poly.is_zero())
        check(sgn(red.poly.eval(Rat(1))) == 0,
              "single-state builder: the positive dependence does not fix the all-ones state");
    Witness w = finish_witness("consistency-anchored", cons.lambda, std::move(red));
    check(w.continuum || !w.states.empty(),
          "single-state builder: no steady state isolated in the anchored class");
    return w;
}

Witness witness_none_possible(const Network& net) {
    PositiveKernel cons = consistency(net);
    if (cons.feasible)
        refuse("emptiness builder: the network is consistent; steady states exist for suitable "
               "rate constants");
    const std::size_t s = net.n_species(), r = net.n_reactions();
    check(cons.u.size() == s && cons.w.size() == r, "emptiness builder: malformed certificate");
    bool some_positive = false;
    for (std::size_t k = 0; k < r; ++k) {
        Rat wk = 0;
        for (std::size_t i = 0; i < s; ++i) wk += cons.u[i] * Rat(net.change(k, i));
        check(wk == cons.w[k], "emptiness builder: certificate does not match Gamma^T u");
        check(sgn(wk) >= 0, "emptiness builder: certificate entry is negative");
        if (sgn(wk) > 0) some_positive = true;
    }
    check(some_positive, "emptiness builder: certificate is identically zero");
    Witness w;
    w.kind = "none-possible";
    w.rates.assign(r, Rat(1));
    w.obstruction_u = cons.u;
    w.obstruction_w = cons.w;
    w.reduced.domain_empty = true;
    return w;
}

Witness witness_multistationary_search(const Network& net) {
    Verdict v = classify(net);
    if (auto up = v.cap_pss.upper(); up && *up <= 1)
        refuse("multistationarity search: the classifier caps this network at " +
               cap_to_string(v.cap_pss) + " steady states per class");
    auto fr = dim1_frame(net);
    if (!fr)
        refuse("multistationarity search: the stoichiometric subspace is not one-dimensional");
    const std::size_t s = net.n_species(), r = net.n_reactions();

    std::mt19937_64 rng(0x5eed0001ULL);
    std::uniform_int_distribution<long> expo(-6, 6);
    std::uniform_int_distribution<long> mant(0, 7);
    const long budget = search_budget();
    for (long it = 0; it < budget; ++it) {
        RatVec rates(r);
        for (std::size_t k = 0; k < r; ++k)
            rates[k] = (Rat(8 + mant(rng)) / 8) * pow2(expo(rng));
        RatVec offsets(s);
        for (std::size_t i = 0; i < s; ++i)
            offsets[i] = i == fr->pivot ? Rat(0) : pow2(expo(rng));
        ReducedSystem red = reduce_along_class(net, rates, offsets);
        if (red.domain_empty) continue;
        if (!red.poly.is_zero() && count_distinct_roots(red.poly, red.domain) < 2) continue;
        Witness w = finish_witness("sampled-multistationary", rates, std::move(red));
        if (w.continuum || w.states.size() >= 2) return w;
    }
    refuse("multistationarity search: budget of " + std::to_string(budget) +
           " dyadic rate/class samples exhausted without finding two steady states in one class");
}

Witness witness_lifted(const Network& net, std::size_t base_first, std::size_t base_second) {
    auto fr = dim1_frame(net);
    if (!fr) refuse("lifted builder: the stoichiometric subspace is not one-dimensional");
    TangencyCore core = tangency_core(net, base_first, base_second);
    const std::size_t r = net.n_reactions();

    // stage 1: split the pair's tangency into two transversal crossings
    std::optional<Rat> k2_split;
    std::vector<char> pair_mask(r, 0);
    pair_mask[core.b.first] = 1;
    pair_mask[core.b.second] = 1;
    for (long j = 1; j <= 64 && !k2_split; ++j) {
        for (int dir : {-1, +1}) {
            Rat k2 = core.k_second * (Rat(1) + Rat(dir) * pow2(-j));
            RatVec rates = pair_rates(net, core, k2);
            ReducedSystem red = reduce_core(net, rates, core.offsets, pair_mask);
            if (red.domain_empty || red.poly.is_zero()) continue;
            RootIsolation iso = isolate_positive_roots(red.poly, red.domain);
            int nondeg = 0, stable = 0;
            for (const IsolatedRoot& rt : iso.roots) {
                if (rt.multiplicity == 1) ++nondeg;
                if (rt.multiplicity == 1 && rt.deriv_sign < 0) ++stable;
            }
            if (nondeg >= 2 && stable >= 1) {
                k2_split = k2;
                break;
            }
        }
    }
    if (!k2_split) refuse("lifted builder: pair tangency did not split within 64 halvings");

    // stage 2: damp the remaining reactions until the two crossings persist
    for (long h = 1; h <= 64; ++h) {
        RatVec rates = pair_rates(net, core, *k2_split);
        for (std::size_t k = 0; k < r; ++k)
            if (k != core.b.first && k != core.b.second) rates[k] = pow2(-h);
        Witness w =
            finish_witness("lifted-tangency", rates, reduce_along_class(net, rates, core.offsets));
        if (w.n_nondegenerate >= 2 && w.n_stable >= 1) return w;
    }
    refuse("lifted builder: damping the extra reactions did not preserve the two crossings "
           "within 64 halvings");
}

// ---------------------------------------------------------------------------
// Verification.
// ---------------------------------------------------------------------------

ClassCount count_in_class(const Network& net, const RatVec& rates, const RatVec& offsets) {
    PositiveKernel cons = consistency(net);
    if (!cons.feasible) {
        // rate-independent emptiness; re-verify the separating functional
        bool some_positive = false;
        for (std::size_t k = 0; k < net.n_reactions(); ++k) {
            Rat wk = 0;
            for (std::size_t i = 0; i < net.n_species(); ++i)
                wk += cons.u[i] * Rat(net.change(k, i));
            check(sgn(wk) >= 0, "count_in_class: separating functional has a negative entry");
            if (sgn(wk) > 0) some_positive = true;
        }
        check(some_positive, "count_in_class: separating functional is zero");
        return {};
    }
    ReducedSystem red = reduce_along_class(net, rates, offsets);
    ClassCount out;
    if (red.domain_empty) return out;
    if (red.poly.is_zero()) {
        out.continuum = true;
        return out;
    }
    RootIsolation iso = isolate_positive_roots(red.poly, red.domain);
    out.distinct = static_cast<int>(iso.roots.size());
    for (const IsolatedRoot& rt : iso.roots) {
        if (rt.multiplicity == 1) ++out.nondegenerate;
        if (rt.multiplicity == 1 && rt.deriv_sign < 0) ++out.stable;
    }
    return out;
}

CertifiedReport certify(const Network& net, const Witness& w) {
    Verdict v = classify(net);
    CertifiedReport rep;

    if (w.kind == "none-possible") {
        check(!w.obstruction_u.empty(), "certify: emptiness witness without a functional");
        bool some_positive = false;
        for (std::size_t k = 0; k < net.n_reactions(); ++k) {
            Rat wk = 0;
            for (std::size_t i = 0; i < net.n_species(); ++i)
                wk += w.obstruction_u[i] * Rat(net.change(k, i));
            check(sgn(wk) >= 0, "certify: functional entry negative");
            if (sgn(wk) > 0) some_positive = true;
        }
        check(some_positive, "certify: functional identically zero");
        check(w.states.empty() && !w.continuum, "certify: emptiness witness carries states");
        check(v.cap_pss == Capacity::exact(0), "certify: classifier disagrees with emptiness");
        return rep;
    }

    ReducedSystem red = reduce_along_class(net, w.rates, w.offsets);
    check(red.pivot == w.reduced.pivot && red.gamma == w.reduced.gamma,
          "certify: reduction frame mismatch");
    check(red.poly == w.reduced.poly, "certify: reduced polynomial mismatch");

    if (red.poly.is_zero() && !red.domain_empty) {
        rep.continuum = true;
        check(w.continuum && w.states.empty(), "certify: continuum mismatch");
    } else {
        check(!w.continuum, "certify: witness claims a continuum the recomputation refutes");
        if (!red.domain_empty) {
            RootIsolation iso = isolate_positive_roots(red.poly, red.domain);
            check(iso.roots.size() == w.states.size(), "certify: steady-state count changed");
            for (std::size_t i = 0; i < iso.roots.size(); ++i) {
                const IsolatedRoot& rt = iso.roots[i];
                const CertifiedState& st = w.states[i];
                check(rt.multiplicity == st.multiplicity, "certify: multiplicity changed");
                check((rt.multiplicity == 1) == st.nondegenerate, "certify: nondegeneracy changed");
                if (st.nondegenerate)
                    check(st.stable.has_value() && *st.stable == (rt.deriv_sign < 0),
                          "certify: stability changed");
                check(!(rt.interval.hi < st.interval.lo) && !(st.interval.hi < rt.interval.lo),
                      "certify: isolating intervals do not agree");
            }
            rep.n_distinct = static_cast<int>(iso.roots.size());
            for (const IsolatedRoot& rt : iso.roots) {
                if (rt.multiplicity == 1) ++rep.n_nondegenerate;
                if (rt.multiplicity == 1 && rt.deriv_sign < 0) ++rep.n_stable;
            }
        } else {
            check(w.states.empty(), "certify: states on an empty class");
        }
    }
    check(rep.n_nondegenerate == w.n_nondegenerate && rep.n_stable == w.n_stable,
          "certify: stored counts disagree with recomputation");

    // the witness must never exceed what the classifier allows, and two or
    // more certified states force the corresponding affirmative verdicts
    if (rep.continuum) {
        check(v.cap_pss.kind != CapKind::EXACT, "certify: continuum on an exactly-capped network");
        check(v.multistationary != Tristate::NO, "certify: continuum on a non-multistationary network");
    }
    if (auto up = v.cap_pss.upper()) check(rep.n_distinct <= *up, "certify: cap_pss exceeded");
    if (auto up = v.cap_npss.upper()) check(rep.n_nondegenerate <= *up, "certify: cap_npss exceeded");
    if (auto up = v.cap_stable.upper()) check(rep.n_stable <= *up, "certify: cap_stable exceeded");
    if (rep.n_distinct >= 2)
        check(v.multistationary != Tristate::NO, "certify: two states on a non-multistationary network");
    if (rep.n_nondegenerate >= 2)
        check(v.nondeg_multistationary != Tristate::NO,
              "certify: two nondegenerate states contradict the classifier");
    if (rep.n_stable >= 2)
        check(v.multistable != Tristate::NO, "certify: two stable states contradict the classifier");
    return rep;
}

// ---------------------------------------------------------------------------
// Serialization.
// ---------------------------------------------------------------------------

nlohmann::ordered_json witness_to_json(const Network& net, const Witness& w) {
    nlohmann::ordered_json j;
    nlohmann::ordered_json rates = nlohmann::ordered_json::object();
    for (std::size_t k = 0; k < w.rates.size(); ++k)
        rates["r" + std::to_string(k)] = rat_to_string(w.rates[k]);
    j["rates"] = rates;

    if (!w.obstruction_u.empty()) {
        j["class"] = nullptr;
    } else {
        const std::size_t s = net.n_species();
        bool conserved_sum = s == 2 && w.reduced.gamma[1 - w.reduced.pivot] == Rat(-1);
        if (conserved_sum) {
            j["class"] = {{"T", rat_to_string(w.offsets[1 - w.reduced.pivot])}};
        } else {
            nlohmann::ordered_json cls;
            nlohmann::ordered_json c = nlohmann::ordered_json::array();
            nlohmann::ordered_json g = nlohmann::ordered_json::array();
            for (std::size_t i = 0; i < s; ++i) {
                c.push_back(rat_to_string(w.offsets[i]));
                g.push_back(rat_to_string(w.reduced.gamma[i]));
            }
            cls["c"] = c;
            cls["gamma"] = g;
            cls["pivot"] = w.reduced.pivot;
            j["class"] = cls;
        }
    }

    nlohmann::ordered_json states = nlohmann::ordered_json::array();
    for (const CertifiedState& st : w.states) {
        nlohmann::ordered_json sj;
        sj["interval"] = {rat_to_string(st.interval.lo), rat_to_string(st.interval.hi)};
        nlohmann::ordered_json pis = nlohmann::ordered_json::array();
        for (const RatInterval& pi : st.point_intervals)
            pis.push_back({rat_to_string(pi.lo), rat_to_string(pi.hi)});
        sj["point_intervals"] = pis;
        sj["multiplicity"] = st.multiplicity;
        sj["exact"] = st.exact;
        sj["nondegenerate"] = st.nondegenerate;
        sj["stable"] = st.stable ? nlohmann::ordered_json(*st.stable) : nlohmann::ordered_json(nullptr);
        states.push_back(sj);
    }
    j["steady_states"] = states;

    j["counts"] = {{"distinct", w.states.size()},
                   {"nondegenerate", w.n_nondegenerate},
                   {"stable", w.n_stable}};
    j["continuum"] = w.continuum;
    if (w.obstruction_u.empty() && !w.reduced.domain_empty) {
        nlohmann::ordered_json dom = nlohmann::ordered_json::array();
        dom.push_back(rat_to_string(w.reduced.domain.lo));
        dom.push_back(w.reduced.domain.hi ? nlohmann::ordered_json(rat_to_string(*w.reduced.domain.hi))
                                          : nlohmann::ordered_json(nullptr));
        j["domain"] = dom;
    } else {
        j["domain"] = nullptr;
    }
    j["kind"] = w.kind;
    if (!w.obstruction_u.empty()) {
        nlohmann::ordered_json u = nlohmann::ordered_json::array(), ww = nlohmann::ordered_json::array();
        for (const Rat& x : w.obstruction_u) u.push_back(rat_to_string(x));
        for (const Rat& x : w.obstruction_w) ww.push_back(rat_to_string(x));
        j["obstruction"] = {{"u", u}, {"w", ww}};
    }
    return j;
}

}  // namespace crnms
