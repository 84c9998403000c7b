#include "crnms/classify.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "crnms/embed.hpp"
#include "crnms/linalg.hpp"

namespace crnms {

namespace {

using nlohmann::ordered_json;

[[noreturn]] void wrong_shape(const char* msg) { throw std::invalid_argument(msg); }

void cross_check(bool ok, const std::string& what) {
    if (!ok) throw std::logic_error("classifier cross-check failed: " + what);
}

ordered_json rat_vec_json(const RatVec& v) {
    ordered_json a = ordered_json::array();
    for (const auto& x : v) a.push_back(rat_to_string(x));
    return a;
}

Justification consistency_justification(const PositiveKernel& pk) {
    Justification j{"consistency", ordered_json::object()};
    j.data["feasible"] = pk.feasible;
    if (pk.feasible) {
        j.data["positive_dependence"] = rat_vec_json(pk.lambda);
    } else {
        j.data["separating_functional"] = rat_vec_json(pk.u);
        j.data["reaction_inner_products"] = rat_vec_json(pk.w);
    }
    return j;
}

}  // namespace

// ---------------------------------------------------------------------------
// Arrow diagrams and alternating chains.
// ---------------------------------------------------------------------------

std::string arrow_to_string(ArrowDir d) {
    switch (d) {
        case ArrowDir::LEFT: return "left";
        case ArrowDir::RIGHT: return "right";
        case ArrowDir::BOTH: return "both";
    }
    return "?";
}

bool ArrowDiagram::all_both() const {
    return std::all_of(dirs.begin(), dirs.end(), [](ArrowDir d) { return d == ArrowDir::BOTH; });
}

std::string ArrowDiagram::to_string() const {
    std::ostringstream os;
    for (std::size_t k = 0; k < reactant_coeffs.size(); ++k) {
        if (k) os << ' ';
        os << reactant_coeffs[k] << ':';
        switch (dirs[k]) {
            case ArrowDir::LEFT: os << "<-"; break;
            case ArrowDir::RIGHT: os << "->"; break;
            case ArrowDir::BOTH: os << "<->"; break;
        }
    }
    return os.str();
}

ArrowDiagram arrow_diagram(const Network& net) {
    if (net.n_species() != 1) wrong_shape("arrow_diagram: exactly one species required");
    std::map<long, std::pair<bool, bool>> at;  // coeff -> (has up, has down)
    for (const auto& rx : net.reactions) {
        long a = rx.reactant[0], b = rx.product[0];
        auto& f = at[a];
        (b > a ? f.first : f.second) = true;
    }
    ArrowDiagram d;
    for (const auto& [a, f] : at) {
        d.reactant_coeffs.push_back(a);
        d.dirs.push_back(f.first && f.second ? ArrowDir::BOTH
                         : f.first           ? ArrowDir::RIGHT
                                             : ArrowDir::LEFT);
    }
    return d;
}

namespace {

/// Longest prefix of the alternating direction pattern starting with
/// `lead_right`, matched greedily against the per-reactant direction sets in
/// ascending reactant order.  Earliest-match is optimal for embedding a fixed
/// pattern as a subsequence, so the greedy chain has maximum length for this
/// leading direction.
std::vector<std::size_t> alternating_chain(
    const std::vector<long>& coeffs,
    const std::map<long, std::pair<std::optional<std::size_t>, std::optional<std::size_t>>>&
        pick,
    bool lead_right) {
    std::vector<std::size_t> chain;
    bool want_right = lead_right;
    for (long a : coeffs) {
        const auto& [up, down] = pick.at(a);
        const auto& offer = want_right ? up : down;
        if (offer) {
            chain.push_back(*offer);
            want_right = !want_right;
        }
    }
    return chain;
}

}  // namespace

OneSpeciesAnalysis analyze_one_species(const Network& net) {
    OneSpeciesAnalysis out;
    out.diagram = arrow_diagram(net);
    // Lowest-index reaction in each direction at each reactant coefficient.
    std::map<long, std::pair<std::optional<std::size_t>, std::optional<std::size_t>>> pick;
    for (std::size_t r = 0; r < net.n_reactions(); ++r) {
        long a = net.reactions[r].reactant[0], b = net.reactions[r].product[0];
        auto& f = pick[a];
        auto& slot = (b > a) ? f.first : f.second;
        if (!slot) slot = r;
    }
    auto right = alternating_chain(out.diagram.reactant_coeffs, pick, true);
    auto left = alternating_chain(out.diagram.reactant_coeffs, pick, false);
    int t_right = static_cast<int>(right.size()) - 1;
    int t_left = static_cast<int>(left.size()) - 1;
    out.t_max = std::max(t_right, t_left);
    cross_check(out.t_max >= 0, "a nonempty one-species network has a chain of length one");
    out.right_leading_max_exists = (t_right == out.t_max);
    if (out.t_max >= 1) {
        AlternatingWitness w;
        w.t = out.t_max;
        w.leads_right = out.right_leading_max_exists;
        w.reactions = w.leads_right ? std::move(right) : std::move(left);
        out.witness = std::move(w);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Capacities and tristates.
// ---------------------------------------------------------------------------

long Capacity::lower() const {
    return kind == CapKind::INFINITE ? std::numeric_limits<long>::max() : value;
}

std::optional<long> Capacity::upper() const {
    if (kind == CapKind::EXACT) return value;
    return std::nullopt;
}

std::string cap_to_string(const Capacity& c) {
    switch (c.kind) {
        case CapKind::EXACT: return std::to_string(c.value);
        case CapKind::AT_LEAST: return ">=" + std::to_string(c.value);
        case CapKind::INFINITE: return "infinity";
    }
    return "?";
}

nlohmann::ordered_json cap_to_json(const Capacity& c) {
    ordered_json j;
    switch (c.kind) {
        case CapKind::EXACT:
            j["kind"] = "exact";
            j["value"] = c.value;
            break;
        case CapKind::AT_LEAST:
            j["kind"] = "at-least";
            j["value"] = c.value;
            break;
        case CapKind::INFINITE:
            j["kind"] = "infinite";
            j["value"] = nullptr;
            break;
    }
    return j;
}

std::string tristate_to_string(Tristate t) {
    switch (t) {
        case Tristate::NO: return "no";
        case Tristate::YES: return "yes";
        case Tristate::UNKNOWN: return "unknown";
    }
    return "?";
}

nlohmann::ordered_json tristate_to_json(Tristate t) {
    if (t == Tristate::YES) return true;
    if (t == Tristate::NO) return false;
    return "unknown";
}

// ---------------------------------------------------------------------------
// Two-reaction machinery.
// ---------------------------------------------------------------------------

int BetaData::positives() const {
    int n = 0;
    for (const auto& b : beta)
        if (sgn(b) > 0) ++n;
    return n;
}

int BetaData::negatives() const {
    int n = 0;
    for (const auto& b : beta)
        if (sgn(b) < 0) ++n;
    return n;
}

int BetaData::zeros() const {
    int n = 0;
    for (const auto& b : beta)
        if (sgn(b) == 0) ++n;
    return n;
}

bool BetaData::all_zero() const { return zeros() == static_cast<int>(beta.size()); }

BetaData beta_ordered(const Network& net, std::size_t r1, std::size_t r2) {
    BetaData b;
    b.first = r1;
    b.second = r2;
    const std::size_t s = net.n_species();
    std::optional<Rat> lambda;
    for (std::size_t i = 0; i < s; ++i) {
        long v2i = net.change(r2, i);
        if (v2i != 0) {
            lambda = Rat(-net.change(r1, i)) / Rat(v2i);
            break;
        }
    }
    if (!lambda || sgn(*lambda) <= 0) return b;
    for (std::size_t i = 0; i < s; ++i)
        if (Rat(net.change(r1, i)) != -(*lambda) * Rat(net.change(r2, i))) return b;
    b.defined = true;
    b.lambda = *lambda;
    b.beta.reserve(s);
    b.reactant_diff.reserve(s);
    for (std::size_t i = 0; i < s; ++i) {
        long diff = net.reactions[r2].reactant[i] - net.reactions[r1].reactant[i];
        b.reactant_diff.push_back(diff);
        b.beta.push_back(Int(net.change(r1, i)) * Int(diff));
    }
    return b;
}

BetaData beta_oriented(const Network& net, std::size_t r1, std::size_t r2) {
    BetaData b = beta_ordered(net, r1, r2);
    if (!b.defined) b = beta_ordered(net, r2, r1);
    return b;
}

std::string case_to_string(TwoRxnCase c) {
    switch (c) {
        case TwoRxnCase::NOT_APPLICABLE: return "not-applicable";
        case TwoRxnCase::INCONSISTENT: return "inconsistent";
        case TwoRxnCase::CASE_1: return "1";
        case TwoRxnCase::CASE_2A: return "2A";
        case TwoRxnCase::CASE_2B: return "2B";
        case TwoRxnCase::CASE_3A: return "3A";
        case TwoRxnCase::CASE_3B: return "3B";
        case TwoRxnCase::CASE_3C: return "3C";
    }
    return "?";
}

namespace {

TwoRxnCase determine_case(const Network& net, const BetaData& b) {
    if (!b.defined) return TwoRxnCase::INCONSISTENT;
    if (b.all_zero()) return TwoRxnCase::CASE_1;
    if (b.mixed()) {
        if (b.positives() == 1 && b.negatives() == 1) {
            std::size_t i = b.beta.size(), j = b.beta.size();
            for (std::size_t k = 0; k < b.beta.size(); ++k)
                if (sgn(b.beta[k]) != 0) (i == b.beta.size() ? i : j) = k;
            if (b.reactant_diff[i] == -b.reactant_diff[j]) return TwoRxnCase::CASE_3B;
        }
        return TwoRxnCase::CASE_3C;
    }
    if (b.zeros() > 0) {
        for (std::size_t i = 0; i < b.beta.size(); ++i)
            if (sgn(b.beta[i]) == 0 && net.change(b.first, i) != 0) return TwoRxnCase::CASE_2B;
        return TwoRxnCase::CASE_2A;
    }
    return TwoRxnCase::CASE_3A;
}

}  // namespace

BoxGeometry box_geometry(const Network& net, const BetaData& b) {
    BoxGeometry g;
    if (net.n_species() != 2 || !b.defined) return g;
    const long d1 = b.reactant_diff[0], d2 = b.reactant_diff[1];
    const long v1 = net.change(b.first, 0), v2 = net.change(b.first, 1);
    if (v1 != 0) g.gamma = Rat(v2) / Rat(v1);
    if (d1 != 0) g.alpha = Rat(d2) / Rat(d1);
    g.box_defined = (d1 != 0 && d2 != 0);
    g.slope_minus_one = g.alpha && *g.alpha == Rat(-1);
    if (b.mixed()) {
        // Mixed signs force every ingredient nonzero, so both slopes exist.
        // u is the reaction vector based at the reactant with the smaller
        // first coordinate; only the sign of its first component matters.
        const long u1 = (d1 > 0) ? v1 : -v1;
        if (sgn(*g.alpha) < 0)
            g.zigzag_form = (u1 > 0) ? 1 : 2;
        else
            g.zigzag_form = (u1 < 0) ? 3 : 4;
    }
    return g;
}

// ---------------------------------------------------------------------------
// Verdict assembly.
// ---------------------------------------------------------------------------

std::string shape_to_string(Shape s) {
    switch (s) {
        case Shape::ONE_SPECIES: return "one-species";
        case Shape::SINGLE_REACTION: return "single-reaction";
        case Shape::TWO_IRREVERSIBLE: return "two-reaction";
        case Shape::ONE_REV_ONE_IRREV: return "one-reversible-one-irreversible";
        case Shape::TWO_REVERSIBLE: return "two-reversible";
        case Shape::OUT_OF_SCOPE: return "out-of-scope";
    }
    return "?";
}

Shape detect_shape(const Network& net) {
    if (net.n_species() == 1) return Shape::ONE_SPECIES;
    const std::size_t r = net.n_reactions(), p = net.n_reversible_pairs();
    if (r == 1) return Shape::SINGLE_REACTION;
    if (r == 2) return Shape::TWO_IRREVERSIBLE;
    if (r == 3 && p == 1) return Shape::ONE_REV_ONE_IRREV;
    if (r == 4 && p == 2) return Shape::TWO_REVERSIBLE;
    return Shape::OUT_OF_SCOPE;
}

namespace {

void refine_tristate(Tristate& t, Tristate known, const char* what) {
    if (known == Tristate::UNKNOWN) return;
    if (t == Tristate::UNKNOWN) {
        t = known;
        return;
    }
    if (t != known) throw std::logic_error(std::string("tristate conflict: ") + what);
}

Tristate ge2_from(const Capacity& c, std::optional<long> chain_upper) {
    if (c.kind == CapKind::INFINITE || c.lower() >= 2) return Tristate::YES;
    std::optional<long> eff = c.upper();
    if (chain_upper && (!eff || *chain_upper < *eff)) eff = chain_upper;
    if (eff && *eff <= 1) return Tristate::NO;
    return Tristate::UNKNOWN;
}

void ensure_chain(const Verdict& v) {
    auto fits = [](const Capacity& small, const Capacity& big) {
        auto u = big.upper();
        if (!u) return true;
        if (small.kind == CapKind::INFINITE) return false;
        return small.lower() <= *u;
    };
    cross_check(fits(v.cap_npss, v.cap_pss), "capacity chain: nondegenerate <= positive");
    cross_check(fits(v.cap_stable, v.cap_npss), "capacity chain: stable <= nondegenerate");
    cross_check(fits(v.cap_stable, v.cap_pss), "capacity chain: stable <= positive");
}

/// Derives the three boolean questions from the capacity bounds (counting the
/// chain stable <= nondegenerate <= positive), then closes the implication
/// cascade between them.
void finalize(Verdict& v) {
    ensure_chain(v);
    v.multistationary = ge2_from(v.cap_pss, std::nullopt);
    v.nondeg_multistationary = ge2_from(v.cap_npss, v.cap_pss.upper());
    std::optional<long> st_up = v.cap_pss.upper();
    if (auto u = v.cap_npss.upper(); u && (!st_up || *u < *st_up)) st_up = u;
    v.multistable = ge2_from(v.cap_stable, st_up);
    if (v.multistationary == Tristate::NO)
        refine_tristate(v.nondeg_multistationary, Tristate::NO,
                        "no multistationarity, so none nondegenerate");
    if (v.nondeg_multistationary == Tristate::NO)
        refine_tristate(v.multistable, Tristate::NO,
                        "stable counts never exceed nondegenerate counts");
    if (v.multistable == Tristate::YES)
        refine_tristate(v.nondeg_multistationary, Tristate::YES,
                        "two stable states are two nondegenerate states");
    if (v.nondeg_multistationary == Tristate::YES)
        refine_tristate(v.multistationary, Tristate::YES,
                        "nondegenerate multistationarity is multistationarity");
}

int embedded_t_max(const Network& net, std::size_t species) {
    std::vector<std::size_t> all(net.n_reactions());
    std::iota(all.begin(), all.end(), 0);
    auto emb = embedded_network(net, all, {species});
    if (!emb) return -1;
    return analyze_one_species(*emb).t_max;
}

// Networks whose steady-state counts are certified by exact root isolation in
// the test suite; matching is up to renaming species.
struct Attested {
    const char* text;
    Capacity pss, npss, stable;
    bool bistable;
    std::optional<Tristate> multistable_override;
    const char* note;
};

const std::vector<std::pair<std::string, Attested>>& attestation_table() {
    static const std::vector<std::pair<std::string, Attested>> table = [] {
        std::vector<std::pair<std::string, Attested>> t;
        {
            Attested a{"A <-> B; 2A + B -> 3A",
                       Capacity::at_least(3),
                       Capacity::at_least(3),
                       Capacity::at_least(2),
                       true,
                       std::nullopt,
                       "three steady states with the outer two stable at k(A->B)=11/5, "
                       "k(B->A)=1/10, k(2A+B->3A)=1/10 on the class x_A + x_B = 10"};
            t.emplace_back(canonical_form(parse_network(a.text)), a);
        }
        {
            Attested a{"A -> B; 2A + B <-> 3A",
                       Capacity::at_least(2),
                       Capacity::at_least(2),
                       Capacity::at_least(1),
                       false,
                       Tristate::NO,
                       "two steady states at unit rates on the class x_A + x_B = 4; the "
                       "class reduction is x times a quadratic that is negative at 0, so "
                       "at most one steady state is ever stable"};
            t.emplace_back(canonical_form(parse_network(a.text)), a);
        }
        return t;
    }();
    return table;
}

/// Overwrites the capacity bounds with certified values when the network
/// matches a catalogued example; returns a stability ceiling to apply after
/// the tristates are derived.
std::optional<Tristate> apply_attestation(Verdict& v, const Network& net) {
    if (net.n_species() != 2) return std::nullopt;
    const std::string key = canonical_form(net);
    for (const auto& [k, att] : attestation_table())
        if (k == key) {
            v.cap_pss = att.pss;
            v.cap_npss = att.npss;
            v.cap_stable = att.stable;
            v.attested_bistable = att.bistable;
            Justification j{"attested-multistability", ordered_json::object()};
            j.data["matches"] = att.text;
            j.data["bistable"] = att.bistable;
            j.data["note"] = att.note;
            v.justifications.push_back(std::move(j));
            return att.multistable_override;
        }
    return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------------------
// Shape classifiers.
// ---------------------------------------------------------------------------

Verdict classify_one_species(const Network& net) {
    if (net.n_species() != 1) wrong_shape("classify_one_species: exactly one species required");
    Verdict v;
    v.shape = Shape::ONE_SPECIES;
    auto an = analyze_one_species(net);
    auto pk = consistency(net);
    const bool all_both = an.diagram.all_both();
    cross_check(pk.feasible == (an.t_max >= 1 || all_both),
                "one-species consistency must match the mixed-direction structure");

    v.cap_pss = all_both ? Capacity::infinite() : Capacity::exact(an.t_max);
    v.cap_npss = Capacity::exact(an.t_max);
    long stable_bound = 0;
    if (an.t_max == 0) {
        v.cap_stable = Capacity::exact(0);
    } else {
        stable_bound = an.right_leading_max_exists ? (an.t_max + 1) / 2 : an.t_max / 2;
        v.cap_stable = Capacity::at_least(stable_bound);
    }

    Justification j{"one-species-alternating", ordered_json::object()};
    ordered_json dia = ordered_json::array();
    for (std::size_t k = 0; k < an.diagram.reactant_coeffs.size(); ++k) {
        ordered_json entry;
        entry["reactant"] = an.diagram.reactant_coeffs[k];
        entry["direction"] = arrow_to_string(an.diagram.dirs[k]);
        dia.push_back(entry);
    }
    j.data["diagram"] = dia;
    j.data["t_max"] = an.t_max;
    j.data["all_arrows_bidirectional"] = all_both;
    if (an.witness) {
        ordered_json w;
        w["reactions"] = an.witness->reactions;
        w["leads_right"] = an.witness->leads_right;
        w["stable_lower_bound"] = stable_bound;
        j.data["witness"] = w;
    } else {
        j.data["witness"] = nullptr;
    }
    v.justifications.push_back(consistency_justification(pk));
    v.justifications.push_back(std::move(j));
    v.one_species = std::move(an);

    finalize(v);
    cross_check((v.multistationary == Tristate::YES) == (v.one_species->t_max >= 2 || all_both),
                "one-species multistationarity must match the double-alternation test");
    cross_check((v.nondeg_multistationary == Tristate::YES) == (v.one_species->t_max >= 2),
                "one-species nondegenerate multistationarity must match t_max >= 2");
    return v;
}

Verdict classify_single_reaction(const Network& net) {
    if (net.n_reactions() != 1)
        wrong_shape("classify_single_reaction: exactly one reaction required");
    auto pk = consistency(net);
    cross_check(!pk.feasible, "a single reaction cannot balance itself");
    Verdict v;
    v.shape = Shape::SINGLE_REACTION;
    v.cap_pss = v.cap_npss = v.cap_stable = Capacity::exact(0);
    v.justifications.push_back(consistency_justification(pk));
    v.justifications.push_back(
        {"single-reaction",
         ordered_json{{"note", "one irreversible reaction drives every trajectory strictly "
                               "monotonically along its reaction vector"}}});
    finalize(v);
    return v;
}

Verdict classify_two_rxn(const Network& net) {
    if (net.n_reactions() != 2)
        wrong_shape("classify_two_rxn: exactly two directed reactions required");
    const std::size_t s = net.n_species();
    BetaData b = beta_oriented(net, 0, 1);
    auto pk = consistency(net);
    cross_check(pk.feasible == b.defined,
                "two-reaction consistency must match the antiparallel test");
    const TwoRxnCase c = determine_case(net, b);

    Verdict v;
    v.shape = Shape::TWO_IRREVERSIBLE;
    v.case_label = c;
    v.justifications.push_back(consistency_justification(pk));

    Justification tax{"two-reaction-sign-taxonomy", ordered_json::object()};
    tax.data["case"] = case_to_string(c);
    if (b.defined) {
        tax.data["orientation"] = {b.first, b.second};
        tax.data["lambda"] = rat_to_string(b.lambda);
        ordered_json bj = ordered_json::object();
        for (std::size_t i = 0; i < s; ++i) bj[net.species[i]] = b.beta[i].get_str();
        tax.data["beta"] = bj;
    }

    switch (c) {
        case TwoRxnCase::INCONSISTENT:
            v.cap_pss = v.cap_npss = v.cap_stable = Capacity::exact(0);
            tax.data["note"] = "the reaction vectors are not opposite scalar multiples";
            break;
        case TwoRxnCase::CASE_1:
            v.cap_pss = Capacity::infinite();
            v.cap_npss = Capacity::exact(0);
            v.cap_stable = Capacity::exact(0);
            tax.data["note"] =
                "beta vanishes identically: every steady state lies on a positive "
                "continuum of degenerate steady states";
            break;
        case TwoRxnCase::CASE_2A:
        case TwoRxnCase::CASE_2B:
        case TwoRxnCase::CASE_3A:
            v.cap_pss = Capacity::exact(1);
            v.cap_npss = Capacity::exact(1);
            v.cap_stable = Capacity::at_least(0);
            tax.data["note"] =
                "the nonzero beta entries share one sign, so a strictly monotone "
                "functional crosses each compatibility class exactly once";
            break;
        case TwoRxnCase::CASE_3B:
            if (s == 2) {
                v.cap_pss = Capacity::infinite();
                v.cap_npss = Capacity::exact(1);
                v.cap_stable = Capacity::at_least(0);
                tax.data["note"] =
                    "zigzag with reactant slope -1: tangency produces a degenerate "
                    "continuum while transversal classes cross once";
            } else {
                v.cap_pss = Capacity::at_least(2);
                v.cap_npss = Capacity::at_least(0);
                v.cap_stable = Capacity::at_least(0);
                tax.data["note"] =
                    "mixed signs with the slope -1 degeneracy: multistationary, but "
                    "every multiple steady state is degenerate";
            }
            break;
        case TwoRxnCase::CASE_3C:
            if (s == 2) {
                v.cap_pss = Capacity::exact(2);
                v.cap_npss = Capacity::exact(2);
                v.cap_stable = Capacity::exact(1);
                tax.data["note"] =
                    "zigzag with reactant slope away from -1: two nondegenerate steady "
                    "states, exactly one stable";
            } else {
                v.cap_pss = Capacity::at_least(2);
                v.cap_npss = Capacity::at_least(2);
                v.cap_stable = Capacity::at_least(1);
                tax.data["note"] =
                    "mixed signs clear of the slope -1 degeneracy: two nondegenerate "
                    "steady states with one stable are achievable";
            }
            break;
        case TwoRxnCase::NOT_APPLICABLE:
            cross_check(false, "two-reaction case determination returned not-applicable");
    }
    v.justifications.push_back(std::move(tax));
    if (b.defined) v.beta = b;

    if (s == 2 && b.defined) {
        BoxGeometry g = box_geometry(net, b);
        if (sgn(b.beta[0]) != 0 && sgn(b.beta[1]) != 0) {
            cross_check(g.gamma.has_value() && g.alpha.has_value(),
                        "nonzero betas force both slopes to exist");
            cross_check(Rat(b.beta[1]) / Rat(b.beta[0]) == (*g.gamma) * (*g.alpha),
                        "beta ratio must equal the product of the two slopes");
        }
        cross_check((g.zigzag_form != 0) == b.mixed(),
                    "zigzag boxes are exactly the mixed-sign cases");
        Justification bg{"two-species-box-geometry", ordered_json::object()};
        bg.data["gamma"] = g.gamma ? ordered_json(rat_to_string(*g.gamma)) : ordered_json(nullptr);
        bg.data["alpha"] = g.alpha ? ordered_json(rat_to_string(*g.alpha)) : ordered_json(nullptr);
        bg.data["zigzag_form"] = g.zigzag_form;
        bg.data["reactant_slope_minus_one"] = g.slope_minus_one;
        v.justifications.push_back(std::move(bg));
        v.box = g;
    }

    finalize(v);
    if (c == TwoRxnCase::CASE_3B && s != 2) {
        refine_tristate(v.nondeg_multistationary, Tristate::NO,
                        "the slope -1 degeneracy forbids nondegenerate witnesses");
        refine_tristate(v.multistable, Tristate::NO,
                        "stable counts never exceed nondegenerate counts");
    }
    cross_check((v.multistationary == Tristate::YES) ==
                    (b.defined && (b.all_zero() || b.mixed())),
                "two-reaction multistationarity must match the sign test");
    cross_check((v.nondeg_multistationary == Tristate::YES) == (c == TwoRxnCase::CASE_3C),
                "two-reaction nondegenerate multistationarity must match case 3C");
    if (s == 2) {
        const bool crit = b.defined && v.box && v.box->box_defined && v.box->zigzag_form != 0 &&
                          !v.box->slope_minus_one;
        cross_check((v.nondeg_multistationary == Tristate::YES) == crit,
                    "the box-geometry criterion must match the sign taxonomy");
        cross_check(v.multistable == Tristate::NO,
                    "two species with two reactions is never multistable");
    }
    return v;
}

Verdict classify_one_rev_one_irrev(const Network& net) {
    if (net.n_reactions() != 3 || net.n_reversible_pairs() != 1)
        wrong_shape(
            "classify_one_rev_one_irrev: one reversible pair plus one irreversible "
            "reaction required");
    std::size_t pa = 3, t = 3;
    for (std::size_t r = 0; r < 3; ++r) {
        if (net.reactions[r].reversible_pair) {
            if (pa == 3) pa = r;
        } else {
            t = r;
        }
    }
    const std::size_t pb = *net.reactions[pa].reversible_pair;

    // Orient the reversible pair so that its vector is -lambda times the
    // irreversible one with lambda > 0.
    BetaData bd = beta_ordered(net, pa, t);
    if (!bd.defined) bd = beta_ordered(net, pb, t);
    auto pk = consistency(net);
    cross_check(pk.feasible == bd.defined,
                "a reversible pair plus one reaction is consistent exactly when the "
                "vectors are parallel");

    Verdict v;
    v.shape = Shape::ONE_REV_ONE_IRREV;
    v.justifications.push_back(consistency_justification(pk));
    Justification jl{"reversible-plus-irreversible-interleaving", ordered_json::object()};

    if (!bd.defined) {
        v.cap_pss = v.cap_npss = v.cap_stable = Capacity::exact(0);
        jl.data["parallel"] = false;
        jl.data["note"] =
            "the irreversible reaction vector leaves the line of the reversible pair";
        v.justifications.push_back(std::move(jl));
        finalize(v);
        return v;
    }

    const std::size_t s = net.n_species();
    const auto& y = net.reactions[bd.first].reactant;
    const auto& yp = net.reactions[bd.first].product;
    const auto& yt = net.reactions[bd.second].reactant;
    const auto& ytp = net.reactions[bd.second].product;
    std::vector<std::string> witness_species;
    ordered_json per = ordered_json::object();
    bool any = false;
    for (std::size_t i = 0; i < s; ++i) {
        const bool c2 = sgn(bd.beta[i]) < 0;
        const bool c3 = (std::max(y[i], yp[i]) < yt[i] && yt[i] < ytp[i]) ||
                        (ytp[i] < yt[i] && yt[i] < std::min(y[i], yp[i]));
        const int emb_t = embedded_t_max(net, i);
        const bool c4 = emb_t >= 2;
        cross_check(c2 == c3,
                    "interleaving: a negative beta entry must coincide with the "
                    "nested-interval test");
        cross_check(c3 == c4,
                    "interleaving: the nested-interval test must coincide with the "
                    "embedded double alternation");
        ordered_json e;
        e["beta_negative"] = c2;
        e["embedded_t_max"] = emb_t;
        per[net.species[i]] = e;
        if (c2) {
            any = true;
            witness_species.push_back(net.species[i]);
        }
    }
    jl.data["parallel"] = true;
    jl.data["lambda"] = rat_to_string(bd.lambda);
    jl.data["species"] = per;
    jl.data["witness_species"] = witness_species;
    if (any) {
        v.cap_pss = Capacity::at_least(2);
        v.cap_npss = Capacity::at_least(0);
        v.cap_stable = Capacity::at_least(0);
        jl.data["note"] =
            "some species sees the irreversible reactant strictly between the "
            "reversible pair and strictly below its own product";
    } else {
        v.cap_pss = Capacity::exact(1);
        v.cap_npss = Capacity::at_least(0);
        v.cap_stable = Capacity::at_least(0);
        jl.data["note"] = "no species interleaves, so each class carries one steady state";
    }
    v.justifications.push_back(std::move(jl));
    v.beta = bd;

    const auto override = apply_attestation(v, net);
    finalize(v);
    if (override) refine_tristate(v.multistable, *override, "attested stability ceiling");
    cross_check((v.multistationary == Tristate::YES) == any,
                "reversible-plus-irreversible multistationarity must match the "
                "interleaving test");
    return v;
}

Verdict classify_two_rev(const Network& net) {
    if (net.n_reactions() != 4 || net.n_reversible_pairs() != 2)
        wrong_shape("classify_two_rev: exactly two reversible pairs required");
    std::vector<std::size_t> leads;
    for (std::size_t r = 0; r < 4; ++r)
        if (net.reactions[r].reversible_pair && *net.reactions[r].reversible_pair > r)
            leads.push_back(r);
    cross_check(leads.size() == 2, "two reversible pairs expected");
    const std::size_t p1 = leads[0], p2 = leads[1];
    const std::size_t s = net.n_species();

    // Parallelism of the two reaction lines (any nonzero ratio).
    std::optional<Rat> ratio;
    for (std::size_t i = 0; i < s; ++i)
        if (net.change(p1, i) != 0) {
            ratio = Rat(net.change(p2, i)) / Rat(net.change(p1, i));
            break;
        }
    bool parallel = ratio.has_value() && sgn(*ratio) != 0;
    if (parallel)
        for (std::size_t i = 0; i < s; ++i)
            if (Rat(net.change(p2, i)) != (*ratio) * Rat(net.change(p1, i))) {
                parallel = false;
                break;
            }

    auto pk = consistency(net);
    cross_check(pk.feasible, "a reversible network is always consistent");

    Verdict v;
    v.shape = Shape::TWO_REVERSIBLE;
    v.justifications.push_back(consistency_justification(pk));
    Justification jl{"two-reversible-interleaving", ordered_json::object()};
    jl.data["parallel"] = parallel;

    if (!parallel) {
        auto rep = stoich_report(net);
        cross_check(rep.weakly_reversible && rep.deficiency == 0,
                    "skew reversible pairs must form a weakly reversible deficiency-zero "
                    "network");
        v.cap_pss = Capacity::exact(1);
        v.cap_npss = Capacity::at_least(0);
        v.cap_stable = Capacity::at_least(0);
        jl.data["note"] =
            "the two reversible lines span independent directions; complex balancing "
            "pins exactly one steady state per class";
        v.justifications.push_back(std::move(jl));
        finalize(v);
        return v;
    }

    jl.data["ratio"] = rat_to_string(*ratio);
    const auto& y1 = net.reactions[p1].reactant;
    const auto& y1p = net.reactions[p1].product;
    const auto& y2 = net.reactions[p2].reactant;
    const auto& y2p = net.reactions[p2].product;
    std::vector<std::string> witness_species;
    ordered_json per = ordered_json::object();
    bool any = false;
    for (std::size_t i = 0; i < s; ++i) {
        const long i1 = std::min(y1[i], y1p[i]), a1 = std::max(y1[i], y1p[i]);
        const long i2 = std::min(y2[i], y2p[i]), a2 = std::max(y2[i], y2p[i]);
        const bool c2 = (i1 < a1 && a1 < i2 && i2 < a2) || (i2 < a2 && a2 < i1 && i1 < a1);
        const int emb_t = embedded_t_max(net, i);
        const bool c3 = emb_t >= 3;
        cross_check(c2 == c3,
                    "two-reversible: the disjoint-interval test must coincide with the "
                    "embedded triple alternation");
        ordered_json e;
        e["intervals_disjoint_ordered"] = c2;
        e["embedded_t_max"] = emb_t;
        per[net.species[i]] = e;
        if (c2) {
            any = true;
            witness_species.push_back(net.species[i]);
        }
    }
    jl.data["species"] = per;
    jl.data["witness_species"] = witness_species;
    if (any) {
        v.cap_pss = Capacity::at_least(2);
        v.cap_npss = Capacity::at_least(0);
        v.cap_stable = Capacity::at_least(0);
        jl.data["note"] =
            "some species separates the two reversible segments into disjoint ordered "
            "intervals";
    } else {
        v.cap_pss = Capacity::exact(1);
        v.cap_npss = Capacity::at_least(0);
        v.cap_stable = Capacity::at_least(0);
        jl.data["note"] =
            "no species separates the reversible segments, so each class carries one "
            "steady state";
    }
    v.justifications.push_back(std::move(jl));
    finalize(v);
    cross_check((v.multistationary == Tristate::YES) == any,
                "two-reversible multistationarity must match the interval test");
    return v;
}

namespace {

Verdict out_of_scope_verdict(const Network& net) {
    Verdict v;
    v.shape = Shape::OUT_OF_SCOPE;
    v.in_scope = false;
    auto pk = consistency(net);
    auto rep = stoich_report(net);
    v.justifications.push_back(consistency_justification(pk));
    Justification j{"out-of-scope", ordered_json::object()};
    j.data["species"] = net.n_species();
    j.data["reactions"] = net.n_reactions();
    j.data["reversible_pairs"] = net.n_reversible_pairs();
    j.data["note"] =
        "no exact decision theory is implemented for this shape; only consistency and "
        "deficiency bounds apply";
    if (!pk.feasible) {
        v.cap_pss = v.cap_npss = v.cap_stable = Capacity::exact(0);
    } else {
        const long max_linkage_def =
            *std::max_element(rep.linkage_deficiencies.begin(), rep.linkage_deficiencies.end());
        const bool at_most_one =
            rep.deficiency == 0 || (rep.single_terminal_per_linkage && rep.deficiency_splits &&
                                    max_linkage_def <= 1);
        if (at_most_one) {
            v.cap_pss = Capacity::exact(1);
            v.cap_npss = Capacity::at_least(0);
            v.cap_stable = Capacity::at_least(0);
        } else {
            v.cap_pss = Capacity::at_least(1);
            v.cap_npss = Capacity::at_least(0);
            v.cap_stable = Capacity::at_least(0);
        }
    }
    v.justifications.push_back(std::move(j));
    finalize(v);
    return v;
}

}  // namespace

Verdict classify(const Network& net) {
    const Shape sh = detect_shape(net);
    Verdict v;
    switch (sh) {
        case Shape::ONE_SPECIES: v = classify_one_species(net); break;
        case Shape::SINGLE_REACTION: v = classify_single_reaction(net); break;
        case Shape::TWO_IRREVERSIBLE: v = classify_two_rxn(net); break;
        case Shape::ONE_REV_ONE_IRREV: v = classify_one_rev_one_irrev(net); break;
        case Shape::TWO_REVERSIBLE: v = classify_two_rev(net); break;
        case Shape::OUT_OF_SCOPE: v = out_of_scope_verdict(net); break;
    }

    // Independent floor and preclusion checks, applied to every verdict.
    auto rep = stoich_report(net);
    auto pk = consistency(net);
    if (pk.feasible)
        cross_check(v.cap_pss.kind == CapKind::INFINITE || v.cap_pss.lower() >= 1,
                    "a consistent network must admit a positive steady state");
    else
        cross_check(v.cap_pss == Capacity::exact(0),
                    "an inconsistent network has no positive steady states");

    if (rep.deficiency == 0) {
        cross_check(v.multistationary != Tristate::YES,
                    "deficiency zero precludes multistationarity");
        Justification j{"deficiency-zero", ordered_json::object()};
        j.data["weakly_reversible"] = rep.weakly_reversible;
        if (rep.weakly_reversible) {
            cross_check(v.cap_pss == Capacity::exact(1),
                        "complex balancing pins exactly one steady state per class");
            j.data["note"] =
                "weakly reversible with deficiency zero: exactly one positive steady "
                "state in each compatibility class, for every choice of rates";
        } else {
            cross_check(!pk.feasible && v.cap_pss == Capacity::exact(0),
                        "deficiency zero without weak reversibility leaves no positive "
                        "steady states");
            j.data["note"] =
                "deficiency zero without weak reversibility: no positive steady states "
                "for any choice of rates";
        }
        v.justifications.push_back(std::move(j));
    } else if (rep.single_terminal_per_linkage && rep.deficiency_splits &&
               *std::max_element(rep.linkage_deficiencies.begin(),
                                 rep.linkage_deficiencies.end()) <= 1) {
        cross_check(v.multistationary != Tristate::YES,
                    "the deficiency-one conditions preclude multistationarity");
        auto u = v.cap_pss.upper();
        cross_check(u.has_value() && *u <= 1,
                    "the deficiency-one conditions cap each class at one steady state");
        Justification j{"deficiency-one", ordered_json::object()};
        j.data["linkage_deficiencies"] = rep.linkage_deficiencies;
        j.data["note"] =
            "every linkage class has one terminal strong class and deficiency at most "
            "one, and the deficiencies add up: at most one steady state per class";
        v.justifications.push_back(std::move(j));
    }
    return v;
}

nlohmann::ordered_json verdict_to_json(const Verdict& v) {
    ordered_json j;
    j["shape"] = shape_to_string(v.shape);
    j["in_scope"] = v.in_scope;
    if (v.case_label == TwoRxnCase::NOT_APPLICABLE)
        j["case"] = nullptr;
    else if (v.case_label == TwoRxnCase::INCONSISTENT)
        j["case"] = "INCONSISTENT";
    else
        j["case"] = "CASE_" + case_to_string(v.case_label);
    j["cap_pss"] = cap_to_json(v.cap_pss);
    j["cap_npss"] = cap_to_json(v.cap_npss);
    j["cap_stable"] = cap_to_json(v.cap_stable);
    j["multistationary"] = tristate_to_json(v.multistationary);
    j["nondegenerately_multistationary"] = tristate_to_json(v.nondeg_multistationary);
    j["multistable"] = tristate_to_json(v.multistable);
    if (v.attested_bistable) j["attested_bistable"] = *v.attested_bistable;
    ordered_json js = ordered_json::array();
    for (const auto& ju : v.justifications) {
        ordered_json o;
        o["criterion"] = ju.criterion;
        o["data"] = ju.data;
        js.push_back(o);
    }
    j["justifications"] = js;
    return j;
}

}  // namespace crnms
