#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "crnms/network.hpp"
#include "crnms/rational.hpp"
#include "crnms/stoich.hpp"

namespace crnms {

// ---------------------------------------------------------------------------
// One-species machinery: arrow diagrams and alternating subnetworks.
// ---------------------------------------------------------------------------

enum class ArrowDir { LEFT, RIGHT, BOTH };

std::string arrow_to_string(ArrowDir d);

// Per distinct reactant coefficient (ascending), the direction of its
// reactions: RIGHT if every product exceeds the reactant coefficient, LEFT if
// every product is below it, BOTH otherwise.
struct ArrowDiagram {
    std::vector<long> reactant_coeffs;  // distinct, ascending
    std::vector<ArrowDir> dirs;         // parallel to reactant_coeffs

    bool all_both() const;
    std::string to_string() const;
};

ArrowDiagram arrow_diagram(const Network& net);

// A strictly alternating chain of T+1 reactions at T+1 distinct reactant
// coefficients; T is the number of alternations.
struct AlternatingWitness {
    int t = 0;
    std::vector<size_t> reactions;  // indices into net.reactions, ascending reactant
    bool leads_right = false;       // first arrow points right
};

struct OneSpeciesAnalysis {
    ArrowDiagram diagram;
    int t_max = 0;
    // A maximal witness (absent iff t_max == 0). When a right-leading maximal
    // chain exists the witness is right-leading (it certifies the larger
    // stable-count bound).
    std::optional<AlternatingWitness> witness;
    bool right_leading_max_exists = false;
};

OneSpeciesAnalysis analyze_one_species(const Network& net);

// ---------------------------------------------------------------------------
// Capacity values: exact counts, lower bounds, or infinity.
// ---------------------------------------------------------------------------

enum class CapKind { EXACT, AT_LEAST, INFINITE };

struct Capacity {
    CapKind kind = CapKind::AT_LEAST;
    long value = 0;  // meaningless for INFINITE

    static Capacity exact(long n) { return {CapKind::EXACT, n}; }
    static Capacity at_least(long n) { return {CapKind::AT_LEAST, n}; }
    static Capacity infinite() { return {CapKind::INFINITE, 0}; }

    // Guaranteed count (lower end of what the value asserts).
    long lower() const;
    // Known upper bound, if the kind pins one (EXACT pins value; INFINITE is
    // unbounded; AT_LEAST pins nothing).
    std::optional<long> upper() const;

    bool operator==(const Capacity& o) const {
        return kind == o.kind && (kind == CapKind::INFINITE || value == o.value);
    }
};

std::string cap_to_string(const Capacity& c);
nlohmann::ordered_json cap_to_json(const Capacity& c);

enum class Tristate { NO, YES, UNKNOWN };

std::string tristate_to_string(Tristate t);
nlohmann::ordered_json tristate_to_json(Tristate t);  // true | false | "unknown"

// ---------------------------------------------------------------------------
// Two-reaction machinery: the Hadamard sign vector and the case taxonomy.
// ---------------------------------------------------------------------------

// beta_i = (y'_i - y_i) * (ytilde_i - y_i) for an ordered pair of reactions
// whose vectors are negative scalar multiples of each other; undefined
// otherwise. The orientation (which reaction plays y -> y') only scales beta
// by 1/lambda > 0, so the sign pattern is a function of the network.
struct BetaData {
    bool defined = false;       // vectors are negative scalar multiples
    Rat lambda = 0;             // y' - y = -lambda (ytilde' - ytilde), lambda > 0
    size_t first = 0, second = 0;  // reaction indices playing (y->y', ytilde->ytilde')
    std::vector<Int> beta;         // per species
    std::vector<long> reactant_diff;  // ytilde - y per species

    int positives() const;
    int negatives() const;
    int zeros() const;
    bool mixed() const { return positives() > 0 && negatives() > 0; }
    bool all_zero() const;
};

// Computes beta for the directed reactions (r1, r2) of net, taken in that
// role order. defined == false when no lambda > 0 exists for this order.
BetaData beta_ordered(const Network& net, size_t r1, size_t r2);

// Tries both role orders and returns the oriented data (defined == false only
// when the vectors are not nonzero negative multiples in either order, i.e.
// not parallel-opposite at all).
BetaData beta_oriented(const Network& net, size_t r1, size_t r2);

enum class TwoRxnCase {
    NOT_APPLICABLE,
    INCONSISTENT,  // reaction vectors not negative scalar multiples
    CASE_1,        // beta = 0
    CASE_2A,       // some beta_i = 0, every such species is fixed (y'_i = y_i)
    CASE_2B,       // some beta_i = 0 with y'_i != y_i (so ytilde_i = y_i)
    CASE_3A,       // no zero entries, all same sign
    CASE_3B,       // mixed sign, exactly one +/- pair, reactant slope -1
    CASE_3C,       // mixed sign, not the slope -1 degeneracy
};

std::string case_to_string(TwoRxnCase c);

// Box-diagram geometry for 2-species 2-reaction networks.
struct BoxGeometry {
    bool box_defined = false;          // reactants differ in both coordinates
    std::optional<Rat> gamma;          // slope of the reaction vector (nullopt = vertical)
    std::optional<Rat> alpha;          // slope of the reactant segment
    int zigzag_form = 0;               // 1..4 when the diagram zigzags, else 0
    bool slope_minus_one = false;      // alpha == -1
};

BoxGeometry box_geometry(const Network& net, const BetaData& b);

// ---------------------------------------------------------------------------
// Verdicts.
// ---------------------------------------------------------------------------

enum class Shape {
    ONE_SPECIES,
    SINGLE_REACTION,
    TWO_IRREVERSIBLE,
    ONE_REV_ONE_IRREV,
    TWO_REVERSIBLE,
    OUT_OF_SCOPE,
};

std::string shape_to_string(Shape s);

// Detects the classification shape of a network. One-species networks always
// report ONE_SPECIES (the one-species theory subsumes the reaction-count
// classifiers there).
Shape detect_shape(const Network& net);

struct Justification {
    std::string criterion;         // stable identifier, e.g. "two-reaction-sign-taxonomy"
    nlohmann::ordered_json data;   // criterion-specific evidence
};

struct Verdict {
    Shape shape = Shape::OUT_OF_SCOPE;
    bool in_scope = true;

    Capacity cap_pss = Capacity::at_least(0);
    Capacity cap_npss = Capacity::at_least(0);
    Capacity cap_stable = Capacity::at_least(0);

    Tristate multistationary = Tristate::UNKNOWN;
    Tristate nondeg_multistationary = Tristate::UNKNOWN;
    Tristate multistable = Tristate::UNKNOWN;

    TwoRxnCase case_label = TwoRxnCase::NOT_APPLICABLE;
    std::vector<Justification> justifications;

    // Populated by the shape-specific classifiers for reuse by the witness
    // pipeline.
    std::optional<OneSpeciesAnalysis> one_species;
    std::optional<BetaData> beta;
    std::optional<BoxGeometry> box;

    // Set when the network matches a catalogued example whose stability
    // profile is certified by the test suite.
    std::optional<bool> attested_bistable;
};

nlohmann::ordered_json verdict_to_json(const Verdict& v);

// Shape-specific classifiers. Each throws std::invalid_argument when the
// network does not have the required shape.
Verdict classify_one_species(const Network& net);
Verdict classify_single_reaction(const Network& net);
Verdict classify_two_rxn(const Network& net);      // two directed reactions, any s
Verdict classify_one_rev_one_irrev(const Network& net);
Verdict classify_two_rev(const Network& net);

// Dispatcher: routes to the shape classifiers, independently cross-checks the
// deficiency-based preclusions and the consistency floor for every verdict
// (std::logic_error on any disagreement), and produces a partial verdict for
// out-of-scope networks.
Verdict classify(const Network& net);

}  // namespace crnms
