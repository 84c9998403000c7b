#ifndef CRNMS_WITNESS_HPP
#define CRNMS_WITNESS_HPP

/// \file witness.hpp
/// Machine-verified realizations of classification verdicts: explicit rate
/// constants plus a compatibility class, with the steady states in that class
/// counted by exact rational root isolation.  Nondegeneracy is simplicity of
/// the isolated root and exponential stability is the sign of the derivative
/// of the one-dimensional reduced dynamics, so every certificate is a finite
/// exact computation.
///
/// All builders work over networks whose stoichiometric subspace is
/// one-dimensional (every in-scope multistationary shape); the class is then
/// a line x_i = offsets[i] + gamma[i] * t parametrized by the pivot species'
/// concentration t, and the pivot's rate of change restricted to the class is
/// a polynomial in t whose roots inside the positivity domain are exactly the
/// positive steady states of the class.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "crnms/classify.hpp"
#include "crnms/network.hpp"
#include "crnms/ratpoly.hpp"
#include "crnms/rational.hpp"

namespace crnms {

// ---------------------------------------------------------------------------
// Reduction to one dimension.
// ---------------------------------------------------------------------------

/// A network with dim(S) = 1 restricted to one compatibility class.  The
/// pivot is the first species with nonzero net change; gamma[pivot] == 1 and
/// offsets[pivot] == 0, so t is the pivot concentration itself.
///
/// `poly` is d t/dt on the class after dividing out, per species, the largest
/// power of (offsets[i] + gamma[i] t) common to every reaction's reactant
/// monomial.  Those factors are strictly positive throughout the open domain,
/// so the division changes neither the roots inside the domain nor the sign
/// of the derivative at any simple root (stability is sign(poly') < 0 there).
struct ReducedSystem {
    std::size_t pivot = 0;
    RatVec gamma;    ///< per species; gamma[pivot] == 1
    RatVec offsets;  ///< per species; offsets[pivot] == 0
    RatPoly poly;    ///< d t/dt on the class, common positive factors removed
    OpenDomain domain;        ///< t-interval where every species is positive
    bool domain_empty = false;  ///< no positive point on this class line
};

/// Reduces a dim(S) = 1 network along the class determined by `offsets`
/// (full species-length vector; the pivot entry must be 0).  Throws
/// std::invalid_argument when dim(S) != 1, a rate is nonpositive, or the
/// offsets are malformed.
ReducedSystem reduce_along_class(const Network& net, const RatVec& rates, const RatVec& offsets);

/// One-species special case: the class is all of (0, inf) and the reduction
/// is the unstripped polynomial sum_k rate_k (n_k - m_k) x^{m_k} over the
/// reactions m_k A -> n_k A.  The zero polynomial is permitted (every
/// positive state is then a degenerate steady state).
RatPoly reduce_one_species(const Network& net, const RatVec& rates);

/// Two-reaction special case of reduce_along_class (the pair of reactions
/// must have nonzero opposite-multiple vectors so that dim(S) = 1).
ReducedSystem reduce_two_reaction(const Network& net, const RatVec& rates,
                                  const RatVec& class_offsets);

// ---------------------------------------------------------------------------
// Witnesses.
// ---------------------------------------------------------------------------

/// One steady state certified by root isolation of the reduced dynamics.
struct CertifiedState {
    RatInterval interval;  ///< isolates the pivot coordinate t
    std::vector<RatInterval> point_intervals;  ///< per-species enclosures
    int multiplicity = 1;
    bool exact = false;         ///< the root is rational; interval degenerate
    bool nondegenerate = false; ///< simple root of the reduced polynomial
    /// Exponential stability within the class (simple roots only: sign of the
    /// reduced derivative).  Absent for degenerate states.
    std::optional<bool> stable;
};

/// Rate constants + compatibility class + certified steady states.
struct Witness {
    std::string kind;  ///< which construction produced it
    RatVec rates;      ///< per reaction, positive
    RatVec offsets;    ///< class anchor; offsets[pivot] == 0
    ReducedSystem reduced;
    std::vector<CertifiedState> states;  ///< ascending in t; empty for continua
    /// The reduced polynomial vanishes identically on a nonempty domain:
    /// every point of the class is a (degenerate) steady state.
    bool continuum = false;
    int n_nondegenerate = 0;
    int n_stable = 0;
    /// For the no-steady-states witness of an inconsistent network: the
    /// separating functional u and w = Gamma^T u >= 0, != 0, which make
    /// u . x strictly increase along every positive trajectory regardless of
    /// rate constants.  Empty otherwise.
    RatVec obstruction_u, obstruction_w;
};

/// Witness construction failed or was refused: the request contradicts the
/// classifier's verdict, or a bounded search exhausted its budget.  The
/// message carries the refusal reason or the searched parameters.
class WitnessFailure : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Iteration cap for all bounded witness searches; reads CRNMS_SEARCH_BUDGET
/// from the environment (default 100000 candidate evaluations).
long search_budget();

/// Serializes a witness: {"rates": {"r0": "4", ...}, "class": ..., "steady_states":
/// [...]}, all rationals as strings "p/q".  The class is {"T": "3"} for a
/// two-species network conserving x_1 + x_2 = T, else {"c": [...], "gamma":
/// [...], "pivot": i}.
nlohmann::ordered_json witness_to_json(const Network& net, const Witness& w);

// ---------------------------------------------------------------------------
// Builders.  Each returns a witness whose states were verified by root
// isolation before returning; certify() re-checks any witness from scratch.
// ---------------------------------------------------------------------------

/// For a one-species network that is strictly alternating (T+1 reactions at
/// T+1 distinct reactant coefficients with alternating arrow directions):
/// rates making the targets (strictly increasing positive rationals, one per
/// alternation) exactly the positive roots of the reduced polynomial, all
/// simple.  Solves the homogeneous linear system prescribing the roots; the
/// kernel ray's signs always strictly alternate, hence always match the arrow
/// directions, and the stable-state count lands on ceil(T/2) when the first
/// arrow points right, floor(T/2) otherwise.  Throws WitnessFailure when the
/// network is not strictly alternating or the targets are malformed.
Witness prescribe_roots_one_species(const Network& net, const std::vector<Rat>& targets);

/// General one-species builder: realizes the network's full capacity t_max.
/// Strictly alternating networks go through prescribe_roots_one_species with
/// targets 1..T; otherwise the reactions of a maximal alternating chain get
/// the prescribed-root rates and all remaining reactions get a common damping
/// rate, halved until exactly t_max simple roots are certified.
Witness witness_one_species(const Network& net);

enum class TwoReactionGoal {
    TWO_NONDEG,         ///< >= 2 nondegenerate steady states in one class
    DOUBLE_DEGENERATE,  ///< an exact double root (tangency) in one class
    NONE_IN_CLASS,      ///< a class with no steady state at all
};

/// Witness construction for two-reaction networks whose vectors are nonzero
/// opposite multiples and whose sign vector beta is mixed without the
/// slope -1 degeneracy (the nondegenerately multistationary two-reaction
/// case; any species count).  Finds a positive rational rho with
/// <beta, rho> = 0 and nonvanishing second-order term, anchors the class at
/// x_i = 1/rho_i so the reduced dynamics has an exact rational double root
/// there, then perturbs one rate dyadically until isolation certifies the
/// goal.  Other cases and goals that contradict the verdict are refused with
/// the classifier's case label.
Witness witness_two_reaction(const Network& net, TwoReactionGoal goal);

/// Witness of a degenerate continuum for the verdicts that admit one: a
/// one-species network whose arrow diagram is all-BOTH (per-reactant positive
/// balance of the coefficients), or a two-reaction network with beta = 0 or
/// with the mixed slope -1 degeneracy (rate ratio and aligned class offset
/// making the two terms cancel identically).  The reduced polynomial is
/// verified to vanish identically on a nonempty domain.
Witness witness_degenerate(const Network& net);

/// For any consistent network with dim(S) = 1: rates taken from the positive
/// dependence among the reaction vectors make the all-ones state an exact
/// steady state; the class through it is certified by isolation.  Realizes
/// cap_pss >= 1 constructively.
Witness witness_single(const Network& net);

/// For an inconsistent network (any dimension): the rate-independent
/// emptiness certificate.  Verifies w = Gamma^T u >= 0, != 0 exactly and
/// returns a witness with zero steady states and the obstruction attached.
Witness witness_none_possible(const Network& net);

/// Budgeted deterministic search for a class with >= 2 distinct steady
/// states on a consistent dim(S) = 1 network (the possibly-degenerate
/// multistationarity of the reversible-pair shapes).  Samples dyadic rates
/// and offsets; throws WitnessFailure with the searched ranges when the
/// budget is exhausted.
Witness witness_multistationary_search(const Network& net);

/// Tangency lifting for dim(S) = 1 networks with more than two reactions:
/// runs the two-reaction construction on the designated pair (whose beta must
/// be mixed), then damps every other reaction by a dyadic factor, halved
/// until >= 2 nondegenerate steady states (one of them stable) are certified.
Witness witness_lifted(const Network& net, std::size_t base_first, std::size_t base_second);

// ---------------------------------------------------------------------------
// Verification.
// ---------------------------------------------------------------------------

/// Exact steady-state census of one compatibility class: reduction + root
/// isolation for consistent dim(S) = 1 networks; for inconsistent networks
/// (any dimension) the separating functional is re-verified and all counts
/// are zero.  Throws std::invalid_argument for consistent networks with
/// dim(S) != 1.
struct ClassCount {
    bool continuum = false;
    int distinct = 0;
    int nondegenerate = 0;
    int stable = 0;
};
ClassCount count_in_class(const Network& net, const RatVec& rates, const RatVec& offsets);

/// Re-derives the reduced system of `w` from scratch, re-isolates, and checks
/// the recomputation against the witness's stored states and against the
/// classifier's capacity bounds (exact upper bounds never exceeded; two or
/// more certified states force a multistationary verdict; and so on).  Any
/// mismatch is a bug and throws std::logic_error.
struct CertifiedReport {
    bool continuum = false;
    int n_distinct = 0;
    int n_nondegenerate = 0;
    int n_stable = 0;
};
CertifiedReport certify(const Network& net, const Witness& w);

}  // namespace crnms

#endif  // CRNMS_WITNESS_HPP
