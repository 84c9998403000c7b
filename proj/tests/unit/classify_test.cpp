// Classifier verdicts on the bundled example corpus, the one-species arrow
// machinery, the two-reaction sign taxonomy, and structural verdict
// properties.  Expected values are frozen from independent derivations
// (tests/oracle/oracle_core.py).
#include <doctest.h>

#include <string>
#include <vector>

#include "crnms/classify.hpp"
#include "crnms/enumerate.hpp"

using namespace crnms;

namespace {

struct Golden {
    const char* text;
    Shape shape;
    TwoRxnCase case_label;
    const char* pss;     // rendered capacity
    const char* npss;
    const char* stable;
    Tristate mss;
    Tristate nondeg;
    Tristate multistable;
};

const Golden kGolden[] = {
    // one-species pair with a balanced reactant: infinitely many degenerate
    // steady states, none nondegenerate
    {"A -> 0; A -> 2A", Shape::ONE_SPECIES, TwoRxnCase::NOT_APPLICABLE, "infinity", "0", "0",
     Tristate::YES, Tristate::NO, Tristate::NO},
    // mixed-sign pair with the slope -1 degeneracy: a continuum, max one
    // nondegenerate state
    {"A + B -> 0; 2A -> 3A + B", Shape::TWO_IRREVERSIBLE, TwoRxnCase::CASE_3B,
     "infinity", "1", ">=0", Tristate::YES, Tristate::NO, Tristate::NO},
    // five-reaction one-species network with a 2-alternating subnetwork
    {"0 <- A; A -> 2A; 2A <-> 3A; 3A -> A", Shape::ONE_SPECIES, TwoRxnCase::NOT_APPLICABLE, "2",
     "2", ">=1", Tristate::YES, Tristate::YES, Tristate::UNKNOWN},
    // the two-species zigzag with slope 1: exactly 2 states, 1 stable
    {"B -> A; A + 2B -> 3B", Shape::TWO_IRREVERSIBLE, TwoRxnCase::CASE_3C, "2", "2",
     "1", Tristate::YES, Tristate::YES, Tristate::NO},
    // all-negative sign vector: at most one steady state
    {"A + 2B -> 3B; 3A + B -> 4A", Shape::TWO_IRREVERSIBLE, TwoRxnCase::CASE_3A, "1",
     "1", ">=0", Tristate::NO, Tristate::NO, Tristate::NO},
    // catalyst-carrying inconsistent pair: no positive steady state, ever
    {"A + D -> B + D; 2A + D -> C + D", Shape::TWO_IRREVERSIBLE,
     TwoRxnCase::INCONSISTENT, "0", "0", "0", Tristate::NO, Tristate::NO, Tristate::NO},
    // the autocatalytic pair: inconsistent
    {"A -> B; B -> 2A", Shape::TWO_IRREVERSIBLE, TwoRxnCase::INCONSISTENT, "0", "0",
     "0", Tristate::NO, Tristate::NO, Tristate::NO},
    // three-species mixed pair: nondegenerately multistationary, stability open
    {"A -> B + C; 2A + B + C -> 3A", Shape::TWO_IRREVERSIBLE, TwoRxnCase::CASE_3C,
     ">=2", ">=2", ">=1", Tristate::YES, Tristate::YES, Tristate::UNKNOWN},
    {"A + C -> B; 2A + B -> 3A + C", Shape::TWO_IRREVERSIBLE, TwoRxnCase::CASE_3C,
     ">=2", ">=2", ">=1", Tristate::YES, Tristate::YES, Tristate::UNKNOWN},
    // reversible-plus-irreversible with no negative sign after orientation
    {"B <-> A + 2B; 3A + B -> 2A", Shape::ONE_REV_ONE_IRREV, TwoRxnCase::NOT_APPLICABLE, "1",
     ">=0", ">=0", Tristate::NO, Tristate::NO, Tristate::NO},
    // one species, reversible pair plus climber
    {"0 <-> A; 2A -> 3A", Shape::ONE_SPECIES, TwoRxnCase::NOT_APPLICABLE, "2", "2", ">=1",
     Tristate::YES, Tristate::YES, Tristate::UNKNOWN},
    // two reversible pairs, strictly interleaving on both species:
    // multistationary, nondegeneracy open
    {"3A <-> 2A + B; A + 2B <-> 3B", Shape::TWO_REVERSIBLE, TwoRxnCase::NOT_APPLICABLE, ">=2",
     ">=0", ">=0", Tristate::YES, Tristate::UNKNOWN, Tristate::UNKNOWN},
    // two reversible pairs, vectors not parallel: unique state in its shape
    {"A + B <-> C; 2A <-> B", Shape::TWO_REVERSIBLE, TwoRxnCase::NOT_APPLICABLE, "1", ">=0",
     ">=0", Tristate::NO, Tristate::NO, Tristate::NO},
    // catalogued bistable example
    {"A <-> B; 2A + B -> 3A", Shape::ONE_REV_ONE_IRREV, TwoRxnCase::NOT_APPLICABLE, ">=3",
     ">=3", ">=2", Tristate::YES, Tristate::YES, Tristate::YES},
    // catalogued non-bistable counterpart
    {"A -> B; 2A + B <-> 3A", Shape::ONE_REV_ONE_IRREV, TwoRxnCase::NOT_APPLICABLE, ">=2",
     ">=2", ">=1", Tristate::YES, Tristate::YES, Tristate::NO},
    // the 1 < m < n one-species instance: multistationary ...
    {"0 -> A; A -> 0; 2A -> 3A", Shape::ONE_SPECIES, TwoRxnCase::NOT_APPLICABLE, "2", "2",
     ">=1", Tristate::YES, Tristate::YES, Tristate::UNKNOWN},
    // ... and the descending variant: not
    {"0 -> A; A -> 0; 3A -> 2A", Shape::ONE_SPECIES, TwoRxnCase::NOT_APPLICABLE, "1", "1",
     ">=1", Tristate::NO, Tristate::NO, Tristate::NO},
};

}  // namespace

TEST_CASE("golden verdict corpus") {
    for (const Golden& g : kGolden) {
        CAPTURE(g.text);
        Verdict v = classify(parse_network(g.text));
        CHECK(v.in_scope);
        CHECK(v.shape == g.shape);
        CHECK(v.case_label == g.case_label);
        CHECK(cap_to_string(v.cap_pss) == g.pss);
        CHECK(cap_to_string(v.cap_npss) == g.npss);
        CHECK(cap_to_string(v.cap_stable) == g.stable);
        CHECK(v.multistationary == g.mss);
        CHECK(v.nondeg_multistationary == g.nondeg);
        CHECK(v.multistable == g.multistable);
    }
}

TEST_CASE("bistability attestations come only from the catalogued examples") {
    Verdict y = classify(parse_network("A <-> B; 2A + B -> 3A"));
    REQUIRE(y.attested_bistable);
    CHECK(*y.attested_bistable);
    Verdict n = classify(parse_network("A -> B; 2A + B <-> 3A"));
    REQUIRE(n.attested_bistable);
    CHECK(!*n.attested_bistable);
    Verdict other = classify(parse_network("B -> A; A + 2B -> 3B"));
    CHECK(!other.attested_bistable);
}

TEST_CASE("arrow diagram and maximal alternation") {
    // {A->0, A->2A, 2A->3A, 3A->2A, 3A->A}: directions per reactant
    // coefficient 1, 2, 3 are BOTH, RIGHT, LEFT; best alternating chain has
    // two alternations
    Network net = parse_network("A -> 0; A -> 2A; 2A -> 3A; 3A -> 2A; 3A -> A");
    OneSpeciesAnalysis an = analyze_one_species(net);
    REQUIRE(an.diagram.reactant_coeffs == std::vector<long>{1, 2, 3});
    REQUIRE(an.diagram.dirs.size() == 3);
    CHECK(an.diagram.dirs[0] == ArrowDir::BOTH);
    CHECK(an.diagram.dirs[1] == ArrowDir::RIGHT);
    CHECK(an.diagram.dirs[2] == ArrowDir::LEFT);
    CHECK(!an.diagram.all_both());
    CHECK(an.t_max == 2);
    REQUIRE(an.witness);
    CHECK(an.witness->t == 2);
    CHECK(an.witness->reactions.size() == 3);

    Network both = parse_network("A -> 0; A -> 2A");
    OneSpeciesAnalysis ab = analyze_one_species(both);
    CHECK(ab.diagram.all_both());
    CHECK(ab.t_max == 0);
}

TEST_CASE("sign vector of the ordered reaction pair") {
    // two-species zigzag, species order (B, A): lambda = 1, beta = (-1, 1)
    Network net = parse_network("B -> A; A + 2B -> 3B");
    BetaData b = beta_oriented(net, 0, 1);
    REQUIRE(b.defined);
    CHECK(b.lambda == Rat(1));
    REQUIRE(b.beta.size() == 2);
    CHECK(b.beta[0] == Int(-1));
    CHECK(b.beta[1] == Int(1));
    CHECK(b.mixed());

    // all-negative instance, species order (A, B): beta = (-2, -1)
    Network intro = parse_network("A + 2B -> 3B; 3A + B -> 4A");
    BetaData bi = beta_oriented(intro, 0, 1);
    REQUIRE(bi.defined);
    CHECK(bi.beta[0] == Int(-2));
    CHECK(bi.beta[1] == Int(-1));
    CHECK(!bi.mixed());

    // three-species mixed instance, species order (A, C, B): beta = (-1, 1, 1)
    Network r3 = parse_network("A + C -> B; 2A + B -> 3A + C");
    BetaData b3 = beta_oriented(r3, 0, 1);
    REQUIRE(b3.defined);
    CHECK(b3.beta == std::vector<Int>{Int(-1), Int(1), Int(1)});

    // non-parallel reaction vectors leave beta undefined
    Network np = parse_network("A -> B; B -> 2B");
    CHECK(!beta_oriented(np, 0, 1).defined);
}

TEST_CASE("beta's sign pattern is orientation-independent") {
    Network net = parse_network("B -> A; A + 2B -> 3B");
    BetaData fwd = beta_ordered(net, 0, 1);
    BetaData rev = beta_ordered(net, 1, 0);
    REQUIRE(fwd.defined);
    REQUIRE(rev.defined);
    REQUIRE(fwd.beta.size() == rev.beta.size());
    for (std::size_t i = 0; i < fwd.beta.size(); ++i)
        CHECK(sgn(Rat(fwd.beta[i])) == sgn(Rat(rev.beta[i])));
}

TEST_CASE("verdicts are invariant under species relabeling") {
    const char* pairs[][2] = {
        {"B -> A; A + 2B -> 3B", "Q -> Z; Z + 2Q -> 3Q"},
        {"A + B -> 0; 2A -> 3A + B", "X + Y -> 0; 2X -> 3X + Y"},
        {"3A <-> 2A + B; A + 2B <-> 3B", "3B <-> 2B + A; B + 2A <-> 3A"},
    };
    for (auto& p : pairs) {
        CAPTURE(p[0]);
        Verdict a = classify(parse_network(p[0]));
        Verdict b = classify(parse_network(p[1]));
        CHECK(a.shape == b.shape);
        CHECK(a.case_label == b.case_label);
        CHECK(a.cap_pss == b.cap_pss);
        CHECK(a.cap_npss == b.cap_npss);
        CHECK(a.cap_stable == b.cap_stable);
        CHECK(a.multistationary == b.multistationary);
        CHECK(a.nondeg_multistationary == b.nondeg_multistationary);
        CHECK(a.multistable == b.multistable);
    }
}

TEST_CASE("capacity chain: pss >= npss >= stable on every enumerated network") {
    EnumBounds bounds;
    bounds.max_molecularity = 3;
    bounds.max_species = 2;
    const EnumShape shapes[] = {EnumShape::ONE_SPECIES, EnumShape::SINGLE_REACTION,
                                EnumShape::TWO_IRREVERSIBLE, EnumShape::ONE_REV_ONE_IRREV,
                                EnumShape::TWO_REVERSIBLE};
    for (EnumShape sh : shapes)
        enumerate_networks(sh, bounds, [](const Network& n) {
        Verdict v = classify(n);
        CAPTURE(render_network(n));
        CHECK(v.cap_pss.lower() >= v.cap_npss.lower());
        CHECK(v.cap_npss.lower() >= v.cap_stable.lower());
        if (auto up = v.cap_pss.upper()) {
            CHECK(v.cap_npss.lower() <= *up);
            CHECK(v.cap_stable.lower() <= *up);
        }
        // tristates must match the capacity bounds they summarize
        if (v.cap_pss.lower() >= 2) CHECK(v.multistationary == Tristate::YES);
        if (v.cap_npss.lower() >= 2) CHECK(v.nondeg_multistationary == Tristate::YES);
        if (auto up = v.cap_pss.upper(); up && *up <= 1) CHECK(v.multistationary == Tristate::NO);
        if (v.multistationary == Tristate::NO) CHECK(v.nondeg_multistationary == Tristate::NO);
        if (v.nondeg_multistationary == Tristate::YES) CHECK(v.multistationary == Tristate::YES);
        if (v.multistable == Tristate::YES) CHECK(v.nondeg_multistationary == Tristate::YES);
        return true;
    });
}

TEST_CASE("partial verdicts for out-of-scope networks stay honest") {
    // three irreversible reactions on three species: no in-scope classifier
    Verdict v = classify(parse_network("A + B -> C; C -> 2A; 2C -> B"));
    CHECK(!v.in_scope);
    CHECK(v.shape == Shape::OUT_OF_SCOPE);
    // this particular network is inconsistent, so the partial verdict can
    // still preclude everything
    CHECK(v.cap_pss == Capacity::exact(0));
    CHECK(v.multistationary == Tristate::NO);

    // a consistent out-of-scope network must leave the upper side open
    Verdict w = classify(parse_network("A -> B; B -> C; C -> A; 2A -> A + B"));
    CHECK(!w.in_scope);
    CHECK(w.cap_pss.kind == CapKind::AT_LEAST);
    CHECK(w.multistationary == Tristate::UNKNOWN);
}

TEST_CASE("box geometry of the two-species zigzag") {
    Network net = parse_network("B -> A; A + 2B -> 3B");
    Verdict v = classify(net);
    REQUIRE(v.box);
    CHECK(v.box->box_defined);
    REQUIRE(v.box->alpha);
    CHECK(*v.box->alpha == Rat(1));  // reactant segment (1,0) -> (2,1)
    REQUIRE(v.box->gamma);
    CHECK(*v.box->gamma == Rat(-1));  // reaction vector (-1, 1) in (B, A)
    CHECK(!v.box->slope_minus_one);
    CHECK(v.box->zigzag_form != 0);

    // slope -1 degeneracy
    Network deg = parse_network("A + B -> 0; 2A -> 3A + B");
    Verdict vd = classify(deg);
    REQUIRE(vd.box);
    CHECK(vd.box->slope_minus_one);
}

TEST_CASE("string renderings of enums are stable") {
    CHECK(cap_to_string(Capacity::exact(0)) == "0");
    CHECK(cap_to_string(Capacity::at_least(2)) == ">=2");
    CHECK(cap_to_string(Capacity::infinite()) == "infinity");
    CHECK(tristate_to_string(Tristate::YES) == "yes");
    CHECK(tristate_to_string(Tristate::NO) == "no");
    CHECK(tristate_to_string(Tristate::UNKNOWN) == "unknown");
    CHECK(tristate_to_json(Tristate::YES) == nlohmann::ordered_json(true));
    CHECK(tristate_to_json(Tristate::UNKNOWN) == nlohmann::ordered_json("unknown"));
}
