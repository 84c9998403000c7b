// Stoichiometric invariants and the consistency certificate.  Expected
// numbers were derived independently (tests/oracle/oracle_core.py).
#include <doctest.h>

#include "crnms/stoich.hpp"

using namespace crnms;

TEST_CASE("invariants of a one-species three-reaction network") {
    // {0 -> A, A -> 0, 2A -> 3A}: complexes {0, A, 2A, 3A}, linkage classes
    // {0, A} and {2A, 3A}, dim 1, deficiency 4 - 2 - 1 = 1
    StoichReport r = stoich_report(parse_network("0 -> A; A -> 0; 2A -> 3A"));
    CHECK(r.n_complexes() == 4);
    CHECK(r.n_linkage() == 2);
    CHECK(r.dim_stoich == 1);
    CHECK(r.deficiency == 1);
    CHECK(r.n_terminal_strong == 2);
    CHECK(!r.weakly_reversible);
}

TEST_CASE("invariants of a reversible deficiency-zero network") {
    // {A+B <-> C, 2A <-> B}: 4 complexes, 2 linkage classes, dim 2, deficiency 0
    StoichReport r = stoich_report(parse_network("A + B <-> C; 2A <-> B"));
    CHECK(r.n_complexes() == 4);
    CHECK(r.n_linkage() == 2);
    CHECK(r.dim_stoich == 2);
    CHECK(r.deficiency == 0);
    CHECK(r.weakly_reversible);
    CHECK(r.single_terminal_per_linkage);
}

TEST_CASE("weak reversibility needs every component strongly connected") {
    CHECK(!stoich_report(parse_network("A -> B; B -> C")).weakly_reversible);
    CHECK(stoich_report(parse_network("A -> B; B -> C; C -> A")).weakly_reversible);
}

TEST_CASE("deficiency decomposes per linkage class when it does") {
    StoichReport r = stoich_report(parse_network("0 -> A; A -> 0; 2A -> 3A"));
    REQUIRE(r.linkage_deficiencies.size() == 2);
    CHECK(r.deficiency_splits == (r.linkage_deficiencies[0] + r.linkage_deficiencies[1] ==
                                  r.deficiency));
}

TEST_CASE("consistency produces a positive dependency or a separating functional") {
    PositiveKernel ok = consistency(parse_network("A <-> B"));
    REQUIRE(ok.feasible);
    REQUIRE(ok.lambda.size() == 2);
    // verify Gamma lambda = 0 with lambda strictly positive
    Network net = parse_network("A <-> B");
    for (std::size_t i = 0; i < net.n_species(); ++i) {
        Rat acc = 0;
        for (std::size_t k = 0; k < net.n_reactions(); ++k) {
            CHECK(sgn(ok.lambda[k]) > 0);
            acc += ok.lambda[k] * Rat(net.change(k, i));
        }
        CHECK(acc == Rat(0));
    }

    // the autocatalytic pair admits no positive dependency
    Network bad = parse_network("A -> B; B -> 2A");
    PositiveKernel no = consistency(bad);
    REQUIRE(!no.feasible);
    REQUIRE(no.u.size() == bad.n_species());
    bool strict = false;
    for (std::size_t k = 0; k < bad.n_reactions(); ++k) {
        Rat wk = 0;
        for (std::size_t i = 0; i < bad.n_species(); ++i)
            wk += no.u[i] * Rat(bad.change(k, i));
        CHECK(sgn(wk) >= 0);
        if (sgn(wk) > 0) strict = true;
    }
    CHECK(strict);
}

TEST_CASE("consistency certificates on the catalyst-carrying inconsistent pair") {
    Network net = parse_network("A + D -> B + D; 2A + D -> C + D");
    PositiveKernel no = consistency(net);
    CHECK(!no.feasible);
}

TEST_CASE("exactly one certificate branch is populated") {
    PositiveKernel a = consistency(parse_network("A <-> B"));
    CHECK(a.feasible);
    CHECK(a.u.empty());
    PositiveKernel b = consistency(parse_network("A -> 2A"));
    CHECK(!b.feasible);
    CHECK(b.lambda.empty());
}
