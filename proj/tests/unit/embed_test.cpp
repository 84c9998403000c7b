// Embedded networks: reaction restriction, species projection, enumeration,
// and the composition property.  Projection expectations were derived
// independently (tests/oracle/oracle_core.py).
#include <doctest.h>

#include <set>
#include <string>

#include "crnms/embed.hpp"

using namespace crnms;

TEST_CASE("restricting reactions drops unused species") {
    Network net = parse_network("B <-> A + 2B; 3A + B -> 2A");
    // keep only the irreversible reaction: A and B both still appear
    auto sub = restrict_reactions(net, {2});
    REQUIRE(sub);
    CHECK(sub->n_reactions() == 1);
    CHECK(sub->n_species() == 2);

    auto none = restrict_reactions(net, {});
    CHECK(!none);
}

TEST_CASE("species projection zeroes coefficients and trims trivial reactions") {
    // {B <-> A+2B, 3A+B -> 2A}, species order (B, A)
    Network net = parse_network("B <-> A + 2B; 3A + B -> 2A");
    REQUIRE(net.species[0] == "B");

    // drop B (keep species index 1 = A): {0 -> A, A -> 0, 3A -> 2A}
    auto onlyA = embedded_network(net, {0, 1, 2}, {1});
    REQUIRE(onlyA);
    CHECK(canonical_form(*onlyA) == canonical_form(parse_network("0 -> A; A -> 0; 3A -> 2A")));

    // drop A (keep species index 0 = B): {B -> 2B, 2B -> B, B -> 0}
    auto onlyB = embedded_network(net, {0, 1, 2}, {0});
    REQUIRE(onlyB);
    CHECK(canonical_form(*onlyB) == canonical_form(parse_network("B -> 2B; 2B -> B; B -> 0")));
}

TEST_CASE("projection that trivializes every reaction yields nothing") {
    Network net = parse_network("A + D -> B + D; 2A + D -> C + D");
    // keep only the catalyst D: both reactions become D -> D
    std::size_t d = 0;
    for (std::size_t i = 0; i < net.n_species(); ++i)
        if (net.species[i] == "D") d = i;
    CHECK(!embedded_network(net, {0, 1}, {d}));
}

TEST_CASE("projection merges reactions that become equal") {
    // dropping B merges A -> 0 twice into one reaction (A is species 0)
    Network net = parse_network("A + B -> 0; A + 2B -> B");
    auto onlyA = embedded_network(net, {0, 1}, {0});
    REQUIRE(onlyA);
    CHECK(onlyA->n_reactions() == 1);
    CHECK(render_network(*onlyA) == "A -> 0");
}

TEST_CASE("enumeration lists every embedded network exactly once") {
    // species keep their identity: {B -> 0} and {A -> 0} are different
    // embedded networks even though they are isomorphic
    Network net = parse_network("B -> A; A + 2B -> 3B");
    std::vector<EmbeddedEntry> all = enumerate_embedded(net);
    std::set<std::string> keys;
    std::size_t improper = 0;
    for (const EmbeddedEntry& e : all) {
        CHECK(keys.insert(render_network(e.network)).second);
        if (!e.proper) ++improper;
    }
    CHECK(improper == 1);
    // hand listing: B->0, 0->A, B->A, 2B->3B, A->0, A+2B->3B,
    // {B->0, 2B->3B}, {0 <-> A}, and the full network
    CHECK(all.size() == 9);
    CHECK(keys.count("0 <-> A") == 1);
}

TEST_CASE("embedded networks compose") {
    Network net = parse_network("3A <-> 2A + B; A + 2B <-> 3B");
    std::vector<EmbeddedEntry> first = enumerate_embedded(net);
    std::set<std::string> keys;
    for (const EmbeddedEntry& e : first) keys.insert(canonical_form(e.network));
    // every embedded network of an embedded network appears in the original's
    // enumeration
    for (const EmbeddedEntry& e : first)
        for (const EmbeddedEntry& inner : enumerate_embedded(e.network)) {
            CAPTURE(render_network(e.network));
            CAPTURE(render_network(inner.network));
            CHECK(keys.count(canonical_form(inner.network)) == 1);
        }
}

TEST_CASE("enumeration is deterministic") {
    Network net = parse_network("B <-> A + 2B; 3A + B -> 2A");
    auto a = enumerate_embedded(net);
    auto b = enumerate_embedded(net);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(render_network(a[i].network) == render_network(b[i].network));
}
