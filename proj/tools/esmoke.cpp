// Exploratory harness for the enumerator, the (r,s) construction, and the
// minimality decision; asserts hand-derived counts and outcomes.
#include <cassert>
#include <cstdio>

#include "crnms/classify.hpp"
#include "crnms/enumerate.hpp"
#include "crnms/minimal.hpp"
#include "crnms/witness.hpp"

using namespace crnms;

static std::size_t count_shape(EnumShape sh, long mol, std::size_t maxs, std::size_t maxr = 4) {
    EnumBounds b;
    b.max_molecularity = mol;
    b.max_species = maxs;
    b.max_reactions = maxr;
    return enumerate_networks(sh, b, [](const Network&) { return true; });
}

int main() {
    // --- enumerator counts at micro bounds, verified by hand listing ---
    std::printf("single-reaction mol<=1 s<=2: %zu\n", count_shape(EnumShape::SINGLE_REACTION, 1, 2));
    std::printf("two-irrev       mol<=1 s<=2: %zu\n", count_shape(EnumShape::TWO_IRREVERSIBLE, 1, 2));
    std::printf("one-species     mol<=2 r<=6: %zu\n", count_shape(EnumShape::ONE_SPECIES, 2, 1, 6));
    std::printf("rev-irrev       mol<=1 s<=2: %zu\n", count_shape(EnumShape::ONE_REV_ONE_IRREV, 1, 2));
    std::printf("two-rev         mol<=1 s<=2: %zu\n", count_shape(EnumShape::TWO_REVERSIBLE, 1, 2));
    std::printf("two-irrev       mol<=2 s<=3: %zu\n", count_shape(EnumShape::TWO_IRREVERSIBLE, 2, 3));

    // Every enumerated network round-trips through its own text format.
    EnumBounds rb;
    rb.max_molecularity = 2;
    rb.max_species = 2;
    std::size_t roundtrips = 0;
    enumerate_networks(EnumShape::TWO_IRREVERSIBLE, rb, [&](const Network& n) {
        Network re = parse_network(render_network(n));
        assert(canonical_form(re) == canonical_form(n));
        ++roundtrips;
        return true;
    });
    std::printf("round-trips ok: %zu\n", roundtrips);

    // --- alternating-chain generator ---
    std::size_t alt22 = enumerate_alternating(2, 2, [](const Network&) { return true; });
    std::size_t alt32 = enumerate_alternating(3, 2, [](const Network&) { return true; });
    std::printf("alternating t=2 mol<=2: %zu (expect 0)\n", alt22);
    std::printf("alternating t=2 mol<=3: %zu (expect 6)\n", alt32);
    assert(alt22 == 0 && alt32 == 6);
    enumerate_alternating(6, 3, [](const Network& n) {
        Verdict v = classify(n);
        assert(v.cap_npss == Capacity::exact(3));
        return true;
    });

    // --- (r,s) construction grid with witness certification ---
    for (long r = 2; r <= 5; ++r)
        for (long s = 1; s <= 5; ++s) {
            if (r + s < 4) continue;
            Network net = construction_rs(r, s);
            assert(net.n_reactions() == static_cast<std::size_t>(r));
            assert(net.n_species() == static_cast<std::size_t>(s));
            Witness w;
            if (s == 1)
                w = witness_one_species(net);
            else if (r == 2)
                w = witness_two_reaction(net, TwoReactionGoal::TWO_NONDEG);
            else
                w = witness_lifted(net, 0, 1);
            CertifiedReport rep = certify(net, w);
            assert(rep.n_nondegenerate >= 2);
            Verdict v = classify(net);
            if (v.in_scope) assert(v.nondeg_multistationary == Tristate::YES);
            std::printf("construction r=%ld s=%ld: %d nondeg, %d stable [%s]\n", r, s,
                        rep.n_nondegenerate, rep.n_stable, render_network(net).c_str());
        }

    // --- minimality: the three pinned outcomes plus the 3-species family ---
    {
        MinimalityResult m1 = is_embedding_minimal(parse_network("0 <- A; 2A -> 3A; 3A -> 2A"));
        assert(m1.minimal && !m1.blocker);
        std::printf("minimal #1: true\n");

        MinimalityResult m2 = is_embedding_minimal(parse_network("3A <-> 2A+B; A+2B <-> 3B"));
        assert(!m2.minimal && m2.blocker);
        std::printf("minimal #2: false, blocker = %s\n",
                    render_network(m2.blocker->network).c_str());

        MinimalityResult m3 = is_embedding_minimal(parse_network("B -> A; A+2B -> 3B"));
        assert(m3.minimal);
        std::printf("minimal #3: true\n");

        Network fam_c = parse_network("2C -> A+B+3C; A+B+C -> 0");
        Verdict vc = classify(fam_c);
        assert(vc.case_label == TwoRxnCase::CASE_3C &&
               vc.nondeg_multistationary == Tristate::YES);
        MinimalityResult m4 = is_embedding_minimal(fam_c);
        assert(m4.minimal && matches_minimal_catalogue(fam_c));
        std::printf("minimal #4 (3-species family): true\n");

        // Not minimal: a 3-species two-reaction net with one non-degenerate
        // projection; dropping the third species must block it.
        Network loose = parse_network("A -> B+C; 2A+B+C -> 3A");
        MinimalityResult m5 = is_embedding_minimal(loose);
        assert(!m5.minimal && m5.blocker);
        std::printf("minimal #5: false, blocker = %s\n",
                    render_network(m5.blocker->network).c_str());
    }

    std::printf("esmoke: all assertions passed\n");
    return 0;
}
