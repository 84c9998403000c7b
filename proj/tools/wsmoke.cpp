// Manual exercise of the witness pipeline over the worked examples.
#include <iostream>

#include "crnms/network.hpp"
#include "crnms/witness.hpp"

using namespace crnms;

static void show(const Network& net, const Witness& w) {
    CertifiedReport rep = certify(net, w);
    std::cout << "  kind=" << w.kind << " rates=[";
    for (std::size_t i = 0; i < w.rates.size(); ++i)
        std::cout << (i ? "," : "") << rat_to_string(w.rates[i]);
    std::cout << "] continuum=" << rep.continuum << " distinct=" << rep.n_distinct
              << " nondeg=" << rep.n_nondegenerate << " stable=" << rep.n_stable << "\n";
    for (const CertifiedState& st : w.states) {
        std::cout << "    t in [" << rat_to_string(st.interval.lo) << ", "
                  << rat_to_string(st.interval.hi) << "] mult=" << st.multiplicity
                  << " nondeg=" << st.nondegenerate
                  << " stable=" << (st.stable ? (*st.stable ? "yes" : "no") : "-") << " point=(";
        for (std::size_t i = 0; i < st.point_intervals.size(); ++i)
            std::cout << (i ? "," : "") << "[" << rat_to_string(st.point_intervals[i].lo) << ","
                      << rat_to_string(st.point_intervals[i].hi) << "]";
        std::cout << ")\n";
    }
}

int main() {
    {
        std::cout << "reduce {0->A, 2A->A, 3A->4A} rates (4,7,3):\n  ";
        Network net = parse_network("0->A; 2A->A; 3A->4A");
        RatPoly p = reduce_one_species(net, {Rat(4), Rat(7), Rat(3)});
        std::cout << p.to_string() << "\n";
    }
    {
        std::cout << "prescribe {0->A, 2A->A, 3A->4A} targets (1,2):\n";
        Network net = parse_network("0->A; 2A->A; 3A->4A");
        show(net, prescribe_roots_one_species(net, {Rat(1), Rat(2)}));
    }
    {
        std::cout << "prescribe {0->A, A->0} target (1):\n";
        Network net = parse_network("0->A; A->0");
        show(net, prescribe_roots_one_species(net, {Rat(1)}));
    }
    {
        std::cout << "reduce_two_reaction {B->A, A+2B->3B} rates (2,1), c_A=3:\n  ";
        Network net = parse_network("B -> A; A + 2B -> 3B");
        ReducedSystem red = reduce_two_reaction(net, {Rat(2), Rat(1)}, {Rat(0), Rat(3)});
        std::cout << "pivot=" << red.pivot << " poly=" << red.poly.to_string() << " D=("
                  << rat_to_string(red.domain.lo) << ","
                  << (red.domain.hi ? rat_to_string(*red.domain.hi) : "inf") << ")\n";
    }
    {
        Network net = parse_network("B -> A; A + 2B -> 3B");
        std::cout << "witness_two_reaction {B->A, A+2B->3B} TWO_NONDEG:\n";
        show(net, witness_two_reaction(net, TwoReactionGoal::TWO_NONDEG));
        std::cout << "witness_two_reaction DOUBLE_DEGENERATE:\n";
        show(net, witness_two_reaction(net, TwoReactionGoal::DOUBLE_DEGENERATE));
        std::cout << "witness_two_reaction NONE_IN_CLASS:\n";
        show(net, witness_two_reaction(net, TwoReactionGoal::NONE_IN_CLASS));
        std::cout << witness_to_json(net, witness_two_reaction(net, TwoReactionGoal::TWO_NONDEG)).dump()
                  << "\n";
    }
    {
        Network net = parse_network("A -> B + C; 2A + B + C -> 3A");
        std::cout << "witness_two_reaction {A->B+C, 2A+B+C->3A} TWO_NONDEG:\n";
        show(net, witness_two_reaction(net, TwoReactionGoal::TWO_NONDEG));
    }
    {
        Network net = parse_network("A -> 0; A -> 2A");
        std::cout << "witness_degenerate {0<-A->2A}:\n";
        show(net, witness_degenerate(net));
    }
    {
        Network net = parse_network("A + B -> 0; 2A -> 3A + B");
        std::cout << "witness_degenerate {A+B->0, 2A->3A+B} (slope -1, T=0 ray):\n";
        show(net, witness_degenerate(net));
    }
    {
        Network net = parse_network("A -> 0; A -> 2A; 3A -> 2A; 3A -> 4A");
        std::cout << "witness_degenerate all-BOTH {0<-A->2A, 2A<-3A->4A}:\n";
        show(net, witness_degenerate(net));
    }
    {
        Network net = parse_network("A + 2B -> 2A + 3B; 2A + B -> A");
        std::cout << "witness_degenerate {A+2B->2A+3B, 2A+B->A} (slope -1):\n";
        show(net, witness_degenerate(net));
    }
    {
        // slope -1 pair whose sign carriers exclude the pivot species
        Network net = parse_network("A + B + 2C -> 2A + 2B + 3C; A + 2B + C -> B");
        std::cout << "witness_degenerate 3-species slope -1, pivot outside the ray:\n";
        show(net, witness_degenerate(net));
    }
    {
        Network net = parse_network("A <-> B; 2A + B -> 3A");
        std::cout << "witness_single {A<->B, 2A+B->3A}:\n";
        show(net, witness_single(net));
        std::cout << "witness_multistationary_search (bistable example):\n";
        show(net, witness_multistationary_search(net));
    }
    {
        Network net = parse_network("A -> 2A");
        std::cout << "witness_none_possible {A->2A}:\n";
        show(net, witness_none_possible(net));
        std::cout << witness_to_json(net, witness_none_possible(net)).dump() << "\n";
    }
    std::cout << "all witness smoke checks passed\n";
    return 0;
}
