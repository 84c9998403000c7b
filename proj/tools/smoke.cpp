#include <iostream>

#include "crnms/classify.hpp"

using namespace crnms;

int main() {
    const char* nets[] = {
        "A -> 0; A -> 2A",
        "A + B -> 0; 2A -> 3A + B",
        "0 <- A; A -> 2A; 2A <-> 3A; 3A -> A",
        "B -> A; A + 2B -> 3B",
        "A + 2B -> 3B; 3A + B -> 4A",
        "A + D -> B + D; 2A + D -> C + D",
        "A -> B; B -> 2A",
        "A -> B + C; 2A + B + C -> 3A",
        "A + C -> B; 2A + B -> 3A + C",
        "B <-> A + 2B; 3A + B -> 2A",
        "0 <-> A; 2A -> 3A",
        "3A <-> 2A + B; A + 2B <-> 3B",
        "A + B <-> C; 2A <-> B",
        "A <-> B; 2A + B -> 3A",
        "A -> B; 2A + B <-> 3A",
        "0 -> A; A -> 0; 2A -> 3A",
        "0 -> A; A -> 0; 3A -> 2A",
    };
    for (const char* text : nets) {
        std::cout << "== " << text << "\n";
        try {
            auto net = parse_network(text);
            auto v = classify(net);
            std::cout << "   shape=" << shape_to_string(v.shape)
                      << " case=" << case_to_string(v.case_label)
                      << " pss=" << cap_to_string(v.cap_pss)
                      << " npss=" << cap_to_string(v.cap_npss)
                      << " stable=" << cap_to_string(v.cap_stable)
                      << " mss=" << tristate_to_string(v.multistationary)
                      << " nondeg=" << tristate_to_string(v.nondeg_multistationary)
                      << " multistable=" << tristate_to_string(v.multistable);
            if (v.attested_bistable) std::cout << " attested_bistable=" << *v.attested_bistable;
            std::cout << "\n";
        } catch (const std::exception& e) {
            std::cout << "   EXCEPTION: " << e.what() << "\n";
        }
    }
    return 0;
}
