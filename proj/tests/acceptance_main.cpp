// Acceptance gate: nine end-to-end criteria, each with a pinned wall-clock
// budget.  Every criterion prints exactly one PASS/FAIL line; the process
// exits 0 only when every executed criterion passes within its budget.
//
//   acceptance                 run all nine criteria
//   acceptance --criterion K   run only criterion K (1..9)
//
// All randomness is seeded, so every run checks the same instances.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "crnms/classify.hpp"
#include "crnms/enumerate.hpp"
#include "crnms/minimal.hpp"
#include "crnms/network.hpp"
#include "crnms/stoich.hpp"
#include "crnms/witness.hpp"

using namespace crnms;

namespace {

// ---------------------------------------------------------------------------
// Harness
// ---------------------------------------------------------------------------

struct Check {
    bool ok = true;
    std::string detail;

    void fail(const std::string& msg) {
        if (ok) {
            ok = false;
            detail = msg;
        }
    }
    void expect(bool cond, const std::string& msg) {
        if (!cond) fail(msg);
    }
};

constexpr double kBudgetSeconds[9] = {1, 30, 60, 300, 120, 60, 180, 60, 300};

const char* kNames[9] = {
    "golden-verdicts",        "one-species-realization", "case-3c-witnesses",
    "upper-bound-soundness",  "bimolecular-sweeps",      "minimum-size",
    "cross-equivalences",     "deficiency-preclusion",   "minimal-catalogue",
};

std::string describe(const Network& net) { return render_network(net); }

// ---------------------------------------------------------------------------
// 1. Golden verdicts on the example corpus.
// ---------------------------------------------------------------------------

struct Golden {
    const char* text;
    Shape shape;
    TwoRxnCase case_label;
    const char* pss;
    const char* npss;
    const char* stable;
    Tristate mss;
    Tristate nondeg;
    Tristate multistable;
};

const Golden kGolden[] = {
    {"A -> 0; A -> 2A", Shape::ONE_SPECIES, TwoRxnCase::NOT_APPLICABLE, "infinity", "0", "0",
     Tristate::YES, Tristate::NO, Tristate::NO},
    {"A + B -> 0; 2A -> 3A + B", Shape::TWO_IRREVERSIBLE, TwoRxnCase::CASE_3B, "infinity", "1",
     ">=0", Tristate::YES, Tristate::NO, Tristate::NO},
    {"0 <- A; A -> 2A; 2A <-> 3A; 3A -> A", Shape::ONE_SPECIES, TwoRxnCase::NOT_APPLICABLE, "2",
     "2", ">=1", Tristate::YES, Tristate::YES, Tristate::UNKNOWN},
    {"B -> A; A + 2B -> 3B", Shape::TWO_IRREVERSIBLE, TwoRxnCase::CASE_3C, "2", "2", "1",
     Tristate::YES, Tristate::YES, Tristate::NO},
    {"A + 2B -> 3B; 3A + B -> 4A", Shape::TWO_IRREVERSIBLE, TwoRxnCase::CASE_3A, "1", "1", ">=0",
     Tristate::NO, Tristate::NO, Tristate::NO},
    {"A + D -> B + D; 2A + D -> C + D", Shape::TWO_IRREVERSIBLE, TwoRxnCase::INCONSISTENT, "0",
     "0", "0", Tristate::NO, Tristate::NO, Tristate::NO},
    {"A -> B; B -> 2A", Shape::TWO_IRREVERSIBLE, TwoRxnCase::INCONSISTENT, "0", "0", "0",
     Tristate::NO, Tristate::NO, Tristate::NO},
    {"A -> B + C; 2A + B + C -> 3A", Shape::TWO_IRREVERSIBLE, TwoRxnCase::CASE_3C, ">=2", ">=2",
     ">=1", Tristate::YES, Tristate::YES, Tristate::UNKNOWN},
    {"A + C -> B; 2A + B -> 3A + C", Shape::TWO_IRREVERSIBLE, TwoRxnCase::CASE_3C, ">=2", ">=2",
     ">=1", Tristate::YES, Tristate::YES, Tristate::UNKNOWN},
    {"B <-> A + 2B; 3A + B -> 2A", Shape::ONE_REV_ONE_IRREV, TwoRxnCase::NOT_APPLICABLE, "1",
     ">=0", ">=0", Tristate::NO, Tristate::NO, Tristate::NO},
    {"0 <-> A; 2A -> 3A", Shape::ONE_SPECIES, TwoRxnCase::NOT_APPLICABLE, "2", "2", ">=1",
     Tristate::YES, Tristate::YES, Tristate::UNKNOWN},
    {"3A <-> 2A + B; A + 2B <-> 3B", Shape::TWO_REVERSIBLE, TwoRxnCase::NOT_APPLICABLE, ">=2",
     ">=0", ">=0", Tristate::YES, Tristate::UNKNOWN, Tristate::UNKNOWN},
    {"A + B <-> C; 2A <-> B", Shape::TWO_REVERSIBLE, TwoRxnCase::NOT_APPLICABLE, "1", ">=0",
     ">=0", Tristate::NO, Tristate::NO, Tristate::NO},
    {"A <-> B; 2A + B -> 3A", Shape::ONE_REV_ONE_IRREV, TwoRxnCase::NOT_APPLICABLE, ">=3", ">=3",
     ">=2", Tristate::YES, Tristate::YES, Tristate::YES},
    {"A -> B; 2A + B <-> 3A", Shape::ONE_REV_ONE_IRREV, TwoRxnCase::NOT_APPLICABLE, ">=2", ">=2",
     ">=1", Tristate::YES, Tristate::YES, Tristate::NO},
    {"0 -> A; A -> 0; 2A -> 3A", Shape::ONE_SPECIES, TwoRxnCase::NOT_APPLICABLE, "2", "2", ">=1",
     Tristate::YES, Tristate::YES, Tristate::UNKNOWN},
    {"0 -> A; A -> 0; 3A -> 2A", Shape::ONE_SPECIES, TwoRxnCase::NOT_APPLICABLE, "1", "1", ">=1",
     Tristate::NO, Tristate::NO, Tristate::NO},
};

void crit1(Check& c) {
    for (const Golden& g : kGolden) {
        Verdict v = classify(parse_network(g.text));
        std::ostringstream why;
        why << "verdict mismatch on \"" << g.text << "\"";
        c.expect(v.in_scope && v.shape == g.shape && v.case_label == g.case_label &&
                     cap_to_string(v.cap_pss) == g.pss && cap_to_string(v.cap_npss) == g.npss &&
                     cap_to_string(v.cap_stable) == g.stable && v.multistationary == g.mss &&
                     v.nondeg_multistationary == g.nondeg && v.multistable == g.multistable,
                 why.str());
        if (!c.ok) return;
    }
}

// ---------------------------------------------------------------------------
// 2. Witness realization on every strictly alternating one-species network
//    with molecularity <= 6 and T <= 4.
// ---------------------------------------------------------------------------

void crit2(Check& c) {
    std::size_t total = 0;
    for (int t = 1; t <= 4 && c.ok; ++t) {
        enumerate_alternating(6, t, [&](const Network& net) {
            ++total;
            OneSpeciesAnalysis a = analyze_one_species(net);
            if (a.t_max != t || !a.witness) {
                c.fail("enumerated chain is not maximal at its own T: " + describe(net));
                return false;
            }
            const int want_stable = a.witness->leads_right ? (t + 1) / 2 : t / 2;
            try {
                Witness w = witness_one_species(net);
                CertifiedReport rep = certify(net, w);
                if (rep.n_distinct != t || rep.n_nondegenerate != t ||
                    rep.n_stable < want_stable) {
                    std::ostringstream why;
                    why << describe(net) << ": got " << rep.n_distinct << " distinct, "
                        << rep.n_nondegenerate << " nondegenerate, " << rep.n_stable
                        << " stable; wanted " << t << "/" << t << "/>=" << want_stable;
                    c.fail(why.str());
                    return false;
                }
            } catch (const std::exception& e) {
                c.fail(describe(net) + ": " + e.what());
                return false;
            }
            return true;
        });
    }
    if (c.ok && total < 6000) c.fail("alternating enumeration suspiciously small");
}

// ---------------------------------------------------------------------------
// 3. Two-reaction mixed-sign witnesses on random instances.
// ---------------------------------------------------------------------------

std::string complex_text(long a, long b) {
    std::string s;
    if (a) {
        if (a > 1) s += std::to_string(a);
        s += "A";
    }
    if (b) {
        if (!s.empty()) s += " + ";
        if (b > 1) s += std::to_string(b);
        s += "B";
    }
    return s.empty() ? "0" : s;
}

void crit3(Check& c) {
    std::mt19937_64 rng(20260819);
    std::uniform_int_distribution<long> d(0, 6);
    int hits = 0;
    long tries = 0;
    while (hits < 100 && tries < 4000000 && c.ok) {
        ++tries;
        long ya = d(rng), yb = d(rng), pa = d(rng), pb = d(rng);
        long za = d(rng), zb = d(rng), qa = d(rng), qb = d(rng);
        if (ya + yb > 6 || pa + pb > 6 || za + zb > 6 || qa + qb > 6) continue;
        std::string txt = complex_text(ya, yb) + " -> " + complex_text(pa, pb) + "; " +
                          complex_text(za, zb) + " -> " + complex_text(qa, qb);
        Network net;
        try {
            net = parse_network(txt);
        } catch (const ParseError&) {
            continue;
        }
        if (net.n_species() != 2 || net.n_reactions() != 2) continue;
        Verdict v = classify(net);
        if (v.case_label != TwoRxnCase::CASE_3C) continue;
        ++hits;
        try {
            Witness w = witness_two_reaction(net, TwoReactionGoal::TWO_NONDEG);
            CertifiedReport rep = certify(net, w);
            if (rep.n_distinct != 2 || rep.n_nondegenerate != 2 || rep.n_stable != 1) {
                std::ostringstream why;
                why << txt << ": certified " << rep.n_distinct << "/" << rep.n_nondegenerate
                    << "/" << rep.n_stable << ", wanted 2/2/1";
                c.fail(why.str());
            }
        } catch (const std::exception& e) {
            c.fail(txt + ": " + e.what());
        }
    }
    if (c.ok && hits < 100) c.fail("fewer than 100 mixed-sign instances found");
}

// ---------------------------------------------------------------------------
// 4. Upper-bound soundness under random rates and classes.
// ---------------------------------------------------------------------------

void crit4(Check& c) {
    // Pool: every enumerated network whose steady-state capacity is pinned to
    // 0 or 1 and whose class reduction applies (inconsistent networks short-
    // circuit before any reduction; consistent ones need a line-shaped
    // stoichiometric subspace).
    std::vector<Network> pool;
    const EnumShape shapes[] = {EnumShape::ONE_SPECIES, EnumShape::SINGLE_REACTION,
                                EnumShape::TWO_IRREVERSIBLE, EnumShape::ONE_REV_ONE_IRREV,
                                EnumShape::TWO_REVERSIBLE};
    for (EnumShape sh : shapes) {
        enumerate_networks(sh, {3, 3, 4}, [&](const Network& net) {
            Verdict v = classify(net);
            const bool pinned =
                v.cap_pss == Capacity::exact(0) || v.cap_pss == Capacity::exact(1);
            if (pinned &&
                (!consistency(net).feasible || stoich_report(net).dim_stoich == 1))
                pool.push_back(net);
            return true;
        });
    }
    if (pool.size() < 500) {
        c.fail("pinned-capacity pool smaller than 500");
        return;
    }
    std::mt19937_64 rng(411);
    std::shuffle(pool.begin(), pool.end(), rng);
    pool.resize(500);

    std::uniform_int_distribution<long> d(1, 24);
    auto rat = [&]() -> Rat { return Rat(d(rng)) / Rat(d(rng)); };
    for (const Network& net : pool) {
        const std::size_t s = net.n_species();
        const bool feasible = consistency(net).feasible;
        RatVec gamma;
        std::size_t pivot = 0;
        if (feasible) {
            ReducedSystem frame = reduce_along_class(net, RatVec(net.n_reactions(), Rat(1)),
                                                     RatVec(s, Rat(0)));
            gamma = frame.gamma;
            pivot = frame.pivot;
        }
        for (int k = 0; k < 200 && c.ok; ++k) {
            RatVec rates;
            for (std::size_t j = 0; j < net.n_reactions(); ++j) rates.push_back(rat());
            RatVec offsets(s, Rat(0));
            if (feasible) {
                // the class through a random positive point
                RatVec x0;
                for (std::size_t i = 0; i < s; ++i) x0.push_back(rat());
                for (std::size_t i = 0; i < s; ++i) offsets[i] = x0[i] - gamma[i] * x0[pivot];
            }
            ClassCount cnt = count_in_class(net, rates, offsets);
            if (cnt.continuum || cnt.distinct >= 2) {
                std::ostringstream why;
                why << describe(net) << ": pinned capacity but a sampled class carries "
                    << (cnt.continuum ? std::string("a continuum")
                                      : std::to_string(cnt.distinct) + " states");
                c.fail(why.str());
            }
        }
        if (!c.ok) return;
    }
}

// ---------------------------------------------------------------------------
// 5. Exhaustive bimolecular sweeps: nothing nondegenerately multistationary.
// ---------------------------------------------------------------------------

void crit5(Check& c) {
    const EnumShape shapes[] = {EnumShape::ONE_SPECIES, EnumShape::SINGLE_REACTION,
                                EnumShape::TWO_IRREVERSIBLE, EnumShape::ONE_REV_ONE_IRREV,
                                EnumShape::TWO_REVERSIBLE};
    std::size_t total = 0;
    for (EnumShape sh : shapes) {
        if (!c.ok) return;
        enumerate_networks(sh, {2, 3, 6}, [&](const Network& net) {
            ++total;
            Verdict v = classify(net);
            if (v.nondeg_multistationary == Tristate::YES) {
                c.fail("bimolecular network claims nondegenerate multistationarity: " +
                       describe(net));
                return false;
            }
            return true;
        });
    }
    if (c.ok && total < 100) c.fail("bimolecular enumeration suspiciously small");
}

// ---------------------------------------------------------------------------
// 6. Size bound r + s >= 4, and the matching construction on the full grid.
// ---------------------------------------------------------------------------

void crit6(Check& c) {
    const EnumShape shapes[] = {EnumShape::ONE_SPECIES, EnumShape::SINGLE_REACTION,
                                EnumShape::TWO_IRREVERSIBLE, EnumShape::ONE_REV_ONE_IRREV,
                                EnumShape::TWO_REVERSIBLE};
    for (EnumShape sh : shapes) {
        if (!c.ok) return;
        enumerate_networks(sh, {4, 3, 6}, [&](const Network& net) {
            Verdict v = classify(net);
            if (v.nondeg_multistationary == Tristate::YES &&
                net.n_reactions() + net.n_species() < 4) {
                c.fail("nondegenerate multistationarity below the size bound: " + describe(net));
                return false;
            }
            return true;
        });
    }
    if (!c.ok) return;
    for (long r = 2; r <= 5; ++r)
        for (long s = 1; s <= 5; ++s) {
            if (r + s < 4) continue;
            try {
                Network net = construction_rs(r, s);
                if (net.n_reactions() != static_cast<std::size_t>(r) ||
                    net.n_species() != static_cast<std::size_t>(s)) {
                    c.fail("construction has the wrong dimensions at (" + std::to_string(r) +
                           ", " + std::to_string(s) + ")");
                    return;
                }
                Witness w = s == 1 ? witness_one_species(net)
                            : r == 2
                                ? witness_two_reaction(net, TwoReactionGoal::TWO_NONDEG)
                                : witness_lifted(net, 0, 1);
                CertifiedReport rep = certify(net, w);
                if (rep.n_nondegenerate < 2) {
                    c.fail("construction not certifiably multistationary at (" +
                           std::to_string(r) + ", " + std::to_string(s) + ")");
                    return;
                }
            } catch (const std::exception& e) {
                c.fail("construction failed at (" + std::to_string(r) + ", " +
                       std::to_string(s) + "): " + e.what());
                return;
            }
        }
}

// ---------------------------------------------------------------------------
// 7. Cross-equivalences between the paired decision criteria.
// ---------------------------------------------------------------------------

int embedded_alternation(const Network& net, std::size_t species) {
    std::vector<std::size_t> all;
    for (std::size_t k = 0; k < net.n_reactions(); ++k) all.push_back(k);
    auto em = embedded_network(net, all, {species});
    if (!em) return 0;
    return analyze_one_species(*em).t_max;
}

void crit7(Check& c) {
    // Two irreversible reactions: the sign taxonomy against the geometric
    // picture, plus the exact slope identity.
    enumerate_networks(EnumShape::TWO_IRREVERSIBLE, {4, 3, 6}, [&](const Network& net) {
        Verdict v = classify(net);
        BetaData b = beta_oriented(net, 0, 1);
        const bool mss_expected = b.defined && (b.all_zero() || b.mixed());
        if ((v.multistationary == Tristate::YES) != mss_expected) {
            c.fail("sign criterion disagrees with the verdict: " + describe(net));
            return false;
        }
        if (net.n_species() == 2 && b.defined) {
            BoxGeometry g = box_geometry(net, b);
            if ((g.zigzag_form != 0) != b.mixed()) {
                c.fail("zigzag test disagrees with mixed signs: " + describe(net));
                return false;
            }
            const bool nondeg_geom = g.zigzag_form != 0 && !g.slope_minus_one;
            if ((v.nondeg_multistationary == Tristate::YES) != nondeg_geom ||
                nondeg_geom != (v.case_label == TwoRxnCase::CASE_3C)) {
                c.fail("geometric nondegeneracy disagrees: " + describe(net));
                return false;
            }
            // slope identity beta_1 / beta_0 = gamma * alpha, from scratch
            const auto& y = net.reactions[0].reactant;
            const auto& yp = net.reactions[0].product;
            const auto& yt = net.reactions[1].reactant;
            const Rat b0 = Rat(yp[0] - y[0]) * Rat(yt[0] - y[0]);
            const Rat b1 = Rat(yp[1] - y[1]) * Rat(yt[1] - y[1]);
            if (yp[0] != y[0] && yt[0] != y[0] && sgn(b0) != 0) {
                const Rat slope_rx = Rat(yp[1] - y[1]) / Rat(yp[0] - y[0]);
                const Rat slope_reac = Rat(yt[1] - y[1]) / Rat(yt[0] - y[0]);
                if (b1 / b0 != slope_rx * slope_reac) {
                    c.fail("slope identity fails: " + describe(net));
                    return false;
                }
            }
        }
        return true;
    });
    if (!c.ok) return;

    // One reversible pair plus an irreversible reaction: the three
    // multistationarity conditions must agree species by species.
    enumerate_networks(EnumShape::ONE_REV_ONE_IRREV, {4, 3, 6}, [&](const Network& net) {
        Verdict v = classify(net);
        std::size_t pa = 3, t = 3;
        for (std::size_t k = 0; k < 3; ++k) {
            if (net.reactions[k].reversible_pair) {
                if (pa == 3) pa = k;
            } else {
                t = k;
            }
        }
        const std::size_t pb = *net.reactions[pa].reversible_pair;
        BetaData b = beta_ordered(net, pa, t);
        if (!b.defined) b = beta_ordered(net, pb, t);
        bool any = false;
        if (b.defined) {
            const auto& y = net.reactions[b.first].reactant;
            const auto& yp = net.reactions[b.first].product;
            const auto& yt = net.reactions[b.second].reactant;
            const auto& ytp = net.reactions[b.second].product;
            for (std::size_t i = 0; i < net.n_species(); ++i) {
                const bool c2 = sgn(b.beta[i]) < 0;
                const bool c3 = (std::max(y[i], yp[i]) < yt[i] && yt[i] < ytp[i]) ||
                                (ytp[i] < yt[i] && yt[i] < std::min(y[i], yp[i]));
                const bool c4 = embedded_alternation(net, i) >= 2;
                if (c2 != c3 || c3 != c4) {
                    c.fail("reversible-pair conditions disagree at species " + net.species[i] +
                           ": " + describe(net));
                    return false;
                }
                any = any || c2;
            }
        }
        if ((v.multistationary == Tristate::YES) != any) {
            c.fail("reversible-pair verdict disagrees with the interleaving test: " +
                   describe(net));
            return false;
        }
        return true;
    });
    if (!c.ok) return;

    // Two reversible pairs: the interval condition against the embedded
    // triple alternation.
    enumerate_networks(EnumShape::TWO_REVERSIBLE, {4, 3, 6}, [&](const Network& net) {
        Verdict v = classify(net);
        std::vector<std::size_t> leads;
        for (std::size_t k = 0; k < 4; ++k)
            if (net.reactions[k].reversible_pair && *net.reactions[k].reversible_pair > k)
                leads.push_back(k);
        const auto& y1 = net.reactions[leads[0]].reactant;
        const auto& y1p = net.reactions[leads[0]].product;
        const auto& y2 = net.reactions[leads[1]].reactant;
        const auto& y2p = net.reactions[leads[1]].product;
        bool parallel = true;
        {
            long a0 = 0, b0 = 0;
            for (std::size_t i = 0; i < net.n_species(); ++i) {
                long u = y1p[i] - y1[i], w = y2p[i] - y2[i];
                if (a0 == 0 && b0 == 0 && (u != 0 || w != 0)) {
                    a0 = u;
                    b0 = w;
                } else if (static_cast<long long>(a0) * w != static_cast<long long>(b0) * u) {
                    parallel = false;
                }
            }
            if (a0 == 0 || b0 == 0) parallel = false;
        }
        bool any = false;
        if (parallel)
            for (std::size_t i = 0; i < net.n_species(); ++i) {
                const long i1 = std::min(y1[i], y1p[i]), a1 = std::max(y1[i], y1p[i]);
                const long i2 = std::min(y2[i], y2p[i]), a2 = std::max(y2[i], y2p[i]);
                const bool c2 =
                    (i1 < a1 && a1 < i2 && i2 < a2) || (i2 < a2 && a2 < i1 && i1 < a1);
                const bool c3 = embedded_alternation(net, i) >= 3;
                if (c2 != c3) {
                    c.fail("two-pair conditions disagree at species " + net.species[i] + ": " +
                           describe(net));
                    return false;
                }
                any = any || c2;
            }
        if ((v.multistationary == Tristate::YES) != any) {
            c.fail("two-pair verdict disagrees with the separation test: " + describe(net));
            return false;
        }
        return true;
    });
}

// ---------------------------------------------------------------------------
// 8. Deficiency-zero networks never multistationary; weakly reversible
//    deficiency-zero networks always reach one steady state.
// ---------------------------------------------------------------------------

void crit8(Check& c) {
    const EnumShape shapes[] = {EnumShape::ONE_SPECIES, EnumShape::SINGLE_REACTION,
                                EnumShape::TWO_IRREVERSIBLE, EnumShape::ONE_REV_ONE_IRREV,
                                EnumShape::TWO_REVERSIBLE};
    std::size_t zero_def = 0, wr_zero = 0;
    for (EnumShape sh : shapes) {
        if (!c.ok) return;
        enumerate_networks(sh, {4, 3, 6}, [&](const Network& net) {
            StoichReport rep = stoich_report(net);
            if (rep.deficiency != 0) return true;
            ++zero_def;
            Verdict v = classify(net);
            if (v.multistationary == Tristate::YES) {
                c.fail("deficiency-zero network classified multistationary: " + describe(net));
                return false;
            }
            if (rep.weakly_reversible) {
                ++wr_zero;
                if (!consistency(net).feasible) {
                    c.fail("weakly reversible network tests inconsistent: " + describe(net));
                    return false;
                }
                if (v.cap_pss.lower() < 1) {
                    c.fail("weakly reversible deficiency-zero network with empty capacity: " +
                           describe(net));
                    return false;
                }
            }
            return true;
        });
    }
    if (c.ok && (zero_def == 0 || wr_zero == 0))
        c.fail("deficiency-zero sweep found no instances");
}

// ---------------------------------------------------------------------------
// 9. The embedding-minimal catalogue, exhaustively at molecularity <= 4.
// ---------------------------------------------------------------------------

void crit9(Check& c) {
    const EnumShape shapes[] = {EnumShape::ONE_SPECIES, EnumShape::SINGLE_REACTION,
                                EnumShape::TWO_IRREVERSIBLE, EnumShape::ONE_REV_ONE_IRREV,
                                EnumShape::TWO_REVERSIBLE};
    std::size_t chains1 = 0, zigzags2 = 0, doubles3 = 0;
    for (EnumShape sh : shapes) {
        if (!c.ok) return;
        enumerate_networks(sh, {4, 3, 6}, [&](const Network& net) {
            Verdict v = classify(net);
            const bool cat = matches_minimal_catalogue(net);
            if (v.nondeg_multistationary == Tristate::NO) {
                if (cat) {
                    c.fail("catalogue admits a refuted network: " + describe(net));
                    return false;
                }
                return true;
            }
            MinimalityResult m;
            try {
                m = is_embedding_minimal(net);  // self-checks against the catalogue
            } catch (const std::exception& e) {
                c.fail(describe(net) + ": " + e.what());
                return false;
            }
            if (m.minimal != cat) {
                c.fail("minimality and catalogue disagree: " + describe(net));
                return false;
            }
            if (cat) {
                if (net.n_species() == 1)
                    ++chains1;
                else if (net.n_species() == 2)
                    ++zigzags2;
                else
                    ++doubles3;
            }
            return true;
        });
    }
    if (!c.ok) return;
    c.expect(chains1 > 0, "no one-species alternating chains in the catalogue");
    c.expect(zigzags2 > 0, "no two-species mixed-sign pairs in the catalogue");
    // The three-species family needs molecularity 5: both projections of the
    // reactant segment must drop by the lone-sign coordinate's rise, forcing
    // a reactant complex of size >= 5.
    c.expect(doubles3 == 0, "unexpected three-species member below molecularity 5");
    if (!c.ok) return;
    Network five = parse_network("2C -> A + B + 3C; A + B + C -> 0");
    Verdict v5 = classify(five);
    c.expect(v5.case_label == TwoRxnCase::CASE_3C &&
                 v5.nondeg_multistationary == Tristate::YES,
             "molecularity-5 representative misclassified");
    if (!c.ok) return;
    c.expect(matches_minimal_catalogue(five), "molecularity-5 representative not catalogued");
    if (!c.ok) return;
    try {
        c.expect(is_embedding_minimal(five).minimal,
                 "molecularity-5 representative not embedding-minimal");
    } catch (const std::exception& e) {
        c.fail(std::string("molecularity-5 representative: ") + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    int only = 0;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--criterion") == 0 && i + 1 < argc) {
            only = std::atoi(argv[++i]);
        } else if (std::strncmp(argv[i], "--criterion=", 12) == 0) {
            only = std::atoi(argv[i] + 12);
        }
    }
    if (only < 0 || only > 9) {
        std::fprintf(stderr, "usage: acceptance [--criterion 1..9]\n");
        return 2;
    }

    void (*crits[9])(Check&) = {crit1, crit2, crit3, crit4, crit5,
                                crit6, crit7, crit8, crit9};
    int failures = 0, ran = 0;
    for (int k = 1; k <= 9; ++k) {
        if (only && k != only) continue;
        ++ran;
        Check c;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            crits[k - 1](c);
        } catch (const std::exception& e) {
            c.fail(std::string("unhandled exception: ") + e.what());
        }
        const double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.ok && secs > kBudgetSeconds[k - 1]) {
            c.ok = false;
            std::ostringstream why;
            why << "budget " << kBudgetSeconds[k - 1] << "s exceeded";
            c.detail = why.str();
        }
        if (c.ok) {
            std::printf("[%d] %s: PASS (%.2fs)\n", k, kNames[k - 1], secs);
        } else {
            std::printf("[%d] %s: FAIL (%.2fs) -- %s\n", k, kNames[k - 1], secs,
                        c.detail.c_str());
            ++failures;
        }
        std::fflush(stdout);
    }
    if (ran > 1) std::printf("acceptance: %d/%d passed\n", ran - failures, ran);
    return failures == 0 ? 0 : 1;
}
