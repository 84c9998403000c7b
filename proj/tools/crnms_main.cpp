// crnms: classify small mass-action networks, construct certified witnesses,
// sweep catalogues, decide embedding-minimality, and render box diagrams.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "crnms/classify.hpp"
#include "crnms/enumerate.hpp"
#include "crnms/minimal.hpp"
#include "crnms/network.hpp"
#include "crnms/svg.hpp"
#include "crnms/witness.hpp"

namespace {

using crnms::Network;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitScope = 2;
constexpr int kExitWitness = 3;
constexpr int kExitInternal = 4;

struct NetInput {
    std::string file;
    std::string inline_net;
};

void add_net_input(CLI::App* cmd, NetInput& in) {
    cmd->add_option("file", in.file, "network file (text format)");
    cmd->add_option("--net", in.inline_net, "inline network, ';' separates reactions");
}

// Reads and parses the network; prints to stderr and exits on failure.
Network load_network(const NetInput& in) {
    if (in.file.empty() == in.inline_net.empty()) {
        std::cerr << "error: provide exactly one of <file> or --net\n";
        std::exit(kExitParse);
    }
    std::string text = in.inline_net;
    if (!in.file.empty()) {
        std::ifstream f(in.file);
        if (!f) {
            std::cerr << "error: cannot open " << in.file << "\n";
            std::exit(kExitParse);
        }
        std::stringstream ss;
        ss << f.rdbuf();
        text = ss.str();
    }
    try {
        return crnms::parse_network(text);
    } catch (const crnms::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        std::exit(kExitParse);
    }
}

std::string one_line(const Network& net) {
    std::string s = crnms::render_network(net);
    for (char& c : s)
        if (c == '\n') c = ';';
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        out += s[i];
        if (s[i] == ';') out += ' ';
    }
    if (!out.empty() && out.back() == ' ') out.pop_back();
    if (!out.empty() && out.back() == ';') out.pop_back();
    return out;
}

void print_verdict_human(const crnms::Verdict& v) {
    using crnms::Tristate;
    std::cout << "shape:            " << crnms::shape_to_string(v.shape)
              << (v.in_scope ? "" : "  (out of scope: partial verdict)") << "\n";
    if (v.case_label != crnms::TwoRxnCase::NOT_APPLICABLE)
        std::cout << "case:             " << crnms::case_to_string(v.case_label) << "\n";
    std::cout << "cap_pss:          " << crnms::cap_to_string(v.cap_pss) << "\n";
    std::cout << "cap_npss:         " << crnms::cap_to_string(v.cap_npss) << "\n";
    std::cout << "cap_stable:       " << crnms::cap_to_string(v.cap_stable) << "\n";
    std::cout << "multistationary:  " << crnms::tristate_to_string(v.multistationary) << "\n";
    std::cout << "nondegenerately:  " << crnms::tristate_to_string(v.nondeg_multistationary)
              << "\n";
    std::cout << "multistable:      " << crnms::tristate_to_string(v.multistable) << "\n";
    if (v.attested_bistable)
        std::cout << "attested-bistable: " << (*v.attested_bistable ? "yes" : "no") << "\n";
    for (const crnms::Justification& j : v.justifications)
        std::cout << "justified-by:     " << j.criterion << "\n";
}

int cmd_classify(const NetInput& in, bool json) {
    Network net = load_network(in);
    crnms::Verdict v = crnms::classify(net);
    if (json)
        std::cout << crnms::verdict_to_json(v).dump(2) << "\n";
    else
        print_verdict_human(v);
    return v.in_scope ? kExitOk : kExitScope;
}

void print_witness_human(const Network& net, const crnms::Witness& w,
                         const crnms::CertifiedReport& rep) {
    std::cout << "kind:    " << w.kind << "\n";
    if (!w.rates.empty()) {
        std::cout << "rates:\n";
        for (std::size_t k = 0; k < w.rates.size(); ++k)
            std::cout << "  k" << k << " = " << crnms::rat_to_string(w.rates[k]) << "\n";
    }
    if (!w.offsets.empty()) {
        std::cout << "class offsets:\n";
        for (std::size_t i = 0; i < w.offsets.size(); ++i)
            std::cout << "  c_" << net.species[i] << " = " << crnms::rat_to_string(w.offsets[i])
                      << "\n";
    }
    if (!w.obstruction_u.empty()) {
        std::cout << "obstruction functional u (u . Gamma >= 0, nonzero):\n";
        for (std::size_t i = 0; i < w.obstruction_u.size(); ++i)
            std::cout << "  u_" << net.species[i] << " = "
                      << crnms::rat_to_string(w.obstruction_u[i]) << "\n";
    }
    if (w.continuum) std::cout << "steady states: a positive continuum (every class point)\n";
    for (std::size_t i = 0; i < w.states.size(); ++i) {
        const crnms::CertifiedState& st = w.states[i];
        std::cout << "state " << i + 1 << ": x_" << net.species[w.reduced.pivot] << " in ("
                  << crnms::rat_to_string(st.interval.lo) << ", "
                  << crnms::rat_to_string(st.interval.hi) << ")"
                  << (st.exact ? " [exact]" : "") << ", multiplicity " << st.multiplicity
                  << (st.nondegenerate ? ", nondegenerate" : ", degenerate");
        if (st.stable) std::cout << (*st.stable ? ", stable" : ", unstable");
        std::cout << "\n";
    }
    std::cout << "certified: " << (rep.continuum ? "continuum" : "")
              << (rep.continuum ? "" : std::to_string(rep.n_distinct) + " distinct, " +
                                           std::to_string(rep.n_nondegenerate) +
                                           " nondegenerate, " + std::to_string(rep.n_stable) +
                                           " stable")
              << "\n";
}

int cmd_witness(const NetInput& in, bool json, std::optional<long> count,
                const std::string& roots) {
    Network net = load_network(in);
    crnms::Verdict v = crnms::classify(net);
    try {
        crnms::Witness w;
        if (!roots.empty()) {
            std::vector<crnms::Rat> targets;
            std::stringstream ss(roots);
            std::string tok;
            while (std::getline(ss, tok, ',')) {
                try {
                    targets.push_back(crnms::rat_from_string(tok));
                } catch (const std::exception& e) {
                    std::cerr << "parse error in --roots: " << e.what() << "\n";
                    return kExitParse;
                }
            }
            w = crnms::prescribe_roots_one_species(net, targets);
        } else if (count && *count == 0) {
            w = v.cap_pss == crnms::Capacity::exact(0)
                    ? crnms::witness_none_possible(net)
                    : crnms::witness_two_reaction(net, crnms::TwoReactionGoal::NONE_IN_CLASS);
        } else if (count && *count == 1) {
            w = crnms::witness_single(net);
        } else {
            if (!v.in_scope) {
                std::cerr << "error: witness routing needs an in-scope network\n";
                return kExitScope;
            }
            if (v.cap_pss.kind == crnms::CapKind::INFINITE) {
                w = crnms::witness_degenerate(net);
            } else if (v.cap_pss == crnms::Capacity::exact(0)) {
                w = crnms::witness_none_possible(net);
            } else if (v.nondeg_multistationary == crnms::Tristate::YES) {
                if (v.shape == crnms::Shape::ONE_SPECIES)
                    w = crnms::witness_one_species(net);
                else if (v.shape == crnms::Shape::TWO_IRREVERSIBLE)
                    w = crnms::witness_two_reaction(net, crnms::TwoReactionGoal::TWO_NONDEG);
                else
                    w = crnms::witness_multistationary_search(net);
            } else if (v.multistationary == crnms::Tristate::YES) {
                w = crnms::witness_multistationary_search(net);
            } else {
                w = crnms::witness_single(net);
            }
            if (count && !w.continuum && static_cast<long>(w.states.size()) < *count)
                throw crnms::WitnessFailure("constructed witness realizes " +
                                            std::to_string(w.states.size()) +
                                            " steady states, fewer than the requested " +
                                            std::to_string(*count));
        }
        crnms::CertifiedReport rep = crnms::certify(net, w);
        if (json) {
            ordered_json doc;
            doc["witness"] = crnms::witness_to_json(net, w);
            doc["certified"] =
                rep.continuum
                    ? ordered_json{{"continuum", true}}
                    : ordered_json{{"distinct", rep.n_distinct},
                                   {"nondegenerate", rep.n_nondegenerate},
                                   {"stable", rep.n_stable}};
            std::cout << doc.dump(2) << "\n";
        } else {
            print_witness_human(net, w, rep);
        }
        return kExitOk;
    } catch (const crnms::WitnessFailure& e) {
        std::cerr << "witness failure: " << e.what() << "\n";
        return kExitWitness;
    } catch (const std::invalid_argument& e) {
        std::cerr << "witness failure: " << e.what() << "\n";
        return kExitWitness;
    }
}

int cmd_enumerate(const std::string& shape_name, long mol, std::size_t max_reactions,
                  bool json) {
    crnms::EnumShape shape;
    if (shape_name == "one-species")
        shape = crnms::EnumShape::ONE_SPECIES;
    else if (shape_name == "two-irrev")
        shape = crnms::EnumShape::TWO_IRREVERSIBLE;
    else if (shape_name == "rev-irrev")
        shape = crnms::EnumShape::ONE_REV_ONE_IRREV;
    else if (shape_name == "two-rev")
        shape = crnms::EnumShape::TWO_REVERSIBLE;
    else {
        std::cerr << "error: --shape must be one-species|two-irrev|rev-irrev|two-rev\n";
        return kExitParse;
    }
    crnms::EnumBounds bounds;
    bounds.max_molecularity = mol;
    bounds.max_reactions = max_reactions;

    long total = 0, mss = 0, nondeg = 0, undecided = 0;
    ordered_json items = ordered_json::array();
    crnms::enumerate_networks(shape, bounds, [&](const Network& n) {
        crnms::Verdict v = crnms::classify(n);
        ++total;
        if (v.multistationary == crnms::Tristate::YES) ++mss;
        if (v.nondeg_multistationary == crnms::Tristate::YES) ++nondeg;
        if (v.multistationary == crnms::Tristate::UNKNOWN ||
            v.nondeg_multistationary == crnms::Tristate::UNKNOWN)
            ++undecided;
        if (json) {
            ordered_json row;
            row["network"] = one_line(n);
            row["verdict"] = crnms::verdict_to_json(v);
            items.push_back(std::move(row));
        } else {
            std::cout << one_line(n) << "\n  -> "
                      << (v.case_label != crnms::TwoRxnCase::NOT_APPLICABLE
                              ? "case " + crnms::case_to_string(v.case_label) + ", "
                              : "")
                      << "multistationary " << crnms::tristate_to_string(v.multistationary)
                      << ", nondegenerately "
                      << crnms::tristate_to_string(v.nondeg_multistationary) << "\n";
        }
        return true;
    });
    if (json) {
        ordered_json doc;
        doc["networks"] = std::move(items);
        doc["summary"] = {{"total", total},
                          {"multistationary", mss},
                          {"nondegenerately_multistationary", nondeg},
                          {"undecided", undecided}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "summary: " << total << " networks, " << mss << " multistationary, "
                  << nondeg << " nondegenerately multistationary, " << undecided
                  << " undecided\n";
    }
    return kExitOk;
}

int cmd_minimal(const NetInput& in, bool json) {
    Network net = load_network(in);
    try {
        crnms::MinimalityResult r = crnms::is_embedding_minimal(net);
        if (json) {
            ordered_json doc;
            doc["minimal"] = r.minimal;
            doc["blocker"] =
                r.blocker ? ordered_json::parse(crnms::network_to_json(r.blocker->network))
                          : ordered_json(nullptr);
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << "embedding-minimal: " << (r.minimal ? "true" : "false") << "\n";
            if (r.blocker)
                std::cout << "blocked by embedded network: " << one_line(r.blocker->network)
                          << "\n";
        }
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitScope;
    }
}

int cmd_boxdiagram(const NetInput& in, const std::string& out_path) {
    Network net = load_network(in);
    try {
        std::string svg = crnms::box_diagram_svg(net);
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitParse;
        }
        f << svg;
        return kExitOk;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitScope;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crnms: multistationarity analysis for small mass-action networks"};
    app.require_subcommand(1);

    NetInput cl_in;
    bool cl_json = false;
    CLI::App* cl = app.add_subcommand("classify", "decide steady-state capacities");
    add_net_input(cl, cl_in);
    cl->add_flag("--json", cl_json, "emit the verdict as JSON");

    NetInput wi_in;
    bool wi_json = false;
    std::optional<long> wi_count;
    std::string wi_roots;
    CLI::App* wi = app.add_subcommand("witness", "construct certified rate constants");
    add_net_input(wi, wi_in);
    wi->add_flag("--json", wi_json, "emit the witness as JSON");
    wi->add_option("--count", wi_count, "number of steady states to realize (0, 1, or >= 2)");
    wi->add_option("--roots", wi_roots,
                   "comma-separated positive rationals to prescribe as steady states "
                   "(one-species strictly alternating networks)");

    std::string en_shape;
    long en_mol = 2;
    std::size_t en_reactions = 4;
    bool en_json = false;
    CLI::App* en = app.add_subcommand("enumerate", "stream a catalogue with verdicts");
    en->add_option("--shape", en_shape, "one-species|two-irrev|rev-irrev|two-rev")->required();
    en->add_option("--max-molecularity", en_mol, "largest complex size")->required();
    en->add_option("--max-reactions", en_reactions, "reaction cap (one-species shape)");
    en->add_flag("--json", en_json, "emit the catalogue as JSON");

    NetInput mi_in;
    bool mi_json = false;
    CLI::App* mi = app.add_subcommand("minimal", "decide embedding-minimality");
    add_net_input(mi, mi_in);
    mi->add_flag("--json", mi_json, "emit the result as JSON");

    NetInput bx_in;
    std::string bx_svg;
    CLI::App* bx = app.add_subcommand("boxdiagram", "render the reactant box diagram");
    add_net_input(bx, bx_in);
    bx->add_option("--svg", bx_svg, "output SVG path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cl->parsed()) return cmd_classify(cl_in, cl_json);
        if (wi->parsed()) return cmd_witness(wi_in, wi_json, wi_count, wi_roots);
        if (en->parsed()) return cmd_enumerate(en_shape, en_mol, en_reactions, en_json);
        if (mi->parsed()) return cmd_minimal(mi_in, mi_json);
        if (bx->parsed()) return cmd_boxdiagram(bx_in, bx_svg);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitParse;
}
