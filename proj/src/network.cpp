#include "crnms/network.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "json.hpp"

namespace crnms {

long Network::max_molecularity() const {
    long m = 0;
    for (const auto& rx : reactions) {
        long a = 0, b = 0;
        for (std::size_t i = 0; i < species.size(); ++i) {
            a += rx.reactant[i];
            b += rx.product[i];
        }
        m = std::max({m, a, b});
    }
    return m;
}

std::size_t Network::n_reversible_pairs() const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < reactions.size(); ++i)
        if (reactions[i].reversible_pair && *reactions[i].reversible_pair > i) ++n;
    return n;
}

std::string ParseError::format(std::size_t line, std::size_t col, const std::string& msg) {
    std::ostringstream out;
    if (line > 0) {
        out << "line " << line << ", col " << col << ": ";
    }
    out << msg;
    return out.str();
}

namespace {

struct Cursor {
    const std::string& text;
    std::size_t pos = 0;
    std::size_t line = 1;
    std::size_t col = 1;

    bool done() const { return pos >= text.size(); }
    char peek() const { return text[pos]; }
    void advance() {
        if (text[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_blanks() {
        while (!done() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) advance();
    }
};

/// A complex as (species name -> coefficient), in textual appearance order.
using RawComplex = std::vector<std::pair<std::string, long>>;

RawComplex parse_complex(Cursor& c) {
    RawComplex terms;
    while (true) {
        c.skip_blanks();
        std::size_t tl = c.line, tc = c.col;
        if (c.done()) throw ParseError(tl, tc, "expected a complex");
        // "0" denotes the zero complex, only alone.
        if (c.peek() == '0' && terms.empty()) {
            // Lookahead: must not start a number-with-species like "0A".
            std::size_t save = c.pos;
            c.advance();
            if (!c.done() && (std::isalnum(static_cast<unsigned char>(c.peek())) != 0))
                throw ParseError(tl, tc, "coefficient must be a positive integer");
            (void)save;
            return terms;
        }
        long coeff = 1;
        if (std::isdigit(static_cast<unsigned char>(c.peek())) != 0) {
            long v = 0;
            bool overflow = false;
            while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek())) != 0) {
                v = v * 10 + (c.peek() - '0');
                if (v > 1000000) overflow = true;
                c.advance();
            }
            if (overflow) throw ParseError(tl, tc, "coefficient too large");
            if (v == 0) throw ParseError(tl, tc, "coefficient must be a positive integer");
            coeff = v;
            c.skip_blanks();
            tl = c.line;
            tc = c.col;
        }
        if (c.done() || (std::isalpha(static_cast<unsigned char>(c.peek())) == 0))
            throw ParseError(tl, tc, "expected a species identifier");
        std::string name;
        while (!c.done() && (std::isalnum(static_cast<unsigned char>(c.peek())) != 0 ||
                             c.peek() == '_')) {
            name += c.peek();
            c.advance();
        }
        terms.emplace_back(std::move(name), coeff);
        c.skip_blanks();
        if (!c.done() && c.peek() == '+') {
            c.advance();
            continue;
        }
        return terms;
    }
}

struct RawReaction {
    RawComplex lhs, rhs;
    int arrow;  // 0: ->, 1: <-, 2: <->
    std::size_t line, col;
};

}  // namespace

Network parse_network(const std::string& text) {
    Cursor c{text};
    std::vector<RawReaction> raw;
    std::vector<std::string> species;
    std::map<std::string, std::size_t> index;

    auto register_species = [&](const RawComplex& cx) {
        for (const auto& [name, coeff] : cx) {
            (void)coeff;
            if (index.emplace(name, species.size()).second) species.push_back(name);
        }
    };

    while (true) {
        c.skip_blanks();
        if (c.done()) break;
        char ch = c.peek();
        if (ch == '\n' || ch == ';') {
            c.advance();
            continue;
        }
        if (ch == '#') {
            while (!c.done() && c.peek() != '\n') c.advance();
            continue;
        }
        RawReaction r;
        r.line = c.line;
        r.col = c.col;
        r.lhs = parse_complex(c);
        c.skip_blanks();
        std::size_t al = c.line, ac = c.col;
        if (c.done()) throw ParseError(al, ac, "expected an arrow (->, <-, <->)");
        if (c.peek() == '-') {
            c.advance();
            if (c.done() || c.peek() != '>') throw ParseError(al, ac, "expected an arrow (->, <-, <->)");
            c.advance();
            r.arrow = 0;
        } else if (c.peek() == '<') {
            c.advance();
            if (!c.done() && c.peek() == '-') {
                c.advance();
                if (!c.done() && c.peek() == '>') {
                    c.advance();
                    r.arrow = 2;
                } else {
                    r.arrow = 1;
                }
            } else {
                throw ParseError(al, ac, "expected an arrow (->, <-, <->)");
            }
        } else {
            throw ParseError(al, ac, "expected an arrow (->, <-, <->)");
        }
        r.rhs = parse_complex(c);
        c.skip_blanks();
        if (!c.done() && c.peek() != '\n' && c.peek() != ';' && c.peek() != '#')
            throw ParseError(c.line, c.col, "unexpected trailing input after reaction");
        register_species(r.lhs);
        register_species(r.rhs);
        raw.push_back(std::move(r));
    }
    if (raw.empty()) throw ParseError(0, 0, "input contains no reactions");

    Network net;
    net.species = species;
    auto to_vec = [&](const RawComplex& cx) {
        std::vector<long> v(species.size(), 0);
        for (const auto& [name, coeff] : cx) v[index.at(name)] += coeff;
        return v;
    };

    auto add_reaction = [&](std::vector<long> reac, std::vector<long> prod, std::size_t line,
                            std::size_t col) {
        if (reac == prod)
            throw ParseError(line, col, "trivial reaction: reactant equals product");
        for (const auto& rx : net.reactions)
            if (rx.reactant == reac && rx.product == prod)
                throw ParseError(line, col, "duplicate reaction");
        net.reactions.push_back({std::move(reac), std::move(prod), std::nullopt});
    };

    for (const auto& r : raw) {
        auto lhs = to_vec(r.lhs), rhs = to_vec(r.rhs);
        switch (r.arrow) {
            case 0:
                add_reaction(lhs, rhs, r.line, r.col);
                break;
            case 1:  // "<-" normalizes to the forward direction
                add_reaction(rhs, lhs, r.line, r.col);
                break;
            case 2:
                add_reaction(lhs, rhs, r.line, r.col);
                add_reaction(rhs, lhs, r.line, r.col);
                break;
        }
    }

    // Mark mutual reverses as reversible pairs, however they were written.
    for (std::size_t i = 0; i < net.reactions.size(); ++i)
        for (std::size_t j = i + 1; j < net.reactions.size(); ++j)
            if (net.reactions[i].reactant == net.reactions[j].product &&
                net.reactions[i].product == net.reactions[j].reactant) {
                net.reactions[i].reversible_pair = j;
                net.reactions[j].reversible_pair = i;
            }
    return net;
}

namespace {

std::string complex_to_text(const Network& net, const std::vector<long>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        if (!out.empty()) out += " + ";
        if (v[i] != 1) out += std::to_string(v[i]);
        out += net.species[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace

std::string render_network(const Network& net) {
    std::string out;
    for (std::size_t i = 0; i < net.reactions.size(); ++i) {
        const auto& rx = net.reactions[i];
        if (rx.reversible_pair && *rx.reversible_pair < i) continue;  // printed already
        if (!out.empty()) out += "\n";
        out += complex_to_text(net, rx.reactant);
        out += rx.reversible_pair ? " <-> " : " -> ";
        out += complex_to_text(net, rx.product);
    }
    return out;
}

std::string network_to_json(const Network& net) {
    nlohmann::ordered_json j;
    j["species"] = net.species;
    j["reactions"] = nlohmann::ordered_json::array();
    for (const auto& rx : net.reactions) {
        nlohmann::ordered_json r;
        nlohmann::ordered_json reac = nlohmann::ordered_json::object();
        nlohmann::ordered_json prod = nlohmann::ordered_json::object();
        for (std::size_t i = 0; i < net.species.size(); ++i) {
            if (rx.reactant[i] != 0) reac[net.species[i]] = rx.reactant[i];
            if (rx.product[i] != 0) prod[net.species[i]] = rx.product[i];
        }
        r["reactant"] = reac;
        r["product"] = prod;
        if (rx.reversible_pair)
            r["reversible_pair"] = *rx.reversible_pair;
        else
            r["reversible_pair"] = nullptr;
        j["reactions"].push_back(r);
    }
    return j.dump();
}

Network network_from_json(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, 0, std::string("invalid JSON: ") + e.what());
    }
    Network net;
    try {
        net.species = j.at("species").get<std::vector<std::string>>();
        std::map<std::string, std::size_t> index;
        for (std::size_t i = 0; i < net.species.size(); ++i) {
            if (!index.emplace(net.species[i], i).second)
                throw ParseError(0, 0, "duplicate species name: " + net.species[i]);
        }
        for (const auto& r : j.at("reactions")) {
            Reaction rx;
            rx.reactant.assign(net.species.size(), 0);
            rx.product.assign(net.species.size(), 0);
            for (auto side : {std::make_pair("reactant", &rx.reactant),
                              std::make_pair("product", &rx.product)}) {
                for (const auto& [name, coeff] : r.at(side.first).items()) {
                    auto it = index.find(name);
                    if (it == index.end())
                        throw ParseError(0, 0, "unknown species in reaction: " + name);
                    long v = coeff.get<long>();
                    if (v < 1) throw ParseError(0, 0, "coefficient must be a positive integer");
                    (*side.second)[it->second] = v;
                }
            }
            if (rx.reactant == rx.product)
                throw ParseError(0, 0, "trivial reaction: reactant equals product");
            for (const auto& prev : net.reactions)
                if (prev == rx) throw ParseError(0, 0, "duplicate reaction");
            if (!r.at("reversible_pair").is_null())
                rx.reversible_pair = r.at("reversible_pair").get<std::size_t>();
            net.reactions.push_back(std::move(rx));
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, 0, std::string("malformed network JSON: ") + e.what());
    }
    if (net.reactions.empty()) throw ParseError(0, 0, "input contains no reactions");
    // Validate / repair reversible-pair indices against actual mutual reverses.
    for (std::size_t i = 0; i < net.reactions.size(); ++i) {
        net.reactions[i].reversible_pair.reset();
    }
    for (std::size_t i = 0; i < net.reactions.size(); ++i)
        for (std::size_t j = i + 1; j < net.reactions.size(); ++j)
            if (net.reactions[i].reactant == net.reactions[j].product &&
                net.reactions[i].product == net.reactions[j].reactant) {
                net.reactions[i].reversible_pair = j;
                net.reactions[j].reversible_pair = i;
            }
    return net;
}

std::string canonical_form(const Network& net) {
    const std::size_t s = net.n_species();
    if (s > 8) throw std::invalid_argument("canonical_form: too many species");
    std::vector<std::size_t> perm(s);
    for (std::size_t i = 0; i < s; ++i) perm[i] = i;
    std::string best;
    do {
        std::vector<std::string> rows;
        rows.reserve(net.n_reactions());
        for (const auto& rx : net.reactions) {
            std::string row;
            for (std::size_t i = 0; i < s; ++i)
                row += std::to_string(rx.reactant[perm[i]]) + ",";
            row += ">";
            for (std::size_t i = 0; i < s; ++i)
                row += std::to_string(rx.product[perm[i]]) + ",";
            rows.push_back(std::move(row));
        }
        std::sort(rows.begin(), rows.end());
        std::string key;
        for (const auto& r : rows) key += r + ";";
        if (best.empty() || key < best) best = std::move(key);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace crnms
