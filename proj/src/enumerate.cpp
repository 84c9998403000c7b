#include "crnms/enumerate.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace crnms {

namespace {

using Complex = std::vector<long>;
using Arc = std::pair<std::size_t, std::size_t>;  // (reactant, product) complex indices

// All complexes over `s` species with total size <= max_mol, in ascending
// lexicographic order (first species slowest). Index 0 is the zero complex.
std::vector<Complex> all_complexes(std::size_t s, long max_mol) {
    std::vector<Complex> out;
    Complex cur(s, 0);
    // Odometer over coordinates with the total-size cap.
    while (true) {
        out.push_back(cur);
        std::size_t pos = s;
        while (pos > 0) {
            --pos;
            long total = 0;
            for (long c : cur) total += c;
            if (total - cur[pos] + (cur[pos] + 1) <= max_mol) {
                ++cur[pos];
                for (std::size_t j = pos + 1; j < s; ++j) cur[j] = 0;
                break;
            }
            if (pos == 0) return out;
            cur[pos] = 0;
        }
        if (s == 0) return out;
    }
}

std::string species_name(std::size_t i) { return std::string(1, static_cast<char>('A' + i)); }

// Builds a network from complex-index arcs. Returns nullopt when a species
// never appears or two arcs coincide; trivial arcs are the caller's job to
// avoid. Mutual reverses are marked as reversible pairs.
std::optional<Network> assemble(std::size_t s, const std::vector<Complex>& cx,
                                const std::vector<Arc>& arcs) {
    Network net;
    for (std::size_t i = 0; i < s; ++i) net.species.push_back(species_name(i));
    for (const Arc& a : arcs) {
        Reaction r;
        r.reactant = cx[a.first];
        r.product = cx[a.second];
        net.reactions.push_back(std::move(r));
    }
    for (std::size_t k = 0; k < arcs.size(); ++k)
        for (std::size_t l = k + 1; l < arcs.size(); ++l)
            if (arcs[k] == arcs[l]) return std::nullopt;
    for (std::size_t i = 0; i < s; ++i) {
        bool appears = false;
        for (const Reaction& r : net.reactions)
            if (r.reactant[i] != 0 || r.product[i] != 0) appears = true;
        if (!appears) return std::nullopt;
    }
    for (std::size_t k = 0; k < arcs.size(); ++k)
        for (std::size_t l = 0; l < arcs.size(); ++l)
            if (arcs[k].first == arcs[l].second && arcs[k].second == arcs[l].first)
                net.reactions[k].reversible_pair = l;
    return net;
}

// Directed arcs between distinct complexes, ascending (reactant-major).
std::vector<Arc> all_arcs(std::size_t n_complexes) {
    std::vector<Arc> out;
    for (std::size_t a = 0; a < n_complexes; ++a)
        for (std::size_t b = 0; b < n_complexes; ++b)
            if (a != b) out.emplace_back(a, b);
    return out;
}

class Emitter {
  public:
    explicit Emitter(const std::function<bool(const Network&)>& sink) : sink_(sink) {}

    // Deduplicates by relabel-canonical key; returns false to stop the walk.
    bool offer(const std::optional<Network>& net) {
        if (!net) return true;
        if (!seen_.insert(canonical_form(*net)).second) return true;
        ++count_;
        return sink_(*net);
    }

    std::size_t count() const { return count_; }

  private:
    const std::function<bool(const Network&)>& sink_;
    std::set<std::string> seen_;
    std::size_t count_ = 0;
};

// Subsets of `arcs` of size 1..max_take, in ascending index order.
bool walk_subsets(const std::vector<Complex>& cx, const std::vector<Arc>& arcs,
                  std::size_t max_take, std::vector<Arc>& chosen, std::size_t next,
                  Emitter& em) {
    if (!chosen.empty() && !em.offer(assemble(1, cx, chosen))) return false;
    if (chosen.size() == max_take) return true;
    for (std::size_t i = next; i < arcs.size(); ++i) {
        chosen.push_back(arcs[i]);
        bool keep = walk_subsets(cx, arcs, max_take, chosen, i + 1, em);
        chosen.pop_back();
        if (!keep) return false;
    }
    return true;
}

void check_bounds(const EnumBounds& b) {
    if (b.max_molecularity < 1)
        throw std::invalid_argument("enumerate_networks: molecularity bound must be >= 1");
    if (b.max_species < 1 || b.max_species > 3)
        throw std::invalid_argument("enumerate_networks: species bound must be 1..3");
    if (b.max_reactions < 1)
        throw std::invalid_argument("enumerate_networks: reaction bound must be >= 1");
}

}  // namespace

std::string enum_shape_to_string(EnumShape s) {
    switch (s) {
        case EnumShape::ONE_SPECIES: return "one-species";
        case EnumShape::SINGLE_REACTION: return "single-reaction";
        case EnumShape::TWO_IRREVERSIBLE: return "two-irrev";
        case EnumShape::ONE_REV_ONE_IRREV: return "rev-irrev";
        case EnumShape::TWO_REVERSIBLE: return "two-rev";
    }
    return "?";
}

std::size_t enumerate_networks(EnumShape shape, const EnumBounds& bounds,
                               const std::function<bool(const Network&)>& sink) {
    check_bounds(bounds);
    Emitter em(sink);

    if (shape == EnumShape::ONE_SPECIES) {
        std::vector<Complex> cx = all_complexes(1, bounds.max_molecularity);
        std::vector<Arc> arcs = all_arcs(cx.size());
        std::vector<Arc> chosen;
        walk_subsets(cx, arcs, bounds.max_reactions, chosen, 0, em);
        return em.count();
    }

    for (std::size_t s = 1; s <= bounds.max_species; ++s) {
        std::vector<Complex> cx = all_complexes(s, bounds.max_molecularity);
        std::vector<Arc> arcs = all_arcs(cx.size());
        switch (shape) {
            case EnumShape::SINGLE_REACTION:
                for (const Arc& a : arcs)
                    if (!em.offer(assemble(s, cx, {a}))) return em.count();
                break;
            case EnumShape::TWO_IRREVERSIBLE:
                for (std::size_t i = 0; i < arcs.size(); ++i)
                    for (std::size_t j = i + 1; j < arcs.size(); ++j)
                        if (!em.offer(assemble(s, cx, {arcs[i], arcs[j]}))) return em.count();
                break;
            case EnumShape::ONE_REV_ONE_IRREV:
                for (std::size_t a = 0; a < cx.size(); ++a)
                    for (std::size_t b = a + 1; b < cx.size(); ++b)
                        for (const Arc& irr : arcs) {
                            if ((irr.first == a && irr.second == b) ||
                                (irr.first == b && irr.second == a))
                                continue;
                            if (!em.offer(assemble(s, cx, {{a, b}, {b, a}, irr})))
                                return em.count();
                        }
                break;
            case EnumShape::TWO_REVERSIBLE:
                for (std::size_t a = 0; a < cx.size(); ++a)
                    for (std::size_t b = a + 1; b < cx.size(); ++b)
                        for (std::size_t c = a; c < cx.size(); ++c)
                            for (std::size_t d = c + 1; d < cx.size(); ++d) {
                                if (std::make_pair(c, d) <= std::make_pair(a, b)) continue;
                                if (!em.offer(assemble(
                                        s, cx, {{a, b}, {b, a}, {c, d}, {d, c}})))
                                    return em.count();
                            }
                break;
            case EnumShape::ONE_SPECIES:
                break;  // handled above
        }
    }
    return em.count();
}

std::vector<Network> enumerate_all(EnumShape shape, const EnumBounds& bounds) {
    std::vector<Network> out;
    enumerate_networks(shape, bounds, [&](const Network& n) {
        out.push_back(n);
        return true;
    });
    return out;
}

std::size_t enumerate_alternating(long max_molecularity, int t,
                                  const std::function<bool(const Network&)>& sink) {
    if (max_molecularity < 1 || t < 1)
        throw std::invalid_argument("enumerate_alternating: need molecularity >= 1, t >= 1");
    const long m = max_molecularity;
    const std::size_t slots = static_cast<std::size_t>(t) + 1;
    std::vector<Complex> cx;
    for (long c = 0; c <= m; ++c) cx.push_back({c});
    std::size_t count = 0;

    std::vector<long> coeffs(slots);
    // Ascending coefficient tuples 0 <= c_1 < ... < c_{t+1} <= m.
    std::function<bool(std::size_t, long)> pick = [&](std::size_t slot, long from) -> bool {
        if (slot == slots) {
            for (int lead = 0; lead < 2; ++lead) {
                // Per slot, the product ranges over all larger (arrow right)
                // or smaller (arrow left) coefficients; odometer over slots.
                std::vector<long> prod(slots);
                std::vector<bool> right(slots);
                bool feasible = true;
                for (std::size_t i = 0; i < slots; ++i) {
                    right[i] = (i % 2 == 0) == (lead == 0);
                    prod[i] = right[i] ? coeffs[i] + 1 : coeffs[i] - 1;
                    if (prod[i] < 0 || prod[i] > m) feasible = false;
                }
                if (!feasible) continue;
                while (true) {
                    std::vector<Arc> arcs;
                    for (std::size_t i = 0; i < slots; ++i)
                        arcs.emplace_back(static_cast<std::size_t>(coeffs[i]),
                                          static_cast<std::size_t>(prod[i]));
                    std::optional<Network> net = assemble(1, cx, arcs);
                    if (net) {
                        ++count;
                        if (!sink(*net)) return false;
                    }
                    std::size_t i = slots;
                    while (i > 0) {
                        --i;
                        long next = right[i] ? prod[i] + 1 : prod[i] - 1;
                        if (next >= 0 && next <= m && next != coeffs[i]) {
                            prod[i] = next;
                            break;
                        }
                        prod[i] = right[i] ? coeffs[i] + 1 : coeffs[i] - 1;
                        if (i == 0) goto next_lead;
                    }
                }
            next_lead:;
            }
            return true;
        }
        for (long c = from; c <= m - static_cast<long>(slots - slot) + 1; ++c) {
            coeffs[slot] = c;
            if (!pick(slot + 1, c + 1)) return false;
        }
        return true;
    };
    pick(0, 0);
    return count;
}

Network construction_rs(long r, long s) {
    if (r < 2 || s < 1 || r + s < 4 || s > 26)
        throw std::invalid_argument("construction_rs: need r >= 2, s >= 1, r + s >= 4, s <= 26");

    Network net;
    for (long i = 0; i < s; ++i) net.species.push_back(species_name(static_cast<std::size_t>(i)));
    auto add = [&](const Complex& reac, const Complex& prod) {
        Reaction rx;
        rx.reactant = reac;
        rx.product = prod;
        net.reactions.push_back(std::move(rx));
    };
    auto unit = [&](long i, long c) {
        Complex v(static_cast<std::size_t>(s), 0);
        v[static_cast<std::size_t>(i)] = c;
        return v;
    };

    if (s == 1) {
        // Strictly alternating chain of r reactions: j A -> (j +/- 1) A.
        for (long j = 0; j < r; ++j) add(unit(0, j), unit(0, j % 2 == 0 ? j + 1 : j - 1));
        return net;
    }

    // Two-species core with one crossing pair of opposed reactions, extra
    // parallel reactions to reach r, and catalyst-only species to reach s.
    Complex b_unit = unit(1, 1);        // B
    Complex a_unit = unit(0, 1);        // A
    Complex core1_reac = unit(1, 2);    // 2B
    core1_reac[0] = 1;                  // A + 2B
    Complex core1_prod = unit(1, 3);    // 3B

    Complex core0_reac = b_unit, core0_prod = a_unit;
    if (r == 2) {
        // No extra reactions exist, so the catalysts ride on the first core
        // reaction: B + C + ... -> A + C + ...
        for (long i = 2; i < s; ++i) {
            core0_reac[static_cast<std::size_t>(i)] = 1;
            core0_prod[static_cast<std::size_t>(i)] = 1;
        }
    }
    add(core0_reac, core0_prod);
    add(core1_reac, core1_prod);
    for (long j = 0; j + 2 < r; ++j) {
        // (2+j) B -> A + (1+j) B, parallel to the core pair.
        Complex reac = unit(1, 2 + j);
        Complex prod = unit(1, 1 + j);
        prod[0] = 1;
        if (j == 0)
            for (long i = 2; i < s; ++i) {
                reac[static_cast<std::size_t>(i)] = 1;
                prod[static_cast<std::size_t>(i)] = 1;
            }
        add(reac, prod);
    }
    for (std::size_t k = 0; k < net.n_reactions(); ++k)
        for (std::size_t l = 0; l < net.n_reactions(); ++l)
            if (net.reactions[k].reactant == net.reactions[l].product &&
                net.reactions[k].product == net.reactions[l].reactant)
                net.reactions[k].reversible_pair = l;
    return net;
}

}  // namespace crnms
