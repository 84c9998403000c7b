#include "crnms/embed.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace crnms {

namespace {

/// Rebuilds a network from raw reactions over the full species list of the
/// parent, dropping unused species and re-deriving reversible pairs.
std::optional<Network> tighten(const Network& parent,
                               const std::vector<std::pair<std::vector<long>, std::vector<long>>>&
                                   raw) {
    if (raw.empty()) return std::nullopt;
    const std::size_t s = parent.n_species();
    std::vector<bool> used(s, false);
    for (const auto& [reac, prod] : raw)
        for (std::size_t i = 0; i < s; ++i)
            if (reac[i] != 0 || prod[i] != 0) used[i] = true;

    Network out;
    std::vector<std::size_t> map;
    for (std::size_t i = 0; i < s; ++i)
        if (used[i]) {
            map.push_back(i);
            out.species.push_back(parent.species[i]);
        }
    for (const auto& [reac, prod] : raw) {
        Reaction rx;
        rx.reactant.reserve(map.size());
        rx.product.reserve(map.size());
        for (auto i : map) {
            rx.reactant.push_back(reac[i]);
            rx.product.push_back(prod[i]);
        }
        out.reactions.push_back(std::move(rx));
    }
    for (std::size_t i = 0; i < out.reactions.size(); ++i)
        for (std::size_t j = i + 1; j < out.reactions.size(); ++j)
            if (out.reactions[i].reactant == out.reactions[j].product &&
                out.reactions[i].product == out.reactions[j].reactant) {
                out.reactions[i].reversible_pair = j;
                out.reactions[j].reversible_pair = i;
            }
    return out;
}

}  // namespace

std::optional<Network> restrict_reactions(const Network& net,
                                          const std::vector<std::size_t>& keep) {
    std::set<std::size_t> uniq(keep.begin(), keep.end());
    std::vector<std::pair<std::vector<long>, std::vector<long>>> raw;
    for (auto r : uniq) raw.emplace_back(net.reactions[r].reactant, net.reactions[r].product);
    return tighten(net, raw);
}

std::optional<Network> embedded_network(const Network& net,
                                        const std::vector<std::size_t>& keep_reactions,
                                        const std::vector<std::size_t>& keep_species) {
    const std::size_t s = net.n_species();
    std::vector<bool> keep(s, false);
    for (auto i : keep_species) keep[i] = true;

    std::set<std::size_t> uniq(keep_reactions.begin(), keep_reactions.end());
    std::vector<std::pair<std::vector<long>, std::vector<long>>> raw;
    for (auto r : uniq) {
        std::vector<long> reac(s, 0), prod(s, 0);
        for (std::size_t i = 0; i < s; ++i)
            if (keep[i]) {
                reac[i] = net.reactions[r].reactant[i];
                prod[i] = net.reactions[r].product[i];
            }
        if (reac == prod) continue;  // trivialized by the projection
        bool dup = false;
        for (const auto& [pr, pp] : raw)
            if (pr == reac && pp == prod) {
                dup = true;
                break;
            }
        if (!dup) raw.emplace_back(std::move(reac), std::move(prod));
    }
    return tighten(net, raw);
}

std::vector<EmbeddedEntry> enumerate_embedded(const Network& net) {
    const std::size_t r = net.n_reactions(), s = net.n_species();
    std::vector<EmbeddedEntry> out;
    std::map<std::string, std::size_t> seen;  // rendered form -> index in out

    for (std::size_t rmask = 1; rmask < (1ull << r); ++rmask) {
        for (std::size_t smask = 0; smask < (1ull << s); ++smask) {
            std::vector<std::size_t> kr, ks;
            for (std::size_t j = 0; j < r; ++j)
                if (rmask & (1ull << j)) kr.push_back(j);
            for (std::size_t i = 0; i < s; ++i)
                if (smask & (1ull << i)) ks.push_back(i);
            auto em = embedded_network(net, kr, ks);
            if (!em) continue;
            std::string key = render_network(*em);
            if (seen.count(key)) continue;
            seen.emplace(key, out.size());
            EmbeddedEntry entry;
            entry.network = std::move(*em);
            entry.reactions = std::move(kr);
            entry.species = std::move(ks);
            entry.proper = !(entry.network.n_reactions() == r &&
                             entry.network.n_species() == s &&
                             entry.network.species == net.species &&
                             [&] {
                                 for (std::size_t j = 0; j < r; ++j)
                                     if (!(entry.network.reactions[j] == net.reactions[j]))
                                         return false;
                                 return true;
                             }());
            out.push_back(std::move(entry));
        }
    }
    return out;
}

}  // namespace crnms
