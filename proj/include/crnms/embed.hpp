#ifndef CRNMS_EMBED_HPP
#define CRNMS_EMBED_HPP

/// \file embed.hpp
/// Subnetworks and embedded networks.  A subnetwork keeps a subset of the
/// reactions.  An embedded network additionally projects onto a subset of
/// the species: coefficients of removed species are zeroed, reactions that
/// become trivial are discarded, duplicates are merged, and species left
/// unused are dropped from the species list.

#include <cstddef>
#include <optional>
#include <vector>

#include "crnms/network.hpp"

namespace crnms {

/// Subnetwork on the given reaction indices (duplicates ignored); species
/// that no longer appear are dropped.  The result is empty (nullopt) when
/// no reactions are kept.
std::optional<Network> restrict_reactions(const Network& net,
                                          const std::vector<std::size_t>& keep);

/// Embedded network: restrict to `keep_reactions`, then project onto
/// `keep_species` (indices into net.species).  Returns nullopt when every
/// reaction trivializes.
std::optional<Network> embedded_network(const Network& net,
                                        const std::vector<std::size_t>& keep_reactions,
                                        const std::vector<std::size_t>& keep_species);

struct EmbeddedEntry {
    Network network;
    std::vector<std::size_t> reactions;  ///< kept reaction indices
    std::vector<std::size_t> species;    ///< kept species indices
    bool proper = false;                 ///< differs from the original network
};

/// Every distinct nonempty embedded network of `net`, deduplicated by
/// structure; each entry records one witnessing choice of subsets.  The
/// original network itself appears as the (unique) non-proper entry.
std::vector<EmbeddedEntry> enumerate_embedded(const Network& net);

}  // namespace crnms

#endif  // CRNMS_EMBED_HPP
