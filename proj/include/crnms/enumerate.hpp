#ifndef CRNMS_ENUMERATE_HPP
#define CRNMS_ENUMERATE_HPP

/// \file enumerate.hpp
/// Exhaustive generation of small networks by shape, deduplicated up to
/// species relabeling, plus closed-form constructions used by the sweeps.

#include <cstddef>
#include <functional>
#include <vector>

#include "crnms/network.hpp"

namespace crnms {

/// Structural families the enumerator can generate; they mirror the
/// classifier's scope classes. A generated network is always well-formed:
/// no trivial or duplicate reactions, and every declared species appears.
enum class EnumShape {
    ONE_SPECIES,        ///< s = 1, any set of 1..max_reactions directed reactions
    SINGLE_REACTION,    ///< one irreversible reaction
    TWO_IRREVERSIBLE,   ///< two directed reactions (mutual reverses included)
    ONE_REV_ONE_IRREV,  ///< one reversible pair plus one irreversible reaction
    TWO_REVERSIBLE,     ///< two distinct reversible pairs
};

std::string enum_shape_to_string(EnumShape s);

struct EnumBounds {
    /// Largest total molecularity a complex may have.
    long max_molecularity = 2;
    /// Species ceiling for the multi-species shapes. Capped at 3: the
    /// relabeling dedup is guaranteed exhaustive only up to three species.
    std::size_t max_species = 3;
    /// ONE_SPECIES only: largest number of reactions per network.
    std::size_t max_reactions = 4;
};

/// Calls `sink` once per network of the given shape within bounds,
/// deduplicated up to species relabeling and reaction order. Deterministic
/// order. Stops early when `sink` returns false. Returns the number of
/// networks delivered. Throws std::invalid_argument on degenerate bounds
/// (molecularity < 1, species outside 1..3, reactions < 1).
std::size_t enumerate_networks(EnumShape shape, const EnumBounds& bounds,
                               const std::function<bool(const Network&)>& sink);

/// Convenience wrapper materializing the whole stream.
std::vector<Network> enumerate_all(EnumShape shape, const EnumBounds& bounds);

/// Every one-species network that is a strictly alternating chain of
/// exactly t+1 reactions (t >= 1) at t+1 distinct reactant coefficients,
/// with every complex of size <= max_molecularity; both leading directions.
/// Returns the number delivered; stops early when `sink` returns false.
std::size_t enumerate_alternating(long max_molecularity, int t,
                                  const std::function<bool(const Network&)>& sink);

/// A network with exactly r reactions and s species that admits two or more
/// nondegenerate positive steady states (the witness builders certify this;
/// see the acceptance suite). Requires r >= 2, s >= 1, r + s >= 4, s <= 26;
/// throws std::invalid_argument otherwise.
Network construction_rs(long r, long s);

}  // namespace crnms

#endif  // CRNMS_ENUMERATE_HPP
