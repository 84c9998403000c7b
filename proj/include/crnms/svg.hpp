#ifndef CRNMS_SVG_HPP
#define CRNMS_SVG_HPP

/// \file svg.hpp
/// Box-diagram rendering for two-species, two-reaction networks: the
/// axis-parallel rectangle spanned by the two reactant complexes, the
/// diagonal joining them, and one arrow per reaction vector.

#include <string>

#include "crnms/network.hpp"

namespace crnms {

/// A standalone SVG document, deterministic for a given network: a unit
/// grid at 40 px per stoichiometric unit with the origin at the lower left
/// (y grows upward), the reactant box (class "box"), exactly one diagonal
/// segment (class "diagonal"), exactly two reaction arrows (class "arrow",
/// each with a marker-end arrowhead), and complex/species labels.
/// Throws std::invalid_argument unless the network has exactly two
/// reactions and exactly two species.
std::string box_diagram_svg(const Network& net);

}  // namespace crnms

#endif  // CRNMS_SVG_HPP
