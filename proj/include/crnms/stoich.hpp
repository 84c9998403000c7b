#ifndef CRNMS_STOICH_HPP
#define CRNMS_STOICH_HPP

/// \file stoich.hpp
/// Stoichiometric and graph-theoretic invariants of a network: the
/// stoichiometric matrix and its rank, complexes, linkage classes, terminal
/// strong linkage classes, weak reversibility, deficiency (total and per
/// linkage class), and the consistency test with certificates.

#include <cstddef>
#include <vector>

#include "crnms/linalg.hpp"
#include "crnms/network.hpp"

namespace crnms {

struct StoichReport {
    RatMat gamma;  ///< s x r matrix of reaction vectors (columns)
    std::vector<std::vector<long>> complexes;      ///< distinct complexes
    std::vector<std::size_t> reactant_complex;     ///< per reaction
    std::vector<std::size_t> product_complex;      ///< per reaction
    std::vector<std::vector<std::size_t>> linkage_classes;  ///< complex indices
    int dim_stoich = 0;      ///< rank of gamma
    long deficiency = 0;     ///< p - l - dim, always >= 0
    std::size_t n_terminal_strong = 0;  ///< terminal strong linkage classes
    bool weakly_reversible = false;
    /// True when every linkage class contains exactly one terminal strong
    /// linkage class.
    bool single_terminal_per_linkage = false;
    std::vector<long> linkage_deficiencies;  ///< per linkage class
    /// True when the linkage-class deficiencies sum to the total deficiency.
    bool deficiency_splits = false;

    std::size_t n_complexes() const { return complexes.size(); }
    std::size_t n_linkage() const { return linkage_classes.size(); }
};

StoichReport stoich_report(const Network& net);

/// Consistency: does some lambda > 0 solve Gamma lambda = 0?  The returned
/// certificate carries lambda itself, or the separating functional showing
/// no positive steady state can exist for any rate constants.
PositiveKernel consistency(const Network& net);

}  // namespace crnms

#endif  // CRNMS_STOICH_HPP
