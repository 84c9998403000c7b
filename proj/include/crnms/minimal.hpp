#ifndef CRNMS_MINIMAL_HPP
#define CRNMS_MINIMAL_HPP

/// \file minimal.hpp
/// Embedding-minimality: a network that admits two or more nondegenerate
/// positive steady states is embedding-minimal when no proper embedded
/// network admits two or more nondegenerate positive steady states.

#include <optional>

#include "crnms/embed.hpp"
#include "crnms/network.hpp"

namespace crnms {

struct MinimalityResult {
    bool minimal = false;
    /// A proper embedded network that itself admits two nondegenerate
    /// positive steady states; present exactly when !minimal.
    std::optional<EmbeddedEntry> blocker;
};

/// Decides embedding-minimality by classifying every proper embedded
/// network. The answer is cross-checked against the closed-form catalogue
/// below (std::logic_error on disagreement). Throws std::invalid_argument
/// when the question does not arise: the network is out of scope for the
/// classifier, or the classifier refutes nondegenerate multistationarity.
MinimalityResult is_embedding_minimal(const Network& net);

/// Closed-form membership in the catalogue of embedding-minimal networks
/// within the supported shapes:
///  (a) one-species strictly alternating chains of exactly 3 reactions,
///  (b) two-species two-reaction networks with mixed-sign beta whose
///      reactant segment does not have slope -1,
///  (c) three-species two-reaction networks whose beta has two entries of
///      one sign and one of the other, with both mixed-sign projections of
///      the reactant segment having slope -1.
/// Networks containing a reversible pair along with two or more species are
/// never minimal, nor is any other supported shape outside (a)-(c).
bool matches_minimal_catalogue(const Network& net);

}  // namespace crnms

#endif  // CRNMS_MINIMAL_HPP
