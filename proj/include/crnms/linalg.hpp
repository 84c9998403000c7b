#ifndef CRNMS_LINALG_HPP
#define CRNMS_LINALG_HPP

/// \file linalg.hpp
/// Exact rational linear algebra: rank, kernels, linear solving, and the
/// nonnegative-feasibility solver (phase-1 simplex with Bland's rule) that
/// backs the consistency test and its infeasibility certificates.

#include <optional>
#include <vector>

#include "crnms/rational.hpp"

namespace crnms {

using RatMat = std::vector<RatVec>;  // row-major; all rows the same length

int rank(RatMat m);

/// Basis of the right kernel {x : M x = 0}; `ncols` is the column count
/// (needed when the matrix has zero rows).
std::vector<RatVec> kernel_basis(const RatMat& m, std::size_t ncols);

/// Any solution of A x = b, or nullopt when inconsistent.
std::optional<RatVec> solve_linear(const RatMat& a, const RatVec& b);

/// Some x >= 0 with A x = b, or nullopt when none exists.  Exact phase-1
/// simplex with Bland's rule (termination guaranteed, no tolerances).
std::optional<RatVec> solve_nonneg(const RatMat& a, const RatVec& b);

/// Outcome of the positive-kernel test for a stoichiometric matrix N:
/// either lambda > 0 with N lambda = 0 (componentwise >= 1 by scaling), or
/// the separating certificate of Stiemke's lemma: u with w = N^T u
/// semipositive (w >= 0, w != 0).  Along trajectories, d(u.x)/dt = w.v(x) > 0
/// for every positive x, so no positive steady state exists for any choice
/// of rate constants.  Exactly one branch is ever populated.
struct PositiveKernel {
    bool feasible = false;
    RatVec lambda;  ///< if feasible: lambda >= 1, N lambda = 0
    RatVec u;       ///< if infeasible: the separating functional
    RatVec w;       ///< if infeasible: w = N^T u, semipositive and nonzero
};

PositiveKernel positive_kernel(const RatMat& n_mat, std::size_t ncols);

}  // namespace crnms

#endif  // CRNMS_LINALG_HPP
