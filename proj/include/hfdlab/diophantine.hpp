#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hfdlab/errors.hpp"

namespace hfdlab {

/// A homogeneous linear Diophantine system A x = 0 over the naturals.
///
/// `rows` holds the coefficient matrix row by row; every row must have the
/// same number of columns.  An optional per-variable upper bound restricts
/// the search to x with x[i] <= upper_bounds[i]; bounds never change which
/// minimal solutions exist below them, they only cut the search space.
struct DiophantineSystem {
    std::vector<std::vector<long long>> rows;
    std::optional<std::vector<long long>> upper_bounds;

    /// Optional linear budgets: candidates x with
    /// sum_i weights[i] * x[i] > bound for any budget are not explored.
    /// Weights must be nonnegative, one per column.  The completion grows
    /// candidates coordinate-wise, so a prefix never outweighs its endpoint
    /// and every minimal solution within all budgets survives; solutions
    /// beyond a budget are absent from the output.
    struct WeightBudget {
        std::vector<long long> weights;
        long long bound = 0;
    };
    std::vector<WeightBudget> budgets;

    std::size_t columns() const { return rows.empty() ? 0 : rows.front().size(); }
};

/// Options controlling the completion procedures.
struct SolverOptions {
    /// Hard ceiling on the number of frontier candidates ever created.
    /// Exceeding it throws ResourceCapError; results are never silently cut.
    std::size_t candidate_cap = 1'000'000;
};

/// Computes the Hilbert basis of {x in N^n : A x = 0}: the finite set of
/// nonzero minimal solutions, every solution being a sum of basis elements.
///
/// Uses the Contejean-Devie completion procedure: grow candidates from the
/// unit vectors, extending t by e_i only while <A t, A e_i> < 0, and prune
/// candidates dominated by an already-found minimal solution.  Output is
/// deterministic: sorted by (total degree, lexicographic).
///
/// Throws InvalidParameterError on ragged rows or bound size mismatch, and
/// ResourceCapError when options.candidate_cap is exceeded.
std::vector<std::vector<long long>> hilbert_basis(const DiophantineSystem& system,
                                                  const SolverOptions& options = {});

/// Decides whether A x = b has any solution x in N^n with x <= upper_bounds
/// (component-wise, when bounds are present).  Returns one witness if so.
///
/// Solved by running the same completion on the homogenised system
/// [A | -b] with the new variable bounded by 1 and keeping only solutions
/// whose last coordinate equals 1.
std::optional<std::vector<long long>> bounded_solution(const DiophantineSystem& system,
                                                       const std::vector<long long>& target,
                                                       const SolverOptions& options = {});

/// Returns an integer basis of the lattice {z in Z^n : matrix * z = 0},
/// obtained by integer row reduction of the columns against an identity
/// block.  The basis rows are full-width vectors; an empty result means the
/// kernel is trivial.  Throws InvalidParameterError on ragged rows.
std::vector<std::vector<long long>> kernel_lattice_basis(
    const std::vector<std::vector<long long>>& matrix);

/// Computes all conformally minimal nonzero integer vectors z with
/// matrix * z = 0: the z such that no other kernel vector w satisfies both
/// w+ <= z+ and w- <= z- component-wise.  One representative per opposite
/// pair {z, -z} is returned, normalised so the first nonzero entry is
/// positive, sorted by (l1 norm, lexicographic).
///
/// Works by lattice completion: starting from an integer kernel basis,
/// repeatedly form sums of sign-conflicting vectors and keep every nonzero
/// conformal normal form, then filter to the minimal elements.  Candidate
/// sums count against options.candidate_cap (ResourceCapError).  Rows must
/// be rectangular (InvalidParameterError); upper bounds and prune weights
/// are not consulted here.
std::vector<std::vector<long long>> graver_basis(const std::vector<std::vector<long long>>& matrix,
                                                 const SolverOptions& options = {});

} // namespace hfdlab
