#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "springer/partition.hpp"
#include "springer/tableau.hpp"

namespace springer {

/// Result of one exhaustive check.  A failing report always carries a
/// reproducible counterexample serialized in the module JSON formats.
struct VerificationReport {
    std::string check;
    std::string range;
    bool pass = true;
    nlohmann::json counterexample;  // null when passing
    double ms = 0.0;
};

/// For every shape of n <= n_max, every tableau and every divisor d:
///   * max divisor equals the gcd of the block lengths, block boundaries sit
///     exactly after I union K and at row ends, and the divisor set matches
///     a direct split test;
///   * pair count equals the fiber dimension;
///   * pairs minus inversions is preserved by the quotient, via the explicit
///     bijection (i, j) -> (di, dj);
///   * |sigma| = dim - dim(lambda/d) + |sigma/d|;
///   * the fiber dimension is the maximum inversion count over the shape.
VerificationReport check_tableau_identities(int n_max);

/// For every shape of n <= n_max: the divisor unfolding of the Springer
/// polynomial, agreement of the two isotypic routes for every character,
/// the totient decomposition, cell-count and cell-dimension consistency of
/// the orbifold paving with its polynomial, degree/leading-coefficient
/// checks against the hook-length count, and the cyclic structure of the
/// center's action on cells.
VerificationReport check_poincare_identities(int n_max);

/// Brute-force component oracle for one frame (n <= 6): computes the orbits
/// of H on c-tuples over J by closure under a small generating set and
/// asserts the orbits are exactly the fibers of phi, the orbit count is
/// d_star, and the lift (omega, 1, ..., 1) shifts components by one when
/// 1 is in J (d_star = 1 otherwise).
VerificationReport orbit_oracle(const ToricFrame& frame);

/// Builds the permutation r -> r+1 on the component labels, takes its
/// eigenvalue exponents (cycle lengths L contribute multiples of n/L) and
/// compares the multiset with component_characters.
VerificationReport check_character_decomposition(const ToricFrame& frame);

/// For n <= n_max (capped at 6), all J and all exponent vectors with entries
/// below n: the congruence predicate agrees with direct invariance under
/// every element of H_J, and every invariant monomial decomposes with the
/// contract verified at the evaluation point z_j = omega^{c_j}, z_k = 0 for
/// every c-tuple.  Also checks |H| = n^{n-2}.
VerificationReport check_invariant_monomials(int n_max);

/// Runs orbit_oracle (resp. check_character_decomposition) over every
/// assignment of [n-1] to I/J/K, for all n <= n_max (capped at 6).
VerificationReport orbit_oracle_sweep(int n_max);
VerificationReport character_decomposition_sweep(int n_max);

/// The full battery: tableau and polynomial identities at n <= n_max_tableau,
/// group-theoretic suites at n <= n_max_group.
std::vector<VerificationReport> verify_all(int n_max_tableau, int n_max_group);

/// Number of standard tableaux of the given shape by the hook length
/// formula.  Independent oracle for leading coefficients and component
/// counts; exact for n <= 20.
std::int64_t hook_length_count(const Partition& lambda);

}  // namespace springer
