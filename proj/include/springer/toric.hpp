#pragma once

#include <cstdint>
#include <vector>

#include "springer/tableau.hpp"

namespace springer {

// All arithmetic in this module is exact residue arithmetic over the
// integers.  Roots of unity are represented by their exponents mod n;
// equality of scalars means equality of exponents.

/// Reduced fraction, denominator positive.
struct Fraction {
    std::int64_t num = 0;
    std::int64_t den = 1;
    bool operator==(const Fraction& o) const { return num == o.num && den == o.den; }
};

/// Exponent vector of a monomial z_1^{b_1} ... z_{n-1}^{b_{n-1}}; exps[j-1]
/// is the exponent of z_j.
struct ExponentVector {
    int n = 0;
    std::vector<std::int64_t> exps;  // length n-1
    bool operator==(const ExponentVector& o) const { return n == o.n && exps == o.exps; }
};

/// Element (omega^{a_1}, ..., omega^{a_{n-1}}) of the big finite torus
/// kernel; a holds the residues mod n.
struct GroupElement {
    int n = 0;
    std::vector<int> a;  // length n-1, residues in [0, n)
};

/// Component label of the fiber over a frame's slice: a residue mod d_star.
struct ComponentIndex {
    ToricFrame frame;
    int r = 0;  // 0 <= r < d_star(frame)
};

/// Numerators over n of the simple-root coefficients of the k-th fundamental
/// weight: entry j is j(n-k) for j <= k and k(n-j) for j >= k.
std::vector<std::int64_t> weight_numerators(int n, int k);

/// Coefficients of mu_k, the representative of the k-th fundamental weight
/// modulo the root lattice with all coefficients in [0, 1): the reduced
/// fractions (weight_numerators(n,k)[j] mod n) / n.
std::vector<Fraction> mu_coefficients(int n, int k);

/// Exponents of v_k = e^{mu_k} in the z-coordinates: numerators reduced
/// mod n.
ExponentVector v_exponents(int n, int k);

/// Exponents of y_k = e^{lambda_k} in the z-coordinates: the raw numerators.
ExponentVector y_exponents(int n, int k);

/// True iff z_k divides v_i, i.e. v_exponents(n, i)[k] > 0.  Closed form:
/// i is not divisible by n / gcd(k, n).
bool z_divides_v(int n, int k, int i);

/// Membership in H: a_1 + 2 a_2 + ... + (n-1) a_{n-1} = 0 mod n.
bool in_H(const GroupElement& h);

/// Membership in H_J: a_j = 0 for j in J, and sum over r not in J of
/// r a_r = 0 mod n.
bool in_H_J(const GroupElement& h, const std::vector<int>& J);

/// True iff the monomial with exponents b is H_J-invariant: there is a
/// residue a mod n with b_r = a r mod n for every r not in J.  Pass an empty
/// J for plain H-invariance (b proportional to (1, ..., n-1) mod n).
bool is_invariant_monomial(const ExponentVector& b, const std::vector<int>& J);

/// Decomposition of an H_J-invariant monomial f as scalar^{-1} g plus an
/// ideal term: g = (prod z_j^{m_j}) f is H-invariant and
/// omega^{scalar_exponent} f - g lies in <z_j - omega^{c_j}, z_k>.
struct InvariantDecomposition {
    ExponentVector g;
    std::vector<std::int64_t> m;  // aligned with ascending J; minimal, in [0, n)
    int scalar_exponent = 0;      // exponent of the scalar prod omega^{c_j m_j}
    int proportionality_residue = 0;  // the residue a used (smallest valid)
};

/// Computes the decomposition above.  c is aligned positionally with the
/// ascending elements of J.  Rejects b that is not H_J-invariant.
InvariantDecomposition invariant_sum_decomposition(const ExponentVector& b,
                                                   const std::vector<int>& J,
                                                   const std::vector<int>& c);

/// d_star of a frame: gcd of [n] minus J, i.e. gcd(I union K union {n}).
int d_star(const ToricFrame& frame);

/// Component classifier: phi((c_j)) = sum of j c_j mod d_star.  Two tuples
/// label the same component exactly when their phi values agree.
ComponentIndex phi(const ToricFrame& frame, const std::vector<int>& c);

/// The center's generator sends component r to r+1 mod d_star.
ComponentIndex z_shift(const ComponentIndex& idx);

/// Character indices of the center acting on the span of the components:
/// [0, q, 2q, ..., (d_star - 1) q] with q = n / d_star.
std::vector<int> component_characters(const ToricFrame& frame);

}  // namespace springer
