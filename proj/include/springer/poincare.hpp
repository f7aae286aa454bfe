#pragma once

#include <cstdint>
#include <vector>

#include "springer/inversions.hpp"
#include "springer/partition.hpp"
#include "springer/polynomial.hpp"
#include "springer/tableau.hpp"

namespace springer {

/// Decomposition of the extended fiber's Poincare polynomial by characters
/// of the center Z = Z_n: by_char[i] is the chi_i component.  Summing the
/// components recovers the plain polynomial.
struct EquivariantPolynomial {
    int n = 0;
    std::vector<IntPolynomial> by_char;  // size n

    IntPolynomial total() const;
    bool operator==(const EquivariantPolynomial& o) const {
        return n == o.n && by_char == o.by_char;
    }
};

/// One cell of the orbifold paving of an extended fiber: a tableau together
/// with a residue r mod its maximal divisor.  dim is the inversion count.
struct ExtendedCell {
    RowStrictTableau tableau;
    int r = 0;
    std::int64_t dim = 0;
};

/// Value t^shift * poly, the shift kept as separate metadata so the
/// cohomological degree bookkeeping stays explicit.
struct ShiftedPolynomial {
    std::int64_t shift = 0;
    IntPolynomial poly;
    bool operator==(const ShiftedPolynomial& o) const {
        return shift == o.shift && poly == o.poly;
    }
};

/// Stalk data expressed through the Springer sheaf of the smaller group
/// SL_{n/d}: value t^shift times that sheaf's stalk polynomial at base.
struct SmallerGroupForm {
    std::int64_t shift = 0;
    Partition base;
};

/// P(t) = sum over row-strict tableaux sigma of shape lambda of t^|sigma|,
/// where |sigma| is the inversion count.  Degree springer_dim(lambda);
/// value at 1 is the tableau count.
IntPolynomial springer_poincare(const Partition& lambda);

/// Same sum restricted to indivisible tableaux (max_divisor = 1).
IntPolynomial q_poly(const Partition& lambda);

/// Extended fiber version: sum of d_sigma t^|sigma|.
IntPolynomial extended_poincare(const Partition& lambda);

/// chi_i-isotypic component, with d = n/gcd(n, i).  Computed both cell-level
/// (sum of t^|sigma| over sigma whose cell count d_sigma satisfies
/// n/d_sigma | i) and in closed form (t^{D_{lambda,d}} times the Springer
/// polynomial of lambda/d when d | lambda, zero otherwise); a mismatch
/// between the two routes throws std::logic_error.
IntPolynomial isotypic_poincare(const Partition& lambda, int i);

/// All isotypic components at once: each sigma contributes t^|sigma| to the
/// characters 0, n/d_sigma, 2n/d_sigma, ...
EquivariantPolynomial equivariant_poincare(const Partition& lambda);

/// Totient-weighted decomposition: sum over d | lambda of
/// phi(d) t^{D_{lambda,d}} P_springer(lambda/d).  Equals extended_poincare.
IntPolynomial extended_poincare_totient(const Partition& lambda);

/// Stalk polynomial of the chi_i sheaf at a nilpotent of type lambda:
/// zero unless d = n/gcd(n, i) divides lambda, in which case the value is
/// t^{nilcone_dim(n) + D_{lambda,d}} P_springer(lambda/d).
ShiftedPolynomial lusztig_stalk_poincare(const Partition& lambda, int i);

/// Same stalk expressed through the Springer sheaf of SL_{n/d}:
/// shift = (nilcone_dim(n) - nilcone_dim(n/d)) + D_{lambda,d}, base
/// partition lambda/d.  Rejects i whose d does not divide lambda.
SmallerGroupForm smaller_group_form(const Partition& lambda, int i);

/// Cells (sigma, r) of the orbifold paving, r in Z_{d_sigma}, in canonical
/// tableau order.  There are sum of d_sigma cells and the dimension
/// generating function equals extended_poincare(lambda).
std::vector<ExtendedCell> extended_cells(const Partition& lambda);

/// The center's generator on cells: (sigma, r) -> (sigma, r+1 mod d_sigma).
ExtendedCell z_shift(const ExtendedCell& cell);

/// d = n/gcd(n, i), with the convention gcd(n, 0) = n (so i = 0 gives 1).
int char_divisor(int n, int i);

/// Euler's totient.
std::int64_t euler_totient(int d);

}  // namespace springer
