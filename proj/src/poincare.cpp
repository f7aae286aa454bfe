#include "springer/poincare.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace springer {

namespace {

void check_char(int n, int i) {
    if (i < 0 || i > n - 1) {
        throw std::invalid_argument("character index " + std::to_string(i) +
                                    " out of range 0.." + std::to_string(n - 1));
    }
}

}  // namespace

IntPolynomial EquivariantPolynomial::total() const {
    IntPolynomial sum;
    for (const auto& p : by_char) sum += p;
    return sum;
}

IntPolynomial springer_poincare(const Partition& lambda) {
    IntPolynomial p;
    for_each_rst(lambda, [&](const RowStrictTableau& sigma) {
        p.add_term(static_cast<int>(inversion_count(sigma)), 1);
    });
    return p;
}

IntPolynomial q_poly(const Partition& lambda) {
    IntPolynomial p;
    for_each_rst(lambda, [&](const RowStrictTableau& sigma) {
        if (max_divisor(sigma) == 1) {
            p.add_term(static_cast<int>(inversion_count(sigma)), 1);
        }
    });
    return p;
}

IntPolynomial extended_poincare(const Partition& lambda) {
    IntPolynomial p;
    for_each_rst(lambda, [&](const RowStrictTableau& sigma) {
        p.add_term(static_cast<int>(inversion_count(sigma)), max_divisor(sigma));
    });
    return p;
}

IntPolynomial isotypic_poincare(const Partition& lambda, int i) {
    const int n = lambda.n();
    check_char(n, i);

    // Cell-level route: chi_i occurs in the cells over sigma iff n/d_sigma
    // divides i.
    IntPolynomial cell_level;
    for_each_rst(lambda, [&](const RowStrictTableau& sigma) {
        if (i % (n / max_divisor(sigma)) == 0) {
            cell_level.add_term(static_cast<int>(inversion_count(sigma)), 1);
        }
    });

    // Closed form: t^{D_{lambda,d}} P(lambda/d) when d | lambda, else zero.
    const int d = char_divisor(n, i);
    IntPolynomial closed;
    if (divides(d, lambda)) {
        closed = springer_poincare(quotient_partition(lambda, d))
                     .shifted(static_cast<int>(dim_shift(lambda, d)));
    }

    if (cell_level != closed) {
        throw std::logic_error("isotypic component mismatch between cell-level and "
                               "closed-form computation at character " + std::to_string(i));
    }
    return closed;
}

EquivariantPolynomial equivariant_poincare(const Partition& lambda) {
    const int n = lambda.n();
    EquivariantPolynomial out;
    out.n = n;
    out.by_char.assign(static_cast<std::size_t>(n), IntPolynomial{});
    for_each_rst(lambda, [&](const RowStrictTableau& sigma) {
        const int d = max_divisor(sigma);
        const int q = n / d;
        const int deg = static_cast<int>(inversion_count(sigma));
        for (int k = 0; k < d; ++k) {
            out.by_char[static_cast<std::size_t>(k * q)].add_term(deg, 1);
        }
    });
    return out;
}

IntPolynomial extended_poincare_totient(const Partition& lambda) {
    IntPolynomial p;
    for (int d : divisor_list(lambda)) {
        p += springer_poincare(quotient_partition(lambda, d))
                 .shifted(static_cast<int>(dim_shift(lambda, d)))
                 .scaled(euler_totient(d));
    }
    return p;
}

ShiftedPolynomial lusztig_stalk_poincare(const Partition& lambda, int i) {
    const int n = lambda.n();
    check_char(n, i);
    const int d = char_divisor(n, i);
    if (!divides(d, lambda)) {
        return ShiftedPolynomial{0, IntPolynomial{}};
    }
    return ShiftedPolynomial{nilcone_dim(n) + dim_shift(lambda, d),
                             springer_poincare(quotient_partition(lambda, d))};
}

SmallerGroupForm smaller_group_form(const Partition& lambda, int i) {
    const int n = lambda.n();
    check_char(n, i);
    const int d = char_divisor(n, i);
    if (!divides(d, lambda)) {
        throw std::invalid_argument("character " + std::to_string(i) +
                                    " has divisor " + std::to_string(d) +
                                    " which does not divide the partition");
    }
    return SmallerGroupForm{nilcone_dim(n) - nilcone_dim(n / d) + dim_shift(lambda, d),
                            quotient_partition(lambda, d)};
}

std::vector<ExtendedCell> extended_cells(const Partition& lambda) {
    std::vector<ExtendedCell> out;
    for_each_rst(lambda, [&](const RowStrictTableau& sigma) {
        const int d = max_divisor(sigma);
        const std::int64_t dim = inversion_count(sigma);
        for (int r = 0; r < d; ++r) {
            out.push_back(ExtendedCell{sigma, r, dim});
        }
    });
    return out;
}

ExtendedCell z_shift(const ExtendedCell& cell) {
    const int d = max_divisor(cell.tableau);
    return ExtendedCell{cell.tableau, (cell.r + 1) % d, cell.dim};
}

int char_divisor(int n, int i) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    check_char(n, i);
    return n / std::gcd(n, i);  // gcd(n, 0) = n, so i = 0 gives 1
}

std::int64_t euler_totient(int d) {
    if (d < 1) throw std::invalid_argument("totient argument must be positive");
    std::int64_t result = d;
    int m = d;
    for (int p = 2; static_cast<std::int64_t>(p) * p <= m; ++p) {
        if (m % p == 0) {
            result -= result / p;
            while (m % p == 0) m /= p;
        }
    }
    if (m > 1) result -= result / m;
    return result;
}

}  // namespace springer
