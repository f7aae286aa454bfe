#include <numeric>
#include <stdexcept>

#include "doctest.h"
#include "springer/poincare.hpp"
#include "springer/verify.hpp"

using namespace springer;

namespace {

IntPolynomial poly(std::vector<std::int64_t> c) { return IntPolynomial(std::move(c)); }

}  // namespace

TEST_CASE("IntPolynomial basics") {
    CHECK(IntPolynomial{}.is_zero());
    CHECK(IntPolynomial{}.degree() == -1);
    CHECK(poly({1, 2, 0}).coeffs() == std::vector<std::int64_t>{1, 2});  // trimmed
    CHECK(poly({1, 2}).at_one() == 3);
    CHECK(poly({1, 2}).shifted(2) == poly({0, 0, 1, 2}));
    CHECK(poly({1, 2}).scaled(3) == poly({3, 6}));
    CHECK(poly({1, 2}).scaled(0).is_zero());
    CHECK((poly({1, 1}) + poly({0, 1, 1})) == poly({1, 2, 1}));
    CHECK(poly({1}).coeff(5) == 0);
    CHECK_THROWS_AS(poly({-1}), std::invalid_argument);
    IntPolynomial p;
    p.add_term(3, 2);
    p.add_term(0, 1);
    CHECK(p == poly({1, 0, 0, 2}));
    CHECK(p.leading() == 2);
}

TEST_CASE("springer_poincare on small shapes") {
    CHECK(springer_poincare(Partition{2, 1}) == poly({1, 2}));
    CHECK(springer_poincare(Partition{5}) == poly({1}));
    CHECK(springer_poincare(Partition{1, 1}) == poly({1, 1}));
    CHECK(springer_poincare(Partition{2, 2}) == poly({1, 3, 2}));
}

TEST_CASE("degree, leading coefficient and total count") {
    for (int n = 1; n <= 7; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            const IntPolynomial p = springer_poincare(lambda);
            CHECK(p.degree() == springer_dim(lambda));
            CHECK(p.leading() == hook_length_count(lambda));
            CHECK(p.at_one() == rst_count(lambda));
        }
    }
}

TEST_CASE("single-column shapes give the t-factorial") {
    // The fiber over zero is the full flag variety, whose cell structure is
    // counted by permutation inversions: product of (1 + t + ... + t^{i-1}).
    for (int n = 1; n <= 7; ++n) {
        IntPolynomial expected = IntPolynomial::constant(1);
        for (int i = 1; i <= n; ++i) {
            IntPolynomial next;
            for (int k = 0; k < i; ++k) {
                for (int d = 0; d <= expected.degree(); ++d) {
                    next.add_term(d + k, expected.coeff(d));
                }
            }
            expected = next;
        }
        const Partition column(std::vector<int>(static_cast<std::size_t>(n), 1));
        CHECK(springer_poincare(column) == expected);
    }
}

TEST_CASE("q_poly") {
    CHECK(q_poly(Partition{2}) == IntPolynomial{});
    CHECK(q_poly(Partition{2, 1}) == springer_poincare(Partition{2, 1}));
    CHECK(q_poly(Partition{3, 2, 1}) == springer_poincare(Partition{3, 2, 1}));
    CHECK(q_poly(Partition{2, 2}) == poly({1, 2, 1}));
    // the divisor unfolding on [2,2]
    CHECK(springer_poincare(Partition{2, 2}) ==
          q_poly(Partition{2, 2}) + q_poly(Partition{1, 1}).shifted(1));
}

TEST_CASE("extended_poincare") {
    CHECK(extended_poincare(Partition{7}) == poly({7}));
    CHECK(extended_poincare(Partition{2, 2}) == poly({1, 4, 3}));
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        const Partition column(ones);
        CHECK(extended_poincare(column) == springer_poincare(column));
    }
}

TEST_CASE("the [6,6] decomposition into smaller Springer polynomials") {
    const IntPolynomial ext = extended_poincare(Partition{6, 6});
    const IntPolynomial rhs = springer_poincare(Partition{6, 6}) +
                              springer_poincare(Partition{3, 3}).shifted(3) +
                              springer_poincare(Partition{2, 2}).shifted(4).scaled(2) +
                              springer_poincare(Partition{1, 1}).shifted(5).scaled(2);
    CHECK(ext == rhs);
}

TEST_CASE("isotypic_poincare") {
    CHECK(isotypic_poincare(Partition{6, 6}, 4) ==
          springer_poincare(Partition{2, 2}).shifted(4));
    CHECK(isotypic_poincare(Partition{6, 6}, 4) == poly({0, 0, 0, 0, 1, 3, 2}));
    CHECK(isotypic_poincare(Partition{6, 6}, 1).is_zero());
    CHECK(isotypic_poincare(Partition{4, 3, 1}, 0) == springer_poincare(Partition{4, 3, 1}));
    CHECK(isotypic_poincare(Partition{2, 2}, 2) == poly({0, 1, 1}));
    CHECK_THROWS_AS(isotypic_poincare(Partition{2, 2}, 4), std::invalid_argument);
}

TEST_CASE("isotypic components depend only on gcd(n, i)") {
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (int i = 0; i < n; ++i) {
                for (int i2 = i + 1; i2 < n; ++i2) {
                    if (std::gcd(n, i) == std::gcd(n, i2)) {
                        CHECK(isotypic_poincare(lambda, i) == isotypic_poincare(lambda, i2));
                    }
                }
            }
        }
    }
}

TEST_CASE("equivariant_poincare") {
    const EquivariantPolynomial one_row = equivariant_poincare(Partition{5});
    REQUIRE(one_row.by_char.size() == 5);
    for (const auto& comp : one_row.by_char) CHECK(comp == poly({1}));

    const EquivariantPolynomial e66 = equivariant_poincare(Partition{6, 6});
    for (int i = 0; i < 12; ++i) {
        const bool expected_nonzero = i % 2 == 0;
        CHECK(!e66.by_char[static_cast<std::size_t>(i)].is_zero() == expected_nonzero);
    }

    for (int n = 1; n <= 6; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            const EquivariantPolynomial eq = equivariant_poincare(lambda);
            CHECK(eq.total() == extended_poincare(lambda));
            for (int i = 0; i < n; ++i) {
                CHECK(eq.by_char[static_cast<std::size_t>(i)] ==
                      isotypic_poincare(lambda, i));
            }
        }
    }
}

TEST_CASE("extended_poincare_totient") {
    CHECK(extended_poincare_totient(Partition{2, 2}) ==
          springer_poincare(Partition{2, 2}) + springer_poincare(Partition{1, 1}).shifted(1));
    CHECK(extended_poincare_totient(Partition{4, 3, 1}) ==
          springer_poincare(Partition{4, 3, 1}));
    for (int n = 1; n <= 7; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            CHECK(extended_poincare_totient(lambda) == extended_poincare(lambda));
        }
    }
}

TEST_CASE("euler_totient") {
    CHECK(euler_totient(1) == 1);
    CHECK(euler_totient(2) == 1);
    CHECK(euler_totient(3) == 2);
    CHECK(euler_totient(6) == 2);
    CHECK(euler_totient(12) == 4);
}

TEST_CASE("lusztig_stalk_poincare") {
    const ShiftedPolynomial at0 = lusztig_stalk_poincare(Partition{4, 3, 1}, 0);
    CHECK(at0.shift == nilcone_dim(8));
    CHECK(at0.poly == springer_poincare(Partition{4, 3, 1}));

    const ShiftedPolynomial s = lusztig_stalk_poincare(Partition{6, 6}, 4);
    CHECK(s.shift == 136);
    CHECK(s.poly == springer_poincare(Partition{2, 2}));

    for (int i = 1; i < 8; ++i) {
        CHECK(lusztig_stalk_poincare(Partition{4, 3, 1}, i).poly.is_zero());
    }
}

TEST_CASE("smaller_group_form") {
    const SmallerGroupForm s = smaller_group_form(Partition{6, 6}, 4);
    CHECK(s.shift == 124);  // (132 - 12) + 4
    CHECK(s.base == Partition{2, 2});

    const SmallerGroupForm t = smaller_group_form(Partition{4, 3, 1}, 0);
    CHECK(t.shift == 0);
    CHECK(t.base == Partition{4, 3, 1});

    CHECK_THROWS_AS(smaller_group_form(Partition{6, 6}, 1), std::invalid_argument);

    // consistency with the stalk form: shifts differ by the smaller nilcone
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for (int i = 0; i < n; ++i) {
                const int d = char_divisor(n, i);
                if (!divides(d, lambda)) continue;
                const ShiftedPolynomial full = lusztig_stalk_poincare(lambda, i);
                const SmallerGroupForm small = smaller_group_form(lambda, i);
                CHECK(small.shift + nilcone_dim(n / d) == full.shift);
                CHECK(springer_poincare(small.base) == full.poly);
            }
        }
    }
}

TEST_CASE("extended_cells") {
    const auto one_row = extended_cells(Partition{4});
    REQUIRE(one_row.size() == 4);
    for (const auto& cell : one_row) CHECK(cell.dim == 0);
    // a single orbit of size n under the center
    ExtendedCell cur = one_row[0];
    for (int step = 1; step < 4; ++step) {
        cur = z_shift(cur);
        CHECK(cur.r == step);
    }
    CHECK(z_shift(cur).r == 0);

    const auto small = extended_cells(Partition{2, 1});
    REQUIRE(small.size() == 3);
    std::vector<std::int64_t> dims;
    for (const auto& cell : small) {
        dims.push_back(cell.dim);
        CHECK(cell.r == 0);
    }
    std::sort(dims.begin(), dims.end());
    CHECK(dims == std::vector<std::int64_t>{0, 1, 1});

    for (int n = 1; n <= 6; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            CHECK(static_cast<std::int64_t>(extended_cells(lambda).size()) ==
                  extended_poincare(lambda).at_one());
        }
    }
}

TEST_CASE("char_divisor") {
    CHECK(char_divisor(12, 4) == 3);
    CHECK(char_divisor(9, 0) == 1);
    CHECK(char_divisor(12, 5) == 12);
    CHECK_THROWS_AS(char_divisor(12, 12), std::invalid_argument);

    // divisibility pivot: for a | n, n/a | i exactly when char_divisor | a
    for (int n = 1; n <= 24; ++n) {
        for (int a = 1; a <= n; ++a) {
            if (n % a != 0) continue;
            for (int i = 0; i < n; ++i) {
                CHECK((i % (n / a) == 0) == (a % char_divisor(n, i) == 0));
            }
        }
    }
}
