#include <stdexcept>

#include "doctest.h"
#include "springer/formats.hpp"
#include "springer/inversions.hpp"
#include "springer/toric.hpp"

using namespace springer;
using nlohmann::json;

TEST_CASE("partition text parsing") {
    CHECK(parse_partition("4,4,2,2") == Partition{4, 4, 2, 2});
    CHECK(parse_partition("4^2,2^2") == Partition{4, 4, 2, 2});
    CHECK(parse_partition("4^2,2,2") == Partition{4, 4, 2, 2});
    CHECK(parse_partition(" 4 , 3 ") == Partition{4, 3});
    CHECK(to_text(Partition{4, 4, 2, 2}) == "4,4,2,2");
    CHECK(parse_partition(to_text(Partition{5, 3, 1})) == Partition{5, 3, 1});

    CHECK_THROWS_WITH_AS(parse_partition("4,x"),
                         "invalid partition token 'x'", std::invalid_argument);
    CHECK_THROWS_AS(parse_partition(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("4,"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("4^0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_partition("4^x"), std::invalid_argument);
}

TEST_CASE("tableau text parsing") {
    const RowStrictTableau t = parse_tableau("3,4,5,6/1,2,9,10/7,8/11,12");
    CHECK(t == RowStrictTableau{{{3, 4, 5, 6}, {1, 2, 9, 10}, {7, 8}, {11, 12}}});
    CHECK(to_text(t) == "3,4,5,6/1,2,9,10/7,8/11,12");
    CHECK(parse_tableau(to_text(t)) == t);

    CHECK_THROWS_WITH_AS(parse_tableau("1,2/a"),
                         "invalid tableau entry token 'a'", std::invalid_argument);
    CHECK_THROWS_AS(parse_tableau("1,2/2"), std::invalid_argument);
}

TEST_CASE("JSON round trips") {
    const Partition lambda{4, 4, 2, 2};
    CHECK(partition_from_json(partition_to_json(lambda)) == lambda);

    const RowStrictTableau t = parse_tableau("3,4,5,6/1,2,9,10/7,8/11,12");
    CHECK(tableau_from_json(tableau_to_json(t)) == t);
    CHECK(tableau_to_json(t)["shape"] == json::array({4, 4, 2, 2}));

    const PairSet inv = springer_inversions(t);
    CHECK(pairset_from_json(pairset_to_json(inv)) == inv);
    CHECK(pairset_to_json(inv)["kind"] == "inv");
    const PairSet prs = springer_pairs(t);
    CHECK(pairset_to_json(prs)["kind"] == "pairs");
    CHECK(pairset_from_json(pairset_to_json(prs)) == prs);

    const ToricFrame frame(12, {10}, {1, 2, 3, 5, 6, 7, 9, 11}, {4, 8});
    CHECK(frame_from_json(frame_to_json(frame)) == frame);

    const auto [J, c] = ctuple_from_json(ctuple_to_json({1, 3}, {2, 0}));
    CHECK(J == std::vector<int>{1, 3});
    CHECK(c == std::vector<int>{2, 0});

    const ExponentVector b{6, {1, 2, 3, 1, 5}};
    CHECK(exponents_from_json(exponents_to_json(b)) == b);

    const IntPolynomial p({1, 2, 0, 1});
    CHECK(polynomial_from_json(polynomial_to_json(p)) == p);
    CHECK(polynomial_from_json(polynomial_to_json(IntPolynomial{})).is_zero());

    const EquivariantPolynomial eq = equivariant_poincare(Partition{2, 2});
    CHECK(equivariant_from_json(equivariant_to_json(eq)) == eq);

    const ShiftedPolynomial sh{4, p};
    CHECK(shifted_from_json(shifted_to_json(sh)) == sh);
}

TEST_CASE("JSON validation errors") {
    CHECK_THROWS_AS(partition_from_json(json{{"wrong", 1}}), std::invalid_argument);
    CHECK_THROWS_AS(pairset_from_json(json{{"kind", "bogus"}, {"pairs", json::array()}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(
        tableau_from_json(json{{"shape", {3, 1}}, {"rows", {{1, 2}, {3}}}}),
        std::invalid_argument);  // shape disagrees with rows
    CHECK_THROWS_AS(pairset_from_json(
                        json{{"kind", "inv"}, {"pairs", json::array({json::array({1, 2})})}}),
                    std::invalid_argument);  // i <= j
}

TEST_CASE("latex rendering") {
    CHECK(to_latex(IntPolynomial{}) == "0");
    CHECK(to_latex(IntPolynomial({5})) == "5");
    CHECK(to_latex(IntPolynomial({0, 1})) == "t");
    CHECK(to_latex(IntPolynomial({1, 2, 0, 1})) == "1 + 2t + t^{3}");
    CHECK(to_latex(IntPolynomial({0, 0, 3})) == "3t^{2}");
}

TEST_CASE("csv rendering") {
    CHECK(to_csv(IntPolynomial({1, 0, 2})) == "degree,coefficient\n0,1\n1,0\n2,2\n");
    CHECK(to_csv(IntPolynomial{}) == "degree,coefficient\n");
}
