#include <set>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "springer/formats.hpp"
#include "springer/inversions.hpp"
#include "springer/tableau.hpp"
#include "springer/verify.hpp"

using namespace springer;

namespace {

const RowStrictTableau kExample4422{{{3, 4, 5, 6}, {1, 2, 9, 10}, {7, 8}, {11, 12}}};
const RowStrictTableau kExample642{{{1, 2, 3, 4, 11, 12}, {5, 6, 7, 8}, {9, 10}}};

}  // namespace

TEST_CASE("tableau validation") {
    CHECK_THROWS_AS(RowStrictTableau({{1, 2}, {2}}), std::invalid_argument);   // repeat
    CHECK_THROWS_AS(RowStrictTableau({{2, 1}, {3}}), std::invalid_argument);   // not strict
    CHECK_THROWS_AS(RowStrictTableau({{1}, {2, 3}}), std::invalid_argument);   // bad shape
    CHECK_THROWS_AS(RowStrictTableau({{1, 5}, {2}}), std::invalid_argument);   // out of range
    CHECK_THROWS_AS(RowStrictTableau({{1, 2}, {}}), std::invalid_argument);    // empty row
    const RowStrictTableau t{{{1, 3}, {2}}};
    CHECK(t.n() == 3);
    CHECK(t.entry(1, 2) == 3);
    CHECK(t.position_of(2) == BoxPos{2, 1});
    CHECK(t.row_length(1) == 2);
    CHECK(t.row_length(3) == 0);
}

TEST_CASE("enumerate_rst on [2,1] gives the three tableaux in reading-word order") {
    const auto all = enumerate_rst(Partition{2, 1});
    REQUIRE(all.size() == 3);
    CHECK(all[0] == RowStrictTableau{{{1, 2}, {3}}});
    CHECK(all[1] == RowStrictTableau{{{1, 3}, {2}}});
    CHECK(all[2] == RowStrictTableau{{{2, 3}, {1}}});
}

TEST_CASE("enumerate_rst counts") {
    CHECK(enumerate_rst(Partition{6}).size() == 1);
    CHECK(enumerate_rst(Partition{4, 3, 1}).size() == 280);
    for (int n = 1; n <= 7; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            const auto all = enumerate_rst(lambda);
            CHECK(static_cast<std::int64_t>(all.size()) == rst_count(lambda));
            std::set<std::string> texts;
            std::string prev;
            for (const auto& t : all) {
                texts.insert(to_text(t));
                CHECK(t.shape() == lambda);
            }
            CHECK(texts.size() == all.size());
        }
    }
}

TEST_CASE("enumeration order is lexicographic on the reading word") {
    std::vector<int> prev;
    for_each_rst(Partition{3, 2, 1}, [&](const RowStrictTableau& t) {
        std::vector<int> word;
        for (const auto& row : t.rows()) word.insert(word.end(), row.begin(), row.end());
        if (!prev.empty()) CHECK(prev < word);
        prev = word;
    });
}

TEST_CASE("base_filling") {
    CHECK(base_filling(Partition{4, 3, 1}) ==
          RowStrictTableau{{{3, 5, 7, 8}, {2, 4, 6}, {1}}});
    CHECK(base_filling(Partition{5}) == RowStrictTableau{{{1, 2, 3, 4, 5}}});
    CHECK(base_filling(Partition{2, 2}) == RowStrictTableau{{{2, 4}, {1, 3}}});
}

TEST_CASE("ijk_decomposition on the worked examples") {
    const IjkDecomposition a = ijk_decomposition(kExample4422);
    CHECK(a.I == std::vector<int>{8});
    CHECK(a.J == std::vector<int>{1, 3, 4, 5, 7, 9, 11});
    CHECK(a.K == std::vector<int>{2, 6, 10});

    const IjkDecomposition b = ijk_decomposition(kExample642);
    CHECK(b.I == std::vector<int>{10});
    CHECK(b.J == std::vector<int>{1, 2, 3, 5, 6, 7, 9, 11});
    CHECK(b.K == std::vector<int>{4, 8});

    const IjkDecomposition c =
        ijk_decomposition(RowStrictTableau{{{2}, {3}, {1}, {4}}});
    CHECK(c.J.empty());  // single-column shapes never put i+1 to the right
}

TEST_CASE("ijk sets are disjoint and cover, exhaustively") {
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for_each_rst(lambda, [&](const RowStrictTableau& sigma) {
                const IjkDecomposition d = ijk_decomposition(sigma);
                std::vector<int> all = d.I;
                all.insert(all.end(), d.J.begin(), d.J.end());
                all.insert(all.end(), d.K.begin(), d.K.end());
                std::sort(all.begin(), all.end());
                std::vector<int> expect;
                for (int i = 1; i <= n - 1; ++i) expect.push_back(i);
                CHECK(all == expect);
            });
        }
    }
}

TEST_CASE("blocks") {
    const auto bl = blocks(kExample4422);
    REQUIRE(bl.size() == 5);
    CHECK(bl[0] == Block{2, 1, 1, 2});
    CHECK(bl[1] == Block{1, 1, 3, 6});
    CHECK(bl[2] == Block{3, 1, 7, 8});
    CHECK(bl[3] == Block{2, 3, 9, 10});
    CHECK(bl[4] == Block{4, 1, 11, 12});

    CHECK(blocks(RowStrictTableau{{{1, 2, 3, 4}}}).size() == 1);
    CHECK(blocks(RowStrictTableau{{{1, 3}, {2}}}).size() == 3);  // all singletons
}

TEST_CASE("max_divisor and divisor_set") {
    CHECK(max_divisor(kExample4422) == 2);
    CHECK(max_divisor(kExample642) == 2);
    CHECK(max_divisor(RowStrictTableau{{{2}, {3}, {1}, {4}}}) == 1);
    CHECK(divisor_set(kExample4422) == std::vector<int>{1, 2});
    CHECK(divisor_set(RowStrictTableau{{{1, 2, 3, 4, 5, 6}}}) ==
          std::vector<int>{1, 2, 3, 6});
    CHECK(divisor_set(RowStrictTableau{{{1, 3}, {2}}}) == std::vector<int>{1});
}

TEST_CASE("quotient_tableau") {
    CHECK(quotient_tableau(kExample4422, 2) ==
          RowStrictTableau{{{2, 3}, {1, 5}, {4}, {6}}});
    CHECK(quotient_tableau(kExample4422, 1) == kExample4422);
    CHECK(quotient_tableau(kExample642, 2) ==
          RowStrictTableau{{{1, 2, 6}, {3, 4}, {5}}});
    CHECK_THROWS_AS(quotient_tableau(RowStrictTableau{{{1, 3}, {2}}}, 2),
                    std::invalid_argument);
}

TEST_CASE("quotient composes multiplicatively") {
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for_each_rst(lambda, [&](const RowStrictTableau& sigma) {
                for (int d : divisor_set(sigma)) {
                    const RowStrictTableau q = quotient_tableau(sigma, d);
                    for (int e : divisor_set(q)) {
                        if (max_divisor(sigma) % (d * e) != 0) continue;
                        CHECK(quotient_tableau(q, e) == quotient_tableau(sigma, d * e));
                    }
                }
            });
        }
    }
}

TEST_CASE("standardize") {
    CHECK(standardize(RowStrictTableau{{{2, 3}, {1}}}) ==
          RowStrictTableau{{{1, 3}, {2}}});
    const RowStrictTableau std_t{{{1, 2}, {3, 4}}};
    CHECK(standardize(std_t) == std_t);

    for (int n = 1; n <= 6; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            const std::int64_t dim = springer_dim(lambda);
            for_each_rst(lambda, [&](const RowStrictTableau& sigma) {
                const RowStrictTableau s = standardize(sigma);
                CHECK(is_standard(s));
                CHECK(standardize(s) == s);
                // column contents preserved
                for (int c = 1; c <= lambda.part(1); ++c) {
                    std::multiset<int> before, after;
                    for (int r = 1; r <= lambda.length(); ++r) {
                        if (sigma.row_length(r) >= c) {
                            before.insert(sigma.entry(r, c));
                            after.insert(s.entry(r, c));
                        }
                    }
                    CHECK(before == after);
                }
                // standardization carries the pair statistic to the dimension
                CHECK(inversion_count(s) == pair_count(sigma));
                CHECK(inversion_count(s) == dim);
            });
        }
    }
}

TEST_CASE("is_standard") {
    CHECK(is_standard(RowStrictTableau{{{1, 2}, {3}}}));
    CHECK_FALSE(is_standard(RowStrictTableau{{{2, 3}, {1}}}));
    CHECK_FALSE(is_standard(base_filling(Partition{4, 3, 1})));
    CHECK(is_standard(RowStrictTableau{{{1, 2, 3, 4}}}));
}

TEST_CASE("standard tableaux are counted by the hook length formula") {
    for (int n = 1; n <= 7; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            std::int64_t count = 0;
            for_each_rst(lambda, [&](const RowStrictTableau& sigma) {
                if (is_standard(sigma)) ++count;
            });
            CHECK(count == hook_length_count(lambda));
        }
    }
}

TEST_CASE("w_sigma") {
    CHECK(w_sigma(kExample4422) ==
          std::vector<int>{11, 7, 1, 3, 12, 8, 2, 4, 9, 5, 10, 6});
    CHECK(w_sigma(RowStrictTableau{{{1, 3}, {2}}}) == std::vector<int>{2, 1, 3});

    for (int n = 1; n <= 6; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            std::vector<int> identity;
            for (int i = 1; i <= n; ++i) identity.push_back(i);
            CHECK(w_sigma(base_filling(lambda)) == identity);
            for_each_rst(lambda, [&](const RowStrictTableau& sigma) {
                std::vector<int> word = w_sigma(sigma);
                std::sort(word.begin(), word.end());
                CHECK(word == identity);  // bijection on [n]
            });
        }
    }
}

TEST_CASE("word inversions of w_sigma are exactly the placement pairs") {
    for (int n = 1; n <= 6; ++n) {
        for (const Partition& lambda : partitions_of(n)) {
            for_each_rst(lambda, [&](const RowStrictTableau& sigma) {
                CHECK(test_oracles::word_inversions(w_sigma(sigma)) ==
                      test_oracles::placement_pairs(sigma));
            });
        }
    }
}

TEST_CASE("x_lambda_positions") {
    CHECK(x_lambda_positions(Partition{4, 3, 1}) ==
          std::vector<std::pair<int, int>>{{2, 4}, {3, 5}, {4, 6}, {5, 7}, {7, 8}});
    CHECK(x_lambda_positions(Partition{1, 1, 1, 1}).empty());
    CHECK(x_lambda_positions(Partition{4}) ==
          std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {3, 4}});
}

TEST_CASE("cell_frame") {
    const ToricFrame f = cell_frame(kExample642);
    CHECK(f.n == 12);
    CHECK(f.I == std::vector<int>{10});
    CHECK(f.J == std::vector<int>{1, 2, 3, 5, 6, 7, 9, 11});
    CHECK(f.K == std::vector<int>{4, 8});

    const ToricFrame g = cell_frame(RowStrictTableau{{{1, 2, 3, 4, 5}}});
    CHECK(g.I.empty());
    CHECK(g.K.empty());
    CHECK(g.J == std::vector<int>{1, 2, 3, 4});
}

TEST_CASE("toric frame validation") {
    CHECK_THROWS_AS(ToricFrame(4, {1}, {1}, {2, 3}), std::invalid_argument);  // overlap
    CHECK_THROWS_AS(ToricFrame(4, {1}, {2}, {}), std::invalid_argument);      // missing 3
    CHECK_THROWS_AS(ToricFrame(4, {5}, {1, 2, 3}, {}), std::invalid_argument);
    const ToricFrame ok(4, {3, 1}, {2}, {});
    CHECK(ok.I == std::vector<int>{1, 3});  // sorted on construction
}
