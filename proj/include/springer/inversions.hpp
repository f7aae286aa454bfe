#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "springer/tableau.hpp"

namespace springer {

enum class PairKind { Inversions, Pairs };

/// Set of pairs (i, j) with n >= i > j >= 1, stored descending by i, then by
/// j.  An inversion set is always a subset of the pair set of the same
/// tableau.
struct PairSet {
    PairKind kind = PairKind::Inversions;
    std::vector<std::pair<int, int>> pairs;

    std::int64_t size() const { return static_cast<std::int64_t>(pairs.size()); }
    bool contains(int i, int j) const;
    bool operator==(const PairSet& o) const { return kind == o.kind && pairs == o.pairs; }
};

// A pair (i, j) with i > j is an inversion of sigma when
//   (1) i sits in the same column as j and strictly below it, or in any
//       column strictly to the left of j's column (any row), and
//   (2) if the box directly right of j holds r, then i < r (vacuous when j
//       ends its row).
// Pairs relax (1): i in the same column as j (any row) or strictly left.
// Same-row pairs never qualify: row-strictness forces i to the right of j.

PairSet springer_inversions(const RowStrictTableau& sigma);
std::int64_t inversion_count(const RowStrictTableau& sigma);

PairSet springer_pairs(const RowStrictTableau& sigma);
std::int64_t pair_count(const RowStrictTableau& sigma);

/// The inversions (i, l(i+1)) for i in I_sigma, where l(i+1) is the entry
/// directly left of i+1.  Subset of springer_inversions(sigma) of size |I|.
PairSet i_tilde(const RowStrictTableau& sigma);

}  // namespace springer
