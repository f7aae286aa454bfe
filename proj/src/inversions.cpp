#include "springer/inversions.hpp"

#include <algorithm>

namespace springer {

namespace {

// Condition (2): if the box directly right of j holds r, require i < r.
bool right_neighbor_allows(const RowStrictTableau& sigma, int i, int j) {
    const BoxPos pj = sigma.position_of(j);
    if (pj.col < sigma.row_length(pj.row)) {
        return i < sigma.entry(pj.row, pj.col + 1);
    }
    return true;  // j ends its row
}

PairSet collect(const RowStrictTableau& sigma, PairKind kind) {
    PairSet out;
    out.kind = kind;
    const int n = sigma.n();
    for (int i = n; i >= 2; --i) {
        const BoxPos pi = sigma.position_of(i);
        for (int j = i - 1; j >= 1; --j) {
            const BoxPos pj = sigma.position_of(j);
            bool placed;
            if (kind == PairKind::Inversions) {
                placed = (pi.col == pj.col && pi.row > pj.row) || pi.col < pj.col;
            } else {
                placed = pi.col <= pj.col;
            }
            if (placed && right_neighbor_allows(sigma, i, j)) {
                out.pairs.emplace_back(i, j);
            }
        }
    }
    return out;  // already descending by i, then by j
}

std::int64_t count_only(const RowStrictTableau& sigma, PairKind kind) {
    std::int64_t count = 0;
    const int n = sigma.n();
    for (int i = n; i >= 2; --i) {
        const BoxPos pi = sigma.position_of(i);
        for (int j = i - 1; j >= 1; --j) {
            const BoxPos pj = sigma.position_of(j);
            bool placed;
            if (kind == PairKind::Inversions) {
                placed = (pi.col == pj.col && pi.row > pj.row) || pi.col < pj.col;
            } else {
                placed = pi.col <= pj.col;
            }
            if (placed && right_neighbor_allows(sigma, i, j)) ++count;
        }
    }
    return count;
}

}  // namespace

bool PairSet::contains(int i, int j) const {
    const auto key = std::make_pair(i, j);
    return std::binary_search(pairs.begin(), pairs.end(), key,
                              [](const auto& a, const auto& b) { return a > b; });
}

PairSet springer_inversions(const RowStrictTableau& sigma) {
    return collect(sigma, PairKind::Inversions);
}

std::int64_t inversion_count(const RowStrictTableau& sigma) {
    return count_only(sigma, PairKind::Inversions);
}

PairSet springer_pairs(const RowStrictTableau& sigma) {
    return collect(sigma, PairKind::Pairs);
}

std::int64_t pair_count(const RowStrictTableau& sigma) {
    return count_only(sigma, PairKind::Pairs);
}

PairSet i_tilde(const RowStrictTableau& sigma) {
    PairSet out;
    out.kind = PairKind::Inversions;
    const IjkDecomposition ijk = ijk_decomposition(sigma);
    for (auto it = ijk.I.rbegin(); it != ijk.I.rend(); ++it) {
        const int i = *it;
        const BoxPos succ = sigma.position_of(i + 1);
        out.pairs.emplace_back(i, sigma.entry(succ.row, succ.col - 1));
    }
    return out;
}

}  // namespace springer
