#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "springer/partition.hpp"

namespace springer {

// Conventions used throughout:
//   * Young diagrams are drawn in the English orientation: rows are left
//     justified, row lengths weakly decrease from top to bottom.
//   * Rows and columns are 1-based; row 1 is the top row.
//   * A row-strict tableau is a filling by 1..n, each exactly once, with
//     entries strictly increasing left to right along each row.
//   * The base filling places 1..n column by column, left to right, filling
//     each column bottom to top.

/// Row and column of a box, 1-based.
struct BoxPos {
    int row = 0;
    int col = 0;
    bool operator==(const BoxPos& o) const { return row == o.row && col == o.col; }
};

class RowStrictTableau {
public:
    /// Builds a tableau from its rows (top to bottom) and validates the
    /// row-strict invariants.
    explicit RowStrictTableau(std::vector<std::vector<int>> rows);

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int n() const { return shape_.n(); }

    /// Entry in the given box, 1-based coordinates.
    int entry(int row, int col) const {
        return rows_.at(static_cast<std::size_t>(row - 1)).at(static_cast<std::size_t>(col - 1));
    }

    /// Box holding the given entry.
    BoxPos position_of(int e) const { return pos_.at(static_cast<std::size_t>(e - 1)); }

    /// Length of the given row (0 when the row does not exist).
    int row_length(int row) const {
        return row >= 1 && row <= shape_.length() ? shape_.part(row) : 0;
    }

    bool operator==(const RowStrictTableau& other) const { return rows_ == other.rows_; }
    bool operator!=(const RowStrictTableau& other) const { return !(*this == other); }

private:
    Partition shape_;
    std::vector<std::vector<int>> rows_;
    std::vector<BoxPos> pos_;  // pos_[e-1] = box of entry e
};

/// The splitting of [n-1] determined by where i+1 sits relative to i:
///   J : i+1 directly right of i (same row, next column);
///   I : i+1 in the column directly right of i's column and a strictly
///       higher row, or in any column at least two to the right;
///   K : everything else.
struct IjkDecomposition {
    std::vector<int> I, J, K;  // each sorted ascending
};

/// Defining data of the toric slice attached to a cell: n together with a
/// decomposition of [n-1] into disjoint (possibly empty) sets I, J, K.
/// The slice is cut out by x_j = 1 for j in J and x_k = 0 for k in K, with
/// free coordinates indexed by I.
struct ToricFrame {
    ToricFrame(int n, std::vector<int> I, std::vector<int> J, std::vector<int> K);

    int n;
    std::vector<int> I, J, K;  // sorted ascending, disjoint, union = [n-1]

    bool operator==(const ToricFrame& o) const {
        return n == o.n && I == o.I && J == o.J && K == o.K;
    }
};

/// Maximal run of consecutive boxes in one row carrying consecutive labels
/// first..last.
struct Block {
    int row = 0;    // row containing the block
    int col = 0;    // column of the leftmost box
    int first = 0;  // smallest label
    int last = 0;   // largest label
    int length() const { return last - first + 1; }
    bool operator==(const Block& o) const {
        return row == o.row && col == o.col && first == o.first && last == o.last;
    }
};

/// Visits every row-strict tableau of the given shape exactly once, in
/// lexicographic order of the row-reading word (rows concatenated top to
/// bottom).  There are n!/prod(parts!) of them.
void for_each_rst(const Partition& shape,
                  const std::function<void(const RowStrictTableau&)>& fn);

/// Materialized enumeration, same canonical order as for_each_rst.
std::vector<RowStrictTableau> enumerate_rst(const Partition& shape);

/// Number of row-strict tableaux of the given shape: n!/prod(parts!).
std::int64_t rst_count(const Partition& shape);

RowStrictTableau base_filling(const Partition& shape);

IjkDecomposition ijk_decomposition(const RowStrictTableau& sigma);

/// Blocks of the tableau, sorted by first label.  They partition the boxes;
/// boundaries fall exactly after each element of I union K and at row ends.
std::vector<Block> blocks(const RowStrictTableau& sigma);

/// The maximal divisor d of sigma, i.e. the largest d such that sigma splits
/// into blocks of size d.  Equals gcd(i : i in I union K union {n}).
int max_divisor(const RowStrictTableau& sigma);

/// All d such that sigma splits into blocks of size exactly d, ascending;
/// these are the divisors of max_divisor(sigma).
std::vector<int> divisor_set(const RowStrictTableau& sigma);

/// Quotient tableau sigma/d: size-d blocks are merged and the block holding
/// labels (m-1)d+1 .. md is relabeled m.  Requires d in divisor_set(sigma).
RowStrictTableau quotient_tableau(const RowStrictTableau& sigma, int d);

/// Sorts each column so entries increase top to bottom.  The column contents
/// are preserved, and the result is always standard.
RowStrictTableau standardize(const RowStrictTableau& sigma);

/// True iff rows increase strictly rightward and columns increase strictly
/// downward.
bool is_standard(const RowStrictTableau& sigma);

/// One-line word of w_sigma^{-1}: the entries of sigma listed in base-filling
/// box order (columns left to right, each column bottom to top).  The
/// permutation w_sigma sends p to q when p sits in the box labeled q in the
/// base filling.
std::vector<int> w_sigma(const RowStrictTableau& sigma);

/// Matrix positions (l, r) such that r labels the box directly to the right
/// of l in the base filling; sum of E_{l,r} over these is the nilpotent
/// matrix of Jordan type lambda used to pin the fiber.  Sorted ascending.
std::vector<std::pair<int, int>> x_lambda_positions(const Partition& shape);

/// The frame (n, I_sigma, J_sigma, K_sigma) of the cell attached to sigma.
ToricFrame cell_frame(const RowStrictTableau& sigma);

}  // namespace springer
