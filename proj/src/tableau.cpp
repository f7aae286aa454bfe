#include "springer/tableau.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace springer {

namespace {

Partition shape_of_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) {
        throw std::invalid_argument("tableau must have at least one row");
    }
    std::vector<int> lengths;
    lengths.reserve(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].empty()) {
            throw std::invalid_argument("tableau row " + std::to_string(r + 1) + " is empty");
        }
        if (r > 0 && rows[r].size() > rows[r - 1].size()) {
            throw std::invalid_argument("tableau row lengths must weakly decrease");
        }
        lengths.push_back(static_cast<int>(rows[r].size()));
    }
    return Partition(std::move(lengths));
}

}  // namespace

RowStrictTableau::RowStrictTableau(std::vector<std::vector<int>> rows)
    : shape_(shape_of_rows(rows)), rows_(std::move(rows)) {
    const int n = shape_.n();
    pos_.assign(static_cast<std::size_t>(n), BoxPos{});
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& row = rows_[r];
        for (std::size_t c = 0; c < row.size(); ++c) {
            int e = row[c];
            if (e < 1 || e > n) {
                throw std::invalid_argument("tableau entry " + std::to_string(e) +
                                            " out of range 1.." + std::to_string(n));
            }
            if (seen[static_cast<std::size_t>(e)]) {
                throw std::invalid_argument("tableau entry " + std::to_string(e) + " repeated");
            }
            seen[static_cast<std::size_t>(e)] = 1;
            if (c > 0 && row[c - 1] >= e) {
                throw std::invalid_argument("row " + std::to_string(r + 1) +
                                            " is not strictly increasing");
            }
            pos_[static_cast<std::size_t>(e - 1)] =
                BoxPos{static_cast<int>(r + 1), static_cast<int>(c + 1)};
        }
    }
}

ToricFrame::ToricFrame(int n_, std::vector<int> I_, std::vector<int> J_, std::vector<int> K_)
    : n(n_), I(std::move(I_)), J(std::move(J_)), K(std::move(K_)) {
    if (n < 1) {
        throw std::invalid_argument("frame requires n >= 1, got " + std::to_string(n));
    }
    std::sort(I.begin(), I.end());
    std::sort(J.begin(), J.end());
    std::sort(K.begin(), K.end());
    std::vector<char> mark(static_cast<std::size_t>(n), 0);  // mark[i] for i in [1, n-1]
    auto absorb = [&](const std::vector<int>& set, const char* name) {
        for (int i : set) {
            if (i < 1 || i > n - 1) {
                throw std::invalid_argument(std::string(name) + " contains " +
                                            std::to_string(i) + ", outside 1.." +
                                            std::to_string(n - 1));
            }
            if (mark[static_cast<std::size_t>(i)]) {
                throw std::invalid_argument("frame sets are not disjoint at " +
                                            std::to_string(i));
            }
            mark[static_cast<std::size_t>(i)] = 1;
        }
    };
    absorb(I, "I");
    absorb(J, "J");
    absorb(K, "K");
    for (int i = 1; i <= n - 1; ++i) {
        if (!mark[static_cast<std::size_t>(i)]) {
            throw std::invalid_argument("frame sets must cover 1.." + std::to_string(n - 1) +
                                        "; missing " + std::to_string(i));
        }
    }
}

void for_each_rst(const Partition& shape,
                  const std::function<void(const RowStrictTableau&)>& fn) {
    const int n = shape.n();
    const int num_rows = shape.length();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(num_rows));
    for (int r = 0; r < num_rows; ++r) {
        rows[static_cast<std::size_t>(r)].assign(
            static_cast<std::size_t>(shape.parts()[static_cast<std::size_t>(r)]), 0);
    }
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);

    // Rows are filled top to bottom, each row as an increasing sequence of
    // still-unused labels chosen smallest-first, so the reading words come
    // out in lexicographic order.
    std::function<void(int, int, int)> fill = [&](int r, int c, int min_label) {
        if (r == num_rows) {
            fn(RowStrictTableau(rows));
            return;
        }
        auto& row = rows[static_cast<std::size_t>(r)];
        const int len = static_cast<int>(row.size());
        if (c == len) {
            fill(r + 1, 0, 1);
            return;
        }
        // Entries after position c must exist, so leave enough labels.
        for (int e = min_label; e <= n - (len - 1 - c); ++e) {
            if (used[static_cast<std::size_t>(e)]) continue;
            used[static_cast<std::size_t>(e)] = 1;
            row[static_cast<std::size_t>(c)] = e;
            fill(r, c + 1, e + 1);
            used[static_cast<std::size_t>(e)] = 0;
        }
    };
    fill(0, 0, 1);
}

std::vector<RowStrictTableau> enumerate_rst(const Partition& shape) {
    std::vector<RowStrictTableau> out;
    if (shape.n() <= 20) {
        out.reserve(static_cast<std::size_t>(std::min<std::int64_t>(rst_count(shape), 1 << 20)));
    }
    for_each_rst(shape, [&](const RowStrictTableau& t) { out.push_back(t); });
    return out;
}

std::int64_t rst_count(const Partition& shape) {
    if (shape.n() > 20) {
        throw std::invalid_argument("rst_count overflows 64 bits beyond n = 20");
    }
    auto factorial = [](int m) {
        std::int64_t f = 1;
        for (int i = 2; i <= m; ++i) f *= i;
        return f;
    };
    std::int64_t count = factorial(shape.n());
    for (int p : shape.parts()) count /= factorial(p);
    return count;
}

RowStrictTableau base_filling(const Partition& shape) {
    const int num_rows = shape.length();
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(num_rows));
    for (int r = 0; r < num_rows; ++r) {
        rows[static_cast<std::size_t>(r)].assign(
            static_cast<std::size_t>(shape.parts()[static_cast<std::size_t>(r)]), 0);
    }
    int label = 1;
    const int num_cols = shape.parts()[0];
    for (int c = 1; c <= num_cols; ++c) {
        int height = 0;  // number of rows whose length reaches column c
        while (height < num_rows && shape.parts()[static_cast<std::size_t>(height)] >= c) {
            ++height;
        }
        for (int r = height; r >= 1; --r) {
            rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)] = label++;
        }
    }
    return RowStrictTableau(std::move(rows));
}

IjkDecomposition ijk_decomposition(const RowStrictTableau& sigma) {
    IjkDecomposition out;
    const int n = sigma.n();
    for (int i = 1; i <= n - 1; ++i) {
        const BoxPos a = sigma.position_of(i);
        const BoxPos b = sigma.position_of(i + 1);
        if (b.row == a.row && b.col == a.col + 1) {
            out.J.push_back(i);
        } else if ((b.col == a.col + 1 && b.row < a.row) || b.col >= a.col + 2) {
            out.I.push_back(i);
        } else {
            out.K.push_back(i);
        }
    }
    return out;
}

std::vector<Block> blocks(const RowStrictTableau& sigma) {
    std::vector<Block> out;
    const auto& rows = sigma.rows();
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        std::size_t c = 0;
        while (c < row.size()) {
            std::size_t start = c;
            while (c + 1 < row.size() && row[c + 1] == row[c] + 1) ++c;
            out.push_back(Block{static_cast<int>(r + 1), static_cast<int>(start + 1),
                                row[start], row[c]});
            ++c;
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Block& a, const Block& b) { return a.first < b.first; });
    return out;
}

int max_divisor(const RowStrictTableau& sigma) {
    const IjkDecomposition ijk = ijk_decomposition(sigma);
    int g = sigma.n();
    for (int i : ijk.I) g = std::gcd(g, i);
    for (int k : ijk.K) g = std::gcd(g, k);
    return g;
}

std::vector<int> divisor_set(const RowStrictTableau& sigma) {
    const int d_max = max_divisor(sigma);
    std::vector<int> out;
    for (int d = 1; d <= d_max; ++d) {
        if (d_max % d == 0) out.push_back(d);
    }
    return out;
}

RowStrictTableau quotient_tableau(const RowStrictTableau& sigma, int d) {
    if (d < 1 || max_divisor(sigma) % d != 0) {
        throw std::invalid_argument(std::to_string(d) + " is not a divisor of the tableau");
    }
    std::vector<std::vector<int>> out;
    out.reserve(sigma.rows().size());
    for (const auto& row : sigma.rows()) {
        std::vector<int> qrow;
        qrow.reserve(row.size() / static_cast<std::size_t>(d));
        for (std::size_t c = 0; c < row.size(); c += static_cast<std::size_t>(d)) {
            const int first = row[c];
            for (int off = 1; off < d; ++off) {
                if (row[c + static_cast<std::size_t>(off)] != first + off) {
                    throw std::logic_error("tableau does not split into blocks of size " +
                                           std::to_string(d));
                }
            }
            if ((first - 1) % d != 0) {
                throw std::logic_error("block start " + std::to_string(first) +
                                       " misaligned for divisor " + std::to_string(d));
            }
            qrow.push_back((first - 1) / d + 1);
        }
        out.push_back(std::move(qrow));
    }
    return RowStrictTableau(std::move(out));
}

RowStrictTableau standardize(const RowStrictTableau& sigma) {
    std::vector<std::vector<int>> rows = sigma.rows();
    const int num_cols = sigma.shape().parts()[0];
    for (int c = 0; c < num_cols; ++c) {
        std::vector<int> column;
        for (const auto& row : rows) {
            if (static_cast<std::size_t>(c) < row.size()) {
                column.push_back(row[static_cast<std::size_t>(c)]);
            }
        }
        std::sort(column.begin(), column.end());
        for (std::size_t r = 0; r < column.size(); ++r) {
            rows[r][static_cast<std::size_t>(c)] = column[r];
        }
    }
    return RowStrictTableau(std::move(rows));
}

bool is_standard(const RowStrictTableau& sigma) {
    const auto& rows = sigma.rows();
    for (std::size_t r = 0; r + 1 < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r + 1].size(); ++c) {
            if (rows[r][c] >= rows[r + 1][c]) return false;
        }
    }
    return true;
}

std::vector<int> w_sigma(const RowStrictTableau& sigma) {
    const Partition& shape = sigma.shape();
    std::vector<int> word;
    word.reserve(static_cast<std::size_t>(shape.n()));
    const int num_rows = shape.length();
    const int num_cols = shape.parts()[0];
    for (int c = 1; c <= num_cols; ++c) {
        int height = 0;
        while (height < num_rows && shape.parts()[static_cast<std::size_t>(height)] >= c) {
            ++height;
        }
        for (int r = height; r >= 1; --r) {
            word.push_back(sigma.entry(r, c));
        }
    }
    return word;
}

std::vector<std::pair<int, int>> x_lambda_positions(const Partition& shape) {
    const RowStrictTableau base = base_filling(shape);
    std::vector<std::pair<int, int>> out;
    for (const auto& row : base.rows()) {
        for (std::size_t c = 0; c + 1 < row.size(); ++c) {
            out.emplace_back(row[c], row[c + 1]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

ToricFrame cell_frame(const RowStrictTableau& sigma) {
    IjkDecomposition ijk = ijk_decomposition(sigma);
    return ToricFrame(sigma.n(), std::move(ijk.I), std::move(ijk.J), std::move(ijk.K));
}

}  // namespace springer
