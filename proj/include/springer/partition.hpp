#pragma once

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace springer {

/// Integer partition with weakly decreasing positive parts.  Inputs are
/// sorted on construction; n() is the sum of the parts.
class Partition {
public:
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int n() const { return n_; }
    int length() const { return static_cast<int>(parts_.size()); }

    /// 1-based part accessor: part(1) is the largest part.
    int part(int i) const { return parts_.at(static_cast<std::size_t>(i - 1)); }

    bool operator==(const Partition& other) const { return parts_ == other.parts_; }
    bool operator!=(const Partition& other) const { return !(*this == other); }
    bool operator<(const Partition& other) const { return parts_ < other.parts_; }

private:
    std::vector<int> parts_;
    int n_ = 0;
};

/// True iff every part of lambda is a multiple of d.
bool divides(int d, const Partition& lambda);

/// The partition whose parts are lambda_i / d.  Requires divides(d, lambda).
Partition quotient_partition(const Partition& lambda, int d);

/// Dimension of the Springer fiber of Jordan type lambda:
/// sum over i of (i-1) * lambda_i, parts indexed from 1 in decreasing order.
std::int64_t springer_dim(const Partition& lambda);

/// springer_dim(lambda) - springer_dim(lambda/d).  Requires divides(d, lambda).
std::int64_t dim_shift(const Partition& lambda, int d);

/// Dimension of the nilpotent cone of sl_n: n^2 - n.
std::int64_t nilcone_dim(int n);

/// All d >= 1 dividing every part of lambda, ascending.  These are exactly
/// the divisors of gcd(parts).
std::vector<int> divisor_list(const Partition& lambda);

/// All partitions of n, in a fixed deterministic order (largest first part
/// first).  Enumeration helper for the exhaustive verification suites.
std::vector<Partition> partitions_of(int n);

}  // namespace springer
