#include "springer/partition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace springer {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.empty()) {
        throw std::invalid_argument("partition must have at least one part");
    }
    for (int p : parts_) {
        if (p <= 0) {
            throw std::invalid_argument("partition parts must be positive, got " +
                                        std::to_string(p));
        }
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<int>());
    std::int64_t sum = std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
    if (sum > std::numeric_limits<int>::max()) {
        throw std::invalid_argument("partition size too large");
    }
    n_ = static_cast<int>(sum);
}

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

bool divides(int d, const Partition& lambda) {
    if (d < 1) {
        throw std::invalid_argument("divisor must be positive, got " + std::to_string(d));
    }
    for (int p : lambda.parts()) {
        if (p % d != 0) return false;
    }
    return true;
}

Partition quotient_partition(const Partition& lambda, int d) {
    if (!divides(d, lambda)) {
        throw std::invalid_argument(std::to_string(d) + " does not divide the partition");
    }
    std::vector<int> q;
    q.reserve(lambda.parts().size());
    for (int p : lambda.parts()) q.push_back(p / d);
    return Partition(std::move(q));
}

std::int64_t springer_dim(const Partition& lambda) {
    std::int64_t dim = 0;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) {
        dim += static_cast<std::int64_t>(i) * parts[i];
    }
    return dim;
}

std::int64_t dim_shift(const Partition& lambda, int d) {
    return springer_dim(lambda) - springer_dim(quotient_partition(lambda, d));
}

std::int64_t nilcone_dim(int n) {
    if (n < 1) {
        throw std::invalid_argument("n must be positive, got " + std::to_string(n));
    }
    return static_cast<std::int64_t>(n) * n - n;
}

std::vector<int> divisor_list(const Partition& lambda) {
    int g = 0;
    for (int p : lambda.parts()) g = std::gcd(g, p);
    std::vector<int> divisors;
    for (int d = 1; d <= g; ++d) {
        if (g % d == 0) divisors.push_back(d);
    }
    return divisors;
}

std::vector<Partition> partitions_of(int n) {
    if (n < 1) {
        throw std::invalid_argument("n must be positive, got " + std::to_string(n));
    }
    std::vector<Partition> out;
    std::vector<int> current;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(current);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            current.push_back(p);
            rec(remaining - p, p);
            current.pop_back();
        }
    };
    rec(n, n);
    return out;
}

}  // namespace springer
