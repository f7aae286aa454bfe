#include "springer/toric.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace springer {

namespace {

void check_index(int n, int k, const char* name) {
    if (n < 2 || k < 1 || k > n - 1) {
        throw std::invalid_argument(std::string(name) + " = " + std::to_string(k) +
                                    " out of range 1.." + std::to_string(n - 1));
    }
}

void check_element(const GroupElement& h) {
    if (h.n < 1 || h.a.size() != static_cast<std::size_t>(h.n - 1)) {
        throw std::invalid_argument("group element must carry n-1 residues");
    }
    for (int r : h.a) {
        if (r < 0 || r >= h.n) {
            throw std::invalid_argument("residue " + std::to_string(r) +
                                        " out of range mod " + std::to_string(h.n));
        }
    }
}

void check_subset(int n, const std::vector<int>& J) {
    int prev = 0;
    for (int j : J) {
        if (j < 1 || j > n - 1) {
            throw std::invalid_argument("J contains " + std::to_string(j) +
                                        ", outside 1.." + std::to_string(n - 1));
        }
        if (j <= prev) {
            throw std::invalid_argument("J must be strictly ascending");
        }
        prev = j;
    }
}

void check_exponents(const ExponentVector& b) {
    if (b.n < 1 || b.exps.size() != static_cast<std::size_t>(b.n - 1)) {
        throw std::invalid_argument("exponent vector must have length n-1");
    }
    for (std::int64_t e : b.exps) {
        if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
    }
}

// Smallest residue a mod n with b_r = a r mod n for all r not in J, or -1.
int proportionality_residue(const ExponentVector& b, const std::vector<int>& J) {
    const int n = b.n;
    std::vector<char> in_J(static_cast<std::size_t>(n), 0);
    for (int j : J) in_J[static_cast<std::size_t>(j)] = 1;
    for (int a = 0; a < n; ++a) {
        bool ok = true;
        for (int r = 1; r <= n - 1 && ok; ++r) {
            if (in_J[static_cast<std::size_t>(r)]) continue;
            if (b.exps[static_cast<std::size_t>(r - 1)] % n !=
                (static_cast<std::int64_t>(a) * r) % n) {
                ok = false;
            }
        }
        if (ok) return a;
    }
    return -1;
}

}  // namespace

std::vector<std::int64_t> weight_numerators(int n, int k) {
    check_index(n, k, "k");
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(n - 1));
    for (int j = 1; j <= n - 1; ++j) {
        out.push_back(j <= k ? static_cast<std::int64_t>(j) * (n - k)
                             : static_cast<std::int64_t>(k) * (n - j));
    }
    return out;
}

std::vector<Fraction> mu_coefficients(int n, int k) {
    std::vector<Fraction> out;
    for (std::int64_t num : weight_numerators(n, k)) {
        std::int64_t r = num % n;
        std::int64_t g = std::gcd(r, static_cast<std::int64_t>(n));
        out.push_back(Fraction{r / g, n / g});
    }
    return out;
}

ExponentVector v_exponents(int n, int k) {
    ExponentVector out{n, weight_numerators(n, k)};
    for (auto& e : out.exps) e %= n;
    return out;
}

ExponentVector y_exponents(int n, int k) {
    return ExponentVector{n, weight_numerators(n, k)};
}

bool z_divides_v(int n, int k, int i) {
    check_index(n, k, "k");
    check_index(n, i, "i");
    return i % (n / std::gcd(k, n)) != 0;
}

bool in_H(const GroupElement& h) {
    check_element(h);
    std::int64_t sum = 0;
    for (int r = 1; r <= h.n - 1; ++r) {
        sum += static_cast<std::int64_t>(r) * h.a[static_cast<std::size_t>(r - 1)];
    }
    return sum % h.n == 0;
}

bool in_H_J(const GroupElement& h, const std::vector<int>& J) {
    check_element(h);
    check_subset(h.n, J);
    for (int j : J) {
        if (h.a[static_cast<std::size_t>(j - 1)] % h.n != 0) return false;
    }
    return in_H(h);  // with a_j = 0 on J the two congruences coincide
}

bool is_invariant_monomial(const ExponentVector& b, const std::vector<int>& J) {
    check_exponents(b);
    check_subset(b.n, J);
    return proportionality_residue(b, J) >= 0;
}

InvariantDecomposition invariant_sum_decomposition(const ExponentVector& b,
                                                   const std::vector<int>& J,
                                                   const std::vector<int>& c) {
    check_exponents(b);
    check_subset(b.n, J);
    const int n = b.n;
    if (c.size() != J.size()) {
        throw std::invalid_argument("c-tuple must align with J");
    }
    for (int cj : c) {
        if (cj < 0 || cj >= n) {
            throw std::invalid_argument("c residue " + std::to_string(cj) +
                                        " out of range mod " + std::to_string(n));
        }
    }
    const int a = proportionality_residue(b, J);
    if (a < 0) {
        throw std::invalid_argument("monomial is not H_J-invariant");
    }
    InvariantDecomposition out;
    out.g = b;
    out.proportionality_residue = a;
    std::int64_t scalar = 0;
    for (std::size_t idx = 0; idx < J.size(); ++idx) {
        const int j = J[idx];
        const std::int64_t bj = b.exps[static_cast<std::size_t>(j - 1)];
        const std::int64_t m =
            ((static_cast<std::int64_t>(a) * j - bj) % n + n) % n;  // minimal nonnegative
        out.m.push_back(m);
        out.g.exps[static_cast<std::size_t>(j - 1)] = bj + m;
        scalar += static_cast<std::int64_t>(c[idx]) * m;
    }
    out.scalar_exponent = static_cast<int>(scalar % n);
    if (!is_invariant_monomial(out.g, {})) {
        throw std::logic_error("decomposition produced a non-invariant monomial");
    }
    return out;
}

int d_star(const ToricFrame& frame) {
    int g = frame.n;
    for (int i : frame.I) g = std::gcd(g, i);
    for (int k : frame.K) g = std::gcd(g, k);
    return g;
}

ComponentIndex phi(const ToricFrame& frame, const std::vector<int>& c) {
    if (c.size() != frame.J.size()) {
        throw std::invalid_argument("c-tuple must align with J");
    }
    for (int cj : c) {
        if (cj < 0 || cj >= frame.n) {
            throw std::invalid_argument("c residue " + std::to_string(cj) +
                                        " out of range mod " + std::to_string(frame.n));
        }
    }
    const int d = d_star(frame);
    std::int64_t sum = 0;
    for (std::size_t idx = 0; idx < frame.J.size(); ++idx) {
        sum += static_cast<std::int64_t>(frame.J[idx]) * c[idx];
    }
    return ComponentIndex{frame, static_cast<int>(sum % d)};
}

ComponentIndex z_shift(const ComponentIndex& idx) {
    const int d = d_star(idx.frame);
    return ComponentIndex{idx.frame, (idx.r + 1) % d};
}

std::vector<int> component_characters(const ToricFrame& frame) {
    const int d = d_star(frame);
    const int q = frame.n / d;
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(d));
    for (int k = 0; k < d; ++k) out.push_back(k * q);
    return out;
}

}  // namespace springer
