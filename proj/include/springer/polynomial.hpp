#pragma once

#include <cstdint>
#include <vector>

namespace springer {

/// Polynomial in t with nonnegative integer coefficients, dense
/// representation, trailing zeros trimmed.  The zero polynomial has no
/// coefficients and degree -1.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<std::int64_t> coeffs);

    static IntPolynomial constant(std::int64_t c);

    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    std::int64_t coeff(int k) const;
    std::int64_t leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }

    /// Value at t = 1 (total cell count for the generating functions here).
    std::int64_t at_one() const;

    void add_term(int degree, std::int64_t c);

    /// Multiplication by t^k.
    IntPolynomial shifted(int k) const;
    IntPolynomial scaled(std::int64_t c) const;
    IntPolynomial operator+(const IntPolynomial& other) const;
    IntPolynomial& operator+=(const IntPolynomial& other);

    bool operator==(const IntPolynomial& other) const { return coeffs_ == other.coeffs_; }
    bool operator!=(const IntPolynomial& other) const { return !(*this == other); }

private:
    std::vector<std::int64_t> coeffs_;
    void trim();
};

}  // namespace springer
