#include "springer/polynomial.hpp"

#include <stdexcept>
#include <string>

namespace springer {

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : coeffs_(std::move(coeffs)) {
    for (std::int64_t c : coeffs_) {
        if (c < 0) {
            throw std::invalid_argument("coefficients must be nonnegative, got " +
                                        std::to_string(c));
        }
    }
    trim();
}

IntPolynomial IntPolynomial::constant(std::int64_t c) {
    return IntPolynomial(std::vector<std::int64_t>{c});
}

std::int64_t IntPolynomial::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[static_cast<std::size_t>(k)];
}

std::int64_t IntPolynomial::at_one() const {
    std::int64_t sum = 0;
    for (std::int64_t c : coeffs_) sum += c;
    return sum;
}

void IntPolynomial::add_term(int degree, std::int64_t c) {
    if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
    if (c < 0) throw std::invalid_argument("coefficients must be nonnegative");
    if (c == 0) return;
    if (static_cast<int>(coeffs_.size()) <= degree) {
        coeffs_.resize(static_cast<std::size_t>(degree) + 1, 0);
    }
    coeffs_[static_cast<std::size_t>(degree)] += c;
}

IntPolynomial IntPolynomial::shifted(int k) const {
    if (k < 0) throw std::invalid_argument("shift must be nonnegative");
    if (is_zero()) return IntPolynomial{};
    IntPolynomial out;
    out.coeffs_.assign(static_cast<std::size_t>(k), 0);
    out.coeffs_.insert(out.coeffs_.end(), coeffs_.begin(), coeffs_.end());
    return out;
}

IntPolynomial IntPolynomial::scaled(std::int64_t c) const {
    if (c < 0) throw std::invalid_argument("scale must be nonnegative");
    IntPolynomial out;
    if (c == 0) return out;
    out.coeffs_ = coeffs_;
    for (auto& x : out.coeffs_) x *= c;
    return out;
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& other) const {
    IntPolynomial out = *this;
    out += other;
    return out;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), 0);
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
    return *this;
}

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

}  // namespace springer
