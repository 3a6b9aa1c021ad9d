#pragma once

// Monomials of a fixed-arity free commutative monoid: exponent vectors over
// n variables. The structural operator< (plain lexicographic comparison of
// exponent vectors) only serves as a map key order; the algebraic comparisons
// live in monomial_order.

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "powser/errors.hpp"

namespace powser {

class monomial {
public:
    // The unit monomial 1 over nvars variables.
    explicit monomial(std::size_t nvars) : exps_(nvars, 0) {}

    explicit monomial(std::vector<std::uint32_t> exponents) : exps_(std::move(exponents)) {}

    std::size_t nvars() const { return exps_.size(); }

    std::uint32_t exponent(std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }

    std::uint32_t degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), std::uint32_t{0});
    }

    bool is_unit() const {
        for (auto e : exps_) if (e != 0) return false;
        return true;
    }

    monomial operator*(const monomial& rhs) const {
        check_same_arity(rhs);
        std::vector<std::uint32_t> e(exps_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += rhs.exps_[i];
        return monomial(std::move(e));
    }

    bool operator==(const monomial&) const = default;
    auto operator<=>(const monomial&) const = default; // structural key order

    // Rendering with declared variable names, e.g. "x^2*y"; the unit is "1".
    std::string to_string(std::span<const std::string> names) const;

    void check_same_arity(const monomial& rhs) const {
        if (exps_.size() != rhs.exps_.size())
            throw dimension_mismatch("monomials over " + std::to_string(exps_.size()) + " and " +
                                     std::to_string(rhs.exps_.size()) + " variables");
    }

private:
    std::vector<std::uint32_t> exps_;
};

// Quotient q with a*q = b, when a divides b componentwise.
std::optional<monomial> divides(const monomial& a, const monomial& b);

monomial lcm(const monomial& a, const monomial& b);

// All monomials over nvars variables with degree < below_degree, sorted by
// (degree, structural) ascending.
std::vector<monomial> enumerate_monomials(std::size_t nvars, std::uint32_t below_degree);

} // namespace powser
