#pragma once

// Monomial orders: total multiplicative well-orders on monomials, with a
// degree-compatibility flag. The comparison direction is the plain order <;
// leading terms elsewhere in the library follow the lowest-term convention,
// i.e. they are maxima for the opposite order and hence minima for <.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "powser/monomial.hpp"

namespace powser {

enum class order_kind { deglex, degrevlex, lex };

std::string to_string(order_kind kind);
order_kind order_kind_from_string(const std::string& text);

class monomial_order {
public:
    // Identity variable priority: variable 0 is the greatest.
    monomial_order(order_kind kind, std::size_t nvars);

    // priority[0] is the index of the greatest variable, and so on.
    monomial_order(order_kind kind, std::vector<std::size_t> priority);

    order_kind kind() const { return kind_; }
    std::size_t nvars() const { return priority_.size(); }
    const std::vector<std::size_t>& priority() const { return priority_; }

    // True for deglex and degrevlex: deg(a) < deg(b) implies a < b.
    bool degree_compatible() const { return kind_ != order_kind::lex; }

    std::strong_ordering compare(const monomial& a, const monomial& b) const;

    bool less(const monomial& a, const monomial& b) const {
        return compare(a, b) == std::strong_ordering::less;
    }

    // a is greater than b for the opposite order.
    bool greater_op(const monomial& a, const monomial& b) const { return less(a, b); }

private:
    order_kind kind_;
    std::vector<std::size_t> priority_;
};

} // namespace powser
