#include "powser/order.hpp"

#include <algorithm>
#include <numeric>

namespace powser {

std::string to_string(order_kind kind) {
    switch (kind) {
        case order_kind::deglex: return "deglex";
        case order_kind::degrevlex: return "degrevlex";
        case order_kind::lex: return "lex";
    }
    return "?";
}

order_kind order_kind_from_string(const std::string& text) {
    if (text == "deglex") return order_kind::deglex;
    if (text == "degrevlex") return order_kind::degrevlex;
    if (text == "lex") return order_kind::lex;
    throw invalid_argument("unknown monomial order '" + text + "'");
}

monomial_order::monomial_order(order_kind kind, std::size_t nvars)
    : kind_(kind), priority_(nvars) {
    std::iota(priority_.begin(), priority_.end(), std::size_t{0});
}

monomial_order::monomial_order(order_kind kind, std::vector<std::size_t> priority)
    : kind_(kind), priority_(std::move(priority)) {
    std::vector<bool> seen(priority_.size(), false);
    for (std::size_t v : priority_) {
        if (v >= priority_.size() || seen[v])
            throw invalid_argument("variable priority is not a permutation");
        seen[v] = true;
    }
}

std::strong_ordering monomial_order::compare(const monomial& a, const monomial& b) const {
    a.check_same_arity(b);
    if (a.nvars() != nvars())
        throw dimension_mismatch("order over " + std::to_string(nvars()) +
                                 " variables applied to monomials over " +
                                 std::to_string(a.nvars()));

    if (kind_ != order_kind::lex) {
        if (auto c = a.degree() <=> b.degree(); c != 0) return c;
    }

    switch (kind_) {
        case order_kind::lex:
        case order_kind::deglex:
            for (std::size_t v : priority_) {
                if (auto c = a.exponent(v) <=> b.exponent(v); c != 0) return c;
            }
            return std::strong_ordering::equal;
        case order_kind::degrevlex:
            // Equal degrees: the monomial with the larger exponent in the
            // last differing (lowest-priority) position is the smaller one.
            for (std::size_t i = priority_.size(); i-- > 0;) {
                std::size_t v = priority_[i];
                if (auto c = b.exponent(v) <=> a.exponent(v); c != 0) return c;
            }
            return std::strong_ordering::equal;
    }
    return std::strong_ordering::equal;
}

} // namespace powser
