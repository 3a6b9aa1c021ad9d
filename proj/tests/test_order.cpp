#include <doctest.h>

#include <algorithm>

#include "powser/order.hpp"

using namespace powser;

namespace {
monomial m3(std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    return monomial({x, y, z});
}
monomial m2(std::uint32_t x, std::uint32_t y) { return monomial({x, y}); }
} // namespace

TEST_CASE("deglex compares degree first, then priority-lex") {
    monomial_order ord(order_kind::deglex, 2); // x > y
    CHECK(ord.compare(m2(2, 0), m2(1, 1)) == std::strong_ordering::greater); // x^2 > x*y
    CHECK(ord.compare(m2(0, 3), m2(2, 0)) == std::strong_ordering::greater); // degree wins
    CHECK(ord.compare(m2(1, 1), m2(1, 1)) == std::strong_ordering::equal);
}

TEST_CASE("y below x makes y the maximum for the opposite order") {
    monomial_order ord(order_kind::deglex, 3); // x > y > z
    CHECK(ord.compare(m3(0, 1, 0), m3(1, 0, 0)) == std::strong_ordering::less);
    CHECK(ord.greater_op(m3(0, 1, 0), m3(1, 0, 0)));
}

// Frozen by hand: the ten monomials of degree at most two over x > y > z in
// ascending order.
TEST_CASE("deglex ascending chain up to degree two") {
    monomial_order ord(order_kind::deglex, 3);
    std::vector<monomial> expected{
        m3(0, 0, 0),                            // 1
        m3(0, 0, 1), m3(0, 1, 0), m3(1, 0, 0),  // z, y, x
        m3(0, 0, 2), m3(0, 1, 1), m3(0, 2, 0),  // z^2, y*z, y^2
        m3(1, 0, 1), m3(1, 1, 0), m3(2, 0, 0),  // x*z, x*y, x^2
    };
    std::vector<monomial> sorted = expected;
    std::sort(sorted.begin(), sorted.end(),
              [&](const monomial& a, const monomial& b) { return ord.less(a, b); });
    CHECK(sorted == expected);
}

TEST_CASE("degrevlex ascending chain up to degree two") {
    monomial_order ord(order_kind::degrevlex, 3);
    std::vector<monomial> expected{
        m3(0, 0, 0),
        m3(0, 0, 1), m3(0, 1, 0), m3(1, 0, 0),
        m3(0, 0, 2), m3(0, 1, 1), m3(1, 0, 1),  // z^2, y*z, x*z: high z-power is small
        m3(0, 2, 0), m3(1, 1, 0), m3(2, 0, 0),  // y^2, x*y, x^2
    };
    std::vector<monomial> shuffled{expected.rbegin(), expected.rend()};
    std::sort(shuffled.begin(), shuffled.end(),
              [&](const monomial& a, const monomial& b) { return ord.less(a, b); });
    CHECK(shuffled == expected);
}

TEST_CASE("lex ignores degree and is flagged incompatible") {
    monomial_order ord(order_kind::lex, 3);
    CHECK_FALSE(ord.degree_compatible());
    CHECK(monomial_order(order_kind::deglex, 3).degree_compatible());
    CHECK(monomial_order(order_kind::degrevlex, 3).degree_compatible());
    // z^9 < y under lex despite the degrees
    CHECK(ord.less(m3(0, 0, 9), m3(0, 1, 0)));
}

TEST_CASE("variable priority permutes the comparison") {
    // y > x
    monomial_order ord(order_kind::deglex, std::vector<std::size_t>{1, 0});
    CHECK(ord.less(m2(1, 0), m2(0, 1))); // x < y now
    CHECK_THROWS_AS(monomial_order(order_kind::deglex, std::vector<std::size_t>{0, 0}),
                    powser::error);
}

TEST_CASE("arity mismatches are rejected") {
    monomial_order ord(order_kind::deglex, 3);
    CHECK_THROWS_AS(ord.compare(m3(1, 0, 0), m2(1, 0)), dimension_mismatch);
    CHECK_THROWS_AS(ord.compare(m2(1, 0), m2(0, 1)), dimension_mismatch);
}
