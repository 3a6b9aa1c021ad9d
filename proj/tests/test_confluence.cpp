#include <doctest.h>

#include "test_support.hpp"

using namespace powser;
using namespace powser::testing;

TEST_CASE("the two branches from z join at zero") {
    auto fx = cascade_fixture();
    join_result r = join(fx.s("y"), fx.s("x"), fx.sys, 6);
    REQUIRE(r.joined);
    CHECK(r.common.is_zero());
    CHECK(r.common.prec() == precision::finite(6));

    // the sides alternate: the lower power is always the difference's lead
    std::vector<monomial> expected{fx.m("y"),   fx.m("x"),   fx.m("y^2"), fx.m("x^2"),
                                   fx.m("y^3"), fx.m("x^3"), fx.m("y^4"), fx.m("x^4"),
                                   fx.m("y^5"), fx.m("x^5")};
    CHECK(r.eliminated == expected);
    CHECK(r.left_steps.size() == 5);
    CHECK(r.right_steps.size() == 5);
}

TEST_CASE("equal sides join with no work") {
    auto fx = cascade_fixture();
    join_result r = join(fx.s("x + y"), fx.s("x + y"), fx.sys, 8);
    CHECK(r.joined);
    CHECK(r.eliminated.empty());
    CHECK(r.left_steps.empty());
    CHECK(r.common == fx.s("x + y").truncated(8));
}

TEST_CASE("an irreducible difference diverges") {
    auto fx = sliding_fixture();
    // x^2*y rewrites to y^6 via the first generator and to 0 via the second
    series g = fx.s("y^6");
    series h = series(2, fx.field);
    join_result r = join(g, h, fx.sys, 8);
    CHECK_FALSE(r.joined);
    REQUIRE(r.obstruction.has_value());
    CHECK(*r.obstruction == fx.m("y^6"));
}

TEST_CASE("join replays through single steps") {
    auto fx = cascade_fixture();
    join_result r = join(fx.s("y"), fx.s("x"), fx.sys, 6);
    REQUIRE(r.joined);
    series left = fx.s("y");
    for (const rewrite_step& st : r.left_steps) left = apply_rewrite_step(left, st, fx.sys);
    series right = fx.s("x");
    for (const rewrite_step& st : r.right_steps) right = apply_rewrite_step(right, st, fx.sys);
    CHECK(left.truncated(6) == r.common);
    CHECK(right.truncated(6) == r.common);
}

TEST_CASE("eliminated difference leads decrease for the opposite order") {
    auto fx = cascade_fixture();
    std::mt19937_64 rng(53);
    for (int t = 0; t < 20; ++t) {
        series f = random_series(rng, 3, fx.field, 4, 4);
        series g = random_series(rng, 3, fx.field, 4, 4);
        join_result r = join(f, g, fx.sys, 7);
        for (std::size_t k = 0; k + 1 < r.eliminated.size(); ++k)
            CHECK(fx.sys.order().less(r.eliminated[k], r.eliminated[k + 1]));
        CHECK(r.joined); // the cascade passes the basis check, so everything joins
    }
}

TEST_CASE("join demands enough precision") {
    auto fx = cascade_fixture();
    CHECK_THROWS_AS(join(fx.s("y").truncated(3), fx.s("x"), fx.sys, 6), precision_loss);
}

TEST_CASE("balanced pair differences") {
    auto fx = cascade_fixture();
    CHECK(s_series(0, 1, fx.sys) == fx.s("x - y"));
    // coprime leads: x*(y - y^2) - y*(x - x^2) = x^2*y - x*y^2
    CHECK(s_series(2, 3, fx.sys) == fx.s("x^2*y - x*y^2"));
    CHECK_THROWS_AS(s_series(1, 1, fx.sys), powser::error);

    auto prop = make_fixture({"x", "y"}, {"x - x^2", "2*x - 2*x^2"});
    CHECK(s_series(0, 1, prop.sys).is_zero());
}

TEST_CASE("the cascade is a standard basis at precision eight") {
    auto fx = cascade_fixture();
    sb_report r = check_standard_basis(fx.sys, 8);
    CHECK(r.pass);
    CHECK(r.pairs.size() == 6);
    for (const auto& p : r.pairs) {
        CHECK(p.reduces_to_zero);
        CHECK(p.normal_form.is_zero());
    }
}

TEST_CASE("the sliding pair fails with witness y^6") {
    auto fx = sliding_fixture();
    sb_report r = check_standard_basis(fx.sys, 8);
    CHECK_FALSE(r.pass);
    REQUIRE(r.pairs.size() == 1);
    CHECK_FALSE(r.pairs[0].reduces_to_zero);
    monomial_order ord = fx.sys.order();
    CHECK(leading_data(r.pairs[0].normal_form, ord).lm == fx.m("y^6"));
}

TEST_CASE("a singleton passes vacuously") {
    auto fx = make_fixture({"x", "y"}, {"x - y^3"});
    sb_report r = check_standard_basis(fx.sys, 8);
    CHECK(r.pass);
    CHECK(r.pairs.empty());
}

TEST_CASE("a passing check makes divergent strategies join") {
    auto fx = cascade_fixture();
    REQUIRE(check_standard_basis(fx.sys, 7).pass);
    std::mt19937_64 rng(61);
    for (int t = 0; t < 15; ++t) {
        series f = random_nonzero_series(rng, 3, fx.field, 4, 4);
        auto smallest = reducible_monomials(f, fx.sys, 7, tie_break::smallest_index);
        auto largest = reducible_monomials(f, fx.sys, 7, tie_break::largest_index);
        if (smallest.empty()) continue;
        series g = f;
        series h = f;
        {
            const auto& [m, i] = smallest.front();
            rewrite_step st{m, i, *divides(fx.sys.leading_monomial(i), m), f.coeff(m)};
            g = apply_rewrite_step(f, st, fx.sys);
        }
        {
            const auto& [m, i] = largest.front();
            rewrite_step st{m, i, *divides(fx.sys.leading_monomial(i), m), f.coeff(m)};
            h = apply_rewrite_step(f, st, fx.sys);
        }
        join_result r = join(g, h, fx.sys, 7);
        CHECK(r.joined);
    }
}

TEST_CASE("check demands enough generator precision") {
    auto fx = cascade_fixture();
    std::vector<series> gens;
    for (const series& g : fx.sys.generators()) gens.push_back(g.truncated(4));
    rewrite_system sys(gens, fx.sys.order());
    CHECK_THROWS_AS(check_standard_basis(sys, 8), precision_loss);
    CHECK(check_standard_basis(sys, 4).pass);
}
