#include <doctest.h>

#include <algorithm>

#include "powser/tars.hpp"

using namespace powser;
using namespace powser::tars;

namespace {

mpq_class dy(long num, unsigned long log2_den) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, log2_den);
    mpq_class q(num);
    q /= mpq_class(den);
    return q;
}

bool contains(const std::vector<mpq_class>& v, const mpq_class& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

} // namespace

TEST_CASE("cyclic successors around one") {
    cyclic_system sys;
    auto succ = sys.successors(mpq_class(1));
    REQUIRE(succ.size() == 2);
    CHECK(contains(succ, dy(1, 1)));  // 1/2
    CHECK(contains(succ, dy(3, 1)));  // 3/2
    CHECK(sys.successors(mpq_class(0)).empty());
    CHECK(sys.successors(mpq_class(2)).empty());

    auto lower = sys.successors(dy(1, 3)); // 1/8
    CHECK(contains(lower, dy(1, 4)));
    CHECK(contains(lower, dy(1, 2)));
    auto upper = sys.successors(dy(7, 2)); // 7/4 = 2 - 1/4
    CHECK(contains(upper, dy(15, 3)));     // 15/8
    CHECK(contains(upper, dy(3, 1)));      // 3/2
}

TEST_CASE("cyclic states outside the orbit are rejected") {
    cyclic_system sys;
    CHECK_THROWS_AS(sys.successors(mpq_class(1, 3)), domain_violation);
    CHECK_THROWS_AS(sys.successors(mpq_class(3)), domain_violation);
    CHECK_THROWS_AS(sys.successors(mpq_class(5, 8)), domain_violation);
}

TEST_CASE("every interior cyclic step reverses") {
    cyclic_system sys;
    std::vector<mpq_class> states;
    for (unsigned n = 0; n <= 12; ++n) {
        states.push_back(dy(1, n));
        states.push_back(2 - dy(1, n));
    }
    for (const auto& s : states) {
        for (const auto& t : sys.successors(s)) {
            auto back = sys.successors(t);
            CHECK(contains(back, s));
        }
    }
}

TEST_CASE("nbar successors increment one finite coordinate") {
    nbar_system sys;
    nbar_system::state origin{extended_nat(0u), extended_nat(0u)};
    auto succ = sys.successors(origin);
    REQUIRE(succ.size() == 2);
    CHECK(succ[0] == nbar_system::state{extended_nat(1u), extended_nat(0u)});
    CHECK(succ[1] == nbar_system::state{extended_nat(0u), extended_nat(1u)});

    CHECK(sys.successors({nbar_infinity, extended_nat(0u)}).empty());
    CHECK(sys.successors({extended_nat(0u), nbar_infinity}).empty());
    CHECK(sys.successors({nbar_infinity, nbar_infinity}).empty());
}

TEST_CASE("the nbar metric realizes convergence to infinity") {
    nbar_system sys;
    nbar_system::state inf_left{nbar_infinity, extended_nat(0u)};
    CHECK(sys.distance({extended_nat(9u), extended_nat(0u)}, inf_left) == dy(1, 9));
    CHECK(sys.distance({extended_nat(0u), extended_nat(0u)},
                       {extended_nat(0u), extended_nat(0u)}) == 0);
    // symmetry on samples
    nbar_system::state a{extended_nat(2u), extended_nat(5u)};
    nbar_system::state b{extended_nat(7u), nbar_infinity};
    CHECK(sys.distance(a, b) == sys.distance(b, a));
}

TEST_CASE("metrics satisfy the triangle inequality on samples") {
    cyclic_system cyc;
    std::vector<mpq_class> cs{mpq_class(0), dy(1, 4), dy(1, 1), mpq_class(1), dy(7, 2),
                              mpq_class(2)};
    for (const auto& a : cs)
        for (const auto& b : cs)
            for (const auto& c : cs)
                CHECK(cyc.distance(a, c) <= cyc.distance(a, b) + cyc.distance(b, c));

    nbar_system nb;
    std::vector<nbar_system::state> ns{{extended_nat(0u), extended_nat(0u)},
                                       {extended_nat(3u), extended_nat(1u)},
                                       {nbar_infinity, extended_nat(0u)},
                                       {extended_nat(2u), nbar_infinity},
                                       {nbar_infinity, nbar_infinity}};
    for (const auto& a : ns)
        for (const auto& b : ns)
            for (const auto& c : ns)
                CHECK(nb.distance(a, c) <= nb.distance(a, b) + nb.distance(b, c));
}

TEST_CASE("witness paths halve towards zero") {
    cyclic_system sys;
    auto path = witness_topological_reach(sys, mpq_class(1), mpq_class(0), dy(1, 10), 100000);
    REQUIRE(path.has_value());
    CHECK(path->size() == 12); // eleven steps
    CHECK(path->front() == 1);
    CHECK(path->back() == dy(1, 11));

    auto to_two = witness_topological_reach(sys, mpq_class(1), mpq_class(2), dy(1, 10), 100000);
    REQUIRE(to_two.has_value());
    CHECK(to_two->size() == 12);
    CHECK(to_two->back() == 2 - dy(1, 11));
}

TEST_CASE("witness paths increment towards the infinite point") {
    nbar_system sys;
    nbar_system::state origin{extended_nat(0u), extended_nat(0u)};
    nbar_system::state target{nbar_infinity, extended_nat(0u)};
    auto path = witness_topological_reach(sys, origin, target, dy(1, 8), 100000);
    REQUIRE(path.has_value());
    CHECK(path->size() == 10); // nine increments of the first coordinate
    CHECK(path->back() == nbar_system::state{extended_nat(9u), extended_nat(0u)});
}

TEST_CASE("bounded searches report unknown") {
    cyclic_system sys;
    CHECK_FALSE(witness_topological_reach(sys, mpq_class(1), mpq_class(0), dy(1, 10), 3)
                    .has_value());
    CHECK_THROWS_AS(
        witness_topological_reach(sys, mpq_class(1), mpq_class(0), mpq_class(0), 10),
        powser::error);
}

TEST_CASE("two reachable stuck states refute infinitary confluence") {
    cyclic_system sys;
    auto report =
        refute_infinitary_confluence(sys, mpq_class(1), mpq_class(0), mpq_class(2), dy(1, 10),
                                     100000);
    CHECK(report.refuted);
    REQUIRE(report.path_to_first.has_value());
    REQUIRE(report.path_to_second.has_value());
    CHECK(report.path_to_first->size() == 12);
    CHECK(report.path_to_second->size() == 12);

    nbar_system nb;
    nbar_system::state origin{extended_nat(0u), extended_nat(0u)};
    auto nbr = refute_infinitary_confluence(nb, origin,
                                            {nbar_infinity, extended_nat(0u)},
                                            {extended_nat(0u), nbar_infinity}, dy(1, 8),
                                            100000);
    CHECK(nbr.refuted);
}

TEST_CASE("the refutation guard rejects equal normal forms") {
    nbar_system nb;
    nbar_system::state origin{extended_nat(0u), extended_nat(0u)};
    nbar_system::state inf_left{nbar_infinity, extended_nat(0u)};
    CHECK_THROWS_AS(
        refute_infinitary_confluence(nb, origin, inf_left, inf_left, dy(1, 8), 1000),
        powser::error);

    // a state with successors is no normal form, hence no refutation
    auto report = refute_infinitary_confluence(nb, origin, inf_left,
                                               {extended_nat(3u), extended_nat(0u)},
                                               dy(1, 8), 1000);
    CHECK_FALSE(report.refuted);
}

TEST_CASE("normal forms are the stuck states") {
    cyclic_system cyc;
    CHECK(cyc.successors(mpq_class(0)).empty());
    CHECK(cyc.successors(mpq_class(2)).empty());
    for (unsigned n = 0; n <= 10; ++n) {
        CHECK_FALSE(cyc.successors(dy(1, n)).empty());
        CHECK_FALSE(cyc.successors(2 - dy(1, n)).empty());
    }

    nbar_system nb;
    for (std::uint32_t a = 0; a <= 6; ++a) {
        CHECK(nb.successors({extended_nat(a), nbar_infinity}).empty());
        CHECK(nb.successors({nbar_infinity, extended_nat(a)}).empty());
        for (std::uint32_t b = 0; b <= 6; ++b)
            CHECK_FALSE(nb.successors({extended_nat(a), extended_nat(b)}).empty());
    }
}

TEST_CASE("finite nbar reducts join at the componentwise maximum") {
    nbar_system sys;
    // a path of legal increments from `from` to `to`, first coordinate first
    auto legal_path = [&](nbar_system::state from, const nbar_system::state& to) {
        while (!(from == to)) {
            auto succ = sys.successors(from);
            nbar_system::state next = from;
            if (*from.first < *to.first) next = {extended_nat(*from.first + 1), from.second};
            else next = {from.first, extended_nat(*from.second + 1)};
            if (std::find(succ.begin(), succ.end(), next) == succ.end()) return false;
            from = next;
        }
        return true;
    };

    for (std::uint32_t n = 0; n <= 6; ++n) {
        for (std::uint32_t m = 0; m <= 6; ++m) {
            for (std::uint32_t n1 = n; n1 <= 6; ++n1) {
                for (std::uint32_t m1 = m; m1 <= 6; ++m1) {
                    for (std::uint32_t n2 = n; n2 <= 6; ++n2) {
                        for (std::uint32_t m2 = m; m2 <= 6; ++m2) {
                            nbar_system::state a{extended_nat(n), extended_nat(m)};
                            nbar_system::state b{extended_nat(n1), extended_nat(m1)};
                            nbar_system::state c{extended_nat(n2), extended_nat(m2)};
                            nbar_system::state meet{extended_nat(std::max(n1, n2)),
                                                    extended_nat(std::max(m1, m2))};
                            REQUIRE(legal_path(a, b));
                            REQUIRE(legal_path(b, meet));
                            REQUIRE(legal_path(c, meet));
                        }
                    }
                }
            }
        }
    }
}
