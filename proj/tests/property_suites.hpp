#pragma once

// Randomized property suites, shared between the standalone property runner
// and the acceptance suite. Each returns the number of violations found;
// every suite is deterministic for a fixed seed.

#include "test_support.hpp"

namespace powser::testing {

// Total-order axioms, multiplicativity, the unit as minimum, and (when
// flagged) degree compatibility.
inline std::size_t order_axiom_violations(order_kind kind, std::size_t nvars,
                                          std::size_t triples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    monomial_order ord(kind, nvars);
    monomial unit(nvars);
    std::size_t violations = 0;

    for (std::size_t t = 0; t < triples; ++t) {
        monomial a = random_monomial(rng, nvars, 6);
        monomial b = random_monomial(rng, nvars, 6);
        monomial c = random_monomial(rng, nvars, 6);

        auto ab = ord.compare(a, b);
        auto ba = ord.compare(b, a);
        if ((ab == std::strong_ordering::equal) != (a == b)) ++violations;
        if ((ab < 0) != (ba > 0) || (ab > 0) != (ba < 0)) ++violations;

        if (ord.compare(a, b) <= 0 && ord.compare(b, c) <= 0 && ord.compare(a, c) > 0)
            ++violations;

        if (ord.less(a, b) && !ord.less(a * c, b * c)) ++violations;
        if (ord.compare(unit, a) > 0) ++violations;
        if (ord.degree_compatible() && a.degree() < b.degree() && !ord.less(a, b)) ++violations;
    }
    return violations;
}

// delta(f,h) <= max(delta(f,g), delta(g,h)) on exact operands, where an exact
// zero distance sits below every resolved positive one.
inline std::size_t ultrametric_violations(std::size_t triples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const field_spec field = field_spec::rationals();
    std::size_t violations = 0;
    for (std::size_t t = 0; t < triples; ++t) {
        series f = random_series(rng, 2, field, 5, 4);
        series g = random_series(rng, 2, field, 5, 4);
        series h = random_series(rng, 2, field, 5, 4);
        mpq_class fh = delta(f, h).bound();
        mpq_class fg = delta(f, g).bound();
        mpq_class gh = delta(g, h).bound();
        if (fh > std::max(fg, gh)) ++violations;
    }
    return violations;
}

// lm(m*f) = m*lm(f); lm(lambda*f) = lm(f); lm(f+g) bounded by the smaller of
// the two leading monomials for <.
inline std::size_t leading_identity_violations(order_kind kind, std::size_t trials,
                                               std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const field_spec field = field_spec::rationals();
    monomial_order ord(kind, 3);
    std::size_t violations = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        series f = random_nonzero_series(rng, 3, field, 5, 4);
        monomial m = random_monomial(rng, 3, 4);
        if (!(leading_data(mul_monomial(f, m), ord).lm == m * leading_data(f, ord).lm))
            ++violations;

        coefficient lambda = random_coefficient(rng, field);
        if (!(leading_data(scale(f, lambda), ord).lm == leading_data(f, ord).lm)) ++violations;

        series g = random_nonzero_series(rng, 3, field, 5, 4);
        series sum = add(f, g);
        if (!sum.is_zero()) {
            const monomial& lf = leading_data(f, ord).lm;
            const monomial& lg = leading_data(g, ord).lm;
            const monomial& bound = ord.less(lf, lg) ? lf : lg;
            if (ord.compare(bound, leading_data(sum, ord).lm) > 0) ++violations;
        }
    }
    return violations;
}

// rem(f) = 0 or lm(f) < lm(rem(f)).
inline std::size_t remainder_descent_violations(order_kind kind, std::size_t trials,
                                                std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const field_spec field = field_spec::rationals();
    monomial_order ord(kind, 3);
    std::size_t violations = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        series f = random_nonzero_series(rng, 3, field, 5, 4);
        leading_data_result ld = leading_data(f, ord);
        if (ld.rem.is_zero()) continue;
        if (!ord.less(ld.lm, leading_data(ld.rem, ord).lm)) ++violations;
    }
    return violations;
}

// Truncating exact inputs and then operating agrees with truncating the exact
// result, and leading data survives truncation while the leading monomial
// stays below the cut.
inline std::size_t precision_soundness_violations(std::size_t trials, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const field_spec field = field_spec::rationals();
    monomial_order ord(order_kind::deglex, 2);
    std::size_t violations = 0;
    for (std::size_t t = 0; t < trials; ++t) {
        series f = random_series(rng, 2, field, 5, 4);
        series g = random_series(rng, 2, field, 5, 4);
        std::uint32_t d = 1 + static_cast<std::uint32_t>(below(rng, 7));

        if (!(add(f.truncated(d), g.truncated(d)) == add(f, g).truncated(d))) ++violations;

        coefficient lambda = random_coefficient(rng, field);
        if (!(scale(f.truncated(d), lambda) == scale(f, lambda).truncated(d))) ++violations;

        if (!(mul(f.truncated(d), g.truncated(d)).truncated(d) == mul(f, g).truncated(d)))
            ++violations;

        if (!f.is_zero()) {
            leading_data_result exact = leading_data(f, ord);
            if (exact.lm.degree() < d) {
                leading_data_result cut = leading_data(f.truncated(d), ord);
                if (!(cut.lm == exact.lm) || !(cut.lc == exact.lc)) ++violations;
                if (!(cut.rem == exact.rem.truncated(d))) ++violations;
            }
        }
    }
    return violations;
}

} // namespace powser::testing
