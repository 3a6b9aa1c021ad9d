#include "powser/confluence.hpp"

namespace powser {

namespace {

// One simultaneous elimination of m from one side, when its coefficient there
// is non-zero.
void eliminate_side(series& side, const monomial& m, std::size_t i, const monomial& quotient,
                    const rewrite_system& sys, std::vector<rewrite_step>& steps) {
    coefficient c = side.coeff(m);
    if (c.is_zero()) return;
    series eliminated = series::from_terms(side.nvars(), side.field(), {{m, c}});
    series replacement = scale(mul_monomial(sys.monic_remainder(i), quotient), c);
    side = add(sub(side, eliminated), replacement);
    steps.push_back({m, i, quotient, c});
}

} // namespace

join_result join(const series& g, const series& h, const rewrite_system& sys, std::uint32_t d) {
    g.check_compatible(h);
    const precision needed = precision::finite(d);
    if (g.prec() < needed || h.prec() < needed)
        throw precision_loss("join at precision " + std::to_string(d) +
                             " asked of sides with precisions " + g.prec().to_string() +
                             " and " + h.prec().to_string());
    if (sys.min_generator_precision() < needed)
        throw precision_loss("a generator is known to precision " +
                             sys.min_generator_precision().to_string() +
                             ", join asked at " + std::to_string(d));

    join_result out{false, series(sys.nvars(), sys.field()), {}, {}, {}, std::nullopt};

    series left = g;
    series right = h;
    while (true) {
        series diff = sub(left, right);
        valuation_result v = valuation(diff);
        if (!v.is_finite() || v.bound >= d) {
            out.joined = true;
            out.common = left.truncated(d);
            return out;
        }

        // The difference's leading monomial; with a degree-compatible order
        // its degree is the valuation, hence below d.
        const monomial m = leading_data(diff, sys.order()).lm;
        auto i = sys.find_divisor(m);
        if (!i) {
            out.obstruction = m;
            return out;
        }
        const monomial quotient = *divides(sys.leading_monomial(*i), m);
        eliminate_side(left, m, *i, quotient, sys, out.left_steps);
        eliminate_side(right, m, *i, quotient, sys, out.right_steps);
        out.eliminated.push_back(m);
    }
}

series s_series(std::size_t i, std::size_t j, const rewrite_system& sys) {
    if (i == j) throw invalid_argument("an S-series pairs two distinct generators");
    const monomial l = lcm(sys.leading_monomial(i), sys.leading_monomial(j));
    auto balanced = [&](std::size_t k) {
        monomial q = *divides(sys.leading_monomial(k), l);
        return scale(mul_monomial(sys.generator(k), q), sys.leading_coefficient(k).inverse());
    };
    return sub(balanced(i), balanced(j));
}

sb_report check_standard_basis(const rewrite_system& sys, std::uint32_t d) {
    if (sys.min_generator_precision() < precision::finite(d))
        throw precision_loss("a generator is known to precision " +
                             sys.min_generator_precision().to_string() +
                             ", standard-basis check asked at " + std::to_string(d));
    sb_report report{d, true, {}};
    for (std::size_t i = 0; i < sys.size(); ++i) {
        for (std::size_t j = i + 1; j < sys.size(); ++j) {
            series s = s_series(i, j, sys);
            series nf = s.is_zero() ? s.truncated(d)
                                    : reduce_to_precision(s, sys, d).normal_form;
            bool zero = nf.is_zero();
            report.pass = report.pass && zero;
            report.pairs.push_back({i, j, std::move(s), std::move(nf), zero});
        }
    }
    return report;
}

} // namespace powser
