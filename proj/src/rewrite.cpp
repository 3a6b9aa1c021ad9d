#include "powser/rewrite.hpp"

#include <algorithm>

namespace powser {

rewrite_system::rewrite_system(std::vector<series> generators, monomial_order ord)
    : generators_(std::move(generators)), ord_(std::move(ord)),
      min_prec_(precision::infinite()) {
    if (generators_.empty())
        throw invalid_argument("a rewrite system needs at least one generator");
    if (!ord_.degree_compatible())
        throw non_compatible_order("rewrite systems require a degree-compatible order, got " +
                                   to_string(ord_.kind()));

    nvars_ = generators_.front().nvars();
    field_ = generators_.front().field();
    if (ord_.nvars() != nvars_)
        throw dimension_mismatch("order over " + std::to_string(ord_.nvars()) +
                                 " variables, generators over " + std::to_string(nvars_));

    leading_.reserve(generators_.size());
    monic_rem_.reserve(generators_.size());
    for (const series& s : generators_) {
        generators_.front().check_compatible(s);
        if (s.is_zero()) throw zero_series("rewrite systems admit no zero generator");
        leading_data_result ld = leading_data(s, ord_);
        monic_rem_.push_back(scale(ld.rem, ld.lc.inverse()));
        leading_.push_back(std::move(ld));
        min_prec_ = min(min_prec_, s.prec());
    }
}

std::optional<std::size_t> rewrite_system::find_divisor(const monomial& m, tie_break tb) const {
    if (tb == tie_break::smallest_index) {
        for (std::size_t i = 0; i < leading_.size(); ++i)
            if (divides(leading_[i].lm, m)) return i;
    } else {
        for (std::size_t i = leading_.size(); i-- > 0;)
            if (divides(leading_[i].lm, m)) return i;
    }
    return std::nullopt;
}

std::vector<std::pair<monomial, std::size_t>> reducible_monomials(
    const series& f, const rewrite_system& sys, std::uint32_t d, tie_break tb) {
    std::vector<std::pair<monomial, std::size_t>> out;
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() >= d) continue;
        if (auto i = sys.find_divisor(m, tb)) out.emplace_back(m, *i);
    }
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
        return sys.order().less(a.first, b.first);
    });
    return out;
}

series apply_rewrite_step(const series& f, const rewrite_step& step, const rewrite_system& sys) {
    if (step.generator >= sys.size())
        throw invalid_step("generator index " + std::to_string(step.generator) + " out of range");
    const monomial& lm = sys.leading_monomial(step.generator);
    if (!(lm * step.quotient == step.target))
        throw invalid_step("target is not the quotient times the generator's leading monomial");
    coefficient actual = f.coeff(step.target);
    if (actual.is_zero())
        throw invalid_step("target monomial does not occur in the series");
    if (!(actual == step.value))
        throw invalid_step("recorded coefficient differs from the series");

    // f - value*target + (value/lc)*quotient*rem(s_i)
    series eliminated = series::from_terms(f.nvars(), f.field(), {{step.target, step.value}});
    series replacement = scale(mul_monomial(sys.monic_remainder(step.generator), step.quotient),
                               step.value);
    return add(sub(f, eliminated), replacement);
}

namespace {

// The greatest reducible monomial of degree < d for the opposite order, i.e.
// the least for <.
std::optional<std::pair<monomial, std::size_t>> next_target(const series& f,
                                                            const rewrite_system& sys,
                                                            std::uint32_t d, tie_break tb) {
    std::optional<std::pair<monomial, std::size_t>> best;
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() >= d) continue;
        if (best && !sys.order().less(m, best->first)) continue;
        if (auto i = sys.find_divisor(m, tb)) best.emplace(m, *i);
    }
    return best;
}

} // namespace

reduction_result reduce_to_precision(const series& f, const rewrite_system& sys, std::uint32_t d,
                                     tie_break tb) {
    const precision needed = precision::finite(d);
    if (f.prec() < needed)
        throw precision_loss("input known to precision " + f.prec().to_string() +
                             ", reduction asked at " + std::to_string(d));
    if (sys.min_generator_precision() < needed)
        throw precision_loss("a generator is known to precision " +
                             sys.min_generator_precision().to_string() +
                             ", reduction asked at " + std::to_string(d));

    std::vector<rewrite_step> steps;
    std::vector<series> cofactors(sys.size(), series(sys.nvars(), sys.field()));

    series current = f;
    while (auto target = next_target(current, sys, d, tb)) {
        const auto& [m, i] = *target;
        const coefficient value = current.coeff(m);
        const monomial quotient = *divides(sys.leading_monomial(i), m);
        const coefficient factor = value / sys.leading_coefficient(i);

        // current - factor*quotient*s_i ; the target coefficient cancels and
        // every new monomial is strictly below the target for the opposite
        // order.
        series multiple = scale(mul_monomial(sys.generator(i), quotient), factor);
        current = sub(current, multiple);

        series contribution = series::from_terms(sys.nvars(), sys.field(), {{quotient, factor}});
        cofactors[i] = add(cofactors[i], contribution);
        steps.push_back({m, i, quotient, value});
    }

    return {current.truncated(d), std::move(steps), std::move(cofactors)};
}

bool is_normal_form(const series& f, const rewrite_system& sys, std::uint32_t d) {
    return reducible_monomials(f, sys, d).empty();
}

} // namespace powser
