#include "powser/cofactor.hpp"

namespace powser {

cofactor_trace start_trace(const rewrite_system& sys, const series& f, std::uint32_t d) {
    cofactor_trace trace{{}, {}, f, d};
    trace.cofactors.assign(sys.size(), series(sys.nvars(), sys.field()));
    return trace;
}

series partial_cofactor(const cofactor_trace& trace, const rewrite_system& sys,
                        std::size_t i, std::size_t upto) {
    series out(sys.nvars(), sys.field());
    upto = std::min(upto, trace.records.size());
    for (std::size_t k = 0; k < upto; ++k) {
        const rewrite_step& r = trace.records[k];
        if (r.generator != i) continue;
        coefficient factor = r.value / sys.leading_coefficient(i);
        out = add(out, series::from_terms(sys.nvars(), sys.field(), {{r.quotient, factor}}));
    }
    return out;
}

std::uint32_t certified_precision(const rewrite_system& sys, std::uint32_t d, std::size_t i) {
    std::uint32_t lead_deg = sys.leading_monomial(i).degree();
    return lead_deg >= d ? 0 : d - lead_deg;
}

namespace {

series eliminate_at(const series& f, const monomial& m, std::size_t i,
                    const rewrite_system& sys, cofactor_trace& trace) {
    const coefficient value = f.coeff(m);
    const monomial quotient = *divides(sys.leading_monomial(i), m);
    const coefficient factor = value / sys.leading_coefficient(i);

    series multiple = scale(mul_monomial(sys.generator(i), quotient), factor);
    series next = sub(f, multiple);

    trace.cofactors[i] = add(trace.cofactors[i],
                             series::from_terms(sys.nvars(), sys.field(), {{quotient, factor}}));
    trace.records.push_back({m, i, quotient, value});
    trace.residual = next;
    return next;
}

} // namespace

series eliminate_once(const series& f, const rewrite_system& sys, cofactor_trace& trace) {
    leading_data_result ld = leading_data(f, sys.order());
    auto i = sys.find_divisor(ld.lm);
    if (!i) {
        std::vector<std::string> names;
        throw irreducible_leading_monomial(ld.lm, ld.lm.to_string(names));
    }
    return eliminate_at(f, ld.lm, *i, sys, trace);
}

membership_verdict limit_coefficients(const series& f, const rewrite_system& sys,
                                      std::uint32_t d) {
    const precision needed = precision::finite(d);
    if (f.prec() < needed)
        throw precision_loss("input known to precision " + f.prec().to_string() +
                             ", membership asked at " + std::to_string(d));
    if (sys.min_generator_precision() < needed)
        throw precision_loss("a generator is known to precision " +
                             sys.min_generator_precision().to_string() +
                             ", membership asked at " + std::to_string(d));

    cofactor_trace trace = start_trace(sys, f, d);
    series current = f;
    std::optional<monomial> first_irreducible;

    // Leading-monomial eliminations until the residual vanishes below d or
    // the leading monomial resists.
    while (true) {
        valuation_result v = valuation(current);
        if (!v.is_finite() || v.bound >= d) break;
        const monomial lead = leading_data(current, sys.order()).lm;
        auto i = sys.find_divisor(lead);
        if (!i) {
            first_irreducible = lead;
            break;
        }
        current = eliminate_at(current, lead, *i, sys, trace);
    }

    // Past an irreducible leading monomial the residual can still shed its
    // remaining reducible monomials; eliminated monomials keep decreasing for
    // the opposite order.
    if (first_irreducible) {
        while (true) {
            auto candidates = reducible_monomials(current, sys, d);
            if (candidates.empty()) break;
            const auto& [m, i] = candidates.front();
            current = eliminate_at(current, m, i, sys, trace);
        }
    }

    series normal_form = current.truncated(d);
    bool in_ideal = normal_form.is_zero();
    std::optional<monomial> irreducible;
    if (!in_ideal) irreducible = leading_data(normal_form, sys.order()).lm;

    return {in_ideal, d, trace.cofactors, std::move(normal_form), std::move(irreducible),
            std::move(trace)};
}

bool verify_cofactor_identity(const series& f, const membership_verdict& verdict,
                              const rewrite_system& sys, std::uint32_t d) {
    if (!verdict.in_ideal)
        throw invalid_argument("cofactor identity is only defined for a positive verdict");
    series sum(sys.nvars(), sys.field());
    for (std::size_t i = 0; i < sys.size(); ++i)
        sum = add(sum, mul(verdict.cofactors[i], sys.generator(i)));
    return congruent_mod(f, sum, d);
}

} // namespace powser
