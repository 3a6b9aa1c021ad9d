#include "powser/series.hpp"

#include <algorithm>

namespace powser {

std::string valuation_result::to_string() const {
    switch (k) {
        case kind::finite: return std::to_string(bound);
        case kind::at_least: return ">=" + std::to_string(bound);
        case kind::infinite: return "inf";
    }
    return "?";
}

mpq_class adic_distance::bound() const {
    if (k_ == kind::zero) return mpq_class(0);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, e_);
    mpq_class q(1);
    q /= mpq_class(den);
    return q;
}

std::string adic_distance::to_string() const {
    switch (k_) {
        case kind::zero: return "0";
        case kind::exact: return bound().get_str();
        case kind::at_most: return "<=" + bound().get_str();
    }
    return "?";
}

series::series(std::size_t nvars, field_spec field, precision prec)
    : nvars_(nvars), field_(field), prec_(prec) {}

series series::from_terms(std::size_t nvars, field_spec field,
                          const std::vector<std::pair<monomial, coefficient>>& terms,
                          precision prec) {
    series s(nvars, field, prec);
    for (const auto& [m, c] : terms) {
        if (m.nvars() != nvars)
            throw dimension_mismatch("term arity " + std::to_string(m.nvars()) +
                                     " in a series over " + std::to_string(nvars) + " variables");
        if (!(c.field() == field))
            throw field_mismatch("term over " + c.field().to_string() + " in a series over " +
                                 field.to_string());
        if (!prec.covers(m.degree())) continue;
        auto it = s.terms_.find(m);
        if (it == s.terms_.end()) {
            if (!c.is_zero()) s.terms_.emplace(m, c);
        } else {
            coefficient sum = it->second + c;
            if (sum.is_zero()) s.terms_.erase(it);
            else it->second = sum;
        }
    }
    return s;
}

coefficient series::coeff(const monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? coefficient::zero(field_) : it->second;
}

series series::truncated(precision p) const {
    series out(nvars_, field_, min(prec_, p));
    for (const auto& [m, c] : terms_)
        if (out.prec_.covers(m.degree())) out.terms_.emplace(m, c);
    return out;
}

void series::check_compatible(const series& rhs) const {
    if (nvars_ != rhs.nvars_)
        throw dimension_mismatch("series over " + std::to_string(nvars_) + " and " +
                                 std::to_string(rhs.nvars_) + " variables");
    if (!(field_ == rhs.field_))
        throw field_mismatch("series over " + field_.to_string() + " and " +
                             rhs.field_.to_string());
}

series add(const series& f, const series& g) {
    f.check_compatible(g);
    series out(f.nvars_, f.field_, min(f.prec_, g.prec_));
    for (const auto& [m, c] : f.terms_)
        if (out.prec_.covers(m.degree())) out.terms_.emplace(m, c);
    for (const auto& [m, c] : g.terms_) {
        if (!out.prec_.covers(m.degree())) continue;
        auto it = out.terms_.find(m);
        if (it == out.terms_.end()) {
            out.terms_.emplace(m, c);
        } else {
            coefficient sum = it->second + c;
            if (sum.is_zero()) out.terms_.erase(it);
            else it->second = sum;
        }
    }
    return out;
}

series sub(const series& f, const series& g) {
    return add(f, scale(g, -coefficient::one(g.field())));
}

series scale(const series& f, const coefficient& c) {
    if (!(c.field() == f.field()))
        throw field_mismatch("scaling a series over " + f.field().to_string() +
                             " by a coefficient over " + c.field().to_string());
    if (c.is_zero()) return series(f.nvars_, f.field_, precision::infinite());
    series out(f.nvars_, f.field_, f.prec_);
    for (const auto& [m, v] : f.terms_) out.terms_.emplace(m, v * c);
    return out;
}

namespace {

// min(prec(f) + val(g), prec(g) + val(f)), each valuation taken as its known
// lower bound; the valuation of an exact zero is infinite.
precision product_precision(const series& f, const series& g) {
    auto shifted = [](precision p, const series& other) {
        valuation_result v = valuation(other);
        if (v.k == valuation_result::kind::infinite) return precision::infinite();
        return p.shifted_up(v.bound);
    };
    return min(shifted(f.prec(), g), shifted(g.prec(), f));
}

} // namespace

series mul(const series& f, const series& g) {
    f.check_compatible(g);
    series out(f.nvars_, f.field_, product_precision(f, g));
    for (const auto& [mf, cf] : f.terms_) {
        for (const auto& [mg, cg] : g.terms_) {
            monomial m = mf * mg;
            if (!out.prec_.covers(m.degree())) continue;
            coefficient c = cf * cg;
            auto it = out.terms_.find(m);
            if (it == out.terms_.end()) {
                if (!c.is_zero()) out.terms_.emplace(std::move(m), c);
            } else {
                coefficient sum = it->second + c;
                if (sum.is_zero()) out.terms_.erase(it);
                else it->second = sum;
            }
        }
    }
    return out;
}

series mul_monomial(const series& f, const monomial& m) {
    if (m.nvars() != f.nvars())
        throw dimension_mismatch("monomial arity " + std::to_string(m.nvars()) +
                                 " against a series over " + std::to_string(f.nvars()) +
                                 " variables");
    series out(f.nvars_, f.field_, f.prec_.shifted_up(m.degree()));
    for (const auto& [mf, c] : f.terms_) out.terms_.emplace(mf * m, c);
    return out;
}

valuation_result valuation(const series& f) {
    if (f.terms().empty()) {
        return f.prec().is_infinite() ? valuation_result::infinite()
                                      : valuation_result::at_least(f.prec().value());
    }
    std::uint32_t best = UINT32_MAX;
    for (const auto& [m, c] : f.terms()) best = std::min(best, m.degree());
    return valuation_result::finite(best);
}

adic_distance delta(const series& f, const series& g) {
    series d = sub(f, g);
    valuation_result v = valuation(d);
    switch (v.k) {
        case valuation_result::kind::finite: return adic_distance::exact(v.bound);
        case valuation_result::kind::at_least: return adic_distance::at_most(v.bound);
        case valuation_result::kind::infinite: return adic_distance::zero();
    }
    return adic_distance::zero();
}

bool congruent_mod(const series& f, const series& g, std::uint32_t d) {
    f.check_compatible(g);
    const precision needed = precision::finite(d);
    if (f.prec() < needed || g.prec() < needed)
        throw precision_loss("congruence modulo degree " + std::to_string(d) +
                             " asked of operands with precisions " + f.prec().to_string() +
                             " and " + g.prec().to_string());
    auto below = [d](const series& s) {
        series::term_map out;
        for (const auto& [m, c] : s.terms())
            if (m.degree() < d) out.emplace(m, c);
        return out;
    };
    return below(f) == below(g);
}

leading_data_result leading_data(const series& f, const monomial_order& ord) {
    if (f.terms().empty())
        throw zero_series("leading data of a series with empty support");
    const monomial* best = nullptr;
    for (const auto& [m, c] : f.terms()) {
        if (best == nullptr || ord.less(m, *best)) best = &m;
    }
    coefficient lc = f.coeff(*best);
    series lead = series::from_terms(f.nvars(), f.field(), {{*best, lc}}, f.prec());
    return {*best, lc, sub(lead, f)};
}

} // namespace powser
