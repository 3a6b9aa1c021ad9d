#include "powser/oracle.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "powser/cofactor.hpp"
#include "powser/confluence.hpp"

namespace powser {

truncation_basis_matrix::truncation_basis_matrix(const rewrite_system& sys, std::uint32_t d)
    : sys_(sys), d_(d) {
    if (sys.min_generator_precision() < precision::finite(d))
        throw precision_loss("a generator is known to precision " +
                             sys.min_generator_precision().to_string() +
                             ", oracle asked at " + std::to_string(d));

    columns_ = enumerate_monomials(sys.nvars(), d);
    std::map<monomial, std::size_t> column_of;
    for (std::size_t c = 0; c < columns_.size(); ++c) column_of.emplace(columns_[c], c);

    for (std::size_t j = 0; j < sys.size(); ++j) {
        std::uint32_t lead_deg = sys.leading_monomial(j).degree();
        if (lead_deg >= d) continue; // every multiple vanishes modulo degree d
        for (const monomial& m : enumerate_monomials(sys.nvars(), d - lead_deg))
            rows_.emplace_back(j, m);
    }

    const coefficient zero = coefficient::zero(sys.field());
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        const auto& [j, m] = rows_[r];
        std::vector<coefficient> values(columns_.size(), zero);
        const series product = mul_monomial(sys.generator(j), m);
        for (const auto& [mono, c] : product.terms()) {
            auto it = column_of.find(mono);
            if (it != column_of.end()) values[it->second] = c;
        }
        std::vector<coefficient> combination(rows_.size(), zero);
        combination[r] = coefficient::one(sys.field());

        // Reduce against the established pivots.
        for (const pivot_row& p : pivots_) {
            const coefficient& c = values[p.column];
            if (c.is_zero()) continue;
            for (std::size_t k = 0; k < values.size(); ++k)
                if (!p.values[k].is_zero()) values[k] = values[k] - c * p.values[k];
            for (std::size_t k = 0; k < combination.size(); ++k)
                if (!p.combination[k].is_zero())
                    combination[k] = combination[k] - c * p.combination[k];
        }

        auto lead = std::find_if(values.begin(), values.end(),
                                 [](const coefficient& c) { return !c.is_zero(); });
        if (lead == values.end()) continue; // dependent row
        const coefficient inv = lead->inverse();
        for (auto& v : values) v = v * inv;
        for (auto& v : combination) v = v * inv;
        pivots_.push_back({static_cast<std::size_t>(lead - values.begin()), std::move(values),
                           std::move(combination)});
    }
}

std::vector<coefficient> truncation_basis_matrix::to_dense(const series& f) const {
    std::vector<coefficient> v(columns_.size(), coefficient::zero(sys_.field()));
    for (std::size_t c = 0; c < columns_.size(); ++c) {
        coefficient value = f.coeff(columns_[c]);
        if (!value.is_zero()) v[c] = value;
    }
    return v;
}

std::optional<oracle_solution> truncation_basis_matrix::solve(const series& f) const {
    if (f.prec() < precision::finite(d_))
        throw precision_loss("input known to precision " + f.prec().to_string() +
                             ", oracle asked at " + std::to_string(d_));
    std::vector<coefficient> v = to_dense(f.truncated(d_));
    std::vector<coefficient> acc(rows_.size(), coefficient::zero(sys_.field()));

    for (const pivot_row& p : pivots_) {
        const coefficient c = v[p.column];
        if (c.is_zero()) continue;
        for (std::size_t k = 0; k < v.size(); ++k)
            if (!p.values[k].is_zero()) v[k] = v[k] - c * p.values[k];
        for (std::size_t k = 0; k < acc.size(); ++k)
            if (!p.combination[k].is_zero()) acc[k] = acc[k] + c * p.combination[k];
    }
    if (std::any_of(v.begin(), v.end(), [](const coefficient& c) { return !c.is_zero(); }))
        return std::nullopt;

    oracle_solution solution;
    for (std::size_t j = 0; j < sys_.size(); ++j)
        solution.cofactors.emplace_back(sys_.nvars(), sys_.field(),
                                        precision::finite(certified_precision(sys_, d_, j)));
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        if (acc[r].is_zero()) continue;
        const auto& [j, m] = rows_[r];
        solution.cofactors[j] = add(
            solution.cofactors[j],
            series::from_terms(sys_.nvars(), sys_.field(), {{m, acc[r]}},
                               solution.cofactors[j].prec()));
    }
    return solution;
}

std::optional<oracle_solution> membership_oracle(const series& f, const rewrite_system& sys,
                                                 std::uint32_t d) {
    return truncation_basis_matrix(sys, d).solve(f);
}

namespace {

// Deterministic helpers on raw engine output; std::uniform_int_distribution
// is implementation-defined and would break byte-identical reports.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, std::uint32_t max_degree) {
    std::vector<std::uint32_t> e(nvars, 0);
    std::uint32_t degree = static_cast<std::uint32_t>(below(rng, max_degree + 1));
    for (std::uint32_t k = 0; k < degree; ++k) ++e[below(rng, nvars)];
    return monomial(std::move(e));
}

coefficient random_coefficient(std::mt19937_64& rng, const field_spec& field) {
    if (field.is_rational()) {
        static const long nums[] = {1, -1, 2, -2, 3, -3, 1, -1};
        static const long dens[] = {1, 1, 1, 1, 1, 1, 2, 2};
        std::size_t k = below(rng, 8);
        mpq_class q(nums[k], dens[k]);
        q.canonicalize();
        return coefficient::from_rational(q, field);
    }
    return coefficient::from_integer(1 + static_cast<long>(below(rng, field.characteristic() - 1)),
                                     field);
}

series random_series(std::mt19937_64& rng, std::size_t nvars, const field_spec& field,
                     std::uint32_t below_degree, std::size_t max_terms) {
    std::vector<std::pair<monomial, coefficient>> terms;
    std::size_t count = 1 + below(rng, max_terms);
    for (std::size_t t = 0; t < count; ++t)
        terms.emplace_back(random_monomial(rng, nvars, below_degree - 1),
                           random_coefficient(rng, field));
    return series::from_terms(nvars, field, terms);
}

} // namespace

cross_validate_report cross_validate(const rewrite_system& sys, std::uint32_t d,
                                     std::size_t trials, std::uint64_t seed) {
    cross_validate_report report;
    report.precision_d = d;
    report.seed = seed;
    report.sb_pass = check_standard_basis(sys, d).pass;

    if (trials == 0) return report;

    truncation_basis_matrix matrix(sys, d);
    std::mt19937_64 rng(seed);

    auto run_case = [&](series input, bool guaranteed) {
        bool oracle_member = matrix.solve(input).has_value();
        bool reduction_member = limit_coefficients(input, sys, d).in_ideal;
        if (oracle_member == reduction_member) {
            ++report.agreements;
            return;
        }
        cross_validate_case record{std::move(input), oracle_member, reduction_member, guaranteed,
                                   false};
        if (oracle_member && !reduction_member && !report.sb_pass) {
            record.expected = true; // the generating set is not a standard basis at d
            report.expected_divergences.push_back(std::move(record));
        } else {
            report.disagreements.push_back(std::move(record));
        }
    };

    for (std::size_t t = 0; t < trials; ++t) {
        run_case(random_series(rng, sys.nvars(), sys.field(), d, 4), false);
        ++report.random_inputs;
    }
    for (std::size_t t = 0; t < trials; ++t) {
        series combo(sys.nvars(), sys.field());
        for (std::size_t j = 0; j < sys.size(); ++j) {
            if (below(rng, 4) == 0) continue; // leave some generators out
            series u = random_series(rng, sys.nvars(), sys.field(), std::max<std::uint32_t>(d / 2, 1), 3);
            combo = add(combo, mul(u, sys.generator(j)));
        }
        run_case(combo.truncated(d), true);
        ++report.member_inputs;
    }
    return report;
}

} // namespace powser
