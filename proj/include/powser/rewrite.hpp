#pragma once

// The rewriting relation induced by a generating set and a degree-compatible
// monomial order. A step replaces one occurrence of a multiple of a
// generator's leading monomial by the matching multiple of its remainder;
// the reduction driver repeatedly eliminates the greatest reducible monomial
// for the opposite order (equivalently, the least for <) below the requested
// precision.

#include <cstdint>
#include <optional>
#include <vector>

#include "powser/series.hpp"

namespace powser {

struct irreducible_leading_monomial : error {
    irreducible_leading_monomial(const monomial& m, const std::string& rendered)
        : error("IrreducibleLeadingMonomial",
                "leading monomial " + rendered + " is divisible by no generator's leading monomial"),
          lm(m) {}

    monomial lm;
};

enum class tie_break { smallest_index, largest_index };

class rewrite_system {
public:
    // Generators must be non-zero (non-empty support) and share arity and
    // field; the order must be degree-compatible.
    rewrite_system(std::vector<series> generators, monomial_order ord);

    std::size_t size() const { return generators_.size(); }
    std::size_t nvars() const { return nvars_; }
    const field_spec& field() const { return field_; }
    const monomial_order& order() const { return ord_; }

    const series& generator(std::size_t i) const { return generators_[i]; }
    const std::vector<series>& generators() const { return generators_; }

    const monomial& leading_monomial(std::size_t i) const { return leading_[i].lm; }
    const coefficient& leading_coefficient(std::size_t i) const { return leading_[i].lc; }
    const series& remainder(std::size_t i) const { return leading_[i].rem; }

    // rem(s_i)/lc(s_i); generators are kept as given, the monic remainder is
    // cached for step application.
    const series& monic_remainder(std::size_t i) const { return monic_rem_[i]; }

    precision min_generator_precision() const { return min_prec_; }

    // Index of a generator whose leading monomial divides m.
    std::optional<std::size_t> find_divisor(const monomial& m,
                                            tie_break tb = tie_break::smallest_index) const;

private:
    std::vector<series> generators_;
    monomial_order ord_;
    std::size_t nvars_;
    field_spec field_;
    std::vector<leading_data_result> leading_;
    std::vector<series> monic_rem_;
    precision min_prec_;
};

// One rewriting step: the coefficient `value` of `target` in the pre-step
// series is eliminated using generator `generator`, with
// target = quotient * lm(s_generator).
struct rewrite_step {
    monomial target;
    std::size_t generator = 0;
    monomial quotient;
    coefficient value;
};

struct reduction_result {
    series normal_form;             // precision = requested D
    std::vector<rewrite_step> steps;
    std::vector<series> cofactors;  // input = sum cofactors[i]*s_i + normal_form  (mod degree D)
};

// Monomials of f of degree < d that some generator's leading monomial
// divides, with the chosen generator index, sorted descending for the
// opposite order (ascending for <).
std::vector<std::pair<monomial, std::size_t>> reducible_monomials(
    const series& f, const rewrite_system& sys, std::uint32_t d,
    tie_break tb = tie_break::smallest_index);

// Applies one step after validating it against f.
series apply_rewrite_step(const series& f, const rewrite_step& step, const rewrite_system& sys);

reduction_result reduce_to_precision(const series& f, const rewrite_system& sys, std::uint32_t d,
                                     tie_break tb = tie_break::smallest_index);

bool is_normal_form(const series& f, const rewrite_system& sys, std::uint32_t d);

} // namespace powser
