#pragma once

// Brute-force ideal membership modulo a degree bound, independent of the
// rewriting machinery: the images of all products monomial*generator span a
// finite-dimensional subspace of the truncated series, and membership is a
// linear-system solve over the exact coefficient field. Used to cross-check
// the elimination-based decision.

#include <cstdint>
#include <optional>
#include <vector>

#include "powser/rewrite.hpp"

namespace powser {

struct oracle_solution {
    std::vector<series> cofactors; // one truncated series per generator
};

// Dense exact row-echelon form of the span {m*s_j : deg(m) + deg(lm(s_j)) < d}
// inside the space of series modulo degree d, with enough bookkeeping to
// express solutions in terms of the original products.
class truncation_basis_matrix {
public:
    truncation_basis_matrix(const rewrite_system& sys, std::uint32_t d);

    std::size_t row_count() const { return rows_.size(); }
    std::size_t column_count() const { return columns_.size(); }
    std::size_t rank() const { return pivots_.size(); }

    // A cofactor tuple with f = sum cofactors[j]*s_j modulo degree d, if the
    // truncation of f lies in the span.
    std::optional<oracle_solution> solve(const series& f) const;

private:
    std::vector<coefficient> to_dense(const series& f) const;

    const rewrite_system& sys_;
    std::uint32_t d_;
    std::vector<monomial> columns_;            // monomials of degree < d
    std::vector<std::pair<std::size_t, monomial>> rows_; // (generator, multiplier)

    struct pivot_row {
        std::size_t column;
        std::vector<coefficient> values;      // normalized to pivot 1
        std::vector<coefficient> combination; // over the original rows
    };
    std::vector<pivot_row> pivots_;
};

std::optional<oracle_solution> membership_oracle(const series& f, const rewrite_system& sys,
                                                 std::uint32_t d);

// One compared input of a cross-validation run.
struct cross_validate_case {
    series input;
    bool oracle_member;
    bool reduction_member;
    bool guaranteed_member; // input was built as an explicit combination
    bool expected;          // divergence explained by a failing standard-basis check
};

struct cross_validate_report {
    std::uint32_t precision_d = 0;
    std::uint64_t seed = 0;
    std::size_t random_inputs = 0;
    std::size_t member_inputs = 0;
    bool sb_pass = false; // standard-basis check at d, used to classify divergences
    std::size_t agreements = 0;
    std::vector<cross_validate_case> disagreements;       // bugs; expected empty
    std::vector<cross_validate_case> expected_divergences; // oracle member, reduction negative, sb failing
};

// Compares elimination-based membership against the linear-algebra oracle on
// `trials` random bounded-support inputs plus `trials` explicit combinations
// of the generators. Deterministic for a fixed seed.
cross_validate_report cross_validate(const rewrite_system& sys, std::uint32_t d,
                                     std::size_t trials, std::uint64_t seed);

} // namespace powser
