#pragma once

// Joinability of two reducts and the truncated standard-basis check. The join
// procedure eliminates the leading monomial of the running difference from
// both sides simultaneously, with the same generator and quotient, until the
// sides agree below the requested precision or the difference's leading
// monomial resists. The standard-basis check reduces every pairwise S-series
// (the lcm-balanced difference of two generators) to the requested precision;
// a pass is a precision-relative statement only.

#include <cstdint>
#include <optional>
#include <vector>

#include "powser/rewrite.hpp"

namespace powser {

struct join_result {
    bool joined;
    series common;                        // both sides modulo degree d, when joined
    std::vector<rewrite_step> left_steps;
    std::vector<rewrite_step> right_steps;
    std::vector<monomial> eliminated;     // leading monomials of the differences, in order
    std::optional<monomial> obstruction;  // irreducible difference leading monomial, when diverged
};

join_result join(const series& g, const series& h, const rewrite_system& sys, std::uint32_t d);

// (1/lc(s_i))*(L/lm(s_i))*s_i - (1/lc(s_j))*(L/lm(s_j))*s_j with
// L = lcm(lm(s_i), lm(s_j)).
series s_series(std::size_t i, std::size_t j, const rewrite_system& sys);

struct sb_pair_report {
    std::size_t i;
    std::size_t j;
    series s;           // the S-series of the pair
    series normal_form; // its normal form modulo degree d
    bool reduces_to_zero;
};

struct sb_report {
    std::uint32_t precision_d;
    bool pass; // every pair's S-series vanishes modulo degree d
    std::vector<sb_pair_report> pairs;
};

sb_report check_standard_basis(const rewrite_system& sys, std::uint32_t d);

} // namespace powser
