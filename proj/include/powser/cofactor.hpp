#pragma once

// Elimination with full bookkeeping: repeatedly removing the leading monomial
// of a residual using a matching generator, while accumulating per-generator
// cofactors. Running this to an adic precision D decides membership in the
// ideal up to degree D and produces the cofactor representation witnessing a
// positive answer.

#include <cstdint>
#include <optional>
#include <vector>

#include "powser/rewrite.hpp"

namespace powser {

// The record of an elimination run. records[k] eliminated the monomial
// records[k].target = records[k].quotient * lm(s_records[k].generator) whose
// coefficient in the residual was records[k].value; the eliminated monomials
// are strictly decreasing for the opposite order, with non-decreasing degree.
struct cofactor_trace {
    std::vector<rewrite_step> records;
    std::vector<series> cofactors; // accumulated, stored exactly
    series residual;               // the running series after the recorded steps
    std::uint32_t precision_d = 0; // requested adic precision of the run
};

cofactor_trace start_trace(const rewrite_system& sys, const series& f, std::uint32_t d);

// The cofactor of generator i after the first `upto` records.
series partial_cofactor(const cofactor_trace& trace, const rewrite_system& sys,
                        std::size_t i, std::size_t upto);

// Terms of cofactor i below this degree are final: any later elimination only
// adds quotients of degree at least d - deg(lm(s_i)).
std::uint32_t certified_precision(const rewrite_system& sys, std::uint32_t d, std::size_t i);

// One elimination step at the leading monomial of F. Throws
// irreducible_leading_monomial when no generator's leading monomial divides
// it, zero_series on empty support. Appends to the trace and returns the new
// residual.
series eliminate_once(const series& f, const rewrite_system& sys, cofactor_trace& trace);

struct membership_verdict {
    bool in_ideal;
    std::uint32_t precision_d;
    std::vector<series> cofactors;
    series residual_normal_form;         // zero when in_ideal
    std::optional<monomial> irreducible; // leading monomial of the residual otherwise
    cofactor_trace trace;
};

// Decides membership of f in the ideal modulo degree d. On a negative answer
// the verdict still carries the residual normal form (elimination continues
// past the first irreducible monomial, skipping irreducibles) and the
// cofactors for whatever was eliminated.
membership_verdict limit_coefficients(const series& f, const rewrite_system& sys,
                                      std::uint32_t d);

// Recomputes sum cofactors[i]*s_i exactly and compares with f below degree d.
bool verify_cofactor_identity(const series& f, const membership_verdict& verdict,
                              const rewrite_system& sys, std::uint32_t d);

} // namespace powser
