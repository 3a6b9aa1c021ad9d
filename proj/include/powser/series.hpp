#pragma once

// Truncated formal power series: a sparse map from monomials to non-zero
// coefficients plus an adic precision. A series with precision D is a residue
// modulo the degree-D power of the maximal ideal generated by the variables:
// every stored monomial has degree < D, and nothing is claimed about terms at
// or above D. Infinite precision marks exact polynomial data.
//
// All values are immutable after construction and safe to share across
// threads; the arithmetic is pure.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "powser/coefficient.hpp"
#include "powser/monomial.hpp"
#include "powser/order.hpp"

namespace powser {

// Adic precision: a natural number or infinity, with saturating shifts.
class precision {
public:
    static precision infinite() { return precision(kInf); }
    static precision finite(std::uint32_t d) { return precision(d); }

    bool is_infinite() const { return v_ == kInf; }

    std::uint32_t value() const {
        if (is_infinite()) throw invalid_argument("infinite precision has no finite value");
        return static_cast<std::uint32_t>(v_);
    }

    // True when a term of this degree is still within the known range.
    bool covers(std::uint32_t degree) const { return degree < v_; }

    precision shifted_up(std::uint64_t degree) const {
        return is_infinite() ? *this : precision(std::min<std::uint64_t>(v_ + degree, kInf));
    }

    friend precision min(precision a, precision b) { return precision(std::min(a.v_, b.v_)); }

    bool operator==(const precision&) const = default;
    auto operator<=>(const precision&) const = default;

    std::string to_string() const {
        return is_infinite() ? "inf" : std::to_string(v_);
    }

private:
    static constexpr std::uint64_t kInf = UINT64_MAX;
    explicit precision(std::uint64_t v) : v_(v) {}
    std::uint64_t v_;
};

// Valuation of a series: the lowest degree in the support, a lower bound when
// truncation hides everything below the precision, or infinite for an exact
// zero.
struct valuation_result {
    enum class kind { finite, at_least, infinite };

    kind k = kind::infinite;
    std::uint32_t bound = 0; // the valuation (finite) or the precision (at_least)

    static valuation_result finite(std::uint32_t v) { return {kind::finite, v}; }
    static valuation_result at_least(std::uint32_t d) { return {kind::at_least, d}; }
    static valuation_result infinite() { return {kind::infinite, 0}; }

    bool is_finite() const { return k == kind::finite; }
    bool operator==(const valuation_result&) const = default;

    std::string to_string() const;
};

// The metric value between two series: exactly 1/2^v when the valuation of
// the difference is resolved, zero when the difference is exactly zero, and
// an upper bound 1/2^D when the difference vanishes below the joint
// precision D.
class adic_distance {
public:
    enum class kind { exact, zero, at_most };

    static adic_distance exact(std::uint32_t valuation) { return {kind::exact, valuation}; }
    static adic_distance zero() { return {kind::zero, 0}; }
    static adic_distance at_most(std::uint32_t prec) { return {kind::at_most, prec}; }

    kind tag() const { return k_; }
    std::uint32_t exponent() const { return e_; } // v for exact, D for at_most

    // Numeric upper bound (exact value for the resolved kinds).
    mpq_class bound() const;

    bool operator==(const adic_distance&) const = default;

    std::string to_string() const;

private:
    adic_distance(kind k, std::uint32_t e) : k_(k), e_(e) {}
    kind k_;
    std::uint32_t e_;
};

class series {
public:
    using term_map = std::map<monomial, coefficient>;

    // The zero series.
    series(std::size_t nvars, field_spec field, precision prec = precision::infinite());

    // Builds from raw terms: zero coefficients and terms at or above the
    // precision are dropped, duplicate monomials accumulate.
    static series from_terms(std::size_t nvars, field_spec field,
                             const std::vector<std::pair<monomial, coefficient>>& terms,
                             precision prec = precision::infinite());

    std::size_t nvars() const { return nvars_; }
    const field_spec& field() const { return field_; }
    precision prec() const { return prec_; }
    const term_map& terms() const { return terms_; }

    // No stored terms; an exact zero when the precision is infinite.
    bool is_zero() const { return terms_.empty(); }
    bool is_exact_zero() const { return terms_.empty() && prec_.is_infinite(); }

    // Coefficient of m, zero (in this series' field) when absent.
    coefficient coeff(const monomial& m) const;

    // Same terms below the new precision; never raises the precision.
    series truncated(precision p) const;
    series truncated(std::uint32_t d) const { return truncated(precision::finite(d)); }

    bool operator==(const series&) const = default;

    void check_compatible(const series& rhs) const;

private:
    friend series add(const series&, const series&);
    friend series scale(const series&, const coefficient&);
    friend series mul(const series&, const series&);
    friend series mul_monomial(const series&, const monomial&);

    std::size_t nvars_;
    field_spec field_;
    precision prec_;
    term_map terms_;
};

series add(const series& f, const series& g);   // precision: min of the two
series sub(const series& f, const series& g);
series scale(const series& f, const coefficient& c); // by zero: exact zero
series mul(const series& f, const series& g);
series mul_monomial(const series& f, const monomial& m); // precision shifts up by deg(m)

inline series operator+(const series& f, const series& g) { return add(f, g); }
inline series operator-(const series& f, const series& g) { return sub(f, g); }
inline series operator*(const series& f, const series& g) { return mul(f, g); }
inline series operator-(const series& f) {
    return scale(f, -coefficient::one(f.field()));
}

valuation_result valuation(const series& f);

adic_distance delta(const series& f, const series& g);

// True when f and g agree on every term of degree < d. Both precisions must
// reach d.
bool congruent_mod(const series& f, const series& g, std::uint32_t d);

struct leading_data_result {
    monomial lm;
    coefficient lc;
    series rem; // lc*lm - f, inheriting the precision of f
};

// Leading data under the lowest-term convention: lm is the maximum of the
// support for the opposite order, i.e. the minimum for <. Throws zero_series
// on empty support.
leading_data_result leading_data(const series& f, const monomial_order& ord);

} // namespace powser
