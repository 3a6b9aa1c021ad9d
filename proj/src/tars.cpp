#include "powser/tars.hpp"

namespace powser::tars {

namespace {

// v = 1/2^n for some n >= 0?
std::optional<std::uint32_t> as_low_dyadic(const mpq_class& v) {
    if (v.get_num() != 1) return std::nullopt;
    const mpz_class& den = v.get_den();
    // Denominator a power of two: scan_1 finds the only set bit.
    mp_bitcnt_t bit = mpz_scan1(den.get_mpz_t(), 0);
    mpz_class check;
    mpz_ui_pow_ui(check.get_mpz_t(), 2, bit);
    if (check != den) return std::nullopt;
    return static_cast<std::uint32_t>(bit);
}

mpq_class low_dyadic(std::uint32_t n) {
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 2, n);
    mpq_class q(1);
    q /= mpq_class(den);
    return q;
}

} // namespace

bool cyclic_system::in_domain(const state& s) {
    if (s == 0 || s == 2) return true;
    if (as_low_dyadic(s)) return true;
    return s < 2 && as_low_dyadic(2 - s).has_value();
}

std::vector<cyclic_system::state> cyclic_system::successors(const state& s) const {
    if (!in_domain(s))
        throw domain_violation(s.get_str() + " is not a state of the cyclic system");
    if (s == 0 || s == 2) return {};

    std::vector<state> out;
    if (auto n = as_low_dyadic(s)) {
        out.push_back(low_dyadic(*n + 1));
        if (*n >= 1) out.push_back(low_dyadic(*n - 1));
    }
    if (auto n = as_low_dyadic(2 - s)) {
        out.push_back(2 - low_dyadic(*n + 1));
        if (*n >= 1) out.push_back(2 - low_dyadic(*n - 1));
    }
    return out;
}

std::vector<nbar_system::state> nbar_system::successors(const state& s) const {
    const auto& [a, b] = s;
    if (!a || !b) return {};
    return {{extended_nat(*a + 1), b}, {a, extended_nat(*b + 1)}};
}

mpq_class nbar_system::distance(const state& x, const state& y) const {
    auto weight = [](const extended_nat& n) -> mpq_class {
        if (!n) return mpq_class(0);
        return low_dyadic(*n);
    };
    return abs(weight(x.first) - weight(y.first)) + abs(weight(x.second) - weight(y.second));
}

std::string nbar_system::to_string(const state& s) const {
    auto one = [](const extended_nat& n) {
        return n ? std::to_string(*n) : std::string("inf");
    };
    return "(" + one(s.first) + "," + one(s.second) + ")";
}

} // namespace powser::tars
