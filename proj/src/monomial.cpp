#include "powser/monomial.hpp"

#include <algorithm>

namespace powser {

std::string monomial::to_string(std::span<const std::string> names) const {
    std::string out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += i < names.size() ? names[i] : "x" + std::to_string(i);
        if (exps_[i] > 1) out += '^' + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
}

std::optional<monomial> divides(const monomial& a, const monomial& b) {
    a.check_same_arity(b);
    std::vector<std::uint32_t> q(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        if (a.exponent(i) > b.exponent(i)) return std::nullopt;
        q[i] = b.exponent(i) - a.exponent(i);
    }
    return monomial(std::move(q));
}

monomial lcm(const monomial& a, const monomial& b) {
    a.check_same_arity(b);
    std::vector<std::uint32_t> e(a.nvars());
    for (std::size_t i = 0; i < a.nvars(); ++i)
        e[i] = std::max(a.exponent(i), b.exponent(i));
    return monomial(std::move(e));
}

namespace {

void emit_of_degree(std::size_t nvars, std::uint32_t degree, std::size_t var,
                    std::vector<std::uint32_t>& current, std::vector<monomial>& out) {
    if (var + 1 == nvars) {
        current[var] = degree;
        out.emplace_back(current);
        current[var] = 0;
        return;
    }
    for (std::uint32_t e = 0; e <= degree; ++e) {
        current[var] = e;
        emit_of_degree(nvars, degree - e, var + 1, current, out);
    }
    current[var] = 0;
}

} // namespace

std::vector<monomial> enumerate_monomials(std::size_t nvars, std::uint32_t below_degree) {
    std::vector<monomial> out;
    if (nvars == 0) {
        if (below_degree > 0) out.emplace_back(std::size_t{0});
        return out;
    }
    std::vector<std::uint32_t> current(nvars, 0);
    for (std::uint32_t d = 0; d < below_degree; ++d) {
        std::vector<monomial> level;
        emit_of_degree(nvars, d, 0, current, level);
        std::sort(level.begin(), level.end());
        out.insert(out.end(), level.begin(), level.end());
    }
    return out;
}

} // namespace powser
