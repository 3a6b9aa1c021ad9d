#include "powser/parse.hpp"

#include <algorithm>
#include <cctype>

namespace powser {

namespace {

class scanner {
public:
    scanner(const std::string& text, std::span<const std::string> vars, field_spec field)
        : text_(text), vars_(vars), field_(field) {}

    series run() {
        std::vector<std::pair<monomial, coefficient>> terms;
        skip_ws();
        if (eof()) throw parse_error("empty series", pos_);
        bool negative = eat_sign(false);
        terms.push_back(parse_term(negative));
        skip_ws();
        while (!eof()) {
            negative = eat_sign(true);
            terms.push_back(parse_term(negative));
            skip_ws();
        }
        return series::from_terms(vars_.size(), field_, terms);
    }

private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }

    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    // Consumes one sign. When required, a missing sign is an error.
    bool eat_sign(bool required) {
        skip_ws();
        if (!eof() && (peek() == '+' || peek() == '-')) {
            bool neg = peek() == '-';
            ++pos_;
            return neg;
        }
        if (required) throw parse_error("expected '+' or '-'", pos_);
        return false;
    }

    std::pair<monomial, coefficient> parse_term(bool negative) {
        skip_ws();
        if (eof()) throw parse_error("expected a term", pos_);

        coefficient c = coefficient::one(field_);
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            c = parse_rational();
            saw_coeff = true;
        }

        monomial m(vars_.size());
        skip_ws();
        bool star_after_coeff = saw_coeff && !eof() && peek() == '*';
        if (star_after_coeff) {
            ++pos_;
            skip_ws();
        }
        if (!eof() && is_ident_start(peek())) {
            m = parse_monomial_factors();
        } else if (star_after_coeff) {
            throw parse_error("expected a variable after '*'", pos_);
        } else if (!saw_coeff) {
            throw parse_error("expected a coefficient or a variable", pos_);
        }

        if (negative) c = -c;
        return {std::move(m), std::move(c)};
    }

    coefficient parse_rational() {
        mpz_class num(parse_nat());
        skip_ws();
        if (!eof() && peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t den_pos = pos_;
            mpz_class den(parse_nat());
            if (den == 0) throw parse_error("zero denominator", den_pos);
            mpq_class q(num, den);
            q.canonicalize();
            return coefficient::from_rational(q, field_);
        }
        return coefficient::from_rational(mpq_class(num), field_);
    }

    std::string parse_nat() {
        skip_ws();
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw parse_error("expected digits", pos_);
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    static bool is_ident_start(char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    }
    static bool is_ident_char(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }

    monomial parse_monomial_factors() {
        monomial m = parse_factor();
        skip_ws();
        while (!eof() && peek() == '*') {
            std::size_t star = pos_;
            ++pos_;
            skip_ws();
            if (eof() || !is_ident_start(peek()))
                throw parse_error("expected a variable after '*'", star + 1);
            m = m * parse_factor();
            skip_ws();
        }
        return m;
    }

    monomial parse_factor() {
        std::size_t start = pos_;
        std::string name;
        while (!eof() && is_ident_char(peek())) name += text_[pos_++];
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end()) throw unknown_variable(name, start);
        std::size_t index = static_cast<std::size_t>(it - vars_.begin());

        std::uint32_t exp = 1;
        skip_ws();
        if (!eof() && peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t digits = pos_;
            std::string n = parse_nat();
            try {
                exp = static_cast<std::uint32_t>(std::stoul(n));
            } catch (const std::out_of_range&) {
                throw parse_error("exponent out of range", digits);
            }
        }
        std::vector<std::uint32_t> e(vars_.size(), 0);
        e[index] = exp;
        return monomial(std::move(e));
    }

    const std::string& text_;
    std::span<const std::string> vars_;
    field_spec field_;
    std::size_t pos_ = 0;
};

std::string render_rational_abs(const mpq_class& q) {
    mpq_class a = abs(q);
    return a.get_str();
}

} // namespace

series parse_series(const std::string& text, std::span<const std::string> vars,
                    const field_spec& field) {
    return scanner(text, vars, field).run();
}

monomial parse_monomial(const std::string& text, std::span<const std::string> vars) {
    series s = parse_series(text, vars, field_spec::rationals());
    if (s.terms().size() != 1)
        throw parse_error("expected a single monomial, got '" + text + "'", 0);
    const auto& [m, c] = *s.terms().begin();
    if (!c.is_one())
        throw parse_error("expected a monomial with coefficient one, got '" + text + "'", 0);
    return m;
}

std::string render_series(const series& f, std::span<const std::string> vars) {
    if (f.terms().empty()) return "0";

    std::vector<std::pair<monomial, coefficient>> terms(f.terms().begin(), f.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        return a.first < b.first;
    });

    std::string out;
    for (const auto& [m, c] : terms) {
        const bool rational = f.field().is_rational();
        const bool negative = rational && c.value() < 0;
        if (out.empty()) {
            if (negative) out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mag = rational ? render_rational_abs(c.value()) : c.to_string();
        if (m.is_unit()) {
            out += mag;
        } else {
            if (mag != "1") {
                out += mag;
                out += '*';
            }
            out += m.to_string(vars);
        }
    }
    return out;
}

} // namespace powser
