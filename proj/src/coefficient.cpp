#include "powser/coefficient.hpp"

namespace powser {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

} // namespace

field_spec field_spec::prime_field(std::uint32_t p) {
    if (!is_prime(p))
        throw invalid_argument("prime field characteristic must be prime, got " + std::to_string(p));
    field_spec f;
    f.p_ = p;
    return f;
}

std::string field_spec::to_string() const {
    return is_rational() ? "Q" : "Fp:" + std::to_string(p_);
}

field_spec field_spec::parse(const std::string& text) {
    if (text == "Q") return rationals();
    if (text.rfind("Fp:", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw invalid_argument("bad field spec '" + text + "'");
        return prime_field(static_cast<std::uint32_t>(std::stoul(digits)));
    }
    throw invalid_argument("bad field spec '" + text + "' (expected \"Q\" or \"Fp:<p>\")");
}

mpq_class coefficient::reduce_mod(const mpz_class& v, std::uint32_t p) {
    mpz_class r;
    mpz_class modulus(p);
    mpz_mod(r.get_mpz_t(), v.get_mpz_t(), modulus.get_mpz_t()); // non-negative remainder
    return mpq_class(r);
}

coefficient coefficient::zero(const field_spec& field) {
    return coefficient(field, mpq_class(0));
}

coefficient coefficient::one(const field_spec& field) {
    return coefficient(field, mpq_class(1));
}

coefficient coefficient::from_integer(long value, const field_spec& field) {
    if (field.is_rational()) return coefficient(field, mpq_class(value));
    return coefficient(field, reduce_mod(mpz_class(value), field.characteristic()));
}

coefficient coefficient::from_rational(const mpq_class& value, const field_spec& field) {
    mpq_class v = value;
    v.canonicalize();
    if (field.is_rational()) return coefficient(field, v);
    const std::uint32_t p = field.characteristic();
    const coefficient den(field, reduce_mod(v.get_den(), p));
    if (den.is_zero())
        throw division_by_zero("denominator of " + v.get_str() + " vanishes in " + field.to_string());
    const coefficient num(field, reduce_mod(v.get_num(), p));
    return num / den;
}

void coefficient::check_same_field(const coefficient& rhs) const {
    if (!(field_ == rhs.field_))
        throw field_mismatch("coefficients over " + field_.to_string() + " and " +
                             rhs.field_.to_string());
}

coefficient coefficient::operator-() const {
    if (field_.is_rational()) return coefficient(field_, -value_);
    return coefficient(field_, reduce_mod(-value_.get_num(), field_.characteristic()));
}

coefficient coefficient::operator+(const coefficient& rhs) const {
    check_same_field(rhs);
    if (field_.is_rational()) return coefficient(field_, value_ + rhs.value_);
    return coefficient(field_, reduce_mod(value_.get_num() + rhs.value_.get_num(),
                                          field_.characteristic()));
}

coefficient coefficient::operator-(const coefficient& rhs) const {
    return *this + (-rhs);
}

coefficient coefficient::operator*(const coefficient& rhs) const {
    check_same_field(rhs);
    if (field_.is_rational()) return coefficient(field_, value_ * rhs.value_);
    return coefficient(field_, reduce_mod(value_.get_num() * rhs.value_.get_num(),
                                          field_.characteristic()));
}

coefficient coefficient::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero in " + field_.to_string());
    if (field_.is_rational()) return coefficient(field_, 1 / value_);
    mpz_class inv;
    mpz_class modulus(field_.characteristic());
    mpz_invert(inv.get_mpz_t(), value_.get_num().get_mpz_t(), modulus.get_mpz_t());
    return coefficient(field_, mpq_class(inv));
}

coefficient coefficient::operator/(const coefficient& rhs) const {
    check_same_field(rhs);
    return *this * rhs.inverse();
}

std::string coefficient::to_string() const {
    return value_.get_str();
}

} // namespace powser
