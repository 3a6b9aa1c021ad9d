#pragma once

// Exact scalars: arbitrary-precision rationals (GMP) or residues modulo a
// prime. A coefficient is tagged with its field; mixing fields in arithmetic
// throws field_mismatch. There is no floating point anywhere in the library.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "powser/errors.hpp"

namespace powser {

// Field descriptor: characteristic 0 (rationals) or a prime p.
class field_spec {
public:
    field_spec() = default; // rationals

    static field_spec rationals() { return field_spec{}; }
    static field_spec prime_field(std::uint32_t p);

    bool is_rational() const { return p_ == 0; }
    std::uint32_t characteristic() const { return p_; }

    bool operator==(const field_spec&) const = default;

    std::string to_string() const; // "Q" or "Fp:<p>"
    static field_spec parse(const std::string& text);

private:
    std::uint32_t p_ = 0;
};

class coefficient {
public:
    coefficient() : coefficient(zero(field_spec::rationals())) {}

    static coefficient zero(const field_spec& field);
    static coefficient one(const field_spec& field);

    // Integer value mapped into the field (reduced mod p for prime fields).
    static coefficient from_integer(long value, const field_spec& field);

    // Rational value mapped into the field; for a prime field the denominator
    // is inverted mod p and must not vanish there.
    static coefficient from_rational(const mpq_class& value, const field_spec& field);

    const field_spec& field() const { return field_; }
    bool is_zero() const { return value_ == 0; }
    bool is_one() const { return value_ == 1; }

    // Underlying canonical value: a reduced rational over Q, an integer
    // residue in [0, p) over F_p.
    const mpq_class& value() const { return value_; }

    coefficient operator-() const;
    coefficient operator+(const coefficient& rhs) const;
    coefficient operator-(const coefficient& rhs) const;
    coefficient operator*(const coefficient& rhs) const;
    coefficient operator/(const coefficient& rhs) const; // throws division_by_zero

    coefficient inverse() const;

    bool operator==(const coefficient& rhs) const {
        return field_ == rhs.field_ && value_ == rhs.value_;
    }

    std::string to_string() const; // "3", "-1/2", residue "4"

private:
    coefficient(field_spec field, mpq_class value)
        : field_(field), value_(std::move(value)) {}

    void check_same_field(const coefficient& rhs) const;
    static mpq_class reduce_mod(const mpz_class& v, std::uint32_t p);

    field_spec field_;
    mpq_class value_;
};

} // namespace powser
