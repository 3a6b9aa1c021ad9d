#pragma once

// Error types thrown across the library. Every error carries a stable
// machine-readable name so the CLI can prefix messages uniformly.

#include <stdexcept>
#include <string>
#include <utility>

namespace powser {

class error : public std::runtime_error {
public:
    error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

struct dimension_mismatch : error {
    explicit dimension_mismatch(const std::string& what)
        : error("DimensionMismatch", what) {}
};

struct field_mismatch : error {
    explicit field_mismatch(const std::string& what)
        : error("FieldMismatch", what) {}
};

struct division_by_zero : error {
    explicit division_by_zero(const std::string& what)
        : error("DivisionByZero", what) {}
};

struct zero_series : error {
    explicit zero_series(const std::string& what)
        : error("ZeroSeries", what) {}
};

struct invalid_step : error {
    explicit invalid_step(const std::string& what)
        : error("InvalidStep", what) {}
};

struct precision_loss : error {
    explicit precision_loss(const std::string& what)
        : error("PrecisionLoss", what) {}
};

struct non_compatible_order : error {
    explicit non_compatible_order(const std::string& what)
        : error("NonCompatibleOrder", what) {}
};

struct parse_error : error {
    parse_error(const std::string& what, std::size_t position)
        : error("ParseError", what + " (at position " + std::to_string(position) + ")"),
          position(position) {}

    std::size_t position;
};

struct unknown_variable : error {
    unknown_variable(const std::string& variable, std::size_t position)
        : error("UnknownVariable",
                "unknown variable '" + variable + "' (at position " + std::to_string(position) + ")"),
          variable(variable), position(position) {}

    std::string variable;
    std::size_t position;
};

struct domain_violation : error {
    explicit domain_violation(const std::string& what)
        : error("DomainViolation", what) {}
};

struct invalid_argument : error {
    explicit invalid_argument(const std::string& what)
        : error("InvalidArgument", what) {}
};

} // namespace powser
