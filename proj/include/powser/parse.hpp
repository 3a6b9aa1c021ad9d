#pragma once

// Text grammar for series, used by the CLI, the system files and the trace
// serialization:
//
//   series   := [sign] term { sign term }
//   term     := rational [['*'] monomial] | monomial
//   rational := nat ['/' nat]
//   monomial := factor { '*' factor }
//   factor   := var ['^' nat]
//
// Whitespace may separate any two tokens. Variables and their order are
// declared externally. Parsed series are exact (infinite precision);
// truncation happens at use sites.

#include <span>
#include <string>

#include "powser/series.hpp"

namespace powser {

series parse_series(const std::string& text, std::span<const std::string> vars,
                    const field_spec& field);

// A single monomial with coefficient one ("x^2*y", "1").
monomial parse_monomial(const std::string& text, std::span<const std::string> vars);

// Canonical rendering: terms ascending by (degree, exponent vector), signs
// folded, unit coefficients omitted. The zero series renders as "0".
std::string render_series(const series& f, std::span<const std::string> vars);

} // namespace powser
