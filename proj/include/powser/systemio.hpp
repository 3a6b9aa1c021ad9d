#pragma once

// System files and JSON renderings of results. A system file declares the
// variables (greatest first), the order kind, the coefficient field, the
// generators as series strings, and a default working precision:
//
//   {"vars": ["x","y","z"], "order": "deglex", "field": "Q",
//    "generators": ["z - y", "z - x", "y - y^2", "x - x^2"], "precision": 10}
//
// Trace steps serialize as {"k", "monomial", "generator", "quotient",
// "coeff"} with 1-based generator indices, and parse back losslessly given
// the declaring context.

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "powser/cofactor.hpp"
#include "powser/confluence.hpp"
#include "powser/oracle.hpp"
#include "powser/parse.hpp"
#include "powser/rewrite.hpp"

namespace powser {

struct system_config {
    std::vector<std::string> vars;
    order_kind order = order_kind::deglex;
    field_spec field;
    std::vector<std::string> generators;
    std::uint32_t precision_d = 1;
};

system_config config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const system_config& config);
system_config load_system_config(const std::filesystem::path& path);

rewrite_system build_system(const system_config& config);

// Rendering context: variable names and the coefficient field.
struct render_context {
    std::vector<std::string> vars;
    field_spec field;
};

render_context context_of(const system_config& config);

nlohmann::json step_to_json(const rewrite_step& step, std::size_t k, const render_context& ctx);
rewrite_step step_from_json(const nlohmann::json& j, const render_context& ctx);

nlohmann::json steps_to_json(const std::vector<rewrite_step>& steps, const render_context& ctx);
std::vector<rewrite_step> steps_from_json(const nlohmann::json& j, const render_context& ctx);

nlohmann::json series_to_json(const series& f, const render_context& ctx);

nlohmann::json reduction_to_json(const reduction_result& r, const render_context& ctx);
nlohmann::json verdict_to_json(const membership_verdict& v, const rewrite_system& sys,
                               const render_context& ctx);
nlohmann::json join_to_json(const join_result& r, const render_context& ctx);
nlohmann::json sb_report_to_json(const sb_report& r, const render_context& ctx);
nlohmann::json cross_validate_to_json(const cross_validate_report& r, const render_context& ctx);
nlohmann::json distance_to_json(const adic_distance& d);

} // namespace powser
