#include "powser/systemio.hpp"

#include <fstream>
#include <set>

namespace powser {

using nlohmann::json;

system_config config_from_json(const json& j) {
    system_config config;
    try {
        config.vars = j.at("vars").get<std::vector<std::string>>();
        config.order = order_kind_from_string(j.at("order").get<std::string>());
        config.field = field_spec::parse(j.at("field").get<std::string>());
        config.generators = j.at("generators").get<std::vector<std::string>>();
        config.precision_d = j.at("precision").get<std::uint32_t>();
    } catch (const json::exception& e) {
        throw invalid_argument(std::string("bad system file: ") + e.what());
    }

    if (config.vars.empty()) throw invalid_argument("a system declares at least one variable");
    std::set<std::string> unique(config.vars.begin(), config.vars.end());
    if (unique.size() != config.vars.size())
        throw invalid_argument("variable names must be unique");
    if (config.precision_d < 1) throw invalid_argument("precision must be at least 1");
    if (config.order == order_kind::lex)
        throw non_compatible_order("system files require a degree-compatible order");
    if (config.generators.empty())
        throw invalid_argument("a system declares at least one generator");
    return config;
}

json config_to_json(const system_config& config) {
    return json{{"vars", config.vars},
                {"order", to_string(config.order)},
                {"field", config.field.to_string()},
                {"generators", config.generators},
                {"precision", config.precision_d}};
}

system_config load_system_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw invalid_argument("cannot open system file " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw parse_error(std::string("bad JSON in ") + path.string() + ": " + e.what(), 0);
    }
    return config_from_json(j);
}

rewrite_system build_system(const system_config& config) {
    std::vector<series> generators;
    generators.reserve(config.generators.size());
    for (const std::string& text : config.generators)
        generators.push_back(parse_series(text, config.vars, config.field));
    return rewrite_system(std::move(generators),
                          monomial_order(config.order, config.vars.size()));
}

render_context context_of(const system_config& config) {
    return {config.vars, config.field};
}

json step_to_json(const rewrite_step& step, std::size_t k, const render_context& ctx) {
    return json{{"k", k},
                {"monomial", step.target.to_string(ctx.vars)},
                {"generator", step.generator + 1},
                {"quotient", step.quotient.to_string(ctx.vars)},
                {"coeff", step.value.to_string()}};
}

rewrite_step step_from_json(const json& j, const render_context& ctx) {
    try {
        monomial target = parse_monomial(j.at("monomial").get<std::string>(), ctx.vars);
        std::size_t generator = j.at("generator").get<std::size_t>();
        if (generator < 1) throw invalid_argument("generator indices are 1-based");
        monomial quotient = parse_monomial(j.at("quotient").get<std::string>(), ctx.vars);
        series c = parse_series(j.at("coeff").get<std::string>(), {}, ctx.field);
        monomial unit(std::size_t{0});
        return {std::move(target), generator - 1, std::move(quotient), c.coeff(unit)};
    } catch (const json::exception& e) {
        throw invalid_argument(std::string("bad trace step: ") + e.what());
    }
}

json steps_to_json(const std::vector<rewrite_step>& steps, const render_context& ctx) {
    json out = json::array();
    for (std::size_t k = 0; k < steps.size(); ++k) out.push_back(step_to_json(steps[k], k, ctx));
    return out;
}

std::vector<rewrite_step> steps_from_json(const json& j, const render_context& ctx) {
    std::vector<rewrite_step> out;
    for (const auto& item : j) out.push_back(step_from_json(item, ctx));
    return out;
}

json series_to_json(const series& f, const render_context& ctx) {
    json out{{"terms", render_series(f, ctx.vars)}};
    if (f.prec().is_infinite()) out["precision"] = "inf";
    else out["precision"] = f.prec().value();
    return out;
}

json reduction_to_json(const reduction_result& r, const render_context& ctx) {
    json cofactors = json::array();
    for (const series& c : r.cofactors) cofactors.push_back(render_series(c, ctx.vars));
    return json{{"normal_form", render_series(r.normal_form, ctx.vars)},
                {"precision", r.normal_form.prec().value()},
                {"steps", steps_to_json(r.steps, ctx)},
                {"cofactors", cofactors}};
}

json verdict_to_json(const membership_verdict& v, const rewrite_system& sys,
                     const render_context& ctx) {
    json out{{"verdict", v.in_ideal ? "InIdealModD" : "NotInIdealModD"},
             {"precision", v.precision_d}};
    if (v.in_ideal) {
        json cofactors = json::array();
        json certified = json::array();
        for (std::size_t i = 0; i < v.cofactors.size(); ++i) {
            cofactors.push_back(render_series(v.cofactors[i], ctx.vars));
            certified.push_back(certified_precision(sys, v.precision_d, i));
        }
        out["cofactors"] = cofactors;
        out["certified_precisions"] = certified;
        out["trace"] = steps_to_json(v.trace.records, ctx);
    } else {
        out["residual"] = render_series(v.residual_normal_form, ctx.vars);
        out["irreducible_leading_monomial"] = v.irreducible->to_string(ctx.vars);
        out["trace"] = steps_to_json(v.trace.records, ctx);
    }
    return out;
}

json join_to_json(const join_result& r, const render_context& ctx) {
    json eliminated = json::array();
    for (const monomial& m : r.eliminated) eliminated.push_back(m.to_string(ctx.vars));
    json out{{"result", r.joined ? "Joined" : "Diverged"},
             {"eliminated", eliminated},
             {"left_steps", steps_to_json(r.left_steps, ctx)},
             {"right_steps", steps_to_json(r.right_steps, ctx)}};
    if (r.joined) {
        out["common"] = render_series(r.common, ctx.vars);
        out["precision"] = r.common.prec().value();
    } else {
        out["obstruction"] = r.obstruction->to_string(ctx.vars);
    }
    return out;
}

json sb_report_to_json(const sb_report& r, const render_context& ctx) {
    json pairs = json::array();
    for (const sb_pair_report& p : r.pairs) {
        pairs.push_back(json{{"i", p.i + 1},
                             {"j", p.j + 1},
                             {"s_series", render_series(p.s, ctx.vars)},
                             {"normal_form", render_series(p.normal_form, ctx.vars)},
                             {"reduces_to_zero", p.reduces_to_zero}});
    }
    return json{{"pass", r.pass}, {"precision", r.precision_d}, {"pairs", pairs}};
}

json cross_validate_to_json(const cross_validate_report& r, const render_context& ctx) {
    auto case_to_json = [&](const cross_validate_case& c) {
        return json{{"input", render_series(c.input, ctx.vars)},
                    {"oracle_member", c.oracle_member},
                    {"reduction_member", c.reduction_member},
                    {"guaranteed_member", c.guaranteed_member},
                    {"expected", c.expected}};
    };
    json disagreements = json::array();
    for (const auto& c : r.disagreements) disagreements.push_back(case_to_json(c));
    json expected = json::array();
    for (const auto& c : r.expected_divergences) expected.push_back(case_to_json(c));
    return json{{"precision", r.precision_d},
                {"seed", r.seed},
                {"random_inputs", r.random_inputs},
                {"member_inputs", r.member_inputs},
                {"sb_pass", r.sb_pass},
                {"agreements", r.agreements},
                {"disagreements", disagreements},
                {"expected_divergences", expected}};
}

json distance_to_json(const adic_distance& d) {
    switch (d.tag()) {
        case adic_distance::kind::zero:
            return json{{"kind", "zero"}, {"value", "0"}};
        case adic_distance::kind::exact:
            return json{{"kind", "exact"},
                        {"valuation", d.exponent()},
                        {"value", d.bound().get_str()}};
        case adic_distance::kind::at_most:
            return json{{"kind", "at_most"},
                        {"precision", d.exponent()},
                        {"bound", d.bound().get_str()}};
    }
    return json{};
}

} // namespace powser
