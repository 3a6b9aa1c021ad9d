// Command-line front end: reduce | member | cofactor | join | check-sb |
// delta | tars | oracle | version. Computed negative answers (NotInIdealModD,
// Diverged) exit 0; usage, parse and precision errors exit 1.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "powser/cofactor.hpp"
#include "powser/confluence.hpp"
#include "powser/oracle.hpp"
#include "powser/parse.hpp"
#include "powser/rewrite.hpp"
#include "powser/systemio.hpp"
#include "powser/tars.hpp"

namespace {

constexpr const char* kVersion = "powser 0.1.0";
constexpr std::uint64_t kDefaultSeed = 0;

using nlohmann::json;

struct loaded_system {
    powser::system_config config;
    powser::rewrite_system sys;
    powser::render_context ctx;
    std::uint32_t d;
};

loaded_system load(const std::string& path, std::optional<std::uint32_t> precision_override) {
    powser::system_config config = powser::load_system_config(path);
    powser::rewrite_system sys = powser::build_system(config);
    powser::render_context ctx = powser::context_of(config);
    std::uint32_t d = precision_override.value_or(config.precision_d);
    return {std::move(config), std::move(sys), std::move(ctx), d};
}

void emit(const json& j, bool as_json, const std::string& text) {
    if (as_json) std::cout << j.dump(2) << "\n";
    else std::cout << text;
}

std::string render_mod(const powser::series& f, const powser::render_context& ctx) {
    std::string out = powser::render_series(f, ctx.vars);
    if (!f.prec().is_infinite())
        out += " (mod (X)^" + std::to_string(f.prec().value()) + ")";
    return out;
}

std::string steps_text(const std::vector<powser::rewrite_step>& steps,
                       const powser::render_context& ctx) {
    std::string out;
    for (std::size_t k = 0; k < steps.size(); ++k) {
        const auto& s = steps[k];
        out += "  step " + std::to_string(k) + ": eliminate " + s.target.to_string(ctx.vars) +
               " with s_" + std::to_string(s.generator + 1) + ", quotient " +
               s.quotient.to_string(ctx.vars) + ", coeff " + s.value.to_string() + "\n";
    }
    return out;
}

// Accepts "2^-10", "1/1024" or a plain integer.
mpq_class parse_eps(const std::string& text) {
    if (text.rfind("2^-", 0) == 0) {
        const std::string digits = text.substr(3);
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw powser::invalid_argument("bad radius '" + text + "'");
        mpz_class den;
        mpz_ui_pow_ui(den.get_mpz_t(), 2, std::stoul(digits));
        mpq_class q(1);
        q /= mpq_class(den);
        return q;
    }
    mpq_class q;
    if (q.set_str(text, 10) != 0)
        throw powser::invalid_argument("bad radius '" + text + "'");
    q.canonicalize();
    return q;
}

template <class Sys>
json path_json(const Sys& sys, const std::vector<typename Sys::state>& path) {
    json out = json::array();
    for (const auto& s : path) out.push_back(sys.to_string(s));
    return out;
}

template <class Sys>
int run_tars_demo(const Sys& sys, const typename Sys::state& from,
                  const typename Sys::state& nf1, const typename Sys::state& nf2,
                  const mpq_class& eps, std::size_t max_steps, bool as_json) {
    auto report = powser::tars::refute_infinitary_confluence(sys, from, nf1, nf2, eps, max_steps);
    json j{{"system", sys.name()},
           {"eps", eps.get_str()},
           {"source", sys.to_string(from)},
           {"normal_forms", {sys.to_string(nf1), sys.to_string(nf2)}},
           {"verdict", report.refuted ? "refuted" : "inconclusive"},
           {"detail", report.detail}};
    std::string text = "system " + sys.name() + ", source " + sys.to_string(from) +
                       ", radius " + eps.get_str() + "\n";
    if (report.path_to_first) {
        j["path_to_first"] = path_json(sys, *report.path_to_first);
        text += "  path to " + sys.to_string(nf1) + " (" +
                std::to_string(report.path_to_first->size() - 1) + " steps):";
        for (const auto& s : *report.path_to_first) text += " " + sys.to_string(s);
        text += "\n";
    }
    if (report.path_to_second) {
        j["path_to_second"] = path_json(sys, *report.path_to_second);
        text += "  path to " + sys.to_string(nf2) + " (" +
                std::to_string(report.path_to_second->size() - 1) + " steps):";
        for (const auto& s : *report.path_to_second) text += " " + sys.to_string(s);
        text += "\n";
    }
    text += report.refuted ? "refuted: two distinct normal forms are reachable\n"
                           : "inconclusive: " + report.detail + "\n";
    emit(j, as_json, text);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Truncated power series rewriting, membership and confluence checks"};
    app.require_subcommand(1);

    std::string system_path;
    std::optional<std::uint32_t> precision_override;
    bool as_json = false;
    std::uint64_t seed = kDefaultSeed;

    auto add_common = [&](CLI::App* cmd, bool needs_system = true) {
        if (needs_system)
            cmd->add_option("--system", system_path, "system file (JSON)")->required();
        cmd->add_option("--precision", precision_override, "working adic precision (default: system file)");
        cmd->add_flag("--json", as_json, "emit structured JSON");
    };

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "reduce a series to a normal form");
    std::string input_text;
    std::string tie_break_name = "smallest";
    add_common(reduce_cmd);
    reduce_cmd->add_option("--input", input_text, "series to reduce")->required();
    reduce_cmd->add_option("--tie-break", tie_break_name, "divisor choice: smallest|largest")
        ->check(CLI::IsMember({"smallest", "largest"}));

    // member / cofactor
    auto* member_cmd = app.add_subcommand("member", "ideal membership modulo the precision");
    add_common(member_cmd);
    member_cmd->add_option("--input", input_text, "series to test")->required();

    auto* cofactor_cmd = app.add_subcommand("cofactor", "membership with full cofactor trace");
    add_common(cofactor_cmd);
    cofactor_cmd->add_option("--input", input_text, "series to test")->required();

    // join
    auto* join_cmd = app.add_subcommand("join", "join two series below the precision");
    std::string left_text, right_text;
    add_common(join_cmd);
    join_cmd->add_option("--left", left_text, "first series")->required();
    join_cmd->add_option("--right", right_text, "second series")->required();

    // check-sb
    auto* sb_cmd = app.add_subcommand("check-sb", "standard-basis check at the precision");
    add_common(sb_cmd);

    // delta
    auto* delta_cmd = app.add_subcommand("delta", "adic distance between two series");
    std::vector<std::string> delta_args;
    add_common(delta_cmd);
    delta_cmd->add_option("series", delta_args, "two series")->expected(2);

    // tars
    auto* tars_cmd = app.add_subcommand("tars", "abstract systems");
    auto* demo_cmd = tars_cmd->add_subcommand("demo", "run a counterexample demonstration");
    std::string demo_system;
    std::string eps_text = "2^-10";
    std::size_t max_steps = 100000;
    demo_cmd->add_option("name", demo_system, "cyclic|nbar")
        ->required()
        ->check(CLI::IsMember({"cyclic", "nbar"}));
    demo_cmd->add_option("--eps", eps_text, "target radius, e.g. 2^-10");
    demo_cmd->add_option("--max-steps", max_steps, "search expansion bound");
    demo_cmd->add_flag("--json", as_json, "emit structured JSON");

    // oracle
    auto* oracle_cmd = app.add_subcommand("oracle", "linear-algebra membership oracle");
    auto* oracle_member_cmd = oracle_cmd->add_subcommand("member", "oracle membership");
    add_common(oracle_member_cmd);
    oracle_member_cmd->add_option("--input", input_text, "series to test")->required();
    auto* cross_cmd = oracle_cmd->add_subcommand("cross-validate",
                                                 "compare oracle and reduction membership");
    add_common(cross_cmd);
    std::size_t trials = 100;
    cross_cmd->add_option("--trials", trials, "inputs per class");
    cross_cmd->add_option("--seed", seed, "random seed (default 0)");

    auto* version_cmd = app.add_subcommand("version", "print the version string");

    CLI11_PARSE(app, argc, argv);

    try {
        if (version_cmd->parsed()) {
            std::cout << kVersion << "\n";
            return 0;
        }

        if (demo_cmd->parsed()) {
            mpq_class eps = parse_eps(eps_text);
            if (demo_system == "cyclic") {
                powser::tars::cyclic_system sys;
                return run_tars_demo(sys, mpq_class(1), mpq_class(0), mpq_class(2), eps,
                                     max_steps, as_json);
            }
            powser::tars::nbar_system sys;
            using powser::tars::extended_nat;
            powser::tars::nbar_system::state origin{extended_nat(0u), extended_nat(0u)};
            powser::tars::nbar_system::state inf_left{powser::tars::nbar_infinity, extended_nat(0u)};
            powser::tars::nbar_system::state inf_right{extended_nat(0u), powser::tars::nbar_infinity};
            return run_tars_demo(sys, origin, inf_left, inf_right, eps, max_steps, as_json);
        }

        loaded_system loaded = load(system_path, precision_override);
        const auto& ctx = loaded.ctx;
        auto parse_input = [&](const std::string& text) {
            return powser::parse_series(text, ctx.vars, ctx.field);
        };

        if (reduce_cmd->parsed()) {
            powser::tie_break tb = tie_break_name == "largest"
                                       ? powser::tie_break::largest_index
                                       : powser::tie_break::smallest_index;
            powser::reduction_result r =
                powser::reduce_to_precision(parse_input(input_text), loaded.sys, loaded.d, tb);
            json j = powser::reduction_to_json(r, ctx);
            j["input"] = input_text;
            std::string text = "normal form: " + render_mod(r.normal_form, ctx) + "\n" +
                               std::to_string(r.steps.size()) + " steps\n" +
                               steps_text(r.steps, ctx);
            for (std::size_t i = 0; i < r.cofactors.size(); ++i)
                text += "  cofactor s_" + std::to_string(i + 1) + ": " +
                        powser::render_series(r.cofactors[i], ctx.vars) + "\n";
            emit(j, as_json, text);
            return 0;
        }

        if (member_cmd->parsed() || cofactor_cmd->parsed()) {
            powser::series f = parse_input(input_text);
            powser::membership_verdict v = powser::limit_coefficients(f, loaded.sys, loaded.d);
            json j = powser::verdict_to_json(v, loaded.sys, ctx);
            j["input"] = input_text;
            std::string text;
            if (v.in_ideal) {
                text = "InIdealModD (precision " + std::to_string(v.precision_d) + ")\n";
                if (cofactor_cmd->parsed()) {
                    for (std::size_t i = 0; i < v.cofactors.size(); ++i)
                        text += "  cofactor s_" + std::to_string(i + 1) + ": " +
                                powser::render_series(v.cofactors[i], ctx.vars) +
                                " (certified mod (X)^" +
                                std::to_string(powser::certified_precision(loaded.sys, v.precision_d, i)) +
                                ")\n";
                    text += steps_text(v.trace.records, ctx);
                    bool ok = powser::verify_cofactor_identity(f, v, loaded.sys, loaded.d);
                    text += ok ? "identity verified\n" : "IDENTITY CHECK FAILED\n";
                    j["identity_verified"] = ok;
                }
            } else {
                text = "NotInIdealModD (precision " + std::to_string(v.precision_d) + ")\n" +
                       "  residual: " + render_mod(v.residual_normal_form, ctx) + "\n" +
                       "  irreducible leading monomial: " + v.irreducible->to_string(ctx.vars) +
                       "\n";
            }
            emit(j, as_json, text);
            return 0;
        }

        if (join_cmd->parsed()) {
            powser::join_result r = powser::join(parse_input(left_text), parse_input(right_text),
                                                 loaded.sys, loaded.d);
            json j = powser::join_to_json(r, ctx);
            std::string text;
            if (r.joined) {
                text = "Joined at " + render_mod(r.common, ctx) + " after " +
                       std::to_string(r.eliminated.size()) + " eliminations\n";
            } else {
                text = "Diverged: irreducible difference leading monomial " +
                       r.obstruction->to_string(ctx.vars) + "\n";
            }
            emit(j, as_json, text);
            return 0;
        }

        if (sb_cmd->parsed()) {
            powser::sb_report r = powser::check_standard_basis(loaded.sys, loaded.d);
            json j = powser::sb_report_to_json(r, ctx);
            std::string text;
            if (r.pass) {
                text = "PASS (" + std::to_string(r.pairs.size()) + " pairs)\n";
            } else {
                text = "FAIL (" + std::to_string(r.pairs.size()) + " pairs)\n";
                for (const auto& p : r.pairs) {
                    if (p.reduces_to_zero) continue;
                    text += "  pair (" + std::to_string(p.i + 1) + "," + std::to_string(p.j + 1) +
                            "): S-series " + powser::render_series(p.s, ctx.vars) +
                            " has normal form " + render_mod(p.normal_form, ctx) + "\n";
                }
            }
            text += "note: a pass certifies confluence below degree " +
                    std::to_string(r.precision_d) + " only\n";
            emit(j, as_json, text);
            return 0;
        }

        if (delta_cmd->parsed()) {
            powser::adic_distance d =
                powser::delta(parse_input(delta_args[0]), parse_input(delta_args[1]));
            emit(powser::distance_to_json(d), as_json, d.to_string() + "\n");
            return 0;
        }

        if (oracle_member_cmd->parsed()) {
            auto solution = powser::membership_oracle(parse_input(input_text), loaded.sys, loaded.d);
            json j{{"input", input_text},
                   {"precision", loaded.d},
                   {"member", solution.has_value()}};
            std::string text;
            if (solution) {
                text = "member modulo (X)^" + std::to_string(loaded.d) + "\n";
                json cofactors = json::array();
                for (std::size_t i = 0; i < solution->cofactors.size(); ++i) {
                    cofactors.push_back(powser::render_series(solution->cofactors[i], ctx.vars));
                    text += "  cofactor s_" + std::to_string(i + 1) + ": " +
                            powser::render_series(solution->cofactors[i], ctx.vars) + "\n";
                }
                j["cofactors"] = cofactors;
            } else {
                text = "not a member modulo (X)^" + std::to_string(loaded.d) + "\n";
            }
            emit(j, as_json, text);
            return 0;
        }

        if (cross_cmd->parsed()) {
            powser::cross_validate_report r =
                powser::cross_validate(loaded.sys, loaded.d, trials, seed);
            json j = powser::cross_validate_to_json(r, ctx);
            std::string text = "cross-validation at precision " + std::to_string(r.precision_d) +
                               ", seed " + std::to_string(r.seed) + "\n" +
                               "  standard-basis check: " + (r.sb_pass ? "pass" : "fail") + "\n" +
                               "  agreements: " + std::to_string(r.agreements) + "\n" +
                               "  disagreements: " + std::to_string(r.disagreements.size()) + "\n" +
                               "  expected divergences: " +
                               std::to_string(r.expected_divergences.size()) + "\n";
            emit(j, as_json, text);
            return 0;
        }
    } catch (const powser::error& e) {
        std::cerr << e.name() << ": " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
