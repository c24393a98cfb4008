#pragma once

#include <algorithm>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "expression.hpp"
#include "harness.hpp"
#include "hopf_maps.hpp"
#include "serialization.hpp"

namespace nctorus::cli {

enum ExitCode : int { kSuccess = 0, kCheckFailure = 1, kUsageError = 2 };

namespace detail {

inline std::string fmt_double(double v)
{
    if (v == 0.0)
        v = 0.0;  // drop the sign of -0
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

inline nlohmann::json element_record(const AlgebraElement& x)
{
    return {{"algebra", x.algebra().name}, {"element", to_json(x)}, {"rendered", x.str()}};
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, diagnostics to `err`; returns the process exit code.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact algebra on the noncommutative torus and its deformed tensor powers", "nctorus"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json-like", "json"}))
        ->capture_default_str();

    std::string algebra_name;
    std::string map_name;
    std::vector<std::string> exprs;
    double theta = 0.0;
    std::vector<std::string> suites;
    TrialConfig cfg;

    auto* normalize = app.add_subcommand("normalize", "Print the canonical form of an expression");
    normalize->add_option("--algebra", algebra_name, "circle, torus, p2 or p3")->required();
    normalize->add_option("expr", exprs, "Expression")->required()->expected(1);

    auto* mul = app.add_subcommand("mul", "Multiply two expressions");
    mul->add_option("--algebra", algebra_name, "circle, torus, p2 or p3")->required();
    mul->add_option("exprs", exprs, "Left and right factors")->required()->expected(2);

    auto* apply = app.add_subcommand("apply", "Apply a structure map");
    apply->add_option("--map", map_name, "Structure map")->required()->check(CLI::IsMember(structure_map_names()));
    apply->add_option("--algebra", algebra_name, "Algebra of the argument (defaults to the map's source)");
    apply->add_option("expr", exprs, "Expression")->required()->expected(1);

    auto* check = app.add_subcommand("check", "Run the verification suite");
    check->add_option("--suite", suites, "Checks to run (comma separated; default: all)")->delimiter(',');
    check->add_option("--seed", cfg.seed, "Random seed")->capture_default_str();
    check->add_option("--trials", cfg.trials, "Random trials per check")->check(CLI::PositiveNumber)->capture_default_str();
    check->add_option("--max-support", cfg.max_support, "Terms per random element")->check(CLI::PositiveNumber);
    check->add_option("--bound", cfg.exponent_bound, "Exponent bound for random elements")->check(CLI::PositiveNumber);

    auto* eval = app.add_subcommand("eval", "Evaluate coefficients numerically at q = exp(2 pi i theta)");
    eval->add_option("--theta", theta, "Angle parameter")->required();
    eval->add_option("--algebra", algebra_name, "circle, torus, p2 or p3")->required();
    eval->add_option("expr", exprs, "Expression")->required()->expected(1);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    const bool json = format != "text";

    try {
        if (*check) {
            auto selection = suites.empty() ? default_selection() : suites;
            for (const auto& s : selection)
                find_check(s);
            auto reports = run_suite(cfg, selection);
            if (json)
                out << report_json(reports).dump(2) << '\n';
            else
                out << report_text(reports);
            return all_passed(reports) ? kSuccess : kCheckFailure;
        }

        if (*apply) {
            auto map = structure_map_by_name(map_name);
            const auto& source = structure_map_source(map);
            if (!algebra_name.empty() && algebra_name != source.name)
                throw AlgebraError("map " + map_name + " acts on " + source.name + " elements, not on " +
                                   algebra_name);
            auto x = parse_element(source, exprs.front());
            if (auto* f = std::get_if<const LinearFunctional*>(&map)) {
                auto value = (**f)(x);
                if (json)
                    out << nlohmann::json{{"scalar", to_json(value)}, {"rendered", value.str()}}.dump(2) << '\n';
                else
                    out << value.str() << '\n';
            } else {
                auto y = (*std::get<const LinearMap*>(map))(x);
                out << (json ? detail::element_record(y).dump(2) : y.str()) << '\n';
            }
            return kSuccess;
        }

        const auto& alg = algebra_by_name(algebra_name);
        if (*normalize || *mul) {
            auto x = parse_element(alg, exprs[0]);
            if (*mul)
                x = x * parse_element(alg, exprs[1]);
            out << (json ? detail::element_record(x).dump(2) : x.str()) << '\n';
            return kSuccess;
        }

        if (*eval) {
            auto x = parse_element(alg, exprs.front());
            auto values = x.eval(theta);
            if (json) {
                auto coeffs = nlohmann::json::array();
                for (const auto& [idx, v] : values)
                    coeffs.push_back({{"index", idx.exps}, {"re", v.real()}, {"im", v.imag()}});
                out << nlohmann::json{{"algebra", alg.name}, {"theta", theta}, {"coefficients", coeffs}}.dump(2)
                    << '\n';
            } else if (values.empty()) {
                out << "0\n";
            } else {
                for (const auto& [idx, v] : values) {
                    auto mono = x.monomial_str(idx);
                    out << (mono.empty() ? "1" : mono) << ": " << detail::fmt_double(v.real())
                        << (std::signbit(v.imag()) && v.imag() != 0.0 ? " - " : " + ")
                        << detail::fmt_double(std::abs(v.imag())) << "i\n";
                }
            }
            return kSuccess;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const AlgebraError& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace nctorus::cli
