#include "qspinor/cli.hpp"

#include "qspinor/expr.hpp"
#include "qspinor/json_io.hpp"
#include "qspinor/verify.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

namespace qspinor {

namespace {

std::string read_input(const std::string& arg) {
    if (!arg.empty() && arg != "-") return arg;
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
}

int cmd_verify(const std::string& suite, const VerifyOptions& opts, bool json, std::ostream& out) {
    const Report rep = verify_suite(suite, opts);
    if (json) {
        nlohmann::json j = report_to_json(rep);
        j["seed"] = opts.seed;
        j["suite"] = suite;
        out << j.dump(2) << "\n";
    } else {
        out << "suite: " << suite << "\nseed: " << opts.seed << "\n" << rep.to_text();
        if (rep.all_pass())
            out << "all " << rep.checks.size() << " checks passed\n";
        else
            out << rep.failures() << " of " << rep.checks.size() << " checks FAILED\n";
    }
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computations in the quantized Weyl-Clifford algebra acting on polynomial symplectic spinors"};
    app.name("qspinor");
    app.require_subcommand(1);

    VerifyOptions opts;
    std::string suite = "all";
    bool json = false;

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "one of qcalculus|weyl|sl2|pair|adjoint|projector|fischer|symmetries|all")
        ->check(CLI::IsMember(verify_suite_names()));
    verify->add_option("--d-max", opts.d_max, "maximum polynomial degree");
    verify->add_option("--n-max", opts.n_max, "spanning-set depth");
    verify->add_option("--m-max", opts.m_max, "maximum derivative shift");
    verify->add_option("--seed", opts.seed, "seed for randomized checks");
    verify->add_flag("--json", json, "JSON output");

    int mono_d = 0;
    std::string mono_sign;
    auto* monogenic = app.add_subcommand("monogenic", "print a lowest-weight kernel generator");
    monogenic->add_option("d", mono_d, "polynomial degree")->required();
    monogenic->add_option("sign", mono_sign, "+ or -")->required()->check(CLI::IsMember({"+", "-", "plus", "minus"}));
    monogenic->add_flag("--json", json, "JSON output");

    int proj_d = 0;
    std::string input;
    auto* project_cmd = app.add_subcommand("project", "project a homogeneous vector onto ker F");
    project_cmd->add_option("d", proj_d, "polynomial degree")->required();
    project_cmd->add_option("input", input, "spinor expression ('-' or empty reads stdin)");
    project_cmd->add_flag("--json", json, "JSON output");

    auto* decompose = app.add_subcommand("decompose", "triangular decomposition of a homogeneous vector");
    decompose->add_option("input", input, "spinor expression ('-' or empty reads stdin)");
    decompose->add_flag("--json", json, "JSON output");

    std::string op_text;
    auto* act = app.add_subcommand("act", "apply an operator expression to a spinor");
    act->add_option("operator", op_text, "operator expression")->required();
    act->add_option("input", input, "spinor expression ('-' or empty reads stdin)");
    act->add_flag("--json", json, "JSON output");

    std::string eval_text, q_text;
    auto* eval = app.add_subcommand("eval", "evaluate a scalar expression at a rational q");
    eval->add_option("expr", eval_text, "scalar expression")->required();
    eval->add_option("--q", q_text, "rational specialization, n or n/m")->required();
    eval->add_flag("--json", json, "JSON output");

    auto* table = app.add_subcommand("table", "print the diagonal adjoint action table");
    table->add_flag("--json", json, "JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (verify->parsed()) return cmd_verify(suite, opts, json, out);

        if (monogenic->parsed()) {
            const SpinorVector v =
                (mono_sign == "+" || mono_sign == "plus") ? p_plus(mono_d) : p_minus(mono_d);
            out << (json ? spinor_to_json(v).dump(2) : v.to_string()) << "\n";
            return 0;
        }
        if (project_cmd->parsed()) {
            const SpinorVector v = parse_spinor(read_input(input));
            const SpinorVector pv = project(proj_d, v);
            out << (json ? spinor_to_json(pv).dump(2) : pv.to_string()) << "\n";
            return 0;
        }
        if (decompose->parsed()) {
            const SpinorVector v = parse_spinor(read_input(input));
            const FischerComponents fc = fischer_decompose(v);
            const SpinorVector echo = reconstruct(fc);
            if (json) {
                nlohmann::json j = fischer_to_json(fc);
                j["reconstruction"] = spinor_to_json(echo);
                out << j.dump(2) << "\n";
            } else {
                out << "degree: " << fc.degree << "\n";
                for (std::size_t k = 0; k < fc.components.size(); ++k)
                    out << "m[" << fc.degree - static_cast<int>(k) << "] = " << fc.components[k].to_string()
                        << "\n";
                out << "reconstruction = " << echo.to_string() << "\n";
            }
            return 0;
        }
        if (act->parsed()) {
            const AlgebraElement op = parse_operator(op_text);
            const SpinorVector v = parse_spinor(read_input(input));
            const SpinorVector r = apply(op, v);
            out << (json ? spinor_to_json(r).dump(2) : r.to_string()) << "\n";
            return 0;
        }
        if (eval->parsed()) {
            const RatQ a = parse_ratq(eval_text);
            const Rat q0 = parse_rational(q_text);
            const Rat val = a.eval(q0);
            if (json) {
                nlohmann::json j = {{"expr", eval_text}, {"q", q_text}, {"value", nullptr}};
                std::ostringstream vs;
                vs << val;
                j["value"] = vs.str();
                out << j.dump(2) << "\n";
            } else {
                out << val << "\n";
            }
            return 0;
        }
        if (table->parsed()) {
            const Sl2Triple diag = sigma_diagonal();
            const std::pair<const char*, AlgebraElement> cols[] = {
                {"mu1", parse_operator("mu1")},
                {"g1^2*mu2", parse_operator("g1^2*mu2")},
                {"dq2_2", parse_operator("dq2_2")},
                {"g2^-2*dq2_1", parse_operator("g2^-2*dq2_1")},
            };
            const std::pair<const char*, AdGen> rows[] = {
                {"ad_Kd", AdGen::k}, {"ad_Ed", AdGen::e}, {"ad_Fd", AdGen::f}};
            if (json) {
                nlohmann::json j = nlohmann::json::object();
                for (const auto& [rn, rg] : rows) {
                    nlohmann::json row = nlohmann::json::object();
                    for (const auto& [cn, ce] : cols) row[cn] = element_to_json(adjoint(rg, diag, ce));
                    j[rn] = row;
                }
                out << j.dump(2) << "\n";
            } else {
                for (const auto& [rn, rg] : rows)
                    for (const auto& [cn, ce] : cols)
                        out << rn << "(" << cn << ") = " << adjoint(rg, diag, ce).to_string() << "\n";
            }
            return 0;
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no command\n";
    return 2;
}

}  // namespace qspinor
