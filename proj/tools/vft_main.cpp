// vft: Weierstrass division, tangency orders, the reducibility criterion and
// its branch-counting cross-check, over exact rational arithmetic.
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "vft/corpus.hpp"
#include "vft/evaluate.hpp"
#include "vft/expr.hpp"
#include "vft/puiseux.hpp"
#include "vft/tangency.hpp"
#include "vft/weierstrass.hpp"

namespace {

using namespace vft;

std::string per_r_string(const std::map<int, Order>& per_r) {
    std::string out = "{";
    bool first = true;
    for (const auto& [r, ord] : per_r) {
        if (!first) out += ", ";
        out += std::to_string(r) + ": " + order_to_string(ord);
        first = false;
    }
    return out + "}";
}

int run_divide(const std::string& f_expr, const std::string& g_expr, const std::string& vars) {
    VariableContext ctx = VariableContext::from_csv(vars);
    WeierstrassPolynomial f = to_weierstrass(parse_poly(f_expr, ctx));
    DivisionResult div = euclidean_divide(parse_poly(g_expr, ctx), f);
    std::cout << "Q = " << print_poly(div.quotient, ctx) << "\n";
    std::cout << "R = " << print_poly(div.remainder, ctx) << "\n";
    return 0;
}

int run_prepare(const std::string& g_expr, int precision, const std::string& vars) {
    VariableContext ctx = VariableContext::from_csv(vars);
    PreparationResult prep = weierstrass_prepare(parse_poly(g_expr, ctx), precision);
    std::cout << "k = " << prep.wpoly.degree() << "\n";
    std::cout << "unit = " << print_poly(prep.unit.poly(), ctx) << "\n";
    std::cout << "wpoly = " << print_poly(prep.wpoly.expanded(), ctx) << "\n";
    std::cout << "precision = " << prep.precision << "\n";
    return 0;
}

int run_tangency(const std::string& f_expr, int r, const std::string& vars) {
    VariableContext ctx = VariableContext::from_csv(vars);
    WeierstrassPolynomial f = to_weierstrass(parse_poly(f_expr, ctx));
    TangencyReport report = tangency_remainder_xr(f, r);
    std::cout << "remainder = " << print_poly(report.remainder, ctx) << "\n";
    std::cout << "order = " << order_to_string(report.order) << "\n";
    return 0;
}

int run_criterion(const std::string& f_expr, const std::string& vars) {
    VariableContext ctx = VariableContext::from_csv(vars);
    WeierstrassPolynomial f = to_weierstrass(parse_poly(f_expr, ctx));
    CriterionVerdict verdict = criterion_sweep(f);
    std::cout << "k = " << verdict.k << "\n";
    std::cout << "per_r = " << per_r_string(verdict.per_r) << "\n";
    std::cout << "claims_reducible = " << (verdict.claims_reducible ? "true" : "false") << "\n";
    std::cout << "witness_r = "
              << (verdict.witness_r ? std::to_string(*verdict.witness_r) : std::string("NA"))
              << "\n";
    return 0;
}

int run_oracle(const std::string& f_expr, const std::string& vars) {
    VariableContext ctx = VariableContext::from_csv(vars);
    WeierstrassPolynomial f = to_weierstrass(parse_poly(f_expr, ctx));
    OracleVerdict verdict = oracle_verdict(f);
    std::cout << "branches = "
              << (verdict.branches ? std::to_string(*verdict.branches) : std::string("UNKNOWN"))
              << "\n";
    std::cout << "status = " << oracle_status_name(verdict.status) << "\n";
    std::cout << "reducible = "
              << (verdict.exact() ? (verdict.reducible() ? "true" : "false") : "UNKNOWN") << "\n";
    std::cout << "trace:\n";
    for (const auto& line : verdict.notes) std::cout << "  " << line << "\n";
    return 0;
}

int run_evaluate(const std::string& corpus_path, const std::string& format,
                 const std::string& out_path, int jobs) {
    auto records = load_corpus(corpus_path, std::cerr);
    auto rows = evaluate(records, jobs);
    std::string text = (format == "md") ? emit_markdown(rows) : emit_csv(rows);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw Error(ErrorCode::MalformedCorpus, "cannot write '" + out_path + "'");
        out << text;
    }
    return 0;
}

// The bundled counterexample, end to end: the criterion pronounces the cubic
// irreducible while it visibly has three distinct branches.
int run_falsify() {
    const std::string curve = "x^3 + x*y^2 + y^3";
    VariableContext ctx = VariableContext::from_csv("x,y");
    WeierstrassPolynomial f = to_weierstrass(parse_poly(curve, ctx));
    TangencyReport report = tangency_remainder_xr(f, 2);
    CriterionVerdict verdict = criterion_sweep(f);
    OracleVerdict oracle = oracle_verdict(f);

    std::cout << "curve: " << curve << "\n";
    std::cout << "tangency remainder at r=2: " << print_poly(report.remainder, ctx) << "\n";
    std::cout << "tangency order at r=2: " << order_to_string(report.order) << "\n";
    std::cout << "criterion: per_r = " << per_r_string(verdict.per_r) << " -> claims "
              << (verdict.claims_reducible ? "reducible" : "irreducible") << "\n";
    std::cout << "oracle: branches = "
              << (oracle.branches ? std::to_string(*oracle.branches) : std::string("UNKNOWN"))
              << ", status = " << oracle_status_name(oracle.status) << " -> "
              << (oracle.exact() ? (oracle.reducible() ? "reducible" : "irreducible") : "unknown")
              << "\n";

    bool falsified = !verdict.claims_reducible && oracle.exact() && oracle.branches == 3 &&
                     oracle.reducible();
    if (!falsified) {
        std::cout << "expected disagreement did not reproduce\n";
        return 2;
    }
    std::cout << "criterion claims irreducible, oracle counts 3 branches: THEOREM FALSIFIED\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weierstrass tangency criterion vs. Newton-Puiseux branch counting"};
    app.require_subcommand(1);

    std::string f_expr, g_expr, vars = "x,y";
    std::string corpus_path, format = "csv", out_path;
    int r = 2, precision = 12, jobs = 1;

    auto* divide = app.add_subcommand("divide", "Euclidean division g = Q*f + R by a Weierstrass polynomial");
    divide->add_option("--f", f_expr, "divisor, Weierstrass form")->required();
    divide->add_option("--g", g_expr, "dividend")->required();
    divide->add_option("--vars", vars, "comma-separated variables, x first");

    auto* prepare = app.add_subcommand("prepare", "Weierstrass preparation g = unit * wpoly through total degree N");
    prepare->add_option("--g", g_expr, "input polynomial")->required();
    prepare->add_option("--precision", precision, "truncation degree N");
    prepare->add_option("--vars", vars, "comma-separated variables, x first");

    auto* tangency = app.add_subcommand("tangency", "remainder and x-order of x^r df/dx modulo f");
    tangency->add_option("--f", f_expr, "curve, Weierstrass form")->required();
    tangency->add_option("--r", r, "power in x^r d/dx")->required();
    tangency->add_option("--vars", vars, "comma-separated variables, x first");

    auto* criterion = app.add_subcommand("criterion", "tangency-order sweep over 2 <= r < k");
    criterion->add_option("--f", f_expr, "curve, Weierstrass form")->required();
    criterion->add_option("--vars", vars, "comma-separated variables, x first");

    auto* oracle = app.add_subcommand("oracle", "branch count at the origin (plane curves)");
    oracle->add_option("--f", f_expr, "curve, Weierstrass form")->required();
    oracle->add_option("--vars", vars, "comma-separated variables, x first");

    auto* evaluate_cmd = app.add_subcommand("evaluate", "criterion vs. ground truth over a corpus");
    evaluate_cmd->add_option("--corpus", corpus_path, "corpus JSON path")->required();
    evaluate_cmd->add_option("--format", format, "csv or md")
        ->check(CLI::IsMember({"csv", "md"}));
    evaluate_cmd->add_option("--out", out_path, "write report here instead of stdout");
    evaluate_cmd->add_option("--jobs", jobs, "worker threads");

    auto* falsify = app.add_subcommand("falsify", "run the bundled counterexample end to end");

    try {
        app.parse(argc, argv);
        if (divide->parsed()) return run_divide(f_expr, g_expr, vars);
        if (prepare->parsed()) return run_prepare(g_expr, precision, vars);
        if (tangency->parsed()) return run_tangency(f_expr, r, vars);
        if (criterion->parsed()) return run_criterion(f_expr, vars);
        if (oracle->parsed()) return run_oracle(f_expr, vars);
        if (evaluate_cmd->parsed())
            return run_evaluate(corpus_path, format, out_path, jobs);
        if (falsify->parsed()) return run_falsify();
        return 1;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
