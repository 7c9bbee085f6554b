// Command-line surface: exact coefficient dumps, flat-coordinate and j
// evaluations, identity verification, and the named check suites, all with
// machine-readable output.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 domain
// error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "moonj/engine.hpp"
#include "moonj/errors.hpp"
#include "moonj/parse.hpp"
#include "moonj/suites.hpp"

using namespace moonj;
using json = nlohmann::ordered_json;

namespace {

constexpr const char* kVersion = "0.1.0";

int exit_code_for(errc code) {
    return code == errc::invalid_parameters ? 2 : 3;
}

int default_digits() {
    const char* env = std::getenv("MOON_DIGITS");
    if (env == nullptr || *env == '\0') return 50;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == nullptr || *end != '\0' || v < 1 || v > 100000)
        throw CLI::ValidationError("MOON_DIGITS", "must be a positive digit count");
    return static_cast<int>(v);
}

json complex_json(const Complex& z, int digits) {
    return json{{"re", z.re().str(digits)}, {"im", z.im().str(digits)}, {"digits", digits}};
}

json report_json(const VerificationReport& r, int digits) {
    return json{{"check", r.check},
                {"case", r.case_name},
                {"t", r.t_text},
                {"lhs", complex_json(r.lhs, digits)},
                {"rhs", complex_json(r.rhs, digits)},
                {"exact_rhs", r.exact_rhs},
                {"abs_residual", r.abs_residual.str(6)},
                {"digits_matched", r.digits_matched},
                {"series_terms_used", r.series_terms_used},
                {"pass", r.pass},
                {"notes", r.notes}};
}

void emit(const std::string& command, const json& inputs, const json& result) {
    json record{{"command", command}, {"inputs", inputs}, {"result", result},
                {"version", kVersion}};
    std::cout << record.dump(2) << "\n";
}

struct Args {
    std::string case_name = "rho";
    std::string t_text;
    std::string tau_text;
    std::string which = "all";
    std::string format = "json";
    int order = -1;
    int digits = 50;
    long terms = 1000;
    long cap = 500;
    long samples = 0;
    unsigned long seed = 20260822;
    std::string eval_text;
};

int run_expand(const Args& a) {
    if (a.order < 0 || a.order > a.cap)
        fail(errc::invalid_parameters, "order must lie in [0, " + std::to_string(a.cap) + "]");
    const CMCase& cm = CMCase::by_name(a.case_name);
    TruncatedSeries b = cm.point == CMPoint::rho ? elliptic_expansion_rho(a.order)
                                                 : elliptic_expansion_i(a.order);
    if (a.format == "csv") {
        std::cout << "index,value\n";
        for (int n = 0; n <= a.order; ++n) std::cout << n << "," << b.coeff(n).str() << "\n";
        return 0;
    }
    json coeffs = json::array();
    for (int n = 0; n <= a.order; ++n) coeffs.push_back(b.coeff(n).str());
    emit("expand", {{"case", a.case_name}, {"order", a.order}, {"format", a.format}},
         {{"coefficients", coeffs}});
    return 0;
}

int run_flatcoord(const Args& a) {
    if (a.order < 0 && a.eval_text.empty())
        fail(errc::invalid_parameters, "need an order, --eval, or both");
    const CMCase& cm = CMCase::by_name(a.case_name);
    json inputs{{"case", a.case_name}};
    json result;
    if (a.order >= 0) {
        if (a.order > a.cap)
            fail(errc::invalid_parameters, "order must lie in [0, " + std::to_string(a.cap) + "]");
        inputs["order"] = a.order;
        TruncatedSeries c = flat_series(cm, std::max(a.order, 1)).c;
        json coeffs = json::array();
        for (int n = 0; n <= a.order; ++n) coeffs.push_back(c.coeff(n).str());
        result["coefficients"] = coeffs;
    }
    if (!a.eval_text.empty()) {
        inputs["eval"] = a.eval_text;
        inputs["terms"] = a.terms;
        inputs["digits"] = a.digits;
        PrecisionPolicy policy(a.digits, 15);
        Complex tc = t_complex(parse_t(a.eval_text), policy.working_bits());
        Complex value = flat_eval_series(cm, tc, a.terms, policy);
        result["value"] = complex_json(value, a.digits);
    }
    emit("flatcoord", inputs, result);
    return 0;
}

int run_verify(const Args& a) {
    const CMCase& cm = CMCase::by_name(a.case_name);
    PrecisionPolicy policy(a.digits, 15);
    TValue t = parse_t(a.t_text);
    VerificationReport rep =
        t.symbolic ? verify_numeric(cm, t_complex(t, policy.working_bits()), a.terms, policy)
                   : verify_numeric(cm, t.exact, a.terms, policy);
    emit("verify",
         {{"case", a.case_name}, {"t", a.t_text}, {"digits", a.digits}, {"terms", a.terms}},
         report_json(rep, a.digits));
    return rep.pass ? 0 : 1;
}

int run_suite(const Args& a) {
    SuiteOptions opt;
    opt.digits = a.digits;
    opt.samples = a.samples;
    opt.seed = a.seed;

    std::vector<std::pair<std::string, std::vector<CheckResult>>> groups;
    auto want = [&](const char* name) { return a.which == name || a.which == "all"; };
    if (want("exact")) groups.emplace_back("exact", run_exact_suite(opt));
    if (want("numeric")) groups.emplace_back("numeric", run_numeric_suite(opt));
    if (want("sectors")) groups.emplace_back("sectors", run_sector_suite(opt));
    if (want("transformations"))
        groups.emplace_back("transformations", run_transformation_suite(opt));
    if (want("inversion")) groups.emplace_back("inversion", run_inversion_suite(opt));

    bool ok = true;
    json out = json::array();
    for (const auto& [name, checks] : groups) {
        json jc = json::array();
        for (const CheckResult& c : checks) {
            jc.push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
            ok = ok && c.pass;
        }
        out.push_back(json{{"suite", name}, {"checks", jc}});
    }
    emit("suite",
         {{"which", a.which}, {"digits", a.digits}, {"seed", a.seed}, {"samples", a.samples}},
         {{"suites", out}, {"all_pass", ok}});
    return ok ? 0 : 1;
}

int run_jeval(const Args& a) {
    PrecisionPolicy policy(a.digits, 15);
    Complex tau = parse_tau(a.tau_text, policy.working_bits());
    Complex value = j_eval(tau, policy);
    emit("jeval", {{"tau", a.tau_text}, {"digits", a.digits}},
         {{"j", complex_json(value, a.digits)}});
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"elliptic expansions of j at its fixed points: coefficients, evaluations, and "
                 "verification suites"};
    app.require_subcommand(1);
    Args a;

    try {
        a.digits = default_digits();
    } catch (const CLI::Error& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    CLI::App* expand = app.add_subcommand("expand", "exact expansion coefficients");
    expand->add_option("case", a.case_name, "rho or i")->required()
        ->check(CLI::IsMember({"rho", "i"}));
    expand->add_option("order", a.order, "highest index to emit")->required();
    expand->add_option("--format", a.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    expand->add_option("--cap", a.cap, "order cap");

    CLI::App* flatc = app.add_subcommand("flatcoord", "flat coordinate series and values");
    flatc->add_option("case", a.case_name, "rho or i")->required()
        ->check(CLI::IsMember({"rho", "i"}));
    flatc->add_option("order", a.order, "highest coefficient index");
    flatc->add_option("--eval", a.eval_text, "point t: rational, decimal, or sqrt3-1");
    flatc->add_option("--terms", a.terms, "series terms for evaluation");
    flatc->add_option("--digits", a.digits, "target decimal digits");

    CLI::App* verify = app.add_subcommand("verify", "check the identity at a point");
    verify->add_option("case", a.case_name, "rho or i")->required()
        ->check(CLI::IsMember({"rho", "i"}));
    verify->add_option("t", a.t_text, "point t: rational, decimal, or sqrt3-1")->required();
    verify->add_option("--digits", a.digits, "target decimal digits");
    verify->add_option("--terms", a.terms, "series terms");

    CLI::App* suite = app.add_subcommand("suite", "run named check suites");
    suite->add_option("--which", a.which, "exact, numeric, sectors, transformations, inversion, "
                                          "or all")
        ->check(CLI::IsMember({"exact", "numeric", "sectors", "transformations", "inversion",
                               "all"}));
    suite->add_option("--digits", a.digits, "target decimal digits");
    suite->add_option("--seed", a.seed, "sampling seed");
    suite->add_option("--samples", a.samples, "per-check sample count override");

    CLI::App* jeval = app.add_subcommand("jeval", "evaluate j at a point of the upper half-plane");
    jeval->add_option("tau", a.tau_text, "complex literal, e.g. 0.5+0.5i or 1.42i or i")
        ->required();
    jeval->add_option("--digits", a.digits, "target decimal digits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (expand->parsed()) return run_expand(a);
        if (flatc->parsed()) return run_flatcoord(a);
        if (verify->parsed()) return run_verify(a);
        if (suite->parsed()) return run_suite(a);
        if (jeval->parsed()) return run_jeval(a);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return 2;
}
