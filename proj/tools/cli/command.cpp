#include "cli/command.hpp"

#include "kpalg/error.hpp"
#include "kpalg/expr.hpp"

#include <CLI11.hpp>

#include <map>
#include <optional>

namespace kpalg::cli {

namespace {

struct Options {
    std::string format = "json";
    std::string metric;
    std::string metric2;
    std::string automorphism;
    std::string automorphism2;
    std::string expr;
    std::string f;
    std::string g;
    std::string lambda = "1";
    std::string mu = "0";
    std::string decide_class;
    std::optional<std::string> alpha;
};

CommandResult make(int code, Json payload)
{
    CommandResult out;
    out.exit_code = code;
    out.payload = std::move(payload);
    return out;
}

CommandResult check_kp(const Options& o)
{
    const KPAlgebra kp = kp_check(metric_from_json(load_json_argument(o.metric)));
    Json out;
    out["holds"] = true;
    out["eta"] = format_expr(kp.eta);
    return make(exit_affirmative, std::move(out));
}

CommandResult run_bracket(const Options& o)
{
    const PoissonStructure s(parse_constant(o.lambda), parse_constant(o.mu));
    Json out;
    out["bracket"] = format_expr(bracket(parse_expr(o.f), parse_expr(o.g), s));
    return make(exit_affirmative, std::move(out));
}

CommandResult run_apply(const Options& o)
{
    const Automorphism phi = automorphism_from_json(load_json_argument(o.automorphism));
    Json out;
    out["result"] = format_expr(apply_auto(phi, parse_expr(o.expr)));
    return make(exit_affirmative, std::move(out));
}

CommandResult run_compose(const Options& o)
{
    const Automorphism outer = automorphism_from_json(load_json_argument(o.automorphism));
    const Automorphism inner = automorphism_from_json(load_json_argument(o.automorphism2));
    Json out;
    out["automorphism"] = to_json(compose(outer, inner));
    return make(exit_affirmative, std::move(out));
}

CommandResult run_transform(const Options& o)
{
    const Metric g = metric_from_json(load_json_argument(o.metric));
    const Automorphism phi = automorphism_from_json(load_json_argument(o.automorphism));
    Json out;
    out["metric"] = to_json(transform_metric(g, phi));
    return make(exit_affirmative, std::move(out));
}

CommandResult run_verify(const Options& o)
{
    const Metric g = metric_from_json(load_json_argument(o.metric));
    const Metric g2 = metric_from_json(load_json_argument(o.metric2));
    const Automorphism phi = automorphism_from_json(load_json_argument(o.automorphism));
    const bool iso = verify_iso(g, g2, phi);
    Json out;
    out["isomorphic"] = iso;
    out["eta_transported"] = eta_obstruction(g, g2, phi);
    return make(iso ? exit_affirmative : exit_negative, std::move(out));
}

int certificate_exit_code(const IsoCertificate& cert)
{
    switch (cert.verdict) {
    case Verdict::isomorphic: return exit_affirmative;
    case Verdict::not_isomorphic: return exit_negative;
    case Verdict::undecided: return exit_undecided;
    }
    return exit_undecided;
}

CommandResult run_decide(const Options& o)
{
    const Metric g = metric_from_json(load_json_argument(o.metric));
    const Metric g2 = metric_from_json(load_json_argument(o.metric2));
    IsoCertificate cert;
    if (o.decide_class == "constant") {
        cert = decide_constant(g, g2);
    } else if (o.decide_class == "diag-x") {
        cert = decide_diag_x(g, g2);
    } else if (o.decide_class == "diag-y") {
        cert = check_diag_y_sufficient(g, g2);
    } else {
        if (!o.alpha)
            throw UsageError("usage", "decide --class xdep requires --alpha");
        cert = check_xdep_sufficient(g, g2, parse_constant(*o.alpha));
    }
    return make(certificate_exit_code(cert), to_json(cert));
}

CommandResult error_result(int code, const std::string& error, const std::string& message)
{
    Json out;
    out["error"] = error;
    CommandResult r = make(code, std::move(out));
    r.diagnostic = message;
    return r;
}

std::string text_value(const Json& v)
{
    return v.is_string() ? v.get<std::string>() : v.dump();
}

} // namespace

CommandResult run_command(const std::vector<std::string>& args)
{
    Options o;
    CLI::App app{"Kahler-Poisson algebras over Q(i)(x, y): checks, automorphisms and isomorphism certificates", "kpalg"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));

    auto* kp = app.add_subcommand("check-kp", "Verify the Kahler-Poisson condition and compute eta");
    kp->add_option("--metric", o.metric, "Metric JSON or @file")->required();

    auto* br = app.add_subcommand("bracket", "Poisson bracket {f, g} for {x, y} = lambda*x + mu*y");
    br->add_option("--f", o.f, "First expression")->required();
    br->add_option("--g", o.g, "Second expression")->required();
    br->add_option("--lambda", o.lambda, "Coefficient of x in {x, y}")->capture_default_str();
    br->add_option("--mu", o.mu, "Coefficient of y in {x, y}")->capture_default_str();

    auto* ap = app.add_subcommand("apply", "Apply an automorphism to an expression");
    ap->add_option("--auto", o.automorphism, "Automorphism JSON or @file")->required();
    ap->add_option("--expr", o.expr, "Expression")->required();

    auto* co = app.add_subcommand("compose", "Compose two scale-shear automorphisms (auto o auto2)");
    co->add_option("--auto", o.automorphism, "Outer automorphism")->required();
    co->add_option("--auto2", o.automorphism2, "Inner automorphism")->required();

    auto* tr = app.add_subcommand("transform", "Transform a metric: A^T phi(g) A");
    tr->add_option("--metric", o.metric, "Metric JSON or @file")->required();
    tr->add_option("--auto", o.automorphism, "Automorphism JSON or @file")->required();

    auto* ve = app.add_subcommand("verify", "Check that an automorphism maps metric onto metric2");
    ve->add_option("--metric", o.metric, "Source metric")->required();
    ve->add_option("--metric2", o.metric2, "Target metric")->required();
    ve->add_option("--auto", o.automorphism, "Candidate automorphism")->required();

    auto* de = app.add_subcommand("decide", "Produce an isomorphism certificate");
    de->add_option("--class", o.decide_class, "Metric family")
        ->required()
        ->check(CLI::IsMember({"constant", "diag-x", "xdep", "diag-y"}));
    de->add_option("--metric", o.metric, "First metric")->required();
    de->add_option("--metric2", o.metric2, "Second metric")->required();
    de->add_option("--alpha", o.alpha, "Scale factor (required for xdep)");

    std::vector<const char*> argv{"kpalg"};
    for (const auto& a : args)
        argv.push_back(a.c_str());

    CommandResult result;
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (kp->parsed())
            result = check_kp(o);
        else if (br->parsed())
            result = run_bracket(o);
        else if (ap->parsed())
            result = run_apply(o);
        else if (co->parsed())
            result = run_compose(o);
        else if (tr->parsed())
            result = run_transform(o);
        else if (ve->parsed())
            result = run_verify(o);
        else
            result = run_decide(o);
    } catch (const CLI::CallForHelp&) {
        Json out;
        out["help"] = app.help();
        result = make(exit_affirmative, std::move(out));
    } catch (const CLI::ParseError& e) {
        result = error_result(exit_parse_error, "usage", e.what());
    } catch (const UsageError& e) {
        result = error_result(exit_parse_error, e.code(), e.what());
    } catch (const ParseError& e) {
        result = error_result(exit_parse_error, "parse_error", e.what());
        result.payload["offset"] = e.offset();
    } catch (const Error& e) {
        result = error_result(exit_domain_error, std::string(to_string(e.code())), e.what());
    }
    result.format = o.format == "text" ? OutputFormat::text : OutputFormat::json;
    return result;
}

std::string render(const CommandResult& result)
{
    if (result.format == OutputFormat::json)
        return result.payload.dump();
    std::string out;
    for (const auto& [key, value] : result.payload.items()) {
        if (!out.empty())
            out += '\n';
        out += key + ": " + text_value(value);
    }
    return out;
}

} // namespace kpalg::cli
