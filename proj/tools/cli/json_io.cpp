#include "cli/json_io.hpp"

#include "kpalg/expr.hpp"

#include <fstream>
#include <sstream>

namespace kpalg::cli {

namespace {

std::string expression_text(const Json& j, const char* what)
{
    if (j.is_string())
        return j.get<std::string>();
    if (j.is_number_integer())
        return std::to_string(j.get<long long>());
    throw UsageError("invalid_input", std::string(what) + " must be an expression string");
}

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw UsageError("invalid_input", std::string("missing field \"") + key + "\"");
    return j.at(key);
}

GaussianRational constant_field(const Json& j, const char* key)
{
    return parse_constant(expression_text(field(j, key), key));
}

} // namespace

Json load_json_argument(const std::string& argument)
{
    std::string text = argument;
    if (!argument.empty() && argument.front() == '@') {
        std::ifstream in(argument.substr(1));
        if (!in)
            throw UsageError("invalid_input", "cannot read " + argument.substr(1));
        std::ostringstream buffer;
        buffer << in.rdbuf();
        text = buffer.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw UsageError("invalid_json", e.what());
    }
}

Metric metric_from_json(const Json& j)
{
    const Json& entries = field(j, "entries");
    if (!entries.is_array() || entries.size() != 2 || !entries[0].is_array() || entries[0].size() != 2
        || !entries[1].is_array() || entries[1].size() != 2)
        throw UsageError("invalid_input", "\"entries\" must be a 2x2 array");
    Matrix2 m;
    for (int i = 0; i < 2; ++i)
        for (int k = 0; k < 2; ++k)
            m(i, k) = parse_expr(expression_text(entries[i][k], "metric entry"));
    if (!(m(0, 1) == m(1, 0)))
        throw UsageError("asymmetric_metric", "metric entries e12 and e21 differ");
    return Metric::from_matrix(m);
}

Json to_json(const Metric& g)
{
    Json out;
    out["entries"] = Json::array({Json::array({format_expr(g.a), format_expr(g.b)}),
                                  Json::array({format_expr(g.b), format_expr(g.c)})});
    return out;
}

Automorphism automorphism_from_json(const Json& j)
{
    const Json& type = field(j, "type");
    if (type == "scale_shear") {
        RationalFunction p = parse_expr(expression_text(field(j, "p"), "p"));
        if (!p.is_polynomial() || p.depends_on(Var::y))
            throw UsageError("invalid_input", "scale_shear \"p\" must be a polynomial in x");
        return Automorphism(ScaleShear{constant_field(j, "alpha"), p.num() * p.den().constant_term().inverse()});
    }
    if (type == "mobius") {
        return Automorphism(Mobius{constant_field(j, "alpha"), constant_field(j, "beta"), constant_field(j, "gamma"),
                                   constant_field(j, "delta"), parse_expr(expression_text(field(j, "r"), "r"))});
    }
    throw UsageError("invalid_input", "automorphism \"type\" must be scale_shear or mobius");
}

Json to_json(const Automorphism& phi)
{
    Json out;
    if (phi.is_scale_shear()) {
        const auto& s = phi.scale_shear();
        out["type"] = "scale_shear";
        out["alpha"] = format_constant(s.alpha);
        out["p"] = format_polynomial(s.p);
        return out;
    }
    const auto& m = phi.mobius();
    out["type"] = "mobius";
    out["alpha"] = format_constant(m.alpha);
    out["beta"] = format_constant(m.beta);
    out["gamma"] = format_constant(m.gamma);
    out["delta"] = format_constant(m.delta);
    out["r"] = format_expr(m.r);
    return out;
}

Json to_json(const IsoCertificate& cert)
{
    Json out;
    out["verdict"] = std::string(to_string(cert.verdict));
    if (cert.witness)
        out["witness"] = to_json(*cert.witness);
    if (cert.constraint)
        out["constraint"] = cert.constraint->to_string();
    if (cert.reason)
        out["reason"] = *cert.reason;
    return out;
}

} // namespace kpalg::cli
