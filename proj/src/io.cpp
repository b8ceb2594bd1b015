#include "signcert/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace signcert::io {

using nlohmann::json;

Signomial parse_signomial_text(std::istream& in) {
    std::vector<Term> terms;
    std::size_t n = 0;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        double coeff;
        if (!(ls >> coeff)) {
            std::string leftover;
            if (ls.clear(), ls >> leftover)
                throw ParseError(lineno, "cannot read a coefficient from '" + line + "'");
            continue;  // blank or comment-only line
        }
        if (coeff == 0.0) throw ParseError(lineno, "zero coefficient is not allowed");
        if (!std::isfinite(coeff)) throw ParseError(lineno, "coefficient must be finite");
        Point mu;
        double e;
        while (ls >> e) mu.push_back(e);
        if (!ls.eof()) throw ParseError(lineno, "trailing garbage after the exponents");
        if (mu.empty()) throw ParseError(lineno, "term needs at least one exponent");
        if (n == 0) n = mu.size();
        if (mu.size() != n)
            throw ParseError(lineno, "expected " + std::to_string(n) + " exponents, got " +
                                         std::to_string(mu.size()));
        terms.push_back({coeff, std::move(mu)});
    }
    if (terms.empty()) throw ParseError("no terms found");
    return Signomial(n, std::move(terms));
}

std::string to_sig_text(const Signomial& f) {
    std::ostringstream out;
    out.precision(17);
    for (const auto& t : f.terms()) {
        out << t.coeff;
        for (double e : t.exponent) out << " " << e;
        out << "\n";
    }
    return out.str();
}

Signomial parse_signomial_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("terms"))
        throw ParseError("signomial json needs fields 'n' and 'terms'");
    if (!j["n"].is_number_unsigned() || j["n"].get<std::size_t>() == 0)
        throw ParseError("'n' must be a positive integer");
    const std::size_t n = j["n"].get<std::size_t>();
    if (!j["terms"].is_array()) throw ParseError("'terms' must be an array");
    std::vector<Term> terms;
    for (const auto& tj : j["terms"]) {
        if (!tj.is_object() || !tj.contains("c") || !tj.contains("mu"))
            throw ParseError("each term needs fields 'c' and 'mu'");
        const double c = tj["c"].get<double>();
        if (c == 0.0) throw ParseError("zero coefficient is not allowed");
        Point mu = tj["mu"].get<Point>();
        if (mu.size() != n)
            throw ParseError("term exponent length " + std::to_string(mu.size()) +
                             " does not match n=" + std::to_string(n));
        terms.push_back({c, std::move(mu)});
    }
    if (terms.empty()) throw ParseError("no terms found");
    return Signomial(n, std::move(terms));
}

json signomial_to_json(const Signomial& f) {
    json terms = json::array();
    for (const auto& t : f.terms()) terms.push_back({{"c", t.coeff}, {"mu", t.exponent}});
    return {{"n", f.dimension()}, {"terms", terms}};
}

Signomial read_signomial_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        json j;
        try {
            in >> j;
        } catch (const json::exception& e) {
            throw ParseError(std::string("invalid json: ") + e.what());
        }
        return parse_signomial_json(j);
    }
    return parse_signomial_text(in);
}

SimplexWitness parse_simplex_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
        throw ParseError("simplex json needs a 'vertices' array");
    std::vector<Point> vertices;
    for (const auto& vj : j["vertices"]) vertices.push_back(vj.get<Point>());
    try {
        return simplex_from_vertices(vertices);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("invalid simplex: ") + e.what());
    }
}

SimplexWitness read_simplex_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid json: ") + e.what());
    }
    return parse_simplex_json(j);
}

json simplex_to_json(const SimplexWitness& p) {
    json facets = json::array();
    for (const auto& f : p.facets)
        facets.push_back({{"normal", f.normal}, {"offset", f.offset}});
    return {{"type", "simplex"}, {"vertices", p.vertices}, {"facets", facets}};
}

namespace {

json witness_to_json(const CertificateWitness& w) {
    if (std::holds_alternative<std::monostate>(w)) return nullptr;
    if (const auto* s = std::get_if<SeparationWitness>(&w)) {
        return {{"type", "separating"},
                {"v", s->v},
                {"a", s->a},
                {"strictness", to_string(s->strictness)},
                {"marginal", s->marginal}};
    }
    if (const auto* e = std::get_if<EnclosingWitness>(&w)) {
        return {{"type", "enclosing"},
                {"v", e->v},
                {"a", e->a},
                {"b", e->b},
                {"strict", e->strict},
                {"lower", e->lower_set},
                {"upper", e->upper_set}};
    }
    if (const auto* p = std::get_if<SimplexWitness>(&w)) return simplex_to_json(*p);
    if (const auto* h = std::get_if<HyperplaneWitness>(&w))
        return {{"type", "hyperplane"}, {"v", h->v}, {"a", h->a}};
    if (const auto* c = std::get_if<CardinalityNote>(&w))
        return {{"type", "cardinality"},
                {"positive_points", c->positive_points},
                {"newton_dimension", c->newton_dimension}};
    return nullptr;
}

}  // namespace

json certificate_to_json(const Certificate& c) {
    json j;
    j["target"] = to_string(c.target);
    if (c.bound == BoundValue::unknown)
        j["bound"] = "unknown";
    else
        j["bound"] = static_cast<int>(c.bound);
    j["rule"] = c.rule;
    j["witness"] = witness_to_json(c.witness);
    j["diagnostics"] = c.diagnostics;
    validate_certificate_json(j);
    return j;
}

void validate_certificate_json(const json& j) {
    const auto fail = [](const std::string& what) {
        throw ParseError("certificate schema: " + what);
    };
    if (!j.is_object()) fail("not an object");
    for (const char* key : {"target", "bound", "rule", "witness", "diagnostics"})
        if (!j.contains(key)) fail(std::string("missing field '") + key + "'");
    const auto& target = j["target"];
    if (!target.is_string() || (target != "negative" && target != "positive"))
        fail("target must be 'negative' or 'positive'");
    const auto& bound = j["bound"];
    const bool bound_ok = (bound.is_string() && bound == "unknown") ||
                          (bound.is_number_integer() && bound.get<int>() >= 0 &&
                           bound.get<int>() <= 2);
    if (!bound_ok) fail("bound must be 0, 1, 2, or 'unknown'");
    if (!j["rule"].is_string() || j["rule"].get<std::string>().empty()) fail("rule missing");
    if (!j["witness"].is_null() && !(j["witness"].is_object() && j["witness"].contains("type")))
        fail("witness must be null or a typed object");
    if (!j["diagnostics"].is_array()) fail("diagnostics must be an array");
}

}  // namespace signcert::io
