#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "signcert/certifier.hpp"
#include "signcert/signomial.hpp"
#include "signcert/simplex_geometry.hpp"

namespace signcert::io {

/// Parse failure with the offending 1-based line where that makes sense.
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
    ParseError(std::size_t line, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg) {}
};

// Text format: one `coefficient e1 e2 ... en` per line, `#` comments and
// blank lines ignored. Zero coefficients and ragged dimensions are rejected.
Signomial parse_signomial_text(std::istream& in);
std::string to_sig_text(const Signomial& f);

// {"n": 2, "terms": [{"c": -1.0, "mu": [4, 5]}, ...]}
Signomial parse_signomial_json(const nlohmann::json& j);
nlohmann::json signomial_to_json(const Signomial& f);

// Sniffs by extension: .json structured, anything else text.
Signomial read_signomial_file(const std::string& path);

// {"vertices": [[...], ...]} with n+1 vertex vectors.
SimplexWitness parse_simplex_json(const nlohmann::json& j);
SimplexWitness read_simplex_file(const std::string& path);
nlohmann::json simplex_to_json(const SimplexWitness& p);

nlohmann::json certificate_to_json(const Certificate& c);

/// Schema check for the certificate document; throws ParseError on shape
/// violations. Run before anything is written out.
void validate_certificate_json(const nlohmann::json& j);

}  // namespace signcert::io
