// signcert: certify component-count bounds for signomial sign regions, and
// cross-check them with a log-grid sampling oracle.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "signcert/certifier.hpp"
#include "signcert/io.hpp"
#include "signcert/region_oracle.hpp"

namespace {

using namespace signcert;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;     // unreadable/invalid input
constexpr int kExitDimension = 2; // subcommand used at the wrong dimension
constexpr int kExitUnknown = 3;   // certify produced no bound

std::vector<double> parse_csv_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stod(item));
    }
    return out;
}

int cmd_certify(const std::string& input, const std::string& target_str,
                const std::string& simplex_path, const std::string& json_out, double tol_lp) {
    Signomial f = io::read_signomial_file(input);
    std::optional<SimplexWitness> simplex;
    if (!simplex_path.empty()) simplex = io::read_simplex_file(simplex_path);

    CertifyOptions opts;
    if (tol_lp > 0) opts.separation.strict_tol = tol_lp;
    const TargetSign target =
        target_str == "positive" ? TargetSign::positive : TargetSign::negative;

    Certificate cert;
    try {
        cert = certify(f, target, simplex, opts);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    const nlohmann::json j = io::certificate_to_json(cert);
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        if (!out) {
            std::cerr << "error: cannot write " << json_out << "\n";
            return kExitInput;
        }
        out << j.dump(2) << "\n";
    }
    std::cout << j.dump(2) << "\n";
    return cert.bound == BoundValue::unknown ? kExitUnknown : kExitOk;
}

int cmd_oracle(const std::string& input, const std::string& box_str, std::size_t res,
               const std::string& raster, const std::string& csv, bool no_stability) {
    Signomial f = io::read_signomial_file(input);
    const std::size_t n = f.dimension();
    OracleOptions opts;
    if (n > opts.max_dimension) {
        std::cerr << "error: oracle supports at most " << opts.max_dimension
                  << " dimensions, input has " << n << "\n";
        return kExitDimension;
    }

    LogBox box;
    if (!box_str.empty()) {
        const std::vector<double> vals = parse_csv_doubles(box_str);
        if (vals.size() != 2 * n) {
            std::cerr << "error: --box needs " << 2 * n << " comma-separated values\n";
            return kExitInput;
        }
        for (std::size_t i = 0; i < n; ++i)
            box.range.emplace_back(vals[2 * i], vals[2 * i + 1]);
    } else {
        box.range.assign(n, {-3.0, 3.0});
    }
    box.resolution.assign(n, res);

    const GridLabeling g = grid_labeling(f, box, opts);
    for (const int sign : {-1, +1}) {
        const ComponentCount c = count_components(g, sign);
        std::string verdict;
        if (!no_stability) {
            std::vector<std::size_t> ladder;
            for (std::size_t r = res >= 256 ? res / 4 : 64; r <= res; r *= 2) ladder.push_back(r);
            if (ladder.size() < 2) ladder = {res / 2 < 2 ? 2 : res / 2, res};
            const StabilityReport rep = stability_check(f, box, sign, ladder, opts);
            verdict = rep.stable ? "stable" : "unstable";
        }
        std::cout << (sign < 0 ? "negative: " : "positive: ") << c.count;
        if (!verdict.empty()) std::cout << " (" << verdict << ")";
        if (c.touching_boundary > 0)
            std::cout << " [" << c.touching_boundary << " touching the box boundary]";
        std::cout << "\n";
    }
    if (!raster.empty()) write_ppm(g, raster);
    if (!csv.empty()) write_csv(g, csv);
    return kExitOk;
}

int cmd_descartes(const std::string& input) {
    Signomial f = io::read_signomial_file(input);
    if (f.dimension() != 1) {
        std::cerr << "error: descartes needs a univariate input, got dimension "
                  << f.dimension() << "\n";
        return kExitDimension;
    }
    UnivariateSignomial g;
    for (const auto& t : f.terms()) g.terms.emplace_back(t.exponent[0], t.coeff);
    std::sort(g.terms.begin(), g.terms.end());
    const SignSequence seq = SignSequence::of(g);
    std::cout << "sign sequence: ";
    for (int s : seq.signs) std::cout << (s > 0 ? '+' : '-');
    const int rho = sign_changes(seq);
    const ComponentBounds cb = component_bounds(seq);
    const bool leading_negative = g.leading_coefficient() < 0.0;
    std::cout << "\nsign changes: " << rho << "\n";
    std::cout << "components on (0,inf): at most " << cb.max_components << "\n";
    std::cout << "negative components: at most "
              << (leading_negative ? cb.max_with_leading_sign : cb.max_with_opposite_sign) << "\n";
    std::cout << "positive components: at most "
              << (leading_negative ? cb.max_with_opposite_sign : cb.max_with_leading_sign) << "\n";
    return kExitOk;
}

int cmd_transform(const std::string& input, const std::string& matrix_str,
                  const std::string& shift_str, const std::string& out_path) {
    Signomial f = io::read_signomial_file(input);
    const std::size_t n = f.dimension();
    const std::vector<double> mvals = parse_csv_doubles(matrix_str);
    if (mvals.size() != n * n) {
        std::cerr << "error: --matrix needs " << n * n << " row-major values\n";
        return kExitInput;
    }
    std::vector<double> shift(n, 0.0);
    if (!shift_str.empty()) {
        shift = parse_csv_doubles(shift_str);
        if (shift.size() != n) {
            std::cerr << "error: --shift needs " << n << " values\n";
            return kExitInput;
        }
    }
    linalg::Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = mvals[i * n + j];
    const Signomial g = monomial_transform(f, AffineMap(std::move(m), shift));
    const std::string text = io::to_sig_text(g);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "error: cannot write " << out_path << "\n";
            return kExitInput;
        }
        out << text;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signomial sign-region certifier and sampling oracle"};
    app.require_subcommand(1);

    std::string input, target = "negative", simplex_path, json_out;
    double tol_lp = 0.0;
    auto* certify_cmd =
        app.add_subcommand("certify", "bound the component count of one sign with a certificate");
    certify_cmd->add_option("input", input, "signomial file (.sig text or .json)")->required();
    certify_cmd->add_option("--target", target, "negative|positive (default negative)")
        ->check(CLI::IsMember({"negative", "positive"}));
    certify_cmd->add_option("--simplex", simplex_path,
                            "json file with a user-supplied simplex witness");
    certify_cmd->add_option("--json-out", json_out, "write the certificate here too");
    certify_cmd->add_option("--tol-lp", tol_lp,
                            "strictness slack tolerance (default 1e-7)");

    std::string box_str, raster, csv;
    std::size_t res = 512;
    bool no_stability = false;
    auto* oracle_cmd =
        app.add_subcommand("oracle", "count sign components on a log-scale sampling grid");
    oracle_cmd->add_option("input", input, "signomial file")->required();
    oracle_cmd->add_option("--box", box_str, "log-box as lo1,hi1,lo2,hi2,... (default -3..3)");
    oracle_cmd->add_option("--res", res, "cells per axis (default 512)");
    oracle_cmd->add_option("--raster", raster, "write a PPM raster (2-D only)");
    oracle_cmd->add_option("--csv", csv, "write per-cell signs as CSV");
    oracle_cmd->add_flag("--no-stability", no_stability, "skip the refinement ladder");

    auto* descartes_cmd =
        app.add_subcommand("descartes", "univariate sign-change bounds report");
    descartes_cmd->add_option("input", input, "univariate signomial file")->required();

    std::string matrix_str, shift_str, out_path;
    auto* transform_cmd =
        app.add_subcommand("transform", "apply a monomial change of variables to the support");
    transform_cmd->add_option("input", input, "signomial file")->required();
    transform_cmd->add_option("--matrix", matrix_str, "row-major n*n values")->required();
    transform_cmd->add_option("--shift", shift_str, "n values (default 0)");
    transform_cmd->add_option("-o,--out", out_path, "output file (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (certify_cmd->parsed())
            return cmd_certify(input, target, simplex_path, json_out, tol_lp);
        if (oracle_cmd->parsed())
            return cmd_oracle(input, box_str, res, raster, csv, no_stability);
        if (descartes_cmd->parsed()) return cmd_descartes(input);
        if (transform_cmd->parsed())
            return cmd_transform(input, matrix_str, shift_str, out_path);
    } catch (const signcert::io::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitOk;
}
