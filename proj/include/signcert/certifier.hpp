#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "signcert/descartes.hpp"
#include "signcert/separation.hpp"
#include "signcert/simplex_geometry.hpp"
#include "signcert/signomial.hpp"

namespace signcert {

enum class TargetSign { negative, positive };

const char* to_string(TargetSign t);

/// The component bound a certificate can assert. "unknown" is an honest
/// outcome: no rule fired, which says nothing about the true count.
enum class BoundValue : int { zero = 0, one = 1, two = 2, unknown = -1 };

struct HyperplaneWitness {
    Point v;
    double a = 0.0;
};

struct CardinalityNote {
    std::size_t positive_points = 0;
    std::size_t newton_dimension = 0;
};

using CertificateWitness = std::variant<std::monostate, SeparationWitness, EnclosingWitness,
                                        SimplexWitness, HyperplaneWitness, CardinalityNote>;

/// Which rule fired, the revalidated witness justifying it, and the bound on
/// the number of connected components of the target sign.
struct Certificate {
    TargetSign target = TargetSign::negative;
    BoundValue bound = BoundValue::unknown;
    std::string rule;  // stable identifiers, see rules:: below
    CertificateWitness witness;
    std::vector<std::string> diagnostics;
};

namespace rules {
inline constexpr const char* empty_negative_support = "empty_negative_support";
inline constexpr const char* single_negative_point = "single_negative_point";
inline constexpr const char* strict_separating = "strict_separating";
inline constexpr const char* convexification = "convexification";
inline constexpr const char* positive_on_hyperplane = "positive_on_hyperplane";
inline constexpr const char* few_positive_points = "few_positive_points";
inline constexpr const char* strict_enclosing = "strict_enclosing";
inline constexpr const char* descartes_univariate = "descartes_univariate";
inline constexpr const char* unknown = "unknown";
}  // namespace rules

struct CertifyOptions {
    SeparationOptions separation;
    double tol = 1e-9;
};

/// Certify an upper bound on the number of connected components of the given
/// sign, cheapest and tightest rules first. A positive target is certified by
/// negating the signomial. A user-supplied simplex is validated and, if it
/// fails, rejected with the violated condition; it is never trusted blindly.
Certificate certify(const Signomial& f, TargetSign target,
                    const std::optional<SimplexWitness>& user_simplex = std::nullopt,
                    const CertifyOptions& opts = {});

/// Recover a separating vector from a simplex witness whose vertex cones do
/// not all meet the positive points: the facet opposite an empty cone
/// separates, strictly when some negative point is off that facet.
std::optional<SeparationWitness> simplex_to_separating(const Signomial& f,
                                                       const SimplexWitness& p,
                                                       double tol = 1e-9);

/// One-variable certificate straight from the sign-change count. Bounds
/// above two do not fit the certificate range and are reported as unknown
/// with the counts in the diagnostics.
Certificate univariate_certify(const Signomial& f, TargetSign target);

}  // namespace signcert
