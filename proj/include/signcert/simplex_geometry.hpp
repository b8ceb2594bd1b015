#pragma once

#include <optional>
#include <string>
#include <vector>

#include "signcert/separation.hpp"
#include "signcert/signomial.hpp"

namespace signcert {

/// The hyperplane {x : normal . x = offset}; the sign of the normal picks
/// which closed side counts as minus.
struct Hyperplane {
    Point normal;
    double offset = 0.0;
};

/// An n-simplex as n+1 affinely independent vertices together with its facet
/// half-space data: P is the intersection of {normal_i . x <= offset_i}, and
/// facet i contains every vertex except vertex i, which satisfies the
/// inequality strictly.
struct SimplexWitness {
    std::vector<Point> vertices;
    std::vector<Hyperplane> facets;

    std::size_t dimension() const { return vertices.empty() ? 0 : vertices[0].size(); }
};

/// Build the witness from vertices: affine independence is checked by a
/// volume test and the facet planes are derived.
SimplexWitness simplex_from_vertices(const std::vector<Point>& vertices);

/// Build the witness from n+1 bounding half-spaces {normal.x <= offset}.
/// Checks that every n-subset of normals is linearly independent and that
/// each n-wise intersection point lies strictly inside the remaining
/// half-space; throws naming the violated condition otherwise.
SimplexWitness simplex_from_halfspaces(const std::vector<Hyperplane>& planes);

/// Affine coordinates of alpha in the vertex basis: sum lambda_i = 1 and
/// sum lambda_i vertex_i = alpha, by a dense linear solve.
linalg::Vec barycentric(const SimplexWitness& p, const Point& alpha);

/// Index k with lambda_i <= 0 for all i != k (tolerance-qualified), i.e. the
/// negative vertex cone containing alpha; nullopt if alpha is in none.
std::optional<std::size_t> negative_cone_membership(const SimplexWitness& p, const Point& alpha,
                                                    double tol = 1e-9, bool* marginal = nullptr);

/// The equivalent facet-side test: alpha is in the cone at vertex k iff it
/// lies on the plus side of every facet containing vertex k. Kept as an
/// independent implementation for cross-checking.
bool cone_membership_by_facets(const SimplexWitness& p, const Point& alpha, std::size_t k,
                               double tol = 1e-9);

bool simplex_contains(const SimplexWitness& p, const Point& alpha, double tol = 1e-9);

/// Simplex with the negative points inside and the positive points in the
/// negative vertex cones, built from a very strict separating vector via the
/// perturbation basis. seed_directions and a0 expose the free choices of the
/// construction; defaults follow the library's own policy.
SimplexWitness simplex_from_very_strict(const Signomial& f, const Point& v,
                                        const std::vector<Point>& seed_directions = {},
                                        std::optional<double> a0 = std::nullopt,
                                        const SeparationOptions& opts = {});

/// Simplex from n-1 linearly independent non-strict separating vectors, for
/// supports whose negative hull avoids the positive points. Throws when the
/// family or the support fails the preconditions.
SimplexWitness simplex_from_nonstrict_family(const Signomial& f, const std::vector<Point>& w,
                                             const SeparationOptions& opts = {});

/// Affine map sending vertex 0 to the origin and vertex i to e_i; barycentric
/// coordinates are preserved.
AffineMap normalize_to_standard(const SimplexWitness& p);

enum class TermRule : std::uint8_t {
    pos_all_nonpositive,   // positive term, every exponent <= 0
    pos_one_free_coord,    // positive term, <= 0 off one coordinate, total >= 1
    neg_in_standard_simplex,  // negative term, exponents >= 0 with total <= 1
    violated,
};

struct ConvexityReport {
    bool is_convex_by_rules = false;
    std::vector<std::pair<Term, TermRule>> per_term;
};

/// Term-wise sufficient conditions for convexity: negative exponents inside
/// the standard simplex and positive exponents in its negative vertex cones.
ConvexityReport convex_by_term_rules(const Signomial& f, double tol = 1e-9);

}  // namespace signcert
