#include "signcert/simplex_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "signcert/linprog.hpp"

namespace signcert {

using linalg::Mat;
using linalg::Vec;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double point_scale(const std::vector<Point>& pts) {
    double s = 1.0;
    for (const auto& p : pts)
        for (double x : p) s = std::max(s, std::abs(x));
    return s;
}

void check_vertex_count(const std::vector<Point>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("simplex: no vertices");
    const std::size_t n = vertices[0].size();
    if (vertices.size() != n + 1)
        throw std::invalid_argument("simplex: need n+1 vertices in dimension n");
    for (const auto& v : vertices)
        if (v.size() != n) throw std::invalid_argument("simplex: inconsistent vertex dimension");
}

}  // namespace

SimplexWitness simplex_from_vertices(const std::vector<Point>& vertices) {
    check_vertex_count(vertices);
    const std::size_t n = vertices[0].size();
    const double scale = point_scale(vertices);

    Mat d(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d(i, j) = vertices[j + 1][i] - vertices[0][i];
    if (std::abs(linalg::determinant(d)) <= 1e-12 * std::pow(scale, double(n)))
        throw std::invalid_argument("simplex: vertices are affinely dependent");

    SimplexWitness w;
    w.vertices = vertices;
    w.facets.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        // Facet i spans the n vertices other than vertex i.
        std::vector<Point> others;
        for (std::size_t j = 0; j <= n; ++j)
            if (j != i) others.push_back(vertices[j]);
        Mat diffs(n - 1, n);
        for (std::size_t r = 0; r + 1 < n; ++r)
            for (std::size_t c = 0; c < n; ++c) diffs(r, c) = others[r + 1][c] - others[0][c];
        auto normal = linalg::nullspace_direction(diffs);
        if (!normal) throw std::invalid_argument("simplex: degenerate facet");
        double offset = linalg::dot(*normal, others[0]);
        if (linalg::dot(*normal, vertices[i]) > offset) {
            *normal = linalg::scale(*normal, -1.0);
            offset = -offset;
        }
        w.facets[i] = {std::move(*normal), offset};
    }
    return w;
}

SimplexWitness simplex_from_halfspaces(const std::vector<Hyperplane>& planes) {
    if (planes.empty()) throw std::invalid_argument("simplex_from_halfspaces: no planes");
    const std::size_t n = planes[0].normal.size();
    if (planes.size() != n + 1)
        throw std::invalid_argument("simplex_from_halfspaces: need n+1 half-spaces");
    double scale = 1.0;
    for (const auto& h : planes) {
        if (h.normal.size() != n)
            throw std::invalid_argument("simplex_from_halfspaces: inconsistent dimension");
        scale = std::max(scale, linalg::norm_inf(h.normal));
    }

    SimplexWitness w;
    w.facets = planes;
    w.vertices.resize(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        Mat m(n, n);
        Vec rhs(n);
        std::size_t r = 0;
        for (std::size_t j = 0; j <= n; ++j) {
            if (j == i) continue;
            for (std::size_t c = 0; c < n; ++c) m(r, c) = planes[j].normal[c];
            rhs[r] = planes[j].offset;
            ++r;
        }
        if (std::abs(linalg::determinant(m)) <= 1e-12 * std::pow(scale, double(n)))
            throw std::invalid_argument(
                "simplex_from_halfspaces: normals excluding plane " + std::to_string(i) +
                " are linearly dependent");
        auto x = linalg::solve(m, rhs);
        if (!x)
            throw std::invalid_argument(
                "simplex_from_halfspaces: singular system for plane subset excluding " +
                std::to_string(i));
        w.vertices[i] = std::move(*x);
    }
    for (std::size_t i = 0; i <= n; ++i) {
        const double lhs = linalg::dot(planes[i].normal, w.vertices[i]);
        const double margin = 1e-9 * (1.0 + std::abs(planes[i].offset) +
                                      linalg::norm_inf(planes[i].normal) *
                                          (1.0 + linalg::norm_inf(w.vertices[i])));
        if (!(lhs < planes[i].offset - margin))
            throw std::invalid_argument(
                "simplex_from_halfspaces: intersection of planes excluding " + std::to_string(i) +
                " is not strictly inside half-space " + std::to_string(i));
    }
    return w;
}

Vec barycentric(const SimplexWitness& p, const Point& alpha) {
    const std::size_t n = p.dimension();
    if (alpha.size() != n) throw std::invalid_argument("barycentric: wrong point dimension");
    Mat m(n + 1, n + 1);
    Vec rhs(n + 1);
    for (std::size_t j = 0; j <= n; ++j) m(0, j) = 1.0;
    rhs[0] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j <= n; ++j) m(i + 1, j) = p.vertices[j][i];
        rhs[i + 1] = alpha[i];
    }
    auto lambda = linalg::solve(m, rhs);
    if (!lambda) throw std::invalid_argument("barycentric: degenerate simplex");
    return *lambda;
}

std::optional<std::size_t> negative_cone_membership(const SimplexWitness& p, const Point& alpha,
                                                    double tol, bool* marginal) {
    const Vec lambda = barycentric(p, alpha);
    const std::size_t n = p.dimension();
    if (marginal) *marginal = false;
    for (std::size_t k = 0; k <= n; ++k) {
        bool ok = true;
        for (std::size_t i = 0; i <= n && ok; ++i)
            ok = (i == k) || lambda[i] <= tol;
        if (!ok) continue;
        if (marginal)
            for (std::size_t i = 0; i <= n; ++i)
                if (i != k && std::abs(lambda[i]) <= tol) *marginal = true;
        return k;
    }
    return std::nullopt;
}

bool cone_membership_by_facets(const SimplexWitness& p, const Point& alpha, std::size_t k,
                               double tol) {
    // Facets containing vertex k are all facets except facet k.
    for (std::size_t i = 0; i < p.facets.size(); ++i) {
        if (i == k) continue;
        const auto& f = p.facets[i];
        const double margin = tol * (1.0 + std::abs(f.offset));
        if (linalg::dot(f.normal, alpha) < f.offset - margin) return false;
    }
    return true;
}

bool simplex_contains(const SimplexWitness& p, const Point& alpha, double tol) {
    const Vec lambda = barycentric(p, alpha);
    for (double l : lambda)
        if (l < -tol) return false;
    return true;
}

namespace {

void verify_sign_split(const SimplexWitness& p, const SignedSupport& s, const char* what) {
    for (const auto& beta : s.negative_points)
        if (!simplex_contains(p, beta))
            throw std::logic_error(std::string(what) + ": a negative point escapes the simplex");
    for (const auto& alpha : s.positive_points)
        if (!negative_cone_membership(p, alpha))
            throw std::logic_error(std::string(what) +
                                   ": a positive point misses every vertex cone");
}

}  // namespace

SimplexWitness simplex_from_very_strict(const Signomial& f, const Point& v,
                                        const std::vector<Point>& seed_directions,
                                        std::optional<double> a0,
                                        const SeparationOptions& opts) {
    const SignedSupport s = signed_support(f);
    const VeryStrictBasis basis = very_strict_basis(v, s, seed_directions, opts);
    const std::size_t n = f.dimension();

    // The basis keeps negative points above c along every w_i; the simplex
    // wants them below its facet planes, so the normals flip sign, and one
    // capping facet closes the polytope.
    std::vector<Hyperplane> planes(n + 1);
    Point w0(n, 0.0);
    for (const auto& wi : basis.vectors) w0 = linalg::add(w0, wi);
    double lo = kInf, hi = -kInf;
    for (const auto& mu : f.support()) {
        const double d = linalg::dot(w0, mu);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    planes[0] = {w0, a0 ? *a0 : hi + 1.0 + (hi - lo)};
    if (!(planes[0].offset > hi))
        throw std::invalid_argument("simplex_from_very_strict: cap offset must clear the support");
    for (std::size_t i = 0; i < n; ++i)
        planes[i + 1] = {linalg::scale(basis.vectors[i], -1.0), -basis.c};

    SimplexWitness p = simplex_from_halfspaces(planes);
    verify_sign_split(p, s, "simplex_from_very_strict");
    return p;
}

SimplexWitness simplex_from_nonstrict_family(const Signomial& f, const std::vector<Point>& w,
                                             const SeparationOptions& opts) {
    const std::size_t n = f.dimension();
    if (n < 2)
        throw std::invalid_argument("simplex_from_nonstrict_family: needs dimension >= 2");
    if (w.size() != n - 1)
        throw std::invalid_argument(
            "simplex_from_nonstrict_family: need n-1 separating vectors");
    const SignedSupport s = signed_support(f);
    if (s.negative_points.size() < 2)
        throw std::invalid_argument(
            "simplex_from_nonstrict_family: need at least two negative points");
    if (s.positive_points.empty())
        throw std::invalid_argument("simplex_from_nonstrict_family: no positive points");
    for (const auto& wi : w)
        if (classify_strictness(wi, s, opts.strict_tol) != Strictness::nonstrict)
            throw std::invalid_argument(
                "simplex_from_nonstrict_family: a vector is not a non-strict separating vector");
    Mat wm(n - 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i)
        for (std::size_t j = 0; j < n; ++j) wm(i, j) = w[i][j];
    if (linalg::rank(wm, 1e-9) != n - 1)
        throw std::invalid_argument("simplex_from_nonstrict_family: vectors are dependent");
    for (const auto& alpha : s.positive_points)
        if (in_convex_hull(alpha, s.negative_points))
            throw std::invalid_argument(
                "simplex_from_nonstrict_family: a positive point lies in the hull of the "
                "negative points");

    const double coord_scale = 1.0 + point_scale(s.positive_points) + point_scale(s.negative_points);

    std::vector<double> a(n - 1);
    Point v(n, 0.0);
    double d = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        a[i] = -kInf;
        for (const auto& alpha : s.positive_points)
            a[i] = std::max(a[i], linalg::dot(w[i], alpha));
        v = linalg::add(v, w[i]);
        d += a[i];
    }

    // Largest value of v over positive points off the line L; +inf cap when
    // every positive point sits on L.
    double big_k = -kInf;
    for (const auto& alpha : s.positive_points) {
        const double val = linalg::dot(v, alpha);
        if (std::abs(val - d) > 1e-9 * coord_scale) big_k = std::max(big_k, val);
    }
    const double eps = (big_k == -kInf) ? kInf : d - big_k;
    if (!(eps > 0.0))
        throw std::logic_error("simplex_from_nonstrict_family: nonpositive gap to the line");

    auto zdir = linalg::nullspace_direction(wm);
    if (!zdir)
        throw std::logic_error("simplex_from_nonstrict_family: no direction completes the family");
    const Point z = *zdir;

    const Point *beta0 = nullptr, *beta1 = nullptr;
    for (const auto& beta : s.negative_points) {
        if (!beta0 || linalg::dot(z, beta) < linalg::dot(z, *beta0)) beta0 = &beta;
        if (!beta1 || linalg::dot(z, beta) > linalg::dot(z, *beta1)) beta1 = &beta;
    }
    const double z0 = linalg::dot(z, *beta0), z1 = linalg::dot(z, *beta1);
    if (!(z1 - z0 > 1e-9 * coord_scale))
        throw std::invalid_argument(
            "simplex_from_nonstrict_family: extremal negative vertices coincide");

    double big_m = -kInf;
    for (const auto& alpha : s.positive_points)
        big_m = std::max(big_m, linalg::dot(z, alpha));

    double lambda = kInf;
    if (big_m - z0 > 1e-12) lambda = std::min(lambda, eps / (big_m - z0));
    if (big_m - z1 > 1e-12) lambda = std::min(lambda, 2.0 * eps / (big_m - z1));
    if (!std::isfinite(lambda)) lambda = 1.0;

    std::string last_error;
    for (int shrink = 0; shrink < 60; ++shrink, lambda *= 0.5) {
        const double mu = 0.5 * lambda;
        std::vector<Hyperplane> planes(n + 1);
        const Point w0 = linalg::add(v, linalg::scale(z, lambda));
        const Point wn = linalg::scale(linalg::add(v, linalg::scale(z, mu)), -1.0);
        const double a_0 = d + lambda * z0;
        const double a_n = -d - mu * z1;
        planes[0] = {linalg::scale(w0, -1.0), -a_0};
        for (std::size_t i = 0; i + 1 < n; ++i)
            planes[i + 1] = {linalg::scale(w[i], -1.0), -a[i]};
        planes[n] = {linalg::scale(wn, -1.0), -a_n};
        try {
            SimplexWitness p = simplex_from_halfspaces(planes);
            verify_sign_split(p, s, "simplex_from_nonstrict_family");
            return p;
        } catch (const std::exception& e) {
            last_error = e.what();
        }
    }
    throw std::runtime_error("simplex_from_nonstrict_family: construction failed: " + last_error);
}

AffineMap normalize_to_standard(const SimplexWitness& p) {
    const std::size_t n = p.dimension();
    check_vertex_count(p.vertices);
    Mat d(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d(i, j) = p.vertices[j + 1][i] - p.vertices[0][i];
    auto minv = linalg::inverse(d);
    if (!minv) throw std::invalid_argument("normalize_to_standard: degenerate simplex");
    Point shift = linalg::scale(linalg::mat_vec(*minv, p.vertices[0]), -1.0);
    return AffineMap(std::move(*minv), std::move(shift));
}

ConvexityReport convex_by_term_rules(const Signomial& f, double tol) {
    ConvexityReport rep;
    rep.is_convex_by_rules = true;
    for (const auto& t : f.terms()) {
        double total = 0.0;
        for (double e : t.exponent) total += e;
        TermRule rule = TermRule::violated;
        if (t.coeff > 0.0) {
            bool all_np = true;
            for (double e : t.exponent) all_np = all_np && e <= tol;
            if (all_np) {
                rule = TermRule::pos_all_nonpositive;
            } else if (total >= 1.0 - tol) {
                for (std::size_t j = 0; j < t.exponent.size(); ++j) {
                    bool others_np = true;
                    for (std::size_t i = 0; i < t.exponent.size(); ++i)
                        others_np = others_np && (i == j || t.exponent[i] <= tol);
                    if (others_np) {
                        rule = TermRule::pos_one_free_coord;
                        break;
                    }
                }
            }
        } else {
            bool all_nn = true;
            for (double e : t.exponent) all_nn = all_nn && e >= -tol;
            if (all_nn && total <= 1.0 + tol) rule = TermRule::neg_in_standard_simplex;
        }
        if (rule == TermRule::violated) rep.is_convex_by_rules = false;
        rep.per_term.emplace_back(t, rule);
    }
    return rep;
}

}  // namespace signcert
