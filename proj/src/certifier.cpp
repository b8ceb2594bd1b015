#include "signcert/certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "signcert/linprog.hpp"

namespace signcert {

using linalg::Vec;

const char* to_string(TargetSign t) {
    return t == TargetSign::negative ? "negative" : "positive";
}

namespace {

double support_scale(const SignedSupport& s) {
    double m = 1.0;
    for (const auto& p : s.positive_points)
        for (double x : p) m = std::max(m, std::abs(x));
    for (const auto& p : s.negative_points)
        for (double x : p) m = std::max(m, std::abs(x));
    return m;
}

// LP search for a hyperplane containing every positive point but not all
// negative ones: fix one coordinate of v to +-1 (any nonzero normal can be
// rescaled into that form) and push some negative point off the plane.
std::optional<HyperplaneWitness> hyperplane_through_positives(const SignedSupport& s,
                                                              double strict_tol) {
    const std::size_t n = s.dimension;
    if (s.positive_points.empty()) return std::nullopt;
    const double box = 1.0 + support_scale(s);
    const double tol = strict_tol * box;

    for (std::size_t j = 0; j < n; ++j) {
        for (double sign : {1.0, -1.0}) {
            for (const auto& beta : s.negative_points) {
                for (double dir : {1.0, -1.0}) {
                    lp::InequalitySystem sys(n + 1);
                    for (std::size_t v = 0; v < n; ++v) sys.set_bounds(v, -1.0, 1.0);
                    sys.set_bounds(n, -box, box);
                    for (const auto& alpha : s.positive_points) {
                        Vec row(n + 1, 0.0);
                        for (std::size_t v = 0; v < n; ++v) row[v] = alpha[v];
                        row[n] = -1.0;
                        sys.add_eq(std::move(row), 0.0);
                    }
                    Vec fix(n + 1, 0.0);
                    fix[j] = 1.0;
                    sys.add_eq(std::move(fix), sign);
                    Vec obj(n + 1, 0.0);
                    for (std::size_t v = 0; v < n; ++v) obj[v] = dir * beta[v];
                    obj[n] = -dir;
                    auto r = sys.maximize(obj);
                    if (r && r->first > tol) {
                        HyperplaneWitness h;
                        h.v.assign(r->second.begin(), r->second.begin() + n);
                        h.a = r->second[n];
                        // Revalidate directly.
                        for (const auto& alpha : s.positive_points)
                            if (std::abs(linalg::dot(h.v, alpha) - h.a) > 1e-7 * box)
                                throw std::logic_error(
                                    "hyperplane witness fails a positive point");
                        return h;
                    }
                }
            }
        }
    }
    return std::nullopt;
}

void append_univariate_diag(const Signomial& f, std::vector<std::string>& diag,
                            int& neg_bound, int& pos_bound) {
    UnivariateSignomial g;
    for (const auto& t : f.terms()) g.terms.emplace_back(t.exponent[0], t.coeff);
    std::sort(g.terms.begin(), g.terms.end());
    const SignSequence seq = SignSequence::of(g);
    const ComponentBounds cb = component_bounds(seq);
    const bool leading_negative = !g.terms.empty() && g.leading_coefficient() < 0.0;
    neg_bound = leading_negative ? cb.max_with_leading_sign : cb.max_with_opposite_sign;
    pos_bound = leading_negative ? cb.max_with_opposite_sign : cb.max_with_leading_sign;
    std::string sigstr;
    for (int sgn : seq.signs) sigstr += sgn > 0 ? '+' : '-';
    diag.push_back("univariate sign sequence (" + sigstr + "): " +
                   std::to_string(sign_changes(seq)) + " changes, at most " +
                   std::to_string(neg_bound) + " negative / " + std::to_string(pos_bound) +
                   " positive components");
}

Certificate certify_negative(const Signomial& f,
                             const std::optional<SimplexWitness>& user_simplex,
                             const CertifyOptions& opts) {
    if (f.empty()) throw std::invalid_argument("certify: empty signomial");
    Certificate cert;
    cert.target = TargetSign::negative;
    const SignedSupport s = signed_support(f);
    auto& diag = cert.diagnostics;

    int uni_neg = -1, uni_pos = -1;
    if (f.dimension() == 1) append_univariate_diag(f, diag, uni_neg, uni_pos);

    // Single rules in order of tightness and cost. Each witness is
    // revalidated by its own module before it lands in the certificate.
    if (s.negative_points.empty()) {
        cert.bound = BoundValue::zero;
        cert.rule = rules::empty_negative_support;
        return cert;
    }
    if (s.negative_points.size() == 1) {
        cert.bound = BoundValue::one;
        cert.rule = rules::single_negative_point;
        return cert;
    }

    const auto sep = find_separating_vector(s, opts.separation);
    if (sep && (sep->strictness == Strictness::strict ||
                sep->strictness == Strictness::very_strict)) {
        cert.bound = BoundValue::one;
        cert.rule = rules::strict_separating;
        cert.witness = *sep;
        return cert;
    }
    if (sep)
        diag.push_back("separating cone is nontrivial but admits no strict vector");
    else
        diag.push_back("no nonzero separating vector");

    // Convexification routes.
    if (user_simplex) {
        const SimplexWitness& p = *user_simplex;
        if (p.vertices.size() != f.dimension() + 1)
            throw std::invalid_argument("user simplex: wrong vertex count for the dimension");
        SimplexWitness validated = simplex_from_vertices(p.vertices);
        for (const auto& beta : s.negative_points)
            if (!simplex_contains(validated, beta, opts.tol))
                throw std::invalid_argument("user simplex: a negative point is outside it");
        for (const auto& alpha : s.positive_points)
            if (!negative_cone_membership(validated, alpha, opts.tol))
                throw std::invalid_argument(
                    "user simplex: a positive point is outside every vertex cone");
        diag.push_back("user-supplied simplex validated");
        cert.bound = BoundValue::one;
        cert.rule = rules::convexification;
        cert.witness = std::move(validated);
        return cert;
    }

    const NewtonPolytope np = newton_polytope(f);
    const bool pos_on_vertices = std::all_of(
        s.positive_points.begin(), s.positive_points.end(), [&](const Point& alpha) {
            return std::find(np.vertices.begin(), np.vertices.end(), alpha) != np.vertices.end();
        });
    if (pos_on_vertices && np.vertices.size() == f.dimension() + 1 &&
        np.dimension == f.dimension()) {
        try {
            SimplexWitness p = simplex_from_vertices(np.vertices);
            bool ok = true;
            for (const auto& beta : s.negative_points)
                ok = ok && simplex_contains(p, beta, opts.tol);
            for (const auto& alpha : s.positive_points)
                ok = ok && negative_cone_membership(p, alpha, opts.tol).has_value();
            if (ok) {
                diag.push_back("newton polytope is a simplex with all positive points vertices");
                cert.bound = BoundValue::one;
                cert.rule = rules::convexification;
                cert.witness = std::move(p);
                return cert;
            }
        } catch (const std::invalid_argument&) {
            // fall through to the other routes
        }
    } else if (pos_on_vertices && np.dimension < f.dimension()) {
        diag.push_back("newton polytope is not full-dimensional; simplex shortcut skipped");
    }

    if (sep && sep->strictness == Strictness::very_strict) {
        try {
            SimplexWitness p = simplex_from_very_strict(f, sep->v, {}, std::nullopt,
                                                        opts.separation);
            cert.bound = BoundValue::one;
            cert.rule = rules::convexification;
            cert.witness = std::move(p);
            return cert;
        } catch (const std::exception& e) {
            diag.push_back(std::string("very strict simplex route failed: ") + e.what());
        }
    }

    if (sep && f.dimension() >= 2 && s.negative_points.size() >= 2) {
        // Gather n-1 independent non-strict separating vectors. With no
        // strict vector in the cone, any nonzero member qualifies, so probe
        // the cone along each coordinate normalization.
        std::vector<Point> family;
        auto try_add = [&](const Point& v) {
            if (family.size() + 1 >= f.dimension()) return;
            if (classify_strictness(v, s, opts.separation.strict_tol) != Strictness::nonstrict)
                return;
            linalg::Mat m(family.size() + 1, f.dimension());
            for (std::size_t i = 0; i < family.size(); ++i)
                for (std::size_t j = 0; j < f.dimension(); ++j) m(i, j) = family[i][j];
            for (std::size_t j = 0; j < f.dimension(); ++j) m(family.size(), j) = v[j];
            if (linalg::rank(m, 1e-9) == family.size() + 1) family.push_back(v);
        };
        try_add(sep->v);
        const std::size_t n = f.dimension();
        const double box = 1.0 + support_scale(s);
        for (std::size_t j = 0; j < n && family.size() + 1 < n; ++j) {
            for (double sign : {1.0, -1.0}) {
                lp::InequalitySystem sys(n + 1);
                for (std::size_t v = 0; v < n; ++v) sys.set_bounds(v, -1.0, 1.0);
                sys.set_bounds(n, -box, box);
                for (const auto& alpha : s.positive_points) {
                    Vec row(n + 1, 0.0);
                    for (std::size_t v = 0; v < n; ++v) row[v] = alpha[v];
                    row[n] = -1.0;
                    sys.add_le(std::move(row), 0.0);
                }
                for (const auto& beta : s.negative_points) {
                    Vec row(n + 1, 0.0);
                    for (std::size_t v = 0; v < n; ++v) row[v] = beta[v];
                    row[n] = -1.0;
                    sys.add_ge(std::move(row), 0.0);
                }
                Vec fix(n + 1, 0.0);
                fix[j] = 1.0;
                sys.add_eq(std::move(fix), sign);
                if (auto pt = sys.feasible_point())
                    try_add(Point(pt->begin(), pt->begin() + n));
            }
        }
        const bool hull_clear = std::none_of(
            s.positive_points.begin(), s.positive_points.end(),
            [&](const Point& alpha) { return in_convex_hull(alpha, s.negative_points); });
        if (family.size() == f.dimension() - 1 && hull_clear) {
            try {
                SimplexWitness p = simplex_from_nonstrict_family(f, family, opts.separation);
                diag.push_back("simplex built from a non-strict separating family");
                cert.bound = BoundValue::one;
                cert.rule = rules::convexification;
                cert.witness = std::move(p);
                return cert;
            } catch (const std::exception& e) {
                diag.push_back(std::string("non-strict family route failed: ") + e.what());
            }
        } else if (!hull_clear) {
            diag.push_back("hull of negative points meets a positive point");
        } else {
            diag.push_back("could not assemble n-1 independent non-strict separating vectors");
        }
    }

    if (auto h = hyperplane_through_positives(s, opts.separation.strict_tol)) {
        cert.bound = BoundValue::two;
        cert.rule = rules::positive_on_hyperplane;
        cert.witness = *h;
        return cert;
    }

    if (s.positive_points.size() <= np.dimension) {
        cert.bound = BoundValue::two;
        cert.rule = rules::few_positive_points;
        cert.witness = CardinalityNote{s.positive_points.size(), np.dimension};
        return cert;
    }

    const EnclosingSearchResult enc = find_enclosing_vector(s.swapped(), opts.separation);
    if (enc.truncated)
        diag.push_back("enclosing-vector search truncated at the partition cap; absence is not "
                       "evidence of nonexistence");
    if (enc.witness && enc.witness->strict) {
        cert.bound = BoundValue::two;
        cert.rule = rules::strict_enclosing;
        cert.witness = *enc.witness;
        return cert;
    }
    if (enc.witness) diag.push_back("an enclosing vector exists but is not strict");

    if (f.dimension() == 1 && uni_neg >= 0 && uni_neg <= 2) {
        cert.bound = static_cast<BoundValue>(uni_neg);
        cert.rule = rules::descartes_univariate;
        return cert;
    }

    cert.bound = BoundValue::unknown;
    cert.rule = rules::unknown;
    return cert;
}

}  // namespace

Certificate certify(const Signomial& f, TargetSign target,
                    const std::optional<SimplexWitness>& user_simplex,
                    const CertifyOptions& opts) {
    if (target == TargetSign::positive) {
        Certificate cert = certify_negative(f.negated(), user_simplex, opts);
        cert.target = TargetSign::positive;
        return cert;
    }
    return certify_negative(f, user_simplex, opts);
}

std::optional<SeparationWitness> simplex_to_separating(const Signomial& f,
                                                       const SimplexWitness& p, double tol) {
    const SignedSupport s = signed_support(f);
    for (const auto& beta : s.negative_points)
        if (!simplex_contains(p, beta, tol))
            throw std::invalid_argument("simplex_to_separating: negative point outside simplex");
    std::vector<bool> cone_hit(p.vertices.size(), false);
    for (const auto& alpha : s.positive_points) {
        auto k = negative_cone_membership(p, alpha, tol);
        if (!k)
            throw std::invalid_argument(
                "simplex_to_separating: positive point outside every vertex cone");
        cone_hit[*k] = true;
    }
    for (std::size_t k = 0; k < p.vertices.size(); ++k) {
        if (cone_hit[k]) continue;
        // The facet opposite the empty cone separates with flipped normal.
        SeparationWitness w;
        w.v = linalg::scale(p.facets[k].normal, -1.0);
        double a = -std::numeric_limits<double>::infinity();
        for (const auto& alpha : s.positive_points) a = std::max(a, linalg::dot(w.v, alpha));
        w.a = std::isfinite(a) ? a : -p.facets[k].offset;
        w.strictness = classify_strictness(w.v, s, tol, &w.marginal);
        if (w.strictness == Strictness::not_separating)
            throw std::logic_error("simplex_to_separating: recovered vector fails to separate");
        return w;
    }
    return std::nullopt;
}

Certificate univariate_certify(const Signomial& f, TargetSign target) {
    if (f.dimension() != 1)
        throw std::invalid_argument("univariate_certify: signomial is not univariate");
    if (f.empty()) throw std::invalid_argument("univariate_certify: empty signomial");
    Certificate cert;
    cert.target = target;
    int neg = -1, pos = -1;
    append_univariate_diag(f, cert.diagnostics, neg, pos);
    const int bound = target == TargetSign::negative ? neg : pos;
    if (bound <= 2) {
        cert.bound = static_cast<BoundValue>(bound);
        cert.rule = rules::descartes_univariate;
    } else {
        cert.bound = BoundValue::unknown;
        cert.rule = rules::unknown;
        cert.diagnostics.push_back("sign-change bound " + std::to_string(bound) +
                                   " exceeds the certificate range");
    }
    return cert;
}

}  // namespace signcert
