#include "signcert/separation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "signcert/linprog.hpp"

namespace signcert {

using linalg::Vec;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double max_abs_coord(const SignedSupport& s) {
    double m = 0.0;
    for (const auto& p : s.positive_points)
        for (double x : p) m = std::max(m, std::abs(x));
    for (const auto& p : s.negative_points)
        for (double x : p) m = std::max(m, std::abs(x));
    return m;
}

double max_dot(const Point& v, const std::vector<Point>& pts) {
    double m = -kInf;
    for (const auto& p : pts) m = std::max(m, linalg::dot(v, p));
    return m;
}

double min_dot(const Point& v, const std::vector<Point>& pts) {
    double m = kInf;
    for (const auto& p : pts) m = std::min(m, linalg::dot(v, p));
    return m;
}

// Shared slack normalization: dot products scale with the coordinate range
// and with |v| (which the LPs keep inside the unit box).
double slack_scale(const Point& v, const SignedSupport& s) {
    return std::max(1.0, linalg::norm_inf(v)) * std::max(1.0, max_abs_coord(s));
}

// Throws if a witness fails its defining inequalities; LP status is never
// trusted on its own.
void recheck_separating(const SeparationWitness& w, const SignedSupport& s) {
    const double slack = 1e-9 * slack_scale(w.v, s);
    for (const auto& alpha : s.positive_points)
        if (linalg::dot(w.v, alpha) > w.a + slack)
            throw std::logic_error("separating witness fails on a positive point");
    for (const auto& beta : s.negative_points)
        if (linalg::dot(w.v, beta) < w.a - slack)
            throw std::logic_error("separating witness fails on a negative point");
}

SeparationWitness make_witness(Point v, const SignedSupport& s, double tol) {
    SeparationWitness w;
    w.v = std::move(v);
    const double a = max_dot(w.v, s.positive_points);
    if (a == -kInf) {
        const double m = min_dot(w.v, s.negative_points);
        w.a = (m == kInf) ? 0.0 : m - 1.0;
    } else {
        w.a = a;
    }
    w.strictness = classify_strictness(w.v, s, tol, &w.marginal);
    recheck_separating(w, s);
    return w;
}

}  // namespace

const char* to_string(Strictness s) {
    switch (s) {
        case Strictness::not_separating: return "not_separating";
        case Strictness::nonstrict: return "nonstrict";
        case Strictness::strict: return "strict";
        case Strictness::very_strict: return "very_strict";
    }
    return "?";
}

Strictness classify_strictness(const Point& v, const SignedSupport& s, double tol,
                               bool* marginal) {
    const double eps = tol * slack_scale(v, s);
    const double a = max_dot(v, s.positive_points);       // -inf if no positives
    const double lo = min_dot(v, s.negative_points);      // +inf if no negatives
    const double hi = max_dot(v, s.negative_points);      // -inf if no negatives
    if (marginal) *marginal = false;

    if (lo < a - eps) return Strictness::not_separating;
    // Strictness needs an actual negative point off the hyperplane.
    if (s.negative_points.empty()) return Strictness::nonstrict;
    Strictness result = Strictness::nonstrict;
    double slack = 0.0;
    if (lo > a + eps) {
        result = Strictness::very_strict;
        slack = lo - a;
    } else if (hi > a + eps) {
        result = Strictness::strict;
        slack = hi - a;
    }
    if (marginal) {
        if (result == Strictness::nonstrict)
            *marginal = std::abs(lo - a) <= 10.0 * eps && std::isfinite(lo) && std::isfinite(a);
        else
            *marginal = std::isfinite(slack) && slack <= 10.0 * eps;
    }
    return result;
}

std::optional<SeparationWitness> find_separating_vector(const SignedSupport& s,
                                                        const SeparationOptions& opts) {
    const std::size_t n = s.dimension;
    const double box = 1.0 + max_abs_coord(s);
    const double tbox = 4.0 * double(n + 1) * box;
    const double tol = opts.strict_tol * std::max(1.0, box);

    // Degenerate sides: with no negative points every direction separates
    // (nonstrict); with no positive points every direction is very strict.
    if (s.negative_points.empty() || s.positive_points.empty()) {
        Point v(n, 0.0);
        if (!s.negative_points.empty() || !s.positive_points.empty()) v[0] = 1.0;
        return make_witness(std::move(v), s, opts.strict_tol);
    }

    // Variables (v_1..v_n, a[, t]); the box normalization makes the
    // positively homogeneous systems bounded.
    auto base_system = [&](std::size_t extra) {
        lp::InequalitySystem sys(n + 1 + extra);
        for (std::size_t j = 0; j < n; ++j) sys.set_bounds(j, -1.0, 1.0);
        sys.set_bounds(n, -box, box);
        if (extra) sys.set_bounds(n + 1, -tbox, tbox);
        return sys;
    };
    auto row_of = [&](const Point& p, double acoef, double tcoef,
                      std::size_t extra) {
        Vec r(n + 1 + extra, 0.0);
        for (std::size_t j = 0; j < n; ++j) r[j] = p[j];
        r[n] = acoef;
        if (extra) r[n + 1] = tcoef;
        return r;
    };

    // Very strict: maximize the uniform slack t with v.beta >= a + t.
    {
        lp::InequalitySystem sys = base_system(1);
        for (const auto& alpha : s.positive_points) sys.add_le(row_of(alpha, -1.0, 0.0, 1), 0.0);
        for (const auto& beta : s.negative_points) sys.add_ge(row_of(beta, -1.0, -1.0, 1), 0.0);
        Vec obj(n + 2, 0.0);
        obj[n + 1] = 1.0;
        if (auto r = sys.maximize(obj); r && r->first > tol) {
            Point v(r->second.begin(), r->second.begin() + n);
            return make_witness(std::move(v), s, opts.strict_tol);
        }
    }

    // Strict: maximize the slack of each negative point in turn.
    for (const auto& beta0 : s.negative_points) {
        lp::InequalitySystem sys = base_system(0);
        for (const auto& alpha : s.positive_points) sys.add_le(row_of(alpha, -1.0, 0.0, 0), 0.0);
        for (const auto& beta : s.negative_points) sys.add_ge(row_of(beta, -1.0, 0.0, 0), 0.0);
        Vec obj = row_of(beta0, -1.0, 0.0, 0);
        if (auto r = sys.maximize(obj); r && r->first > tol) {
            Point v(r->second.begin(), r->second.begin() + n);
            return make_witness(std::move(v), s, opts.strict_tol);
        }
    }

    // Nonstrict nonzero: any nonzero element of the cone can be rescaled so
    // its largest coordinate is +-1, so fixing each coordinate in turn is a
    // complete search.
    for (std::size_t j = 0; j < n; ++j) {
        for (double sign : {1.0, -1.0}) {
            lp::InequalitySystem sys = base_system(0);
            for (const auto& alpha : s.positive_points)
                sys.add_le(row_of(alpha, -1.0, 0.0, 0), 0.0);
            for (const auto& beta : s.negative_points)
                sys.add_ge(row_of(beta, -1.0, 0.0, 0), 0.0);
            Vec fix(n + 1, 0.0);
            fix[j] = 1.0;
            sys.add_eq(std::move(fix), sign);
            if (auto pt = sys.feasible_point()) {
                Point v(pt->begin(), pt->begin() + n);
                return make_witness(std::move(v), s, opts.strict_tol);
            }
        }
    }
    return std::nullopt;
}

std::optional<EnclosingWitness> classify_enclosing(const Point& v, const SignedSupport& s,
                                                   double tol) {
    const double eps = tol * slack_scale(v, s);
    EnclosingWitness w;
    w.v = v;
    const std::vector<Point>& enclosed = s.negative_points;
    const std::vector<Point>& outside = s.positive_points;
    if (!enclosed.empty()) {
        w.a = min_dot(v, enclosed);
        w.b = max_dot(v, enclosed);
    } else if (!outside.empty()) {
        w.a = w.b = 0.5 * (min_dot(v, outside) + max_dot(v, outside));
    }
    bool below = false, above = false;
    for (const auto& p : outside) {
        const double d = linalg::dot(v, p);
        if (d <= w.a + eps) {
            w.lower_set.push_back(p);
            below = below || d < w.a - eps;
        } else if (d >= w.b - eps) {
            w.upper_set.push_back(p);
            above = above || d > w.b + eps;
        } else {
            return std::nullopt;  // strictly inside the open slab
        }
    }
    w.strict = below && above;
    return w;
}

EnclosingSearchResult find_enclosing_vector(const SignedSupport& s,
                                            const SeparationOptions& opts) {
    const std::size_t n = s.dimension;
    const std::vector<Point>& enclosed = s.negative_points;
    const std::vector<Point>& outside = s.positive_points;
    const double box = 1.0 + max_abs_coord(s);
    const double tbox = 4.0 * double(n + 1) * box;
    const double tol = opts.strict_tol * std::max(1.0, box);

    if (outside.empty()) {
        Point v(n, 0.0);
        v[0] = 1.0;
        auto w = classify_enclosing(v, s, opts.strict_tol);
        return {w, false};
    }

    const std::size_t k = outside.size();
    if (k > opts.partition_cap) {
        // Heuristic: score candidate directions directly. Newton polytope
        // edge normals (plane case) line up the slab with the support's
        // hull; random units cover the rest.
        std::vector<Point> candidates;
        for (std::size_t j = 0; j < n; ++j) {
            Point e(n, 0.0);
            e[j] = 1.0;
            candidates.push_back(e);
            e[j] = -1.0;
            candidates.push_back(e);
        }
        if (n == 2) {
            std::vector<Point> all = outside;
            all.insert(all.end(), enclosed.begin(), enclosed.end());
            std::vector<Term> ts;
            for (const auto& p : all) ts.push_back({1.0, p});
            const auto np = newton_polytope(Signomial(2, std::move(ts)));
            const auto& vs = np.vertices;
            const std::size_t edges = vs.size() > 2 ? vs.size() : vs.size() - 1;
            for (std::size_t i = 0; i < edges; ++i) {
                const Point& a = vs[i];
                const Point& b = vs[(i + 1) % vs.size()];
                Point normal = {-(b[1] - a[1]), b[0] - a[0]};
                const double len = linalg::norm2(normal);
                if (len < 1e-12) continue;
                candidates.push_back(linalg::scale(normal, 1.0 / len));
                candidates.push_back(linalg::scale(normal, -1.0 / len));
            }
        }
        std::mt19937_64 rng(opts.rng_seed);
        std::normal_distribution<double> gauss;
        for (std::size_t i = 0; i < opts.heuristic_samples; ++i) {
            Point v(n);
            for (double& x : v) x = gauss(rng);
            const double len = linalg::norm2(v);
            if (len > 1e-9) candidates.push_back(linalg::scale(v, 1.0 / len));
        }
        std::optional<EnclosingWitness> best;
        for (const auto& v : candidates) {
            auto w = classify_enclosing(v, s, opts.strict_tol);
            if (!w) continue;
            if (w->strict) return {w, true};
            if (!best) best = w;
        }
        return {best, true};
    }

    // Exhaustive two-sided partitions. Negating v swaps the sides, so the
    // first outside point can be pinned to the lower side.
    // Variables: v, a, b, t.
    auto run_partition = [&](std::size_t mask, bool with_slack)
        -> std::optional<std::pair<double, Point>> {
        const std::size_t extra = with_slack ? 1 : 0;
        lp::InequalitySystem sys(n + 2 + extra);
        for (std::size_t j = 0; j < n; ++j) sys.set_bounds(j, -1.0, 1.0);
        sys.set_bounds(n, -box, box);
        sys.set_bounds(n + 1, -box, box);
        if (with_slack) sys.set_bounds(n + 2, -tbox, tbox);
        auto row = [&](const Point& p, double acoef, double bcoef, double tcoef) {
            Vec r(n + 2 + extra, 0.0);
            for (std::size_t j = 0; j < n; ++j) r[j] = p[j];
            r[n] = acoef;
            r[n + 1] = bcoef;
            if (with_slack) r[n + 2] = tcoef;
            return r;
        };
        {
            Vec r(n + 2 + extra, 0.0);
            r[n] = 1.0;
            r[n + 1] = -1.0;
            sys.add_le(std::move(r), 0.0);  // a <= b
        }
        for (const auto& q : enclosed) {
            sys.add_ge(row(q, -1.0, 0.0, 0.0), 0.0);  // v.q >= a
            sys.add_le(row(q, 0.0, -1.0, 0.0), 0.0);  // v.q <= b
        }
        for (std::size_t i = 0; i < k; ++i) {
            const bool lower = (i == 0) ? true : ((mask >> (i - 1)) & 1) != 0;
            if (lower)
                sys.add_le(row(outside[i], -1.0, 0.0, 1.0), 0.0);  // v.p + t <= a
            else
                sys.add_ge(row(outside[i], 0.0, -1.0, -1.0), 0.0);  // v.p - t >= b
        }
        Vec obj(n + 2 + extra, 0.0);
        if (with_slack) obj[n + 2] = 1.0;
        auto r = sys.maximize(obj);
        if (!r) return std::nullopt;
        Point v(r->second.begin(), r->second.begin() + n);
        return std::make_pair(r->first, std::move(v));
    };

    const std::size_t nmask = k == 1 ? 1 : (std::size_t(1) << (k - 1));
    // Strict pass: both sides of the partition must be populated.
    for (std::size_t mask = 0; mask < nmask; ++mask) {
        bool has_upper = false;
        for (std::size_t i = 1; i < k; ++i) has_upper = has_upper || ((mask >> (i - 1)) & 1) == 0;
        if (!has_upper) continue;
        auto r = run_partition(mask, true);
        if (r && r->first > tol) {
            auto w = classify_enclosing(r->second, s, opts.strict_tol);
            if (w && w->strict) return {w, false};
        }
    }
    // Nonstrict pass: any nonzero direction satisfying the definition.
    for (std::size_t mask = 0; mask < nmask; ++mask) {
        for (std::size_t j = 0; j < n; ++j) {
            for (double sign : {1.0, -1.0}) {
                const std::size_t extra = 0;
                lp::InequalitySystem sys(n + 2 + extra);
                for (std::size_t jj = 0; jj < n; ++jj) sys.set_bounds(jj, -1.0, 1.0);
                sys.set_bounds(n, -box, box);
                sys.set_bounds(n + 1, -box, box);
                auto row = [&](const Point& p, double acoef, double bcoef) {
                    Vec r(n + 2, 0.0);
                    for (std::size_t jj = 0; jj < n; ++jj) r[jj] = p[jj];
                    r[n] = acoef;
                    r[n + 1] = bcoef;
                    return r;
                };
                {
                    Vec r(n + 2, 0.0);
                    r[n] = 1.0;
                    r[n + 1] = -1.0;
                    sys.add_le(std::move(r), 0.0);
                }
                for (const auto& q : enclosed) {
                    sys.add_ge(row(q, -1.0, 0.0), 0.0);
                    sys.add_le(row(q, 0.0, -1.0), 0.0);
                }
                for (std::size_t i = 0; i < k; ++i) {
                    const bool lower = (i == 0) ? true : ((mask >> (i - 1)) & 1) != 0;
                    if (lower)
                        sys.add_le(row(outside[i], -1.0, 0.0), 0.0);
                    else
                        sys.add_ge(row(outside[i], 0.0, -1.0), 0.0);
                }
                Vec fix(n + 2, 0.0);
                fix[j] = 1.0;
                sys.add_eq(std::move(fix), sign);
                if (auto pt = sys.feasible_point()) {
                    Point v(pt->begin(), pt->begin() + n);
                    auto w = classify_enclosing(v, s, opts.strict_tol);
                    if (w) return {w, false};
                }
            }
        }
    }
    return {std::nullopt, false};
}

VeryStrictBasis very_strict_basis(const Point& v, const SignedSupport& s,
                                  const std::vector<Point>& seed_directions,
                                  const SeparationOptions& opts) {
    const std::size_t n = s.dimension;
    if (s.positive_points.empty() || s.negative_points.empty())
        throw std::invalid_argument("very_strict_basis: both sign classes must be non-empty");
    if (classify_strictness(v, s, opts.strict_tol) != Strictness::very_strict)
        throw std::invalid_argument("very_strict_basis: seed vector is not very strict");
    if (!seed_directions.empty() && seed_directions.size() != n)
        throw std::invalid_argument("very_strict_basis: need exactly n seed directions");

    const double a = max_dot(v, s.positive_points);
    const double b = min_dot(v, s.negative_points);
    const double c = 0.5 * (a + b);
    const double eps_check = opts.strict_tol * std::max(1.0, max_abs_coord(s));

    std::vector<Point> all = s.positive_points;
    all.insert(all.end(), s.negative_points.begin(), s.negative_points.end());

    std::mt19937_64 rng(opts.rng_seed);
    std::normal_distribution<double> gauss;

    const double delta = 0.5 * linalg::norm2(v);
    for (int attempt = 0; attempt < 32; ++attempt) {
        // Directions with v in their open cone: v + delta*(e_i - (1/n)1)
        // averages back to v. Perturb and retry when the resulting family is
        // rank deficient.
        std::vector<Point> dirs(n);
        for (std::size_t i = 0; i < n; ++i) {
            if (!seed_directions.empty()) {
                dirs[i] = seed_directions[i];
            } else {
                dirs[i] = v;
                for (std::size_t j = 0; j < n; ++j) {
                    double bump = (i == j ? 1.0 : 0.0) - 1.0 / double(n);
                    if (attempt > 0) bump += 0.25 * gauss(rng);
                    dirs[i][j] += delta * bump;
                }
            }
        }

        double k_min = kInf, l_max = -kInf;
        for (const auto& d : dirs) {
            k_min = std::min(k_min, min_dot(d, all));
            l_max = std::max(l_max, max_dot(d, all));
        }
        double eps0 = kInf;
        if (k_min < 0.0) eps0 = std::min(eps0, (a - b) / (2.0 * k_min));
        if (l_max > 0.0) eps0 = std::min(eps0, (b - a) / (2.0 * l_max));
        if (!(eps0 > 0.0) || !std::isfinite(eps0)) eps0 = 1.0;

        double eps = eps0;
        for (int halving = 0; halving < 64; ++halving, eps *= 0.5) {
            std::vector<Point> w(n);
            bool all_ok = true;
            for (std::size_t i = 0; i < n && all_ok; ++i) {
                w[i] = linalg::add(v, linalg::scale(dirs[i], eps));
                all_ok = max_dot(w[i], s.positive_points) < c - eps_check &&
                         min_dot(w[i], s.negative_points) > c + eps_check;
            }
            if (!all_ok) continue;

            linalg::Mat wcols(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) wcols(j, i) = w[i][j];
            if (linalg::rank(wcols, 1e-9) != n) break;  // perturb and retry
            auto lambda = linalg::solve(wcols, v);
            if (!lambda) break;
            bool positive = true;
            for (double l : *lambda) positive = positive && l > 1e-12;
            if (!positive) break;

            for (const auto& wi : w)
                if (classify_strictness(wi, s, opts.strict_tol) != Strictness::very_strict)
                    throw std::logic_error("very_strict_basis: verification failed");
            return {std::move(w), c};
        }
        if (!seed_directions.empty())
            throw std::invalid_argument(
                "very_strict_basis: seed directions do not yield a valid basis");
    }
    throw std::runtime_error("very_strict_basis: no valid perturbation found");
}

}  // namespace signcert
