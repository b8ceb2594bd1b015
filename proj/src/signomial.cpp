#include "signcert/signomial.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <map>
#include <stdexcept>

#include "signcert/linprog.hpp"

namespace signcert {

using linalg::Mat;
using linalg::Vec;

Signomial::Signomial(std::size_t dimension, std::vector<Term> terms) : n_(dimension) {
    if (n_ == 0) throw std::invalid_argument("Signomial: dimension must be positive");
    // Exact-equality merge; fuzzy merging would silently change the support.
    std::map<Point, double> merged;
    for (auto& t : terms) {
        if (t.exponent.size() != n_)
            throw std::invalid_argument("Signomial: exponent vector has wrong length");
        if (!std::isfinite(t.coeff))
            throw std::invalid_argument("Signomial: coefficient must be finite");
        for (double e : t.exponent)
            if (!std::isfinite(e))
                throw std::invalid_argument("Signomial: exponent must be finite");
        merged[t.exponent] += t.coeff;
    }
    for (auto& [mu, c] : merged) {
        if (c == 0.0) continue;
        terms_.push_back({c, mu});
    }
}

std::vector<Point> Signomial::support() const {
    std::vector<Point> s;
    s.reserve(terms_.size());
    for (const auto& t : terms_) s.push_back(t.exponent);
    return s;
}

Signomial Signomial::negated() const {
    std::vector<Term> ts = terms_;
    for (auto& t : ts) t.coeff = -t.coeff;
    return Signomial(n_, std::move(ts));
}

AffineMap::AffineMap(Mat m, Point v) : matrix(std::move(m)), shift(std::move(v)) {
    if (matrix.rows != matrix.cols || matrix.rows != shift.size())
        throw std::invalid_argument("AffineMap: matrix/shift dimensions disagree");
    double scale = 0.0;
    for (double x : matrix.data) scale = std::max(scale, std::abs(x));
    const double det = linalg::determinant(matrix);
    if (scale == 0.0 || std::abs(det) <= 1e-12 * std::pow(scale, double(matrix.rows)))
        throw std::invalid_argument("AffineMap: matrix is singular to tolerance");
}

Point AffineMap::apply(const Point& p) const {
    Vec r = linalg::mat_vec(matrix, p);
    return linalg::add(r, shift);
}

AffineMap AffineMap::identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return AffineMap(std::move(m), Point(n, 0.0));
}

double UnivariateSignomial::evaluate(double t) const {
    if (!(t > 0.0)) throw std::domain_error("UnivariateSignomial: t must be positive");
    const double lt = std::log(t);
    double s = 0.0;
    for (const auto& [nu, a] : terms) s += a * std::exp(nu * lt);
    return s;
}

namespace {

Vec log_point(const Point& x) {
    Vec lx(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] > 0.0))
            throw std::domain_error("evaluation point must be strictly positive");
        lx[i] = std::log(x[i]);
    }
    return lx;
}

}  // namespace

double evaluate(const Signomial& f, const Point& x) {
    if (x.size() != f.dimension())
        throw std::invalid_argument("evaluate: point has wrong dimension");
    const Vec lx = log_point(x);
    double s = 0.0;
    for (const auto& t : f.terms()) {
        const double term = t.coeff * std::exp(linalg::dot(t.exponent, lx));
        if (!std::isfinite(term)) throw std::range_error("evaluate: term overflow");
        s += term;
    }
    if (!std::isfinite(s)) throw std::range_error("evaluate: sum overflow");
    return s;
}

SignedSupport signed_support(const Signomial& f) {
    SignedSupport s;
    s.dimension = f.dimension();
    for (const auto& t : f.terms())
        (t.coeff > 0.0 ? s.positive_points : s.negative_points).push_back(t.exponent);
    return s;
}

Signomial restrict_support(const Signomial& f, const std::vector<Point>& s) {
    std::vector<Point> wanted = s;
    std::sort(wanted.begin(), wanted.end());
    wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());
    std::vector<Term> kept;
    for (const auto& p : wanted) {
        bool found = false;
        for (const auto& t : f.terms()) {
            if (t.exponent == p) {
                kept.push_back(t);
                found = true;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument("restrict_support: point not in the support");
    }
    return Signomial(f.dimension(), std::move(kept));
}

Signomial monomial_transform(const Signomial& f, const AffineMap& map) {
    if (map.matrix.rows != f.dimension())
        throw std::invalid_argument("monomial_transform: dimension mismatch");
    std::vector<Term> ts;
    ts.reserve(f.terms().size());
    for (const auto& t : f.terms()) ts.push_back({t.coeff, map.apply(t.exponent)});
    return Signomial(f.dimension(), std::move(ts));
}

Point monomial_change(const Mat& m, const Point& x) {
    if (m.rows != x.size() || m.cols != x.size())
        throw std::invalid_argument("monomial_change: dimension mismatch");
    const Vec lx = log_point(x);
    Point y(x.size());
    for (std::size_t j = 0; j < m.cols; ++j) {
        double d = 0.0;
        for (std::size_t i = 0; i < m.rows; ++i) d += m(i, j) * lx[i];
        y[j] = std::exp(d);
    }
    return y;
}

UnivariateSignomial induced_univariate(const Signomial& f, const Point& v, const Point& x) {
    if (v.size() != f.dimension())
        throw std::invalid_argument("induced_univariate: direction has wrong dimension");
    const Vec lx = log_point(x);
    // Group by the exact value of v . mu; the weight of a group is
    // sum of c_mu x^mu over its members.
    std::map<double, double> groups;
    for (const auto& t : f.terms()) {
        const double w = t.coeff * std::exp(linalg::dot(t.exponent, lx));
        if (!std::isfinite(w)) throw std::range_error("induced_univariate: term overflow");
        groups[linalg::dot(v, t.exponent)] += w;
    }
    UnivariateSignomial g;
    for (const auto& [nu, a] : groups)
        if (a != 0.0) g.terms.emplace_back(nu, a);
    return g;
}

bool in_convex_hull(const Point& p, const std::vector<Point>& points) {
    if (points.empty()) return false;
    const std::size_t n = p.size();
    const std::size_t k = points.size();
    lp::InequalitySystem sys(k);
    for (std::size_t i = 0; i < k; ++i) sys.set_bounds(i, 0.0, 1.0);
    sys.add_eq(Vec(k, 1.0), 1.0);
    for (std::size_t d = 0; d < n; ++d) {
        Vec row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = points[i][d];
        sys.add_eq(std::move(row), p[d]);
    }
    return sys.feasible_point().has_value();
}

std::size_t affine_dimension(const std::vector<Point>& points, double tol) {
    if (points.size() <= 1) return 0;
    Mat diffs(points.size() - 1, points[0].size());
    for (std::size_t i = 1; i < points.size(); ++i)
        for (std::size_t j = 0; j < points[0].size(); ++j)
            diffs(i - 1, j) = points[i][j] - points[0][j];
    return linalg::rank(diffs, tol);
}

namespace {

double cross2(const Point& o, const Point& a, const Point& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Monotone chain; collinear points are dropped, so only true corners remain.
std::vector<Point> hull2d(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    double scale = 0.0;
    for (const auto& p : pts) scale = std::max({scale, std::abs(p[0]), std::abs(p[1])});
    const double eps = 1e-12 * scale * scale;

    std::vector<Point> h(2 * pts.size());
    std::size_t k = 0;
    for (const auto& p : pts) {  // lower hull
        while (k >= 2 && cross2(h[k - 2], h[k - 1], p) <= eps) --k;
        h[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {  // upper hull
        while (k >= lower && cross2(h[k - 2], h[k - 1], *it) <= eps) --k;
        h[k++] = *it;
    }
    h.resize(k - 1);
    return h;
}

}  // namespace

NewtonPolytope newton_polytope(const Signomial& f) {
    const std::vector<Point> pts = f.support();
    if (pts.empty()) throw std::invalid_argument("newton_polytope: empty support");
    NewtonPolytope np;
    np.dimension = affine_dimension(pts);
    const std::size_t n = f.dimension();
    if (pts.size() == 1) {
        np.vertices = pts;
        return np;
    }
    if (n == 1) {
        auto [lo, hi] = std::minmax_element(pts.begin(), pts.end());
        np.vertices = {*lo, *hi};
        return np;
    }
    if (n == 2) {
        np.vertices = hull2d(pts);
        return np;
    }
    // A support point is a vertex iff it is not a convex combination of the
    // others; avoids a facet enumeration dependency in higher dimensions.
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<Point> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!in_convex_hull(pts[i], others)) np.vertices.push_back(pts[i]);
    }
    return np;
}

}  // namespace signcert
