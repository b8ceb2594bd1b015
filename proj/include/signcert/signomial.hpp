#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "signcert/linalg.hpp"

namespace signcert {

using Point = std::vector<double>;  // exponent vectors and sample points

struct Term {
    double coeff = 0.0;
    Point exponent;
};

/// A finite sum of terms c * x^mu with nonzero real coefficients and real
/// exponent vectors, defined on the strictly positive orthant. Terms with
/// exactly equal exponent vectors are merged at construction; a term whose
/// merged coefficient is zero is dropped. Immutable after construction.
class Signomial {
  public:
    Signomial(std::size_t dimension, std::vector<Term> terms);

    std::size_t dimension() const { return n_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    std::vector<Point> support() const;

    Signomial negated() const;

  private:
    std::size_t n_;
    std::vector<Term> terms_;  // sorted lexicographically by exponent
};

/// The support split by coefficient sign.
struct SignedSupport {
    std::vector<Point> positive_points;
    std::vector<Point> negative_points;
    std::size_t dimension = 0;

    SignedSupport swapped() const { return {negative_points, positive_points, dimension}; }
};

/// An invertible affine map mu -> M mu + shift acting on exponent space.
/// Construction rejects matrices with |det M| <= 1e-12 * (max |entry|)^n.
struct AffineMap {
    linalg::Mat matrix;
    Point shift;

    AffineMap(linalg::Mat m, Point v);

    Point apply(const Point& p) const;
    static AffineMap identity(std::size_t n);
};

/// One-variable signomial; exponents strictly increasing, coefficients nonzero.
struct UnivariateSignomial {
    // (exponent, coefficient), sorted by exponent
    std::vector<std::pair<double, double>> terms;

    double evaluate(double t) const;
    double leading_coefficient() const { return terms.back().second; }
    bool empty() const { return terms.empty(); }
};

// x^mu for x > 0, evaluated as exp(mu . log x). Throws std::domain_error on a
// nonpositive coordinate, std::range_error when the result is not finite.
double evaluate(const Signomial& f, const Point& x);

SignedSupport signed_support(const Signomial& f);

// f restricted to the exponent set S; throws std::invalid_argument if S is
// not a subset of the support.
Signomial restrict_support(const Signomial& f, const std::vector<Point>& s);

// F_{M,v,f}: support mapped by mu -> M mu + v, coefficients unchanged.
Signomial monomial_transform(const Signomial& f, const AffineMap& map);

// The monomial change of variables x -> x^M (columns of M as exponents),
// i.e. y_j = exp(column_j(M) . log x).
Point monomial_change(const linalg::Mat& m, const Point& x);

// Restriction of f to the path t -> (t^{v_1} x_1, ..., t^{v_n} x_n): terms
// grouped by the value v . mu, with coefficients c_mu x^mu summed per group.
UnivariateSignomial induced_univariate(const Signomial& f, const Point& v, const Point& x);

struct NewtonPolytope {
    std::vector<Point> vertices;
    std::size_t dimension = 0;
};

// Vertices of Conv(support) and its affine dimension. Dimension 2 uses a
// monotone chain; other dimensions use per-point LP membership tests.
NewtonPolytope newton_polytope(const Signomial& f);

// Is p a convex combination of the given points? (LP feasibility.)
bool in_convex_hull(const Point& p, const std::vector<Point>& points);

// Affine dimension of a point set.
std::size_t affine_dimension(const std::vector<Point>& points, double tol = 1e-9);

}  // namespace signcert
