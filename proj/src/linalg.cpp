#include "signcert/linalg.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>

namespace signcert::linalg {

double dot(const Vec& a, const Vec& b) {
    assert(a.size() == b.size());
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    Vec r(a);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
    return r;
}

Vec scale(const Vec& a, double s) {
    Vec r(a);
    for (double& x : r) x *= s;
    return r;
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

double norm_inf(const Vec& a) {
    double m = 0.0;
    for (double x : a) m = std::max(m, std::abs(x));
    return m;
}

Vec mat_vec(const Mat& m, const Vec& x) {
    assert(x.size() == m.cols);
    Vec r(m.rows, 0.0);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) r[i] += m(i, j) * x[j];
    return r;
}

namespace {

// In-place LU with partial pivoting; returns sign of the permutation,
// or 0 when a pivot column is exactly zero.
int lu_decompose(Mat& m, std::vector<std::size_t>& perm) {
    const std::size_t n = m.rows;
    perm.resize(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(m(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(m(i, k)) > best) {
                best = std::abs(m(i, k));
                piv = i;
            }
        }
        if (best == 0.0) return 0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
            std::swap(perm[k], perm[piv]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            m(i, k) /= m(k, k);
            const double f = m(i, k);
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return sign;
}

}  // namespace

double determinant(Mat m) {
    assert(m.rows == m.cols);
    std::vector<std::size_t> perm;
    const int sign = lu_decompose(m, perm);
    if (sign == 0) return 0.0;
    double d = sign;
    for (std::size_t i = 0; i < m.rows; ++i) d *= m(i, i);
    return d;
}

std::optional<Vec> solve(Mat m, Vec rhs) {
    assert(m.rows == m.cols && rhs.size() == m.rows);
    const std::size_t n = m.rows;
    std::vector<std::size_t> perm;
    if (lu_decompose(m, perm) == 0) return std::nullopt;
    Vec y(n);
    for (std::size_t i = 0; i < n; ++i) y[i] = rhs[perm[i]];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < i; ++j) y[i] -= m(i, j) * y[j];
    for (std::size_t ii = n; ii-- > 0;) {
        for (std::size_t j = ii + 1; j < n; ++j) y[ii] -= m(ii, j) * y[j];
        if (m(ii, ii) == 0.0 || !std::isfinite(y[ii] /= m(ii, ii))) return std::nullopt;
    }
    return y;
}

std::optional<Mat> inverse(const Mat& m) {
    assert(m.rows == m.cols);
    const std::size_t n = m.rows;
    Mat inv(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        Vec e(n, 0.0);
        e[j] = 1.0;
        auto col = solve(m, e);
        if (!col) return std::nullopt;
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = (*col)[i];
    }
    return inv;
}

std::size_t rank(Mat m, double tol) {
    const std::size_t r = m.rows, c = m.cols;
    double scale = 0.0;
    for (double x : m.data) scale = std::max(scale, std::abs(x));
    if (scale == 0.0) return 0;
    const double thresh = tol * scale;
    std::size_t rk = 0;
    for (std::size_t col = 0; col < c && rk < r; ++col) {
        std::size_t piv = rk;
        for (std::size_t i = rk + 1; i < r; ++i)
            if (std::abs(m(i, col)) > std::abs(m(piv, col))) piv = i;
        if (std::abs(m(piv, col)) <= thresh) continue;
        if (piv != rk)
            for (std::size_t j = 0; j < c; ++j) std::swap(m(rk, j), m(piv, j));
        for (std::size_t i = rk + 1; i < r; ++i) {
            const double f = m(i, col) / m(rk, col);
            for (std::size_t j = col; j < c; ++j) m(i, j) -= f * m(rk, j);
        }
        ++rk;
    }
    return rk;
}

std::optional<Vec> nullspace_direction(const Mat& m, double tol) {
    const std::size_t rows = m.rows, n = m.cols;
    assert(rows + 1 == n);
    if (rank(m, tol) != rows) return std::nullopt;
    // Try dropping each column in turn: solve the square system on the rest
    // with the dropped coordinate pinned to 1.
    for (std::size_t drop = 0; drop < n; ++drop) {
        Mat sq(rows, rows);
        Vec rhs(rows);
        for (std::size_t i = 0; i < rows; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == drop) continue;
                sq(i, jj++) = m(i, j);
            }
            rhs[i] = -m(i, drop);
        }
        auto part = solve(sq, rhs);
        if (!part) continue;
        Vec z(n);
        std::size_t jj = 0;
        for (std::size_t j = 0; j < n; ++j) z[j] = (j == drop) ? 1.0 : (*part)[jj++];
        const double nz = norm2(z);
        if (nz > 0 && std::isfinite(nz)) return scale(z, 1.0 / nz);
    }
    return std::nullopt;
}

}  // namespace signcert::linalg
