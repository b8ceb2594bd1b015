#include "signcert/linprog.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace signcert::lp {

using linalg::Vec;

namespace {

constexpr double kPivotTol = 1e-9;

// Tableau: m constraint rows, one objective row, ncols variable columns plus
// the right-hand side. The objective row holds reduced costs z_j - c_j for a
// maximization; the basic solution is optimal when all entries >= -tol.
struct Tableau {
    std::size_t m, ncols;
    std::vector<Vec> row;  // m x (ncols+1)
    Vec obj;               // ncols+1
    std::vector<std::size_t> basis;

    Tableau(std::size_t m_, std::size_t ncols_)
        : m(m_), ncols(ncols_), row(m_, Vec(ncols_ + 1, 0.0)), obj(ncols_ + 1, 0.0), basis(m_, 0) {}

    void pivot(std::size_t r, std::size_t c) {
        const double p = row[r][c];
        for (double& v : row[r]) v /= p;
        row[r][c] = 1.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || row[i][c] == 0.0) continue;
            const double f = row[i][c];
            for (std::size_t j = 0; j <= ncols; ++j) row[i][j] -= f * row[r][j];
            row[i][c] = 0.0;
        }
        if (obj[c] != 0.0) {
            const double f = obj[c];
            for (std::size_t j = 0; j <= ncols; ++j) obj[j] -= f * row[r][j];
            obj[c] = 0.0;
        }
        basis[r] = c;
    }

    // Bland's rule iteration over the columns marked allowed.
    // Returns false when an entering column has no positive row entry.
    bool run(const std::vector<bool>& allowed) {
        for (;;) {
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < ncols; ++j) {
                if (allowed[j] && obj[j] < -kPivotTol) {
                    enter = j;
                    break;
                }
            }
            if (enter == ncols) return true;
            std::size_t leave = m;
            double best = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < m; ++i) {
                if (row[i][enter] > kPivotTol) {
                    const double ratio = row[i][ncols] / row[i][enter];
                    if (ratio < best - kPivotTol ||
                        (ratio < best + kPivotTol && (leave == m || basis[i] < basis[leave]))) {
                        best = ratio;
                        leave = i;
                    }
                }
            }
            if (leave == m) return false;  // unbounded direction
            pivot(leave, enter);
        }
    }
};

}  // namespace

Solution simplex_maximize(const std::vector<Vec>& a, const Vec& b, const Vec& c) {
    const std::size_t m = a.size();
    const std::size_t n = c.size();
    std::size_t nart = 0;
    for (double bi : b)
        if (bi < 0.0) ++nart;

    const std::size_t ncols = n + m + nart;  // structural, slack, artificial
    Tableau t(m, ncols);

    std::size_t art = n + m;
    for (std::size_t i = 0; i < m; ++i) {
        assert(a[i].size() == n);
        const double sgn = (b[i] < 0.0) ? -1.0 : 1.0;
        for (std::size_t j = 0; j < n; ++j) t.row[i][j] = sgn * a[i][j];
        t.row[i][n + i] = sgn;  // slack
        t.row[i][ncols] = sgn * b[i];
        if (b[i] < 0.0) {
            t.row[i][art] = 1.0;
            t.basis[i] = art++;
        } else {
            t.basis[i] = n + i;
        }
    }

    std::vector<bool> allowed(ncols, true);

    if (nart > 0) {
        // Phase 1: maximize -sum(artificials). Reduced-cost row for the
        // artificial basis is minus the sum of their constraint rows.
        for (std::size_t j = 0; j <= ncols; ++j) t.obj[j] = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis[i] >= n + m) {
                for (std::size_t j = 0; j <= ncols; ++j) t.obj[j] -= t.row[i][j];
            }
        }
        for (std::size_t j = n + m; j < ncols; ++j) t.obj[j] = 0.0;
        t.run(allowed);
        if (t.obj[ncols] < -1e-7) return {Status::Infeasible, 0.0, {}};
        // Drive leftover artificials out of the basis where possible.
        for (std::size_t i = 0; i < m; ++i) {
            if (t.basis[i] < n + m) continue;
            std::size_t c2 = ncols;
            for (std::size_t j = 0; j < n + m; ++j) {
                if (std::abs(t.row[i][j]) > kPivotTol) {
                    c2 = j;
                    break;
                }
            }
            if (c2 != ncols) t.pivot(i, c2);
            // else: the row is redundant; the artificial stays basic at zero.
        }
        for (std::size_t j = n + m; j < ncols; ++j) allowed[j] = false;
    }

    // Phase 2 objective row: z_j - c_j for the current basis.
    for (std::size_t j = 0; j <= ncols; ++j) t.obj[j] = 0.0;
    for (std::size_t j = 0; j < n; ++j) t.obj[j] = -c[j];
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t bi = t.basis[i];
        if (bi < n && c[bi] != 0.0) {
            const double f = c[bi];
            for (std::size_t j = 0; j <= ncols; ++j) t.obj[j] += f * t.row[i][j];
        }
    }
    if (!t.run(allowed)) return {Status::Unbounded, 0.0, {}};

    Vec x(n, 0.0);
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] < n) x[t.basis[i]] = t.row[i][ncols];
    return {Status::Optimal, t.obj[ncols], std::move(x)};
}

InequalitySystem::InequalitySystem(std::size_t nvars)
    : nvars_(nvars), lo_(nvars, -1.0), hi_(nvars, 1.0) {}

void InequalitySystem::set_bounds(std::size_t var, double lo, double hi) {
    if (!(lo < hi)) throw std::invalid_argument("InequalitySystem: empty bound interval");
    lo_[var] = lo;
    hi_[var] = hi;
}

void InequalitySystem::add_le(Vec coeffs, double rhs) {
    assert(coeffs.size() == nvars_);
    rows_.push_back(std::move(coeffs));
    rhs_.push_back(rhs);
}

void InequalitySystem::add_ge(Vec coeffs, double rhs) {
    for (double& v : coeffs) v = -v;
    add_le(std::move(coeffs), -rhs);
}

void InequalitySystem::add_eq(Vec coeffs, double rhs) {
    add_le(coeffs, rhs);
    add_ge(std::move(coeffs), rhs);
}

std::optional<Vec> InequalitySystem::feasible_point() const {
    auto r = maximize(Vec(nvars_, 0.0));
    if (!r) return std::nullopt;
    return r->second;
}

std::optional<std::pair<double, Vec>> InequalitySystem::maximize(const Vec& objective) const {
    assert(objective.size() == nvars_);
    // Shift y = lo + x so x >= 0; upper bounds become explicit rows.
    std::vector<Vec> a;
    Vec b;
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        a.push_back(rows_[r]);
        b.push_back(rhs_[r] - linalg::dot(rows_[r], lo_));
    }
    for (std::size_t j = 0; j < nvars_; ++j) {
        Vec row(nvars_, 0.0);
        row[j] = 1.0;
        a.push_back(std::move(row));
        b.push_back(hi_[j] - lo_[j]);
    }
    Solution s = simplex_maximize(a, b, objective);
    if (s.status == Status::Infeasible) return std::nullopt;
    if (s.status == Status::Unbounded)
        throw std::logic_error("InequalitySystem: unbounded despite box bounds");
    Vec y(nvars_);
    for (std::size_t j = 0; j < nvars_; ++j) y[j] = lo_[j] + s.x[j];
    return std::make_pair(s.objective + linalg::dot(objective, lo_), std::move(y));
}

}  // namespace signcert::lp
