#pragma once

#include <optional>
#include <vector>

#include "signcert/linalg.hpp"

namespace signcert::lp {

enum class Status { Optimal, Infeasible, Unbounded };

struct Solution {
    Status status = Status::Infeasible;
    double objective = 0.0;
    linalg::Vec x;
};

/// maximize c.x subject to A x <= b, x >= 0. Dense two-phase tableau simplex
/// with Bland's rule (entering: smallest eligible index; leaving: smallest
/// basic index among minimum ratios), so it cannot cycle. Intended for the
/// tiny feasibility systems in this project (tens of rows).
Solution simplex_maximize(const std::vector<linalg::Vec>& a, const linalg::Vec& b,
                          const linalg::Vec& c);

/// Linear system over free variables with explicit finite box bounds.
/// Internally shifted to the nonnegative-orthant standard form. All systems
/// in this project are positively homogeneous, which makes the box harmless.
class InequalitySystem {
  public:
    explicit InequalitySystem(std::size_t nvars);

    void set_bounds(std::size_t var, double lo, double hi);
    void add_le(linalg::Vec coeffs, double rhs);  // coeffs . y <= rhs
    void add_ge(linalg::Vec coeffs, double rhs);
    void add_eq(linalg::Vec coeffs, double rhs);

    std::size_t num_vars() const { return nvars_; }

    // A feasible point, if one exists.
    std::optional<linalg::Vec> feasible_point() const;

    // Maximize objective . y; nullopt when infeasible.
    std::optional<std::pair<double, linalg::Vec>> maximize(const linalg::Vec& objective) const;

  private:
    std::size_t nvars_;
    std::vector<double> lo_, hi_;
    std::vector<linalg::Vec> rows_;
    linalg::Vec rhs_;
};

}  // namespace signcert::lp
