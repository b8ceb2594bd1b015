#pragma once

#include <vector>

#include "signcert/signomial.hpp"

namespace signcert {

/// Coefficient sign sequence of a one-variable signomial, ordered by
/// increasing exponent. Zero coefficients never occur (merged terms with zero
/// sum are dropped at construction), so no zero-skipping is needed.
struct SignSequence {
    std::vector<int> signs;  // each +1 or -1

    static SignSequence of(const UnivariateSignomial& g);
};

int sign_changes(const SignSequence& s);

/// Bounds on the number of sign components of (0, inf) minus the zero set.
/// With rho sign changes there are at most rho+1 components in total; the
/// per-sign split depends on the parity of rho and the leading sign.
struct ComponentBounds {
    int max_components = 0;
    int max_with_leading_sign = 0;
    int max_with_opposite_sign = 0;
};

ComponentBounds component_bounds(const SignSequence& s);

/// Tail behavior of a one-variable signomial with g(1) < 0 whose sign
/// sequence satisfies one of the two sufficient hypotheses:
/// at most two sign changes with positive leading coefficient (crosses zero
/// exactly once on (1, inf)), or at most one change with negative leading
/// coefficient (negative on all of [1, inf)).
struct TailClassification {
    enum Kind { crosses_once_then_positive, stays_negative };
    Kind kind = stays_negative;
    double root = 0.0;  // the crossing in (1, inf); meaningful for the first kind
};

// Throws std::domain_error when g(1) >= 0 or neither hypothesis holds.
TailClassification classify_at_negative_start(const UnivariateSignomial& g,
                                              double root_tol = 1e-10);

}  // namespace signcert
