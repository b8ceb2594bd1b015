#include "signcert/descartes.hpp"

#include <cmath>
#include <stdexcept>

namespace signcert {

SignSequence SignSequence::of(const UnivariateSignomial& g) {
    SignSequence s;
    s.signs.reserve(g.terms.size());
    for (const auto& [nu, a] : g.terms) s.signs.push_back(a > 0.0 ? 1 : -1);
    return s;
}

int sign_changes(const SignSequence& s) {
    int rho = 0;
    for (std::size_t i = 1; i < s.signs.size(); ++i)
        if (s.signs[i] != s.signs[i - 1]) ++rho;
    return rho;
}

ComponentBounds component_bounds(const SignSequence& s) {
    const int rho = sign_changes(s);
    ComponentBounds b;
    b.max_components = rho + 1;
    if (rho % 2 == 0) {
        b.max_with_leading_sign = rho / 2 + 1;
        b.max_with_opposite_sign = rho / 2;
    } else {
        b.max_with_leading_sign = (rho + 1) / 2;
        b.max_with_opposite_sign = (rho + 1) / 2;
    }
    return b;
}

TailClassification classify_at_negative_start(const UnivariateSignomial& g, double root_tol) {
    if (g.empty()) throw std::domain_error("classify_at_negative_start: empty signomial");
    if (!(g.evaluate(1.0) < 0.0))
        throw std::domain_error("classify_at_negative_start: g(1) must be negative");
    const SignSequence seq = SignSequence::of(g);
    const int rho = sign_changes(seq);
    const bool leading_positive = g.leading_coefficient() > 0.0;

    if (!leading_positive) {
        if (rho > 1)
            throw std::domain_error(
                "classify_at_negative_start: negative leading coefficient needs at most one "
                "sign change");
        return {TailClassification::stays_negative, 0.0};
    }
    if (rho > 2)
        throw std::domain_error(
            "classify_at_negative_start: positive leading coefficient needs at most two "
            "sign changes");

    // The positive leading term dominates eventually, so doubling reaches a
    // positive value; then bisect. No derivative needed, works for any real
    // exponents.
    double lo = 1.0, hi = 2.0;
    int guard = 0;
    while (g.evaluate(hi) <= 0.0) {
        lo = hi;
        hi *= 2.0;
        if (++guard > 2000)
            throw std::runtime_error("classify_at_negative_start: bracketing did not terminate");
    }
    while (hi - lo > root_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // hit double resolution
        (g.evaluate(mid) < 0.0 ? lo : hi) = mid;
    }
    return {TailClassification::crosses_once_then_positive, 0.5 * (lo + hi)};
}

}  // namespace signcert
