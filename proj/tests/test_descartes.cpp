#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "example_signomials.hpp"
#include "signcert/descartes.hpp"
#include "univariate_oracle.hpp"

using namespace signcert;

namespace {

SignSequence seq(std::initializer_list<int> signs) {
    SignSequence s;
    s.signs = signs;
    return s;
}

UnivariateSignomial uni(std::initializer_list<std::pair<double, double>> terms) {
    UnivariateSignomial g;
    for (auto [nu, a] : terms) g.terms.emplace_back(nu, a);
    std::sort(g.terms.begin(), g.terms.end());
    return g;
}

// Random instance satisfying one of the two tail hypotheses with g(1) < 0.
UnivariateSignomial random_hypothesis_instance(std::mt19937_64& rng, bool crossing) {
    std::uniform_int_distribution<int> nterms(2, 6);
    std::uniform_real_distribution<double> expd(-5.0, 5.0);
    std::uniform_real_distribution<double> coefd(0.2, 3.0);
    for (;;) {
        const int k = nterms(rng);
        std::vector<double> exps;
        for (int i = 0; i < k; ++i) exps.push_back(expd(rng));
        std::sort(exps.begin(), exps.end());
        bool ok = true;
        for (int i = 1; i < k; ++i) ok = ok && exps[i] - exps[i - 1] > 0.05;
        if (!ok) continue;

        // Sign pattern: (-..-+..+) with positive tail for the crossing case,
        // (+..+-..-) with negative tail otherwise.
        std::uniform_int_distribution<int> cut(1, k - 1);
        const int c = cut(rng);
        UnivariateSignomial g;
        double pos_sum = 0.0, neg_sum = 0.0;
        for (int i = 0; i < k; ++i) {
            const bool positive = crossing ? (i >= c) : (i < c);
            const double a = (positive ? 1.0 : -1.0) * coefd(rng);
            (positive ? pos_sum : neg_sum) += std::abs(a);
            g.terms.emplace_back(exps[i], a);
        }
        // Force g(1) = sum of coefficients below zero by inflating the
        // negative block.
        const double factor = (pos_sum + 1.0) / neg_sum;
        for (auto& [nu, a] : g.terms)
            if (a < 0) a *= factor;
        if (g.evaluate(1.0) < -1e-9) return g;
    }
}

}  // namespace

TEST_CASE("sign changes") {
    CHECK(sign_changes(seq({1, 1, -1, -1})) == 1);
    CHECK(sign_changes(seq({1, -1, 1, -1})) == 3);
    CHECK(sign_changes(seq({-1, -1, -1})) == 0);
    CHECK(sign_changes(seq({1})) == 0);
}

TEST_CASE("sign change count is invariant under reversal and global negation") {
    std::mt19937_64 rng(5);
    std::bernoulli_distribution bit(0.5);
    for (int trial = 0; trial < 200; ++trial) {
        SignSequence s;
        const int k = 1 + int(rng() % 8);
        for (int i = 0; i < k; ++i) s.signs.push_back(bit(rng) ? 1 : -1);
        SignSequence rev = s;
        std::reverse(rev.signs.begin(), rev.signs.end());
        SignSequence neg = s;
        for (int& x : neg.signs) x = -x;
        CHECK(sign_changes(rev) == sign_changes(s));
        CHECK(sign_changes(neg) == sign_changes(s));
    }
}

TEST_CASE("component bounds by parity") {
    const ComponentBounds b3 = component_bounds(seq({1, -1, 1, -1}));  // rho = 3
    CHECK(b3.max_components == 4);
    CHECK(b3.max_with_leading_sign == 2);
    CHECK(b3.max_with_opposite_sign == 2);

    const ComponentBounds b1 = component_bounds(seq({1, 1, -1, -1}));  // rho = 1
    CHECK(b1.max_components == 2);
    CHECK(b1.max_with_leading_sign == 1);
    CHECK(b1.max_with_opposite_sign == 1);

    const ComponentBounds b0 = component_bounds(seq({1, 1}));
    CHECK(b0.max_components == 1);
    CHECK(b0.max_with_leading_sign == 1);
    CHECK(b0.max_with_opposite_sign == 0);

    const ComponentBounds b2 = component_bounds(seq({1, -1, 1}));  // rho = 2
    CHECK(b2.max_components == 3);
    CHECK(b2.max_with_leading_sign == 2);
    CHECK(b2.max_with_opposite_sign == 1);
}

TEST_CASE("tail classification") {
    SUBCASE("explicit crossing at 2") {
        const auto r = classify_at_negative_start(uni({{1.0, 1.0}, {0.0, -2.0}}));
        CHECK(r.kind == TailClassification::crosses_once_then_positive);
        CHECK(r.root == doctest::Approx(2.0).epsilon(1e-9));
    }
    SUBCASE("negative leading coefficient stays negative") {
        // Group weights of the (1,-1)-induced form of the seven-term example:
        // 3/t - 3 - t, one sign change, negative leading coefficient.
        const UnivariateSignomial g = uni({{-1.0, 3.0}, {0.0, -3.0}, {1.0, -1.0}});
        const auto r = classify_at_negative_start(g);
        CHECK(r.kind == TailClassification::stays_negative);
        for (double t = 1.0; t < 100.0; t *= 1.37) CHECK(g.evaluate(t) < 0.0);
    }
    SUBCASE("quadratic with two sign changes crosses at (3+sqrt 5)/2") {
        const auto r =
            classify_at_negative_start(uni({{0.0, 1.0}, {1.0, -3.0}, {2.0, 1.0}}));
        CHECK(r.kind == TailClassification::crosses_once_then_positive);
        CHECK(r.root == doctest::Approx((3.0 + std::sqrt(5.0)) / 2.0).epsilon(1e-9));
    }
    SUBCASE("precondition violations") {
        CHECK_THROWS_AS(classify_at_negative_start(uni({{0.0, 1.0}})), std::domain_error);
        // g(1) < 0 but three sign changes with positive leading coefficient.
        CHECK_THROWS_AS(classify_at_negative_start(
                            uni({{0.0, 1.0}, {1.0, -4.0}, {2.0, 1.0}, {3.0, -1.0}, {4.0, 0.5}})),
                        std::domain_error);
        // Negative leading coefficient with two sign changes.
        CHECK_THROWS_AS(classify_at_negative_start(
                            uni({{0.0, -2.0}, {1.0, 1.0}, {2.0, -1.0}})),
                        std::domain_error);
    }
}

TEST_CASE("tail classification matches dense sampling on random instances") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 150; ++trial) {
        const bool crossing = trial % 2 == 0;
        const UnivariateSignomial g = random_hypothesis_instance(rng, crossing);
        const auto r = classify_at_negative_start(g);
        if (r.kind == TailClassification::stays_negative) {
            for (double u = 0.0; u <= 14.0; u += 0.05) CHECK(g.evaluate(std::exp(u)) < 0.0);
        } else {
            const double rho = r.root;
            REQUIRE(rho > 1.0);
            for (double t = 1.0; t < rho * (1 - 1e-6); t += (rho - 1.0) / 50.0)
                CHECK(g.evaluate(t) < 0.0);
            for (double t = rho * (1 + 1e-6); t < rho * 100; t *= 1.2)
                CHECK(g.evaluate(t) > 0.0);
        }
    }
}

TEST_CASE("descartes bounds dominate measured component counts") {
    SUBCASE("the four sign-pattern cubics") {
        for (const Signomial& f : fixtures::sign_pattern_cubics()) {
            UnivariateSignomial g;
            for (const auto& t : f.terms()) g.terms.emplace_back(t.exponent[0], t.coeff);
            std::sort(g.terms.begin(), g.terms.end());
            const ComponentBounds b = component_bounds(SignSequence::of(g));
            CHECK(sign_changes(SignSequence::of(g)) == 3);
            const auto counts = testoracle::count_sign_components(g);
            const bool leading_negative = g.leading_coefficient() < 0;
            const int neg_bound =
                leading_negative ? b.max_with_leading_sign : b.max_with_opposite_sign;
            const int pos_bound =
                leading_negative ? b.max_with_opposite_sign : b.max_with_leading_sign;
            CHECK(counts.negative <= neg_bound);
            CHECK(counts.positive <= pos_bound);
            CHECK(counts.total() <= b.max_components);
        }
    }
    SUBCASE("random integer-exponent polynomials of degree at most 6") {
        std::mt19937_64 rng(29);
        std::uniform_real_distribution<double> coefd(0.2, 3.0);
        std::bernoulli_distribution bit(0.5);
        for (int trial = 0; trial < 300; ++trial) {
            UnivariateSignomial g;
            for (int e = 0; e <= 6; ++e)
                if (bit(rng)) g.terms.emplace_back(double(e), (bit(rng) ? 1 : -1) * coefd(rng));
            if (g.terms.size() < 2) continue;
            const ComponentBounds b = component_bounds(SignSequence::of(g));
            const auto counts = testoracle::count_sign_components(g);
            const bool ln = g.leading_coefficient() < 0;
            CHECK(counts.negative <= (ln ? b.max_with_leading_sign : b.max_with_opposite_sign));
            CHECK(counts.positive <= (ln ? b.max_with_opposite_sign : b.max_with_leading_sign));
        }
    }
}
