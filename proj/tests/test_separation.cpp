#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "example_signomials.hpp"
#include "signcert/descartes.hpp"
#include "signcert/separation.hpp"
#include "test_support.hpp"

using namespace signcert;

TEST_CASE("classification against the examples") {
    const SignedSupport p2 = signed_support(fixtures::p2());
    CHECK(classify_strictness({1.0, -1.0}, p2) == Strictness::strict);
    CHECK(classify_strictness({0.0, 0.0}, p2) == Strictness::nonstrict);
    CHECK(classify_strictness({-1.0, 1.0}, p2) == Strictness::not_separating);

    const SignedSupport tp2 = signed_support(fixtures::tilde_p2());
    CHECK(classify_strictness({1.0, -1.0}, tp2) == Strictness::very_strict);
    CHECK(classify_strictness({1.1, -1.0}, tp2) == Strictness::very_strict);
    CHECK(classify_strictness({1.0, -1.1}, tp2) == Strictness::very_strict);

    const SignedSupport p5 = signed_support(fixtures::p5());
    CHECK(classify_strictness({1.0, -1.0}, p5) == Strictness::nonstrict);
}

TEST_CASE("separating vector search on the examples") {
    SUBCASE("p2 admits a strict vector") {
        const auto w = find_separating_vector(signed_support(fixtures::p2()));
        REQUIRE(w.has_value());
        CHECK(w->strictness == Strictness::strict);
        CHECK(testsupport::separating_min_slack(*w, signed_support(fixtures::p2())) >= -1e-9);
    }
    SUBCASE("tilde p2 admits a very strict vector") {
        const auto w = find_separating_vector(signed_support(fixtures::tilde_p2()));
        REQUIRE(w.has_value());
        CHECK(w->strictness == Strictness::very_strict);
    }
    SUBCASE("p5 has only nonstrict vectors") {
        const auto w = find_separating_vector(signed_support(fixtures::p5()));
        REQUIRE(w.has_value());
        CHECK(w->strictness == Strictness::nonstrict);
        // The cone is the ray through (1,-1).
        CHECK(w->v[0] * -1.0 == doctest::Approx(w->v[1]).epsilon(1e-6));
    }
    SUBCASE("p4 and p1 have none") {
        CHECK_FALSE(find_separating_vector(signed_support(fixtures::p4())).has_value());
        CHECK_FALSE(find_separating_vector(signed_support(fixtures::p1())).has_value());
    }
    SUBCASE("degenerate sides") {
        SignedSupport s;
        s.dimension = 2;
        s.positive_points = {{1, 0}, {0, 1}};
        const auto w1 = find_separating_vector(s);
        REQUIRE(w1.has_value());
        CHECK(w1->strictness == Strictness::nonstrict);

        SignedSupport t;
        t.dimension = 2;
        t.negative_points = {{1, 0}};
        const auto w2 = find_separating_vector(t);
        REQUIRE(w2.has_value());
        CHECK(w2->strictness == Strictness::very_strict);
    }
}

TEST_CASE("the separating cone is closed under addition and scaling") {
    const SignedSupport s = signed_support(fixtures::p2());
    const auto w = find_separating_vector(s);
    REQUIRE(w.has_value());
    const Point paper = {1.0, -1.0};
    CHECK(classify_strictness(paper, s) != Strictness::not_separating);
    const Point sum = linalg::add(w->v, paper);
    CHECK(classify_strictness(sum, s) != Strictness::not_separating);
    CHECK(classify_strictness(linalg::scale(sum, 2.5), s) != Strictness::not_separating);
    CHECK(classify_strictness(linalg::scale(paper, 0.0), s) != Strictness::not_separating);
}

TEST_CASE("very strict vectors force the one-flip sign pattern of the induced form") {
    std::mt19937_64 rng(41);
    const Signomial f = fixtures::tilde_p2();
    const SignedSupport s = signed_support(f);
    const auto w = find_separating_vector(s);
    REQUIRE(w.has_value());
    REQUIRE(w->strictness == Strictness::very_strict);
    for (int trial = 0; trial < 30; ++trial) {
        const Point x = fixtures::random_positive_point(rng, 2);
        const UnivariateSignomial g = induced_univariate(f, w->v, x);
        const SignSequence seq = SignSequence::of(g);
        CHECK(sign_changes(seq) <= 1);
        REQUIRE(!seq.signs.empty());
        CHECK(seq.signs.back() == -1);  // negative leading block
        // Exactly a positive block followed by a negative block.
        bool seen_negative = false;
        for (int sgn : seq.signs) {
            if (sgn < 0) seen_negative = true;
            if (seen_negative) CHECK(sgn == -1);
        }
    }
}

TEST_CASE("enclosing vectors of the examples") {
    SUBCASE("the swapped support of p3 has a strict enclosing vector") {
        const SignedSupport s = signed_support(fixtures::p3().negated());
        const auto r = find_enclosing_vector(s);
        CHECK_FALSE(r.truncated);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->strict);
        CHECK(testsupport::enclosing_min_slack(*r.witness, s) >= -1e-9);

        const auto w = classify_enclosing({1.0, -1.0}, s);
        REQUIRE(w.has_value());
        CHECK(w->strict);
        CHECK(w->a == doctest::Approx(-2.0));
        CHECK(w->b == doctest::Approx(2.0));
    }
    SUBCASE("(0,1) encloses the swapped support of p1") {
        const SignedSupport s = signed_support(fixtures::p1().negated());
        const auto w = classify_enclosing({0.0, 1.0}, s);
        REQUIRE(w.has_value());
        CHECK(w->strict);
        const auto r = find_enclosing_vector(s);
        REQUIRE(r.witness.has_value());
        CHECK(r.witness->strict);
    }
    SUBCASE("an empty outside set is vacuously enclosed") {
        SignedSupport s;
        s.dimension = 2;
        s.negative_points = {{0, 0}, {1, 2}};
        const auto r = find_enclosing_vector(s);
        REQUIRE(r.witness.has_value());
        CHECK_FALSE(r.witness->strict);
        CHECK_FALSE(r.truncated);
    }
    SUBCASE("interior outside points admit no enclosing vector") {
        // Outside point in the middle of the enclosed segment.
        SignedSupport s;
        s.dimension = 2;
        s.negative_points = {{0, 0}, {2, 0}, {0, 2}, {2, 2}};
        s.positive_points = {{1, 1}};
        const auto r = find_enclosing_vector(s);
        CHECK_FALSE(r.witness.has_value());
        CHECK_FALSE(r.truncated);
    }
    SUBCASE("the partition cap triggers the truncation flag") {
        SeparationOptions opts;
        opts.partition_cap = 4;
        SignedSupport s;
        s.dimension = 2;
        s.negative_points = {{0, 0}, {0.5, 0}};
        std::mt19937_64 rng(3);
        std::uniform_real_distribution<double> d(-3.0, 3.0);
        for (int i = 0; i < 8; ++i) s.positive_points.push_back({d(rng), 4.0 + d(rng)});
        const auto r = find_enclosing_vector(s, opts);
        CHECK(r.truncated);
    }
}

TEST_CASE("enclosing witnesses keep the induced sign changes at two or fewer") {
    std::mt19937_64 rng(43);
    const Signomial g = fixtures::p3().negated();
    const SignedSupport s = signed_support(g);
    const auto r = find_enclosing_vector(s);
    REQUIRE(r.witness.has_value());
    for (int trial = 0; trial < 30; ++trial) {
        const Point x = fixtures::random_positive_point(rng, 2);
        const UnivariateSignomial u = induced_univariate(g, r.witness->v, x);
        CHECK(sign_changes(SignSequence::of(u)) <= 2);
    }
}

TEST_CASE("very strict basis") {
    const Signomial f = fixtures::tilde_p2();
    const SignedSupport s = signed_support(f);
    const Point v = {1.0, -1.0};

    SUBCASE("default construction satisfies every postcondition") {
        const VeryStrictBasis basis = very_strict_basis(v, s);
        REQUIRE(basis.vectors.size() == 2);
        linalg::Mat m(2, 2);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) m(j, i) = basis.vectors[i][j];
        CHECK(linalg::rank(m) == 2);
        auto lambda = linalg::solve(m, v);
        REQUIRE(lambda.has_value());
        for (double l : *lambda) CHECK(l > 0.0);
        for (const auto& w : basis.vectors) {
            CHECK(classify_strictness(w, s) == Strictness::very_strict);
            // Common-offset form: positives strictly below c, negatives above.
            for (const auto& alpha : s.positive_points)
                CHECK(linalg::dot(w, alpha) < basis.c);
            for (const auto& beta : s.negative_points)
                CHECK(linalg::dot(w, beta) > basis.c);
        }
    }
    SUBCASE("seeded with the axis directions") {
        const VeryStrictBasis basis = very_strict_basis(v, s, {{1.0, 0.0}, {0.0, -1.0}});
        for (const auto& w : basis.vectors)
            CHECK(classify_strictness(w, s) == Strictness::very_strict);
    }
    SUBCASE("one dimensional cone is the vector itself, rescaled") {
        SignedSupport s1;
        s1.dimension = 1;
        s1.positive_points = {{0.5}};
        s1.negative_points = {{2.0}, {3.0}};
        const VeryStrictBasis basis = very_strict_basis({1.0}, s1);
        REQUIRE(basis.vectors.size() == 1);
        CHECK(basis.vectors[0][0] > 0.0);
        CHECK(classify_strictness(basis.vectors[0], s1) == Strictness::very_strict);
    }
    SUBCASE("rejects seeds that are not very strict") {
        CHECK_THROWS_AS(very_strict_basis({1.0, -1.0}, signed_support(fixtures::p2())),
                        std::invalid_argument);
        SignedSupport empty_side;
        empty_side.dimension = 2;
        empty_side.negative_points = {{1, 1}};
        CHECK_THROWS_AS(very_strict_basis({1.0, 0.0}, empty_side), std::invalid_argument);
    }
}

TEST_CASE("randomized witnesses always re-verify by direct dot products") {
    std::mt19937_64 rng(59);
    int found = 0;
    for (int trial = 0; trial < 120; ++trial) {
        const Signomial f = fixtures::random_signomial(rng, 2, 6, 3.0);
        const SignedSupport s = signed_support(f);
        if (const auto w = find_separating_vector(s)) {
            CHECK(testsupport::separating_min_slack(*w, s) >= -1e-9);
            CHECK(classify_strictness(w->v, s) == w->strictness);
            ++found;
        }
        if (const auto r = find_enclosing_vector(s); r.witness) {
            CHECK(testsupport::enclosing_min_slack(*r.witness, s) >= -1e-9);
            ++found;
        }
    }
    CHECK(found > 20);  // the generator must actually exercise the searches
}
