#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <random>

#include "example_signomials.hpp"
#include "signcert/region_oracle.hpp"

using namespace signcert;

namespace {

LogBox box2(double lo, double hi, std::size_t res) {
    return LogBox{{{lo, hi}, {lo, hi}}, {res, res}};
}

}  // namespace

TEST_CASE("a constant signomial is one positive region") {
    const Signomial one(2, {{1.0, {0, 0}}});
    const GridLabeling g = grid_labeling(one, box2(-2, 2, 32));
    CHECK(count_components(g, 1).count == 1);
    CHECK(count_components(g, -1).count == 0);
}

TEST_CASE("all-positive coefficients leave no negative region") {
    const Signomial f(2, {{1.0, {1, 0}}, {2.0, {0, 1}}, {0.5, {1, 1}}});
    const GridLabeling g = grid_labeling(f, box2(-2, 2, 64));
    CHECK(count_components(g, -1).count == 0);
}

TEST_CASE("box validation") {
    const Signomial f = fixtures::p2();
    CHECK_THROWS_AS(grid_labeling(f, LogBox{{{0, 1}}, {8}}), std::invalid_argument);
    CHECK_THROWS_AS(grid_labeling(f, LogBox{{{1, 1}, {0, 1}}, {8, 8}}), std::invalid_argument);
    CHECK_THROWS_AS(grid_labeling(f, LogBox{{{0, 1}, {0, 1}}, {1, 8}}), std::invalid_argument);
    const Signomial f4(4, {{1.0, {1, 0, 0, 0}}, {-1.0, {0, 1, 0, 0}}});
    CHECK_THROWS_AS(grid_labeling(f4, LogBox{{{0, 1}, {0, 1}, {0, 1}, {0, 1}}, {4, 4, 4, 4}}),
                    std::invalid_argument);
}

TEST_CASE("component counts for the worked examples") {
    // Boxes chosen so the counts are resolution-stable; cross-checked against
    // the certifier's bounds elsewhere.
    CHECK(count_components(grid_labeling(fixtures::p1(), box2(-3, 3, 256)), 1).count == 2);
    CHECK(count_components(grid_labeling(fixtures::p1(), box2(-3, 3, 256)), -1).count == 1);
    CHECK(count_components(grid_labeling(fixtures::p2(), box2(-3, 3, 256)), -1).count == 1);
    CHECK(count_components(grid_labeling(fixtures::p3(), box2(-3, 2, 256)), -1).count == 2);
    const GridLabeling g4 = grid_labeling(fixtures::p4(), box2(-2, 2, 256));
    CHECK(count_components(g4, -1).count == 1);
    CHECK(count_components(g4, -1).touching_boundary == 0);
    CHECK(count_components(grid_labeling(fixtures::p5(), box2(-2, 2, 256)), -1).count == 1);
}

TEST_CASE("stability ladders on the examples") {
    const std::vector<std::size_t> ladder = {64, 128, 256};
    const StabilityReport p2rep =
        stability_check(fixtures::p2(), box2(-3, 3, 0), -1, ladder);
    CHECK(p2rep.stable);
    CHECK(p2rep.count == 1);
    const StabilityReport p3rep =
        stability_check(fixtures::p3(), box2(-3, 2, 0), -1, ladder);
    CHECK(p3rep.stable);
    CHECK(p3rep.count == 2);

    SUBCASE("refinement never loses components once stabilized") {
        for (const auto& f : {fixtures::p1(), fixtures::p2(), fixtures::p3(), fixtures::p4(),
                              fixtures::p5()}) {
            const StabilityReport rep = stability_check(f, box2(-3, 3, 0), -1, ladder);
            for (std::size_t i = 1; i < rep.counts.size(); ++i)
                CHECK(rep.counts[i] >= rep.counts[i - 1]);
        }
    }
}

TEST_CASE("a box cutting through a component flags the boundary") {
    // p4 is negative at the all-ones point, so a tiny box around it sees one
    // negative region leaking through every face.
    const GridLabeling g = grid_labeling(fixtures::p4(), box2(-0.05, 0.05, 16));
    const ComponentCount c = count_components(g, -1);
    REQUIRE(c.count >= 1);
    CHECK(c.touching_boundary == c.count);
}

TEST_CASE("signs are reproduced under a monomial change of variables") {
    // Lemma-level sample check: F(x) and f(x^M) share signs cellwise.
    std::mt19937_64 rng(83);
    const Signomial f = fixtures::p2();
    linalg::Mat m(2, 2);
    m(0, 0) = 1.0;
    m(0, 1) = 0.5;
    m(1, 0) = 0.0;
    m(1, 1) = 1.0;
    const AffineMap map(m, {0.3, -0.2});
    const Signomial g = monomial_transform(f, map);
    std::uniform_real_distribution<double> d(-1.5, 1.5);
    for (int i = 0; i < 500; ++i) {
        const Point x = {std::exp(d(rng)), std::exp(d(rng))};
        const double gv = evaluate(g, x);
        const double fv = evaluate(f, monomial_change(map.matrix, x));
        if (std::abs(fv) < 1e-9 || std::abs(gv) < 1e-9) continue;
        CHECK((gv < 0) == (fv < 0));
    }
}

TEST_CASE("evaluation is deterministic across thread counts") {
    OracleOptions seq;
    seq.threads = 1;
    OracleOptions par;
    par.threads = 4;
    const GridLabeling a = grid_labeling(fixtures::p3(), box2(-3, 2, 128), seq);
    const GridLabeling b = grid_labeling(fixtures::p3(), box2(-3, 2, 128), par);
    CHECK(a.sign == b.sign);
    CHECK(a.component == b.component);

    // The environment variable caps the pool without changing results.
    setenv("SIGNCERT_THREADS", "1", 1);
    const GridLabeling c = grid_labeling(fixtures::p3(), box2(-3, 2, 128), par);
    unsetenv("SIGNCERT_THREADS");
    CHECK(c.sign == a.sign);
    CHECK(c.component == a.component);
}

TEST_CASE("three dimensional labeling") {
    // x + y + z - c on a box: one negative and one positive region split by
    // the plane-like surface.
    const Signomial f(3, {{1.0, {1, 0, 0}}, {1.0, {0, 1, 0}}, {1.0, {0, 0, 1}}, {-10.0, {0, 0, 0}}});
    const GridLabeling g = grid_labeling(f, LogBox{{{-1, 2}, {-1, 2}, {-1, 2}}, {48, 48, 48}});
    CHECK(count_components(g, -1).count == 1);
    CHECK(count_components(g, 1).count == 1);
}

TEST_CASE("raster dumps") {
    const GridLabeling g = grid_labeling(fixtures::p2(), box2(-3, 3, 32));
    const std::string ppm = "oracle_test_dump.ppm";
    const std::string csv = "oracle_test_dump.csv";
    write_ppm(g, ppm);
    write_csv(g, csv);
    {
        std::ifstream in(ppm, std::ios::binary);
        std::string magic;
        in >> magic;
        CHECK(magic == "P6");
    }
    {
        std::ifstream in(csv);
        std::string header;
        std::getline(in, header);
        CHECK(header == "i0,i1,sign,component");
        std::size_t lines = 0;
        std::string line;
        while (std::getline(in, line)) ++lines;
        CHECK(lines == 32 * 32);
    }
    std::remove(ppm.c_str());
    std::remove(csv.c_str());

    const Signomial f3(3, {{1.0, {1, 0, 0}}, {-1.0, {0, 1, 0}}});
    const GridLabeling g3 = grid_labeling(f3, LogBox{{{-1, 1}, {-1, 1}, {-1, 1}}, {8, 8, 8}});
    CHECK_THROWS_AS(write_ppm(g3, "nope.ppm"), std::invalid_argument);
}

TEST_CASE("overflowing cells are excluded from both signs") {
    const Signomial f(1, {{1.0, {500.0}}, {-1.0, {0.0}}});
    const GridLabeling g = grid_labeling(f, LogBox{{{-3, 3}}, {64}});
    bool some_invalid = false, some_valid = false;
    for (CellSign s : g.sign) {
        some_invalid = some_invalid || s == CellSign::invalid;
        some_valid = some_valid || s == CellSign::negative || s == CellSign::positive;
    }
    CHECK(some_invalid);
    CHECK(some_valid);
    for (std::size_t i = 0; i < g.sign.size(); ++i)
        if (g.sign[i] == CellSign::invalid) CHECK(g.component[i] == -1);
}
