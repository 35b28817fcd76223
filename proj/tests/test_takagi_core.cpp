#include <doctest.h>

#include "support.hpp"
#include "takagi/takagi.hpp"

using namespace takagi;
using test::close;
using test::uniform;

TEST_CASE("t0 is the distance to the nearest integer") {
    CHECK(t0(0.0) == 0.0);
    CHECK(t0(0.5) == 0.5);
    CHECK(t0(Rat(2, 5)) == Rat(2, 5));
    CHECK(t0(Rat(3, 5)) == Rat(2, 5));
    CHECK(t0(Rat(7, 2)) == Rat(1, 2));
    CHECK(t0(-0.25) == 0.25);
    // periodicity and the two symmetries on a grid
    for (int i = 0; i < 500; ++i) {
        double x = uniform(-3, 3);
        CHECK(t0(x) == doctest::Approx(t0(x + 1)).epsilon(1e-14));
        CHECK(t0(x) == doctest::Approx(t0(1 - x)).epsilon(1e-14));
        CHECK(t0(x) == doctest::Approx(t0(-x)).epsilon(1e-14));
        CHECK(t0(x) >= 0.0);
        CHECK(t0(x) <= 0.5);
    }
}

TEST_CASE("t_v matches the closed forms") {
    EvalParams p;
    p.abs_tol = 1e-12;

    p.v = 0.6;  // max at 1/3 equals 1/(3(1-v))
    auto [val, err] = t_v(1.0 / 3.0, p);
    CHECK(err <= 1e-12);
    CHECK(val == doctest::Approx(1.0 / (3 * 0.4)).epsilon(1e-11));

    p.v = 0.25;  // T_{1/4}(x) = 2(x - x^2)
    auto [v2, e2] = t_v(0.4, p);
    CHECK(v2 == doctest::Approx(0.48).epsilon(1e-11));
    CHECK(e2 <= 1e-12);

    p.v = 0.77;
    CHECK(t_v(0.0, p).first == doctest::Approx(0.0));
    p.v = -0.4;
    CHECK(t_v(0.0, p).first == doctest::Approx(0.0));
}

TEST_CASE("t_v honors the term budget") {
    EvalParams p;
    p.v = 0.9;
    p.abs_tol = 1e-14;
    p.max_terms = 10;
    CHECK_THROWS_AS((void)t_v(0.3, p), TolNotReached);
}

TEST_CASE("s_vn exact sums") {
    CHECK(s_vn(Rat(1, 2), Rat(17, 31), 0) == Rat(1, 2));
    CHECK(s_vn(Rat(1, 4), Rat(-1, 2), 1) == Rat(0));
    // S_{v,1} at 0.01_2 = 1/4 with v = 1/2: plateau value 1/2
    CHECK(s_vn(Rat(1, 4), Rat(1, 2), 1) == Rat(1, 2));
}

TEST_CASE("functional equation residual stays within 3x the tail bound") {
    EvalParams p;
    p.abs_tol = 1e-12;

    p.v = -0.7;
    CHECK(functional_equation_residual(0.2, 2, p) <= 3e-12);
    p.v = 0.6;
    CHECK(functional_equation_residual(1.0 / 3.0, 1, p) <= 3e-12);
    p.v = 0.49;
    CHECK(functional_equation_residual(0.377, 5, p) <= 3e-12);

    for (int i = 0; i < 200; ++i) {
        p.v = uniform(-0.95, 0.95);
        if (std::abs(p.v) < 1e-3) continue;
        double x = uniform(0, 1);
        auto n = static_cast<std::size_t>(test::uniform_int(1, 8));
        CHECK(functional_equation_residual(x, n, p) <= 3e-12);
    }
}

TEST_CASE("symmetry, periodicity and the global bound") {
    // x on a dyadic grid so that 1-x and x+1 are exactly representable:
    // T_v is Holder-rough, so a half-ulp argument perturbation genuinely
    // moves the value far beyond the evaluation tolerance
    EvalParams p;
    p.abs_tol = 1e-12;
    for (int j = 0; j < 20; ++j) {
        p.v = uniform(-0.9, 0.9);
        double bound = 1.0 / (2 - 2 * std::abs(p.v));
        for (int i = 0; i < 50; ++i) {
            double x = static_cast<double>(test::uniform_int(0, 1 << 30)) / (1 << 30);
            auto [a, ea] = t_v(x, p);
            auto [b, eb] = t_v(1 - x, p);
            CHECK(std::abs(a - b) <= ea + eb + 1e-13);
            auto [c, ec] = t_v(x + 1, p);
            CHECK(std::abs(a - c) <= ea + ec + 1e-13);
            CHECK(std::abs(a) <= bound + ea + 1e-13);
        }
    }
}

TEST_CASE("explicit parabola at v = 1/4") {
    EvalParams p;
    p.v = 0.25;
    p.abs_tol = 1e-12;
    for (int i = 0; i <= 10000; ++i) {
        double x = i / 10000.0;
        auto [val, err] = t_v(x, p);
        CHECK(std::abs(val - 2 * (x - x * x)) <= 2 * err + 1e-12);
    }
}

TEST_CASE("t_v in high precision agrees with double") {
    EvalParams p;
    p.v = 0.49;
    p.abs_tol = 1e-20;
    auto [val, err] = t_v(Real("0.377"), p);
    CHECK(err <= Real("1e-20"));
    p.abs_tol = 1e-12;
    auto [vd, ed] = t_v(0.377, p);
    CHECK(close(val, vd, 1e-11));
}
