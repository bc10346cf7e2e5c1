#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "wqed/oracle.hpp"
#include "wqed/verify.hpp"

using namespace wqed;
using std::complex;

TEST_CASE("identity system returns its right-hand side")
{
    LinearSystem5 s;
    for (int i = 0; i < 5; ++i)
        s.m[i][i] = 1.0;
    s.b = {complex<double>(1, 0), complex<double>(0, 2), complex<double>(0, 0),
           complex<double>(-1, 0), complex<double>(3, 0)};
    const Solution5 u = solve_linear(s);
    for (int i = 0; i < 5; ++i)
        CHECK(u[i] == s.b[i]);
}

TEST_CASE("permuted identity exercises pivoting")
{
    // row i holds a 1 in column perm[i], so u[perm[i]] = b[i]
    const int perm[5] = {3, 0, 4, 1, 2};
    LinearSystem5 s;
    for (int i = 0; i < 5; ++i) {
        s.m[i][perm[i]] = 1.0;
        s.b[i] = complex<double>(i + 1, -i);
    }
    const Solution5 u = solve_linear(s);
    for (int i = 0; i < 5; ++i)
        CHECK(u[perm[i]] == s.b[i]);
}

TEST_CASE("singular systems are rejected")
{
    LinearSystem5 s; // all zero
    CHECK_THROWS_AS((void)solve_linear(s), SingularSystem);

    // two identical rows
    LinearSystem5 d;
    for (int j = 0; j < 5; ++j) {
        d.m[0][j] = complex<double>(1.0, j);
        d.m[1][j] = complex<double>(1.0, j);
    }
    for (int i = 2; i < 5; ++i)
        d.m[i][i] = 1.0;
    d.b[0] = 1.0;
    CHECK_THROWS_AS((void)solve_linear(d), SingularSystem);
}

TEST_CASE("random dense systems satisfy the residual contract")
{
    std::mt19937_64 gen(stream_seed(20240601, 0));
    for (int n = 0; n < 1000; ++n) {
        LinearSystem5 s;
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j)
                s.m[i][j] = complex<double>(uniform_in(gen, -1.0, 1.0), uniform_in(gen, -1.0, 1.0));
            s.b[i] = complex<double>(uniform_in(gen, -1.0, 1.0), uniform_in(gen, -1.0, 1.0));
        }
        const Solution5 u = solve_linear(s);
        const double bound =
            1e-10 * (frobenius_norm(s) * vector_norm(u) + vector_norm(s.b));
        CHECK(residual_norm(s, u) <= bound);
    }
}

TEST_CASE("assembled two-level system reproduces the closed form")
{
    ModelParams p;
    p.big_gamma1 = 10.0;
    p.big_gamma2 = 0.0;
    p.rabi = 0.0;
    p.gamma2 = p.gamma3 = p.gamma4 = 0.0;
    const OracleSolution sol = solve_stationary(p, probe_at_detuning(p, 10.0));
    const complex<double> expected = 10.0 / complex<double>(10.0, -10.0);
    CHECK(std::abs(sol.t - expected) < 1e-14);
    CHECK(std::abs(sol.r - (sol.t - 1.0)) < 1e-14);
}

TEST_CASE("decoupled atom transmits freely")
{
    ModelParams p;
    p.big_gamma1 = p.big_gamma2 = 0.0;
    const OracleSolution sol = solve_stationary(p, probe_at_detuning(p, 17.0));
    CHECK(std::abs(sol.t - 1.0) < 1e-14);
    CHECK(std::abs(sol.r) < 1e-14);
    CHECK(std::abs(sol.f2) < 1e-14);
    CHECK(std::abs(sol.f3) < 1e-14);
    CHECK(std::abs(sol.f4) < 1e-14);
}

TEST_CASE("resonant lossless photon is completely reflected")
{
    ModelParams p;
    p.rabi = 10.0;
    p.gamma2 = p.gamma3 = p.gamma4 = 0.0;
    const OracleSolution sol = solve_stationary(p, probe_at_detuning(p, 0.0));
    CHECK(std::abs(sol.t) < 1e-14);
    CHECK(std::abs(sol.r) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("stationary solutions obey r = t - 1 and the drive relation for f4")
{
    std::mt19937_64 gen(stream_seed(20240602, 0));
    for (int i = 0; i < 1000; ++i) {
        const ParameterDraw d = random_draw(gen, i % 2 == 1);
        const OracleSolution sol = solve_stationary(d.params, d.probe);
        CHECK(std::abs(sol.r - (sol.t - 1.0)) <= 1e-12);

        const auto det = complex_detunings(d.params, d.probe);
        if (std::abs(det.d4) > kEpsDenominator) {
            const complex<double> expected_f4 = -d.params.rabi * sol.f2 / det.d4;
            CHECK(std::abs(sol.f4 - expected_f4) <=
                  1e-10 * std::max(1.0, std::abs(expected_f4)));
        }
    }
}

TEST_CASE("drive off empties level |4>")
{
    ModelParams p;
    p.rabi = 0.0;
    const OracleSolution sol = solve_stationary(p, probe_at_detuning(p, 3.0));
    CHECK(sol.f4 == complex<double>(0.0, 0.0));
}

TEST_CASE("closed forms and stationary solve agree over randomized draws")
{
    std::mt19937_64 gen(stream_seed(20240603, 0));
    for (int i = 0; i < 2000; ++i) {
        const ParameterDraw d = random_draw(gen, i % 2 == 1);
        const ScatterAmps closed = scatter(d.params, d.probe);
        const OracleSolution oracle = solve_stationary(d.params, d.probe);
        CHECK(relative_deviation(closed.t, oracle.t) <= 1e-10);
        CHECK(relative_deviation(closed.r, oracle.r) <= 1e-10);
    }
}

TEST_CASE("lossless stationary solutions conserve flux")
{
    std::mt19937_64 gen(stream_seed(20240604, 0));
    for (int i = 0; i < 1000; ++i) {
        const ParameterDraw d = random_draw(gen, false);
        const OracleSolution sol = solve_stationary(d.params, d.probe);
        CHECK(std::abs(std::norm(sol.t) + std::norm(sol.r) - 1.0) <= 1e-10);
    }
}

TEST_CASE("verification suites pass at their thresholds")
{
    const auto suites = run_verification(2000, 7);
    REQUIRE(suites.size() == 3);
    for (const auto& s : suites) {
        CAPTURE(s.name);
        CHECK(s.pass);
    }
    CHECK(suites[0].max_flux_defect <= 1e-10);
    CHECK(suites[1].max_dt <= 1e-10);
    CHECK(suites[2].max_dr <= 1e-10);
}
