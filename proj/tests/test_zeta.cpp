#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "zlab/special_functions.hpp"
#include "zlab/zeta.hpp"

using namespace zlab;
using doctest::Approx;

namespace {

// mpmath references (tests/fixtures/generate_fixtures.py)
constexpr double kGamma1 = 14.134725141734693790457251983562470271;
const Complex kZetaPrime2(-0.93754825431584375370257409456786497790, 0.0);
const Complex kZetaSecond2(1.9892802342989010234208586874215163815, 0.0);
const Complex kZetaHalf1000i(0.35633436719439605507440247671102964188,
                             0.93199783123299366511506043273705607416);
constexpr double kZetaPrime0 = -0.91893853320467274178032973640561763986;  // -log(2pi)/2
constexpr double kPi26 = 1.6449340668482264364724151666460251892;

}  // namespace

TEST_CASE("zeta_em classical values") {
    PrecisionConfig cfg = estimate_em_params(ComplexPoint(2.0, 0.0), 1e-13);
    CHECK(zeta_em(ComplexPoint(2.0, 0.0), cfg).real() == Approx(kPi26).epsilon(1e-13));
    CHECK(zeta_auto(ComplexPoint(0.0, 0.0)).real() == Approx(-0.5).epsilon(1e-13));
    CHECK(std::abs(zeta_auto(ComplexPoint(0.5, kGamma1))) <= 1e-8);
}

TEST_CASE("zeta_em error paths") {
    CHECK_THROWS_AS(zeta_em(ComplexPoint(1.0, 0.0), PrecisionConfig{}), PoleError);
    // default cutoff M=10 cannot hold the bound at t = 300
    CHECK_THROWS_AS(zeta_em(ComplexPoint(0.5, 300.0), PrecisionConfig{}), PrecisionExhausted);
}

TEST_CASE("zeta reflection region") {
    // exact trivial zeros
    CHECK(zeta_auto(ComplexPoint(-2.0, 0.0)) == Complex(0.0));
    CHECK(zeta_auto(ComplexPoint(-8.0, 0.0)) == Complex(0.0));
    // zeta(-1) = -1/12
    CHECK(zeta_auto(ComplexPoint(-1.0, 0.0)).real() == Approx(-1.0 / 12.0).epsilon(1e-12));
}

TEST_CASE("estimate_em_params examples") {
    PrecisionConfig c1 = estimate_em_params(ComplexPoint(2.0, 0.0), 1e-10);
    CHECK(std::abs(zeta_em(ComplexPoint(2.0, 0.0), c1).real() - kPi26) < 1e-10);

    PrecisionConfig c2 = estimate_em_params(ComplexPoint(0.5, 1000.0), 1e-10);
    CHECK(c2.em_cutoff >= 500);
    Complex z = zeta_em(ComplexPoint(0.5, 1000.0), c2);
    CHECK(std::abs(z - kZetaHalf1000i) < 1e-10);

    PrecisionConfig c3 = estimate_em_params(ComplexPoint(30.0, 0.0), 1e-12);
    CHECK(c3.em_cutoff <= 20);
    CHECK(std::abs(zeta_em(ComplexPoint(30.0, 0.0), c3).real() -
                   1.0000000009313274324196681828717647350) < 1e-12);

    CHECK_THROWS_AS(estimate_em_params(ComplexPoint(2.0, 0.0), 1e-15), DomainViolation);
}

TEST_CASE("zeta_jet classical derivative values") {
    // zeta'(0) = -log(2pi)/2
    Jet j0 = zeta_jet(ComplexPoint(0.0, 0.0), 1);
    CHECK(j0.derivative_value(1).real() == Approx(kZetaPrime0).epsilon(1e-11));

    Jet j2 = zeta_jet(ComplexPoint(2.0, 0.0), 2);
    CHECK(std::abs(j2.derivative_value(1) - kZetaPrime2) < 1e-11);
    CHECK(std::abs(j2.derivative_value(2) - kZetaSecond2) < 1e-10);

    // coeff 0 consistency with the scalar evaluator
    PrecisionConfig cfg;
    Jet j3 = zeta_jet(ComplexPoint(3.0, 0.0), 0, cfg);
    CHECK(std::abs(j3.value() - zeta_auto(ComplexPoint(3.0, 0.0), cfg)) <= 10.0 * cfg.target_eps);
}

TEST_CASE("zeta_jet pole proximity guard") {
    CHECK_THROWS_AS(zeta_jet(ComplexPoint(1.05, 0.0), 1), PoleProximity);
    CHECK_NOTHROW(zeta_jet(ComplexPoint(1.4, 0.0), 1));
}

TEST_CASE("zeta_jet_split agrees with zeta_jet away from the pole") {
    ComplexPoint s(0.4, 12.0);
    Jet a = zeta_jet(s, 3);
    Jet b = zeta_jet_split(s, 3);
    for (int k = 0; k <= 3; ++k) CHECK(std::abs(a[k] - b[k]) < 1e-11);
}

TEST_CASE("zeta_jet_split is accurate near the pole") {
    // mpmath: zeta and zeta' at 1 + 0.02i
    const Complex kZetaNearPole(0.577217602989673923397123264704,
                                -49.9985436803519006863363017987);
    const Complex kZetaPrimeNearPole(2500.07281625624516782980238245,
                                     -0.000193810364357234089908331029136);
    ComplexPoint s(1.0, 0.02);
    Jet j = zeta_jet_split(s, 1);
    CHECK(std::abs(j[0] - kZetaNearPole) < 1e-10 * std::abs(kZetaNearPole));
    CHECK(std::abs(j.derivative_value(1) - kZetaPrimeNearPole) <
          1e-10 * std::abs(kZetaPrimeNearPole));
}

TEST_CASE("functional equation closure on the strip") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> ure(-0.45, 1.45), uim(5.0, 50.0);
    for (int i = 0; i < 40; ++i) {
        ComplexPoint s(ure(rng), uim(rng));
        Complex lhs = zeta_auto(s);
        Complex rhs = chi(s) * zeta_auto(ComplexPoint(1.0 - s.re, -s.im));
        CHECK(std::abs(lhs - rhs) <= 1e-9 * std::abs(lhs));
    }
}

TEST_CASE("Dirichlet dominance for large sigma") {
    for (double sigma : {10.0, 15.0, 25.0}) {
        for (double t : {0.0, 31.4}) {
            ComplexPoint s(sigma, t);
            Complex z = zeta_auto(s);
            Complex two = std::exp(-s.value() * std::numbers::ln2);
            CHECK(std::abs(z - 1.0 - two) <= 2.0 * std::pow(3.0, -sigma));
        }
    }
}

TEST_CASE("jet derivative vs finite differences of zeta_em") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> ure(-3.0, 4.0), uim(5.0, 60.0);
    const double h = 1e-5;
    for (int i = 0; i < 50; ++i) {
        ComplexPoint s(ure(rng), uim(rng));
        Complex d = zeta_jet(s, 1).derivative_value(1);
        Complex fd = (zeta_auto(ComplexPoint(s.re + h, s.im)) -
                      zeta_auto(ComplexPoint(s.re - h, s.im))) /
                     (2.0 * h);
        CHECK(std::abs(d - fd) <= 1e-6 * std::max(1e-6, std::abs(d)));
    }
}

TEST_CASE("quadrature is spectrally converged: doubling Q is a no-op") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> ure(0.2, 1.3), uim(5.0, 30.0);
    PrecisionConfig cfg;
    for (int i = 0; i < 6; ++i) {
        ComplexPoint s(ure(rng), uim(rng));
        int order = 2 + (i % 2);
        PrecisionConfig dbl = cfg;
        dbl.cauchy_nodes = 2 * std::max(cfg.cauchy_nodes, 8 * order);
        CHECK(std::abs(zeta_jet(s, order, cfg)[order] - zeta_jet(s, order, dbl)[order]) <
              cfg.target_eps);
    }
}
