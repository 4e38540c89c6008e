#include <cmath>
#include <random>

#include "doctest.h"
#include "zlab/hardy.hpp"
#include "zlab/special_functions.hpp"

using namespace zlab;
using doctest::Approx;

namespace {

// mpmath references (tests/fixtures/generate_fixtures.py)
constexpr double kGamma1 = 14.134725141734693790457251983562470271;
const Complex kF1At2(-2.1014153750571275984326221530951225120, 0.0);
constexpr double kZ20 = 1.1478424121851972776350340871796641170;
constexpr double kZp20 = -1.0390019047433431151081141078344535891;
constexpr double kZpGamma1 = 0.79316043335650611601389756527435211415;

double rel(Complex a, Complex b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("f_0 is the zeta jet") {
    ComplexPoint s(2.5, 11.0);
    Jet f = f_jet(0, s, 2);
    Jet z = zeta_jet(s, 2);
    for (int k = 0; k <= 2; ++k) CHECK(std::abs(f[k] - z[k]) < 1e-11);
}

TEST_CASE("f_1(2) against the oracle composition") {
    Complex f1 = f_jet(1, ComplexPoint(2.0, 0.0), 0).value();
    CHECK(rel(f1, kF1At2) < 1e-11);
}

TEST_CASE("functional equation of f_n (two spot cases)") {
    ComplexPoint s(0.3, 20.0);
    ComplexPoint refl(0.7, -20.0);
    for (int n : {2, 3}) {
        Complex lhs = chi(s) * f_jet(n, refl, 0).value();
        Complex rhs = (n % 2 == 0 ? 1.0 : -1.0) * f_jet(n, s, 0).value();
        CHECK(rel(lhs, rhs) < 1e-8);
    }
}

TEST_CASE("functional equation of f_n at random strip points") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> ure(-3.0, 4.0), uim(10.0, 100.0);
    DomainSpec dom;
    int done = 0;
    while (done < 60) {
        ComplexPoint s(ure(rng), uim(rng));
        if (!dom.contains(s)) continue;
        int n = done % 5;
        Complex lhs = chi(s) * f_jet(n, ComplexPoint(1.0 - s.re, -s.im), 0).value();
        Complex rhs = (n % 2 == 0 ? 1.0 : -1.0) * f_jet(n, s, 0).value();
        CHECK(rel(lhs, rhs) < 1e-8);
        ++done;
    }
}

TEST_CASE("h_1 = -omega/2 as a jet identity") {
    ComplexPoint s(2.2, 8.0);
    Jet h1 = h_jet(1, s, 3);
    Jet om = omega_jet(s, 3);
    for (int k = 0; k <= 3; ++k)
        CHECK(std::abs(h1[k] + 0.5 * om[k]) < 1e-13 * (1.0 + std::abs(om[k])));
}

TEST_CASE("h_2 = -omega'/2 + omega^2/4 from an independent expansion") {
    ComplexPoint s(4.0, 9.0);
    Complex h2 = h_jet(2, s, 0).value();
    Jet om = omega_jet(s, 1);
    Complex expected = -0.5 * om.derivative_value(1) + 0.25 * om.value() * om.value();
    CHECK(rel(h2, expected) < 1e-13);
}

TEST_CASE("a-coefficient table basics") {
    ComplexPoint s(2.7, 14.0);
    CoeffTable a1 = a_coeffs(1, s);
    Complex om = omega_jet(s, 0).value();
    CHECK(std::abs(a1.values[0] + 0.5 * om) < 1e-13 * (1.0 + std::abs(om)));
    CHECK(std::abs(a1.values[1] - Complex(1.0)) < 1e-14);

    // a_{n,0} = h_n for n <= 5
    for (int n = 0; n <= 5; ++n) {
        CoeffTable a = a_coeffs(n, s);
        Complex hn = h_jet(n, s, 0).value();
        CHECK(std::abs(a.values[0] - hn) <= 1e-12 * (1.0 + std::abs(hn)));
    }
}

TEST_CASE("a-coefficients reconstruct f_n") {
    ComplexPoint s(5.2, 40.0);
    int n = 3;
    CoeffTable a = a_coeffs(n, s);
    Jet z = zeta_jet(s, n);
    Complex acc(0.0);
    for (int k = 0; k <= n; ++k) acc += a.values[static_cast<size_t>(k)] * z.derivative_value(k);
    Complex f = f_jet(n, s, 0).value();
    CHECK(std::abs(acc - f) <= 1e-8 * std::abs(f));
}

TEST_CASE("a_{2,1} growth bound") {
    ComplexPoint s(2.0, 100.0);
    CoeffTable a = a_coeffs(2, s);
    CHECK(std::abs(a.values[1]) <= 3.0 * std::log(s.abs()));
}

TEST_CASE("g_0 = zeta and the large-sigma envelope") {
    ComplexPoint s(3.0, 21.0);
    CHECK(std::abs(g_value(0, s) - zeta_auto(s)) < 1e-12);

    Complex g2 = g_value(2, ComplexPoint(20.0, 5.0));
    CHECK(std::abs(g2 - 1.0) <= 10.0 * std::pow(2.0, -20.0));
}

TEST_CASE("g near a zero of h_1 raises NearZeroDenominator") {
    // omega has a real zero between 5.9 and 6.0; bisect it down to ~1e-13
    DomainSpec dom;
    double lo = 5.9, hi = 6.0;
    for (int i = 0; i < 60; ++i) {
        double mid = 0.5 * (lo + hi);
        double v = omega_jet(ComplexPoint(mid, 0.0), 0, dom).value().real();
        (v > 0.0 ? hi : lo) = mid;
    }
    ComplexPoint root(0.5 * (lo + hi), 0.0);
    CHECK_THROWS_AS(g_value(1, root), NearZeroDenominator);
}

TEST_CASE("Z matches the direct rotation and the oracle") {
    ZEval z = z_derivative_checked(0, 20.0);
    CHECK(z.value == Approx(kZ20).epsilon(1e-9));

    // definition: Z(t) = Re[e^{i theta} zeta(1/2+it)]
    double theta = theta_jet(20.0, 0).value().real();
    Complex direct = std::polar(1.0, theta) * zeta_auto(ComplexPoint(0.5, 20.0));
    CHECK(std::abs(z.value - direct.real()) < 1e-11);
    CHECK(std::abs(direct.imag()) < 1e-11);
}

TEST_CASE("Z vanishes at the first zeta zero") {
    CHECK(std::abs(z_derivative(0, kGamma1)) <= 1e-7);
}

TEST_CASE("Z' at 20 and at the first zero") {
    CHECK(z_derivative(1, 20.0) == Approx(kZp20).epsilon(1e-8));
    CHECK(z_derivative(1, kGamma1) == Approx(kZpGamma1).epsilon(1e-8));
}

TEST_CASE("g_1 at the first zeta zero is consistent with Z'") {
    // |f_1(1/2 + i gamma_1)| = |Z'(gamma_1)|
    Complex f1 = f_jet(1, ComplexPoint(0.5, kGamma1), 0).value();
    CHECK(std::abs(f1) == Approx(std::abs(kZpGamma1)).epsilon(1e-8));
    Complex g1 = g_value(1, ComplexPoint(0.5, kGamma1));
    Complex h1 = h_jet(1, ComplexPoint(0.5, kGamma1), 0).value();
    CHECK(std::abs(std::abs(g1) - std::abs(kZpGamma1) / std::abs(h1)) < 1e-8);
}

TEST_CASE("Z'' against a central finite difference of Z") {
    const double h = 1e-3, t = 100.0;
    double z2 = z_derivative(2, t);
    double fd = (z_derivative(0, t + h) - 2.0 * z_derivative(0, t) + z_derivative(0, t - h)) /
                (h * h);
    CHECK(std::abs(z2 - fd) <= 1e-4 * std::max(1.0, std::abs(z2)));
}

TEST_CASE("reality of Z^(n) across the scanned heights") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> ut(10.0, 2000.0);
    for (int i = 0; i < 150; ++i) {
        int n = i % 5;
        ZEval z = z_derivative_checked(n, ut(rng));
        CHECK(std::abs(z.im_residual) <= 1e-8 * (1.0 + std::abs(z.value)));
    }
}

TEST_CASE("z_derivative guards") {
    CHECK_THROWS_AS(z_derivative(0, 2.0), DomainViolation);
    CHECK_THROWS_AS(z_derivative(9, 20.0), DomainViolation);
}

TEST_CASE("recursion against finite differences") {
    std::mt19937_64 rng(55);
    std::uniform_real_distribution<double> ure(-1.0, 3.0), uim(8.0, 60.0);
    DomainSpec dom;
    const double h = 1e-5;
    int done = 0;
    while (done < 6) {
        ComplexPoint s(ure(rng), uim(rng));
        if (!dom.contains(s)) continue;
        int n = done % 3;
        Complex next = f_jet(n + 1, s, 0).value();
        Complex fp = (f_jet(n, ComplexPoint(s.re + h, s.im), 0).value() -
                      f_jet(n, ComplexPoint(s.re - h, s.im), 0).value()) /
                     (2.0 * h);
        Complex fd = fp - 0.5 * omega_jet(s, 0).value() * f_jet(n, s, 0).value();
        CHECK(rel(fd, next) < 1e-5);
        ++done;
    }
}

TEST_CASE("ratio identity residuals") {
    CHECK(ratio_identity_residual(1, 50.0) <= 1e-7);
    CHECK(ratio_identity_residual(0, 30.0) <= 1e-7);
    CHECK(ratio_identity_residual(3, 200.0) <= 1e-6);
    CHECK_THROWS_AS(ratio_identity_residual(0, 5.0), DomainViolation);
}
