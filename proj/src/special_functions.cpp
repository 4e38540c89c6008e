#include "zlab/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "zlab/bernoulli.hpp"

namespace zlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLog2Pi = 1.8378770664093454835606594728112353;
constexpr double kLogPi = 1.1447298858494001741434273513530587;

// Shift point for the Stirling/asymptotic series.
constexpr double kAsymptoticRe = 10.0;

bool near_nonpositive_integer(Complex z, double tol = 1e-12) {
    if (std::abs(z.imag()) >= tol) return false;
    double k = std::round(z.real());
    return k <= 0.5 && std::abs(z.real() - k) < tol;
}

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

void check_order(int order, const char* where) {
    if (order < 0 || order > kMaxJetOrder)
        throw DomainViolation(std::string(where) + ": jet order " +
                              std::to_string(order) + " outside [0, " +
                              std::to_string(kMaxJetOrder) + "]");
}

}  // namespace

Complex log_gamma(ComplexPoint s, bool allow_left_halfplane) {
    require_finite(s, "log_gamma");
    Complex z = s.value();
    if (near_nonpositive_integer(z))
        throw PoleError("log_gamma: pole at non-positive integer s");
    if (!allow_left_halfplane && s.re <= 0.0)
        throw DomainViolation("log_gamma: sigma <= 0 with left half-plane disabled");

    Complex shift(0.0);
    while (z.real() < kAsymptoticRe) {
        shift += std::log(z);
        z += 1.0;
    }

    Complex res = (z - 0.5) * std::log(z) - z + 0.5 * kLog2Pi;
    Complex zinv2 = 1.0 / (z * z);
    Complex zpow = 1.0 / z;  // z^{1-2k} for k = 1
    double prev = std::numeric_limits<double>::infinity();
    for (int k = 1; k <= kBernoulliCount; ++k) {
        Complex term = bernoulli_2k_stirling_weight(k) * zpow;
        double mag = std::abs(term);
        if (mag > prev) break;  // asymptotic series started diverging
        res += term;
        if (mag < 1e-16 * std::abs(res)) break;
        prev = mag;
        zpow *= zinv2;
    }
    return res - shift;
}

Jet digamma_jet(ComplexPoint s, int order) {
    require_finite(s, "digamma_jet");
    check_order(order, "digamma_jet");
    Complex z0 = s.value();
    if (near_nonpositive_integer(z0))
        throw PoleError("digamma_jet: pole at non-positive integer s");

    int shifts = 0;
    if (z0.real() < kAsymptoticRe)
        shifts = static_cast<int>(std::ceil(kAsymptoticRe - z0.real()));
    Complex z = z0 + static_cast<double>(shifts);

    // psi^(m)(z) from the termwise-differentiated asymptotic series.
    std::vector<Complex> psi(static_cast<size_t>(order) + 1);
    Complex zinv = 1.0 / z;
    Complex zinv2 = zinv * zinv;
    for (int m = 0; m <= order; ++m) {
        Complex acc;
        if (m == 0) {
            acc = std::log(z) - 0.5 * zinv;
        } else {
            double sgn = (m % 2 == 0) ? 1.0 : -1.0;
            // d^m log z and d^m (-1/(2z))
            acc = -sgn * factorial(m - 1) * std::pow(zinv, m);
            acc -= 0.5 * sgn * factorial(m) * std::pow(zinv, m + 1);
        }
        Complex zpow = std::pow(zinv, 2 + m);  // z^{-2k-m} at k = 1
        double prev = std::numeric_limits<double>::infinity();
        double sgn_m = (m % 2 == 0) ? 1.0 : -1.0;
        for (int k = 1; k <= kBernoulliCount; ++k) {
            double poch = 1.0;  // (2k)(2k+1)...(2k+m-1)
            for (int j = 0; j < m; ++j) poch *= 2.0 * k + j;
            Complex term = (bernoulli_2k(k) / (2.0 * k)) * sgn_m * poch * zpow;
            double mag = std::abs(term);
            if (mag > prev) break;
            acc -= term;
            if (mag < 1e-17 * (std::abs(acc) + 1e-300)) break;
            prev = mag;
            zpow *= zinv2;
        }
        psi[static_cast<size_t>(m)] = acc;
    }

    // Undo the shifts: psi^(m)(w) = psi^(m)(w+1) - (-1)^m m! / w^{m+1}.
    for (int j = shifts - 1; j >= 0; --j) {
        Complex w = z0 + static_cast<double>(j);
        Complex winv = 1.0 / w;
        Complex wpow = winv;  // w^{-(m+1)}
        for (int m = 0; m <= order; ++m) {
            double sgn = (m % 2 == 0) ? 1.0 : -1.0;
            psi[static_cast<size_t>(m)] -= sgn * factorial(m) * wpow;
            wpow *= winv;
        }
    }

    std::vector<Complex> coeffs(psi.size());
    for (int m = 0; m <= order; ++m)
        coeffs[static_cast<size_t>(m)] = psi[static_cast<size_t>(m)] / factorial(m);
    Jet out(s, std::move(coeffs));
    if (!out.finite()) throw PrecisionExhausted("digamma_jet: non-finite result");
    return out;
}

Jet tan_jet(ComplexPoint s, int order, const DomainSpec& dom) {
    require_finite(s, "tan_jet");
    check_order(order, "tan_jet");
    dom.validate();

    // Distance to the nearest pole pi/2 + k*pi.
    double k = std::round((s.re - kPi / 2) / kPi);
    double dist = std::min(std::hypot(s.re - (kPi / 2 + k * kPi), s.im),
                           std::hypot(s.re - (kPi / 2 + (k + 1) * kPi), s.im));
    if (dist <= dom.exclusion_radius * kPi / 2)
        throw PoleError("tan_jet: too close to a pole of tan");

    Complex z = s.value();
    Complex t0;
    if (s.im > 19.0) {
        // tan s = i - 2i e^{2is} + O(e^{-4t}); the correction term keeps the
        // e^{-2t} envelope resolvable far below double epsilon of i itself.
        t0 = Complex(0, 1) - Complex(0, 2) * std::exp(Complex(0, 2) * z);
    } else if (s.im < -19.0) {
        t0 = Complex(0, -1) + Complex(0, 2) * std::exp(Complex(0, -2) * z);
    } else {
        t0 = std::tan(z);
    }

    std::vector<Complex> c(static_cast<size_t>(order) + 1);
    c[0] = t0;
    for (int m = 0; m < order; ++m) {
        // (m+1) c_{m+1} = [eps^m] (1 + tan^2)
        Complex conv = (m == 0) ? Complex(1) : Complex(0);
        for (int j = 0; j <= m; ++j) conv += c[static_cast<size_t>(j)] * c[static_cast<size_t>(m - j)];
        c[static_cast<size_t>(m + 1)] = conv / static_cast<double>(m + 1);
    }
    return Jet(s, std::move(c));
}

Complex chi(ComplexPoint s) {
    require_finite(s, "chi");
    Complex z = s.value();
    Complex z1 = (1.0 - z) / 2.0;
    Complex z2 = z / 2.0;
    if (near_nonpositive_integer(z1))
        throw PoleError("chi: Gamma((1-s)/2) pole");
    if (near_nonpositive_integer(z2))
        throw PoleError("chi: Gamma(s/2) pole");
    return std::exp((z - 0.5) * kLogPi + log_gamma(z1) - log_gamma(z2));
}

Jet omega_jet(ComplexPoint s, int order, const DomainSpec& dom) {
    require_finite(s, "omega_jet");
    check_order(order, "omega_jet");
    dom.validate();
    if (!dom.contains(s))
        throw DomainViolation("omega_jet: s outside D (too close to a pole of omega)");

    if (s.re < 0.25) {
        // omega(1-s) = omega(s); D is symmetric under s -> 1-s.
        ComplexPoint refl(1.0 - s.re, -s.im);
        Jet w = omega_jet(refl, order, dom).reflected_argument();
        return Jet(s, w.coeffs());
    }

    Jet tj = tan_jet(ComplexPoint(Complex(kPi / 2) * s.value()), order, dom);
    Jet scaled = tj.scaled_argument(kPi / 2) * Complex(kPi / 2);
    Jet om = scaled - digamma_jet(s, order);
    om += Complex(kLog2Pi);
    return Jet(s, om.coeffs());
}

Jet log_h_jet(ComplexPoint s, int order) {
    require_finite(s, "log_h_jet");
    check_order(order, "log_h_jet");
    Complex z2 = s.value() / 2.0;
    if (near_nonpositive_integer(z2))
        throw PoleError("log_h_jet: Gamma(s/2) pole");

    std::vector<Complex> lg(static_cast<size_t>(order) + 1);
    lg[0] = log_gamma(ComplexPoint(z2));
    if (order >= 1) {
        Jet psi = digamma_jet(ComplexPoint(z2), order - 1);
        for (int m = 0; m < order; ++m)
            lg[static_cast<size_t>(m + 1)] = psi[m] / static_cast<double>(m + 1);
    }
    Jet lgamma_half = Jet(s, std::move(lg)).scaled_argument(0.5);

    Jet out = lgamma_half;
    out -= Complex(0.5 * kLogPi) * s.value();
    if (order >= 1) out.at(1) -= 0.5 * kLogPi;
    return out;
}

Jet theta_jet(double t, int order) {
    if (!(t > 0.0) || !std::isfinite(t))
        throw DomainViolation("theta_jet: requires t > 0");
    check_order(order, "theta_jet");

    // theta(t) = Im log h(1/2 + it); expand in the real variable t.
    Jet g = log_h_jet(ComplexPoint(0.5, t), order).scaled_argument(Complex(0, 1));
    std::vector<Complex> c(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) c[static_cast<size_t>(k)] = Complex(g[k].imag(), 0.0);
    return Jet(ComplexPoint(t, 0.0), std::move(c));
}

}  // namespace zlab
