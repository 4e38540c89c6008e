#include "zlab/hardy.hpp"

#include <cmath>

#include "zlab/special_functions.hpp"

namespace zlab {

namespace {

void check_family_order(int n, const char* where) {
    if (n < 0 || n > kMaxFamilyOrder)
        throw DomainViolation(std::string(where) + ": family order " + std::to_string(n) +
                              " outside [0, " + std::to_string(kMaxFamilyOrder) + "]");
}

void check_in_domain(ComplexPoint s, const DomainSpec& dom, const char* where) {
    dom.validate();
    if (!dom.contains(s))
        throw DomainViolation(std::string(where) + ": s outside D (within " +
                              std::to_string(dom.exclusion_radius) + " of an excluded point)");
}

Complex i_power(int n) {
    switch (((n % 4) + 4) % 4) {
        case 0: return Complex(1, 0);
        case 1: return Complex(0, 1);
        case 2: return Complex(-1, 0);
        default: return Complex(0, -1);
    }
}

double h_denominator_floor(ComplexPoint s, int n) {
    return 1e-12 * std::pow(std::max(1.0, std::log(s.abs())), n);
}

ZEval rotate_to_real(int n, Complex f, double theta) {
    Complex w = i_power(n) * f * std::polar(1.0, theta);
    ZEval out{w.real(), w.imag()};
    return out;
}

}  // namespace

Jet f_jet(int n, ComplexPoint s, int order, const PrecisionConfig& cfg, const DomainSpec& dom) {
    require_finite(s, "f_jet");
    check_family_order(n, "f_jet");
    check_in_domain(s, dom, "f_jet");
    int seed = n + order;
    if (seed > kMaxJetOrder)
        throw DomainViolation("f_jet: n + order exceeds the supported jet depth");

    Jet f = zeta_jet_split(s, seed, cfg);
    if (n == 0) return f;
    Jet om = omega_jet(s, seed, dom);
    for (int m = 0; m < n; ++m)
        f = f.derivative() - 0.5 * (om * f);
    return f;
}

Jet h_jet(int n, ComplexPoint s, int order, const DomainSpec& dom) {
    require_finite(s, "h_jet");
    check_family_order(n, "h_jet");
    check_in_domain(s, dom, "h_jet");
    int seed = n + order;
    if (seed > kMaxJetOrder)
        throw DomainViolation("h_jet: n + order exceeds the supported jet depth");

    Jet h = Jet::constant(s, Complex(1.0), seed);
    if (n == 0) return h;
    Jet om = omega_jet(s, seed, dom);
    for (int m = 0; m < n; ++m)
        h = h.derivative() - 0.5 * (om * h);
    return h;
}

CoeffTable a_coeffs(int n, ComplexPoint s, const PrecisionConfig& cfg, const DomainSpec& dom) {
    (void)cfg;
    require_finite(s, "a_coeffs");
    check_family_order(n, "a_coeffs");
    check_in_domain(s, dom, "a_coeffs");

    std::vector<Jet> a{Jet::constant(s, Complex(1.0), n)};
    if (n >= 1) {
        Jet om = omega_jet(s, n, dom);
        for (int m = 0; m < n; ++m) {
            std::vector<Jet> next;
            next.reserve(a.size() + 1);
            int new_order = n - m - 1;
            for (int k = 0; k <= m + 1; ++k) {
                Jet acc = Jet::constant(s, Complex(0.0), new_order);
                if (k <= m) acc += a[static_cast<size_t>(k)].derivative() -
                                   0.5 * (om * a[static_cast<size_t>(k)]);
                if (k >= 1) acc += a[static_cast<size_t>(k - 1)];
                next.push_back(acc.truncated(new_order));
            }
            a = std::move(next);
        }
    }

    CoeffTable table;
    table.n = n;
    table.values.reserve(a.size());
    for (const Jet& j : a) table.values.push_back(j.value());
    return table;
}

Complex g_value(int n, ComplexPoint s, const PrecisionConfig& cfg, const DomainSpec& dom) {
    Complex f = f_jet(n, s, 0, cfg, dom).value();
    Complex h = h_jet(n, s, 0, dom).value();
    if (std::abs(h) <= h_denominator_floor(s, n))
        throw NearZeroDenominator("g_value: |h_" + std::to_string(n) +
                                  "| below threshold (near a zero of h_n)");
    return f / h;
}

Jet g_jet(int n, ComplexPoint s, int order, const PrecisionConfig& cfg, const DomainSpec& dom) {
    Jet f = f_jet(n, s, order, cfg, dom);
    Jet h = h_jet(n, s, order, dom);
    if (std::abs(h.value()) <= h_denominator_floor(s, n))
        throw NearZeroDenominator("g_jet: |h_" + std::to_string(n) + "| below threshold");
    return f / h;
}

ZEval z_derivative_checked(int n, double t, const PrecisionConfig& cfg) {
    if (!(t >= 5.0))
        throw DomainViolation("z_derivative: requires t >= 5");
    ZEval out = detail::z_eval_unguarded(n, t, cfg);
    if (std::abs(out.im_residual) > 1e-8 * (1.0 + std::abs(out.value)))
        throw RealityCheckFailed("z_derivative: imaginary residual " +
                                 std::to_string(out.im_residual) + " at t = " +
                                 std::to_string(t));
    return out;
}

double z_derivative(int n, double t, const PrecisionConfig& cfg) {
    return z_derivative_checked(n, t, cfg).value;
}

std::pair<ZEval, ZEval> z_pair(int n, double t, const PrecisionConfig& cfg) {
    if (!(t >= 5.0))
        throw DomainViolation("z_pair: requires t >= 5");
    ComplexPoint s(0.5, t);
    Jet f = f_jet(n, s, 1, cfg);
    double theta = theta_jet(t, 0).value().real();
    Complex omega0 = omega_jet(s, 0).value();
    Complex fn = f.value();
    Complex fn1 = f.derivative_value(1) - 0.5 * omega0 * fn;
    ZEval a = rotate_to_real(n, fn, theta);
    ZEval b = rotate_to_real(n + 1, fn1, theta);
    for (const ZEval* e : {&a, &b})
        if (std::abs(e->im_residual) > 1e-8 * (1.0 + std::abs(e->value)))
            throw RealityCheckFailed("z_pair: imaginary residual too large at t = " +
                                     std::to_string(t));
    return {a, b};
}

double ratio_identity_residual(int n, double t, const PrecisionConfig& cfg) {
    if (!(t >= 10.0))
        throw DomainViolation("ratio_identity_residual: requires t >= 10");
    check_family_order(n + 1, "ratio_identity_residual");

    auto [zn, zn1] = z_pair(n, t, cfg);
    if (std::abs(zn.value) < 1e-8 * (1.0 + std::abs(zn1.value)))
        throw NearZeroDenominator("ratio_identity_residual: Z^(n)(t) too close to zero");
    double lhs = zn1.value / zn.value;

    ComplexPoint s(0.5, t);
    Jet f = f_jet(n, s, 1, cfg);
    Jet h = h_jet(n, s, 1);
    if (std::abs(h.value()) <= h_denominator_floor(s, n))
        throw NearZeroDenominator("ratio_identity_residual: h_n near zero");
    Jet g = f / h;

    Complex g_ratio = g[1] / g[0];
    Complex hn_ratio = h[1] / h[0];
    Complex hh = log_h_jet(s, 1)[1];  // h'/h
    double f_ratio = (Complex(0, 1) * hh).real();  // F'(t)/F(t)

    Complex rhs = Complex(0, 1) * (hh + g_ratio) + Complex(0, 1) * hn_ratio - f_ratio;
    return std::abs(Complex(lhs) - rhs) / (1.0 + std::abs(lhs));
}

namespace detail {

Complex family_value(const FamilyId& id, ComplexPoint s, const PrecisionConfig& cfg,
                     const DomainSpec& dom) {
    id.validate();
    switch (id.kind) {
        case FamilyKind::F: return f_jet(id.n, s, 0, cfg, dom).value();
        case FamilyKind::H: return h_jet(id.n, s, 0, dom).value();
        case FamilyKind::G: return g_value(id.n, s, cfg, dom);
    }
    throw DomainViolation("family_value: unknown family kind");
}

ZEval z_eval_unguarded(int n, double t, const PrecisionConfig& cfg) {
    check_family_order(n, "z_derivative");
    if (!(t >= 0.0) || !std::isfinite(t))
        throw DomainViolation("z_derivative: requires finite t >= 0");
    ComplexPoint s(0.5, t);
    Complex fn = f_jet(n, s, 0, cfg).value();
    double theta = t > 0.0 ? theta_jet(t, 0).value().real() : 0.0;
    return rotate_to_real(n, fn, theta);
}

}  // namespace detail

}  // namespace zlab
