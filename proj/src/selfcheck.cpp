#include "zlab/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "zlab/hardy.hpp"
#include "zlab/special_functions.hpp"
#include "zlab/zeros.hpp"

namespace zlab {

namespace {

struct Sampler {
    std::mt19937_64 rng;
    explicit Sampler(std::uint64_t seed) : rng(seed) {}

    double uniform(double lo, double hi) {
        return std::uniform_real_distribution<double>(lo, hi)(rng);
    }

    int uniform_int(int lo, int hi) {
        return std::uniform_int_distribution<int>(lo, hi)(rng);
    }

    ComplexPoint in_domain(double re_lo, double re_hi, double im_lo, double im_hi,
                           const DomainSpec& dom, double abs_cap = 0.0) {
        for (int tries = 0; tries < 10000; ++tries) {
            ComplexPoint s(uniform(re_lo, re_hi), uniform(im_lo, im_hi));
            if (!dom.contains(s)) continue;
            if (abs_cap > 0.0 && s.abs() > abs_cap) continue;
            return s;
        }
        throw DomainViolation("Sampler: could not draw a point in D");
    }
};

CheckRow make_row(std::string name, int samples, double max_res, double tol,
                  std::string note = {}) {
    CheckRow row;
    row.name = std::move(name);
    row.samples = samples;
    row.max_residual = max_res;
    row.tolerance = tol;
    row.pass = (tol <= 0.0) || (max_res <= tol);
    row.note = std::move(note);
    return row;
}

double rel_diff(Complex a, Complex b) {
    return std::abs(a - b) / std::max(1e-300, std::abs(b));
}

CheckRow check_ome2_reflection(Sampler& smp, const DomainSpec& dom) {
    const int kSamples = 1000;
    double worst = 0.0;
    for (int i = 0; i < kSamples; ++i) {
        ComplexPoint s = smp.in_domain(-40.0, 41.0, -80.0, 80.0, dom, 100.0);
        ComplexPoint r(1.0 - s.re, -s.im);
        worst = std::max(worst,
                         std::abs(omega_jet(s, 0, dom).value() - omega_jet(r, 0, dom).value()));
    }
    return make_row("ome2_reflection", kSamples, worst, 1e-9);
}

CheckRow check_kernel_jet_fd(Sampler& smp, const DomainSpec& dom) {
    const double h = 1e-5;
    double worst = 0.0;
    int count = 0;
    auto fd_check = [&](auto&& jet1, auto&& value) {
        Complex d = jet1();
        Complex fd = value(h) - value(-h);
        fd /= 2.0 * h;
        worst = std::max(worst, std::abs(d - fd) / std::max(1.0, std::abs(d)));
        ++count;
    };
    for (int i = 0; i < 8; ++i) {
        ComplexPoint s = smp.in_domain(0.3, 4.0, 2.0, 40.0, dom);
        fd_check([&] { return digamma_jet(s, 1)[1]; },
                 [&](double e) { return digamma_jet(ComplexPoint(s.re + e, s.im), 0).value(); });
        fd_check([&] { return omega_jet(s, 1, dom)[1]; },
                 [&](double e) { return omega_jet(ComplexPoint(s.re + e, s.im), 0, dom).value(); });
        fd_check([&] { return tan_jet(s, 1, dom)[1]; },
                 [&](double e) { return tan_jet(ComplexPoint(s.re + e, s.im), 0, dom).value(); });
        double t = smp.uniform(5.0, 60.0);
        fd_check([&] { return theta_jet(t, 1)[1]; },
                 [&](double e) { return theta_jet(t + e, 0).value(); });
    }
    return make_row("kernel_jet_vs_fd", count, worst, 1e-6);
}

CheckRow check_omega_envelope(const DomainSpec& dom) {
    double worst = 0.0;
    for (double t : {1e2, 1e3, 1e4}) {
        ComplexPoint s(2.0, t);
        Jet om = omega_jet(s, 1, dom);
        double c = std::abs(om.value() + std::log(s.abs())) / 6.0;
        double d = std::abs(om.derivative_value(1)) / 2.0;
        worst = std::max({worst, c, d});
    }
    return make_row("omega_envelope", 3, worst, 1.0, "residuals scaled by their bounds");
}

CheckRow check_chi_functional_equation(const DomainSpec& dom, const PrecisionConfig& cfg) {
    double worst = 0.0;
    int used = 0;
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            ComplexPoint s(-3.0 + 7.0 * i / 9.0, 5.0 + 45.0 * j / 9.0);
            if (!dom.contains(s)) continue;
            Complex lhs = zeta_auto(s, cfg);
            Complex rhs = chi(s) * zeta_auto(ComplexPoint(1.0 - s.re, -s.im), cfg);
            worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
            ++used;
        }
    }
    return make_row("chi_functional_equation", used, worst, 1e-9);
}

CheckRow check_zeta_fe_closure(Sampler& smp, const PrecisionConfig& cfg) {
    double worst = 0.0;
    const int kSamples = 50;
    for (int i = 0; i < kSamples; ++i) {
        // both s and 1-s on the direct Euler-Maclaurin path
        ComplexPoint s(smp.uniform(-0.45, 1.45), smp.uniform(5.0, 50.0));
        Complex lhs = zeta_auto(s, cfg);
        Complex rhs = chi(s) * zeta_auto(ComplexPoint(1.0 - s.re, -s.im), cfg);
        worst = std::max(worst, std::abs(lhs - rhs) / std::abs(lhs));
    }
    return make_row("zeta_fe_closure", kSamples, worst, 1e-9);
}

CheckRow check_dirichlet_dominance(const PrecisionConfig& cfg) {
    double worst = 0.0;
    int count = 0;
    for (double sigma : {10.0, 12.0, 20.0, 29.0}) {
        for (double t : {0.0, 7.0, 100.0}) {
            ComplexPoint s(sigma, t);
            Complex z = zeta_auto(s, cfg);
            Complex two = std::exp(-s.value() * std::log(2.0));
            double res = std::abs(z - 1.0 - two) / (2.0 * std::pow(3.0, -sigma));
            worst = std::max(worst, res);
            ++count;
        }
    }
    return make_row("dirichlet_dominance", count, worst, 1.0, "|zeta-1-2^-s| / (2*3^-sigma)");
}

CheckRow check_zeta_jet_vs_fd(Sampler& smp, const PrecisionConfig& cfg) {
    double worst = 0.0;
    const int kSamples = 50;
    const double h = 1e-5;
    for (int i = 0; i < kSamples; ++i) {
        ComplexPoint s(smp.uniform(-3.0, 4.0), smp.uniform(5.0, 60.0));
        Complex d = zeta_jet(s, 1, cfg).derivative_value(1);
        Complex fd = (zeta_auto(ComplexPoint(s.re + h, s.im), cfg) -
                      zeta_auto(ComplexPoint(s.re - h, s.im), cfg)) /
                     (2.0 * h);
        worst = std::max(worst, std::abs(d - fd) / std::max(1e-6, std::abs(d)));
    }
    return make_row("zeta_jet_vs_fd", kSamples, worst, 1e-6);
}

CheckRow check_quadrature_convergence(Sampler& smp, const PrecisionConfig& cfg) {
    double worst = 0.0;
    const int kSamples = 6;
    for (int i = 0; i < kSamples; ++i) {
        ComplexPoint s(smp.uniform(0.2, 1.3), smp.uniform(5.0, 30.0));
        int order = 2 + (i % 2);
        PrecisionConfig doubled = cfg;
        doubled.cauchy_nodes = 2 * std::max(cfg.cauchy_nodes, 8 * order);
        Complex a = zeta_jet(s, order, cfg)[order];
        Complex b = zeta_jet(s, order, doubled)[order];
        worst = std::max(worst, std::abs(a - b));
    }
    return make_row("quadrature_convergence", kSamples, worst, cfg.target_eps);
}

CheckRow check_prop22(Sampler& smp, const DomainSpec& dom, const PrecisionConfig& cfg,
                      int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        int n = smp.uniform_int(0, 4);
        ComplexPoint s = smp.in_domain(-3.0, 4.0, 10.0, 100.0, dom);
        ComplexPoint refl(1.0 - s.re, -s.im);
        Complex lhs = chi(s) * f_jet(n, refl, 0, cfg, dom).value();
        Complex rhs = (n % 2 == 0 ? 1.0 : -1.0) * f_jet(n, s, 0, cfg, dom).value();
        worst = std::max(worst, rel_diff(lhs, rhs));
    }
    return make_row("prop22_functional_equation", samples, worst, 1e-8);
}

CheckRow check_z_reality(Sampler& smp, const PrecisionConfig& cfg, int samples) {
    double worst = 0.0;
    for (int i = 0; i < samples; ++i) {
        int n = smp.uniform_int(0, 4);
        double t = smp.uniform(10.0, 2000.0);
        ZEval z = z_derivative_checked(n, t, cfg);
        worst = std::max(worst, std::abs(z.im_residual) / (1e-8 * (1.0 + std::abs(z.value))));
    }
    return make_row("z_reality", samples, worst, 1.0, "|Im| / (1e-8 (1+|Z|))");
}

CheckRow check_recursion_vs_fd(Sampler& smp, const DomainSpec& dom, const PrecisionConfig& cfg) {
    double worst = 0.0;
    const double h = 1e-5;
    const int kSamples = 8;
    for (int i = 0; i < kSamples; ++i) {
        int n = smp.uniform_int(0, 2);
        ComplexPoint s = smp.in_domain(-1.0, 3.0, 8.0, 60.0, dom);
        Complex next = f_jet(n + 1, s, 0, cfg, dom).value();
        Complex fp = (f_jet(n, ComplexPoint(s.re + h, s.im), 0, cfg, dom).value() -
                      f_jet(n, ComplexPoint(s.re - h, s.im), 0, cfg, dom).value()) /
                     (2.0 * h);
        Complex fd = fp - 0.5 * omega_jet(s, 0, dom).value() * f_jet(n, s, 0, cfg, dom).value();
        worst = std::max(worst, rel_diff(fd, next));
    }
    return make_row("recursion_vs_fd", kSamples, worst, 1e-5);
}

CheckRow check_a_n0_equals_h_n(Sampler& smp, const DomainSpec& dom, const PrecisionConfig& cfg) {
    double worst = 0.0;
    const int kSamples = 10;
    for (int i = 0; i < kSamples; ++i) {
        int n = smp.uniform_int(0, 5);
        ComplexPoint s = smp.in_domain(-2.0, 3.5, 5.0, 80.0, dom);
        CoeffTable tab = a_coeffs(n, s, cfg, dom);
        Complex hn = h_jet(n, s, 0, dom).value();
        worst = std::max(worst, rel_diff(tab.values[0], hn));
    }
    return make_row("a_n0_equals_h_n", kSamples, worst, 1e-12);
}

CheckRow check_g_large_sigma(const PrecisionConfig& cfg, const DomainSpec& dom) {
    double worst = 0.0;
    int count = 0;
    for (int n = 0; n <= 3; ++n) {
        for (double t : {10.0, 40.0, 90.0}) {
            Complex g = g_value(n, ComplexPoint(30.0, t), cfg, dom);
            worst = std::max(worst, std::abs(g - 1.0));
            ++count;
        }
    }
    return make_row("g_large_sigma", count, worst, 1e-6);
}

CheckRow check_x6_identity(Sampler& smp, const PrecisionConfig& cfg) {
    double worst = 0.0;
    int used = 0;
    for (int i = 0; i < 12; ++i) {
        int n = i % 4;
        double t = smp.uniform(30.0, 300.0);
        try {
            worst = std::max(worst, ratio_identity_residual(n, t, cfg) / (n <= 1 ? 1e-7 : 1e-6));
            ++used;
        } catch (const NearZeroDenominator&) {
            // sampled too close to a zero of Z^(n); skip
        }
    }
    return make_row("x6_ratio_identity", used, worst, 1.0, "residual / tolerance(n)");
}

CheckRow check_census_consistency(const PrecisionConfig& cfg, const DomainSpec& dom) {
    FamilyId f1{FamilyKind::F, 1};
    Rectangle whole{0.6, 1.4, -0.4, 0.4};
    Rectangle left{0.6, 0.75, -0.4, 0.4};
    Rectangle right{0.75, 1.4, -0.4, 0.4};
    int w = winding_count(f1, whole, 64, cfg, dom);
    int sum = winding_count(f1, left, 64, cfg, dom) + winding_count(f1, right, 64, cfg, dom);
    return make_row("census_consistency", 3, std::abs(w - sum), 0.5,
                    "winding(whole) - winding(parts)");
}

CheckRow check_refine_idempotence(const PrecisionConfig& cfg) {
    std::vector<ZeroRecord> zeros = scan_zeros(0, 13.0, 22.0, cfg);
    double worst = 0.0;
    for (const ZeroRecord& z : zeros) {
        std::vector<ZeroRecord> again =
            scan_zeros(0, std::max(10.0, z.t - 0.2), z.t + 0.2, cfg);
        for (const ZeroRecord& r : again)
            if (std::abs(r.t - z.t) < 0.1)
                worst = std::max(worst, std::abs(r.t - z.t) / std::max(z.bracket_width, 1e-12));
    }
    return make_row("refine_idempotence", static_cast<int>(zeros.size()), worst, 1.0,
                    "|t' - t| / bracket_width");
}

CheckRow check_count_monotonicity(const PrecisionConfig& cfg, int threads) {
    long a = count_zeros(0, 40.0, cfg, threads).observed;
    long b = count_zeros(0, 60.0, cfg, threads).observed;
    long c = count_zeros(0, 80.0, cfg, threads).observed;
    bool ok = a <= b && b <= c;
    return make_row("count_monotonicity", 3, ok ? 0.0 : 1.0, 0.5, "N(40) <= N(60) <= N(80)");
}

CheckRow check_interlace_counts(const PrecisionConfig& cfg, int threads) {
    InterlaceReport rep = interlace_check(0, 30.0, 80.0, cfg, threads);
    long base = static_cast<long>(rep.gaps.size()) + 1;
    long upper = static_cast<long>(scan_zeros(1, 30.0, 80.0, cfg, threads).size());
    double res;
    if (!rep.violations.empty() || !rep.ambiguous.empty())
        res = 100.0;
    else
        res = static_cast<double>(std::abs(base - upper));
    return make_row("interlace_implies_counts", static_cast<int>(base + upper), res, 1.0,
                    "| #Z - #Z' | on a clean interval");
}

CheckRow check_g_growth_audit(const PrecisionConfig& cfg, const DomainSpec& dom) {
    // Lemma-style growth audit: reported, not asserted.
    double worst = 0.0;
    for (int n : {1, 2}) {
        for (double t = 50.0; t <= 450.0; t += 50.0) {
            try {
                Complex g = g_value(n, ComplexPoint(0.5, t), cfg, dom);
                worst = std::max(worst, std::log(std::abs(g)) / std::log(t));
            } catch (const NearZeroDenominator&) {
            }
        }
    }
    return make_row("g_growth_audit", 18, worst, 0.0,
                    "empirical exponent max log|g_n(1/2+it)|/log t (informational)");
}

}  // namespace

std::vector<CheckRow> run_selfcheck(const RunConfig& run) {
    run.validate();
    Sampler smp(run.seed);
    DomainSpec dom = run.domain();
    const PrecisionConfig& cfg = run.precision;
    int threads = run.parallelism;

    std::vector<CheckRow> rows;
    rows.push_back(check_ome2_reflection(smp, dom));
    rows.push_back(check_kernel_jet_fd(smp, dom));
    rows.push_back(check_omega_envelope(dom));
    rows.push_back(check_chi_functional_equation(dom, cfg));
    rows.push_back(check_zeta_fe_closure(smp, cfg));
    rows.push_back(check_dirichlet_dominance(cfg));
    rows.push_back(check_zeta_jet_vs_fd(smp, cfg));
    rows.push_back(check_quadrature_convergence(smp, cfg));
    rows.push_back(check_prop22(smp, dom, cfg, 40));
    rows.push_back(check_z_reality(smp, cfg, 60));
    rows.push_back(check_recursion_vs_fd(smp, dom, cfg));
    rows.push_back(check_a_n0_equals_h_n(smp, dom, cfg));
    rows.push_back(check_g_large_sigma(cfg, dom));
    rows.push_back(check_x6_identity(smp, cfg));
    rows.push_back(check_census_consistency(cfg, dom));
    rows.push_back(check_refine_idempotence(cfg));
    rows.push_back(check_count_monotonicity(cfg, threads));
    rows.push_back(check_interlace_counts(cfg, threads));
    rows.push_back(check_g_growth_audit(cfg, dom));
    return rows;
}

Table selfcheck_table(const std::vector<CheckRow>& rows) {
    Table t;
    t.columns = {"check", "samples", "max_residual", "tolerance", "pass", "note"};
    for (const CheckRow& r : rows)
        t.rows.push_back({r.name, std::to_string(r.samples), format_number(r.max_residual),
                          r.tolerance <= 0.0 ? "-" : format_number(r.tolerance),
                          r.pass ? "true" : "false", r.note});
    return t;
}

}  // namespace zlab
