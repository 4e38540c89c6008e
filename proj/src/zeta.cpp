#include "zlab/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <vector>

#include "zlab/bernoulli.hpp"
#include "zlab/special_functions.hpp"

namespace zlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxCutoff = 20480;        // 10 * 2^11
constexpr double kReflectBelow = -0.5;   // switch to the functional equation
constexpr double kPoleSplitRadius = 0.5; // zeta_jet_split pole handling zone

const std::vector<double>& log_table() {
    static const std::vector<double> table = [] {
        std::vector<double> t(kMaxCutoff + 1, 0.0);
        for (int n = 1; n <= kMaxCutoff; ++n) t[static_cast<size_t>(n)] = std::log(static_cast<double>(n));
        return t;
    }();
    return table;
}

// (e^u - 1) / u, stable near u = 0.
Complex expm1_over(Complex u) {
    if (std::abs(u) < 0.5) {
        Complex acc(1.0), term(1.0);
        for (int k = 2; k <= 24; ++k) {
            term *= u / static_cast<double>(k);
            acc += term;
            if (std::abs(term) < 1e-18) break;
        }
        return acc;
    }
    return (std::exp(u) - 1.0) / u;
}

// |B_{2k}|/(2k)! = 2 zeta(2k)/(2pi)^{2k}; a safe over-estimate usable past
// the stored table, for the first-omitted-term bound.
double bernoulli_weight_bound(int k) {
    return 2.2 * std::pow(kTwoPi, -2.0 * k);
}

struct EmResult {
    Complex value;
    double bound;  // remainder magnitude estimate (absolute)
};

// Direct Euler-Maclaurin evaluation; callers keep sigma >= kReflectBelow.
// With subtract_pole the explicit 1/(s-1) is removed, leaving the entire
// function zeta_reg(s) = zeta(s) - 1/(s-1).
EmResult em_core(Complex s, int M, int K, bool subtract_pole) {
    const std::vector<double>& ln = log_table();
    double sigma = s.real();

    // Dirichlet head, Kahan-compensated.
    Complex sum(0.0), comp(0.0);
    for (int n = 1; n <= M; ++n) {
        Complex term = std::exp(-s * ln[static_cast<size_t>(n)]);
        Complex y = term - comp;
        Complex t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }

    double lnM = ln[static_cast<size_t>(M)];
    Complex Mpow1ms = std::exp((1.0 - s) * lnM);  // M^{1-s}
    Complex Mpowms = std::exp(-s * lnM);          // M^{-s}

    Complex pole_term;
    if (subtract_pole) {
        // (M^{1-s} - 1)/(s-1) = -log(M) * expm1_over((1-s) log M)
        pole_term = -lnM * expm1_over((1.0 - s) * lnM);
    } else {
        pole_term = Mpow1ms / (s - 1.0);
    }

    Complex acc = sum + pole_term - 0.5 * Mpowms;

    // Bernoulli corrections: B_{2k}/(2k)! * s(s+1)...(s+2k-2) * M^{1-s-2k}.
    Complex prod = s;                 // s(s+1)...(s+2k-2), k = 1 gives just s
    Complex mscale = Mpow1ms / static_cast<double>(M) / static_cast<double>(M);
    double minv2 = 1.0 / (static_cast<double>(M) * static_cast<double>(M));
    for (int k = 1; k <= K; ++k) {
        acc += bernoulli_2k_over_factorial(k) * prod * mscale;
        prod *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
        mscale *= minv2;
    }

    // First omitted term times |s+2K+1|/(sigma+2K+1) (Edwards-style bound).
    double bound = std::numeric_limits<double>::infinity();
    if (sigma + 2.0 * K + 1.0 > 0.0) {
        double omitted = bernoulli_weight_bound(K + 1) * std::abs(prod * mscale);
        bound = omitted * std::abs(s + (2.0 * K + 1.0)) / (sigma + 2.0 * K + 1.0);
    }
    return {acc, bound};
}

bool is_exact_negative_even_integer(Complex s) {
    if (s.imag() != 0.0) return false;
    double r = std::round(s.real());
    return s.real() == r && r <= -2.0 && std::fmod(r, 2.0) == 0.0;
}

double remainder_bound_only(Complex s, int M, int K) {
    double sigma = s.real();
    if (sigma + 2.0 * K + 1.0 <= 0.0) return std::numeric_limits<double>::infinity();
    double lnM = std::log(static_cast<double>(M));
    // |s(s+1)...(s+2K)| and M^{-sigma-2K-1}, in logs to dodge overflow.
    double logprod = 0.0;
    for (int j = 0; j <= 2 * K; ++j) logprod += std::log(std::abs(s + static_cast<double>(j)));
    double logterm = std::log(bernoulli_weight_bound(K + 1)) + logprod -
                     (sigma + 2.0 * K + 1.0) * lnM;
    double factor = std::abs(s + (2.0 * K + 1.0)) / (sigma + 2.0 * K + 1.0);
    double lg = logterm + std::log(factor);
    if (lg > 600.0) return std::numeric_limits<double>::infinity();
    return std::exp(lg);
}

}  // namespace

void PrecisionConfig::validate() const {
    if (em_cutoff < 2) throw DomainViolation("PrecisionConfig: em_cutoff must be >= 2");
    if (em_depth < 1 || em_depth > kBernoulliCount)
        throw DomainViolation("PrecisionConfig: em_depth must lie in [1, 30]");
    if (!(cauchy_radius > 0.0 && cauchy_radius <= 0.25))
        throw DomainViolation("PrecisionConfig: cauchy_radius must lie in (0, 0.25]");
    if (cauchy_nodes < 64) throw DomainViolation("PrecisionConfig: cauchy_nodes must be >= 64");
    if (!(target_eps >= 1e-13)) throw DomainViolation("PrecisionConfig: target_eps must be >= 1e-13");
}

Complex zeta_em(ComplexPoint s, const PrecisionConfig& cfg) {
    require_finite(s, "zeta_em");
    cfg.validate();
    Complex z = s.value();
    if (z == Complex(1.0)) throw PoleError("zeta_em: pole at s = 1");
    if (cfg.em_cutoff > kMaxCutoff)
        throw PrecisionExhausted("zeta_em: em_cutoff exceeds supported maximum");

    if (s.re < kReflectBelow) {
        if (is_exact_negative_even_integer(z)) return Complex(0.0);
        ComplexPoint refl(1.0 - s.re, -s.im);
        return chi(s) * zeta_em(refl, cfg);
    }

    EmResult r = em_core(z, cfg.em_cutoff, cfg.em_depth, false);
    if (!(r.bound <= cfg.target_eps * std::max(1.0, std::abs(r.value))))
        throw PrecisionExhausted("zeta_em: remainder bound " + std::to_string(r.bound) +
                                 " exceeds target_eps; raise em_cutoff/em_depth");
    return r.value;
}

PrecisionConfig estimate_em_params(ComplexPoint s, double eps) {
    require_finite(s, "estimate_em_params");
    if (!(eps >= 1e-13)) throw DomainViolation("estimate_em_params: eps must be >= 1e-13");
    Complex z = s.value();
    if (s.re < kReflectBelow) z = Complex(1.0 - s.re, -s.im);

    double mfloor = std::max(10.0, std::abs(s.im) / 2.0);
    for (int M = 10; M <= kMaxCutoff; M *= 2) {
        if (M < mfloor) continue;
        for (int K = 1; K <= kBernoulliCount; ++K) {
            if (remainder_bound_only(z, M, K) < eps) {
                PrecisionConfig cfg;
                cfg.em_cutoff = M;
                cfg.em_depth = K;
                cfg.target_eps = std::max(eps, 1e-13);
                return cfg;
            }
        }
    }
    throw PrecisionExhausted("estimate_em_params: no (M, K_B) within limits meets eps");
}

Complex zeta_auto(ComplexPoint s, const PrecisionConfig& base) {
    PrecisionConfig cfg = estimate_em_params(s, base.target_eps);
    cfg.cauchy_radius = base.cauchy_radius;
    cfg.cauchy_nodes = base.cauchy_nodes;
    cfg.em_cutoff = std::max(cfg.em_cutoff, base.em_cutoff);
    return zeta_em(s, cfg);
}

namespace {

// Tune one (M, K_B) for a whole circle. A circle straddling the reflection
// seam sees both evaluation regimes, so take the worse requirement of the
// direct-side corner and the reflected corner.
PrecisionConfig tune_for_circle(ComplexPoint s, double r, double eps) {
    double lo = s.re - r;
    double hi = s.re + r;
    double tworst = std::abs(s.im) + r;
    PrecisionConfig out;
    out.target_eps = std::max(eps, 1e-13);
    out.em_cutoff = 2;
    out.em_depth = 1;
    auto fold = [&](ComplexPoint p) {
        PrecisionConfig e = estimate_em_params(p, eps);
        out.em_cutoff = std::max(out.em_cutoff, e.em_cutoff);
        out.em_depth = std::max(out.em_depth, e.em_depth);
    };
    if (hi >= kReflectBelow) fold(ComplexPoint(std::max(lo, kReflectBelow), tworst));
    // Reflected nodes land at 1 - sigma, so the circle's highest reflected
    // sigma is the hardest one after reflection.
    if (lo < kReflectBelow) fold(ComplexPoint(std::min(hi, kReflectBelow), tworst));
    return out;
}

// Shared trapezoid-on-circle extraction. eval must be smooth on the circle.
template <typename F>
Jet cauchy_jet(ComplexPoint center, double radius, int order, int nodes, F&& eval) {
    std::vector<Complex> values(static_cast<size_t>(nodes));
    for (int q = 0; q < nodes; ++q) {
        double phi = kTwoPi * q / nodes;
        values[static_cast<size_t>(q)] = eval(center.value() + std::polar(radius, phi));
    }
    std::vector<Complex> coeffs(static_cast<size_t>(order) + 1);
    for (int k = 0; k <= order; ++k) {
        Complex sum(0.0), comp(0.0);
        for (int q = 0; q < nodes; ++q) {
            double phi = -kTwoPi * static_cast<double>(k) * q / nodes;
            Complex term = values[static_cast<size_t>(q)] * std::polar(1.0, phi);
            Complex y = term - comp;
            Complex t = sum + y;
            comp = (t - sum) - y;
            sum = t;
        }
        coeffs[static_cast<size_t>(k)] = sum / (static_cast<double>(nodes) * std::pow(radius, k));
    }
    return Jet(center, std::move(coeffs));
}

}  // namespace

Jet zeta_jet(ComplexPoint s, int order, const PrecisionConfig& cfg) {
    require_finite(s, "zeta_jet");
    cfg.validate();
    if (order < 0 || order > kMaxJetOrder)
        throw DomainViolation("zeta_jet: order outside [0, kMaxJetOrder]");

    double dist1 = std::abs(s.value() - Complex(1.0));
    double r = std::min(cfg.cauchy_radius, dist1 / 2.0);
    if (!(dist1 > r + 0.05))
        throw PoleProximity("zeta_jet: circle would approach the pole at s = 1");

    int nodes = std::max(cfg.cauchy_nodes, 8 * order);
    // One (M, K_B) for the whole circle keeps the node error smooth.
    PrecisionConfig ecfg = tune_for_circle(s, r, cfg.target_eps);
    ecfg.em_cutoff = std::max(ecfg.em_cutoff, cfg.em_cutoff);
    ecfg.em_depth = std::max(ecfg.em_depth, cfg.em_depth);

    return cauchy_jet(s, r, order, nodes,
                      [&](Complex z) { return zeta_em(ComplexPoint(z), ecfg); });
}

Jet zeta_jet_split(ComplexPoint s, int order, const PrecisionConfig& cfg) {
    require_finite(s, "zeta_jet_split");
    cfg.validate();
    Complex z = s.value();
    Complex d = z - Complex(1.0);
    double dist1 = std::abs(d);
    if (dist1 >= kPoleSplitRadius) return zeta_jet(s, order, cfg);
    if (z == Complex(1.0)) throw PoleError("zeta_jet_split: pole at s = 1");

    int nodes = std::max(cfg.cauchy_nodes, 8 * order);
    PrecisionConfig ecfg = tune_for_circle(s, cfg.cauchy_radius, cfg.target_eps);

    Jet reg = cauchy_jet(s, cfg.cauchy_radius, order, nodes, [&](Complex w) {
        EmResult r = em_core(w, ecfg.em_cutoff, ecfg.em_depth, true);
        if (!(r.bound <= ecfg.target_eps * std::max(1.0, std::abs(r.value))))
            throw PrecisionExhausted("zeta_jet_split: remainder bound exceeds target");
        return r.value;
    });

    // 1/(z-1+eps) = sum (-1)^k eps^k / (z-1)^{k+1}
    Complex dpow = 1.0 / d;
    for (int k = 0; k <= order; ++k) {
        reg.at(k) += dpow;
        dpow *= -1.0 / d;
    }
    return reg;
}

}  // namespace zlab
