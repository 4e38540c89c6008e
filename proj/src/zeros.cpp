#include "zlab/zeros.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <numbers>

namespace zlab {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kBracketTarget = 1e-10;
constexpr double kEndpointTol = 1e-8;

int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Evaluate f over [0, count) with an optional thread pool; results indexed,
// so the outcome is independent of the parallelism degree.
template <typename F>
void parallel_for(int count, int threads, F&& f) {
    threads = std::max(1, threads);
    if (threads == 1 || count < 4 * threads) {
        for (int i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::future<void>> futs;
    int chunk = (count + threads - 1) / threads;
    for (int w = 0; w < threads; ++w) {
        int lo = w * chunk, hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, [lo, hi, &f] {
            for (int i = lo; i < hi; ++i) f(i);
        }));
    }
    for (auto& fu : futs) fu.get();
}

struct GridScan {
    std::vector<double> values;  // Z^(n) at t_lo + i*(t_hi-t_lo)/intervals
    int intervals = 0;
};

class ZScanner {
  public:
    ZScanner(int n, double lo, double hi, const PrecisionConfig& cfg, int threads)
        : n_(n), lo_(lo), hi_(hi), cfg_(cfg), threads_(threads) {}

    double eval(double t) const { return z_derivative_checked(n_, t, cfg_).value; }

    // Doubling refinement reuses every previously computed grid value.
    void densify(GridScan& g) const {
        std::vector<double> next(static_cast<size_t>(2 * g.intervals) + 1);
        for (int i = 0; i <= g.intervals; ++i)
            next[static_cast<size_t>(2 * i)] = g.values[static_cast<size_t>(i)];
        parallel_for(g.intervals, threads_, [&](int i) {
            double t = grid_t(2 * i + 1, 2 * g.intervals);
            next[static_cast<size_t>(2 * i + 1)] = eval(t);
        });
        g.values = std::move(next);
        g.intervals *= 2;
    }

    GridScan initial(int intervals) const {
        GridScan g;
        g.intervals = intervals;
        g.values.resize(static_cast<size_t>(intervals) + 1);
        parallel_for(intervals + 1, threads_,
                     [&](int i) { g.values[static_cast<size_t>(i)] = eval(grid_t(i, intervals)); });
        return g;
    }

    double grid_t(int i, int intervals) const {
        return lo_ + (hi_ - lo_) * static_cast<double>(i) / static_cast<double>(intervals);
    }

    int count_sign_changes(const GridScan& g) const {
        int c = 0;
        for (int i = 0; i < g.intervals; ++i)
            if (sign_of(g.values[static_cast<size_t>(i)]) *
                    sign_of(g.values[static_cast<size_t>(i + 1)]) < 0)
                ++c;
        return c;
    }

    ZeroRecord refine(double a, double b, double fa, double fb) const {
        int sa = sign_of(fa);
        for (int iter = 0; iter < 80 && b - a > kBracketTarget; ++iter) {
            double m = 0.5 * (a + b);
            double fm = eval(m);
            if (sign_of(fm) == sa) {
                a = m;
                fa = fm;
            } else {
                b = m;
                fb = fm;
            }
        }
        ZeroRecord r;
        r.n = n_;
        r.t = 0.5 * (a + b);
        r.bracket_width = b - a;
        r.sign_before = sign_of(fa);
        r.sign_after = sign_of(fb);
        return r;
    }

  private:
    int n_;
    double lo_, hi_;
    PrecisionConfig cfg_;
    int threads_;
};

}  // namespace

void Rectangle::validate() const {
    if (!(sigma_lo < sigma_hi) || !(t_lo < t_hi))
        throw DomainViolation("Rectangle: requires sigma_lo < sigma_hi and t_lo < t_hi");
}

std::vector<ZeroRecord> scan_zeros(int n, double t_lo, double t_hi,
                                   const PrecisionConfig& cfg, int threads) {
    if (!(t_lo >= 10.0 && t_lo < t_hi && t_hi <= 1e4))
        throw DomainViolation("scan_zeros: requires 10 <= t_lo < t_hi <= 1e4");

    ZScanner scanner(n, t_lo, t_hi, cfg, threads);
    double step = 0.5 / std::log(t_hi);
    int intervals = std::max(4, static_cast<int>(std::ceil((t_hi - t_lo) / step)));

    GridScan coarse = scanner.initial(intervals);
    GridScan fine = coarse;
    scanner.densify(fine);

    int halvings = 0;
    while (scanner.count_sign_changes(fine) != scanner.count_sign_changes(coarse)) {
        if (++halvings > 3)
            throw UnstableScan("scan_zeros: sign-change count kept growing after 3 halvings");
        coarse = fine;
        scanner.densify(fine);
    }

    std::vector<int> bracket_idx;
    for (int i = 0; i < fine.intervals; ++i)
        if (sign_of(fine.values[static_cast<size_t>(i)]) *
                sign_of(fine.values[static_cast<size_t>(i + 1)]) < 0)
            bracket_idx.push_back(i);

    std::vector<ZeroRecord> zeros(bracket_idx.size());
    parallel_for(static_cast<int>(bracket_idx.size()), threads, [&](int j) {
        int i = bracket_idx[static_cast<size_t>(j)];
        zeros[static_cast<size_t>(j)] =
            scanner.refine(scanner.grid_t(i, fine.intervals), scanner.grid_t(i + 1, fine.intervals),
                           fine.values[static_cast<size_t>(i)], fine.values[static_cast<size_t>(i + 1)]);
    });
    return zeros;
}

InterlaceReport interlace_check(int n, double t_lo, double t_hi,
                                const PrecisionConfig& cfg, int threads) {
    InterlaceReport rep;
    rep.n = n;
    rep.t_lo = t_lo;
    rep.t_hi = t_hi;

    std::vector<ZeroRecord> base = scan_zeros(n, t_lo, t_hi, cfg, threads);
    std::vector<ZeroRecord> upper = scan_zeros(n + 1, t_lo, t_hi, cfg, threads);

    auto is_ambiguous = [&](double t) {
        for (const ZeroRecord& b : base)
            if (std::abs(t - b.t) <= kEndpointTol) return true;
        return false;
    };
    for (const ZeroRecord& z : upper)
        if (is_ambiguous(z.t)) rep.ambiguous.push_back(z.t);

    for (size_t i = 0; i + 1 < base.size(); ++i) {
        GapRecord gap;
        gap.left = base[i].t;
        gap.right = base[i + 1].t;
        for (const ZeroRecord& z : upper) {
            if (is_ambiguous(z.t)) continue;
            if (z.t > gap.left && z.t < gap.right) ++gap.count;
        }
        rep.gaps.push_back(gap);
    }
    for (const GapRecord& g : rep.gaps)
        if (g.count != 1) rep.violations.push_back(g);

    // Smallest left endpoint from which every later gap is clean.
    std::optional<double> clean;
    for (auto it = rep.gaps.rbegin(); it != rep.gaps.rend(); ++it) {
        bool amb = std::any_of(rep.ambiguous.begin(), rep.ambiguous.end(), [&](double a) {
            return a >= it->left - kEndpointTol && a <= it->right + kEndpointTol;
        });
        if (it->count != 1 || amb) break;
        clean = it->left;
    }
    rep.smallest_clean_t = clean;
    return rep;
}

CountReport count_zeros(int n, double T, const PrecisionConfig& cfg, int threads) {
    if (!(T >= 20.0 && T <= 1e4))
        throw DomainViolation("count_zeros: requires 20 <= T <= 1e4");
    CountReport rep;
    rep.n = n;
    rep.T = T;
    rep.observed = static_cast<long>(scan_zeros(n, 10.0, T, cfg, threads).size());
    rep.main_term = T / kTwoPi * std::log(T / kTwoPi) - T / kTwoPi;
    rep.residual = static_cast<double>(rep.observed) - rep.main_term;
    rep.residual_over_log = rep.residual / std::log(T);
    rep.note = "zeros with 0 < t < 10 are not counted";
    return rep;
}

namespace {

std::vector<Complex> rectangle_nodes(const Rectangle& rect, int nodes_per_unit, int density) {
    double mul = static_cast<double>(1 << density);
    std::array<Complex, 4> corners = {
        Complex(rect.sigma_lo, rect.t_lo), Complex(rect.sigma_hi, rect.t_lo),
        Complex(rect.sigma_hi, rect.t_hi), Complex(rect.sigma_lo, rect.t_hi)};
    std::vector<Complex> nodes;
    for (int e = 0; e < 4; ++e) {
        Complex a = corners[static_cast<size_t>(e)];
        Complex b = corners[static_cast<size_t>((e + 1) % 4)];
        int m = std::max(2, static_cast<int>(std::ceil(std::abs(b - a) * nodes_per_unit * mul)));
        for (int i = 0; i < m; ++i)  // endpoint of each edge owned by the next edge
            nodes.push_back(a + (b - a) * (static_cast<double>(i) / m));
    }
    return nodes;
}

}  // namespace

int winding_count(const FamilyId& family, const Rectangle& rect, int nodes_per_unit,
                  const PrecisionConfig& cfg, const DomainSpec& dom) {
    family.validate();
    rect.validate();
    if (nodes_per_unit < 1)
        throw DomainViolation("winding_count: nodes_per_unit must be >= 1");
    DomainSpec probe{std::min(dom.exclusion_radius, 0.05)};

    for (int density = 0; density <= 4; ++density) {
        std::vector<Complex> nodes = rectangle_nodes(rect, nodes_per_unit, density);
        std::vector<Complex> values(nodes.size());
        DomainSpec boundary_clearance{0.1};
        for (size_t i = 0; i < nodes.size(); ++i) {
            ComplexPoint p(nodes[i]);
            if (boundary_clearance.distance_to_exclusions(p) < 0.1)
                throw BoundaryTooClose("winding_count: boundary node within 0.1 of a pole");
            values[i] = detail::family_value(family, p, cfg, probe);
            if (std::abs(values[i]) <= 1e-10)
                throw BoundaryTooClose("winding_count: |value| <= 1e-10 on the boundary");
        }
        double total = 0.0;
        bool ok = true;
        for (size_t i = 0; i < nodes.size(); ++i) {
            Complex ratio = values[(i + 1) % values.size()] / values[i];
            double inc = std::arg(ratio);
            if (!(std::abs(inc) < std::numbers::pi / 2)) {
                ok = false;
                break;
            }
            total += inc;
        }
        if (!ok) continue;
        double w = total / kTwoPi;
        double rounded = std::round(w);
        if (std::abs(w - rounded) > 0.25) continue;  // increments aliased; refine
        return static_cast<int>(rounded);
    }
    throw WindingUnresolved("winding_count: argument increments stayed >= pi/2 after 4 refinements");
}

int pole_order_estimate(const FamilyId& family, ComplexPoint center, const PrecisionConfig& cfg) {
    family.validate();
    if (family.kind == FamilyKind::G)
        throw DomainViolation("pole_order_estimate: family must be F or H");
    require_finite(center, "pole_order_estimate");

    const std::array<double, 3> radii = {0.05, 0.07, 0.1};
    constexpr int kAngles = 8;
    DomainSpec probe{0.02};

    std::array<double, 3> x{}, y{};
    for (size_t i = 0; i < radii.size(); ++i) {
        double mean = 0.0;
        for (int j = 0; j < kAngles; ++j) {
            double phi = (2.0 * j + 1.0) * std::numbers::pi / kAngles;
            ComplexPoint p(center.value() + std::polar(radii[i], phi));
            mean += std::log(std::abs(detail::family_value(family, p, cfg, probe)) + 1e-300);
        }
        x[i] = -std::log(radii[i]);
        y[i] = mean / kAngles;
    }

    double xbar = (x[0] + x[1] + x[2]) / 3.0, ybar = (y[0] + y[1] + y[2]) / 3.0;
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < 3; ++i) {
        num += (x[i] - xbar) * (y[i] - ybar);
        den += (x[i] - xbar) * (x[i] - xbar);
    }
    double slope = num / den;
    long rounded = std::lround(slope);
    if (std::abs(slope - static_cast<double>(rounded)) > 0.2)
        throw FitAmbiguous("pole_order_estimate: slope " + std::to_string(slope) +
                           " not within 0.2 of an integer");
    return static_cast<int>(rounded);
}

std::vector<std::pair<double, double>> ratio_monotonicity_probe(
    int n, double t_lo, double t_hi, int samples, const PrecisionConfig& cfg, int threads) {
    if (samples < 1) throw DomainViolation("ratio_monotonicity_probe: samples must be >= 1");
    std::vector<ZeroRecord> zeros = scan_zeros(n, t_lo, t_hi, cfg, threads);

    auto near_zero = [&](double t) {
        for (const ZeroRecord& z : zeros)
            if (std::abs(t - z.t) < 0.05) return true;
        return false;
    };

    const double h = 1e-4;
    std::vector<double> ts;
    ts.reserve(static_cast<size_t>(samples));
    for (int i = 0; i < samples; ++i) {
        double t = t_lo + (i + 0.5) * (t_hi - t_lo) / samples;
        if (!near_zero(t)) ts.push_back(t);
    }

    std::vector<std::pair<double, double>> out(ts.size());
    parallel_for(static_cast<int>(ts.size()), threads, [&](int i) {
        double t = ts[static_cast<size_t>(i)];
        auto [ap, bp] = z_pair(n, t + h, cfg);
        auto [am, bm] = z_pair(n, t - h, cfg);
        double deriv = (bp.value / ap.value - bm.value / am.value) / (2.0 * h);
        out[static_cast<size_t>(i)] = {t, deriv};
    });
    return out;
}

double negative_fraction(const std::vector<std::pair<double, double>>& probe) {
    if (probe.empty()) return 0.0;
    size_t neg = 0;
    for (const auto& [t, d] : probe)
        if (d < 0.0) ++neg;
    return static_cast<double>(neg) / static_cast<double>(probe.size());
}

}  // namespace zlab
