#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zlab/hardy.hpp"
#include "zlab/types.hpp"
#include "zlab/zeta.hpp"

namespace zlab {

/// One bracketed sign change of Z^(n) on the critical line.
struct ZeroRecord {
    int n = 0;
    double t = 0.0;
    double bracket_width = 0.0;
    int sign_before = 0;
    int sign_after = 0;
};

struct GapRecord {
    double left = 0.0;   // consecutive zeros of Z^(n)
    double right = 0.0;
    int count = 0;       // zeros of Z^(n+1) strictly inside
};

struct InterlaceReport {
    int n = 0;
    double t_lo = 0.0;
    double t_hi = 0.0;
    std::vector<GapRecord> gaps;
    std::vector<GapRecord> violations;     // gaps with count != 1
    std::vector<double> ambiguous;         // Z^(n+1) zeros within 1e-8 of a gap endpoint
    std::optional<double> smallest_clean_t;  // left end of the maximal clean tail
};

struct CountReport {
    int n = 0;
    double T = 0.0;
    long observed = 0;
    double main_term = 0.0;          // T/2pi log(T/2pi) - T/2pi
    double residual = 0.0;           // observed - main_term
    double residual_over_log = 0.0;  // residual / log T
    std::string note;
};

struct Rectangle {
    double sigma_lo = 0.0, sigma_hi = 0.0;
    double t_lo = 0.0, t_hi = 0.0;
    void validate() const;
};

/// All sign changes of Z^(n) on [t_lo, t_hi], located on a grid of step
/// 0.5/log(t_hi) and refined by bisection to bracket width <= 1e-10. A
/// verification pass at half the step must find no additional sign changes,
/// else the step is halved and the scan repeated (up to 3 times), after
/// which UnstableScan is raised.
std::vector<ZeroRecord> scan_zeros(int n, double t_lo, double t_hi,
                                   const PrecisionConfig& cfg = {}, int threads = 1);

/// Counts of Z^(n+1) zeros strictly between consecutive zeros of Z^(n);
/// zeros within 1e-8 of a gap endpoint are flagged ambiguous, not assigned.
InterlaceReport interlace_check(int n, double t_lo, double t_hi,
                                const PrecisionConfig& cfg = {}, int threads = 1);

/// Zero census against the main term T/2pi log(T/2pi) - T/2pi.
/// Counting starts at t = 10; the report notes the uncounted region.
CountReport count_zeros(int n, double T, const PrecisionConfig& cfg = {}, int threads = 1);

/// Winding number (zeros minus poles, with multiplicity) of a family along
/// the rectangle boundary: branch-continuous argument increments between
/// consecutive nodes, each required < pi/2, with node density doubled up to
/// 4 times before WindingUnresolved.
int winding_count(const FamilyId& family, const Rectangle& rect, int nodes_per_unit,
                  const PrecisionConfig& cfg = {}, const DomainSpec& dom = {});

/// Pole order at `center` from the least-squares slope of mean log|value|
/// against -log r over r in {0.05, 0.07, 0.1}. FitAmbiguous when the
/// rounded slope differs from the fit by more than 0.2.
int pole_order_estimate(const FamilyId& family, ComplexPoint center,
                        const PrecisionConfig& cfg = {});

/// Central-difference d/dt of Z^(n+1)/Z^(n) at samples excluding
/// 0.05-neighborhoods of the zeros of Z^(n).
std::vector<std::pair<double, double>> ratio_monotonicity_probe(
    int n, double t_lo, double t_hi, int samples, const PrecisionConfig& cfg = {},
    int threads = 1);

double negative_fraction(const std::vector<std::pair<double, double>>& probe);

}  // namespace zlab
