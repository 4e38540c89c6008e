#pragma once

#include "zlab/jet.hpp"
#include "zlab/types.hpp"

namespace zlab {

/// Euler-Maclaurin cutoffs, Bernoulli depth, Cauchy-circle geometry and the
/// accuracy target shared by the zeta evaluators.
struct PrecisionConfig {
    int em_cutoff = 10;         // M: length of the Dirichlet head
    int em_depth = 12;          // K_B: number of Bernoulli correction terms
    double cauchy_radius = 0.2; // r: derivative-extraction circle
    int cauchy_nodes = 64;      // Q: trapezoid nodes on the circle
    double target_eps = 1e-13;

    void validate() const;
};

/// zeta(s) by the Euler-Maclaurin formula with the configured (M, K_B).
///
/// For sigma < -1/2 the value is produced through zeta(s) = chi(s) zeta(1-s)
/// with the direct sum evaluated at 1-s; exact negative even integers return
/// 0. The Bernoulli-polynomial remainder is never evaluated, only bounded;
/// PrecisionExhausted is raised when the bound exceeds
/// target_eps * max(1, |value|).
Complex zeta_em(ComplexPoint s, const PrecisionConfig& cfg);

/// Smallest cutoff M of the form 10*2^j with M >= max(10, |t|/2), and the
/// minimal Bernoulli depth at that M, whose remainder bound beats eps.
/// Deterministic in (s, eps).
PrecisionConfig estimate_em_params(ComplexPoint s, double eps);

/// zeta(s) with (M, K_B) auto-tuned at s; other knobs are taken from `base`.
Complex zeta_auto(ComplexPoint s, const PrecisionConfig& base = {});

/// Jet of zeta at s via trapezoidal quadrature of the Cauchy integral over
/// the circle of radius cauchy_radius (shrunk to half the distance to s=1
/// when near the pole) with max(cauchy_nodes, 8*order) nodes.
Jet zeta_jet(ComplexPoint s, int order, const PrecisionConfig& cfg = {});

/// Pole-split jet: zeta(s) = 1/(s-1) + zeta_reg(s), the pole expanded
/// exactly and the entire part zeta_reg handled by an unconstrained Cauchy
/// circle. Valid arbitrarily close to s = 1 (s != 1); used by the family
/// evaluators. Falls back to zeta_jet away from the pole.
Jet zeta_jet_split(ComplexPoint s, int order, const PrecisionConfig& cfg = {});

}  // namespace zlab
