#pragma once

#include "zlab/jet.hpp"
#include "zlab/types.hpp"

namespace zlab {

/// Highest jet order any kernel will produce.
inline constexpr int kMaxJetOrder = 16;

/// log Gamma(s), continuous branch fixed by the real positive axis.
///
/// Computed by the upward recurrence log Gamma(s) = log Gamma(s+1) - log s
/// until Re(s) >= 10, then the Stirling series with Bernoulli corrections;
/// the series depth is chosen so the first omitted term is below 1e-16 of
/// the accumulated sum. With `allow_left_halfplane` false, arguments with
/// sigma <= 0 are rejected with DomainViolation.
Complex log_gamma(ComplexPoint s, bool allow_left_halfplane = true);

/// Jet of the digamma function psi at s: coeffs[m] * m! = psi^(m)(s).
///
/// Shifts with psi^(m)(s) = psi^(m)(s+1) - (-1)^m m!/s^(m+1) until
/// sigma >= 10, then evaluates the termwise-differentiated asymptotic
/// series psi(s) ~ log s - 1/(2s) - sum_k B_2k/(2k s^2k).
Jet digamma_jet(ComplexPoint s, int order);

/// Jet of tan at s; higher coefficients from the recursion tan' = 1 + tan^2.
/// Rejects points within dom.exclusion_radius * pi/2 of a pole of tan.
Jet tan_jet(ComplexPoint s, int order, const DomainSpec& dom = {});

/// chi(s) = h(1-s)/h(s) with h(s) = pi^(-s/2) Gamma(s/2), evaluated as
/// pi^(s-1/2) Gamma((1-s)/2) / Gamma(s/2). Satisfies zeta(s) = chi(s) zeta(1-s).
Complex chi(ComplexPoint s);

/// Jet of omega = chi'/chi at s, for s in D. For sigma >= 1/4 composed from
/// tan and digamma jets via omega(s) = log(2pi) + (pi/2) tan(pi s/2) - psi(s);
/// for sigma < 1/4 via the symmetry omega(1-s) = omega(s), coefficient-wise
/// with alternating signs.
Jet omega_jet(ComplexPoint s, int order, const DomainSpec& dom = {});

/// Jet of log h(s) = -(s/2) log pi + log Gamma(s/2).
Jet log_h_jet(ComplexPoint s, int order);

/// Jet of theta(t) = arg h(1/2+it) in the real variable t, continuous branch
/// with theta(0) = 0. Coefficients are real (zero imaginary parts).
Jet theta_jet(double t, int order);

}  // namespace zlab
