#pragma once

#include <utility>
#include <vector>

#include "zlab/jet.hpp"
#include "zlab/types.hpp"
#include "zlab/zeta.hpp"

namespace zlab {

/// Highest derivative-family order the recursion will produce.
inline constexpr int kMaxFamilyOrder = 6;

enum class FamilyKind { F, H, G };

/// Designates one of the recursive families f_n, h_n, g_n = f_n/h_n.
struct FamilyId {
    FamilyKind kind = FamilyKind::F;
    int n = 0;

    void validate() const {
        if (n < 0 || n > kMaxFamilyOrder)
            throw DomainViolation("FamilyId: order outside [0, " +
                                  std::to_string(kMaxFamilyOrder) + "]");
    }
};

/// The coefficients a_{n,k}(s) of f_n(s) = sum_k a_{n,k}(s) zeta^(k)(s),
/// evaluated at one point; values[0] always equals h_n(s).
struct CoeffTable {
    int n = 0;
    std::vector<Complex> values;  // k = 0..n
};

/// Jet of f_n at s: f_0 = zeta, f_{m+1} = f_m' - omega f_m / 2, carried in
/// jet arithmetic. Each recursion step consumes one order, so the zeta and
/// omega seeds start at order n + order.
Jet f_jet(int n, ComplexPoint s, int order, const PrecisionConfig& cfg = {},
          const DomainSpec& dom = {});

/// Jet of h_n at s: same recursion seeded with the constant 1.
Jet h_jet(int n, ComplexPoint s, int order, const DomainSpec& dom = {});

/// a_{n,k}(s) via a_{m+1,k} = a'_{m,k} + a_{m,k-1} - omega a_{m,k}/2,
/// seeded a_{0,0} = 1.
CoeffTable a_coeffs(int n, ComplexPoint s, const PrecisionConfig& cfg = {},
                    const DomainSpec& dom = {});

/// g_n(s) = f_n(s)/h_n(s); NearZeroDenominator when |h_n| is below
/// 1e-12 * max(1, log|s|)^n.
Complex g_value(int n, ComplexPoint s, const PrecisionConfig& cfg = {},
                const DomainSpec& dom = {});

/// Jet of g_n (power-series division of the f and h jets).
Jet g_jet(int n, ComplexPoint s, int order, const PrecisionConfig& cfg = {},
          const DomainSpec& dom = {});

/// Z^(n)(t) together with the discarded imaginary part of
/// i^n f_n(1/2+it) e^{i theta(t)} -- the live error estimate for Z^(n).
struct ZEval {
    double value = 0.0;
    double im_residual = 0.0;
};

/// Z^(n)(t) = Re[i^n f_n(1/2+it) e^{i theta(t)}] with the reality check:
/// RealityCheckFailed when |Im| > 1e-8 * (1 + |value|).
ZEval z_derivative_checked(int n, double t, const PrecisionConfig& cfg = {});

double z_derivative(int n, double t, const PrecisionConfig& cfg = {});

/// (Z^(n)(t), Z^(n+1)(t)) from one shared seed jet.
std::pair<ZEval, ZEval> z_pair(int n, double t, const PrecisionConfig& cfg = {});

/// Residual |LHS - RHS| / (1 + |LHS|) of the exact identity
///   Z^(n+1)/Z^(n)(t) = i G_n'/G_n(1/2+it) + i h_n'/h_n(1/2+it) - F'(t)/F(t)
/// with G_n = h g_n and F(t) = |h(1/2+it)|, both sides computed
/// independently.
double ratio_identity_residual(int n, double t, const PrecisionConfig& cfg = {});

namespace detail {
/// Evaluate a family member (value only) -- shared by the zero/pole census.
Complex family_value(const FamilyId& id, ComplexPoint s, const PrecisionConfig& cfg,
                     const DomainSpec& dom);
/// Z^(n)(t) without the t >= 5 quality gate (plot emission at small t).
ZEval z_eval_unguarded(int n, double t, const PrecisionConfig& cfg);
}  // namespace detail

}  // namespace zlab
