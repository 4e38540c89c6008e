#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace zlab {

using Complex = std::complex<double>;

/// A point s = sigma + i t of the complex plane.
///
/// Thin value type used at API boundaries; converts freely to
/// std::complex<double> for arithmetic. All public operations reject
/// non-finite components.
struct ComplexPoint {
    double re = 0.0;  // sigma
    double im = 0.0;  // t

    ComplexPoint() = default;
    ComplexPoint(double sigma, double t) : re(sigma), im(t) {}
    ComplexPoint(const Complex& z) : re(z.real()), im(z.imag()) {}

    double sigma() const { return re; }
    double t() const { return im; }
    double abs() const { return std::hypot(re, im); }
    Complex value() const { return Complex(re, im); }
    operator Complex() const { return value(); }

    bool finite() const { return std::isfinite(re) && std::isfinite(im); }
};

/// The domain D: the plane minus open disks of radius `exclusion_radius`
/// around the odd positive integers and the even non-positive integers
/// (the poles of omega).
struct DomainSpec {
    double exclusion_radius = 0.1;

    void validate() const;

    /// Distance from s to the nearest excluded center.
    double distance_to_exclusions(const ComplexPoint& s) const;

    bool contains(const ComplexPoint& s) const {
        return distance_to_exclusions(s) >= exclusion_radius;
    }
};

// ---------------------------------------------------------------------------
// Error taxonomy. `kind()` feeds the machine-readable CLI error records.
// ---------------------------------------------------------------------------

class Error : public std::runtime_error {
  public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}
    const std::string& kind() const { return kind_; }

  private:
    std::string kind_;
};

#define ZLAB_DEFINE_ERROR(Name)                                       \
    class Name : public Error {                                       \
      public:                                                         \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

ZLAB_DEFINE_ERROR(PoleError);
ZLAB_DEFINE_ERROR(DomainViolation);
ZLAB_DEFINE_ERROR(PrecisionExhausted);
ZLAB_DEFINE_ERROR(PoleProximity);
ZLAB_DEFINE_ERROR(NearZeroDenominator);
ZLAB_DEFINE_ERROR(RealityCheckFailed);
ZLAB_DEFINE_ERROR(UnstableScan);
ZLAB_DEFINE_ERROR(BoundaryTooClose);
ZLAB_DEFINE_ERROR(WindingUnresolved);
ZLAB_DEFINE_ERROR(FitAmbiguous);
ZLAB_DEFINE_ERROR(IoError);

#undef ZLAB_DEFINE_ERROR

inline void require_finite(const ComplexPoint& s, const char* where) {
    if (!s.finite())
        throw DomainViolation(std::string(where) + ": non-finite argument");
}

}  // namespace zlab
