#pragma once

#include <cassert>
#include <vector>

#include "zlab/types.hpp"

namespace zlab {

/// Truncated Taylor expansion of an analytic function about a center point.
///
/// coeffs[k] = f^(k)(center)/k!, so a Jet of order K carries the value and
/// the first K derivatives. Jets are the universal carrier for derivatives
/// throughout the library: differentiation is a coefficient shift-and-scale,
/// multiplication is a truncated Cauchy convolution, and division is formal
/// power-series division. The order-0 truncation of every operation agrees
/// with the pointwise operation on coeffs[0].
class Jet {
  public:
    Jet() = default;
    Jet(ComplexPoint center, std::vector<Complex> coeffs)
        : center_(center), coeffs_(std::move(coeffs)) {
        assert(!coeffs_.empty());
    }

    static Jet constant(ComplexPoint center, Complex value, int order) {
        std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0));
        c[0] = value;
        return Jet(center, std::move(c));
    }

    /// The identity function s at `center`: coeffs {center, 1, 0, ...}.
    static Jet variable(ComplexPoint center, int order) {
        std::vector<Complex> c(static_cast<size_t>(order) + 1, Complex(0));
        c[0] = center.value();
        if (order >= 1) c[1] = Complex(1);
        return Jet(center, std::move(c));
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const ComplexPoint& center() const { return center_; }
    const std::vector<Complex>& coeffs() const { return coeffs_; }
    Complex operator[](int k) const { return coeffs_[static_cast<size_t>(k)]; }
    Complex& at(int k) { return coeffs_[static_cast<size_t>(k)]; }
    Complex value() const { return coeffs_[0]; }

    /// k-th derivative value, i.e. coeffs[k]*k!.
    Complex derivative_value(int k) const;

    Jet truncated(int order) const {
        assert(order <= this->order());
        return Jet(center_, std::vector<Complex>(coeffs_.begin(),
                                                 coeffs_.begin() + order + 1));
    }

    /// Jet of f', one order lower: d_k = (k+1) c_{k+1}.
    Jet derivative() const;

    /// Reinterpret as the jet of eps -> f(center + a*eps): c_k *= a^k.
    /// Chain rule for a linear change of the expansion variable.
    Jet scaled_argument(Complex a) const;

    /// Jet with alternating coefficient signs: eps -> f(center - eps).
    Jet reflected_argument() const { return scaled_argument(Complex(-1)); }

    bool finite() const;

    Jet operator-() const;
    Jet& operator+=(const Jet& o);
    Jet& operator-=(const Jet& o);
    Jet& operator+=(Complex v) { coeffs_[0] += v; return *this; }
    Jet& operator-=(Complex v) { coeffs_[0] -= v; return *this; }
    Jet& operator*=(Complex v);

    friend Jet operator+(Jet a, const Jet& b) { return a += b; }
    friend Jet operator-(Jet a, const Jet& b) { return a -= b; }
    friend Jet operator+(Jet a, Complex v) { return a += v; }
    friend Jet operator-(Jet a, Complex v) { return a -= v; }
    friend Jet operator*(Jet a, Complex v) { return a *= v; }
    friend Jet operator*(Complex v, Jet a) { return a *= v; }

    /// Truncated Cauchy product; result order = min of operand orders.
    friend Jet operator*(const Jet& a, const Jet& b);
    /// Power-series division; requires b.value() != 0.
    friend Jet operator/(const Jet& a, const Jet& b);

  private:
    ComplexPoint center_;
    std::vector<Complex> coeffs_{Complex(0)};
};

}  // namespace zlab
