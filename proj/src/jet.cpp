#include "zlab/jet.hpp"

#include <algorithm>

namespace zlab {

namespace {

double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

}  // namespace

Complex Jet::derivative_value(int k) const {
    assert(k <= order());
    return coeffs_[static_cast<size_t>(k)] * factorial(k);
}

Jet Jet::derivative() const {
    assert(order() >= 1);
    std::vector<Complex> d(coeffs_.size() - 1);
    for (size_t k = 0; k + 1 < coeffs_.size(); ++k)
        d[k] = coeffs_[k + 1] * static_cast<double>(k + 1);
    return Jet(center_, std::move(d));
}

Jet Jet::scaled_argument(Complex a) const {
    std::vector<Complex> c(coeffs_);
    Complex p(1);
    for (size_t k = 1; k < c.size(); ++k) {
        p *= a;
        c[k] *= p;
    }
    return Jet(center_, std::move(c));
}

bool Jet::finite() const {
    for (const Complex& c : coeffs_)
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    return true;
}

Jet Jet::operator-() const {
    Jet r(*this);
    for (Complex& c : r.coeffs_) c = -c;
    return r;
}

Jet& Jet::operator+=(const Jet& o) {
    size_t n = std::min(coeffs_.size(), o.coeffs_.size());
    coeffs_.resize(n);
    for (size_t k = 0; k < n; ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
}

Jet& Jet::operator-=(const Jet& o) {
    size_t n = std::min(coeffs_.size(), o.coeffs_.size());
    coeffs_.resize(n);
    for (size_t k = 0; k < n; ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
}

Jet& Jet::operator*=(Complex v) {
    for (Complex& c : coeffs_) c *= v;
    return *this;
}

Jet operator*(const Jet& a, const Jet& b) {
    size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
    std::vector<Complex> c(n, Complex(0));
    for (size_t k = 0; k < n; ++k)
        for (size_t j = 0; j <= k; ++j) c[k] += a.coeffs_[j] * b.coeffs_[k - j];
    return Jet(a.center_, std::move(c));
}

Jet operator/(const Jet& a, const Jet& b) {
    size_t n = std::min(a.coeffs_.size(), b.coeffs_.size());
    assert(std::abs(b.coeffs_[0]) > 0.0);
    std::vector<Complex> q(n);
    for (size_t k = 0; k < n; ++k) {
        Complex acc = a.coeffs_[k];
        for (size_t j = 0; j < k; ++j) acc -= q[j] * b.coeffs_[k - j];
        q[k] = acc / b.coeffs_[0];
    }
    return Jet(a.center_, std::move(q));
}

}  // namespace zlab
