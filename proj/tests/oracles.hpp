#pragma once

// Independent reference computations for the test suites. Nothing here goes
// through the library's structure table, closed-form exponential, Horner
// evaluator or series derivative.

#include <array>
#include <cmath>
#include <complex>
#include <functional>

#include "octoweak/fields.hpp"
#include "octoweak/octonion.hpp"

namespace oracle {

using Real8 = std::array<double, 8>;

struct Quat {
    double w = 0, x = 0, y = 0, z = 0;
};

inline Quat operator*(const Quat& a, const Quat& b) {
    return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z, a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
            a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x, a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}
inline Quat operator-(const Quat& a, const Quat& b) { return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Quat operator+(const Quat& a, const Quat& b) { return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Quat conj(const Quat& a) { return {a.w, -a.x, -a.y, -a.z}; }

/// Cayley-Dickson product (a,b)(c,d) = (ac - d̄b, da + bc̄) on real octonions.
inline Real8 cayley_dickson(const Real8& p, const Real8& q) {
    const Quat a{p[0], p[1], p[2], p[3]}, b{p[4], p[5], p[6], p[7]};
    const Quat c{q[0], q[1], q[2], q[3]}, d{q[4], q[5], q[6], q[7]};
    const Quat lo = a * c - conj(d) * b;
    const Quat hi = d * a + b * conj(c);
    return {lo.w, lo.x, lo.y, lo.z, hi.w, hi.x, hi.y, hi.z};
}

/// Complex-bilinear extension of the Cayley-Dickson product, component by component.
inline octoweak::CplxOcton cd_product(const octoweak::CplxOcton& x, const octoweak::CplxOcton& y) {
    octoweak::CplxOcton out;
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            Real8 ea{}, eb{};
            ea[a] = 1.0;
            eb[b] = 1.0;
            const Real8 prod = cayley_dickson(ea, eb);
            for (int k = 0; k < 8; ++k) out[k] += x[a] * y[b] * prod[k];
        }
    }
    return out;
}

/// Truncated Taylor series Σ u^n / n!, n < terms.
inline octoweak::CplxOcton exp_taylor(const octoweak::CplxOcton& u, int terms = 20) {
    octoweak::CplxOcton sum = octoweak::CplxOcton::one();
    octoweak::CplxOcton term = octoweak::CplxOcton::one();
    for (int n = 1; n < terms; ++n) {
        term = term * u / octoweak::Complex(n);
        sum += term;
    }
    return sum;
}

/// Monomial-by-monomial evaluation with std::pow.
inline octoweak::CplxOcton naive_eval(const octoweak::PolyField& f, const octoweak::Point& p) {
    octoweak::CplxOcton sum;
    for (const auto& [d, c] : f.terms()) {
        double w = 1.0;
        for (int mu = 0; mu < 4; ++mu) w *= std::pow(p[mu], d[static_cast<std::size_t>(mu)]);
        sum += c * w;
    }
    return sum;
}

/// Central difference of g along coordinate mu.
inline octoweak::CplxOcton central_difference(const std::function<octoweak::CplxOcton(const octoweak::Point&)>& g,
                                              const octoweak::Point& p, int mu, double h = 1e-5) {
    octoweak::Point plus = p, minus = p;
    plus[mu] += h;
    minus[mu] -= h;
    return (g(plus) - g(minus)) / octoweak::Complex(2.0 * h);
}

}  // namespace oracle
