#pragma once

// Complexified octonions C⊗O.
//
// An element is stored as eight complex coefficients over the basis
// (1, e1, ..., e7). Complex scalars commute with every basis unit, so the
// product is fixed by the real structure table of the octonion units.
// The table comes from one Cayley-Dickson doubling of the quaternions
// span{1, e1, e2, e3} with e4 = (0, 1) and e(4+i) = ei e4.

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace octoweak {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

namespace tolerance {
/// Relative threshold below which |N(x)| counts as zero (scaled by max(1, |x|^2)).
inline constexpr double kZeroDivisor = 1e-12;
/// Relative threshold for subspace membership (scaled by max(1, |x|)).
inline constexpr double kMembership = 1e-10;
}  // namespace tolerance

class CplxOcton {
public:
    static constexpr int kDim = 8;

    constexpr CplxOcton() = default;
    constexpr explicit CplxOcton(const std::array<Complex, kDim>& c) : c_(c) {}

    static constexpr CplxOcton scalar(Complex s) {
        CplxOcton x;
        x.c_[0] = s;
        return x;
    }
    /// Basis element b_k: b_0 = 1, b_k = e_k for k = 1..7.
    static CplxOcton basis(int k);
    static constexpr CplxOcton one() { return scalar(1.0); }

    constexpr const Complex& operator[](int k) const { return c_[static_cast<std::size_t>(k)]; }
    constexpr Complex& operator[](int k) { return c_[static_cast<std::size_t>(k)]; }
    constexpr const std::array<Complex, kDim>& coefficients() const { return c_; }

    CplxOcton& operator+=(const CplxOcton& o);
    CplxOcton& operator-=(const CplxOcton& o);
    CplxOcton& operator*=(Complex s);
    CplxOcton& operator/=(Complex s);

    /// Euclidean length over the 16 real components. Not the composition norm.
    double magnitude() const;
    bool is_finite() const;

private:
    std::array<Complex, kDim> c_{};
};

CplxOcton operator+(CplxOcton a, const CplxOcton& b);
CplxOcton operator-(CplxOcton a, const CplxOcton& b);
CplxOcton operator-(const CplxOcton& a);
CplxOcton operator*(CplxOcton a, Complex s);
CplxOcton operator*(Complex s, CplxOcton a);
CplxOcton operator/(CplxOcton a, Complex s);
/// Octonion product. Not associative.
CplxOcton operator*(const CplxOcton& x, const CplxOcton& y);

inline CplxOcton operator*(CplxOcton a, double s) { return std::move(a) * Complex(s); }
inline CplxOcton operator*(double s, CplxOcton a) { return std::move(a) * Complex(s); }

std::ostream& operator<<(std::ostream& os, const CplxOcton& x);

/// Signed index table: b_a b_b = sign[a][b] * b_{index[a][b]}.
struct StructureTable {
    std::array<std::array<std::int8_t, 8>, 8> sign;
    std::array<std::array<std::int8_t, 8>, 8> index;
};

const StructureTable& structure_table();

/// 8x8 text rendering of the table, one row per left factor ("+3", "-0", ...).
std::string format_structure_table();

CplxOcton mul(const CplxOcton& x, const CplxOcton& y);

/// Octonionic conjugation x̄: negates e1..e7, leaves the complex coefficient of 1 alone.
CplxOcton conj_oct(const CplxOcton& x);
/// Complex conjugation x*: conjugates every coefficient.
CplxOcton conj_complex(const CplxOcton& x);
/// Combined conjugation x̄*.
CplxOcton conj_both(const CplxOcton& x);

Complex scal(const CplxOcton& x);
CplxOcton vec(const CplxOcton& x);

/// Symmetric complex-bilinear form with 2<x,y> = x ȳ + y x̄.
Complex inner(const CplxOcton& x, const CplxOcton& y);

/// [x,y,z] = (xy)z - x(yz)
CplxOcton associator(const CplxOcton& x, const CplxOcton& y, const CplxOcton& z);
CplxOcton commutator(const CplxOcton& x, const CplxOcton& y);

/// Composition norm N(x) = x x̄, a complex quadratic form.
Complex norm(const CplxOcton& x);
/// x̄ / N(x). Throws ZeroDivisor when |N(x)| < 1e-12 max(1, |x|^2).
CplxOcton inverse(const CplxOcton& x);

/// exp(u) for u in C⊗A, by the closed form e^s (cos w + sin(w)/w v) with
/// u = s + v and w^2 = <v, v>. Throws NotInAssociativeSubalgebra otherwise.
CplxOcton exp_assoc(const CplxOcton& u);

/// Euclidean magnitude of x - y.
double distance(const CplxOcton& x, const CplxOcton& y);
bool approx_equal(const CplxOcton& x, const CplxOcton& y, double tol);

}  // namespace octoweak
