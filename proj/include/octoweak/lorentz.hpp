#pragma once

// Lorentz generators on C⊗A (spinor) and on R^4 (vector), their exponentials,
// and the residuals tying the two representations together.
//
// Metric η = diag(-1, 1, 1, 1). The basis e_μ = (i, e1, e2, e3) has
// <e_μ, e_ν> = η_μν; raised indices are e^μ = η^μν e_ν, so e^0 = -i.

#include <array>
#include <random>

#include "octoweak/octonion.hpp"

namespace octoweak {

/// 4x4 complex matrix, indexed (row ρ, column σ) as (Λ)^ρ_σ.
struct Mat4C {
    std::array<std::array<Complex, 4>, 4> m{};

    static Mat4C zero() { return {}; }
    static Mat4C identity();

    Complex& operator()(int r, int c) { return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]; }
    const Complex& operator()(int r, int c) const {
        return m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
    }

    Mat4C transpose() const;
    /// Maximum absolute column sum.
    double norm1() const;
    double max_abs() const;
    /// Largest |Im| over all entries.
    double max_imag() const;
};

Mat4C operator+(const Mat4C& a, const Mat4C& b);
Mat4C operator-(const Mat4C& a, const Mat4C& b);
Mat4C operator*(const Mat4C& a, const Mat4C& b);
Mat4C operator*(Complex s, const Mat4C& a);

/// Antisymmetric real parameters θ^μν.
class Theta {
public:
    Theta() = default;

    /// Sets θ^μν = value and θ^νμ = -value. Requires μ != ν unless value == 0.
    Theta& set(int mu, int nu, double value);
    double operator()(int mu, int nu) const;
    Theta operator-() const;

    /// Draws the six independent entries uniformly in [-bound, bound].
    static Theta sample(std::mt19937_64& rng, double bound);

private:
    std::array<std::array<double, 4>, 4> t_{};
};

double eta(int mu, int nu);

/// e_μ
const CplxOcton& basis_lower(int mu);
/// e^μ
const CplxOcton& basis_upper(int mu);

/// S_μν from 4i S_μν = e_μ ē_ν - e_ν ē_μ. Lies in C⊗Vec(A).
CplxOcton s_gen(int mu, int nu);
/// V_μν from i (V_μν)^ρ_σ = δ^ρ_μ η_νσ - δ^ρ_ν η_μσ.
Mat4C v_gen(int mu, int nu);

/// Scaling-and-squaring Taylor exponential (18 terms, scaled to |m|_1 <= 0.5).
Mat4C mat_exp(const Mat4C& m);

/// Λ_S = exp(-(i/2) θ^μν S_μν)
CplxOcton lambda_S(const Theta& theta);
/// Λ_V = exp(-(i/2) θ^μν V_μν), real up to rounding.
Mat4C lambda_V(const Theta& theta);

/// max over ρ of | Λ̄*_S ē^ρ Λ_S - (Λ_V)^ρ_σ ē^σ |
double double_cover_residual(const Theta& theta);

/// -i[S_μν, S_ρσ] - (η_μρ S_νσ - η_μσ S_νρ - η_νρ S_μσ + η_νσ S_μρ)
CplxOcton lorentz_algebra_residual(int mu, int nu, int rho, int sigma);

/// S*_μν ē^ρ + ē^ρ S_μν - (V_μν)^ρ_σ ē^σ
CplxOcton infinitesimal_dc_residual(int mu, int nu, int rho);

/// α' = Λ α, with Λ, α in C⊗A.
CplxOcton transform_alpha(const CplxOcton& lambda, const CplxOcton& alpha);
/// β' = Λ̄* β. Cross-checked against the equivalent β Λ*; throws ConsistencyError on mismatch.
CplxOcton transform_beta(const CplxOcton& lambda, const CplxOcton& beta);

/// -i e^0 ē^1 e^2 ē^3, multiplied left to right.
CplxOcton gamma5_analogue();
/// -i e_0 ē_1 e_2 ē_3 with lowered indices.
CplxOcton gamma5_lowered();

}  // namespace octoweak
