#pragma once

// SU(2) x U(1) gauge sector on C⊗A.
//
// Gauge parameters u and connection components W_ρ take values in
// (C⊗A)- = real span{i, e1, e2, e3}. α (in C⊗A) transforms as α U^-1 with
// U = exp(u); β (in C⊗B) only sees the phase exp(r Scal(u)).

#include <array>

#include "octoweak/fields.hpp"
#include "octoweak/lorentz.hpp"
#include "octoweak/octonion.hpp"

namespace octoweak {

/// Polynomial gauge parameter u, (C⊗A)- valued.
class GaugeParamField {
public:
    /// Throws DomainViolation unless every coefficient of u lies in (C⊗A)-.
    explicit GaugeParamField(PolyField u);

    const PolyField& field() const { return u_; }

private:
    PolyField u_;
};

/// Connection components W_0..W_3, each (C⊗A)- valued.
class ConnectionField {
public:
    ConnectionField();
    explicit ConnectionField(std::array<PolyField, 4> components);

    const PolyField& operator[](int rho) const;

private:
    std::array<PolyField, 4> w_;
};

/// W'_ρ = U W_ρ U^-1 - (∂_ρ U) U^-1 at p, with U^-1 = exp(-u).
CplxOcton transform_W_at(const ConnectionField& w, const GaugeParamField& u, int rho, const Point& p);

/// D_ρ α = ∂_ρ α - α W_ρ
CplxOcton cov_der_alpha_at(const PolyField& alpha, const ConnectionField& w, int rho, const Point& p);

/// D_ρ β = ∂_ρ β + r β Scal(W_ρ). Cross-checked against ∂_ρ β + (r/2)(β W_ρ + W_ρ β);
/// throws ConsistencyError if the two forms disagree.
CplxOcton cov_der_beta_at(const PolyField& beta, const ConnectionField& w, int rho, const Point& p,
                          double r);

/// α(p) U(p)^-1
CplxOcton transform_alpha_gauge_at(const PolyField& alpha, const GaugeParamField& u, const Point& p);
/// β(p) exp(r Scal(u(p)))
CplxOcton transform_beta_gauge_at(const PolyField& beta, const GaugeParamField& u, const Point& p,
                                  double r);
/// The U(1) factor exp(r Scal(u(p))).
Complex u1_phase_at(const GaugeParamField& u, const Point& p, double r);

/// |dirac_scalar(α U^-1, p) - dirac_scalar(α, p)| for a constant u in C⊗A.
/// Vanishes for u in (C⊗A)-; u outside it serves as the converse witness.
double global_alpha_invariance_residual(const PolyField& alpha, const CplxOcton& u_const, const Point& p);

/// |(D_ρ α)' - (D_ρ α) U^-1| at p, with primed fields built from α U^-1 and W'.
double covariance_residual_alpha(const PolyField& alpha, const ConnectionField& w,
                                 const GaugeParamField& u, int rho, const Point& p);

/// |(D_ρ β)' - (D_ρ β) exp(r Scal(u))| at p.
double covariance_residual_beta(const PolyField& beta, const ConnectionField& w,
                                const GaugeParamField& u, int rho, const Point& p, double r);

/// <1, (∂_μ U) U^-1> - <1, ∂_μ u>
Complex scal_der_u_residual(const GaugeParamField& u, int mu, const Point& p);

/// Scal(W'_ρ - W_ρ) + Scal(∂_ρ u)
Complex scal_ww_residual(const ConnectionField& w, const GaugeParamField& u, int rho, const Point& p);

/// |[Λ̄*_S, r1 W + r2 W̄, β]|. Zero when r1 == r2; generically not otherwise.
double general_coupling_residual(double r1, double r2, const Theta& theta, const CplxOcton& w_val,
                                 const CplxOcton& beta_val);

}  // namespace octoweak
