#include "octoweak/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "octoweak/errors.hpp"
#include "octoweak/grading.hpp"

namespace octoweak {

namespace {

// Relative agreement demanded between the two evaluation forms of D_ρ β.
constexpr double kFormAgreement = 1e-12;

void require_tag(const PolyField& f, SubspaceTag tag, const char* what) {
    if (f.tag() == tag) return;
    if (!values_in(f, tag)) {
        throw DomainViolation(std::string(what) + " must be " + std::string(to_string(tag)) + "-valued");
    }
}

PolyField negated(const PolyField& f) { return PolyField(f.tag(), f.max_total_degree()) - f; }

// Both forms of D_ρ β from point values: ∂β + rβScal(W) and ∂β + (r/2)(βW + Wβ).
CplxOcton beta_derivative(const CplxOcton& beta, const CplxOcton& d_beta, const CplxOcton& w, double r) {
    const CplxOcton scalar_form = d_beta + beta * (r * scal(w));
    const CplxOcton symmetric_form = d_beta + (beta * w + w * beta) * (0.5 * r);
    const double scale = std::max(1.0, beta.magnitude() * w.magnitude() * std::abs(r));
    if (distance(scalar_form, symmetric_form) > kFormAgreement * scale) {
        throw ConsistencyError("cov_der_beta: scalar and symmetric forms disagree");
    }
    return scalar_form;
}

}  // namespace

GaugeParamField::GaugeParamField(PolyField u) : u_(std::move(u)) {
    require_tag(u_, SubspaceTag::AMinus, "gauge parameter u");
}

ConnectionField::ConnectionField()
    : w_{PolyField(SubspaceTag::AMinus), PolyField(SubspaceTag::AMinus), PolyField(SubspaceTag::AMinus),
         PolyField(SubspaceTag::AMinus)} {}

ConnectionField::ConnectionField(std::array<PolyField, 4> components) : w_(std::move(components)) {
    for (const auto& w : w_) require_tag(w, SubspaceTag::AMinus, "connection component");
}

const PolyField& ConnectionField::operator[](int rho) const {
    if (rho < 0 || rho > 3) throw std::out_of_range("connection index out of range");
    return w_[static_cast<std::size_t>(rho)];
}

CplxOcton transform_W_at(const ConnectionField& w, const GaugeParamField& u, int rho, const Point& p) {
    const CplxOcton u_p = eval(u.field(), p);
    const CplxOcton big_u = exp_assoc(u_p);
    const CplxOcton big_u_inv = exp_assoc(-u_p);
    const CplxOcton d_big_u = dexp_at(u.field(), rho, p);
    return big_u * eval(w[rho], p) * big_u_inv - d_big_u * big_u_inv;
}

CplxOcton cov_der_alpha_at(const PolyField& alpha, const ConnectionField& w, int rho, const Point& p) {
    require_tag(alpha, SubspaceTag::A, "alpha");
    return eval(partial(alpha, rho), p) - eval(alpha, p) * eval(w[rho], p);
}

CplxOcton cov_der_beta_at(const PolyField& beta, const ConnectionField& w, int rho, const Point& p,
                          double r) {
    require_tag(beta, SubspaceTag::B, "beta");
    return beta_derivative(eval(beta, p), eval(partial(beta, rho), p), eval(w[rho], p), r);
}

CplxOcton transform_alpha_gauge_at(const PolyField& alpha, const GaugeParamField& u, const Point& p) {
    require_tag(alpha, SubspaceTag::A, "alpha");
    return eval(alpha, p) * exp_assoc(-eval(u.field(), p));
}

Complex u1_phase_at(const GaugeParamField& u, const Point& p, double r) {
    return std::exp(r * scal(eval(u.field(), p)));
}

CplxOcton transform_beta_gauge_at(const PolyField& beta, const GaugeParamField& u, const Point& p,
                                  double r) {
    require_tag(beta, SubspaceTag::B, "beta");
    return eval(beta, p) * u1_phase_at(u, p, r);
}

double global_alpha_invariance_residual(const PolyField& alpha, const CplxOcton& u_const, const Point& p) {
    require_tag(alpha, SubspaceTag::A, "alpha");
    require_subspace(u_const, SubspaceTag::A, "global gauge parameter");
    const PolyField transformed = right_multiply(alpha, exp_assoc(-u_const), SubspaceTag::A);
    return std::abs(dirac_scalar(transformed, p) - dirac_scalar(alpha.retagged(SubspaceTag::A), p));
}

double covariance_residual_alpha(const PolyField& alpha, const ConnectionField& w,
                                 const GaugeParamField& u, int rho, const Point& p) {
    require_tag(alpha, SubspaceTag::A, "alpha");
    const CplxOcton u_inv = exp_assoc(-eval(u.field(), p));
    const CplxOcton d_u_inv = dexp_at(negated(u.field()), rho, p);

    const CplxOcton a = eval(alpha, p);
    const CplxOcton a_primed = a * u_inv;
    const CplxOcton d_a_primed = eval(partial(alpha, rho), p) * u_inv + a * d_u_inv;
    const CplxOcton w_primed = transform_W_at(w, u, rho, p);

    const CplxOcton primed = d_a_primed - a_primed * w_primed;
    const CplxOcton expected = cov_der_alpha_at(alpha, w, rho, p) * u_inv;
    return distance(primed, expected);
}

double covariance_residual_beta(const PolyField& beta, const ConnectionField& w,
                                const GaugeParamField& u, int rho, const Point& p, double r) {
    require_tag(beta, SubspaceTag::B, "beta");
    const Complex phase = u1_phase_at(u, p, r);
    const Complex d_scal_u = scal(eval(partial(u.field(), rho), p));

    const CplxOcton b = eval(beta, p);
    const CplxOcton db = eval(partial(beta, rho), p);
    const CplxOcton b_primed = b * phase;
    const CplxOcton d_b_primed = (db + b * (r * d_scal_u)) * phase;
    const CplxOcton w_primed = transform_W_at(w, u, rho, p);

    const CplxOcton primed = beta_derivative(b_primed, d_b_primed, w_primed, r);
    const CplxOcton expected = cov_der_beta_at(beta, w, rho, p, r) * phase;
    return distance(primed, expected);
}

Complex scal_der_u_residual(const GaugeParamField& u, int mu, const Point& p) {
    const CplxOcton u_inv = exp_assoc(-eval(u.field(), p));
    const CplxOcton log_derivative = dexp_at(u.field(), mu, p) * u_inv;
    return inner(CplxOcton::one(), log_derivative) - inner(CplxOcton::one(), eval(partial(u.field(), mu), p));
}

Complex scal_ww_residual(const ConnectionField& w, const GaugeParamField& u, int rho, const Point& p) {
    const CplxOcton shift = transform_W_at(w, u, rho, p) - eval(w[rho], p);
    return scal(shift) + scal(eval(partial(u.field(), rho), p));
}

double general_coupling_residual(double r1, double r2, const Theta& theta, const CplxOcton& w_val,
                                 const CplxOcton& beta_val) {
    require_subspace(w_val, SubspaceTag::AMinus, "W");
    require_subspace(beta_val, SubspaceTag::B, "beta");
    const CplxOcton coupling = w_val * r1 + conj_oct(w_val) * r2;
    return associator(conj_both(lambda_S(theta)), coupling, beta_val).magnitude();
}

}  // namespace octoweak
