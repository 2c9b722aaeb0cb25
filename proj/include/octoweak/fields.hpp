#pragma once

// Polynomial spacetime fields with C⊗O coefficients.
//
// Differentiation and linear pullback are exact on polynomials, so any
// residual seen in the invariance checks comes from the algebra, not from
// discretisation.

#include <array>
#include <map>
#include <optional>
#include <random>

#include "octoweak/grading.hpp"
#include "octoweak/lorentz.hpp"
#include "octoweak/octonion.hpp"

namespace octoweak {

struct Point {
    std::array<double, 4> x{};

    double operator[](int mu) const { return x[static_cast<std::size_t>(mu)]; }
    double& operator[](int mu) { return x[static_cast<std::size_t>(mu)]; }

    static Point sample(std::mt19937_64& rng, double bound);
};

/// M p, using the real part of M.
Point apply(const Mat4C& m, const Point& p);

/// Exponents (d0, d1, d2, d3) of x^0 ... x^3.
using MultiDegree = std::array<int, 4>;

class PolyField {
public:
    static constexpr int kDefaultMaxDegree = 3;

    explicit PolyField(std::optional<SubspaceTag> tag = std::nullopt,
                       int max_total_degree = kDefaultMaxDegree);

    static PolyField constant(const CplxOcton& c, std::optional<SubspaceTag> tag = std::nullopt);
    static PolyField monomial(const MultiDegree& degree, const CplxOcton& c,
                              std::optional<SubspaceTag> tag = std::nullopt);
    /// Every monomial of total degree <= degree with a coefficient drawn from `tag`.
    static PolyField sample(SubspaceTag tag, int degree, std::mt19937_64& rng, double bound);

    /// Adds c to the coefficient of x^degree. Throws DomainViolation if c is
    /// outside the tagged subspace or the degree exceeds the bound.
    PolyField& add_term(const MultiDegree& degree, const CplxOcton& c);

    const std::map<MultiDegree, CplxOcton>& terms() const { return terms_; }
    std::optional<SubspaceTag> tag() const { return tag_; }
    int max_total_degree() const { return max_degree_; }
    /// Highest total degree actually present, -1 for the zero field.
    int degree() const;
    bool is_zero() const { return terms_.empty(); }

    /// Same terms under a different tag. Re-validates every coefficient.
    PolyField retagged(std::optional<SubspaceTag> tag) const;

    PolyField& operator+=(const PolyField& o);
    PolyField& operator-=(const PolyField& o);

private:
    std::map<MultiDegree, CplxOcton> terms_;
    std::optional<SubspaceTag> tag_;
    int max_degree_;
};

PolyField operator+(PolyField a, const PolyField& b);
PolyField operator-(PolyField a, const PolyField& b);
/// Coefficientwise c·f (left) and f·c (right). The result is untagged unless `tag` is given.
PolyField left_multiply(const CplxOcton& c, const PolyField& f,
                        std::optional<SubspaceTag> tag = std::nullopt);
PolyField right_multiply(const PolyField& f, const CplxOcton& c,
                         std::optional<SubspaceTag> tag = std::nullopt);

/// True when every coefficient of f lies in `tag`.
bool values_in(const PolyField& f, SubspaceTag tag);

CplxOcton eval(const PolyField& f, const Point& p);
PolyField partial(const PolyField& f, int mu);
/// x ↦ f(M x), expanded exactly. M must be real.
PolyField pullback_linear(const PolyField& f, const Mat4C& m);

/// Σ_ρ <f(p)*, ē^ρ ∂_ρ f(p)>. Requires f tagged A or B.
Complex dirac_scalar(const PolyField& f, const Point& p);

/// Transforms f (tag A: Λ_S f; tag B: Λ̄*_S f, with arguments pulled back by
/// Λ_V^-1) and returns |dirac_scalar(f', Λ_V p) - dirac_scalar(f, p)|.
double lorentz_invariance_residual(const PolyField& f, const Theta& theta, const Point& p);

/// exp(u(p)) for a C⊗A-valued field u.
CplxOcton exp_field_at(const PolyField& u, const Point& p);
/// ∂_μ exp(u) at p, from Σ_m 1/m! Σ_l u^l (∂_μ u) u^(m-l-1).
CplxOcton dexp_at(const PolyField& u, int mu, const Point& p);

}  // namespace octoweak
