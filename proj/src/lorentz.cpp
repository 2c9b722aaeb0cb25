#include "octoweak/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "octoweak/errors.hpp"
#include "octoweak/grading.hpp"

namespace octoweak {

namespace {

void check_index(int mu) {
    if (mu < 0 || mu > 3) throw std::out_of_range("spacetime index out of range: " + std::to_string(mu));
}

constexpr int kTaylorTerms = 18;
constexpr double kSquaringThreshold = 0.5;

std::array<CplxOcton, 4> make_lower() {
    return {CplxOcton::scalar(kI), CplxOcton::basis(1), CplxOcton::basis(2), CplxOcton::basis(3)};
}

std::array<CplxOcton, 4> make_upper() {
    auto e = make_lower();
    e[0] = -e[0];
    return e;
}

CplxOcton spinor_generator_sum(const Theta& theta) {
    CplxOcton sum;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            if (theta(mu, nu) != 0.0) sum += s_gen(mu, nu) * theta(mu, nu);
        }
    }
    return sum * Complex(0.0, -0.5);
}

Mat4C vector_generator_sum(const Theta& theta) {
    Mat4C sum;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            if (theta(mu, nu) != 0.0) sum = sum + Complex(theta(mu, nu)) * v_gen(mu, nu);
        }
    }
    return Complex(0.0, -0.5) * sum;
}

}  // namespace

Mat4C Mat4C::identity() {
    Mat4C id;
    for (int k = 0; k < 4; ++k) id(k, k) = 1.0;
    return id;
}

Mat4C Mat4C::transpose() const {
    Mat4C t;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) t(c, r) = (*this)(r, c);
    return t;
}

double Mat4C::norm1() const {
    double best = 0.0;
    for (int c = 0; c < 4; ++c) {
        double col = 0.0;
        for (int r = 0; r < 4; ++r) col += std::abs((*this)(r, c));
        best = std::max(best, col);
    }
    return best;
}

double Mat4C::max_abs() const {
    double best = 0.0;
    for (const auto& row : m)
        for (const auto& v : row) best = std::max(best, std::abs(v));
    return best;
}

double Mat4C::max_imag() const {
    double best = 0.0;
    for (const auto& row : m)
        for (const auto& v : row) best = std::max(best, std::abs(v.imag()));
    return best;
}

Mat4C operator+(const Mat4C& a, const Mat4C& b) {
    Mat4C out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out(r, c) = a(r, c) + b(r, c);
    return out;
}

Mat4C operator-(const Mat4C& a, const Mat4C& b) { return a + Complex(-1.0) * b; }

Mat4C operator*(const Mat4C& a, const Mat4C& b) {
    Mat4C out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) {
            Complex sum{};
            for (int k = 0; k < 4; ++k) sum += a(r, k) * b(k, c);
            out(r, c) = sum;
        }
    return out;
}

Mat4C operator*(Complex s, const Mat4C& a) {
    Mat4C out = a;
    for (auto& row : out.m)
        for (auto& v : row) v *= s;
    return out;
}

Theta& Theta::set(int mu, int nu, double value) {
    check_index(mu);
    check_index(nu);
    if (mu == nu && value != 0.0) throw std::invalid_argument("theta: diagonal entries must be zero");
    t_[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)] = value;
    t_[static_cast<std::size_t>(nu)][static_cast<std::size_t>(mu)] = -value;
    return *this;
}

double Theta::operator()(int mu, int nu) const {
    check_index(mu);
    check_index(nu);
    return t_[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
}

Theta Theta::operator-() const {
    Theta out;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) out.set(mu, nu, -(*this)(mu, nu));
    return out;
}

Theta Theta::sample(std::mt19937_64& rng, double bound) {
    Theta out;
    for (int mu = 0; mu < 4; ++mu)
        for (int nu = mu + 1; nu < 4; ++nu) out.set(mu, nu, uniform_symmetric(rng, bound));
    return out;
}

double eta(int mu, int nu) {
    check_index(mu);
    check_index(nu);
    if (mu != nu) return 0.0;
    return mu == 0 ? -1.0 : 1.0;
}

const CplxOcton& basis_lower(int mu) {
    static const auto kLower = make_lower();
    check_index(mu);
    return kLower[static_cast<std::size_t>(mu)];
}

const CplxOcton& basis_upper(int mu) {
    static const auto kUpper = make_upper();
    check_index(mu);
    return kUpper[static_cast<std::size_t>(mu)];
}

CplxOcton s_gen(int mu, int nu) {
    const CplxOcton& a = basis_lower(mu);
    const CplxOcton& b = basis_lower(nu);
    return (a * conj_oct(b) - b * conj_oct(a)) / Complex(0.0, 4.0);
}

Mat4C v_gen(int mu, int nu) {
    check_index(mu);
    check_index(nu);
    Mat4C v;
    for (int rho = 0; rho < 4; ++rho) {
        for (int sigma = 0; sigma < 4; ++sigma) {
            const double d = (rho == mu ? eta(nu, sigma) : 0.0) - (rho == nu ? eta(mu, sigma) : 0.0);
            v(rho, sigma) = Complex(0.0, -d);
        }
    }
    return v;
}

Mat4C mat_exp(const Mat4C& m) {
    int squarings = 0;
    double scaled_norm = m.norm1();
    while (scaled_norm > kSquaringThreshold) {
        scaled_norm /= 2.0;
        ++squarings;
    }
    const Mat4C a = Complex(std::ldexp(1.0, -squarings)) * m;

    // Horner: I + a(I + a/2(I + a/3(...)))
    Mat4C result = Mat4C::identity();
    for (int k = kTaylorTerms; k >= 1; --k) {
        result = Mat4C::identity() + Complex(1.0 / k) * (a * result);
    }
    for (int s = 0; s < squarings; ++s) result = result * result;
    return result;
}

CplxOcton lambda_S(const Theta& theta) { return exp_assoc(spinor_generator_sum(theta)); }

Mat4C lambda_V(const Theta& theta) { return mat_exp(vector_generator_sum(theta)); }

double double_cover_residual(const Theta& theta) {
    const CplxOcton ls = lambda_S(theta);
    const CplxOcton ls_bar_star = conj_both(ls);
    const Mat4C lv = lambda_V(theta);
    double worst = 0.0;
    for (int rho = 0; rho < 4; ++rho) {
        const CplxOcton lhs = (ls_bar_star * conj_oct(basis_upper(rho))) * ls;
        CplxOcton rhs;
        for (int sigma = 0; sigma < 4; ++sigma) rhs += conj_oct(basis_upper(sigma)) * lv(rho, sigma);
        worst = std::max(worst, distance(lhs, rhs));
    }
    return worst;
}

CplxOcton lorentz_algebra_residual(int mu, int nu, int rho, int sigma) {
    const CplxOcton lhs = commutator(s_gen(mu, nu), s_gen(rho, sigma)) * Complex(0.0, -1.0);
    const CplxOcton rhs = s_gen(nu, sigma) * eta(mu, rho) - s_gen(nu, rho) * eta(mu, sigma) -
                          s_gen(mu, sigma) * eta(nu, rho) + s_gen(mu, rho) * eta(nu, sigma);
    return lhs - rhs;
}

CplxOcton infinitesimal_dc_residual(int mu, int nu, int rho) {
    const CplxOcton s = s_gen(mu, nu);
    const CplxOcton e_bar = conj_oct(basis_upper(rho));
    const CplxOcton lhs = conj_complex(s) * e_bar + e_bar * s;
    const Mat4C v = v_gen(mu, nu);
    CplxOcton rhs;
    for (int sigma = 0; sigma < 4; ++sigma) rhs += conj_oct(basis_upper(sigma)) * v(rho, sigma);
    return lhs - rhs;
}

CplxOcton transform_alpha(const CplxOcton& lambda, const CplxOcton& alpha) {
    require_subspace(lambda, SubspaceTag::A, "Lorentz spinor factor");
    require_subspace(alpha, SubspaceTag::A, "alpha");
    return lambda * alpha;
}

CplxOcton transform_beta(const CplxOcton& lambda, const CplxOcton& beta) {
    require_subspace(lambda, SubspaceTag::A, "Lorentz spinor factor");
    require_subspace(beta, SubspaceTag::B, "beta");
    const CplxOcton left = conj_both(lambda) * beta;
    const CplxOcton right = beta * conj_complex(lambda);
    const double scale = std::max(1.0, lambda.magnitude() * beta.magnitude());
    if (distance(left, right) > 1e-12 * scale) {
        throw ConsistencyError("transform_beta: left and right actions disagree");
    }
    return left;
}

CplxOcton gamma5_analogue() {
    const CplxOcton prod = ((basis_upper(0) * conj_oct(basis_upper(1))) * basis_upper(2)) *
                           conj_oct(basis_upper(3));
    return prod * Complex(0.0, -1.0);
}

CplxOcton gamma5_lowered() {
    const CplxOcton prod = ((basis_lower(0) * conj_oct(basis_lower(1))) * basis_lower(2)) *
                           conj_oct(basis_lower(3));
    return prod * Complex(0.0, -1.0);
}

}  // namespace octoweak
