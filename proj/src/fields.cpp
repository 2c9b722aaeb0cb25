#include "octoweak/fields.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "octoweak/errors.hpp"

namespace octoweak {

namespace {

constexpr double kDexpTailBound = 1e-14;
constexpr int kDexpMaxTerms = 200;
constexpr double kRealMatrixTol = 1e-10;

int total(const MultiDegree& d) { return d[0] + d[1] + d[2] + d[3]; }

void check_index(int mu) {
    if (mu < 0 || mu > 3) throw std::out_of_range("spacetime index out of range: " + std::to_string(mu));
}

using Iter = std::map<MultiDegree, CplxOcton>::const_iterator;

// Terms in [first, last) share exponents for variables < var. The map is
// ordered lexicographically, so each exponent of x^var forms a contiguous run.
CplxOcton horner(Iter first, Iter last, int var, const Point& p) {
    if (var == 4) return first->second;

    struct Run {
        int exponent;
        Iter begin, end;
    };
    std::vector<Run> runs;
    for (Iter it = first; it != last;) {
        const int e = it->first[static_cast<std::size_t>(var)];
        Iter stop = it;
        while (stop != last && stop->first[static_cast<std::size_t>(var)] == e) ++stop;
        runs.push_back({e, it, stop});
        it = stop;
    }

    const double x = p[var];
    CplxOcton acc;
    int current = runs.back().exponent;
    for (auto r = runs.rbegin(); r != runs.rend(); ++r) {
        acc = acc * std::pow(x, current - r->exponent) + horner(r->begin, r->end, var + 1, p);
        current = r->exponent;
    }
    return acc * std::pow(x, current);
}

// Real scalar polynomial used while expanding a pullback.
using RealPoly = std::map<MultiDegree, double>;

RealPoly multiply(const RealPoly& a, const RealPoly& b) {
    RealPoly out;
    for (const auto& [da, ca] : a) {
        for (const auto& [db, cb] : b) {
            MultiDegree d{};
            for (std::size_t k = 0; k < 4; ++k) d[k] = da[k] + db[k];
            out[d] += ca * cb;
        }
    }
    return out;
}

}  // namespace

Point Point::sample(std::mt19937_64& rng, double bound) {
    Point p;
    for (auto& v : p.x) v = uniform_symmetric(rng, bound);
    return p;
}

Point apply(const Mat4C& m, const Point& p) {
    Point out;
    for (int r = 0; r < 4; ++r) {
        double sum = 0.0;
        for (int c = 0; c < 4; ++c) sum += m(r, c).real() * p[c];
        out[r] = sum;
    }
    return out;
}

PolyField::PolyField(std::optional<SubspaceTag> tag, int max_total_degree)
    : tag_(tag), max_degree_(max_total_degree) {
    if (max_total_degree < 0) throw std::invalid_argument("PolyField: negative degree bound");
}

PolyField PolyField::constant(const CplxOcton& c, std::optional<SubspaceTag> tag) {
    PolyField f(tag);
    f.add_term({0, 0, 0, 0}, c);
    return f;
}

PolyField PolyField::monomial(const MultiDegree& degree, const CplxOcton& c,
                              std::optional<SubspaceTag> tag) {
    PolyField f(tag, std::max(kDefaultMaxDegree, total(degree)));
    f.add_term(degree, c);
    return f;
}

PolyField PolyField::sample(SubspaceTag tag, int degree, std::mt19937_64& rng, double bound) {
    PolyField f(tag, std::max(kDefaultMaxDegree, degree));
    for (int d0 = 0; d0 <= degree; ++d0)
        for (int d1 = 0; d0 + d1 <= degree; ++d1)
            for (int d2 = 0; d0 + d1 + d2 <= degree; ++d2)
                for (int d3 = 0; d0 + d1 + d2 + d3 <= degree; ++d3)
                    f.add_term({d0, d1, d2, d3}, octoweak::sample(tag, rng, bound));
    return f;
}

PolyField& PolyField::add_term(const MultiDegree& degree, const CplxOcton& c) {
    for (int d : degree) {
        if (d < 0) throw std::invalid_argument("PolyField: negative exponent");
    }
    if (total(degree) > max_degree_) {
        throw DomainViolation("PolyField: term of degree " + std::to_string(total(degree)) +
                              " exceeds bound " + std::to_string(max_degree_));
    }
    if (tag_) require_subspace(c, *tag_, "PolyField coefficient");
    auto [it, inserted] = terms_.try_emplace(degree, c);
    if (!inserted) it->second += c;
    if (it->second.coefficients() == std::array<Complex, 8>{}) terms_.erase(it);
    return *this;
}

int PolyField::degree() const {
    int best = -1;
    for (const auto& [d, c] : terms_) best = std::max(best, total(d));
    return best;
}

PolyField PolyField::retagged(std::optional<SubspaceTag> tag) const {
    PolyField out(tag, max_degree_);
    for (const auto& [d, c] : terms_) out.add_term(d, c);
    return out;
}

PolyField& PolyField::operator+=(const PolyField& o) {
    max_degree_ = std::max(max_degree_, o.max_degree_);
    for (const auto& [d, c] : o.terms_) add_term(d, c);
    return *this;
}

PolyField& PolyField::operator-=(const PolyField& o) {
    max_degree_ = std::max(max_degree_, o.max_degree_);
    for (const auto& [d, c] : o.terms_) add_term(d, -c);
    return *this;
}

PolyField operator+(PolyField a, const PolyField& b) { return a += b; }
PolyField operator-(PolyField a, const PolyField& b) { return a -= b; }

PolyField left_multiply(const CplxOcton& c, const PolyField& f, std::optional<SubspaceTag> tag) {
    PolyField out(tag, f.max_total_degree());
    for (const auto& [d, coeff] : f.terms()) out.add_term(d, c * coeff);
    return out;
}

PolyField right_multiply(const PolyField& f, const CplxOcton& c, std::optional<SubspaceTag> tag) {
    PolyField out(tag, f.max_total_degree());
    for (const auto& [d, coeff] : f.terms()) out.add_term(d, coeff * c);
    return out;
}

bool values_in(const PolyField& f, SubspaceTag tag) {
    for (const auto& [d, c] : f.terms()) {
        if (!in_subspace(c, tag)) return false;
    }
    return true;
}

CplxOcton eval(const PolyField& f, const Point& p) {
    if (f.is_zero()) return {};
    return horner(f.terms().begin(), f.terms().end(), 0, p);
}

PolyField partial(const PolyField& f, int mu) {
    check_index(mu);
    PolyField out(f.tag(), f.max_total_degree());
    const auto k = static_cast<std::size_t>(mu);
    for (const auto& [d, c] : f.terms()) {
        if (d[k] == 0) continue;
        MultiDegree lowered = d;
        --lowered[k];
        out.add_term(lowered, c * static_cast<double>(d[k]));
    }
    return out;
}

PolyField pullback_linear(const PolyField& f, const Mat4C& m) {
    if (m.max_imag() > kRealMatrixTol * std::max(1.0, m.max_abs())) {
        throw std::invalid_argument("pullback_linear: matrix must be real");
    }
    // (M x)^mu as a linear real polynomial in x.
    std::array<RealPoly, 4> image;
    for (int mu = 0; mu < 4; ++mu) {
        for (int nu = 0; nu < 4; ++nu) {
            const double coeff = m(mu, nu).real();
            if (coeff == 0.0) continue;
            MultiDegree d{};
            d[static_cast<std::size_t>(nu)] = 1;
            image[static_cast<std::size_t>(mu)][d] = coeff;
        }
    }

    PolyField out(f.tag(), f.max_total_degree());
    for (const auto& [d, c] : f.terms()) {
        RealPoly expansion{{MultiDegree{}, 1.0}};
        for (std::size_t mu = 0; mu < 4; ++mu) {
            for (int power = 0; power < d[mu]; ++power) expansion = multiply(expansion, image[mu]);
        }
        for (const auto& [dd, weight] : expansion) {
            if (weight != 0.0) out.add_term(dd, c * weight);
        }
    }
    return out;
}

Complex dirac_scalar(const PolyField& f, const Point& p) {
    if (f.tag() != SubspaceTag::A && f.tag() != SubspaceTag::B) {
        throw DomainViolation("dirac_scalar: field must be tagged A or B");
    }
    const CplxOcton value_star = conj_complex(eval(f, p));
    Complex sum{};
    for (int rho = 0; rho < 4; ++rho) {
        const CplxOcton d = eval(partial(f, rho), p);
        sum += inner(value_star, conj_oct(basis_upper(rho)) * d);
    }
    return sum;
}

double lorentz_invariance_residual(const PolyField& f, const Theta& theta, const Point& p) {
    const auto tag = f.tag();
    if (tag != SubspaceTag::A && tag != SubspaceTag::B) {
        throw DomainViolation("lorentz_invariance_residual: field must be tagged A or B");
    }
    const CplxOcton ls = lambda_S(theta);
    const CplxOcton factor = *tag == SubspaceTag::A ? ls : conj_both(ls);
    const Mat4C lv = lambda_V(theta);
    const Mat4C lv_inv = lambda_V(-theta);

    const PolyField transformed = left_multiply(factor, pullback_linear(f, lv_inv), tag);
    const Complex before = dirac_scalar(f, p);
    const Complex after = dirac_scalar(transformed, apply(lv, p));
    return std::abs(after - before);
}

CplxOcton exp_field_at(const PolyField& u, const Point& p) {
    if (!values_in(u, SubspaceTag::A)) throw DomainViolation("exp_field_at: u must be C⊗A-valued");
    return exp_assoc(eval(u, p));
}

CplxOcton dexp_at(const PolyField& u, int mu, const Point& p) {
    if (!values_in(u, SubspaceTag::A)) throw DomainViolation("dexp_at: u must be C⊗A-valued");
    const CplxOcton value = eval(u, p);
    const CplxOcton du = eval(partial(u, mu), p);
    const double u_mag = value.magnitude();
    const double du_mag = du.magnitude();

    // derivative_m = ∂(u^m) = Σ_l u^l du u^(m-l-1), built as ∂(u^(m+1)) = ∂(u^m) u + u^m du.
    CplxOcton derivative_m = du;
    CplxOcton power_m = value;
    CplxOcton sum;
    double inv_factorial = 1.0;
    double u_pow = 1.0;  // |u|^(m-1)
    for (int m = 1; m <= kDexpMaxTerms; ++m) {
        inv_factorial /= m;
        // The bound decreases monotonically once m exceeds |u|.
        if (m > u_mag && u_pow * du_mag * m * inv_factorial < kDexpTailBound) break;
        sum += derivative_m * inv_factorial;
        derivative_m = derivative_m * value + power_m * du;
        power_m = power_m * value;
        u_pow *= u_mag;
    }
    return sum;
}

}  // namespace octoweak
