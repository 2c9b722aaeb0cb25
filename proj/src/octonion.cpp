#include "octoweak/octonion.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "octoweak/errors.hpp"
#include "octoweak/grading.hpp"

namespace octoweak {

namespace {

// Generated once from (a,b)(c,d) = (ac - d̄b, da + bc̄) on quaternion pairs,
// with x = (x0 + x1 e1 + x2 e2 + x3 e3, x4 + x5 e1 + x6 e2 + x7 e3).
constexpr StructureTable kTable{
    // sign
    {{
        {{+1, +1, +1, +1, +1, +1, +1, +1}},
        {{+1, -1, +1, -1, +1, -1, -1, +1}},
        {{+1, -1, -1, +1, +1, +1, -1, -1}},
        {{+1, +1, -1, -1, +1, -1, +1, -1}},
        {{+1, -1, -1, -1, -1, +1, +1, +1}},
        {{+1, +1, -1, +1, -1, -1, -1, +1}},
        {{+1, +1, +1, -1, -1, +1, -1, -1}},
        {{+1, -1, +1, +1, -1, -1, +1, -1}},
    }},
    // index
    {{
        {{0, 1, 2, 3, 4, 5, 6, 7}},
        {{1, 0, 3, 2, 5, 4, 7, 6}},
        {{2, 3, 0, 1, 6, 7, 4, 5}},
        {{3, 2, 1, 0, 7, 6, 5, 4}},
        {{4, 5, 6, 7, 0, 1, 2, 3}},
        {{5, 4, 7, 6, 1, 0, 3, 2}},
        {{6, 7, 4, 5, 2, 3, 0, 1}},
        {{7, 6, 5, 4, 3, 2, 1, 0}},
    }},
};

}  // namespace

CplxOcton CplxOcton::basis(int k) {
    CplxOcton x;
    x.c_.at(static_cast<std::size_t>(k)) = 1.0;
    return x;
}

CplxOcton& CplxOcton::operator+=(const CplxOcton& o) {
    for (int k = 0; k < kDim; ++k) (*this)[k] += o[k];
    return *this;
}

CplxOcton& CplxOcton::operator-=(const CplxOcton& o) {
    for (int k = 0; k < kDim; ++k) (*this)[k] -= o[k];
    return *this;
}

CplxOcton& CplxOcton::operator*=(Complex s) {
    for (auto& c : c_) c *= s;
    return *this;
}

CplxOcton& CplxOcton::operator/=(Complex s) {
    for (auto& c : c_) c /= s;
    return *this;
}

double CplxOcton::magnitude() const {
    double sum = 0.0;
    for (const auto& c : c_) sum += std::norm(c);
    return std::sqrt(sum);
}

bool CplxOcton::is_finite() const {
    for (const auto& c : c_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) return false;
    }
    return true;
}

CplxOcton operator+(CplxOcton a, const CplxOcton& b) { return a += b; }
CplxOcton operator-(CplxOcton a, const CplxOcton& b) { return a -= b; }
CplxOcton operator-(const CplxOcton& a) { return a * Complex(-1.0); }
CplxOcton operator*(CplxOcton a, Complex s) { return a *= s; }
CplxOcton operator*(Complex s, CplxOcton a) { return a *= s; }
CplxOcton operator/(CplxOcton a, Complex s) { return a /= s; }
CplxOcton operator*(const CplxOcton& x, const CplxOcton& y) { return mul(x, y); }

std::ostream& operator<<(std::ostream& os, const CplxOcton& x) {
    os << '[';
    for (int k = 0; k < CplxOcton::kDim; ++k) {
        if (k) os << ", ";
        os << x[k].real() << (x[k].imag() < 0 ? "-" : "+") << std::abs(x[k].imag()) << 'i';
    }
    return os << ']';
}

const StructureTable& structure_table() { return kTable; }

std::string format_structure_table() {
    std::ostringstream out;
    for (int a = 0; a < 8; ++a) {
        for (int b = 0; b < 8; ++b) {
            if (b) out << ' ';
            out << (kTable.sign[a][b] > 0 ? '+' : '-') << int(kTable.index[a][b]);
        }
        out << '\n';
    }
    return out.str();
}

CplxOcton mul(const CplxOcton& x, const CplxOcton& y) {
    CplxOcton out;
    for (int a = 0; a < 8; ++a) {
        if (x[a] == Complex{}) continue;
        for (int b = 0; b < 8; ++b) {
            const Complex term = x[a] * y[b];
            if (kTable.sign[a][b] > 0) {
                out[kTable.index[a][b]] += term;
            } else {
                out[kTable.index[a][b]] -= term;
            }
        }
    }
    return out;
}

CplxOcton conj_oct(const CplxOcton& x) {
    CplxOcton out = x;
    for (int k = 1; k < 8; ++k) out[k] = -out[k];
    return out;
}

CplxOcton conj_complex(const CplxOcton& x) {
    CplxOcton out = x;
    for (int k = 0; k < 8; ++k) out[k] = std::conj(out[k]);
    return out;
}

CplxOcton conj_both(const CplxOcton& x) { return conj_complex(conj_oct(x)); }

Complex scal(const CplxOcton& x) { return x[0]; }

CplxOcton vec(const CplxOcton& x) {
    CplxOcton out = x;
    out[0] = 0.0;
    return out;
}

// The basis is orthonormal for <.,.>, so the form reduces to a coefficient sum.
Complex inner(const CplxOcton& x, const CplxOcton& y) {
    Complex sum{};
    for (int k = 0; k < 8; ++k) sum += x[k] * y[k];
    return sum;
}

CplxOcton associator(const CplxOcton& x, const CplxOcton& y, const CplxOcton& z) {
    return (x * y) * z - x * (y * z);
}

CplxOcton commutator(const CplxOcton& x, const CplxOcton& y) { return x * y - y * x; }

Complex norm(const CplxOcton& x) { return inner(x, x); }

CplxOcton inverse(const CplxOcton& x) {
    const Complex n = norm(x);
    const double mag = x.magnitude();
    const double eps = tolerance::kZeroDivisor * std::max(1.0, mag * mag);
    if (std::abs(n) < eps) {
        std::ostringstream msg;
        msg << "inverse: |N(x)| = " << std::abs(n) << " below " << eps;
        throw ZeroDivisor(msg.str());
    }
    return conj_oct(x) / n;
}

CplxOcton exp_assoc(const CplxOcton& u) {
    if (!in_subspace(u, SubspaceTag::A)) {
        throw NotInAssociativeSubalgebra("exp_assoc: argument has components along e4..e7");
    }
    const Complex s = scal(u);
    const CplxOcton v = vec(u);
    const Complex w2 = inner(v, v);
    const Complex w = std::sqrt(w2);  // principal branch

    Complex cos_w;
    Complex sinc_w;
    if (std::abs(w) < 1e-6) {
        cos_w = 1.0 - w2 / 2.0 + w2 * w2 / 24.0 - w2 * w2 * w2 / 720.0;
        sinc_w = 1.0 - w2 / 6.0 + w2 * w2 / 120.0 - w2 * w2 * w2 / 5040.0;
    } else {
        cos_w = std::cos(w);
        sinc_w = std::sin(w) / w;
    }
    CplxOcton out = v * sinc_w;
    out[0] += cos_w;
    return out * std::exp(s);
}

double distance(const CplxOcton& x, const CplxOcton& y) { return (x - y).magnitude(); }

bool approx_equal(const CplxOcton& x, const CplxOcton& y, double tol) {
    return distance(x, y) <= tol;
}

}  // namespace octoweak
