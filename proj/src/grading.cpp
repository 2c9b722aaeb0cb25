#include "octoweak/grading.hpp"

#include <algorithm>
#include <string>

#include "octoweak/errors.hpp"

namespace octoweak {

std::string_view to_string(SubspaceTag tag) {
    switch (tag) {
        case SubspaceTag::FullCO: return "C⊗O";
        case SubspaceTag::A: return "C⊗A";
        case SubspaceTag::B: return "C⊗B";
        case SubspaceTag::AMinus: return "(C⊗A)-";
        case SubspaceTag::APlus: return "(C⊗A)+";
    }
    return "?";
}

CplxOcton project(const CplxOcton& x, SubspaceTag tag) {
    CplxOcton a;
    for (int k = 0; k < 4; ++k) a[k] = x[k];
    switch (tag) {
        case SubspaceTag::FullCO: return x;
        case SubspaceTag::A: return a;
        case SubspaceTag::B: return x - a;
        case SubspaceTag::AMinus: return (a - conj_both(a)) * 0.5;
        case SubspaceTag::APlus: return (a + conj_both(a)) * 0.5;
    }
    return x;
}

bool in_subspace(const CplxOcton& x, SubspaceTag tag, double rel_tol) {
    const double off = distance(x, project(x, tag));
    return off < rel_tol * std::max(1.0, x.magnitude());
}

void require_subspace(const CplxOcton& x, SubspaceTag tag, std::string_view what) {
    if (!in_subspace(x, tag)) {
        throw DomainViolation(std::string(what) + " must lie in " + std::string(to_string(tag)));
    }
}

double uniform_symmetric(std::mt19937_64& rng, double bound) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
    return bound * (2.0 * unit - 1.0);
}

CplxOcton sample(SubspaceTag tag, std::mt19937_64& rng, double bound) {
    auto draw = [&] { return uniform_symmetric(rng, bound); };
    auto draw_complex = [&] {
        const double re = draw();
        return Complex(re, draw());
    };
    CplxOcton x;
    switch (tag) {
        case SubspaceTag::FullCO:
            for (int k = 0; k < 8; ++k) x[k] = draw_complex();
            break;
        case SubspaceTag::A:
            for (int k = 0; k < 4; ++k) x[k] = draw_complex();
            break;
        case SubspaceTag::B:
            for (int k = 4; k < 8; ++k) x[k] = draw_complex();
            break;
        case SubspaceTag::AMinus:
            x[0] = Complex(0.0, draw());
            for (int k = 1; k < 4; ++k) x[k] = draw();
            break;
        case SubspaceTag::APlus:
            x[0] = draw();
            for (int k = 1; k < 4; ++k) x[k] = Complex(0.0, draw());
            break;
    }
    return x;
}

CplxOcton sample(SubspaceTag tag, std::uint64_t seed, double bound) {
    std::mt19937_64 rng(seed);
    return sample(tag, rng, bound);
}

CplxOcton residual_ab(const CplxOcton& a, const CplxOcton& b) {
    require_subspace(a, SubspaceTag::A, "a");
    require_subspace(b, SubspaceTag::B, "b");
    return a * b - b * conj_oct(a);
}

CplxOcton residual_aab(const CplxOcton& a, const CplxOcton& a2, const CplxOcton& b) {
    require_subspace(a, SubspaceTag::A, "a");
    require_subspace(a2, SubspaceTag::A, "a'");
    require_subspace(b, SubspaceTag::B, "b");
    return (a * a2) * b - a2 * (a * b);
}

CplxOcton residual_baa(const CplxOcton& a, const CplxOcton& a2, const CplxOcton& b) {
    require_subspace(a, SubspaceTag::A, "a");
    require_subspace(a2, SubspaceTag::A, "a'");
    require_subspace(b, SubspaceTag::B, "b");
    return b * (a2 * a) - (b * a) * a2;
}

CplxOcton residual_bba(const CplxOcton& a, const CplxOcton& b, const CplxOcton& b2) {
    require_subspace(a, SubspaceTag::A, "a");
    require_subspace(b, SubspaceTag::B, "b");
    require_subspace(b2, SubspaceTag::B, "b'");
    return (b * b2) * a - (a * b) * b2;
}

CplxOcton residual_abb(const CplxOcton& a, const CplxOcton& b, const CplxOcton& b2) {
    require_subspace(a, SubspaceTag::A, "a");
    require_subspace(b, SubspaceTag::B, "b");
    require_subspace(b2, SubspaceTag::B, "b'");
    return a * (b2 * b) - b2 * (b * a);
}

CplxOcton residual_abba(const CplxOcton& a, const CplxOcton& a2, const CplxOcton& b,
                        const CplxOcton& b2) {
    require_subspace(a, SubspaceTag::A, "a");
    require_subspace(a2, SubspaceTag::A, "a'");
    require_subspace(b, SubspaceTag::B, "b");
    require_subspace(b2, SubspaceTag::B, "b'");
    // b b' lies in C⊗A, so the right-hand side associates.
    return (a * b) * (b2 * a2) - (a2 * (b * b2)) * a;
}

CplxOcton residual_zvengrowski(const CplxOcton& x, const CplxOcton& y, const CplxOcton& z) {
    return x * (conj_oct(y) * z) + y * (conj_oct(x) * z) - z * (2.0 * inner(x, y));
}

Complex residual_ipmove(IpMove form, const CplxOcton& x, const CplxOcton& y, const CplxOcton& z) {
    switch (form) {
        case IpMove::LL: return inner(x * y, z) - inner(y, conj_oct(x) * z);
        case IpMove::LR: return inner(x * y, z) - inner(x, z * conj_oct(y));
        case IpMove::RL: return inner(z, x * y) - inner(conj_oct(x) * z, y);
        case IpMove::RR: return inner(z, x * y) - inner(z * conj_oct(y), x);
    }
    return {};
}

SubspaceTag product_grade(SubspaceTag x, SubspaceTag y) {
    auto graded = [](SubspaceTag t) { return t == SubspaceTag::A || t == SubspaceTag::B; };
    if (!graded(x) || !graded(y)) {
        throw DomainViolation("product_grade: tags must be A or B");
    }
    return x == y ? SubspaceTag::A : SubspaceTag::B;
}

bool ab_lemma_closure_check(SubspaceTag tag_x, SubspaceTag tag_y, int samples, std::uint64_t seed) {
    const SubspaceTag expected = product_grade(tag_x, tag_y);
    std::mt19937_64 rng(seed);
    for (int n = 0; n < samples; ++n) {
        const CplxOcton x = sample(tag_x, rng, 1.0);
        const CplxOcton y = sample(tag_y, rng, 1.0);
        if (!in_subspace(x * y, expected)) return false;
    }
    return true;
}

}  // namespace octoweak
