#pragma once

// Z2 grading C⊗O = (C⊗A) ⊕ (C⊗B) with A = span{1, e1, e2, e3} and
// B = span{e4, ..., e7}, the ± eigenspaces of x ↦ x̄*, and residual
// evaluators for the composition-algebra identities used throughout.

#include <cstdint>
#include <random>
#include <string_view>

#include "octoweak/octonion.hpp"

namespace octoweak {

enum class SubspaceTag {
    FullCO,
    A,
    B,
    AMinus,  ///< {x in C⊗A : x̄* = -x} = real span{i, e1, e2, e3}
    APlus,   ///< {x in C⊗A : x̄* = +x} = real span{1, i e1, i e2, i e3}
};

std::string_view to_string(SubspaceTag tag);

CplxOcton project(const CplxOcton& x, SubspaceTag tag);

/// True when x minus its projection has magnitude below rel_tol * max(1, |x|).
bool in_subspace(const CplxOcton& x, SubspaceTag tag,
                 double rel_tol = tolerance::kMembership);

/// Throws DomainViolation naming `what` unless in_subspace(x, tag).
void require_subspace(const CplxOcton& x, SubspaceTag tag, std::string_view what);

/// Uniform coefficients in [-bound, bound] on the real degrees of freedom of the subspace.
CplxOcton sample(SubspaceTag tag, std::mt19937_64& rng, double bound);
/// Same, from a fresh engine seeded with `seed`.
CplxOcton sample(SubspaceTag tag, std::uint64_t seed, double bound);

/// Uniform real in [-bound, bound] built from the raw engine output, so the
/// stream is identical on every standard library.
double uniform_symmetric(std::mt19937_64& rng, double bound);

// Residuals: left-hand side minus right-hand side. a, a2 in C⊗A; b, b2 in C⊗B.

/// ab - b ā
CplxOcton residual_ab(const CplxOcton& a, const CplxOcton& b);
/// (a a2) b - a2 (a b)
CplxOcton residual_aab(const CplxOcton& a, const CplxOcton& a2, const CplxOcton& b);
/// b (a2 a) - (b a) a2
CplxOcton residual_baa(const CplxOcton& a, const CplxOcton& a2, const CplxOcton& b);
/// (b b2) a - (a b) b2
CplxOcton residual_bba(const CplxOcton& a, const CplxOcton& b, const CplxOcton& b2);
/// a (b2 b) - b2 (b a)
CplxOcton residual_abb(const CplxOcton& a, const CplxOcton& b, const CplxOcton& b2);
/// (a b)(b2 a2) - a2 (b b2) a
CplxOcton residual_abba(const CplxOcton& a, const CplxOcton& a2, const CplxOcton& b,
                        const CplxOcton& b2);

/// x(ȳz) + y(x̄z) - 2<x,y>z, valid on all of C⊗O.
CplxOcton residual_zvengrowski(const CplxOcton& x, const CplxOcton& y, const CplxOcton& z);

enum class IpMove {
    LL,  ///< <xy,z> = <y, x̄z>
    LR,  ///< <xy,z> = <x, zȳ>
    RL,  ///< <z,xy> = <x̄z, y>
    RR,  ///< <z,xy> = <zȳ, x>
};

Complex residual_ipmove(IpMove form, const CplxOcton& x, const CplxOcton& y, const CplxOcton& z);

/// Subspace that products X·Y land in: A·A = B·B = A, A·B = B·A = B.
SubspaceTag product_grade(SubspaceTag x, SubspaceTag y);

/// Samples `samples` pairs from (tag_x, tag_y) and checks each product lies in product_grade.
bool ab_lemma_closure_check(SubspaceTag tag_x, SubspaceTag tag_y, int samples, std::uint64_t seed);

}  // namespace octoweak
