#pragma once

#include "bbwtilt/rootsys/affine.hpp"
#include "bbwtilt/tensorcalc/expr.hpp"

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace bbwtilt::tensorcalc {

using rootsys::AffineWeight;
using rootsys::ParamDomain;

/// Irreducible summands F_w with multiplicities; every key is Levi-dominant.
using Decomposition = std::map<Weight, std::int64_t>;

/// LR-multiplies the GL parts left to right and maps each product weight c to
/// phi(c) + (t,0,0,0), t the total twist. Checks the rank identity
/// sum mult * levi_rank = rank(e) and throws InternalError if it fails.
/// Throws std::invalid_argument for symbolic expressions.
Decomposition decompose(const BundleExpr& e);

/// GL(4) content of a concrete expression before applying phi.
GLMultiset gl_content(const BundleExpr& e);

struct AffineTerm {
    AffineWeight weight;
    std::int64_t mult = 0;
};

struct AffineDecomposition {
    /// Stability threshold used for the symbolic part.
    static constexpr std::int64_t kK0 = 4;

    /// Families valid for k >= max(K0, kmin); each carries that domain.
    std::vector<AffineTerm> stable;
    /// One entry per k in [kmin, K0): families in j with k pinned to that value.
    std::map<std::int64_t, std::vector<AffineTerm>> low;
    /// Smallest k from which the stable offsets already hold.
    std::int64_t first_stable_k = kK0;
    ParamDomain domain;

    /// All terms (stable and low) whose domain contains k.
    std::vector<AffineTerm> at_k(std::int64_t k) const;
};

/// Decomposition of an expression with one Sym^k S factor, uniformly in k.
///
/// The GL content at k is (k,0,0,0) times the content of the remaining
/// factors; its offsets from (k,0,0,0) are computed at K0 and K0+1 and must
/// agree, otherwise StabilityFailure is thrown. `domain` gives kmin and the j
/// range; has_j is forced on when the twist uses j.
AffineDecomposition decompose_affine(const BundleExpr& e, ParamDomain domain = {});

} // namespace bbwtilt::tensorcalc
