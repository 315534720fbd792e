#pragma once

#include "bbwtilt/rootsys/affine.hpp"
#include "bbwtilt/sheafcoh/cohomology.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bbwtilt::sheafcoh {

using rootsys::ParamDomain;

enum class Verdict { Pass, PassWithExceptions, Fail, Inconclusive };

std::string to_string(Verdict v);

/// A nonzero group the claim allows (or requires) at one parameter point.
struct ExpectedException {
    std::int64_t k = 0;
    std::int64_t j = 0;
    int i = 0;
    std::optional<Weight> weight;
    /// Dimension of one copy of the representation.
    std::optional<std::uint64_t> dim;
    std::optional<std::int64_t> mult;
};

/// "H^i(family) = 0 for i > cutoff on the domain, apart from the listed exceptions".
struct VanishingClaim {
    BundleExpr family;
    /// -1 demands vanishing in every degree.
    int cutoff = 0;
    ParamDomain domain;
    std::vector<ExpectedException> expected;
    /// Every regular non-dominant point must be listed in `expected`.
    bool exact_exceptions = false;
    /// Every summand at every point must be dominant (no singular or shifted weight).
    bool require_dominant = false;
};

/// Regular point with positive degree, one entry per (k, j, i, weight).
struct FlaggedPoint {
    std::int64_t k = 0;
    std::int64_t j = 0;
    int i = 0;
    Weight weight;
    std::uint64_t dim = 0;
    std::int64_t mult = 0;
    bool expected = false;
};

/// Uniform outcome of one affine summand family on one unbounded region.
struct RegionEvidence {
    std::string family;
    std::int64_t mult = 0;
    std::string region;
    std::string outcome;
    bool singular = false;
    int degree = 0;
};

struct VanishingCertificate {
    VanishingClaim claim;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<RegionEvidence> regions;
    std::vector<FlaggedPoint> flagged;
    /// Number of finite parameter points examined per summand family, summed.
    std::int64_t finite_points = 0;
    std::int64_t threshold_k = 0;
    std::vector<std::string> failures;

    bool ok() const noexcept { return verdict == Verdict::Pass || verdict == Verdict::PassWithExceptions; }
    /// Sum of dim * mult over flagged points in degrees > 0; unbounded
    /// regions with positive degree make this meaningless and set `infinite`.
    std::uint64_t higher_total(bool* infinite = nullptr) const;
};

/// All-k certificate: decompose_affine, then bbw_resolve_affine on every family.
/// Propagates StabilityFailure; symbolic inconclusiveness yields Verdict::Inconclusive.
VanishingCertificate prove_vanishing(const VanishingClaim& claim, std::int64_t kmax_concrete = 10);

/// Ext^*(A, B) on X as the graded family Sym^k S (x) O(2k) (x) A^dual (x) B, k >= 0.
BundleExpr ext_family(const BundleExpr& a, const BundleExpr& b);

/// Truncated Ext^*(A, B) on X through grade kmax.
CohomTable ext_pullbacks(const BundleExpr& a, const BundleExpr& b, Space side, std::int64_t kmax,
                         Exec exec = Exec::Parallel);

/// All-k certificate that Ext^i(A, B) = 0 for i > cutoff on X.
VanishingCertificate ext_pullbacks_all_k(const BundleExpr& a, const BundleExpr& b, int cutoff = 0,
                                         std::vector<ExpectedException> expected = {});

/// Multi-line rendering of a certificate.
std::string to_text(const VanishingCertificate& c);

} // namespace bbwtilt::sheafcoh
