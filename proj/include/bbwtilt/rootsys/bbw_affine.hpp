#pragma once

#include "bbwtilt/rootsys/affine.hpp"
#include "bbwtilt/rootsys/bbw.hpp"
#include "bbwtilt/rootsys/region.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bbwtilt::rootsys {

/// Outcome shared by every point of a region: identically singular, or
/// regular with a fixed degree and an affine dominant weight.
struct AffineOutcome {
    bool singular = true;
    int degree = 0;
    AffineWeight dominant;
    std::vector<int> word;

    std::string to_string() const;
};

struct PointOutcome {
    std::int64_t k = 0;
    std::int64_t j = 0;
    BBWResult result = BBWResult::singular();
};

struct RegionOutcome {
    Region region;
    AffineOutcome outcome;
};

struct AffineResolution {
    bool inconclusive = false;
    std::string reason;
    /// Every admissible point outside the unbounded regions, sorted by (k, j).
    std::vector<PointOutcome> points;
    std::vector<RegionOutcome> regions;
    /// One more than the largest k among the finite points (kmin when there are none).
    std::int64_t threshold_k = 0;
};

/// Symbolic Borel-Bott-Weil over the weight's parameter domain.
///
/// The singularity test and the reflection loop run on affine forms; whenever
/// the sign of a form is not constant on the current region the region is
/// split. Bounded leaves are expanded into concrete points and each one is
/// resolved with bbw_resolve as a cross-check (a disagreement is an
/// InternalError). Unbounded leaves are additionally checked concretely at
/// every point with k <= kmax_concrete and j within kmax_concrete of jmin.
///
/// Throws std::invalid_argument if some admissible point is not Levi-dominant.
AffineResolution bbw_resolve_affine(const AffineWeight& w, std::int64_t kmax_concrete = 10);

} // namespace bbwtilt::rootsys
