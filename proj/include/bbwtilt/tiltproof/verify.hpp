#pragma once

#include "bbwtilt/tiltproof/engine.hpp"

#include <map>
#include <string>
#include <vector>

namespace bbwtilt::tiltproof {

enum class ClaimVerdict { Pass, Fail, Inconclusive };
std::string to_string(ClaimVerdict v);

struct ReportStep {
    std::string label;
    std::string verdict;
    std::string detail;
    Json data;
};

struct ClaimReport {
    std::string id;
    std::string kind;
    std::string title;
    ClaimVerdict verdict = ClaimVerdict::Inconclusive;
    std::string summary;
    std::vector<ReportStep> steps;
    double wall_time_s = 0;

    bool pass() const noexcept { return verdict == ClaimVerdict::Pass; }
};

/// Field order is fixed; wall time only when requested so that runs compare byte for byte.
Json to_json(const ClaimReport& r, bool with_timing = false);
std::string to_text(const ClaimReport& r, bool verbose = false);

struct VerifyOptions {
    EngineOptions engine;
    std::int64_t kmax = 10;
    Exec exec = Exec::Parallel;
};

/// Every registered extension object has a one-dimensional witness.
ClaimReport verify_extension_registry(const Registry& reg, const VerifyOptions& opts = {});

/// Ext^{>0}(T, T) = 0 over all ordered summand pairs.
ClaimReport verify_theorem(const Registry& reg, const std::string& id, const VerifyOptions& opts = {});

/// Same, with a caller-supplied engine (shared memo, custom options).
ClaimReport verify_theorem(const Registry& reg, const ClaimSpec& spec, Engine& engine);

/// Strong exceptionality on Q^6 of an ordered list of bundles.
ClaimReport verify_collection(const std::vector<BundleExpr>& bundles, const std::string& id, Exec exec);
ClaimReport verify_collection(const Registry& reg, const std::string& id, const VerifyOptions& opts = {});

/// Graded Hom dimensions of the summands of a tilting bundle. Extension objects
/// carry a grade shift on their quotient, so grades may start below zero.
struct GradedHom {
    std::vector<Summand> summands;
    std::int64_t lowest = 0;
    /// g[i][j][k - lowest] for lowest <= k < grades.
    std::vector<std::vector<std::vector<std::int64_t>>> g;

    /// Zero below `lowest`; throws InternalError past the computed range.
    std::int64_t at(std::size_t i, std::size_t j, std::int64_t k) const;
    std::int64_t top() const { return lowest + static_cast<std::int64_t>(g.at(0).at(0).size()) - 1; }
};
GradedHom graded_hom(const Registry& reg, const std::vector<Summand>& summands, Space side, std::int64_t grades,
                     Exec exec = Exec::Parallel);

struct EndCompareResult {
    bool found = false;
    /// Offset per plus-side summand, with c_O = 0.
    std::vector<std::int64_t> offsets;
    std::string mismatch;
};

/// Searches offsets c_i in [-6, 6] with g+_{ij}(k) = g-_{s(i)s(j)}(k + c_i - c_j) for all computed k <= n.
EndCompareResult compare_graded(const GradedHom& plus, const GradedHom& minus, const std::vector<std::size_t>& sigma,
                                std::size_t anchor, std::int64_t n);

ClaimReport end_compare(const Registry& reg, const std::string& plus_theorem, const std::string& minus_theorem,
                        std::int64_t n, Exec exec = Exec::Parallel);

/// Dispatch on the claim kind. Throws std::invalid_argument for unknown ids.
ClaimReport verify_claim(const Registry& reg, const std::string& id, const VerifyOptions& opts = {});

} // namespace bbwtilt::tiltproof
