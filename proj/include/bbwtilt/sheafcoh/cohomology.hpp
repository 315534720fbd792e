#pragma once

#include "bbwtilt/exec.hpp"
#include "bbwtilt/tensorcalc/expr.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace bbwtilt::sheafcoh {

using rootsys::Weight;
using tensorcalc::BundleExpr;

enum class Space { Q6, XPlus, XMinus };

std::string to_string(Space s);
/// "q6", "xplus", "xminus"; throws ParseError otherwise.
Space parse_space(const std::string& s);

/// One irreducible summand H^i = V_weight^{mult}, dim per copy.
struct CohomGroup {
    int i = 0;
    Weight weight;
    std::uint64_t dim = 0;
    std::int64_t mult = 0;

    std::uint64_t total() const noexcept { return dim * static_cast<std::uint64_t>(mult); }
    friend bool operator==(const CohomGroup&, const CohomGroup&) = default;
};

struct GradeCohom {
    std::int64_t k = 0;
    /// Sorted by (i, weight).
    std::vector<CohomGroup> groups;

    std::uint64_t dim(int i) const noexcept;
    friend bool operator==(const GradeCohom&, const GradeCohom&) = default;
};

/// Cohomology of a bundle on Q^6 (a single grade k = 0) or on X+/X- (grades
/// 0..kmax, grade k being Sym^k S (x) O(2k) (x) e on Q^6).
struct CohomTable {
    Space space = Space::Q6;
    std::vector<GradeCohom> grades;

    std::uint64_t dim(int i) const noexcept;
    std::uint64_t dim(std::int64_t k, int i) const noexcept;
    friend bool operator==(const CohomTable&, const CohomTable&) = default;
};

/// decompose(e), then Borel-Bott-Weil on every summand.
CohomTable cohomology_q6(const BundleExpr& e);

/// Grades 0..kmax of H^*(X, e). X+ and X- share the one OG(1,8) model; `side`
/// only labels the table. The parallel path evaluates grades concurrently.
CohomTable cohomology_total(const BundleExpr& e, Space side, std::int64_t kmax, Exec exec = Exec::Parallel);

/// The expression whose Q^6-cohomology is grade k of H^*(X, e).
BundleExpr grade_expr(const BundleExpr& e, std::int64_t k);

/// Human-readable multi-line rendering.
std::string to_text(const CohomTable& t);

} // namespace bbwtilt::sheafcoh
