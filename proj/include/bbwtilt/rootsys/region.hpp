#pragma once

#include "bbwtilt/rootsys/affine.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace bbwtilt::rootsys {

/// A set of integer points (k, j) cut out by finitely many constraints form >= 0.
///
/// Constraints are stored normalised: the (k, j) coefficients are divided by
/// their gcd and the constant is floored, which leaves the integer points
/// unchanged. Every region must be pointed (normals of rank 2); regions built
/// from a ParamDomain always are, since they carry k >= kmin and j >= jmin or j = 0.
class Region {
public:
    explicit Region(const ParamDomain& domain);

    /// Adds form >= 0.
    Region& add(const AffineForm& f);
    Region with(const AffineForm& f) const { return Region(*this).add(f); }

    const std::vector<AffineForm>& constraints() const noexcept { return cons_; }

    bool contains(std::int64_t kv, std::int64_t jv) const noexcept;

    /// No integer point.
    bool empty() const;
    /// The rational relaxation has a trivial recession cone.
    bool bounded() const;

    /// All integer points sorted by (k, j). Throws InternalError on unbounded regions.
    std::vector<std::pair<std::int64_t, std::int64_t>> lattice_points() const;

    struct SignSet {
        bool neg = false;
        bool zero = false;
        bool pos = false;
        bool uniform() const noexcept { return int(neg) + int(zero) + int(pos) <= 1; }
    };
    /// Which signs f takes at integer points of the region.
    SignSet signs(const AffineForm& f) const;

    /// Drops constraints implied by the others (integer sense).
    Region simplified() const;

    /// "k >= 0, j >= -5, k+j >= 0"
    std::string to_string() const;

private:
    Region() = default;
    bool rationally_empty() const;
    std::vector<AffineForm> cons_;
    bool has_j_ = false;
};

} // namespace bbwtilt::rootsys
