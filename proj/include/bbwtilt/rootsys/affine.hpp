#pragma once

#include "bbwtilt/rootsys/weight.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>

namespace bbwtilt::rootsys {

/// k*K + j*J + c over integer parameters K (Sym-degree) and J (twist).
struct AffineForm {
    std::int64_t k = 0;
    std::int64_t j = 0;
    std::int64_t c = 0;

    std::int64_t eval(std::int64_t kv, std::int64_t jv) const noexcept { return k * kv + j * jv + c; }
    bool is_constant() const noexcept { return k == 0 && j == 0; }

    AffineForm operator+(const AffineForm& o) const noexcept { return {k + o.k, j + o.j, c + o.c}; }
    AffineForm operator-(const AffineForm& o) const noexcept { return {k - o.k, j - o.j, c - o.c}; }
    AffineForm operator-() const noexcept { return {-k, -j, -c}; }
    AffineForm operator*(std::int64_t s) const noexcept { return {k * s, j * s, c * s}; }

    friend auto operator<=>(const AffineForm&, const AffineForm&) = default;

    /// "3k+2j-1", "k", "0"
    std::string to_string() const;
};

/// Admissible parameter points: k >= kmin (and k <= kmax if set); j >= jmin
/// when the family has a j parameter, otherwise j is pinned to 0.
struct ParamDomain {
    std::int64_t kmin = 0;
    std::optional<std::int64_t> kmax;
    bool has_j = false;
    std::int64_t jmin = 0;

    bool contains(std::int64_t kv, std::int64_t jv) const noexcept;

    friend bool operator==(const ParamDomain&, const ParamDomain&) = default;
};

/// A weight whose doubled coordinates are affine forms in (k, j).
class AffineWeight {
public:
    AffineWeight() = default;

    /// Throws std::invalid_argument unless the four forms agree modulo 2
    /// coefficient by coefficient, which is exactly the condition for every
    /// integer evaluation to satisfy the lattice parity rule.
    AffineWeight(const std::array<AffineForm, 4>& doubled, ParamDomain domain);

    static AffineWeight constant(const Weight& w, ParamDomain domain = {});

    const std::array<AffineForm, 4>& doubled() const noexcept { return d_; }
    const AffineForm& doubled(std::size_t i) const noexcept { return d_[i]; }
    const ParamDomain& domain() const noexcept { return domain_; }

    Weight at(std::int64_t kv, std::int64_t jv = 0) const;

    /// <w, alpha> as a form; integral because of the parity condition.
    AffineForm pairing(const IntVec4& root) const;

    AffineWeight operator+(const Weight& w) const;
    AffineWeight operator-(const Weight& w) const;

    /// Same coordinates, different domain.
    AffineWeight with_domain(ParamDomain domain) const { return AffineWeight(d_, domain); }

    friend bool operator==(const AffineWeight&, const AffineWeight&) = default;

    /// "((3k+2j)/2,k/2,k/2,k/2)"; coordinates with even forms print without a denominator.
    std::string to_string() const;
    /// One string per coordinate, same convention as to_string().
    std::array<std::string, 4> coordinate_strings() const;

private:
    std::array<AffineForm, 4> d_{};
    ParamDomain domain_{};
};

/// Applies the dotted simple reflection coordinatewise to the forms.
AffineWeight dotted_reflect(int i, const AffineWeight& w);

} // namespace bbwtilt::rootsys
