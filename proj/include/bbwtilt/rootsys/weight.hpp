#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace bbwtilt::rootsys {

/// Integer 4-vector; the D4 roots and the GL(4) directions all live here.
using IntVec4 = std::array<std::int64_t, 4>;

/// A point of the D4 weight lattice.
///
/// Coordinates are half-integers stored doubled, so every operation is exact.
/// The lattice condition is that the four coordinates are either all integral
/// or all half-integral, i.e. the doubled entries share one parity.
class Weight {
public:
    constexpr Weight() = default;

    /// Throws std::invalid_argument when the doubled entries have mixed parity.
    static Weight from_doubled(const IntVec4& doubled);
    static Weight integral(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

    /// Accepts "a,b,c,d" where each entry is an integer or "p/2"; brackets,
    /// quotes and whitespace are ignored. Throws ParseError.
    static Weight parse(std::string_view text);

    const IntVec4& doubled() const noexcept { return d_; }
    std::int64_t doubled(std::size_t i) const noexcept { return d_[i]; }

    Weight operator+(const Weight& o) const;
    Weight operator-(const Weight& o) const;

    friend auto operator<=>(const Weight&, const Weight&) = default;

    /// "(-1/2,1/2,1/2,1/2)"
    std::string to_string() const;
    /// Reduced rational strings, e.g. {"-1/2","1/2","1/2","1/2"} or {"0","1","0","0"}.
    std::array<std::string, 4> coordinate_strings() const;

private:
    explicit constexpr Weight(const IntVec4& d) : d_(d) {}
    IntVec4 d_{};
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

/// Reduced string for a doubled half-integer: 3 -> "3/2", 4 -> "2", -1 -> "-1/2".
std::string format_half(std::int64_t doubled);

/// Half the sum of the positive roots, (3,2,1,0).
const Weight& rho();

/// The twelve positive roots e_i - e_j, e_i + e_j (i < j), in that interleaved order.
const std::array<IntVec4, 12>& positive_roots();

/// alpha_1 = (1,-1,0,0), alpha_2 = (0,1,-1,0), alpha_3 = (0,0,1,-1), alpha_4 = (0,0,1,1).
const std::array<IntVec4, 4>& simple_roots();

/// The six positive roots of the Levi factor of P_{alpha_1}: e_i +- e_j with 2 <= i < j <= 4.
const std::array<IntVec4, 6>& levi_positive_roots();

/// <w, alpha> for a root alpha of the form e_i +- e_j; always an integer on the lattice.
std::int64_t pairing(const Weight& w, const IntVec4& root);

} // namespace bbwtilt::rootsys
