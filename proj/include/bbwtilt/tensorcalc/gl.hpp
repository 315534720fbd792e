#pragma once

#include "bbwtilt/rootsys/weight.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>

namespace bbwtilt::tensorcalc {

using rootsys::IntVec4;
using rootsys::Weight;

/// Highest weight of an irreducible GL(4)-representation: a1 >= a2 >= a3 >= a4.
class GLWeight {
public:
    GLWeight() = default;
    /// Throws std::invalid_argument unless the parts are weakly decreasing.
    explicit GLWeight(const IntVec4& parts);
    GLWeight(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) : GLWeight(IntVec4{a, b, c, d}) {}

    const IntVec4& parts() const noexcept { return p_; }
    std::int64_t operator[](std::size_t i) const noexcept { return p_[i]; }
    std::int64_t size() const noexcept { return p_[0] + p_[1] + p_[2] + p_[3]; }

    /// Tensor with det^c.
    GLWeight shifted(std::int64_t c) const { return GLWeight(p_[0] + c, p_[1] + c, p_[2] + c, p_[3] + c); }
    /// (a1..a4) -> (-a4,-a3,-a2,-a1)
    GLWeight dual() const { return GLWeight(-p_[3], -p_[2], -p_[1], -p_[0]); }

    friend auto operator<=>(const GLWeight&, const GLWeight&) = default;

    std::string to_string() const;

private:
    IntVec4 p_{};
};

using GLMultiset = std::map<GLWeight, std::int64_t>;

/// prod_{i<j} (a_i - a_j + j - i) / (j - i)
std::uint64_t gl_dim(const GLWeight& a);

/// The linear map Z^4 -> L_{D4} with half-matrix rows (1,1,1,1), (1,1,-1,-1), (1,-1,1,-1), (1,-1,-1,1).
Weight phi(const IntVec4& a);
inline Weight phi(const GLWeight& a) { return phi(a.parts()); }

/// Littlewood-Richardson product of two GL(4) irreducibles as a multiset.
GLMultiset lr_decompose(const GLWeight& a, const GLWeight& b);

/// Multiplies every term of a multiset by b.
GLMultiset lr_multiply(const GLMultiset& a, const GLWeight& b);

} // namespace bbwtilt::tensorcalc
