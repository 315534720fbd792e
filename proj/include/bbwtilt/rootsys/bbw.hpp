#pragma once

#include "bbwtilt/rootsys/weight.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace bbwtilt::rootsys {

/// lambda_1 >= lambda_2 >= lambda_3 >= |lambda_4|
bool is_dominant(const Weight& w);

/// lambda_2 >= lambda_3 >= |lambda_4|; the weights that index irreducible
/// homogeneous bundles F_w on OG(1,8).
bool is_levi_dominant(const Weight& w);

/// s_i o w = s_i(w + rho) - rho for the simple reflection i in 1..4.
/// Throws std::out_of_range for any other index.
Weight dotted_reflect(int i, const Weight& w);

/// True iff w + rho is fixed by a reflection, i.e. |(w+rho)_a| = |(w+rho)_b| for some a < b.
bool is_singular(const Weight& w);

struct Regular {
    int degree = 0;
    Weight dominant;
    std::uint64_t dim = 0;
    /// Simple reflections applied, in order; size() == degree.
    std::vector<int> word;

    friend bool operator==(const Regular&, const Regular&) = default;
};

/// Outcome of Borel-Bott-Weil for one irreducible bundle: all cohomology
/// vanishes (singular), or it is concentrated in one degree.
class BBWResult {
public:
    static BBWResult singular() { return BBWResult{}; }
    static BBWResult regular(Regular r) { return BBWResult{std::move(r)}; }

    bool is_singular() const noexcept { return !regular_.has_value(); }
    const Regular& regular() const { return regular_.value(); }

    /// dim H^i; zero for singular weights and for every i other than the degree.
    std::uint64_t dim_at(int i) const noexcept;

    std::string to_string() const;

    friend bool operator==(const BBWResult&, const BBWResult&) = default;

private:
    BBWResult() = default;
    explicit BBWResult(Regular r) : regular_(std::move(r)) {}
    std::optional<Regular> regular_;
};

/// Resolves a Levi-dominant weight by repeatedly applying the dotted reflection
/// at the smallest simple root whose pairing with w + rho is negative.
/// Throws std::invalid_argument for weights that are not Levi-dominant and
/// InternalError if more than 12 reflections are needed.
BBWResult bbw_resolve(const Weight& w);

/// Weyl dimension formula over the 12 positive roots. Throws std::invalid_argument
/// for non-dominant input and std::overflow_error if the product leaves 128 bits.
std::uint64_t weyl_dim_d4(const Weight& w);

/// Rank of F_w: the Weyl dimension formula for the Levi roots only.
/// Throws std::invalid_argument for non-Levi-dominant input.
std::uint64_t levi_rank(const Weight& w);

/// Weight of F_w^dual (x) O(-6): (-lambda_1 - 6, lambda_2, lambda_3, -lambda_4).
Weight serre_dual_weight(const Weight& w);

} // namespace bbwtilt::rootsys
