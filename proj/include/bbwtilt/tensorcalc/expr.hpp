#pragma once

#include "bbwtilt/rootsys/affine.hpp"
#include "bbwtilt/tensorcalc/gl.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace bbwtilt::tensorcalc {

using rootsys::AffineForm;

/// The homogeneous bundle F_{phi(gl)} (x) O(twist) on OG(1,8).
///
/// Twists are integers: phi(gl) and phi(gl) + (t,0,0,0) both lie in the lattice
/// only when t is integral.
struct Atom {
    GLWeight gl;
    std::int64_t twist = 0;

    Weight weight() const;
    Atom dual() const { return {gl.dual(), -twist}; }
    std::uint64_t rank() const { return gl_dim(gl); }

    friend auto operator<=>(const Atom&, const Atom&) = default;
};

/// A formal tensor product of atoms, optionally with one symbolic factor Sym^k S
/// and a twist O(ak + bj + c) affine in the parameters.
///
/// Concrete atoms keep their own twists; `twist` only collects the symbolic part
/// and the constant twists written as O(n) so that to_string() can show them.
class BundleExpr {
public:
    BundleExpr() = default;

    static BundleExpr O(std::int64_t j);
    static BundleExpr O(const AffineForm& t);
    static BundleExpr S();
    static BundleExpr Sv();
    static BundleExpr sym(std::int64_t n);
    /// The symbolic factor Sym^k S.
    static BundleExpr sym_k();
    static BundleExpr atom(const Atom& a);

    BundleExpr operator*(const BundleExpr& o) const;
    BundleExpr& operator*=(const BundleExpr& o);

    /// Throws std::invalid_argument for symbolic expressions.
    BundleExpr dual() const;

    bool has_sym_k() const noexcept { return sym_k_; }
    bool uses_j() const noexcept { return twist_.j != 0; }
    bool is_concrete() const noexcept { return !sym_k_ && twist_.k == 0 && twist_.j == 0; }

    const std::vector<Atom>& atoms() const noexcept { return atoms_; }
    const AffineForm& twist() const noexcept { return twist_; }

    /// Sum of all twists, including -k from Sym^k S = F_{phi(k,0,0,0)} (x) O(-k).
    AffineForm total_twist() const;

    /// Replaces k and j by integers; the result is concrete.
    BundleExpr at(std::int64_t k, std::int64_t j = 0) const;

    /// Product of atom ranks. Throws std::invalid_argument for symbolic expressions.
    std::uint64_t rank() const;

    /// Canonical text, parseable by parse_expr.
    std::string to_string() const;

    friend bool operator==(const BundleExpr&, const BundleExpr&) = default;

private:
    std::vector<Atom> atoms_;
    bool sym_k_ = false;
    AffineForm twist_{};
};

/// EXPR := TERM ('*' TERM)*
/// TERM := 'O(' AFF ')' | 'S' | 'Sv' | 'S(' AFF ')' | 'Sv(' AFF ')'
///       | 'Sym^' (INT|'k') '(' TERM ')' | 'dual(' EXPR ')'
/// AFF is an affine expression in k and j with integer coefficients, e.g. 2k+j-1.
/// Sym^n of S(m), O(m) and Sv is supported; Sym^k only of S(m), normalised to Sym^k S (x) O(mk).
/// Throws ParseError.
BundleExpr parse_expr(std::string_view text);

} // namespace bbwtilt::tensorcalc
