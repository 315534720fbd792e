#pragma once

#include "bbwtilt/sheafcoh/vanishing.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bbwtilt::tiltproof {

using sheafcoh::BundleExpr;
using sheafcoh::Space;

/// A non-split extension 0 -> sub -> X -> quot -> 0 of pulled-back bundles,
/// unique because Ext^1(quot, sub) is one-dimensional.
struct ExtObject {
    std::string name;
    /// Name of the object isomorphic to the dual of this one.
    std::string dual;
    BundleExpr sub;
    BundleExpr quot;
    /// The witness Ext^1(quot(t), sub(t)) is checked at this twist t.
    std::int64_t witness_twist = 0;
    std::string cite;
};

class Registry;

/// A summand of a tilting bundle: a pulled-back bundle, or a registered
/// extension object twisted by O(twist).
struct Summand {
    std::string name;
    std::optional<BundleExpr> bundle;
    std::string object;
    std::int64_t twist = 0;

    bool is_object() const noexcept { return !bundle.has_value(); }
    /// Canonical identity used for memoization and matching.
    std::string key() const;
    friend bool operator==(const Summand& a, const Summand& b) { return a.key() == b.key(); }
};

/// A term of a declared exact triangle: a bundle on X+/X-, a bundle on the
/// zero section (computed on Q^6), or another triangle, with a cohomological shift.
struct TriangleTerm {
    enum class Kind { Bundle, ZeroSection, Triangle };
    Kind kind = Kind::Bundle;
    Space side = Space::XPlus;
    BundleExpr bundle;
    std::string triangle;
    int shift = 0;
    std::string to_string() const;
};

/// left -> middle -> right -> left[1]; `target` names the middle term when it
/// computes the cohomology of a summand-level bundle on `side`.
struct Triangle {
    std::string name;
    Space side = Space::XPlus;
    std::optional<Summand> target;
    TriangleTerm left;
    TriangleTerm right;
    /// Identifications taken from geometry (pushforwards, projection formula).
    std::vector<std::string> axioms;
    std::string cite;
};

enum class Rule { Leaf, SesLes, Semiuniv, Triangle, FlopTransfer };
std::string to_string(Rule r);

/// A scripted rule application for one ordered pair of a theorem.
struct ScriptStep {
    std::string claim;
    Summand a;
    Summand b;
    Rule rule = Rule::Triangle;
    std::string triangle;
    /// FlopTransfer: degrees lo..hi are transported from the other side.
    int lo = 1;
    int hi = 1;
    Space from = Space::XPlus;
    std::string cite;
};

enum class ClaimKind { Vanishing, XCohomology, Ext, Collection, Theorem, EndCompare };
std::string to_string(ClaimKind k);

struct ClaimSpec {
    std::string id;
    ClaimKind kind = ClaimKind::Vanishing;
    std::string title;
    std::string cite;

    // Vanishing / XCohomology
    sheafcoh::VanishingClaim vanishing;
    BundleExpr bundle;
    /// Extra Q^6 check: H^{q6_degree}(q6_expr) has dimension q6_dim.
    std::optional<BundleExpr> q6_expr;
    int q6_degree = 0;
    std::uint64_t q6_dim = 0;
    /// Required sum of dims over flagged groups in positive degrees.
    std::optional<std::uint64_t> higher_total;
    std::vector<Space> sides;

    // Ext
    BundleExpr ext_a;
    BundleExpr ext_b;

    // Collection / Theorem
    std::vector<std::string> members;
    Space side = Space::XPlus;
    std::vector<std::string> axioms;

    // EndCompare
    std::string plus_theorem;
    std::string minus_theorem;
    std::int64_t degree = 6;
};

struct Cite {
    std::string key;
    std::string text;
};

/// Immutable after load.
class Registry {
public:
    /// Throws ParseError with a line number.
    static Registry parse(const std::string& text, const std::string& origin = "<registry>");
    static Registry load(const std::string& path);

    const std::vector<ClaimSpec>& claims() const noexcept { return claims_; }
    const std::vector<ExtObject>& objects() const noexcept { return objects_; }
    const std::vector<Triangle>& triangles() const noexcept { return triangles_; }
    const std::vector<ScriptStep>& steps() const noexcept { return steps_; }
    const std::vector<Cite>& cites() const noexcept { return cites_; }

    const ClaimSpec* find_claim(const std::string& id) const;
    const ExtObject* find_object(const std::string& name) const;
    const Triangle* find_triangle(const std::string& name) const;
    std::string cite_text(const std::string& key) const;

    /// "O(-2)", "S(1)", "P", "Pv(1)"; names of registered objects with an
    /// optional integer twist become object summands. Throws ParseError.
    Summand summand(const std::string& name) const;
    /// The pair (sub, quot) of an object summand, twisted.
    std::pair<Summand, Summand> filtration(const Summand& s) const;
    /// Bundle-level dual of a summand.
    Summand dual(const Summand& s) const;
    /// s (x) O(t).
    Summand twisted(const Summand& s, std::int64_t t) const;
    /// Hom bundle A^dual (x) B when one side is a line bundle, as a summand.
    std::optional<Summand> hom_summand(const Summand& a, const Summand& b) const;
    /// The flop correspondence: O(a) <-> O(-a), X(a) <-> X(-a) for objects.
    /// Throws std::invalid_argument for summands without a counterpart.
    Summand sigma(const Summand& s) const;

private:
    std::vector<ClaimSpec> claims_;
    std::vector<ExtObject> objects_;
    std::vector<Triangle> triangles_;
    std::vector<ScriptStep> steps_;
    std::vector<Cite> cites_;
};

/// Integer c when e is exactly O(c).
std::optional<std::int64_t> line_twist(const BundleExpr& e);

} // namespace bbwtilt::tiltproof
