#pragma once

#include "bbwtilt/tiltproof/registry.hpp"

#include <json.hpp>

#include <bitset>
#include <climits>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace bbwtilt::tiltproof {

using Json = nlohmann::ordered_json;

/// Ext^i(a, b) = 0 on `side` for lo <= i <= hi.
struct Goal {
    Space side = Space::XPlus;
    Summand a;
    Summand b;
    int lo = 1;
    int hi = INT_MAX;

    std::string to_string() const;
};

enum class Status { Proved, Refuted, NotProved };
std::string to_string(Status s);

/// One rule application (or axiom) with its premises.
struct ProofNode {
    std::string rule;
    std::string goal;
    Status status = Status::NotProved;
    std::string detail;
    std::vector<std::shared_ptr<const ProofNode>> premises;

    Json to_json() const;
    /// Indented multi-line trace.
    void render(std::string& out, int indent = 0) const;
};

using ProofPtr = std::shared_ptr<const ProofNode>;

/// The four hypotheses of the semi-universal extension rule, by bit index.
enum SemiunivHypothesis { kF1Pretilting = 0, kF2Pretilting = 1, kF1F2 = 2, kF2F1 = 3 };

struct EngineOptions {
    /// Hypotheses whose machine check is switched off; R3 then refuses to fire.
    std::bitset<4> disabled_hypotheses;
    /// R1 leaves are cross-checked against truncated cohomology through this grade (negative: off).
    std::int64_t crosscheck_kmax = 10;
    std::int64_t kmax_concrete = 10;
};

/// Search R1 (leaf), R3 (semi-universal extension), R2 (filtration long exact
/// sequence), after any scripted R4/R5 step for the pair. Not thread-safe; one
/// engine per verification run.
class Engine {
public:
    Engine(const Registry& reg, EngineOptions opts = {}) : reg_(reg), opts_(std::move(opts)) {}

    /// `claim` selects the scripted steps that may be used.
    ProofPtr prove(const Goal& g, const std::string& claim = "");

    /// All-degree vanishing above `lo - 1` through the triangle, recursively.
    ProofPtr prove_triangle(const Triangle& t, int lo);

    /// Witness check: Ext^1(quot(t), sub(t)) has total dimension exactly 1.
    ProofPtr check_witness(const ExtObject& o);

    std::size_t memo_size() const noexcept { return memo_.size(); }

private:
    ProofPtr prove_auto(const Goal& g, const std::string& claim);
    ProofPtr leaf(const Goal& g);
    ProofPtr semiuniv(const Goal& g, const std::string& claim);
    ProofPtr ses_les(const Goal& g, const std::string& claim);
    ProofPtr scripted(const Goal& g, const ScriptStep& st, const std::string& claim);
    ProofPtr term(const TriangleTerm& t, int lo);

    const Registry& reg_;
    EngineOptions opts_;
    std::map<std::string, ProofPtr> memo_;
    std::map<std::string, ProofPtr> witness_memo_;
};

} // namespace bbwtilt::tiltproof
