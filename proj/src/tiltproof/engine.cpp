#include "bbwtilt/tiltproof/engine.hpp"

#include "bbwtilt/errors.hpp"

#include <algorithm>

namespace bbwtilt::tiltproof {

namespace {

std::string range(int lo, int hi) {
    if (hi == INT_MAX) return "i >= " + std::to_string(lo);
    if (lo == hi) return "i = " + std::to_string(lo);
    return std::to_string(lo) + " <= i <= " + std::to_string(hi);
}

ProofPtr node(std::string rule, std::string goal, Status s, std::string detail,
              std::vector<ProofPtr> premises = {}) {
    auto n = std::make_shared<ProofNode>();
    n->rule = std::move(rule);
    n->goal = std::move(goal);
    n->status = s;
    n->detail = std::move(detail);
    n->premises = std::move(premises);
    return n;
}

bool all_proved(const std::vector<ProofPtr>& ps) {
    return std::all_of(ps.begin(), ps.end(), [](const ProofPtr& p) { return p->status == Status::Proved; });
}

// First refuting leaf below p, for failure messages.
const ProofNode* refutation(const ProofNode& p) {
    if (p.status == Status::Refuted && p.premises.empty()) return &p;
    for (const auto& c : p.premises)
        if (const auto* r = refutation(*c)) return r;
    return p.status == Status::Refuted ? &p : nullptr;
}

std::string group_text(const sheafcoh::FlaggedPoint& f) {
    return "H^" + std::to_string(f.i) + " in grade k=" + std::to_string(f.k) + ": V" + f.weight.to_string() +
           (f.mult != 1 ? "^" + std::to_string(f.mult) : "") + " dim " +
           std::to_string(f.dim * static_cast<std::uint64_t>(f.mult));
}

// Nonzero groups of the certificate in degrees lo..hi, or "" when there are none.
std::string nonzero_in(const sheafcoh::VanishingCertificate& c, int lo, int hi) {
    for (const auto& r : c.regions)
        if (!r.singular && r.degree >= lo && r.degree <= hi)
            return "H^" + std::to_string(r.degree) + " nonzero for every grade in " + r.region;
    for (const auto& f : c.flagged)
        if (f.i >= lo && f.i <= hi) return group_text(f);
    return "";
}

} // namespace

std::string Goal::to_string() const {
    return "Ext^i(" + a.name + ", " + b.name + ") = 0 for " + range(lo, hi) + " on " + sheafcoh::to_string(side);
}

std::string to_string(Status s) {
    switch (s) {
    case Status::Proved: return "PASS";
    case Status::Refuted: return "FAIL";
    case Status::NotProved: return "NO_RULE";
    }
    return "?";
}

Json ProofNode::to_json() const {
    Json j{{"rule", rule}, {"goal", goal}, {"verdict", tiltproof::to_string(status)}};
    if (!detail.empty()) j["detail"] = detail;
    if (!premises.empty()) {
        Json ps = Json::array();
        for (const auto& p : premises) ps.push_back(p->to_json());
        j["premises"] = std::move(ps);
    }
    return j;
}

void ProofNode::render(std::string& out, int indent) const {
    out += std::string(static_cast<std::size_t>(indent), ' ') + "[" + tiltproof::to_string(status) + "] " + rule +
           ": " + goal;
    if (!detail.empty()) out += " -- " + detail;
    out += '\n';
    for (const auto& p : premises) p->render(out, indent + 2);
}

ProofPtr Engine::prove(const Goal& g, const std::string& claim) {
    const std::string key = claim + "|" + sheafcoh::to_string(g.side) + "|" + g.a.key() + "|" + g.b.key() + "|" +
                            std::to_string(g.lo) + "|" + std::to_string(g.hi);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    ProofPtr p;
    for (const auto& st : reg_.steps())
        if (st.claim == claim && !claim.empty() && st.a == g.a && st.b == g.b &&
            (st.rule != Rule::Triangle || reg_.find_triangle(st.triangle)->side == g.side)) {
            p = scripted(g, st, claim);
            break;
        }
    if (!p) p = prove_auto(g, claim);
    memo_.emplace(key, p);
    return p;
}

ProofPtr Engine::prove_auto(const Goal& g, const std::string& claim) {
    if (!g.a.is_object() && !g.b.is_object()) return leaf(g);
    std::vector<ProofPtr> tried;
    if (auto p = semiuniv(g, claim)) {
        if (p->status == Status::Proved) return p;
        tried.push_back(p);
    }
    auto p = ses_les(g, claim);
    if (p->status == Status::Proved) return p;
    tried.push_back(p);
    const auto* r = refutation(*p);
    return node("search", g.to_string(), Status::NotProved,
                r ? "no rule closes the goal; obstruction " + r->detail : "no rule closes the goal", tried);
}

ProofPtr Engine::leaf(const Goal& g) {
    const auto& A = *g.a.bundle;
    const auto& B = *g.b.bundle;
    const auto cert = sheafcoh::ext_pullbacks_all_k(A, B, g.lo - 1);
    const std::string rule = to_string(Rule::Leaf);
    if (cert.verdict == sheafcoh::Verdict::Inconclusive)
        return node(rule, g.to_string(), Status::NotProved,
                    "certificate inconclusive: " + (cert.failures.empty() ? "" : cert.failures.front()));
    const std::string bad = nonzero_in(cert, g.lo, g.hi);

    std::string cross;
    if (opts_.crosscheck_kmax >= 0) {
        const auto table = sheafcoh::ext_pullbacks(A, B, g.side, opts_.crosscheck_kmax, Exec::Serial);
        bool truncated_nonzero = false;
        for (const auto& gr : table.grades)
            for (const auto& grp : gr.groups)
                if (grp.i >= g.lo && grp.i <= g.hi) truncated_nonzero = true;
        if (bad.empty() && truncated_nonzero)
            throw InternalError("certificate and truncated cohomology disagree for " + g.to_string());
        cross = "; truncated k <= " + std::to_string(opts_.crosscheck_kmax) + " agrees";
    }
    if (!bad.empty()) return node(rule, g.to_string(), Status::Refuted, bad);
    return node(rule, g.to_string(), Status::Proved,
                "all-k certificate over " + std::to_string(cert.regions.size()) + " unbounded region(s), threshold k* = " +
                    std::to_string(cert.threshold_k) + cross);
}

ProofPtr Engine::check_witness(const ExtObject& o) {
    if (auto it = witness_memo_.find(o.name); it != witness_memo_.end()) return it->second;
    const auto sub = o.sub * BundleExpr::O(o.witness_twist);
    const auto quot = o.quot * BundleExpr::O(o.witness_twist);
    Summand s, q;
    s.bundle = sub;
    q.bundle = quot;
    s.name = reg_.twisted(reg_.filtration(reg_.summand(o.name)).first, o.witness_twist).name;
    q.name = reg_.twisted(reg_.filtration(reg_.summand(o.name)).second, o.witness_twist).name;
    const std::string goal = "dim Ext^1(" + q.name + ", " + s.name + ") = 1";

    const auto cert = sheafcoh::ext_pullbacks_all_k(quot, sub, 0);
    ProofPtr p;
    if (cert.verdict == sheafcoh::Verdict::Inconclusive) {
        p = node("witness", goal, Status::NotProved, "certificate inconclusive");
    } else {
        bool infinite = false;
        for (const auto& r : cert.regions)
            if (!r.singular && r.degree == 1) infinite = true;
        std::uint64_t total = 0;
        std::string where;
        for (const auto& f : cert.flagged)
            if (f.i == 1) {
                total += f.dim * static_cast<std::uint64_t>(f.mult);
                where += (where.empty() ? "" : ", ") + group_text(f);
            }
        const auto table = sheafcoh::ext_pullbacks(quot, sub, Space::XPlus, opts_.kmax_concrete, Exec::Serial);
        const bool ok = !infinite && total == 1 && table.dim(1) == 1;
        p = node("witness", goal, ok ? Status::Proved : Status::Refuted,
                 infinite ? "Ext^1 is infinite-dimensional"
                          : "all-k total dim " + std::to_string(total) + (where.empty() ? "" : " (" + where + ")") +
                                ", truncated k <= " + std::to_string(opts_.kmax_concrete) + " dim " +
                                std::to_string(table.dim(1)));
    }
    witness_memo_.emplace(o.name, p);
    return p;
}

ProofPtr Engine::semiuniv(const Goal& g, const std::string& claim) {
    const Summand& x = g.a.is_object() ? g.a : g.b;
    const auto* obj = reg_.find_object(x.object);
    const auto [f1, f2] = reg_.filtration(x);
    const Summand& f3 = x;
    const std::vector<std::pair<const Summand*, const Summand*>> conclusions{
        {&f3, &f1}, {&f2, &f3}, {&f3, &f3}, {&f1, &f3}, {&f3, &f2}};
    const bool covered = std::any_of(conclusions.begin(), conclusions.end(), [&](const auto& c) {
        return *c.first == g.a && *c.second == g.b;
    });
    if (!covered) return nullptr;

    const std::string rule = to_string(Rule::Semiuniv);
    const char* names[4] = {"F1 pretilting", "F2 pretilting", "Ext^{>0}(F1, F2) = 0", "Ext^{>1}(F2, F1) = 0"};
    for (int h = 0; h < 4; ++h)
        if (opts_.disabled_hypotheses.test(static_cast<std::size_t>(h)))
            return node(rule, g.to_string(), Status::NotProved,
                        std::string("hypothesis '") + names[h] + "' is not machine-checked; rule does not apply");

    std::vector<ProofPtr> hyps;
    hyps.push_back(check_witness(*obj));
    hyps.push_back(prove({g.side, f1, f1, 1, INT_MAX}, claim));
    hyps.push_back(prove({g.side, f2, f2, 1, INT_MAX}, claim));
    hyps.push_back(prove({g.side, f1, f2, 1, INT_MAX}, claim));
    hyps.push_back(prove({g.side, f2, f1, 2, INT_MAX}, claim));
    const bool ok = all_proved(hyps);
    return node(rule, g.to_string(), ok ? Status::Proved : Status::NotProved,
                "F1 = " + f1.name + ", F2 = " + f2.name + ", F3 = " + f3.name +
                    (ok ? "" : "; a hypothesis failed, rule does not apply"),
                std::move(hyps));
}

ProofPtr Engine::ses_les(const Goal& g, const std::string& claim) {
    const std::string rule = to_string(Rule::SesLes);
    ProofPtr first;
    for (int side = 0; side < 2; ++side) {
        const Summand& x = side == 0 ? g.a : g.b;
        if (!x.is_object()) continue;
        const auto [sub, quot] = reg_.filtration(x);
        std::vector<ProofPtr> ps;
        if (side == 0) {
            ps.push_back(prove({g.side, sub, g.b, g.lo, g.hi}, claim));
            ps.push_back(prove({g.side, quot, g.b, g.lo, g.hi}, claim));
        } else {
            ps.push_back(prove({g.side, g.a, sub, g.lo, g.hi}, claim));
            ps.push_back(prove({g.side, g.a, quot, g.lo, g.hi}, claim));
        }
        const bool ok = all_proved(ps);
        auto p = node(rule, g.to_string(), ok ? Status::Proved : Status::NotProved,
                      "expand " + x.name + " by 0 -> " + sub.name + " -> " + x.name + " -> " + quot.name + " -> 0",
                      std::move(ps));
        if (ok) return p;
        if (!first) first = p;
    }
    return first;
}

ProofPtr Engine::scripted(const Goal& g, const ScriptStep& st, const std::string& claim) {
    const std::string cite = st.cite.empty() ? "" : " [" + reg_.cite_text(st.cite) + "]";
    if (st.rule == Rule::Triangle) {
        const auto* t = reg_.find_triangle(st.triangle);
        const auto rule = to_string(Rule::Triangle);
        const auto hom = reg_.hom_summand(g.a, g.b);
        if (g.hi != INT_MAX || !t->target || !hom || !(*hom == *t->target))
            return node(rule, g.to_string(), Status::NotProved,
                        "triangle " + t->name + " does not compute this group");
        auto tp = prove_triangle(*t, g.lo);
        const bool ok = tp->status == Status::Proved;
        return node(rule, g.to_string(), ok ? Status::Proved : Status::NotProved,
                    "Ext^i(" + g.a.name + ", " + g.b.name + ") = H^i(" + hom->name + ")" + cite, {tp});
    }

    // FLOP-TRANSFER: Ext^i agrees with the common open set for i <= codim - 2 = 2.
    const auto rule = to_string(Rule::FlopTransfer);
    if (st.hi > 2)
        return node(rule, g.to_string(), Status::NotProved,
                    "transfer requested up to degree " + std::to_string(st.hi) + " but is only valid for i <= 2");
    if (st.from == g.side)
        return node(rule, g.to_string(), Status::NotProved, "transfer source must be the other side");
    const int lo = std::max(g.lo, st.lo), hi = std::min(g.hi, st.hi);
    std::vector<ProofPtr> ps;
    if (lo <= hi) {
        Summand sa, sb;
        try {
            sa = reg_.sigma(g.a);
            sb = reg_.sigma(g.b);
        } catch (const std::invalid_argument& e) {
            return node(rule, g.to_string(), Status::NotProved, e.what());
        }
        auto src = prove({st.from, sa, sb, lo, hi}, "");
        ps.push_back(node(rule, Goal{g.side, g.a, g.b, lo, hi}.to_string(), src->status == Status::Proved ? Status::Proved : Status::NotProved,
                          "sigma(" + g.a.name + ", " + g.b.name + ") = (" + sa.name + ", " + sb.name + ") on " +
                              sheafcoh::to_string(st.from) + cite,
                          {src}));
    }
    if (g.lo < lo) ps.push_back(prove_auto({g.side, g.a, g.b, g.lo, lo - 1}, claim));
    if (g.hi > hi) ps.push_back(prove_auto({g.side, g.a, g.b, hi + 1, g.hi}, claim));
    const bool ok = all_proved(ps);
    return node("split", g.to_string(), ok ? Status::Proved : Status::NotProved,
                "degrees " + range(lo, hi) + " by transfer, the rest by search", std::move(ps));
}

ProofPtr Engine::term(const TriangleTerm& t, int lo) {
    const int from = lo + t.shift;
    const std::string what = "H^i(" + t.to_string() + ") = 0 for i >= " + std::to_string(lo);
    switch (t.kind) {
    case TriangleTerm::Kind::Triangle: {
        auto p = prove_triangle(*reg_.find_triangle(t.triangle), from);
        return node("term", what, p->status, "", {p});
    }
    case TriangleTerm::Kind::ZeroSection: {
        const auto table = sheafcoh::cohomology_q6(t.bundle);
        for (const auto& grp : table.grades.at(0).groups)
            if (grp.i >= from)
                return node("leaf q6", what, Status::Refuted,
                            "H^" + std::to_string(grp.i) + "(Q^6) = V" + grp.weight.to_string() + " dim " +
                                std::to_string(grp.total()));
        return node("leaf q6", what, Status::Proved,
                    table.grades.at(0).groups.empty() ? "all cohomology on Q^6 vanishes"
                                                      : "nonzero only below degree " + std::to_string(from));
    }
    case TriangleTerm::Kind::Bundle: {
        Summand o, b;
        o.bundle = BundleExpr::O(0);
        o.name = "O";
        b.bundle = t.bundle;
        b.name = reg_.summand(t.bundle.to_string()).name;
        if (from < 1)
            return node("term", what, Status::NotProved, "global sections on X are not tracked by vanishing certificates");
        auto p = leaf({t.side, o, b, from, INT_MAX});
        return node("term", what, p->status, "", {p});
    }
    }
    return nullptr;
}

ProofPtr Engine::prove_triangle(const Triangle& t, int lo) {
    std::vector<ProofPtr> ps;
    for (const auto& a : t.axioms) ps.push_back(node("axiom", a, Status::Proved, reg_.cite_text(t.cite)));
    ps.push_back(term(t.left, lo));
    ps.push_back(term(t.right, lo));
    const bool ok = all_proved(ps);
    return node(to_string(Rule::Triangle), "triangle " + t.name + ": middle term has H^i = 0 for i >= " +
                                               std::to_string(lo),
                ok ? Status::Proved : Status::NotProved, reg_.cite_text(t.cite), std::move(ps));
}

} // namespace bbwtilt::tiltproof
