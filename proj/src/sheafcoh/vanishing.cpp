#include "bbwtilt/sheafcoh/vanishing.hpp"

#include "bbwtilt/rootsys/bbw_affine.hpp"
#include "bbwtilt/tensorcalc/decompose.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace bbwtilt::sheafcoh {

namespace {

std::string point_string(std::int64_t k, std::int64_t j, bool has_j) {
    return has_j ? "(k,j)=(" + std::to_string(k) + "," + std::to_string(j) + ")" : "k=" + std::to_string(k);
}

bool matches(const ExpectedException& e, const FlaggedPoint& p) {
    if (e.k != p.k || e.j != p.j || e.i != p.i) return false;
    if (e.weight && *e.weight != p.weight) return false;
    if (e.dim && *e.dim != p.dim) return false;
    if (e.mult && *e.mult != p.mult) return false;
    return true;
}

void add_flagged(std::vector<FlaggedPoint>& out, FlaggedPoint p) {
    for (auto& f : out)
        if (f.k == p.k && f.j == p.j && f.i == p.i && f.weight == p.weight) {
            f.mult += p.mult;
            return;
        }
    out.push_back(std::move(p));
}

} // namespace

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::PassWithExceptions: return "PASS_WITH_EXCEPTIONS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

std::uint64_t VanishingCertificate::higher_total(bool* infinite) const {
    bool inf = false;
    for (const auto& r : regions)
        if (!r.singular && r.degree > 0) inf = true;
    if (infinite) *infinite = inf;
    std::uint64_t total = 0;
    for (const auto& f : flagged)
        if (f.i > 0) total += f.dim * static_cast<std::uint64_t>(f.mult);
    return total;
}

VanishingCertificate prove_vanishing(const VanishingClaim& claim, std::int64_t kmax_concrete) {
    VanishingCertificate cert;
    cert.claim = claim;
    const auto dec = tensorcalc::decompose_affine(claim.family, claim.domain);
    cert.claim.domain = dec.domain;
    const bool has_j = dec.domain.has_j;
    cert.threshold_k = dec.domain.kmin;

    std::vector<tensorcalc::AffineTerm> terms = dec.stable;
    for (const auto& [k, low] : dec.low) terms.insert(terms.end(), low.begin(), low.end());

    for (const auto& term : terms) {
        const auto res = rootsys::bbw_resolve_affine(term.weight, kmax_concrete);
        if (res.inconclusive) {
            cert.verdict = Verdict::Inconclusive;
            cert.failures.push_back("family " + term.weight.to_string() + ": " + res.reason);
            return cert;
        }
        cert.threshold_k = std::max(cert.threshold_k, res.threshold_k);
        cert.finite_points += static_cast<std::int64_t>(res.points.size());
        for (const auto& p : res.points) {
            const bool dominant = !p.result.is_singular() && p.result.regular().degree == 0;
            if (claim.require_dominant && !dominant)
                cert.failures.push_back("summand " + term.weight.at(p.k, p.j).to_string() + " at " +
                                        point_string(p.k, p.j, has_j) + " is not dominant");
            if (p.result.is_singular() || dominant) continue;
            const auto& reg = p.result.regular();
            add_flagged(cert.flagged, {p.k, p.j, reg.degree, reg.dominant, reg.dim, term.mult, false});
        }
        for (const auto& r : res.regions) {
            RegionEvidence ev{term.weight.to_string(), term.mult, r.region.to_string(), r.outcome.to_string(),
                              r.outcome.singular, r.outcome.degree};
            const bool dominant = !ev.singular && ev.degree == 0;
            if (claim.require_dominant && !dominant)
                cert.failures.push_back("family " + ev.family + " is not dominant on " + ev.region);
            if (!ev.singular && ev.degree > claim.cutoff)
                cert.failures.push_back("family " + ev.family + " has H^" + std::to_string(ev.degree) +
                                        " on the unbounded region " + ev.region);
            cert.regions.push_back(std::move(ev));
        }
    }

    std::sort(cert.flagged.begin(), cert.flagged.end(), [](const FlaggedPoint& a, const FlaggedPoint& b) {
        return std::tie(a.k, a.j, a.i, a.weight) < std::tie(b.k, b.j, b.i, b.weight);
    });

    bool exception_used = false;
    for (auto& f : cert.flagged) {
        f.expected = std::any_of(claim.expected.begin(), claim.expected.end(),
                                 [&](const ExpectedException& e) { return matches(e, f); });
        const std::string where = point_string(f.k, f.j, has_j) + ": H^" + std::to_string(f.i) + " = V" +
                                  f.weight.to_string() + (f.mult != 1 ? "^" + std::to_string(f.mult) : "") +
                                  " (dim " + std::to_string(f.dim * static_cast<std::uint64_t>(f.mult)) + ")";
        if (f.i > claim.cutoff && !f.expected) cert.failures.push_back("unexpected nonzero group at " + where);
        else if (claim.exact_exceptions && !f.expected) cert.failures.push_back("unlisted exception at " + where);
        if (f.expected && f.i > claim.cutoff) exception_used = true;
    }
    for (const auto& e : claim.expected) {
        const bool found = std::any_of(cert.flagged.begin(), cert.flagged.end(),
                                       [&](const FlaggedPoint& f) { return matches(e, f); });
        if (!found)
            cert.failures.push_back("expected exception at " + point_string(e.k, e.j, has_j) + " in degree " +
                                    std::to_string(e.i) + " was not found");
    }

    if (!cert.failures.empty()) cert.verdict = Verdict::Fail;
    else cert.verdict = exception_used ? Verdict::PassWithExceptions : Verdict::Pass;
    return cert;
}

BundleExpr ext_family(const BundleExpr& a, const BundleExpr& b) {
    return BundleExpr::sym_k() * BundleExpr::O(rootsys::AffineForm{2, 0, 0}) * a.dual() * b;
}

CohomTable ext_pullbacks(const BundleExpr& a, const BundleExpr& b, Space side, std::int64_t kmax, Exec exec) {
    return cohomology_total(a.dual() * b, side, kmax, exec);
}

VanishingCertificate ext_pullbacks_all_k(const BundleExpr& a, const BundleExpr& b, int cutoff,
                                         std::vector<ExpectedException> expected) {
    VanishingClaim c;
    c.family = ext_family(a, b);
    c.cutoff = cutoff;
    c.domain = ParamDomain{0, std::nullopt, false, 0};
    c.expected = std::move(expected);
    return prove_vanishing(c);
}

std::string to_text(const VanishingCertificate& c) {
    std::ostringstream os;
    os << "family " << c.claim.family.to_string() << ", vanishing for i > " << c.claim.cutoff << ": "
       << to_string(c.verdict) << '\n';
    os << "  finite points " << c.finite_points << ", threshold k* = " << c.threshold_k << '\n';
    for (const auto& r : c.regions) {
        os << "  region [" << r.region << "] " << r.family;
        if (r.mult != 1) os << "^" << r.mult;
        os << ": " << r.outcome << '\n';
    }
    for (const auto& f : c.flagged) {
        os << "  " << (f.expected ? "expected" : "flagged") << " "
           << point_string(f.k, f.j, c.claim.domain.has_j) << ": H^" << f.i << " = V" << f.weight.to_string();
        if (f.mult != 1) os << "^" << f.mult;
        os << " dim " << f.dim * static_cast<std::uint64_t>(f.mult) << '\n';
    }
    for (const auto& s : c.failures) os << "  failure: " << s << '\n';
    return os.str();
}

} // namespace bbwtilt::sheafcoh
