#include "bbwtilt/tiltproof/verify.hpp"

#include "bbwtilt/errors.hpp"
#include "bbwtilt/sheafcoh/json.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace bbwtilt::tiltproof {

namespace {

using sheafcoh::CohomTable;
using sheafcoh::Verdict;

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

std::string point_text(std::int64_t k, std::int64_t j, bool has_j) {
    return has_j ? "(k,j)=(" + std::to_string(k) + "," + std::to_string(j) + ")" : "k=" + std::to_string(k);
}

// Positive-degree groups at one parameter point, as (i, weight) -> mult.
using GroupSet = std::map<std::pair<int, rootsys::Weight>, std::int64_t>;

// Compares the certificate's flagged points with direct computation on the
// window k <= kmax (and jmin <= j <= jmin + kmax).
ReportStep truncation_check(const sheafcoh::VanishingCertificate& cert, std::int64_t kmax) {
    ReportStep st{"truncated cross-check", "PASS", "", nullptr};
    const auto& c = cert.claim;
    for (const auto& r : cert.regions)
        if (!r.singular && r.degree > 0) {
            st.detail = "skipped: positive degree on an unbounded region";
            return st;
        }
    const std::int64_t jlo = c.domain.has_j ? c.domain.jmin : 0;
    const std::int64_t jhi = c.domain.has_j ? c.domain.jmin + kmax : 0;
    std::int64_t points = 0;
    for (std::int64_t k = c.domain.kmin; k <= kmax; ++k) {
        if (c.domain.kmax && k > *c.domain.kmax) break;
        for (std::int64_t j = jlo; j <= jhi; ++j) {
            GroupSet direct, flagged;
            const auto table = sheafcoh::cohomology_q6(c.family.at(k, j));
            for (const auto& g : table.grades.at(0).groups)
                if (g.i > 0) direct[{g.i, g.weight}] += g.mult;
            for (const auto& f : cert.flagged)
                if (f.k == k && f.j == j) flagged[{f.i, f.weight}] += f.mult;
            ++points;
            if (direct != flagged) {
                st.verdict = "FAIL";
                st.detail = "certificate and direct computation differ at " + point_text(k, j, c.domain.has_j);
                return st;
            }
        }
    }
    st.detail = std::to_string(points) + " parameter points agree";
    return st;
}

ClaimReport vanishing_report(const ClaimSpec& spec, const VerifyOptions& opts) {
    ClaimReport rep;
    bool ok = true, inconclusive = false;
    for (const auto side : spec.sides) {
        const auto cert = sheafcoh::prove_vanishing(spec.vanishing, opts.kmax);
        const auto label = "certificate on " + sheafcoh::to_string(side);
        std::string detail = std::to_string(cert.regions.size()) + " unbounded region(s), " +
                             std::to_string(cert.finite_points) + " finite point(s), threshold k* = " +
                             std::to_string(cert.threshold_k);
        for (const auto& f : cert.flagged)
            detail += "; " + std::string(f.expected ? "expected " : "flagged ") +
                      point_text(f.k, f.j, spec.vanishing.domain.has_j) + " H^" + std::to_string(f.i) + " = V" +
                      f.weight.to_string() + (f.mult != 1 ? "^" + std::to_string(f.mult) : "") + " dim " +
                      std::to_string(f.dim * static_cast<std::uint64_t>(f.mult));
        for (const auto& s : cert.failures) detail += "; failure: " + s;
        rep.steps.push_back({label, sheafcoh::to_string(cert.verdict), detail, sheafcoh::to_json(cert)});
        if (cert.verdict == Verdict::Inconclusive) inconclusive = true;
        ok = ok && cert.ok();

        if (spec.higher_total) {
            bool infinite = false;
            const auto total = cert.higher_total(&infinite);
            const bool good = !infinite && total == *spec.higher_total;
            rep.steps.push_back({"total higher cohomology", pass_fail(good),
                                 infinite ? "infinite" : "dim " + std::to_string(total) + ", expected " +
                                                             std::to_string(*spec.higher_total),
                                 nullptr});
            ok = ok && good;
        }
        if (cert.verdict != Verdict::Inconclusive) {
            auto tc = truncation_check(cert, opts.kmax);
            ok = ok && tc.verdict == "PASS";
            rep.steps.push_back(std::move(tc));
        }
    }
    if (spec.q6_expr) {
        const auto t = sheafcoh::cohomology_q6(*spec.q6_expr);
        bool good = t.dim(spec.q6_degree) == spec.q6_dim;
        for (int i = 0; i <= 6; ++i)
            if (i != spec.q6_degree && t.dim(i) != 0) good = false;
        std::string detail;
        for (const auto& g : t.grades.at(0).groups)
            detail += (detail.empty() ? "" : "; ") + std::string("H^") + std::to_string(g.i) + " = V" +
                      g.weight.to_string() + " dim " + std::to_string(g.total());
        rep.steps.push_back({"H^*(Q^6, " + spec.q6_expr->to_string() + ")", pass_fail(good),
                             detail.empty() ? "all cohomology vanishes" : detail, sheafcoh::to_json(t)});
        ok = ok && good;
    }
    rep.verdict = inconclusive ? ClaimVerdict::Inconclusive : ok ? ClaimVerdict::Pass : ClaimVerdict::Fail;
    return rep;
}

ClaimReport ext_report(const ClaimSpec& spec, const VerifyOptions& opts) {
    ClaimReport rep;
    bool ok = true, inconclusive = false;
    for (const auto side : spec.sides) {
        const auto cert = sheafcoh::ext_pullbacks_all_k(spec.ext_a, spec.ext_b, spec.vanishing.cutoff);
        const auto table = sheafcoh::ext_pullbacks(spec.ext_a, spec.ext_b, side, opts.kmax, opts.exec);
        bool truncated_zero = true;
        for (int i = spec.vanishing.cutoff + 1; i <= 6; ++i) truncated_zero = truncated_zero && table.dim(i) == 0;
        std::string detail = std::to_string(cert.regions.size()) + " unbounded region(s), threshold k* = " +
                             std::to_string(cert.threshold_k) + "; truncated k <= " + std::to_string(opts.kmax) +
                             (truncated_zero ? " vanishes" : " has nonzero higher Ext");
        for (const auto& s : cert.failures) detail += "; failure: " + s;
        rep.steps.push_back({"Ext^i(" + spec.ext_a.to_string() + ", " + spec.ext_b.to_string() + ") on " +
                                 sheafcoh::to_string(side),
                             sheafcoh::to_string(cert.verdict), detail, sheafcoh::to_json(cert)});
        if (cert.verdict == Verdict::Inconclusive) inconclusive = true;
        ok = ok && cert.ok() && truncated_zero;
    }
    rep.verdict = inconclusive ? ClaimVerdict::Inconclusive : ok ? ClaimVerdict::Pass : ClaimVerdict::Fail;
    return rep;
}

std::vector<std::int64_t> euler_by_grade(const CohomTable& t) {
    std::vector<std::int64_t> out;
    for (const auto& g : t.grades) {
        std::int64_t chi = 0;
        for (const auto& grp : g.groups) chi += (grp.i % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(grp.total());
        out.push_back(chi);
    }
    return out;
}

} // namespace

std::string to_string(ClaimVerdict v) {
    switch (v) {
    case ClaimVerdict::Pass: return "PASS";
    case ClaimVerdict::Fail: return "FAIL";
    case ClaimVerdict::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

Json to_json(const ClaimReport& r, bool with_timing) {
    Json steps = Json::array();
    for (const auto& s : r.steps) {
        Json j{{"label", s.label}, {"verdict", s.verdict}, {"detail", s.detail}};
        if (!s.data.is_null()) j["evidence"] = s.data;
        steps.push_back(std::move(j));
    }
    Json out{{"id", r.id}, {"kind", r.kind}, {"title", r.title}, {"verdict", to_string(r.verdict)},
             {"summary", r.summary}, {"steps", steps}};
    if (with_timing) out["wall_time_s"] = r.wall_time_s;
    return out;
}

std::string to_text(const ClaimReport& r, bool verbose) {
    std::ostringstream os;
    os << r.id << ": " << to_string(r.verdict);
    if (!r.summary.empty()) os << " (" << r.summary << ")";
    os << '\n';
    for (const auto& s : r.steps) {
        if (!verbose && s.verdict == "PASS" && r.steps.size() > 12) continue;
        os << "  [" << s.verdict << "] " << s.label;
        if (!s.detail.empty()) os << ": " << s.detail;
        os << '\n';
    }
    return os.str();
}

ClaimReport verify_extension_registry(const Registry& reg, const VerifyOptions& opts) {
    Timer timer;
    Engine engine(reg, opts.engine);
    ClaimReport rep;
    rep.id = "extensions";
    rep.kind = "extensions";
    rep.title = "nontriviality witnesses of the extension objects";
    bool ok = true;
    for (const auto& o : reg.objects()) {
        const auto p = engine.check_witness(o);
        rep.steps.push_back({o.name + ": " + p->goal, to_string(p->status), p->detail, nullptr});
        ok = ok && p->status == Status::Proved;
    }
    rep.verdict = ok ? ClaimVerdict::Pass : ClaimVerdict::Fail;
    rep.summary = std::to_string(reg.objects().size()) + " object(s)";
    rep.wall_time_s = timer.seconds();
    return rep;
}

ClaimReport verify_theorem(const Registry& reg, const ClaimSpec& spec, Engine& engine) {
    Timer timer;
    ClaimReport rep;
    rep.id = spec.id;
    rep.kind = to_string(spec.kind);
    rep.title = spec.title;
    std::vector<Summand> ss;
    for (const auto& m : spec.members) ss.push_back(reg.summand(m));
    for (const auto& a : spec.axioms) rep.steps.push_back({"axiom", "PASS", reg.cite_text(a), nullptr});

    std::size_t proved = 0;
    std::string first_bad;
    std::set<std::string> rules;
    for (const auto& a : ss)
        for (const auto& b : ss) {
            const auto p = engine.prove({spec.side, a, b, 1, INT_MAX}, spec.id);
            std::string detail = p->rule;
            if (!p->detail.empty()) detail += ": " + p->detail;
            rep.steps.push_back({"(" + a.name + ", " + b.name + ")", to_string(p->status), detail, p->to_json()});
            std::string trace;
            p->render(trace);
            for (const auto& r : {Rule::Triangle, Rule::FlopTransfer, Rule::Semiuniv})
                if (trace.find(to_string(r)) != std::string::npos) rules.insert(to_string(r));
            if (p->status == Status::Proved) ++proved;
            else if (first_bad.empty()) first_bad = "(" + a.name + ", " + b.name + "): " + detail;
        }
    const auto total = ss.size() * ss.size();
    rep.verdict = proved == total ? ClaimVerdict::Pass : ClaimVerdict::Fail;
    rep.summary = std::to_string(proved) + "/" + std::to_string(total) + " pairs";
    for (const auto& r : rules) rep.summary += ", uses " + r;
    if (!first_bad.empty()) rep.summary += "; first failure " + first_bad;
    rep.wall_time_s = timer.seconds();
    return rep;
}

ClaimReport verify_theorem(const Registry& reg, const std::string& id, const VerifyOptions& opts) {
    const auto* spec = reg.find_claim(id);
    if (!spec || spec->kind != ClaimKind::Theorem) throw std::invalid_argument("unknown theorem '" + id + "'");
    Engine engine(reg, opts.engine);
    return verify_theorem(reg, *spec, engine);
}

ClaimReport verify_collection(const std::vector<BundleExpr>& bundles, const std::string& id, Exec exec) {
    Timer timer;
    const auto n = static_cast<std::int64_t>(bundles.size());
    std::vector<CohomTable> tables(static_cast<std::size_t>(n * n));
    auto compute = [&](std::int64_t idx) {
        const auto a = idx / n, b = idx % n;
        tables[static_cast<std::size_t>(idx)] =
            sheafcoh::cohomology_q6(bundles[static_cast<std::size_t>(a)].dual() * bundles[static_cast<std::size_t>(b)]);
    };
    if (exec == Exec::Serial) {
        for (std::int64_t idx = 0; idx < n * n; ++idx) compute(idx);
    } else {
        std::string error;
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t idx = 0; idx < n * n; ++idx) {
            try {
                compute(idx);
            } catch (const std::exception& e) {
#pragma omp critical(bbwtilt_collection_error)
                if (error.empty()) error = e.what();
            }
        }
        if (!error.empty()) throw InternalError(error);
    }

    ClaimReport rep;
    rep.id = id;
    rep.kind = "collection";
    std::size_t good = 0;
    std::vector<std::string> failures;
    for (std::int64_t a = 0; a < n; ++a)
        for (std::int64_t b = 0; b < n; ++b) {
            const auto& t = tables[static_cast<std::size_t>(a * n + b)];
            std::string why;
            for (int i = 1; i <= 6; ++i)
                if (t.dim(i) != 0) why = "Ext^" + std::to_string(i) + " has dim " + std::to_string(t.dim(i));
            if (a == b && t.dim(0) != 1) why = "End has dim " + std::to_string(t.dim(0));
            if (a > b && t.dim(0) != 0) why = "Hom from a later to an earlier member has dim " + std::to_string(t.dim(0));
            const auto& A = bundles[static_cast<std::size_t>(a)];
            const auto& B = bundles[static_cast<std::size_t>(b)];
            // Reported as (earlier, later) so that the pair reads in collection order.
            const std::string label = a > b ? "(" + B.to_string() + ", " + A.to_string() + ") reversed Hom"
                                            : "(" + A.to_string() + ", " + B.to_string() + ")";
            std::string dims;
            for (int i = 0; i <= 6; ++i)
                if (t.dim(i)) dims += (dims.empty() ? "" : ", ") + std::string("H^") + std::to_string(i) + " dim " +
                                      std::to_string(t.dim(i));
            rep.steps.push_back({label, pass_fail(why.empty()), why.empty() ? (dims.empty() ? "0" : dims) : why,
                                 nullptr});
            if (why.empty()) ++good;
            else failures.push_back(label + ": " + why);
        }
    rep.verdict = failures.empty() ? ClaimVerdict::Pass : ClaimVerdict::Fail;
    rep.summary = std::to_string(good) + "/" + std::to_string(n * n) + " ordered pairs";
    if (!failures.empty()) rep.summary += "; first failure " + failures.front();
    rep.wall_time_s = timer.seconds();
    return rep;
}

ClaimReport verify_collection(const Registry& reg, const std::string& id, const VerifyOptions& opts) {
    const auto* spec = reg.find_claim(id);
    if (!spec || spec->kind != ClaimKind::Collection) throw std::invalid_argument("unknown collection '" + id + "'");
    std::vector<BundleExpr> bs;
    for (const auto& m : spec->members) bs.push_back(tensorcalc::parse_expr(m));
    auto rep = verify_collection(bs, id, opts.exec);
    rep.title = spec->title;
    return rep;
}

GradedHom graded_hom(const Registry& reg, const std::vector<Summand>& summands, Space side, std::int64_t grades,
                     Exec exec) {
    struct Piece {
        BundleExpr bundle;
        std::int64_t shift;
    };
    // The extension class of an object lives in one grade; giving the quotient
    // that shift makes the extension graded.
    std::map<std::string, std::int64_t> witness_grade;
    for (const auto& o : reg.objects()) {
        const auto t = sheafcoh::ext_pullbacks(o.quot, o.sub, side, 4, Exec::Serial);
        std::int64_t grade = -1;
        for (const auto& g : t.grades)
            if (g.dim(1) > 0) grade = g.k;
        if (grade < 0) throw InternalError("no extension class found for " + o.name);
        witness_grade[o.name] = grade;
    }
    std::vector<std::vector<Piece>> pieces;
    std::int64_t max_shift = 0;
    for (const auto& s : summands) {
        if (!s.is_object()) {
            pieces.push_back({{*s.bundle, 0}});
            continue;
        }
        const auto [sub, quot] = reg.filtration(s);
        pieces.push_back({{*sub.bundle, 0}, {*quot.bundle, witness_grade.at(s.object)}});
        max_shift = std::max(max_shift, witness_grade.at(s.object));
    }
    const std::int64_t computed = grades + max_shift;

    std::vector<std::pair<BundleExpr, BundleExpr>> jobs;
    std::map<std::string, std::size_t> index;
    for (const auto& pa : pieces)
        for (const auto& pb : pieces)
            for (const auto& x : pa)
                for (const auto& y : pb) {
                    const auto key = x.bundle.to_string() + "|" + y.bundle.to_string();
                    if (index.emplace(key, jobs.size()).second) jobs.push_back({x.bundle, y.bundle});
                }
    std::vector<std::vector<std::int64_t>> chi(jobs.size());
    const auto njobs = static_cast<std::int64_t>(jobs.size());
    auto run = [&](std::int64_t i) {
        const auto& [x, y] = jobs[static_cast<std::size_t>(i)];
        chi[static_cast<std::size_t>(i)] =
            euler_by_grade(sheafcoh::cohomology_total(x.dual() * y, side, computed - 1, Exec::Serial));
    };
    if (exec == Exec::Serial) {
        for (std::int64_t i = 0; i < njobs; ++i) run(i);
    } else {
        std::string error;
#pragma omp parallel for schedule(dynamic, 1)
        for (std::int64_t i = 0; i < njobs; ++i) {
            try {
                run(i);
            } catch (const std::exception& e) {
#pragma omp critical(bbwtilt_endcompare_error)
                if (error.empty()) error = e.what();
            }
        }
        if (!error.empty()) throw InternalError(error);
    }

    GradedHom out;
    out.summands = summands;
    out.lowest = -max_shift;
    const auto n = summands.size();
    const auto width = static_cast<std::size_t>(grades - out.lowest);
    out.g.assign(n, std::vector<std::vector<std::int64_t>>(n, std::vector<std::int64_t>(width, 0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& x : pieces[i])
                for (const auto& y : pieces[j]) {
                    const auto& c = chi[index.at(x.bundle.to_string() + "|" + y.bundle.to_string())];
                    for (std::int64_t k = out.lowest; k < grades; ++k) {
                        const auto src = k + x.shift - y.shift;
                        if (src >= 0 && src < computed)
                            out.g[i][j][static_cast<std::size_t>(k - out.lowest)] += c[static_cast<std::size_t>(src)];
                    }
                }
    return out;
}

std::int64_t GradedHom::at(std::size_t i, std::size_t j, std::int64_t k) const {
    if (k < lowest) return 0;
    if (k > top()) throw InternalError("graded Hom requested past grade " + std::to_string(top()));
    return g[i][j][static_cast<std::size_t>(k - lowest)];
}

EndCompareResult compare_graded(const GradedHom& plus, const GradedHom& minus, const std::vector<std::size_t>& sigma,
                                std::size_t anchor, std::int64_t n) {
    constexpr std::int64_t kRange = 6;
    const auto m = plus.summands.size();
    if (plus.top() < n || minus.top() < n + 2 * kRange)
        throw InternalError("end_compare needs grades through " + std::to_string(n) + " (plus) and " +
                            std::to_string(n + 2 * kRange) + " (minus)");
    // Grades below both computed ranges are zero on both sides.
    const std::int64_t from = std::min(plus.lowest, minus.lowest - 2 * kRange);
    // First k <= n with g+_{ij}(k) != g-_{s(i)s(j)}(k + d), if any.
    auto mismatch = [&](std::size_t i, std::size_t j, std::int64_t d) -> std::optional<std::int64_t> {
        for (std::int64_t k = from; k <= n; ++k)
            if (plus.at(i, j, k) != minus.at(sigma[i], sigma[j], k + d)) return k;
        return std::nullopt;
    };

    EndCompareResult res;
    std::vector<std::vector<std::int64_t>> cand(m);
    for (std::size_t i = 0; i < m; ++i) {
        if (i == anchor) {
            cand[i] = {0};
            continue;
        }
        for (std::int64_t c = -kRange; c <= kRange; ++c)
            if (!mismatch(anchor, i, -c) && !mismatch(i, anchor, c)) cand[i].push_back(c);
        if (cand[i].empty()) {
            const auto k = mismatch(anchor, i, 0);
            const auto k2 = mismatch(i, anchor, 0);
            res.mismatch = "no offset in [-6, 6] for " + plus.summands[i].name + "; at offset 0 first mismatch " +
                           (k ? "(" + plus.summands[anchor].name + ", " + plus.summands[i].name + ", k=" +
                                    std::to_string(*k) + ")"
                              : "(" + plus.summands[i].name + ", " + plus.summands[anchor].name + ", k=" +
                                    std::to_string(k2.value_or(0)) + ")");
            return res;
        }
    }

    std::vector<std::int64_t> c(m, 0);
    std::function<bool(std::size_t)> search = [&](std::size_t i) {
        if (i == m) return true;
        for (const auto v : cand[i]) {
            c[i] = v;
            bool ok = true;
            for (std::size_t j = 0; j <= i && ok; ++j)
                ok = !mismatch(i, j, c[i] - c[j]) && !mismatch(j, i, c[j] - c[i]);
            if (ok && search(i + 1)) return true;
        }
        return false;
    };
    if (!search(0)) {
        res.mismatch = "no consistent offset vector in [-6, 6]";
        return res;
    }
    res.found = true;
    res.offsets = c;
    return res;
}

ClaimReport end_compare(const Registry& reg, const std::string& plus_theorem, const std::string& minus_theorem,
                        std::int64_t n, Exec exec) {
    if (n < 1) throw std::invalid_argument("end_compare degree must be at least 1");
    Timer timer;
    const auto* tp = reg.find_claim(plus_theorem);
    const auto* tm = reg.find_claim(minus_theorem);
    if (!tp || !tm || tp->kind != ClaimKind::Theorem || tm->kind != ClaimKind::Theorem)
        throw std::invalid_argument("end_compare needs two registered theorems");
    ClaimReport rep;
    rep.kind = "endcompare";
    std::vector<Summand> sp, sm;
    for (const auto& x : tp->members) sp.push_back(reg.summand(x));
    for (const auto& x : tm->members) sm.push_back(reg.summand(x));

    std::vector<std::size_t> sigma;
    for (const auto& s : sp) {
        const auto image = reg.sigma(s);
        const auto it = std::find(sm.begin(), sm.end(), image);
        if (it == sm.end()) {
            rep.verdict = ClaimVerdict::Fail;
            rep.summary = "sigma(" + s.name + ") = " + image.name + " is not a summand of " + minus_theorem;
            return rep;
        }
        sigma.push_back(static_cast<std::size_t>(it - sm.begin()));
    }
    const Summand O = reg.summand("O");
    const auto anchor_it = std::find(sp.begin(), sp.end(), O);
    if (anchor_it == sp.end()) throw std::invalid_argument(plus_theorem + " has no summand O");
    const auto anchor = static_cast<std::size_t>(anchor_it - sp.begin());

    const auto gp = graded_hom(reg, sp, tp->side, n + 1, exec);
    const auto gmin = graded_hom(reg, sm, tm->side, n + 1 + 12, exec);
    rep.steps.push_back({"graded Hom", "PASS",
                         "Euler characteristic per grade; equals dim Hom because the tilting theorems give Ext^{>0} = 0",
                         nullptr});

    const auto res = compare_graded(gp, gmin, sigma, anchor, n);
    if (res.found) {
        Json offs = Json::object();
        std::string text;
        for (std::size_t i = 0; i < sp.size(); ++i) {
            offs[sp[i].name] = res.offsets[i];
            text += (text.empty() ? "" : ", ") + sp[i].name + ": " + std::to_string(res.offsets[i]);
        }
        rep.steps.push_back({"offsets", "PASS", text, offs});
    } else {
        rep.steps.push_back({"offsets", "FAIL", res.mismatch, nullptr});
    }

    // Spot values with independent closed forms.
    auto idx = [&](const std::vector<Summand>& v, const std::string& name) {
        return static_cast<std::size_t>(std::find(v.begin(), v.end(), reg.summand(name)) - v.begin());
    };
    const auto pO = idx(sp, "O"), pO1 = idx(sp, "O(1)"), mO = idx(sm, "O"), mOm1 = idx(sm, "O(-1)");
    if (pO1 < sp.size() && mOm1 < sm.size()) {
        auto s = [](std::int64_t v) { return std::to_string(v); };
        rep.steps.push_back({"g(O, O)", "INFO",
                             "g(0) = " + s(gp.at(pO, pO, 0)) + ", g(1) = " + s(gp.at(pO, pO, 1)), nullptr});
        rep.steps.push_back({"g+(O, O(1)) vs g-(O, O(-1))", "INFO",
                             "g+(0) = " + s(gp.at(pO, pO1, 0)) + ", g+(1) = " + s(gp.at(pO, pO1, 1)) +
                                 "; g-(1) = " + s(gmin.at(mO, mOm1, 1)) + ", g-(2) = " + s(gmin.at(mO, mOm1, 2)),
                             nullptr});
    }
    std::int64_t diag = 0;
    for (std::size_t i = 0; i < sp.size(); ++i) diag += gp.at(i, i, 0);
    rep.steps.push_back({"diagonal grade 0", diag >= static_cast<std::int64_t>(sp.size()) ? "PASS" : "FAIL",
                         "sum of g_ii(0) = " + std::to_string(diag), nullptr});

    const bool ok = res.found && diag >= static_cast<std::int64_t>(sp.size());
    rep.verdict = ok ? ClaimVerdict::Pass : ClaimVerdict::Fail;
    rep.summary = ok ? "consistent offsets through degree " + std::to_string(n) : res.mismatch;
    rep.wall_time_s = timer.seconds();
    return rep;
}

ClaimReport verify_claim(const Registry& reg, const std::string& id, const VerifyOptions& opts) {
    const auto* spec = reg.find_claim(id);
    if (!spec) throw std::invalid_argument("unknown claim id '" + id + "'");
    Timer timer;
    ClaimReport rep;
    switch (spec->kind) {
    case ClaimKind::Vanishing:
    case ClaimKind::XCohomology: rep = vanishing_report(*spec, opts); break;
    case ClaimKind::Ext: rep = ext_report(*spec, opts); break;
    case ClaimKind::Collection: rep = verify_collection(reg, id, opts); break;
    case ClaimKind::Theorem: rep = verify_theorem(reg, id, opts); break;
    case ClaimKind::EndCompare: rep = end_compare(reg, spec->plus_theorem, spec->minus_theorem, spec->degree, opts.exec); break;
    }
    rep.id = spec->id;
    rep.kind = to_string(spec->kind);
    rep.title = spec->title;
    if (rep.summary.empty()) {
        std::size_t pass = 0;
        for (const auto& s : rep.steps) pass += s.verdict == "PASS" || s.verdict == "PASS_WITH_EXCEPTIONS";
        rep.summary = std::to_string(pass) + "/" + std::to_string(rep.steps.size()) + " steps";
    }
    rep.wall_time_s = timer.seconds();
    return rep;
}

} // namespace bbwtilt::tiltproof
