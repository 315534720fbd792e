#include "bbwtilt/cli/cli.hpp"

#include "bbwtilt/errors.hpp"
#include "bbwtilt/rootsys/bbw.hpp"
#include "bbwtilt/sheafcoh/json.hpp"
#include "bbwtilt/tensorcalc/decompose.hpp"
#include "bbwtilt/tiltproof/verify.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <sstream>

namespace bbwtilt::cli {

namespace {

using sheafcoh::Json;
using tiltproof::ClaimReport;
using tiltproof::ClaimVerdict;
using tiltproof::Registry;

struct Config {
    std::string format = "text";
    std::int64_t kmax = 10;
    std::int64_t degree = 6;
    bool timing = false;
    bool verbose = false;
    std::string registry;

    std::string weight;
    std::string expr;
    std::string expr_b;
    std::string space = "q6";
    bool all_k = false;
    std::vector<std::string> ids;
    bool all = false;
};

bool json(const Config& c) { return c.format == "json"; }

std::string registry_path(const Config& c) {
    if (!c.registry.empty()) return c.registry;
    if (const char* env = std::getenv("BBWTILT_REGISTRY"); env && *env) return env;
    return BBWTILT_DEFAULT_REGISTRY;
}

int exit_for(const std::vector<ClaimReport>& reps) {
    bool inconclusive = false;
    for (const auto& r : reps) {
        if (r.verdict == ClaimVerdict::Fail) return kFail;
        inconclusive = inconclusive || r.verdict == ClaimVerdict::Inconclusive;
    }
    return inconclusive ? kUsage : kPass;
}

int cmd_bbw(const Config& c, std::ostream& out) {
    const auto w = rootsys::Weight::parse(c.weight);
    const auto r = rootsys::bbw_resolve(w);
    if (json(c)) {
        Json j;
        j["weight"] = sheafcoh::weight_json(w);
        j["singular"] = r.is_singular();
        if (!r.is_singular()) {
            j["degree"] = r.regular().degree;
            j["dominant"] = sheafcoh::weight_json(r.regular().dominant);
            j["dim"] = r.regular().dim;
            j["word"] = r.regular().word;
        }
        out << j.dump(2) << '\n';
    } else if (r.is_singular()) {
        out << "weight " << w.to_string() << ": singular, all cohomology vanishes\n";
    } else {
        const auto& g = r.regular();
        out << "weight " << w.to_string() << ": degree " << g.degree << ", " << g.dominant.to_string() << ", dim "
            << g.dim << '\n';
    }
    return kPass;
}

int cmd_decompose(const Config& c, std::ostream& out) {
    const auto e = tensorcalc::parse_expr(c.expr);
    const auto d = tensorcalc::decompose(e);
    if (json(c)) {
        Json j;
        j["expr"] = e.to_string();
        j["summands"] = Json::array();
        for (const auto& [w, m] : d)
            j["summands"].push_back({{"weight", sheafcoh::weight_json(w)}, {"mult", m}, {"rank", rootsys::levi_rank(w)}});
        out << j.dump(2) << '\n';
        return kPass;
    }
    out << e.to_string() << " =\n";
    for (const auto& [w, m] : d) {
        out << "  F" << w.to_string();
        if (m != 1) out << "^" << m;
        out << "  rank " << rootsys::levi_rank(w) * static_cast<std::uint64_t>(m) << '\n';
    }
    return kPass;
}

// All-k certificate for the grades of H^*(X, e): lists every nonzero higher group.
int all_k(const Config& c, const tensorcalc::BundleExpr& family, std::ostream& out) {
    sheafcoh::VanishingClaim claim;
    claim.family = family;
    // No degree is required to vanish; the certificate only has to be finite.
    claim.cutoff = 6;
    claim.domain = rootsys::ParamDomain{0, std::nullopt, false, 0};
    const auto cert = sheafcoh::prove_vanishing(claim, c.kmax);
    bool infinite = false;
    const auto total = cert.higher_total(&infinite);
    const int code = cert.verdict == sheafcoh::Verdict::Inconclusive ? kUsage : infinite ? kFail : kPass;
    if (json(c)) {
        auto j = sheafcoh::to_json(cert);
        j["higher_total"] = infinite ? Json("infinite") : Json(total);
        out << j.dump(2) << '\n';
    } else {
        // The certificate's own header speaks of a cutoff; this command has none.
        const auto text = sheafcoh::to_text(cert);
        out << "family " << cert.claim.family.to_string() << ", all grades k >= 0"
            << (code == kUsage ? ": INCONCLUSIVE" : "") << '\n'
            << text.substr(text.find('\n') + 1);
        out << "higher cohomology total dim " << (infinite ? std::string("infinite") : std::to_string(total)) << '\n';
    }
    return code;
}

int cmd_cohomology(const Config& c, std::ostream& out) {
    const auto e = tensorcalc::parse_expr(c.expr);
    const auto space = sheafcoh::parse_space(c.space);
    if (c.all_k) {
        if (space == sheafcoh::Space::Q6) throw ParseError("--all-k needs --space xplus or xminus");
        return all_k(c, sheafcoh::ext_family(tensorcalc::BundleExpr{}, e), out);
    }
    const auto t = space == sheafcoh::Space::Q6 ? sheafcoh::cohomology_q6(e) : sheafcoh::cohomology_total(e, space, c.kmax);
    if (json(c)) out << sheafcoh::to_json(t).dump(2) << '\n';
    else out << sheafcoh::to_text(t);
    return kPass;
}

int cmd_ext(const Config& c, std::ostream& out) {
    const auto space = sheafcoh::parse_space(c.space);
    if (space == sheafcoh::Space::Q6) {
        const auto t = sheafcoh::cohomology_q6(tensorcalc::parse_expr(c.expr).dual() * tensorcalc::parse_expr(c.expr_b));
        if (json(c)) out << sheafcoh::to_json(t).dump(2) << '\n';
        else out << sheafcoh::to_text(t);
        return kPass;
    }
    const auto reg = Registry::load(registry_path(c));
    const auto a = reg.summand(c.expr);
    const auto b = reg.summand(c.expr_b);
    if (a.is_object() || b.is_object()) {
        // Extension objects go through the deduction engine.
        tiltproof::Engine engine(reg);
        const auto p = engine.prove({space, a, b});
        if (json(c)) out << p->to_json().dump(2) << '\n';
        else {
            std::string trace;
            p->render(trace);
            out << trace;
        }
        return p->status == tiltproof::Status::Proved ? kPass : kFail;
    }
    if (c.all_k) return all_k(c, sheafcoh::ext_family(*a.bundle, *b.bundle), out);
    const auto t = sheafcoh::ext_pullbacks(*a.bundle, *b.bundle, space, c.kmax);
    if (json(c)) out << sheafcoh::to_json(t).dump(2) << '\n';
    else out << sheafcoh::to_text(t);
    return kPass;
}

void print_reports(const Config& c, const std::vector<ClaimReport>& reps, double seconds, std::ostream& out) {
    const int code = exit_for(reps);
    if (json(c)) {
        Json j;
        j["verdict"] = code == kPass ? "PASS" : code == kFail ? "FAIL" : "INCONCLUSIVE";
        j["reports"] = Json::array();
        for (const auto& r : reps) j["reports"].push_back(tiltproof::to_json(r, c.timing));
        if (c.timing) j["wall_time_s"] = seconds;
        out << j.dump(2) << '\n';
        return;
    }
    std::size_t pass = 0;
    for (const auto& r : reps) {
        out << tiltproof::to_text(r, c.verbose);
        if (c.timing) out << "  time " << r.wall_time_s << " s\n";
        pass += r.pass();
    }
    if (reps.size() > 1) out << pass << "/" << reps.size() << " claims PASS\n";
    if (c.timing) out << "total time " << seconds << " s\n";
}

tiltproof::VerifyOptions verify_options(const Config& c) {
    tiltproof::VerifyOptions o;
    o.kmax = c.kmax;
    o.engine.crosscheck_kmax = c.kmax;
    o.engine.kmax_concrete = c.kmax;
    return o;
}

int cmd_verify(const Config& c, std::ostream& out) {
    const auto reg = Registry::load(registry_path(c));
    std::vector<std::string> ids = c.ids;
    if (c.all) {
        if (!ids.empty()) throw ParseError("give claim ids or --all, not both");
        ids.push_back("extensions");
        for (const auto& cl : reg.claims()) ids.push_back(cl.id);
    }
    if (ids.empty()) throw ParseError("no claim ids given (use --all for the whole registry)");
    // Reject unknown ids before any computation starts.
    for (const auto& id : ids)
        if (id != "extensions" && !reg.find_claim(id)) throw ParseError("unknown claim id '" + id + "'");

    const auto opts = verify_options(c);
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<ClaimReport> reps;
    for (const auto& id : ids) {
        if (id == "extensions") reps.push_back(tiltproof::verify_extension_registry(reg, opts));
        else if (const auto* spec = reg.find_claim(id); spec->kind == tiltproof::ClaimKind::EndCompare) {
            auto r = tiltproof::end_compare(reg, spec->plus_theorem, spec->minus_theorem, c.degree, opts.exec);
            r.id = spec->id;
            r.title = spec->title;
            reps.push_back(std::move(r));
        } else reps.push_back(tiltproof::verify_claim(reg, id, opts));
    }
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    print_reports(c, reps, secs, out);
    return exit_for(reps);
}

int cmd_end_compare(const Config& c, std::ostream& out) {
    if (c.degree < 1) throw ParseError("--degree must be at least 1");
    const auto reg = Registry::load(registry_path(c));
    const tiltproof::ClaimSpec* spec = nullptr;
    for (const auto& cl : reg.claims())
        if (cl.kind == tiltproof::ClaimKind::EndCompare) spec = &cl;
    if (!spec) throw ParseError("the registry has no endcompare claim");
    const auto t0 = std::chrono::steady_clock::now();
    auto r = tiltproof::end_compare(reg, spec->plus_theorem, spec->minus_theorem, c.degree);
    r.id = spec->id;
    r.title = spec->title;
    const auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    print_reports(c, {r}, secs, out);
    return exit_for({r});
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Borel-Bott-Weil computations and tilting verification for the D4 flop", "bbwtilt"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--format", c.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--kmax", c.kmax, "Grades computed explicitly and cross-check depth")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{200}));
    app.add_option("--degree", c.degree, "Grades compared by end-compare");
    app.add_flag("--timing", c.timing, "Report wall times");
    app.add_flag("-v,--verbose", c.verbose, "Show every step of each report");
    app.add_option("--registry", c.registry, "Registry file (default: BBWTILT_REGISTRY, then the built-in path)");

    auto* bbw = app.add_subcommand("bbw", "Resolve one weight by Borel-Bott-Weil (use -- before negative weights)");
    bbw->add_option("weight", c.weight, "Comma-separated coordinates, halves as 1/2")->required();
    auto* dec = app.add_subcommand("decompose", "Irreducible summands of a bundle expression on Q^6");
    dec->add_option("expr", c.expr, "Bundle expression")->required();
    auto* coh = app.add_subcommand("cohomology", "Cohomology on Q^6 or graded cohomology on X+/X-");
    coh->add_option("expr", c.expr, "Bundle expression")->required();
    coh->add_option("--space", c.space, "q6, xplus or xminus")->check(CLI::IsMember({"q6", "xplus", "xminus"}));
    coh->add_flag("--all-k", c.all_k, "Certificate over every grade instead of grades 0..kmax");
    auto* ext = app.add_subcommand("ext", "Ext^*(A, B) between bundles or registered summands");
    ext->add_option("a", c.expr, "First argument")->required();
    ext->add_option("b", c.expr_b, "Second argument")->required();
    ext->add_option("--space", c.space, "q6, xplus or xminus")->check(CLI::IsMember({"q6", "xplus", "xminus"}));
    ext->add_flag("--all-k", c.all_k, "Certificate over every grade");
    auto* ver = app.add_subcommand("verify", "Run registry claims");
    ver->add_option("ids", c.ids, "Claim ids ('extensions' checks the extension objects)");
    ver->add_flag("--all", c.all, "Every claim in the registry");
    auto* endc = app.add_subcommand("end-compare", "Graded End algebras of T+ sharp and T- sharp");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kUsage;
    }

    try {
        if (*bbw) return cmd_bbw(c, out);
        if (*dec) return cmd_decompose(c, out);
        if (*coh) return cmd_cohomology(c, out);
        if (*ext) return cmd_ext(c, out);
        if (*ver) return cmd_verify(c, out);
        if (*endc) return cmd_end_compare(c, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace bbwtilt::cli
