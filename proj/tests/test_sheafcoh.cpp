#include "oracles.hpp"

#include "bbwtilt/errors.hpp"
#include "bbwtilt/rootsys/bbw.hpp"
#include "bbwtilt/sheafcoh/json.hpp"
#include "bbwtilt/tensorcalc/decompose.hpp"

#include <doctest.h>

#include <random>

using namespace bbwtilt;
using namespace bbwtilt::sheafcoh;
using rootsys::AffineForm;
using tensorcalc::parse_expr;

namespace {

Weight W(const char* s) { return Weight::parse(s); }
BundleExpr E(const char* s) { return parse_expr(s); }

// Per-degree dimensions of H^*(Q^6, e) via the brute Weyl group and Freudenthal.
std::array<std::uint64_t, 7> oracle_dims(const BundleExpr& e) {
    std::array<std::uint64_t, 7> d{};
    for (const auto& [w, m] : tensorcalc::decompose(e)) {
        const auto b = oracle::brute_bbw(w);
        if (b.singular) continue;
        d[static_cast<std::size_t>(b.degree)] +=
            static_cast<std::uint64_t>(oracle::freudenthal_dim(b.dominant)) * static_cast<std::uint64_t>(m);
    }
    return d;
}

BundleExpr random_bundle(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> pick(0, 5), tw(-8, 4);
    BundleExpr e = BundleExpr::O(tw(rng));
    const int n = pick(rng) % 3 + 1;
    for (int i = 0; i < n; ++i) {
        switch (pick(rng)) {
        case 0: e *= BundleExpr::S(); break;
        case 1: e *= BundleExpr::Sv(); break;
        case 2: e *= BundleExpr::sym(2); break;
        case 3: e *= BundleExpr::sym(3); break;
        default: break;
        }
    }
    return e;
}

VanishingClaim family_claim(const char* family, int cutoff, std::int64_t jmin) {
    VanishingClaim c;
    c.family = E(family);
    c.cutoff = cutoff;
    c.domain = ParamDomain{0, std::nullopt, true, jmin};
    return c;
}

} // namespace

TEST_CASE("cohomology on Q^6: reference bundles") {
    const auto ss = cohomology_q6(E("S * S"));
    CHECK(ss.dim(1) == 1);
    CHECK(ss.dim(0) == 0);
    CHECK(cohomology_q6(E("O")).dim(0) == 1);
    const auto minus1 = cohomology_q6(E("O(-1)"));
    CHECK(minus1.grades.at(0).groups.empty());
    CHECK(cohomology_q6(E("O(-6)")).dim(6) == 1);
    CHECK(cohomology_q6(E("O(1)")).dim(0) == 8);
    CHECK(cohomology_q6(E("Sv")).dim(0) == 8);
    CHECK(to_text(minus1).find("all cohomology vanishes") != std::string::npos);
}

TEST_CASE("cohomology on X: grades") {
    const auto o = cohomology_total(E("O"), Space::XPlus, 1);
    REQUIRE(o.grades.size() == 2);
    CHECK(o.dim(0, 0) == 1);
    CHECK(o.dim(1, 0) == 56);
    const auto s = cohomology_total(E("S(-2)"), Space::XMinus, 3);
    CHECK(s.dim(1, 1) == 1);
    CHECK(s.dim(1) == 1);
    CHECK(s.space == Space::XMinus);
    CHECK(parse_space("xplus") == Space::XPlus);
    CHECK_THROWS_AS(parse_space("x"), ParseError);
    CHECK_THROWS_AS(cohomology_total(E("Sym^k(S)"), Space::XPlus, 2), std::invalid_argument);
}

TEST_CASE("cohomology agrees with the brute-force oracle") {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 120; ++n) {
        const auto e = random_bundle(rng);
        const auto t = cohomology_q6(e);
        const auto d = oracle_dims(e);
        for (int i = 0; i <= 6; ++i) CHECK_MESSAGE(t.dim(i) == d[static_cast<std::size_t>(i)], e.to_string());
    }
}

TEST_CASE("Serre duality on Q^6") {
    std::mt19937_64 rng(5);
    for (int n = 0; n < 200; ++n) {
        const auto e = random_bundle(rng);
        const auto a = cohomology_q6(e);
        const auto b = cohomology_q6(e.dual() * BundleExpr::O(-6));
        for (int i = 0; i <= 6; ++i) CHECK_MESSAGE(a.dim(i) == b.dim(6 - i), e.to_string());
    }
}

TEST_CASE("serre_dual_weight matches the dual bundle computation") {
    for (const char* w : {"0,0,0,0", "1,0,0,0", "-1/2,1/2,1/2,1/2", "2,1,1,0", "-3,0,0,0"}) {
        const auto a = rootsys::bbw_resolve(W(w));
        const auto b = rootsys::bbw_resolve(rootsys::serre_dual_weight(W(w)));
        CHECK(a.is_singular() == b.is_singular());
        if (!a.is_singular()) {
            CHECK(a.regular().degree + b.regular().degree == 6);
            CHECK(a.regular().dim == b.regular().dim);
        }
    }
}

TEST_CASE("serial and parallel cohomology agree") {
    for (const char* s : {"O", "S(-2)", "S * S * Sv(-1)", "Sym^2(S) * O(-4)", "Sv * Sv(-3)"}) {
        const auto a = cohomology_total(E(s), Space::XPlus, 8, Exec::Serial);
        const auto b = cohomology_total(E(s), Space::XPlus, 8, Exec::Parallel);
        CHECK_MESSAGE(a == b, s);
    }
}

TEST_CASE("vanishing certificates") {
    SUBCASE("line bundles") {
        const auto c = prove_vanishing(family_claim("Sym^k(S) * O(2k+j)", 0, -5));
        CHECK(c.verdict == Verdict::Pass);
        CHECK(c.threshold_k == 5);
    }
    SUBCASE("spinor twists have one exception") {
        auto claim = family_claim("Sym^k(S) * S * O(2k+j)", 0, -2);
        claim.expected.push_back({1, -2, 1, std::nullopt, 1, std::nullopt});
        const auto c = prove_vanishing(claim);
        CHECK(c.verdict == Verdict::PassWithExceptions);
        REQUIRE(c.flagged.size() == 1);
        CHECK(c.flagged[0].dim == 1);
        claim.expected.clear();
        CHECK(prove_vanishing(claim).verdict == Verdict::Fail);
    }
    SUBCASE("wrong lower bound fails") {
        CHECK(prove_vanishing(family_claim("Sym^k(S) * O(2k+j)", 0, -6)).verdict == Verdict::Fail);
    }
    SUBCASE("two spinors, cutoff 1") {
        VanishingClaim claim;
        claim.family = E("Sym^k(S) * S * S * O(2k-1)");
        claim.cutoff = 1;
        claim.domain = ParamDomain{0, std::nullopt, false, 0};
        claim.expected.push_back({1, 0, 1, W("1/2,1/2,1/2,1/2"), 8, 2});
        claim.exact_exceptions = true;
        const auto c = prove_vanishing(claim);
        CHECK(c.verdict == Verdict::Pass);
        bool inf = true;
        CHECK(c.higher_total(&inf) == 16);
        CHECK_FALSE(inf);
    }
}

TEST_CASE("certificates agree with truncated cohomology") {
    struct Case {
        const char* a;
        const char* b;
    };
    for (const auto& [a, b] : {Case{"O", "O(-2)"}, Case{"S", "S"}, Case{"Sv", "S(1)"}, Case{"S(1)", "Sv"},
                               Case{"O(3)", "S(2)"}, Case{"Sv", "O(-2)"}}) {
        const auto cert = ext_pullbacks_all_k(E(a), E(b), 0);
        const auto table = ext_pullbacks(E(a), E(b), Space::XPlus, 10);
        bool higher = false;
        for (int i = 1; i <= 6; ++i) higher = higher || table.dim(i) > 0;
        std::string label = std::string(a) + " -> " + b;
        if (cert.verdict == Verdict::Pass) CHECK_MESSAGE(!higher, label);
        if (higher) CHECK_MESSAGE(cert.verdict == Verdict::Fail, label);
        CHECK_MESSAGE(cert.higher_total() == [&] {
            std::uint64_t t = 0;
            for (int i = 1; i <= 6; ++i) t += table.dim(i);
            return t;
        }(), label);
    }
}

TEST_CASE("Ext on X") {
    CHECK(ext_pullbacks_all_k(E("S"), E("S")).verdict == Verdict::Pass);
    const auto t = ext_pullbacks(E("Sv"), E("O(-2)"), Space::XPlus, 6);
    CHECK(t.dim(1, 1) == 1);
    CHECK(t.dim(1) == 1);
    // No extension of O(3) by S(2) exists.
    CHECK(ext_pullbacks_all_k(E("O(3)"), E("S(2)")).verdict == Verdict::Pass);
    CHECK(ext_pullbacks(E("O(3)"), E("S(1)"), Space::XPlus, 4).dim(1, 1) == 1);
}

TEST_CASE("orbit dimensions agree with Freudenthal") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> c(0, 3);
    for (int n = 0; n < 20; ++n) {
        const std::int64_t a = c(rng), b = c(rng), d = c(rng), e = c(rng);
        const auto w = Weight::from_doubled({2 * (a + b + d + e), 2 * (b + d + e), 2 * (d + e), 2 * e});
        CHECK(rootsys::weyl_dim_d4(w) == static_cast<std::uint64_t>(oracle::freudenthal_dim(w)));
    }
}

TEST_CASE("json rendering") {
    const auto j = to_json(cohomology_total(E("S(-2)"), Space::XPlus, 1));
    CHECK(j["space"] == "xplus");
    CHECK(j["grades"][1]["groups"][0]["i"] == 1);
    const auto c = to_json(prove_vanishing(family_claim("Sym^k(S) * O(2k+j)", 0, -5)));
    CHECK(c["verdict"] == "PASS");
    CHECK(c["threshold_k"] == 5);
}
