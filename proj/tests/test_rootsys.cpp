#include "oracles.hpp"

#include "bbwtilt/errors.hpp"
#include "bbwtilt/rootsys/bbw.hpp"
#include "bbwtilt/rootsys/bbw_affine.hpp"
#include "bbwtilt/rootsys/region.hpp"

#include <doctest.h>

#include <random>

using namespace bbwtilt;
using namespace bbwtilt::rootsys;

namespace {

Weight W(const char* s) { return Weight::parse(s); }

Weight random_levi_dominant(std::mt19937_64& rng, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    while (true) {
        const std::int64_t par = d(rng) & 1;
        IntVec4 v{};
        for (auto& x : v) x = 2 * (d(rng) / 2) + par;
        if (v[0] < lo || v[0] > hi) continue;
        if (v[1] >= v[2] && v[2] >= std::abs(v[3])) return Weight::from_doubled(v);
    }
}

} // namespace

TEST_CASE("weight parsing and formatting") {
    CHECK(W("-1/2,1/2,1/2,1/2").doubled() == IntVec4{-1, 1, 1, 1});
    CHECK(W("[\"0\", \"1\", \"0\", \"0\"]") == Weight::integral(0, 1, 0, 0));
    CHECK(W("(3/2, 1/2, 1/2, 1/2)").to_string() == "(3/2,1/2,1/2,1/2)");
    CHECK(W("-7/2,1/2,1/2,1/2").coordinate_strings()[0] == "-7/2");
    CHECK_THROWS_AS(W("1/2,0,0,0"), ParseError);
    CHECK_THROWS_AS(W("1,2,3"), ParseError);
    CHECK_THROWS_AS(W("1/3,0,0,0"), ParseError);
    CHECK_THROWS_AS(W("a,0,0,0"), ParseError);
    CHECK_THROWS_AS(Weight::from_doubled({1, 0, 0, 0}), std::invalid_argument);
}

TEST_CASE("rho is half the sum of the positive roots") {
    IntVec4 sum{};
    for (const auto& a : positive_roots())
        for (int i = 0; i < 4; ++i) sum[i] += a[i];
    CHECK(Weight::from_doubled(sum) == rho());
    CHECK(positive_roots().size() == 12);
}

TEST_CASE("dominance") {
    CHECK(is_dominant(W("1/2,1/2,1/2,1/2")));
    CHECK(is_dominant(W("0,0,0,0")));
    CHECK_FALSE(is_dominant(W("-1,1,0,0")));
    CHECK(is_levi_dominant(W("-7/2,1/2,1/2,1/2")));
    CHECK(is_levi_dominant(W("0,0,0,0")));
    CHECK_FALSE(is_levi_dominant(W("0,0,-1,0")));
}

TEST_CASE("dotted reflections") {
    CHECK(dotted_reflect(1, W("-1,1,0,0")) == W("0,0,0,0"));
    CHECK(dotted_reflect(4, W("-1/2,-1/2,-1/2,-1/2")) == W("-1/2,-1/2,-1/2,-1/2"));
    CHECK(dotted_reflect(3, dotted_reflect(2, dotted_reflect(1, W("-7/2,1/2,1/2,1/2")))) ==
          W("-1/2,-1/2,-1/2,-1/2"));
    CHECK_THROWS_AS(dotted_reflect(0, W("0,0,0,0")), std::out_of_range);
    CHECK_THROWS_AS(dotted_reflect(5, W("0,0,0,0")), std::out_of_range);
}

TEST_CASE("singularity") {
    CHECK(is_singular(W("-1/2,-1/2,-1/2,-1/2")));
    CHECK_FALSE(is_singular(W("0,0,0,0")));
    CHECK(is_singular(W("-1,1,1,1")));
    CHECK(oracle::singular(W("-1,1,1,1")));
    CHECK(oracle::weyl_group().size() == 192);
}

TEST_CASE("bbw_resolve on reference weights") {
    auto r = bbw_resolve(W("-1,1,0,0"));
    REQUIRE_FALSE(r.is_singular());
    CHECK(r.regular().degree == 1);
    CHECK(r.regular().dominant == W("0,0,0,0"));
    CHECK(r.regular().dim == 1);
    CHECK(r.regular().word == std::vector<int>{1});

    r = bbw_resolve(W("1/2,1/2,1/2,1/2"));
    CHECK(r.regular().degree == 0);
    CHECK(r.regular().dim == 8);

    CHECK(bbw_resolve(W("-7/2,1/2,1/2,1/2")).is_singular());

    r = bbw_resolve(W("-6,0,0,0"));
    CHECK(r.regular().degree == 6);
    CHECK(r.regular().dominant == W("0,0,0,0"));
    CHECK(r.regular().dim == 1);
    CHECK(r.dim_at(6) == 1);
    CHECK(r.dim_at(5) == 0);

    CHECK_THROWS_AS(bbw_resolve(W("0,0,-1,0")), std::invalid_argument);
}

TEST_CASE("dimension formulas") {
    CHECK(weyl_dim_d4(W("0,0,0,0")) == 1);
    CHECK(weyl_dim_d4(W("3/2,1/2,1/2,1/2")) == 56);
    CHECK(weyl_dim_d4(W("2,1,1,1")) == 224);
    CHECK(weyl_dim_d4(W("1,0,0,0")) == 8);
    CHECK(weyl_dim_d4(W("5/2,1/2,1/2,1/2")) == 224);
    CHECK_THROWS_AS(weyl_dim_d4(W("-1,1,0,0")), std::invalid_argument);

    CHECK(levi_rank(W("5,0,0,0")) == 1);
    CHECK(levi_rank(W("-3,0,0,0")) == 1);
    CHECK(levi_rank(W("-1/2,1/2,1/2,1/2")) == 4);
    CHECK(levi_rank(W("1/2,1/2,1/2,-1/2")) == 4);
    CHECK_THROWS_AS(levi_rank(W("0,0,-1,0")), std::invalid_argument);

    CHECK(serre_dual_weight(W("0,0,0,0")) == W("-6,0,0,0"));
    CHECK(serre_dual_weight(W("1/2,1/2,1/2,1/2")) == W("-13/2,1/2,1/2,-1/2"));
    CHECK(serre_dual_weight(W("2,0,0,0")) == W("-8,0,0,0"));
}

TEST_CASE("Weyl dimension agrees with Freudenthal multiplicities") {
    std::mt19937_64 rng(20240611);
    std::uniform_int_distribution<int> d(0, 6);
    int checked = 0;
    while (checked < 40) {
        const std::int64_t par = d(rng) & 1;
        IntVec4 v{};
        for (auto& x : v) x = 2 * d(rng) + par;
        std::sort(v.begin(), v.end(), std::greater<>());
        if (rng() & 1) v[3] = -v[3];
        const Weight w = Weight::from_doubled(v);
        if (!is_dominant(w)) continue;
        CHECK_MESSAGE(static_cast<std::int64_t>(weyl_dim_d4(w)) == oracle::freudenthal_dim(w), w.to_string());
        ++checked;
    }
}

TEST_CASE("bbw_resolve agrees with the brute-force Weyl group") {
    std::mt19937_64 rng(7);
    for (int n = 0; n < 300; ++n) {
        const Weight w = random_levi_dominant(rng, -16, 16);
        const auto r = bbw_resolve(w);
        const auto o = oracle::brute_bbw(w);
        REQUIRE(r.is_singular() == o.singular);
        if (r.is_singular()) continue;
        CHECK(r.regular().degree == o.degree);
        CHECK(r.regular().dominant == o.dominant);
        CHECK(r.regular().degree <= 6);
        Weight back = w;
        for (int i : r.regular().word) back = dotted_reflect(i, back);
        CHECK(back == r.regular().dominant);
    }
}

TEST_CASE("affine forms and weights") {
    ParamDomain dom{0, std::nullopt, true, -5};
    AffineWeight w({AffineForm{3, 2, 0}, AffineForm{1, 0, 0}, AffineForm{1, 0, 0}, AffineForm{1, 0, 0}}, dom);
    CHECK(w.to_string() == "((3k+2j)/2,k/2,k/2,k/2)");
    CHECK(w.at(1, -5) == W("-7/2,1/2,1/2,1/2"));
    CHECK(w.pairing(simple_roots()[0]) == AffineForm{1, 1, 0});
    CHECK_THROWS_AS(AffineWeight({AffineForm{1, 0, 0}, AffineForm{0, 0, 0}, AffineForm{}, AffineForm{}}, dom),
                    std::invalid_argument);
    AffineWeight even({AffineForm{2, 0, -2}, AffineForm{}, AffineForm{}, AffineForm{}}, {});
    CHECK(even.to_string() == "(k-1,0,0,0)");
}

TEST_CASE("region engine matches brute enumeration") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> cst(-8, 8);
    for (int n = 0; n < 300; ++n) {
        ParamDomain dom{cst(rng) / 2, std::nullopt, true, cst(rng) / 2};
        Region r(dom);
        const int extra = 1 + static_cast<int>(rng() % 3);
        for (int e = 0; e < extra; ++e) r.add({coef(rng), coef(rng), cst(rng)});
        // Compare inside a window large enough to contain every vertex.
        Region boxed = r.with({-1, 0, 100}).add({0, -1, 100});
        std::vector<std::pair<std::int64_t, std::int64_t>> brute;
        for (std::int64_t k = -10; k <= 100; ++k)
            for (std::int64_t j = -10; j <= 100; ++j)
                if (boxed.contains(k, j)) brute.emplace_back(k, j);
        CHECK(boxed.lattice_points() == brute);
        CHECK(boxed.empty() == brute.empty());
        CHECK(r.empty() == brute.empty());
        if (r.bounded()) CHECK(r.lattice_points() == brute);
        const AffineForm f{coef(rng), coef(rng), cst(rng)};
        const auto s = boxed.signs(f);
        bool neg = false, zero = false, pos = false;
        for (auto [k, j] : brute) {
            const auto v = f.eval(k, j);
            neg |= v < 0, zero |= v == 0, pos |= v > 0;
        }
        CHECK(s.neg == neg);
        CHECK(s.zero == zero);
        CHECK(s.pos == pos);
    }
}

TEST_CASE("region strips with parity gaps are empty") {
    ParamDomain dom{0, std::nullopt, true, 0};
    Region r(dom);
    r.add({0, 2, -1}).add({0, -2, 1});
    CHECK(r.empty());
    Region s(dom);
    s.add({1, -2, 0}).add({-1, 2, 1});
    CHECK_FALSE(s.empty());
    CHECK_FALSE(s.bounded());
}

TEST_CASE("symbolic BBW: line bundle family") {
    ParamDomain dom{0, std::nullopt, true, -5};
    AffineWeight w({AffineForm{3, 2, 0}, AffineForm{1, 0, 0}, AffineForm{1, 0, 0}, AffineForm{1, 0, 0}}, dom);
    const auto res = bbw_resolve_affine(w);
    REQUIRE_FALSE(res.inconclusive);
    CHECK(res.points.size() == 15);
    for (const auto& p : res.points) {
        CHECK(p.result.is_singular());
        CHECK(p.k + p.j < 0);
    }
    REQUIRE(res.regions.size() == 1);
    CHECK_FALSE(res.regions[0].outcome.singular);
    CHECK(res.regions[0].outcome.degree == 0);
    CHECK(res.regions[0].region.to_string() == "k >= 0, j >= -5, k+j >= 0");
    CHECK(res.threshold_k == 5);
}

TEST_CASE("symbolic BBW: spinor family has one exceptional point") {
    ParamDomain dom{1, std::nullopt, true, -2};
    AffineWeight w({AffineForm{3, 2, -1}, AffineForm{1, 0, 1}, AffineForm{1, 0, -1}, AffineForm{1, 0, -1}}, dom);
    const auto res = bbw_resolve_affine(w);
    REQUIRE_FALSE(res.inconclusive);
    int nondominant = 0;
    for (const auto& p : res.points) {
        if (p.result.is_singular() || p.result.regular().degree == 0) continue;
        ++nondominant;
        CHECK(p.k == 1);
        CHECK(p.j == -2);
        CHECK(p.result.regular().degree == 1);
        CHECK(p.result.regular().dominant == W("0,0,0,0"));
    }
    CHECK(nondominant == 1);
    for (const auto& r : res.regions) CHECK((r.outcome.singular || r.outcome.degree == 0));
}

TEST_CASE("symbolic BBW: constant family") {
    const auto res = bbw_resolve_affine(AffineWeight::constant(W("0,0,0,0")));
    CHECK(res.points.empty());
    REQUIRE(res.regions.size() == 1);
    CHECK(res.regions[0].outcome.degree == 0);
    CHECK_FALSE(res.regions[0].outcome.singular);
    CHECK(res.threshold_k == 0);

    const auto bad = AffineWeight({AffineForm{0, 0, 0}, AffineForm{}, AffineForm{0, 0, -2}, AffineForm{}}, {});
    CHECK_THROWS_AS(bbw_resolve_affine(bad), std::invalid_argument);
}

TEST_CASE("symbolic BBW: bounded domain and pinned k") {
    ParamDomain dom{2, 2, true, -8};
    AffineWeight w({AffineForm{3, 2, 0}, AffineForm{1, 0, 0}, AffineForm{1, 0, 0}, AffineForm{1, 0, 0}}, dom);
    const auto res = bbw_resolve_affine(w);
    for (const auto& p : res.points) CHECK(p.k == 2);
    for (std::int64_t j = -8; j <= 10; ++j) {
        const auto concrete = bbw_resolve(w.at(2, j));
        bool found = false;
        for (const auto& p : res.points) {
            if (p.j != j) continue;
            found = true;
            CHECK(p.result == concrete);
        }
        for (const auto& r : res.regions)
            if (r.region.contains(2, j)) {
                found = true;
                CHECK(r.outcome.singular == concrete.is_singular());
            }
        CHECK(found);
    }
}
