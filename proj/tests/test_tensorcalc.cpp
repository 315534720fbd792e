#include "oracles.hpp"

#include "bbwtilt/errors.hpp"
#include "bbwtilt/rootsys/bbw.hpp"
#include "bbwtilt/tensorcalc/decompose.hpp"

#include <doctest.h>

#include <random>

using namespace bbwtilt;
using namespace bbwtilt::tensorcalc;
using rootsys::AffineForm;
using rootsys::levi_rank;

namespace {

Weight W(const char* s) { return Weight::parse(s); }

Decomposition D(std::initializer_list<std::pair<const char*, std::int64_t>> terms) {
    Decomposition d;
    for (const auto& [w, m] : terms) d[W(w)] += m;
    return d;
}

AffineForm form(const std::string& s) { return parse_expr("O(" + s + ")").twist(); }

// Expected family given by its four doubled numerators, e.g. {"3k-4","k+2","k+2","k+2"}.
struct Row {
    std::array<const char*, 4> num;
    std::int64_t mult;
};

using FormMultiset = std::map<std::array<AffineForm, 4>, std::int64_t>;

FormMultiset expected_forms(const std::vector<Row>& rows) {
    FormMultiset out;
    for (const auto& r : rows) {
        std::array<AffineForm, 4> f{};
        for (int i = 0; i < 4; ++i) f[i] = form(r.num[i]);
        out[f] += r.mult;
    }
    return out;
}

FormMultiset stable_forms(const AffineDecomposition& d) {
    FormMultiset out;
    for (const auto& t : d.stable) out[t.weight.doubled()] += t.mult;
    return out;
}

Decomposition evaluate(const std::vector<Row>& rows, std::int64_t k, std::int64_t j = 0) {
    Decomposition out;
    for (const auto& r : rows) {
        IntVec4 v{};
        for (int i = 0; i < 4; ++i) v[i] = form(r.num[i]).eval(k, j);
        out[Weight::from_doubled(v)] += r.mult;
    }
    return out;
}

Decomposition evaluate(const std::vector<AffineTerm>& terms, std::int64_t k, std::int64_t j = 0) {
    Decomposition out;
    for (const auto& t : terms) out[t.weight.at(k, j)] += t.mult;
    return out;
}

GLWeight random_gl(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> d(-3, 3);
    IntVec4 v{};
    for (auto& x : v) x = d(rng);
    std::sort(v.begin(), v.end(), std::greater<>());
    return GLWeight(v);
}

} // namespace

TEST_CASE("phi on the spinor dictionary") {
    CHECK(phi(GLWeight(1, 0, 0, 0)) == W("1/2,1/2,1/2,1/2"));
    CHECK(phi(GLWeight(0, 0, 0, -1)) == W("-1/2,1/2,1/2,-1/2"));
    CHECK(phi(GLWeight(1, 1, 1, 1)) == W("2,0,0,0"));
}

TEST_CASE("GL dimensions") {
    CHECK(gl_dim(GLWeight(1, 0, 0, 0)) == 4);
    CHECK(gl_dim(GLWeight(1, 1, 0, 0)) == 6);
    CHECK(gl_dim(GLWeight(2, 0, 0, 0)) == 10);
    for (std::int64_t k = 0; k <= 12; ++k)
        CHECK(gl_dim(GLWeight(k, 0, 0, 0)) == static_cast<std::uint64_t>((k + 1) * (k + 2) * (k + 3) / 6));
    CHECK(gl_dim(GLWeight(1, 0, 0, -1)) == 15);
    CHECK_THROWS_AS(GLWeight(0, 1, 0, 0), std::invalid_argument);
}

TEST_CASE("Littlewood-Richardson reference products") {
    CHECK(lr_decompose(GLWeight(2, 0, 0, 0), GLWeight(1, 0, 0, 0)) ==
          GLMultiset{{GLWeight(3, 0, 0, 0), 1}, {GLWeight(2, 1, 0, 0), 1}});
    CHECK(lr_decompose(GLWeight(), GLWeight(2, 1, -1, -3)) == GLMultiset{{GLWeight(2, 1, -1, -3), 1}});
    CHECK(lr_decompose(GLWeight(1, 0, 0, 0), GLWeight(0, 0, 0, -1)) ==
          GLMultiset{{GLWeight(1, 0, 0, -1), 1}, {GLWeight(), 1}});
    // (2,1) x (2,1) has the multiplicity-2 constituent (3,2,1).
    CHECK(lr_decompose(GLWeight(2, 1, 0, 0), GLWeight(2, 1, 0, 0)).at(GLWeight(3, 2, 1, 0)) == 2);
}

TEST_CASE("Littlewood-Richardson agrees with Schur characters") {
    std::mt19937_64 rng(31337);
    for (int n = 0; n < 60; ++n) {
        const GLWeight a = random_gl(rng);
        const GLWeight b = random_gl(rng);
        std::map<IntVec4, std::int64_t> mine;
        for (const auto& [c, m] : lr_decompose(a, b)) mine[c.parts()] = m;
        CHECK_MESSAGE(mine == oracle::schur_product(a.parts(), b.parts()), a.to_string() << " x " << b.to_string());
    }
}

TEST_CASE("LR is commutative and shift-equivariant") {
    std::mt19937_64 rng(4242);
    for (int n = 0; n < 100; ++n) {
        const GLWeight a = random_gl(rng);
        const GLWeight b = random_gl(rng);
        const auto ab = lr_decompose(a, b);
        CHECK(ab == lr_decompose(b, a));
        const std::int64_t c = static_cast<std::int64_t>(rng() % 5) - 2;
        GLMultiset shifted;
        for (const auto& [w, m] : ab) shifted[w.shifted(c)] = m;
        CHECK(lr_decompose(a.shifted(c), b) == shifted);
    }
}

TEST_CASE("expression parsing") {
    CHECK(parse_expr("S*S") == BundleExpr::S() * BundleExpr::S());
    CHECK(parse_expr(" O ( -2 ) ") == BundleExpr::O(-2));
    CHECK(parse_expr("O") == BundleExpr::O(0));
    CHECK(parse_expr("S(1)") == BundleExpr::S() * BundleExpr::O(1));
    CHECK(parse_expr("dual(S)") == BundleExpr::Sv());
    CHECK(parse_expr("dual(O(3))") == BundleExpr::O(-3));
    CHECK(parse_expr("Sym^2(S(1))") == BundleExpr::sym(2) * BundleExpr::O(2));
    CHECK(parse_expr("Sym^k(S(2))") == BundleExpr::sym_k() * BundleExpr::O(AffineForm{2, 0, 0}));
    const auto e = parse_expr("Sym^k(S) * S * O(2k+j)");
    CHECK(e.has_sym_k());
    CHECK(e.uses_j());
    CHECK(e.twist() == AffineForm{2, 1, 0});
    CHECK(e.total_twist() == AffineForm{1, 1, -1});
    CHECK(parse_expr(e.to_string()) == e);
    CHECK(parse_expr("Sv*S*Sym^3(S)").to_string() == "Sym^3(S) * S * Sv");
    CHECK_THROWS_AS(parse_expr("S*"), ParseError);
    CHECK_THROWS_AS(parse_expr("T"), ParseError);
    CHECK_THROWS_AS(parse_expr("Sym^k(S)*Sym^k(S)"), std::invalid_argument);
    CHECK_THROWS_AS(parse_expr("dual(Sym^k(S))"), ParseError);
    CHECK_THROWS_AS(parse_expr("Sym^2(S*S)"), ParseError);
    CHECK_THROWS_AS(parse_expr("O(1"), ParseError);
}

TEST_CASE("dual") {
    CHECK(BundleExpr::S().dual() == BundleExpr::Sv());
    CHECK(BundleExpr::S().atoms()[0].dual() == Atom{GLWeight(0, 0, 0, -1), 1});
    CHECK(BundleExpr::O(5).dual() == BundleExpr::O(-5));
    CHECK(decompose(BundleExpr::sym(2).dual()) == decompose(parse_expr("Sym^2(Sv)")));
    CHECK_THROWS_AS(BundleExpr::sym_k().dual(), std::invalid_argument);
}

TEST_CASE("concrete decompositions") {
    CHECK(decompose(parse_expr("S*S")) == D({{"-1,1,1,1", 1}, {"-1,1,0,0", 1}}));
    CHECK(decompose(parse_expr("O(-4)")) == D({{"-4,0,0,0", 1}}));
    // Sym^2 S (x) Sv (x) O(3) is the k=2, j=0 member of Sym^k S (x) Sv (x) O(2k+j-1).
    CHECK(decompose(parse_expr("Sym^2(S)*Sv*O(3)")) == D({{"5/2,3/2,3/2,1/2", 1}, {"5/2,1/2,1/2,1/2", 1}}));
    CHECK(decompose(parse_expr("S*Sv")) == D({{"0,0,0,0", 1}, {"0,1,1,0", 1}}));
}

TEST_CASE("rank consistency") {
    const char* exprs[] = {"S*S*S", "Sym^3(S)*Sv*Sv", "Sym^5(S)*S*Sv*O(2)", "Sym^2(Sv)*Sym^2(S)", "Sv*Sv*Sv*S"};
    for (const char* s : exprs) {
        const auto e = parse_expr(s);
        std::uint64_t r = 0;
        for (const auto& [w, m] : decompose(e)) r += static_cast<std::uint64_t>(m) * levi_rank(w);
        CHECK_MESSAGE(r == e.rank(), std::string(s));
    }
}

TEST_CASE("decompose_affine matches concrete decompositions for small k") {
    const char* families[] = {
        "Sym^k(S)*O(2k+j)",        "Sym^k(S)*S*O(2k+j)",      "Sym^k(S)*Sv*O(2k+j-1)",
        "Sym^k(S)*S*Sv*O(2k)",     "Sym^k(S)*S*S*O(2k+1)",    "Sym^k(S)*Sv*Sv*O(2k-1)",
        "Sym^k(S)*S*S*O(2k-1)",    "Sym^k(S)*Sv*Sv*O(2k+1)",  "Sym^k(S)*S*S*Sv*O(2k)",
        "Sym^k(S)*Sv*Sv*Sv*O(2k)", "Sym^k(S)*O(2k)*S*O(-3)",
    };
    for (const char* s : families) {
        const auto e = parse_expr(s);
        const auto d = decompose_affine(e, ParamDomain{0, std::nullopt, e.uses_j(), -3});
        for (std::int64_t k = 0; k <= 10; ++k)
            for (std::int64_t j : {-3, 0, 2})
                CHECK_MESSAGE(evaluate(d.at_k(k), k, j) == decompose(e.at(k, j)), std::string(s) << " k=" << k << " j=" << j);
    }
}

TEST_CASE("decompose_affine reproduces the displayed tables") {
    SUBCASE("line bundle family") {
        const auto d = decompose_affine(parse_expr("Sym^k(S)*O(2k+j)"), {0, std::nullopt, true, -5});
        CHECK(stable_forms(d) == expected_forms({{{"3k+2j", "k", "k", "k"}, 1}}));
        CHECK(d.first_stable_k == 0);
    }
    SUBCASE("Sym^k S (x) S (x) O(2k+j)") {
        const auto d = decompose_affine(parse_expr("Sym^k(S)*S*O(2k+j)"), {0, std::nullopt, true, -2});
        const std::vector<Row> k_ge_1{{{"3k+2j-1", "k+1", "k+1", "k+1"}, 1}, {{"3k+2j-1", "k+1", "k-1", "k-1"}, 1}};
        CHECK(stable_forms(d) == expected_forms(k_ge_1));
        CHECK(d.first_stable_k == 1);
        for (std::int64_t j = -2; j <= 3; ++j) {
            CHECK(evaluate(d.at_k(0), 0, j) == evaluate({{{"3k+2j-1", "k+1", "k+1", "k+1"}, 1}}, 0, j));
            CHECK(evaluate(d.at_k(1), 1, j) == evaluate(k_ge_1, 1, j));
        }
    }
    SUBCASE("Sym^k S (x) Sv (x) O(2k+j-1)") {
        const auto d = decompose_affine(parse_expr("Sym^k(S)*Sv*O(2k+j-1)"), {0, std::nullopt, true, -2});
        const std::vector<Row> k_ge_1{{{"3k+2j-1", "k+1", "k+1", "k-1"}, 1}, {{"3k+2j-1", "k-1", "k-1", "k-1"}, 1}};
        CHECK(stable_forms(d) == expected_forms(k_ge_1));
        CHECK(d.first_stable_k == 1);
        for (std::int64_t j = -2; j <= 3; ++j) {
            CHECK(evaluate(d.at_k(0), 0, j) == evaluate({{{"2j-1", "1", "1", "-1"}, 1}}, 0, j));
            CHECK(evaluate(d.at_k(1), 1, j) == evaluate(k_ge_1, 1, j));
        }
    }
    SUBCASE("Sym^k S (x) S (x) Sv (x) O(2k)") {
        const auto d = decompose_affine(parse_expr("Sym^k(S)*S*Sv*O(2k)"));
        CHECK(stable_forms(d) == expected_forms({{{"3k", "k", "k", "k"}, 2},
                                                 {{"3k", "k+2", "k+2", "k"}, 1},
                                                 {{"3k", "k+2", "k", "k-2"}, 1},
                                                 {{"3k", "k", "k-2", "k-2"}, 1}}));
        CHECK(d.first_stable_k == 2);
        CHECK(evaluate(d.at_k(0), 0) == D({{"0,0,0,0", 1}, {"0,1,1,0", 1}}));
        CHECK(evaluate(d.at_k(1), 1) ==
              D({{"3/2,1/2,1/2,1/2", 2}, {"3/2,3/2,3/2,1/2", 1}, {"3/2,3/2,1/2,-1/2", 1}}));
    }
    SUBCASE("Sym^k S (x) S (x) S (x) O(2k+1)") {
        const auto d = decompose_affine(parse_expr("Sym^k(S)*S*S*O(2k+1)"));
        CHECK(stable_forms(d) == expected_forms({{{"3k", "k+2", "k+2", "k+2"}, 1},
                                                 {{"3k", "k+2", "k", "k"}, 2},
                                                 {{"3k", "k", "k", "k-2"}, 1},
                                                 {{"3k", "k+2", "k-2", "k-2"}, 1}}));
        CHECK(d.stable.size() == 4);
        CHECK(evaluate(d.at_k(0), 0) == D({{"0,1,1,1", 1}, {"0,1,0,0", 1}}));
        CHECK(evaluate(d.at_k(1), 1) ==
              D({{"3/2,3/2,3/2,3/2", 1}, {"3/2,3/2,1/2,1/2", 2}, {"3/2,1/2,1/2,-1/2", 1}}));
    }
    SUBCASE("Sym^k S (x) Sv (x) Sv (x) O(2k-1)") {
        const auto d = decompose_affine(parse_expr("Sym^k(S)*Sv*Sv*O(2k-1)"));
        CHECK(stable_forms(d) == expected_forms({{{"3k", "k+2", "k+2", "k-2"}, 1},
                                                 {{"3k", "k+2", "k", "k"}, 1},
                                                 {{"3k", "k", "k", "k-2"}, 2},
                                                 {{"3k", "k-2", "k-2", "k-2"}, 1}}));
        CHECK(evaluate(d.at_k(0), 0) == D({{"0,1,1,-1", 1}, {"0,1,0,0", 1}}));
        CHECK(evaluate(d.at_k(1), 1) ==
              D({{"3/2,3/2,3/2,-1/2", 1}, {"3/2,3/2,1/2,1/2", 1}, {"3/2,1/2,1/2,-1/2", 2}}));
    }
    SUBCASE("Sym^k S (x) S (x) S (x) O(2k-1)") {
        const auto d = decompose_affine(parse_expr("Sym^k(S)*S*S*O(2k-1)"));
        CHECK(stable_forms(d) == expected_forms({{{"3k-4", "k+2", "k+2", "k+2"}, 1},
                                                 {{"3k-4", "k+2", "k", "k"}, 2},
                                                 {{"3k-4", "k", "k", "k-2"}, 1},
                                                 {{"3k-4", "k+2", "k-2", "k-2"}, 1}}));
        CHECK(evaluate(d.at_k(0), 0) == D({{"-2,1,1,1", 1}, {"-2,1,0,0", 1}}));
        CHECK(evaluate(d.at_k(1), 1) ==
              D({{"-1/2,3/2,3/2,3/2", 1}, {"-1/2,3/2,1/2,1/2", 2}, {"-1/2,1/2,1/2,-1/2", 1}}));
    }
    SUBCASE("Sym^k S (x) Sv (x) Sv (x) O(2k+1)") {
        const auto d = decompose_affine(parse_expr("Sym^k(S)*Sv*Sv*O(2k+1)"));
        CHECK(stable_forms(d) == expected_forms({{{"3k+4", "k+2", "k+2", "k-2"}, 1},
                                                 {{"3k+4", "k+2", "k", "k"}, 1},
                                                 {{"3k+4", "k", "k", "k-2"}, 2},
                                                 {{"3k+4", "k-2", "k-2", "k-2"}, 1}}));
        CHECK(evaluate(d.at_k(0), 0) == D({{"2,1,1,-1", 1}, {"2,1,0,0", 1}}));
        CHECK(evaluate(d.at_k(1), 1) ==
              D({{"7/2,3/2,3/2,-1/2", 1}, {"7/2,3/2,1/2,1/2", 1}, {"7/2,1/2,1/2,-1/2", 2}}));
    }
}

TEST_CASE("decompose_affine domain handling") {
    const auto d = decompose_affine(parse_expr("Sym^k(S)*S*O(2k+j)"), {6, std::nullopt, true, -2});
    CHECK(d.low.empty());
    REQUIRE_FALSE(d.stable.empty());
    CHECK(d.stable.front().weight.domain().kmin == 6);
    CHECK(d.at_k(3).empty());

    const auto c = decompose_affine(parse_expr("S*S*O(j)"), {0, std::nullopt, true, 0});
    CHECK(c.low.empty());
    CHECK(evaluate(c.stable, 0, 1) == decompose(parse_expr("S*S*O(1)")));
}
