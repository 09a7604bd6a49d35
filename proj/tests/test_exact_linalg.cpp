#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <random>

#include "weylk/exact_linalg.hpp"

using namespace weylk;
using namespace weylk::exact_linalg;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int rows, int cols, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = d(rng);
    return m;
}

bool is_unimodular(const IntMatrix& m) {
    Int d = det(m);
    return d == 1 || d == -1;
}

} // namespace

TEST_CASE("rationals canonicalise") {
    CHECK(make_rat(2, 4) == make_rat(1, 2));
    CHECK(make_rat(-3, -6) == make_rat(1, 2));
    CHECK(rat_str(make_rat(-4, 6)) == "-2/3");
    CHECK(rat_str(make_rat(8, 2)) == "4");
    CHECK_THROWS_AS(make_rat(1, 0), Error);
}

TEST_CASE("matrix arithmetic") {
    IntMatrix a = IntMatrix::from_rows({{1, 2}, {3, 4}});
    IntMatrix b = IntMatrix::from_rows({{0, 1}, {1, 0}});
    CHECK((a * b) == IntMatrix::from_rows({{2, 1}, {4, 3}}));
    CHECK((a + b) == IntMatrix::from_rows({{1, 3}, {4, 4}}));
    CHECK((a - a).is_zero());
    CHECK(a.transpose() == IntMatrix::from_rows({{1, 3}, {2, 4}}));
    CHECK(IntMatrix::identity(3).is_identity());
    CHECK(a.apply(std::vector<Int>{1, 1}) == std::vector<Int>{3, 7});
}

TEST_CASE("smith normal form: worked examples") {
    SUBCASE("identity keeps unit invariant factors") {
        SnfResult s = smith_normal_form(IntMatrix::identity(6));
        CHECK(s.invariant_factors == std::vector<Int>{1, 1, 1, 1, 1, 1});
        CHECK(s.D == IntMatrix::identity(6));
    }
    SUBCASE("diag(2,6) stays a divisibility chain") {
        SnfResult s = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 6}}));
        CHECK(s.invariant_factors == std::vector<Int>{2, 6});
    }
    SUBCASE("diag(6,2) is reordered to the chain 2 | 6") {
        SnfResult s = smith_normal_form(IntMatrix::from_rows({{6, 0}, {0, 2}}));
        CHECK(s.invariant_factors == std::vector<Int>{2, 6});
    }
    SUBCASE("diag(4,6) rebalances to 2 | 12") {
        SnfResult s = smith_normal_form(IntMatrix::from_rows({{4, 0}, {0, 6}}));
        CHECK(s.invariant_factors == std::vector<Int>{2, 12});
    }
    SUBCASE("zero matrix") {
        SnfResult s = smith_normal_form(IntMatrix(3, 3));
        CHECK(s.invariant_factors.empty());
        CHECK(s.D.is_zero());
    }
}

TEST_CASE("smith normal form: randomised transform identity") {
    std::mt19937 rng(20240901);
    for (int trial = 0; trial < 60; ++trial) {
        int rows = 1 + int(rng() % 6), cols = 1 + int(rng() % 6);
        IntMatrix m = random_matrix(rng, rows, cols, -9, 9);
        SnfResult s = smith_normal_form(m);
        REQUIRE((s.U * m * s.V) == s.D);
        REQUIRE(is_unimodular(s.U));
        REQUIRE(is_unimodular(s.V));
        for (int i = 0; i + 1 < int(s.invariant_factors.size()); ++i)
            REQUIRE(s.invariant_factors[i + 1] % s.invariant_factors[i] == 0);
        for (int i = 0; i < std::min(rows, cols); ++i)
            for (int j = 0; j < std::min(rows, cols); ++j)
                if (i != j) REQUIRE(s.D.at(i, j) == 0);
        // d_1...d_r equals the gcd of r x r minors up to the chain telescoping.
        Int prod = 1;
        for (int r = 1; r <= int(s.invariant_factors.size()); ++r) {
            prod *= s.invariant_factors[r - 1];
            REQUIRE(prod == gcd_minors(m, r));
        }
    }
}

TEST_CASE("gcd_minors edge cases") {
    IntMatrix m = IntMatrix::from_rows({{2, 4}, {6, 8}});
    CHECK(gcd_minors(m, 0) == 1);
    CHECK(gcd_minors(m, 1) == 2);
    CHECK(gcd_minors(m, 2) == 8);
    CHECK(gcd_minors(IntMatrix(2, 2), 1) == 0); // all minors vanish
    CHECK_THROWS_AS(gcd_minors(m, 3), Error);
    CHECK_THROWS_AS(gcd_minors(m, -1), Error);
}

TEST_CASE("determinant and unimodular inverse") {
    IntMatrix m = IntMatrix::from_rows({{2, 3}, {1, 2}});
    CHECK(det(m) == 1);
    CHECK((inverse_unimodular(m) * m).is_identity());
    IntMatrix n = IntMatrix::from_rows({{0, 1}, {1, 0}});
    CHECK(det(n) == -1);
    CHECK((inverse_unimodular(n) * n).is_identity());
    CHECK_THROWS_AS(inverse_unimodular(IntMatrix::from_rows({{2, 0}, {0, 1}})), Error);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix a = random_matrix(rng, 5, 5, -4, 4);
        // Laplace-free sanity: det multiplicativity against a random companion.
        IntMatrix b = random_matrix(rng, 5, 5, -4, 4);
        REQUIRE(det(a * b) == det(a) * det(b));
    }
}

TEST_CASE("rank and kernels") {
    IntMatrix m = IntMatrix::from_rows({{1, 2, 3}, {2, 4, 6}});
    CHECK(rank_rational(m) == 1);
    RatMatrix k = kernel_basis_rational(m);
    CHECK(k.cols() == 2);
    for (int b = 0; b < k.cols(); ++b) {
        RatVector v(3);
        for (int i = 0; i < 3; ++i) v[i] = k.at(i, b);
        RatVector mv = m.apply(v);
        for (auto& e : mv) CHECK(e == 0);
    }
    IntMatrix kl = kernel_lattice(m);
    CHECK(kl.cols() == 2);
    CHECK((m * kl).is_zero());
    // Saturation: SNF of the kernel basis has unit invariant factors.
    SnfResult s = smith_normal_form(kl);
    for (auto& f : s.invariant_factors) CHECK(f == 1);
}

TEST_CASE("solve_in_column_lattice") {
    IntMatrix m = IntMatrix::from_rows({{2, 0}, {0, 3}});
    auto x = solve_in_column_lattice(m, {4, 9});
    REQUIRE(x.has_value());
    CHECK(m.apply(*x) == std::vector<Int>{4, 9});
    CHECK_FALSE(solve_in_column_lattice(m, {1, 3}).has_value());
    CHECK_FALSE(solve_in_column_lattice(m, {4, 2}).has_value());

    std::mt19937 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        int rows = 1 + int(rng() % 5), cols = 1 + int(rng() % 5);
        IntMatrix a = random_matrix(rng, rows, cols, -5, 5);
        IntMatrix xs = random_matrix(rng, cols, 1, -7, 7);
        std::vector<Int> want(cols);
        for (int i = 0; i < cols; ++i) want[i] = xs.at(i, 0);
        std::vector<Int> b = a.apply(want);
        auto got = solve_in_column_lattice(a, b);
        REQUIRE(got.has_value());
        REQUIRE(a.apply(*got) == b);
    }
}

TEST_CASE("solve_rational") {
    RatMatrix a = RatMatrix::from_int(IntMatrix::from_rows({{1, 1}, {1, -1}}));
    auto x = solve_rational(a, {Rat(3), Rat(1)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == 2);
    CHECK((*x)[1] == 1);
    RatMatrix sing = RatMatrix::from_int(IntMatrix::from_rows({{1, 1}, {2, 2}}));
    CHECK_FALSE(solve_rational(sing, {Rat(0), Rat(1)}).has_value());
    CHECK(solve_rational(sing, {Rat(1), Rat(2)}).has_value());
}

TEST_CASE("polynomials") {
    IntPoly p = IntPoly::from_long({-1, 0, 1}); // t^2 - 1
    IntPoly q = IntPoly::from_long({-1, 1});    // t - 1
    CHECK(p.eval(3) == 8);
    auto [quo, rem] = poly_divmod(p, q);
    CHECK(quo == IntPoly::from_long({1, 1}));
    CHECK(rem.is_zero());
    CHECK((q * IntPoly::from_long({1, 1})) == p);
    CHECK(IntPoly::from_long({0, 0, 0}).is_zero());
    CHECK(p.str() == "t^2 - 1");
    CHECK_THROWS_AS(poly_divmod(p, IntPoly::from_long({1, 2})), Error);
}

TEST_CASE("char_poly and min_poly") {
    IntMatrix m = IntMatrix::from_rows({{0, -1}, {1, 0}}); // rotation by pi/2
    CHECK(char_poly(m) == IntPoly::from_long({1, 0, 1}));
    CHECK(min_poly(m) == IntPoly::from_long({1, 0, 1}));

    IntMatrix id3 = IntMatrix::identity(3);
    CHECK(char_poly(id3) == IntPoly::from_long({-1, 3, -3, 1}));
    CHECK(min_poly(id3) == IntPoly::from_long({-1, 1}));

    // Nontrivial Jordan-type example: min poly strictly divides char poly.
    IntMatrix blk = IntMatrix::from_rows({{1, 0, 0}, {0, 0, -1}, {0, 1, 0}});
    CHECK(min_poly(blk) == IntPoly::from_long({-1, 1}) * IntPoly::from_long({1, 0, 1}));

    std::mt19937 rng(1234);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix a = random_matrix(rng, 4, 4, -3, 3);
        IntPoly cp = char_poly(a);
        REQUIRE(cp.is_monic());
        REQUIRE(cp.degree() == 4);
        REQUIRE(poly_eval_matrix(cp, a).is_zero()); // Cayley-Hamilton
        IntPoly mp = min_poly(a);
        REQUIRE(mp.is_monic());
        REQUIRE(poly_eval_matrix(mp, a).is_zero());
        auto [q2, r2] = poly_divmod(cp, mp);
        REQUIRE(r2.is_zero()); // min divides char
        // det and trace match the characteristic coefficients.
        Int tr = 0;
        for (int i = 0; i < 4; ++i) tr += a.at(i, i);
        REQUIRE(cp.c[3] == -tr);
        REQUIRE(cp.c[0] == det(a));
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == IntPoly::from_long({-1, 1}));
    CHECK(cyclotomic(2) == IntPoly::from_long({1, 1}));
    CHECK(cyclotomic(3) == IntPoly::from_long({1, 1, 1}));
    CHECK(cyclotomic(4) == IntPoly::from_long({1, 0, 1}));
    CHECK(cyclotomic(6) == IntPoly::from_long({1, -1, 1}));
    CHECK(cyclotomic(12) == IntPoly::from_long({1, 0, -1, 0, 1}));
    // Degrees are Euler phi.
    CHECK(cyclotomic(30).degree() == 8);

    using MS = std::vector<std::pair<int, int>>;
    CHECK(cyclotomic_multiset(IntPoly::from_long({-1, 1})) == MS{{1, 1}});
    CHECK(cyclotomic_multiset(cyclotomic(3) * cyclotomic(3) * cyclotomic(1)) == MS{{1, 1}, {3, 2}});
    // (t^6 - 1) = Phi_1 Phi_2 Phi_3 Phi_6
    CHECK(cyclotomic_multiset(IntPoly::from_long({-1, 0, 0, 0, 0, 0, 1})) ==
          MS{{1, 1}, {2, 1}, {3, 1}, {6, 1}});
    CHECK(cyclotomic_multiset(IntPoly::one()) == MS{});
    CHECK_THROWS_AS(cyclotomic_multiset(IntPoly::from_long({-2, 1})), NotRootOfUnitySpectrum);
    CHECK_THROWS_AS(cyclotomic_multiset(IntPoly::from_long({1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
                                                            1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1,
                                                            1, 1, 1, 1, 1, 1, 1})),
                    NotRootOfUnitySpectrum); // Phi_31 has conductor out of range
}

TEST_CASE("exterior traces") {
    IntMatrix m = IntMatrix::from_rows({{1, 2}, {3, 4}});
    CHECK(exterior_trace(m, 0) == 1);
    CHECK(exterior_trace(m, 1) == 5);
    CHECK(exterior_trace(m, 2) == -2);
    CHECK_THROWS_AS(exterior_trace(m, 3), Error);

    // e_k equals +-(char poly coefficient): det(tI - M) = sum (-1)^k e_k t^(n-k).
    std::mt19937 rng(555);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + int(rng() % 4);
        IntMatrix a = random_matrix(rng, n, n, -3, 3);
        IntPoly cp = char_poly(a);
        for (int k = 0; k <= n; ++k) {
            Int want = (k % 2 == 0) ? cp.c[n - k] : Int(-cp.c[n - k]);
            REQUIRE(exterior_trace(a, k) == want);
        }
    }
}

TEST_CASE("rational matrix inverse") {
    RatMatrix a = RatMatrix::from_int(IntMatrix::from_rows({{2, 1}, {1, 1}}));
    RatMatrix inv = a.inverse();
    CHECK((a * inv) == RatMatrix::identity(2));
    CHECK(inv.is_integral());
    CHECK_THROWS_AS(RatMatrix::from_int(IntMatrix::from_rows({{1, 1}, {1, 1}})).inverse(), Error);
}
