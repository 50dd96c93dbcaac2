#include "tuckvol/linalg.hpp"
#include "tuckvol/poly.hpp"
#include "tuckvol/rational.hpp"
#include "tuckvol/rng.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <set>

using namespace tuckvol;

TEST_CASE("rational construction and canonical form", "[rational]") {
    CHECK(make_rational(1, -3) == make_rational(-1, 3));
    CHECK(make_rational(2, 4) == make_rational(1, 2));
    CHECK(make_rational(0, 7) == 0);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
    CHECK(sign_of(make_rational(-3, 5)) == -1);
    CHECK(sign_of(Rational(0)) == 0);
    CHECK(abs_of(make_rational(-3, 5)) == make_rational(3, 5));
}

TEST_CASE("rational string round trip", "[rational]") {
    for (const char* text : {"0", "1", "-1", "1/2", "-22/7", "355/113"}) {
        const Rational r = parse_rational(text);
        CHECK(rational_str(r) == text);
        CHECK(parse_rational(rational_str(r)) == r);
    }
    CHECK(parse_rational("4/2") == 2);  // canonicalized on parse
    CHECK(rational_str(parse_rational("4/2")) == "2");
}

TEST_CASE("rational parser rejects noise", "[rational]") {
    for (const char* text : {"", " 1", "1 ", "1.5", "1/0", "a/b", "1/-2", "--3", "+3", "1/2/3", "/2", "3/"}) {
        INFO(text);
        CHECK_THROWS_AS(parse_rational(text), std::invalid_argument);
    }
}

TEST_CASE("determinant small cases", "[linalg]") {
    CHECK(determinant({{Rational(5)}}) == 5);
    // frozen oracle: |1 2; 3 4| = 1*4 - 2*3 = -2
    CHECK(determinant({{Rational(1), Rational(2)}, {Rational(3), Rational(4)}}) == -2);
    CHECK(determinant({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 0);
    // frozen oracle: 3x3 with one rational row, expanded by hand = 1/2*(5*9-6*8) - 2*(4*9-6*7) + 3*(4*8-5*7)
    const Matrix m3 = {{make_rational(1, 2), Rational(2), Rational(3)},
                       {Rational(4), Rational(5), Rational(6)},
                       {Rational(7), Rational(8), Rational(9)}};
    CHECK(determinant(m3) == make_rational(-3, 2) + 12 - 9);
}

TEST_CASE("determinant 4x4 goes through fraction-free elimination", "[linalg]") {
    Matrix diag(4, std::vector<Rational>(4, Rational(0)));
    for (int i = 0; i < 4; ++i) diag[i][i] = make_rational(1, i + 2);
    CHECK(determinant(diag) == make_rational(1, 2 * 3 * 4 * 5));

    // row swap flips the sign of the identity
    Matrix swapped(4, std::vector<Rational>(4, Rational(0)));
    swapped[0][1] = swapped[1][0] = swapped[2][2] = swapped[3][3] = 1;
    CHECK(determinant(swapped) == -1);

    // zero pivot column forces pivoting rather than a crash
    Matrix pivoty = {{Rational(0), Rational(1), Rational(0), Rational(0)},
                     {Rational(1), Rational(0), Rational(0), Rational(0)},
                     {Rational(0), Rational(0), Rational(0), Rational(2)},
                     {Rational(0), Rational(0), Rational(3), Rational(0)}};
    CHECK(determinant(pivoty) == 6);

    Matrix singular(4, std::vector<Rational>(4, Rational(1)));
    CHECK(determinant(singular) == 0);
}

TEST_CASE("linear solve", "[linalg]") {
    // x + y = 3, x - y = 1  =>  x = 2, y = 1
    const Matrix a = {{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
    const auto x = solve_linear(a, {Rational(3), Rational(1)});
    REQUIRE(x.size() == 2);
    CHECK(x[0] == 2);
    CHECK(x[1] == 1);
    CHECK_THROWS_AS(solve_linear({{Rational(1), Rational(1)}, {Rational(2), Rational(2)}},
                                 {Rational(1), Rational(1)}),
                    std::invalid_argument);
}

TEST_CASE("matrix rank", "[linalg]") {
    CHECK(matrix_rank({{Rational(1), Rational(2)}, {Rational(2), Rational(4)}}) == 1);
    CHECK(matrix_rank({{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}) == 2);
    CHECK(matrix_rank({{Rational(0), Rational(0)}}) == 0);
}

TEST_CASE("poly normalization and arithmetic", "[poly]") {
    CHECK(Poly({Rational(1), Rational(0), Rational(0)}) == Poly::constant(1));
    CHECK(Poly({Rational(0)}).is_zero());
    CHECK(Poly::zero().degree() == -1);

    const Poly p({Rational(1), Rational(2)});        // 1 + 2t
    const Poly q({Rational(0), Rational(-2), Rational(3)});  // -2t + 3t^2
    CHECK((p + q) == Poly({Rational(1), Rational(0), Rational(3)}));
    CHECK((p - p).is_zero());
    CHECK((p * make_rational(1, 2)) == Poly({make_rational(1, 2), Rational(1)}));
    CHECK(p.eval(make_rational(1, 2)) == 2);
    CHECK(poly_eval(q, Rational(2)) == 8);
}

TEST_CASE("poly interpolation", "[poly]") {
    // frozen oracle: points (0,0), (1,1), (2,4) determine t^2
    const Poly sq = poly_interpolate({{Rational(0), Rational(0)},
                                      {Rational(1), Rational(1)},
                                      {Rational(2), Rational(4)}});
    CHECK(sq == Poly({Rational(0), Rational(0), Rational(1)}));

    // constant data stays degree 0 after normalization
    const Poly c = poly_interpolate({{Rational(0), Rational(7)},
                                     {Rational(1), Rational(7)},
                                     {Rational(2), Rational(7)}});
    CHECK(c == Poly::constant(7));

    // rational nodes: p(t) = 1/2 - t through (0, 1/2), (1/2, 0)
    const Poly line = poly_interpolate({{Rational(0), make_rational(1, 2)},
                                        {make_rational(1, 2), Rational(0)}});
    CHECK(line == Poly({make_rational(1, 2), Rational(-1)}));

    CHECK_THROWS_AS(poly_interpolate({{Rational(1), Rational(0)}, {Rational(1), Rational(2)}}),
                    std::invalid_argument);
}

TEST_CASE("poly printing", "[poly]") {
    CHECK(Poly::zero().str() == "0");
    CHECK(Poly::constant(make_rational(-1, 2)).str() == "-1/2");
    CHECK(Poly({make_rational(1, 2), Rational(-1), make_rational(1, 2)}).str() ==
          "1/2 - t + 1/2 t^2");
}

TEST_CASE("rng determinism and bounds", "[rng]") {
    Rng a(12345), b(12345);
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    Rng c(7);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        const std::uint64_t v = c.below(13);
        CHECK(v < 13);
        seen.insert(v);
    }
    CHECK(seen.size() == 13);  // all residues hit

    Rng d(99);
    for (int i = 0; i < 500; ++i) {
        const int lab = d.tucker_label(3);
        CHECK(lab != 0);
        CHECK(std::abs(lab) >= 1);
        CHECK(std::abs(lab) <= 3);
    }
}

TEST_CASE("seed mixing separates streams", "[rng]") {
    CHECK(mix_seed(1, 2) != mix_seed(2, 1));
    CHECK(mix_seed(0, 0) != mix_seed(0, 1));
    Rng a(mix_seed(3, 5)), b(mix_seed(3, 6));
    CHECK(a.next_u64() != b.next_u64());
}
