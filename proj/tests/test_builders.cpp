#include "tuckvol/builders.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace tuckvol;

TEST_CASE("analytic volume formulas", "[builders]") {
    CHECK(cross_polytope_volume(1) == 2);
    CHECK(cross_polytope_volume(2) == 2);
    CHECK(cross_polytope_volume(3) == make_rational(4, 3));
    CHECK(enclosure_volume(1, 2) == 4);
    CHECK(enclosure_volume(2, 2) == 8);
    CHECK(enclosure_volume(3, 2) == make_rational(32, 3));
    CHECK(standard_simplex_volume(3) == make_rational(1, 6));
    CHECK(facet_signatures(3).size() == 8);
}

TEST_CASE("cross-polytope cone", "[builders]") {
    // frozen counts: 2d boundary vertices + centre, 2^d cells, volume 2^d/d!
    struct Row { std::size_t d, nv, nc; Rational vol; };
    const Row rows[] = {{1, 3, 2, Rational(2)},
                        {2, 5, 4, Rational(2)},
                        {3, 7, 8, make_rational(4, 3)}};
    for (const auto& row : rows) {
        const Triangulation t = cross_polytope_cone(row.d);
        INFO("d = " << row.d);
        CHECK(t.vertices.size() == row.nv);
        CHECK(t.simplices.size() == row.nc);
        CHECK(t.core_count == row.nc);
        REQUIRE(t.star_center.has_value());
        CHECK(*t.star_center == VertexId(2 * row.d));
        CHECK(is_zero_point(t.coords(*t.star_center)));
        CHECK_FALSE(t.vertex(*t.star_center).on_boundary);
        CHECK(validate_triangulation(t, row.vol).ok());
        for (const auto& s : t.simplices) CHECK(signed_volume(s, t) > 0);
    }
    // unit vectors land on ids 0..d-1, negatives on d..2d-1
    const Triangulation t2 = cross_polytope_cone(2);
    CHECK(t2.coords(0) == Point{Rational(1), Rational(0)});
    CHECK(t2.coords(3) == Point{Rational(0), Rational(-1)});
}

TEST_CASE("star rebuilt from a boundary complex", "[builders]") {
    const Triangulation b = boundary_complex(cross_polytope_cone(2));
    const Triangulation star = star_from_boundary(b);
    CHECK(star.vertices.size() == 5);
    CHECK(star.simplices.size() == 4);
    REQUIRE(star.star_center.has_value());
    CHECK(*star.star_center == 4);
    CHECK(validate_triangulation(star, Rational(2)).ok());

    // an explicit centre id wins, and a colliding one is rejected
    const Triangulation star9 = star_from_boundary(b, 9);
    CHECK(*star9.star_center == 9);
    CHECK(validate_triangulation(star9, Rational(2)).ok());
    CHECK_THROWS_AS(star_from_boundary(b, 2), std::invalid_argument);
}

TEST_CASE("shell prisms between P and 2P", "[builders]") {
    // frozen volumes: 2^d(2^d - 1)/d! -> d=2: 8-2=6, d=3: 32/3-4/3=28/3
    const Triangulation b2 = boundary_complex(cross_polytope_cone(2));
    const Triangulation shell2 = shell_prisms(b2);
    CHECK(shell2.simplices.size() == 8);  // 4 edges x 2 triangles per prism
    CHECK(validate_triangulation(shell2, Rational(6)).ok());
    CHECK(shell2.core_count == 0);

    const Triangulation b3 = boundary_complex(cross_polytope_cone(3));
    const Triangulation shell3 = shell_prisms(b3);
    CHECK(shell3.simplices.size() == 24);  // 8 facets x 3 tets per prism
    CHECK(validate_triangulation(shell3, make_rational(28, 3)).ok());

    CHECK_THROWS_AS(shell_prisms(b2, Rational(1)), std::invalid_argument);
}

TEST_CASE("enclosure assembly C = 2P", "[builders]") {
    const Triangulation t = cross_polytope_cone(2);
    const Triangulation c = assemble_enclosure(t);
    CHECK(c.simplices.size() == 12);  // 4 core + 8 shell
    CHECK(c.core_count == 4);
    CHECK(validate_triangulation(c, Rational(8)).ok());
    REQUIRE(c.star_center.has_value());
    CHECK(*c.star_center == 4);
    // the core prefix is exactly the original complex, positively oriented
    Rational core_vol = 0;
    for (std::size_t i = 0; i < c.core_count; ++i) core_vol += signed_volume(c.simplices[i], c);
    CHECK(core_vol == 2);
    // inner vertices become interior, scaled copies sit on the boundary
    CHECK_FALSE(c.vertex(0).on_boundary);
    for (const auto& v : c.vertices)
        if (l1_norm(v.coords) == 2) CHECK(v.on_boundary);

    const Triangulation c3 = assemble_enclosure(cross_polytope_cone(3));
    CHECK(validate_triangulation(c3, make_rational(32, 3)).ok());
    CHECK(c3.core_count == 8);
}

TEST_CASE("square enclosure for the planar case", "[builders]") {
    const Triangulation t = cross_polytope_cone(2);
    const Triangulation sq = square_enclosure_2d(t);
    CHECK(sq.core_count == 4);
    CHECK(validate_triangulation(sq, Rational(16)).ok());
    Rational core_vol = 0;
    for (std::size_t i = 0; i < sq.core_count; ++i) core_vol += signed_volume(sq.simplices[i], sq);
    CHECK(core_vol == 2);
    // only the square frame is boundary now
    for (const auto& v : sq.vertices) {
        const bool on_frame = (abs_of(v.coords[0]) == 2 || abs_of(v.coords[1]) == 2);
        CHECK(v.on_boundary == on_frame);
    }
    CHECK_THROWS_AS(square_enclosure_2d(cross_polytope_cone(3)), std::invalid_argument);
}

TEST_CASE("barycentric refinement", "[refine]") {
    RefinementSpec spec;
    spec.scheme = RefinementSpec::Scheme::barycentric;
    spec.rounds = 1;

    const Triangulation r2 = refine(cross_polytope_cone(2), spec);
    CHECK(r2.simplices.size() == 4 * 6);  // each triangle splits into 3! = 6
    CHECK(validate_triangulation(r2, Rational(2)).ok());
    CHECK(r2.star_center == cross_polytope_cone(2).star_center);

    const Triangulation r3 = refine(cross_polytope_cone(3), spec);
    CHECK(r3.simplices.size() == 8 * 24);  // 4! children per tet
    CHECK(validate_triangulation(r3, make_rational(4, 3)).ok());

    spec.rounds = 2;
    CHECK(validate_triangulation(refine(cross_polytope_cone(2), spec), Rational(2)).ok());
}

TEST_CASE("edge-midpoint refinement", "[refine]") {
    RefinementSpec spec;
    spec.scheme = RefinementSpec::Scheme::edge_midpoint;
    spec.rounds = 1;

    const Triangulation r2 = refine(cross_polytope_cone(2), spec);
    CHECK(r2.simplices.size() == 4 * 4);
    CHECK(validate_triangulation(r2, Rational(2)).ok());

    const Triangulation r3 = refine(cross_polytope_cone(3), spec);
    CHECK(r3.simplices.size() == 8 * 8);
    CHECK(validate_triangulation(r3, make_rational(4, 3)).ok());

    const Triangulation b2 = boundary_complex(cross_polytope_cone(2));
    const Triangulation rb = refine(b2, spec);
    CHECK(rb.simplices.size() == 8);  // each boundary edge splits in two
    CHECK(check_antipodal_symmetry(rb));

    Triangulation four = cross_polytope_cone(4);
    CHECK_THROWS_AS(refine(four, spec), std::invalid_argument);
}

TEST_CASE("refinement keeps the boundary antipodally symmetric", "[refine]") {
    for (std::size_t d : {1u, 2u, 3u}) {
        for (const auto scheme :
             {RefinementSpec::Scheme::barycentric, RefinementSpec::Scheme::edge_midpoint}) {
            RefinementSpec spec;
            spec.scheme = scheme;
            spec.rounds = 1;
            const Triangulation r = refine(cross_polytope_cone(d), spec);
            INFO("d = " << d << ", scheme = " << scheme_to_string(scheme));
            CHECK(check_antipodal_symmetry(boundary_complex(r)));
        }
    }
}

TEST_CASE("standard simplex builder", "[builders]") {
    const Triangulation s2 = standard_simplex(2);
    CHECK(s2.vertices.size() == 3);
    CHECK(s2.simplices.size() == 1);
    CHECK(validate_triangulation(s2, make_rational(1, 2)).ok());

    const Triangulation s3r1 = standard_simplex(3, 1);
    CHECK(s3r1.simplices.size() == 24);
    CHECK(validate_triangulation(s3r1, make_rational(1, 6)).ok());

    const auto frame = standard_simplex_frame(2);
    REQUIRE(frame.size() == 3);
    CHECK(is_zero_point(frame[0]));
    CHECK(frame[1] == Point{Rational(1), Rational(0)});
    CHECK(frame[2] == Point{Rational(0), Rational(1)});
    CHECK_THROWS_AS(standard_simplex_frame(0), std::invalid_argument);
    CHECK_THROWS_AS(standard_simplex(0), std::invalid_argument);
}

TEST_CASE("scheme names round trip", "[refine]") {
    CHECK(scheme_from_string("barycentric") == RefinementSpec::Scheme::barycentric);
    CHECK(scheme_from_string("edge-midpoint") == RefinementSpec::Scheme::edge_midpoint);
    CHECK_THROWS_AS(scheme_from_string("diagonal"), std::invalid_argument);
    CHECK(std::string(scheme_to_string(RefinementSpec::Scheme::barycentric)) == "barycentric");
    CHECK(std::string(scheme_to_string(RefinementSpec::Scheme::edge_midpoint)) == "edge-midpoint");
}
