#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "legcord/census.hpp"
#include "legcord/obstruct.hpp"
#include "legcord/planar.hpp"

using namespace legcord;

TEST_CASE("planar diagrams from every input format agree") {
    PlanarDiagram pd = planar_from_pd(fixtures::kFigureEightPd);
    PlanarDiagram fr = front_to_planar(fixtures::front("figure_eight"));
    PlanarDiagram gr = grid_to_planar(front_to_grid(fixtures::front("figure_eight")));
    for (const PlanarDiagram* d : {&pd, &fr, &gr}) {
        CHECK_NOTHROW(d->validate());
        CHECK(d->components() == 1);
        CHECK(alexander_polynomial(*d).to_string('t') == "-t + 3 - t^-1");
        CHECK(signature(*d) == 0);
    }
    CHECK(pd.is_alternating());
    CHECK(pd.is_reduced());
    CHECK(pd.writhe() == 0);
    CHECK_THROWS_AS(planar_from_pd("X[1,2,3,4]"), std::invalid_argument);
}

TEST_CASE("max tb of an alternating diagram") {
    PlanarDiagram pd = planar_from_pd(fixtures::kFigureEightPd);
    REQUIRE(pd.is_alternating());
    REQUIRE(pd.is_reduced());
    int max_tb = signature(pd) - pd.negative_crossings() - 1;
    CHECK(max_tb == -3);
    CHECK(front_invariants(fixtures::front("figure_eight")).tb == max_tb);
    PlanarDiagram rh = front_to_planar(fixtures::front("trefoil_right"));
    CHECK(signature(rh) - rh.negative_crossings() - 1 == 1);
}

TEST_CASE("links") {
    PlanarDiagram two = front_to_planar(ncopy(fixtures::front("unknot"), 2));
    CHECK(two.components() == 2);
    CHECK(linking_number(two) == -1);
    CHECK(component_diagrams(two).size() == 2);
    PlanarDiagram twisted = front_to_planar(satellite(fixtures::front("unknot"), pattern_twist(2)));
    CHECK(linking_number(twisted) == 0);
    CHECK_THROWS_AS(alexander_polynomial(two), std::invalid_argument);
}

TEST_CASE("trefoil signatures") {
    PlanarDiagram rh = front_to_planar(fixtures::front("trefoil_right"));
    PlanarDiagram lh = front_to_planar(fixtures::front("trefoil_left"));
    CHECK(signature(rh) == 2);
    CHECK(signature(lh) == -2);
    CHECK(signature(mirror(rh)) == -2);
    CHECK(determinant(rh) == 3);
    CHECK(goeritz_determinant(rh) == 3);
}

TEST_CASE("figure-eight fails the determinant test") {
    PlanarDiagram d = front_to_planar(fixtures::front("figure_eight"));
    CHECK(determinant(d) == 5);
    CHECK(goeritz_determinant(d) == 5);
    SliceFilterReport r = slice_filter(d, fixtures::front("figure_eight"));
    CHECK_FALSE(r.determinant_square);
    CHECK_FALSE(r.passes());
}

TEST_CASE("fox-milnor") {
    CHECK(fox_milnor_test(LaurentPoly(1)).holds);
    CHECK_FALSE(fox_milnor_test(LaurentPoly::parse("t - 1 + t^-1", 't')).holds);
    FoxMilnorResult fm = fox_milnor_test(LaurentPoly::parse("2t - 5 + 2t^-1", 't'));
    CHECK(fm.holds);
    CHECK(fm.f.degree() == 1);
    CHECK(is_perfect_square(9));
    CHECK(is_perfect_square(1));
    CHECK_FALSE(is_perfect_square(5));
}

TEST_CASE("census entries pass every slice filter") {
    for (const CensusEntry& e : load_census()) {
        CAPTURE(e.name);
        PlanarDiagram d = grid_to_planar(e.grid);
        FrontWord f = grid_to_front(e.grid);
        SliceFilterReport r = slice_filter(d, f);
        CHECK(r.determinant_square);
        CHECK(r.signature_zero);
        CHECK(r.fox_milnor.holds);
        CHECK(r.tb_is_minus_one);
        CHECK(r.determinant == goeritz_determinant(d));
        CHECK(r.determinant == determinant(front_to_planar(f)));
    }
}

TEST_CASE("verdicts on small fronts") {
    ObstructionReport u = obstruct_concordance_to_unknot(fixtures::front("unknot"), {.max_cable = 2, .assert_slice = true});
    CHECK(u.verdict == Verdict::not_obstructed);

    FrontWord m946 = fixtures::census_front("m9_46");
    ObstructionReport r = obstruct_concordance_to_unknot(m946);
    CHECK(r.verdict == Verdict::obstructed);
    CHECK(r.theorem == ObstructionTheorem::two_rulings);
    CHECK(check_witness(m946, r));

    FrontWord t = fixtures::front("trefoil_right");
    ObstructionReport rt = obstruct_concordance_to_unknot(t);
    CHECK(rt.verdict == Verdict::obstructed);
    CHECK(check_witness(t, rt));

    ObstructionReport m12 = obstruct_concordance_to_unknot(
        fixtures::census_front("m12n768"), {.max_cable = 2, .assert_slice = true, .a2_stage = false});
    CHECK(m12.theorem == ObstructionTheorem::cable_test);
    CHECK(m12.cable_n == 2);
    REQUIRE(m12.polynomial);
    CHECK(m12.polynomial->to_string() == "z^12 + 12z^10 + 49z^8 + 78z^6 + 41z^4 + 4z^2 + 1");
    CHECK(check_witness(fixtures::census_front("m12n768"), m12));
}

TEST_CASE("forged witnesses are rejected") {
    FrontWord m946 = fixtures::census_front("m9_46");
    ObstructionReport r = obstruct_concordance_to_unknot(m946);
    REQUIRE(r.rulings.size() == 2);
    r.rulings[1] = r.rulings[0];
    CHECK_FALSE(check_witness(m946, r));
}
