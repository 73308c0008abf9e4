#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "fixtures.hpp"
#include "legcord/census.hpp"
#include "legcord/rulings.hpp"

using namespace legcord;

TEST_CASE("census loads in table order with expectations") {
    std::vector<CensusEntry> census = load_census();
    REQUIRE(census.size() == 23);
    CHECK(census.front().name == "m9_46");
    CHECK(find_entry(census, "m12n768").expected.least_n == "2");
    CHECK(find_entry(census, "m9_46").expected.obstructed);
    CHECK_THROWS_AS(find_entry(census, "nonesuch"), std::invalid_argument);
    int obstructed = 0;
    for (const CensusEntry& e : census) obstructed += e.expected.obstructed;
    CHECK(obstructed == 11);
}

TEST_CASE("census files round trip bit for bit") {
    for (const CensusEntry& e : load_census()) {
        std::ifstream in(data_dir() + "/census/" + e.name + ".json");
        std::stringstream ss;
        ss << in.rdbuf();
        std::string text = ss.str();
        while (!text.empty() && (text.back() == '\n' || text.back() == ' ')) text.pop_back();
        CAPTURE(e.name);
        CHECK(grid_to_json(e.grid) == text);
    }
}

TEST_CASE("census grids are not their own mirror encodings") {
    for (const CensusEntry& e : load_census()) {
        GridDiagram m = e.grid;
        std::reverse(m.xs.begin(), m.xs.end());
        std::reverse(m.os.begin(), m.os.end());
        CAPTURE(e.name);
        CHECK_FALSE(canonical_translate(m) == canonical_translate(e.grid));
    }
}

TEST_CASE("pinch search rejects the wrong inputs") {
    CHECK_THROWS_AS(find_slice_pinch(fixtures::front("trefoil_right")), std::invalid_argument);
    CHECK_THROWS_AS(find_slice_pinch(ncopy(fixtures::front("unknot"), 2)), std::invalid_argument);
}

TEST_CASE("slice certificates replay") {
    FrontWord u = fixtures::front("unknot");
    PinchSearch su = find_slice_pinch(satellite(u, pattern_clasp(2)));
    REQUIRE(su.certificate);
    CHECK(replay_certificate(*su.certificate));

    PinchSearch s = find_slice_pinch(fixtures::census_grid("m9_46"));
    REQUIRE(s.certificate);
    const SliceCertificate& c = *s.certificate;
    std::string why;
    CHECK_MESSAGE(replay_certificate(c, &why), why);
    CHECK(c.components == std::vector<std::pair<int, int>>{{-1, 0}, {-1, 0}});
    CHECK(c.saddles == 1);
    CHECK(c.births == 1);

    SliceCertificate forged = c;
    forged.simplification.steps.clear();
    CHECK_FALSE(replay_certificate(forged));
}

TEST_CASE("cached pinch sites") {
    auto sites = load_pinch_fixtures();
    CHECK(sites.size() == 23);
    std::vector<CensusEntry> census = load_census();
    for (auto& [name, site] : sites) {
        if (name != "m9_46" && name != "12n838") continue;
        PinchSearch s = find_slice_pinch(find_entry(census, name).grid, kDefaultPinchBudget, site);
        REQUIRE(s.certificate);
        CHECK(s.sites_tried == 1);
    }
}

TEST_CASE("the m14n15581 family") {
    FrontWord base = grid_to_front(fixtures::census_grid("m14n15581"));
    CHECK(family_15581(1) == base);
    CHECK_THROWS_AS(family_15581(0), std::invalid_argument);
    LaurentPoly previous;
    for (int n = 1; n <= 4; ++n) {
        CAPTURE(n);
        FrontWord f = family_15581(n);
        FrontInvariants inv = front_invariants(f);
        CHECK(inv.tb == -1);
        CHECK(inv.r == 0);
        CHECK(inv.components == 1);
        CHECK(f.size() == base.size() + 4 * size_t(n - 1));
        CHECK(exists_two_rulings(f, 1));
        LaurentPoly r1 = ruling_polynomial(f, 1).polynomial;
        CHECK(r1 != previous);
        previous = r1;
    }
    CHECK(ruling_polynomial(family_15581(1), 1).polynomial.to_string() == "z^4 + 2z^2 + 2");
    CHECK(ruling_polynomial(family_15581(2), 1).polynomial.to_string() == "z^8 + 7z^6 + 13z^4 + 8z^2 + 3");
}

TEST_CASE("single-entry verification") {
    CensusOptions opt;
    CensusResult r = verify_entry(find_entry(load_census(), "m13n3158"), opt);
    CHECK(r.diffs.empty());
    CHECK(r.r1.to_string() == "z^4 + 3z^2 + 3");
    CHECK(r.obstruction.verdict == Verdict::obstructed);
    CHECK(r.certificate);
}
