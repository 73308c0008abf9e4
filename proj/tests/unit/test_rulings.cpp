#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "legcord/census.hpp"
#include "legcord/rulings.hpp"

using namespace legcord;

namespace {

LaurentPoly brute_force(const FrontWord& f, int d) {
    std::vector<int> crossings;
    for (size_t k = 0; k < f.size(); ++k)
        if (f.events[k].kind == 'X') crossings.push_back(int(k));
    LaurentPoly total;
    for (uint32_t mask = 0; mask < (1u << crossings.size()); ++mask) {
        NormalRuling r;
        r.d = d;
        for (size_t i = 0; i < crossings.size(); ++i)
            if (mask >> i & 1) r.switches.push_back(crossings[i]);
        if (validate_ruling(f, r)) total += LaurentPoly::monomial(ruling_exponent(f, r));
    }
    return total;
}

std::vector<std::pair<std::string, FrontWord>> small_fronts() {
    std::vector<std::pair<std::string, FrontWord>> out;
    for (const char* name : fixtures::kFronts) out.emplace_back(name, fixtures::front(name));
    FrontWord u = fixtures::front("unknot");
    out.emplace_back("S(U, tw2)", satellite(u, pattern_twist(2)));
    out.emplace_back("S(U, tw3)", satellite(u, pattern_twist(3)));
    out.emplace_back("S(U, delta2)", satellite(u, pattern_delta2()));
    out.emplace_back("S(U, P2)", satellite(u, pattern_clasp(2)));
    out.emplace_back("S(U, W)", satellite(u, pattern_whitehead()));
    for (const CensusEntry& e : load_census()) {
        FrontWord f = grid_to_front(e.grid);
        if (front_invariants(f).crossings <= 12) out.emplace_back(e.name, f);
    }
    for (auto& [name, f] : out) REQUIRE(front_invariants(f).crossings <= 12);
    return out;
}

}  // namespace

TEST_CASE("the ruling DP matches brute-force enumeration") {
    int checked = 0;
    for (auto& [name, f] : small_fronts()) {
        for (int d : {0, 1, 2}) {
            try {
                check_grading(f, d);
            } catch (const std::invalid_argument&) {
                continue;
            }
            CAPTURE(name);
            CAPTURE(d);
            LaurentPoly dp = ruling_polynomial(f, d).polynomial;
            CHECK(dp == brute_force(f, d));
            std::vector<NormalRuling> all = enumerate_rulings(f, d);
            int64_t count = 0;
            for (auto& [e, c] : dp.terms()) count += c;
            CHECK(int64_t(all.size()) == count);
            for (const NormalRuling& r : all) CHECK(validate_ruling(f, r));
            ++checked;
        }
    }
    CHECK(checked >= 20);
}

TEST_CASE("ruling polynomials of small knots") {
    CHECK(ruling_polynomial(fixtures::front("unknot"), 1).polynomial.to_string() == "1");
    CHECK(ruling_polynomial(fixtures::front("trefoil_right"), 1).polynomial.to_string() == "z^2 + 2");
    CHECK(ruling_polynomial(fixtures::census_front("m9_46"), 1).polynomial.to_string() == "2");
    CHECK(ruling_polynomial(fixtures::census_front("m13n3158"), 1).polynomial.to_string() == "z^4 + 3z^2 + 3");
}

TEST_CASE("state limits are enforced") {
    FrontWord f = satellite(fixtures::census_front("m9_46"), pattern_twist(2));
    CHECK_THROWS_AS(ruling_polynomial(f, 1, 2), StateLimitExceeded);
}

TEST_CASE("grading checks") {
    FrontWord two = satellite(fixtures::front("unknot"), pattern_twist(2));
    CHECK_NOTHROW(check_grading(two, 1));
    CHECK_NOTHROW(check_grading(fixtures::front("trefoil_right"), 0));
}

TEST_CASE("twist satellites of the unknot") {
    FrontWord u = fixtures::front("unknot");
    for (int n = 1; n <= 4; ++n)
        for (int d : {0, 1, 2}) {
            CAPTURE(n);
            CAPTURE(d);
            CHECK(ruling_polynomial(satellite(u, pattern_twist(n)), d).polynomial == LaurentPoly::monomial(1 - n));
        }
}

TEST_CASE("clasp and twist satellites differ by z^(n-1)") {
    for (const char* name : {"unknot", "m9_46"}) {
        FrontWord f = std::string(name) == "unknot" ? fixtures::front(name) : fixtures::census_front(name);
        for (int n : {2, 3})
            for (int d : {0, 1, 2}) {
                CAPTURE(name);
                CAPTURE(n);
                CAPTURE(d);
                LaurentPoly p = ruling_polynomial(satellite(f, pattern_clasp(n)), d).polynomial;
                LaurentPoly t = ruling_polynomial(satellite(f, pattern_twist(n)), d).polynomial;
                CHECK(p == t.shifted(n - 1));
            }
    }
}

TEST_CASE("two distinct rulings give a ruling of the delta2 satellite") {
    for (FrontWord f : {fixtures::census_front("m9_46"), family_15581(3)}) {
        std::vector<NormalRuling> w;
        REQUIRE(exists_two_rulings(f, 1, &w));
        REQUIRE(w.size() == 2);
        CHECK(w[0] != w[1]);
        Delta2Ruling d = construct_delta2_ruling(f, w[0], w[1]);
        std::string why;
        CHECK_MESSAGE(validate_ruling(d.front, d.ruling, &why), why);
        CHECK(front_invariants(d.front).components == 1);
    }
    FrontWord t = fixtures::front("trefoil_right");
    std::vector<NormalRuling> all = enumerate_rulings(t, 1);
    CHECK_THROWS_AS(construct_delta2_ruling(t, all[0], all[0]), std::invalid_argument);
}

TEST_CASE("n-copies of rulings") {
    for (FrontWord f : {fixtures::front("unknot"), fixtures::census_front("m9_46"), fixtures::front("trefoil_right")}) {
        for (const NormalRuling& r : enumerate_rulings(f, 1)) {
            for (int n : {2, 3}) {
                NormalRuling c = ncopy_ruling(f, r, n);
                std::string why;
                CHECK_MESSAGE(validate_ruling(satellite(f, pattern_twist(n)), c, &why), why);
            }
        }
    }
}

TEST_CASE("sweep replay rejects broken switch sets") {
    FrontWord t = fixtures::front("trefoil_right");
    NormalRuling bad;
    bad.switches = {1};
    std::string why;
    CHECK_FALSE(validate_ruling(t, bad, &why));
    CHECK_FALSE(why.empty());
}
