#include <doctest.h>

#include <random>
#include <stdexcept>

#include "fixtures.hpp"
#include "legcord/census.hpp"
#include "legcord/grid.hpp"

using namespace legcord;

TEST_CASE("grid validation") {
    CHECK_THROWS_AS(grid_validate(GridDiagram({1, 2}, {1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(grid_validate(GridDiagram({1, 1}, {2, 2})), std::invalid_argument);
    CHECK(grid_validate(GridDiagram({1, 2}, {2, 1})).size() == 1);
}

TEST_CASE("census grids are tb -1 rotation 0 knots") {
    for (const CensusEntry& e : load_census()) {
        CAPTURE(e.name);
        GridInvariants inv = grid_classical_invariants(e.grid);
        CHECK(inv.components == 1);
        CHECK(inv.tb == -1);
        CHECK(inv.r == 0);
        FrontInvariants f = front_invariants(grid_to_front(e.grid));
        CHECK(f.tb == -1);
        CHECK(f.r == 0);
    }
}

TEST_CASE("json round trip") {
    GridDiagram g = fixtures::census_grid("m13n3158");
    CHECK(grid_from_json(grid_to_json(g)) == g);
    CHECK_THROWS(grid_from_json("{\"size\": 2, \"x\": [1, 2]}"));
}

TEST_CASE("commutations and translations preserve tb and r") {
    std::mt19937 rng(2024);
    GridDiagram g = fixtures::census_grid("m9_46");
    GridInvariants base = grid_classical_invariants(g);
    int applied = 0;
    for (int step = 0; step < 400; ++step) {
        GridMove m;
        int kind = int(rng() % 4);
        m.kind = kind == 0 ? MoveKind::commute_cols
               : kind == 1 ? MoveKind::commute_rows
               : kind == 2 ? MoveKind::translate_cols
                           : MoveKind::translate_rows;
        m.a = int(rng() % g.size);
        if (!move_applicable(g, m)) {
            CHECK_THROWS_AS(apply_move(g, m), std::invalid_argument);
            continue;
        }
        g = apply_move(g, m);
        ++applied;
        GridInvariants inv = grid_classical_invariants(g);
        CHECK(inv.tb == base.tb);
        CHECK(inv.r == base.r);
    }
    CHECK(applied > 0);
}

TEST_CASE("stabilization shifts tb by the corner type") {
    GridDiagram g = fixtures::census_grid("m9_46");
    GridInvariants base = grid_classical_invariants(g);
    int tried = 0;
    for (int c = 1; c <= g.size; ++c) {
        for (Corner corner : {Corner::NW, Corner::NE, Corner::SW, Corner::SE}) {
            GridMove m{MoveKind::stabilize, c, g.xs[c - 1], corner};
            if (!move_applicable(g, m)) continue;
            ++tried;
            GridDiagram s = apply_move(g, m);
            CHECK(s.size == g.size + 1);
            GridInvariants inv = grid_classical_invariants(s);
            CHECK(std::abs(inv.tb - base.tb) <= 1);
            bool found = false;
            for (const GridMove& d : destabilizations(s))
                if (canonical_translate(apply_move(s, d)) == canonical_translate(g)) found = true;
            CHECK(found);
        }
    }
    CHECK(tried > 0);
}

TEST_CASE("canonical translation") {
    GridDiagram g = fixtures::census_grid("12n838");
    GridDiagram t = apply_move(g, GridMove{MoveKind::translate_cols, 3});
    t = apply_move(t, GridMove{MoveKind::translate_rows, 5});
    CHECK(canonical_translate(t) == canonical_translate(g));
}

TEST_CASE("simplification recognizes split unlinks") {
    GridDiagram unlink({1, 2, 3, 4}, {2, 1, 4, 3});
    CHECK(split_blocks(unlink).size() == 2);
    SimplificationReport r = grid_simplify(unlink, 1000);
    CHECK(r.outcome == SimplifyOutcome::split_unlink_of_unknots);
    CHECK(r.finals.size() == 2);
    CHECK(replay_simplification(unlink, r) == r.finals);

    GridDiagram u = front_to_grid(fixtures::front("unknot"));
    GridDiagram big = apply_move(u, GridMove{MoveKind::stabilize, 1, u.xs[0], Corner::SE});
    SimplificationReport s = grid_simplify(big, 1000);
    CHECK(s.outcome == SimplifyOutcome::split_unlink_of_unknots);
    CHECK(replay_simplification(big, s) == s.finals);

    SimplificationReport k = grid_simplify(front_to_grid(fixtures::front("trefoil_right")), 2000);
    CHECK(k.outcome != SimplifyOutcome::split_unlink_of_unknots);
}
