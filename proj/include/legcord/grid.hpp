#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "legcord/front.hpp"

namespace legcord {

// n x n grid; xs[c], os[c] are the 1-based rows of the X and O markers in column c + 1.
struct GridDiagram {
    int size = 0;
    std::vector<int> xs, os;

    GridDiagram() = default;
    GridDiagram(std::vector<int> x, std::vector<int> o);

    friend bool operator==(const GridDiagram& a, const GridDiagram& b) { return a.xs == b.xs && a.os == b.os; }
    friend bool operator<(const GridDiagram& a, const GridDiagram& b) {
        return a.xs != b.xs ? a.xs < b.xs : a.os < b.os;
    }
};

struct Marker {
    int col = 0;  // 1-based
    int row = 0;
    bool is_x = false;
};

// Components as cyclic marker sequences, each starting at an X marker and alternating column and row segments.
// Throws std::invalid_argument if the markers are not two permutations with no shared cell.
std::vector<std::vector<Marker>> grid_validate(const GridDiagram& g);

struct GridInvariants {
    int tb = 0;
    int r = 0;
    int writhe = 0;
    int components = 0;
    std::vector<int> component_tb;
    std::vector<int> component_r;
};

// Computed on the grid itself: tb = writhe - SE corners, r from NW/SE corner marker types.
GridInvariants grid_classical_invariants(const GridDiagram& g);

FrontWord grid_to_front(const GridDiagram& g);

enum class MoveKind { commute_cols, commute_rows, translate_cols, translate_rows, stabilize, destabilize };

enum class Corner { NW, NE, SW, SE };

struct GridMove {
    MoveKind kind = MoveKind::commute_cols;
    int a = 0;  // commute: column/row pair (a, a+1 mod n); translate: shift; (de)stabilize: column
    int b = 0;  // (de)stabilize: row
    Corner corner = Corner::NW;

    std::string to_string() const;
};

// Applicability test; apply_move throws std::invalid_argument when this is false.
bool move_applicable(const GridDiagram& g, const GridMove& m);
GridDiagram apply_move(const GridDiagram& g, const GridMove& m);

// Destabilizations available on the torus, each as a GridMove at the corner marker.
std::vector<GridMove> destabilizations(const GridDiagram& g);

// Representative of g up to cyclic translation of rows and columns.
GridDiagram canonical_translate(const GridDiagram& g, int* col_shift = nullptr, int* row_shift = nullptr);

// Splits g into blocks whose columns and rows form complementary cyclic intervals. One block if not split.
std::vector<GridDiagram> split_blocks(const GridDiagram& g);

enum class SimplifyOutcome { split_unlink_of_unknots, reduced, budget_exhausted };
std::string outcome_name(SimplifyOutcome o);

struct SimplificationReport {
    SimplifyOutcome outcome = SimplifyOutcome::reduced;
    // Each step acts on one diagram of the working list, which starts as the input alone.
    // A split step replaces that diagram by split_blocks(), appending all blocks after the first.
    struct Step {
        int block = 0;
        GridMove move;
        bool split = false;
    };
    std::vector<Step> steps;
    std::vector<GridDiagram> finals;
    int64_t states_visited = 0;
};

// Greedy destabilization with breadth-first commutation search between destabilizations.
SimplificationReport grid_simplify(const GridDiagram& g, int64_t budget);

// Replays a report from g and returns the resulting diagrams, in the order of report.finals.
std::vector<GridDiagram> replay_simplification(const GridDiagram& g, const SimplificationReport& r);

std::string grid_to_json(const GridDiagram& g);
GridDiagram grid_from_json(const std::string& text);
GridDiagram load_grid(const std::string& path);

}  // namespace legcord
