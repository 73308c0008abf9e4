#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "legcord/algebra.hpp"
#include "legcord/front.hpp"
#include "legcord/planar.hpp"
#include "legcord/rulings.hpp"

namespace legcord {

// Symmetric Alexander polynomial in t with value 1 at t = 1. Throws std::invalid_argument on links.
LaurentPoly alexander_polynomial(const PlanarDiagram& d);

// |Alexander(-1)|.
int64_t determinant(const PlanarDiagram& d);

// |det| of the reduced Goeritz matrix, independent of the Alexander computation.
int64_t goeritz_determinant(const PlanarDiagram& d);

// Gordon-Litherland signature; the right-handed trefoil has signature +2.
int signature(const PlanarDiagram& d);

struct FoxMilnorResult {
    bool holds = false;
    IntPoly f;  // Alexander = f(t) f(1/t) up to units when holds
};

FoxMilnorResult fox_milnor_test(const LaurentPoly& alexander);

bool is_perfect_square(int64_t n);

struct SliceFilterReport {
    int64_t determinant = 0;
    bool determinant_square = false;
    int signature = 0;
    bool signature_zero = false;
    LaurentPoly alexander;
    FoxMilnorResult fox_milnor;
    int tb = 0;
    bool tb_is_minus_one = false;
    LaurentPoly r1, r2;
    bool ruling_dominance = false;  // r1 >= r2 >= 0 coefficientwise

    bool passes() const {
        return determinant_square && signature_zero && fox_milnor.holds && tb_is_minus_one && ruling_dominance;
    }
};

SliceFilterReport slice_filter(const PlanarDiagram& d, const FrontWord& f);

enum class Verdict { obstructed, not_obstructed, inconclusive };
enum class ObstructionTheorem { none, two_rulings, ruling_poly_uku, a2_via_satellite, cable_test };

std::string verdict_name(Verdict v);
std::string theorem_name(ObstructionTheorem t);

struct ObstructionStage {
    std::string name;
    std::string status;  // fired, passed, skipped, inconclusive
    std::string detail;
};

struct ObstructionReport {
    Verdict verdict = Verdict::not_obstructed;
    ObstructionTheorem theorem = ObstructionTheorem::none;
    int cable_n = 0;
    bool slice_asserted = false;
    std::vector<NormalRuling> rulings;     // two-rulings witness
    std::optional<Delta2Ruling> a2_ruling;  // A2 witness: a ruling of S(f, delta2)
    std::optional<LaurentPoly> polynomial;  // R1 of f, or z^(n-1) R1 of the n-cable
    std::vector<ObstructionStage> stages;
};

struct ObstructOptions {
    int max_cable = 1;
    bool assert_slice = false;  // caller asserts U < f, enabling the cable test
    bool a2_stage = true;
    size_t state_limit = SIZE_MAX;
};

ObstructionReport obstruct_concordance_to_unknot(const FrontWord& f, const ObstructOptions& opt = {});

// Re-derives the witness of an obstructed verdict from scratch.
bool check_witness(const FrontWord& f, const ObstructionReport& r);

}  // namespace legcord
