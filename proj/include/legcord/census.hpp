#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "legcord/algebra.hpp"
#include "legcord/front.hpp"
#include "legcord/grid.hpp"
#include "legcord/obstruct.hpp"

namespace legcord {

constexpr int64_t kDefaultPinchBudget = 100000;

// Data directory: LEGCORD_DATA_DIR from the environment, else the build-time default.
std::string data_dir();

struct CensusExpectation {
    std::string least_n;  // "1", "2" or a lower bound such as ">2"
    std::optional<LaurentPoly> polynomial;
    std::optional<LaurentPoly> auxiliary;  // the table's second column, compared against R^0
    bool obstructed = false;
};

struct CensusEntry {
    std::string name;
    GridDiagram grid;
    CensusExpectation expected;
};

std::vector<CensusEntry> load_census(const std::string& dir = data_dir());
const CensusEntry& find_entry(const std::vector<CensusEntry>& census, const std::string& name);

struct SliceCertificate {
    FrontWord front;
    PinchSite site;
    GridDiagram pinched_grid;
    SimplificationReport simplification;
    std::vector<std::pair<int, int>> components;  // (tb, r) of each pinched component
    int saddles = 1;
    int births = 1;
};

struct PinchSearch {
    std::optional<SliceCertificate> certificate;
    int sites_tried = 0;
    int64_t states = 0;
};

// Tries the hint first, then every pinch site whose result has two tb = -1, r = 0 components.
// Throws std::invalid_argument unless f is a knot with tb = -1.
PinchSearch find_slice_pinch(const FrontWord& f, int64_t budget = kDefaultPinchBudget,
                             std::optional<PinchSite> hint = std::nullopt);
PinchSearch find_slice_pinch(const GridDiagram& g, int64_t budget = kDefaultPinchBudget,
                             std::optional<PinchSite> hint = std::nullopt);

// Pinches, converts and replays the stored simplification; true iff it ends in two standard unknots.
bool replay_certificate(const SliceCertificate& c, std::string* why = nullptr);

// Pinch sites cached from earlier searches, keyed by entry name.
std::vector<std::pair<std::string, PinchSite>> load_pinch_fixtures(const std::string& dir = data_dir());

// The m14n15581 front with n - 1 copies of the twist gadget inserted.
FrontWord family_15581(int n);

struct CensusOptions {
    std::vector<std::string> entries;  // empty: all
    int64_t pinch_budget = kDefaultPinchBudget;
    bool deep = false;  // adds the 3-cable
    int jobs = 1;
    size_t state_limit = SIZE_MAX;
};

struct CensusDiff {
    std::string field;
    std::string expected;
    std::string actual;
};

struct CensusResult {
    std::string name;
    int tb = 0;
    int r = 0;
    std::optional<SliceCertificate> certificate;
    int64_t pinch_states = 0;
    LaurentPoly r1;
    std::optional<LaurentPoly> r0;
    std::optional<LaurentPoly> cable2;  // z R^1 of S(f, tw_2)
    std::optional<LaurentPoly> cable3;  // z^2 R^1 of S(f, tw_3)
    ObstructionReport obstruction;
    std::vector<CensusDiff> diffs;
    double seconds = 0;
};

struct CensusReport {
    std::vector<CensusResult> results;  // census order
    int obstructed = 0;
    int not_obstructed = 0;
    int inconclusive = 0;
    size_t diff_count() const;
};

CensusResult verify_entry(const CensusEntry& e, const CensusOptions& opt = {});
CensusReport verify_census(const CensusOptions& opt = {}, const std::string& dir = data_dir());

std::string census_report_json(const CensusReport& r);

}  // namespace legcord
