#pragma once

#include <optional>
#include <string>
#include <vector>

namespace legcord {

struct GridDiagram;

// One front event. Positions are 1-based from the top of the slice.
struct Event {
    char kind = 'X';  // 'L', 'X' or 'R'
    int pos = 1;
    friend bool operator==(const Event& a, const Event& b) { return a.kind == b.kind && a.pos == b.pos; }
};

// Fixes the Maslov potential of the component through (slice, pos).
struct Anchor {
    int slice = 0;
    int pos = 1;
    int value = 0;
};

// Slice k sits just before events[k]; slice 0 and slice size() are empty.
struct FrontWord {
    std::vector<Event> events;
    std::vector<Anchor> anchors;

    FrontWord() = default;
    FrontWord(std::vector<Event> ev) : events(std::move(ev)) {}

    static FrontWord parse(const std::string& text);
    std::string to_string() const;
    size_t size() const { return events.size(); }

    // Strand count at each slice, size() + 1 entries. Throws std::invalid_argument on malformed words.
    std::vector<int> widths() const;
    void validate() const { widths(); }

    friend bool operator==(const FrontWord& a, const FrontWord& b) { return a.events == b.events; }
};

// Components and orientation of every strand segment, indexed [slice][pos - 1].
struct FrontTopology {
    std::vector<std::vector<int>> comp;
    std::vector<std::vector<int>> dir;  // +1 rightward, -1 leftward
    int components = 0;
    std::vector<int> down_cusps, up_cusps;  // per component
};

FrontTopology trace_front(const FrontWord& f);

// +1 or -1 for crossing event k.
int crossing_sign(const FrontWord& f, const FrontTopology& t, size_t k);

struct FrontInvariants {
    int tb = 0;
    int r = 0;
    int components = 0;
    int crossings = 0;
    int cusps = 0;
    int writhe = 0;
    int right_cusps = 0;
    std::vector<int> component_tb;
    std::vector<int> component_r;
};

FrontInvariants front_invariants(const FrontWord& f);

struct CrossingVisit {
    int event;
    bool over;
};

// Crossing events met along each component, in the orientation of trace_front.
std::vector<std::vector<CrossingVisit>> crossing_visits(const FrontWord& f);

struct MaslovPotential {
    std::vector<std::vector<int>> mu;  // [slice][pos - 1]
    std::vector<int> monodromy;        // 2r per component
    std::vector<bool> anchored;        // per component
};

// Upper strand exceeds lower strand by 1 at every cusp. Components without an anchor start at 0.
MaslovPotential maslov_potential(const FrontWord& f);

// mu(upper) - mu(lower) at crossing event k.
int crossing_degree(const FrontWord& f, const MaslovPotential& m, size_t k);

FrontWord ncopy(const FrontWord& f, int n);

// Front tangle on n boundary strands in the solid torus.
struct Pattern {
    std::string name;
    int n = 1;
    std::vector<Event> events;

    // Cycles of the boundary permutation, i.e. components when closed up in a knot's satellite.
    int boundary_cycles() const;
    int winding_number() const;
    void validate() const;
};

Pattern pattern_delta2();
Pattern pattern_twist(int n);
Pattern pattern_clasp(int n);
Pattern pattern_whitehead();
// "delta2", "tw:N", "p:N" or "w".
Pattern pattern_by_name(const std::string& name);

// The clasp gadget used by pattern_clasp on strands 1..2 of a local bundle.
const std::vector<Event>& clasp_gadget();

struct InsertionSite {
    int slice = 1;
    int pos = 1;
};

// Leftmost slice with a rightward strand; that strand.
InsertionSite default_insertion(const FrontWord& f);

FrontWord satellite(const FrontWord& f, const Pattern& p, std::optional<InsertionSite> site = std::nullopt);

struct PinchSite {
    int slice = 0;
    int pos = 1;
};

// Sites whose two strands are oppositely oriented.
std::vector<PinchSite> pinch_sites(const FrontWord& f);

// Inserts R pos, L pos before events[slice]. Throws if the strands are co-oriented.
FrontWord pinch(const FrontWord& f, const PinchSite& s);

GridDiagram front_to_grid(const FrontWord& f);

}  // namespace legcord
