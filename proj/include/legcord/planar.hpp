#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace legcord {

struct FrontWord;
struct GridDiagram;

// Oriented link diagram on the sphere. Crossing c owns slots 4c..4c+3 in counterclockwise order:
// 4c is the incoming under strand and 4c+2 the outgoing one; the over strand enters at 4c+3 on
// positive crossings and at 4c+1 on negative ones. nb pairs each outgoing slot with the incoming
// slot it feeds.
struct PlanarDiagram {
    std::vector<int> nb;
    std::vector<int8_t> signs;
    int free_loops = 0;

    int crossings() const { return int(signs.size()); }
    int sign(int c) const { return signs[c]; }
    static bool is_under(int slot) { return slot % 2 == 0; }
    bool is_incoming(int slot) const;
    static int exit_of(int slot) { return slot - slot % 4 + (slot % 4 + 2) % 4; }

    void validate() const;
    int components() const;
    // Incoming slots in traversal order, one list per component with crossings.
    std::vector<std::vector<int>> traversals() const;
    int writhe() const;
    int negative_crossings() const;
    // Face id of the corner between slot s and the next slot counterclockwise.
    std::vector<int> corner_faces(int* face_count = nullptr) const;
    bool connected() const;
    bool is_alternating() const;
    // No crossing has the same face on two opposite corners.
    bool is_reduced() const;

    std::string to_string() const;
};

struct GaussVisit {
    int crossing;
    bool over;
};

// Builds a diagram from the crossings met along each component and the crossing signs.
// Components with no visits become free loops.
PlanarDiagram planar_from_visits(const std::vector<std::vector<GaussVisit>>& comps, const std::vector<int>& signs);

PlanarDiagram front_to_planar(const FrontWord& f);
PlanarDiagram grid_to_planar(const GridDiagram& g);

// Knot Atlas PD notation, e.g. "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]"; edge labels increase along the orientation.
PlanarDiagram planar_from_pd(const std::string& text);
// One diagram per component with crossings, dropping crossings between different components.
std::vector<PlanarDiagram> component_diagrams(const PlanarDiagram& d);

// Half the signed count of crossings between different components.
int linking_number(const PlanarDiagram& d);

// Exchanges over and under at crossing c.
PlanarDiagram switch_crossing(const PlanarDiagram& d, int c);
PlanarDiagram mirror(const PlanarDiagram& d);

}  // namespace legcord
