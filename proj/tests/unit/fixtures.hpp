#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "legcord/census.hpp"
#include "legcord/front.hpp"
#include "legcord/grid.hpp"

namespace fixtures {

inline legcord::FrontWord front(const std::string& name) {
    std::ifstream in(legcord::data_dir() + "/fronts/" + name + ".front");
    std::stringstream ss;
    ss << in.rdbuf();
    return legcord::FrontWord::parse(ss.str());
}

inline legcord::GridDiagram census_grid(const std::string& name) {
    return legcord::load_grid(legcord::data_dir() + "/census/" + name + ".json");
}

inline legcord::FrontWord census_front(const std::string& name) { return legcord::grid_to_front(census_grid(name)); }

inline const char* const kFronts[] = {"unknot", "trefoil_right", "trefoil_left", "figure_eight"};

inline const char* const kFigureEightPd = "X[4,2,5,1] X[8,6,1,5] X[6,3,7,4] X[2,7,3,8]";

}  // namespace fixtures
