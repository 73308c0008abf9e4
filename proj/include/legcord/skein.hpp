#pragma once

#include <string>

#include "legcord/algebra.hpp"
#include "legcord/planar.hpp"

namespace legcord {

constexpr int kDefaultSkeinCrossingCap = 10;

// HOMFLY-PT polynomial with a P(L+) - a^-1 P(L-) = z P(L0) and P(unknot) = 1.
LaurentPoly2 homfly(const PlanarDiagram& d, int max_crossings = kDefaultSkeinCrossingCap);

// Dubrovnik polynomial F = a^-w Lambda, where Lambda(D+) - Lambda(D-) = z (Lambda(D0) - Lambda(Dinf)),
// Lambda(positive curl) = a Lambda and F(unknot) = 1.
LaurentPoly2 kauffman_dubrovnik(const PlanarDiagram& d, int max_crossings = kDefaultSkeinCrossingCap);

// Smoothing of crossing c: the oriented one keeps orientations; the other reorients the result.
PlanarDiagram smooth(const PlanarDiagram& d, int c, bool oriented);

// Oriented code that is equal for diagrams related by relabelling crossings and moving base points.
std::string diagram_code(const PlanarDiagram& d);

}  // namespace legcord
