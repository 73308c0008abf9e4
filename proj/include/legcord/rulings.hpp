#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "legcord/algebra.hpp"
#include "legcord/front.hpp"

namespace legcord {

// Switch set as sorted event indices of crossings; d = 1 ungraded, d = 0 fully graded.
struct NormalRuling {
    std::vector<int> switches;
    int d = 1;

    friend bool operator==(const NormalRuling& a, const NormalRuling& b) { return a.switches == b.switches; }
    friend bool operator!=(const NormalRuling& a, const NormalRuling& b) { return !(a == b); }
};

// Throws std::invalid_argument when the front cannot carry a d-graded potential
// (d must divide 2r of each component; unanchored link components need d = 1).
void check_grading(const FrontWord& f, int d);

struct RulingCount {
    LaurentPoly polynomial;     // sum of z^(s - c + 1)
    size_t max_states = 0;      // widest DP layer
};

// Thrown when a DP layer outgrows the caller's state limit.
struct StateLimitExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

RulingCount ruling_polynomial(const FrontWord& f, int d, size_t state_limit = SIZE_MAX);

// All rulings, in lexicographic order of switch decisions, stopping after limit.
std::vector<NormalRuling> enumerate_rulings(const FrontWord& f, int d, size_t limit = SIZE_MAX);

// Two distinct rulings if they exist.
bool exists_two_rulings(const FrontWord& f, int d, std::vector<NormalRuling>* witness = nullptr);

// Independent sweep replay of a switch set.
bool validate_ruling(const FrontWord& f, const NormalRuling& r, std::string* why = nullptr);

// Contribution z^(s - c + 1) of a ruling.
int ruling_exponent(const FrontWord& f, const NormalRuling& r);

struct Delta2Ruling {
    FrontWord front;     // S(f, delta2) with the half twist inside the 2-copy of the chosen crossing
    NormalRuling ruling;
    int crossing = -1;   // event index in f of the rightmost crossing where the inputs differ
};

// Builds a ruling of S(f, delta2) from two distinct rulings of f.
Delta2Ruling construct_delta2_ruling(const FrontWord& f, const NormalRuling& r1, const NormalRuling& r2);

// The n-copy of a ruling of f, as a ruling of satellite(f, twist(n)) at the default insertion site.
NormalRuling ncopy_ruling(const FrontWord& f, const NormalRuling& r, int n);

}  // namespace legcord
