#include "legcord/obstruct.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace legcord {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using Matrix = std::vector<std::vector<Rational>>;

constexpr uint64_t kP = (uint64_t(1) << 61) - 1;

uint64_t mulmod(uint64_t a, uint64_t b) {
    unsigned __int128 r = (unsigned __int128)a * b;
    uint64_t lo = uint64_t(r & kP), hi = uint64_t(r >> 61);
    uint64_t s = lo + hi;
    return s >= kP ? s - kP : s;
}
uint64_t addmod(uint64_t a, uint64_t b) { return a + b >= kP ? a + b - kP : a + b; }
uint64_t submod(uint64_t a, uint64_t b) { return a >= b ? a - b : a + kP - b; }
uint64_t powmod(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    for (; e; e >>= 1, a = mulmod(a, a))
        if (e & 1) r = mulmod(r, a);
    return r;
}
uint64_t invmod(uint64_t a) { return powmod(a, kP - 2); }
int64_t frommod(uint64_t v) {
    if (v > kP / 2) return -int64_t(kP - v);
    return int64_t(v);
}

uint64_t det_mod(std::vector<std::vector<uint64_t>> a) {
    size_t n = a.size();
    uint64_t det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            det = submod(0, det);
        }
        det = mulmod(det, a[k][k]);
        uint64_t inv = invmod(a[k][k]);
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            uint64_t f = mulmod(a[i][k], inv);
            for (size_t j = k; j < n; ++j) a[i][j] = submod(a[i][j], mulmod(f, a[k][j]));
        }
    }
    return det;
}

// Coefficients (ascending) of the polynomial of degree < xs.size() through the points, mod kP.
std::vector<uint64_t> interpolate(const std::vector<uint64_t>& xs, const std::vector<uint64_t>& ys) {
    size_t n = xs.size();
    std::vector<uint64_t> dd = ys;
    for (size_t j = 1; j < n; ++j)
        for (size_t i = n - 1; i >= j; --i)
            dd[i] = mulmod(submod(dd[i], dd[i - 1]), invmod(submod(xs[i], xs[i - j])));
    std::vector<uint64_t> coef(n, 0);
    for (size_t i = n; i-- > 0;) {
        // coef = coef * (t - xs[i]) + dd[i]
        std::vector<uint64_t> next(n, 0);
        for (size_t k = 0; k + 1 < n; ++k) next[k + 1] = addmod(next[k + 1], coef[k]);
        for (size_t k = 0; k < n; ++k) next[k] = submod(next[k], mulmod(coef[k], xs[i]));
        next[0] = addmod(next[0], dd[i]);
        coef = next;
    }
    return coef;
}

int inertia(Matrix a) {
    size_t n = a.size();
    int sig = 0;
    for (size_t k = 0; k < n; ++k) {
        size_t p = n;
        for (size_t i = k; i < n; ++i)
            if (a[i][i] != 0) {
                p = i;
                break;
            }
        if (p == n) {
            size_t i0 = n, j0 = n;
            for (size_t i = k; i < n && j0 == n; ++i)
                for (size_t j = i + 1; j < n; ++j)
                    if (a[i][j] != 0) {
                        i0 = i;
                        j0 = j;
                        break;
                    }
            if (j0 == n) break;
            for (size_t t = 0; t < n; ++t) a[i0][t] += a[j0][t];
            for (size_t t = 0; t < n; ++t) a[t][i0] += a[t][j0];
            p = i0;
        }
        std::swap(a[k], a[p]);
        for (auto& row : a) std::swap(row[k], row[p]);
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rational f = a[i][k] / a[k][k];
            for (size_t t = k; t < n; ++t) a[i][t] -= f * a[k][t];
            for (size_t t = k; t < n; ++t) a[t][i] -= f * a[t][k];
        }
        sig += a[k][k] > 0 ? 1 : -1;
    }
    return sig;
}

Rational det_rational(Matrix a) {
    size_t n = a.size();
    Rational det = 1;
    for (size_t k = 0; k < n; ++k) {
        size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return 0;
        if (p != k) {
            std::swap(a[p], a[k]);
            det = -det;
        }
        det *= a[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            Rational f = a[i][k] / a[k][k];
            for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return det;
}

struct Goeritz {
    Matrix reduced;  // one unshaded region deleted
    int mu = 0;      // Gordon-Litherland correction
};

Goeritz goeritz(const PlanarDiagram& d) {
    if (!d.connected()) throw std::invalid_argument("checkerboard surface needs a connected diagram");
    int faces = 0;
    std::vector<int> face = d.corner_faces(&faces);
    int n = d.crossings();
    std::vector<int> color(faces, -1);
    color[face[0]] = 0;
    for (bool changed = true; changed;) {
        changed = false;
        for (int s = 0; s < 4 * n; ++s) {
            int a = face[s], b = face[s - s % 4 + (s % 4 + 1) % 4];
            if (color[a] >= 0 && color[b] < 0) color[b] = 1 - color[a], changed = true;
            if (color[b] >= 0 && color[a] < 0) color[a] = 1 - color[b], changed = true;
        }
    }
    std::vector<int> index(faces, -1);
    int m = 0;
    for (int f = 0; f < faces; ++f)
        if (color[f] == 0) index[f] = m++;
    Goeritz g;
    Matrix full(m, std::vector<Rational>(m, 0));
    for (int c = 0; c < n; ++c) {
        int i0 = color[face[4 * c]] == 0 ? 0 : 1;  // unshaded corners are i0 and i0 + 2
        int eta = i0 == 0 ? -1 : 1;
        int a = index[face[4 * c + i0]], b = index[face[4 * c + i0 + 2]];
        if (a != b) {
            full[a][b] -= eta;
            full[b][a] -= eta;
            full[a][a] += eta;
            full[b][b] += eta;
        }
        // The oriented smoothing merges corners 1 and 3 at positive crossings, 0 and 2 at negative ones.
        int merged = d.sign(c) > 0 ? 1 : 0;
        if (merged != i0) g.mu += eta;
    }
    g.reduced.assign(m - 1, std::vector<Rational>(m - 1, 0));
    for (int i = 0; i + 1 < m; ++i)
        for (int j = 0; j + 1 < m; ++j) g.reduced[i][j] = full[i][j];
    return g;
}

void require_knot(const PlanarDiagram& d) {
    if (d.components() != 1) throw std::invalid_argument("knot diagram required, got " + std::to_string(d.components()) + " components");
}

}  // namespace

LaurentPoly alexander_polynomial(const PlanarDiagram& d) {
    require_knot(d);
    int n = d.crossings();
    if (n == 0) return LaurentPoly(1);
    std::vector<int> trav = d.traversals().front();
    std::vector<int> over(n), in(n), out(n);
    size_t t0 = 0;
    while (!PlanarDiagram::is_under(trav[t0])) ++t0;
    int arc = 0;
    for (size_t step = 1; step <= trav.size(); ++step) {
        int s = trav[(t0 + step) % trav.size()];
        int c = s / 4;
        if (PlanarDiagram::is_under(s)) {
            in[c] = arc;
            arc = (arc + 1) % n;
            out[c] = arc;
        } else {
            over[c] = arc;
        }
    }
    // Fox derivatives of the Wirtinger relations, abelianized; row c, column arc; last row and column dropped.
    std::vector<uint64_t> xs, ys;
    for (int pt = 0; pt < n; ++pt) {
        uint64_t t = uint64_t(pt + 2);
        std::vector<std::vector<uint64_t>> m(n - 1, std::vector<uint64_t>(n - 1, 0));
        auto put = [&](int row, int col, uint64_t v) {
            if (row < n - 1 && col < n - 1) m[row][col] = addmod(m[row][col], v);
        };
        for (int c = 0; c < n; ++c) {
            uint64_t one_minus_t = submod(1, t);
            put(c, over[c], one_minus_t);
            if (d.sign(c) > 0) {
                put(c, in[c], t);
                put(c, out[c], kP - 1);
            } else {
                put(c, in[c], kP - 1);
                put(c, out[c], t);
            }
        }
        xs.push_back(t);
        ys.push_back(det_mod(m));
    }
    std::vector<uint64_t> coef = interpolate(xs, ys);
    std::vector<int64_t> c;
    for (uint64_t v : coef) c.push_back(frommod(v));
    int lo = 0, hi = int(c.size()) - 1;
    while (lo <= hi && c[lo] == 0) ++lo;
    while (hi >= lo && c[hi] == 0) --hi;
    if (lo > hi) throw std::logic_error("Alexander determinant vanished on a knot diagram");
    if ((hi - lo) % 2 != 0) throw std::logic_error("Alexander polynomial of a knot must have even span");
    LaurentPoly p;
    for (int k = lo; k <= hi; ++k) p.add_term(k - (lo + hi) / 2, c[k]);
    int64_t at1 = p.eval_at_one();
    if (at1 != 1 && at1 != -1) throw std::logic_error("Alexander polynomial does not evaluate to a unit at 1");
    return at1 == 1 ? p : -p;
}

int64_t determinant(const PlanarDiagram& d) {
    LaurentPoly p = alexander_polynomial(d);
    int64_t v = 0;
    for (auto& [e, c] : p.terms()) v = checked_add(v, (e % 2 == 0) ? c : -c);
    return v < 0 ? -v : v;
}

int64_t goeritz_determinant(const PlanarDiagram& d) {
    require_knot(d);
    if (d.crossings() == 0) return 1;
    Rational det = abs(det_rational(goeritz(d).reduced));
    return int64_t(numerator(det));
}

int signature(const PlanarDiagram& d) {
    require_knot(d);
    if (d.crossings() == 0) return 0;
    Goeritz g = goeritz(d);
    return inertia(g.reduced) - g.mu;
}

bool is_perfect_square(int64_t n) {
    if (n < 0) return false;
    int64_t r = int64_t(std::llround(std::sqrt(double(n))));
    for (int64_t k = std::max<int64_t>(0, r - 2); k <= r + 2; ++k)
        if (k * k == n) return true;
    return false;
}

FoxMilnorResult fox_milnor_test(const LaurentPoly& alexander) {
    FoxMilnorResult res;
    if (alexander.is_zero()) return res;
    int lo = alexander.min_degree();
    std::vector<int64_t> c(alexander.degree() - lo + 1, 0);
    for (auto& [e, v] : alexander.terms()) c[e - lo] = v;
    IntPoly p(c);
    Factorization fz = factor(p);
    auto normalize = [](IntPoly q) { return q.lead() < 0 ? -q : q; };
    IntPoly f = IntPoly::constant(1);
    std::vector<bool> used(fz.factors.size(), false);
    for (size_t i = 0; i < fz.factors.size(); ++i) {
        if (used[i]) continue;
        auto& [g, mult] = fz.factors[i];
        IntPoly gr = normalize(g.reciprocal());
        used[i] = true;
        if (gr == g) {
            if (mult % 2 != 0) return res;
            for (int k = 0; k < mult / 2; ++k) f = f * g;
            continue;
        }
        size_t j = i + 1;
        while (j < fz.factors.size() && !(fz.factors[j].first == gr)) ++j;
        if (j == fz.factors.size() || fz.factors[j].second != mult) return res;
        used[j] = true;
        const IntPoly& pick = g.lead() > gr.lead() || (g.lead() == gr.lead() && gr < g) ? g : gr;
        for (int k = 0; k < mult; ++k) f = f * pick;
    }
    IntPoly prod = f * f.reciprocal();
    if (!(prod == p || prod == -p)) return res;
    res.holds = true;
    res.f = f;
    return res;
}

SliceFilterReport slice_filter(const PlanarDiagram& d, const FrontWord& f) {
    SliceFilterReport r;
    r.alexander = alexander_polynomial(d);
    r.determinant = determinant(d);
    r.determinant_square = is_perfect_square(r.determinant);
    r.signature = signature(d);
    r.signature_zero = r.signature == 0;
    r.fox_milnor = fox_milnor_test(r.alexander);
    r.tb = front_invariants(f).tb;
    r.tb_is_minus_one = r.tb == -1;
    r.r1 = ruling_polynomial(f, 1).polynomial;
    try {
        r.r2 = ruling_polynomial(f, 2).polynomial;
        r.ruling_dominance = coeff_dominates(r.r1, r.r2);
    } catch (const std::invalid_argument&) {
        r.ruling_dominance = false;
    }
    return r;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::obstructed: return "obstructed";
        case Verdict::not_obstructed: return "not-obstructed-by-these-tests";
        default: return "inconclusive";
    }
}

std::string theorem_name(ObstructionTheorem t) {
    switch (t) {
        case ObstructionTheorem::two_rulings: return "two-rulings";
        case ObstructionTheorem::ruling_poly_uku: return "ruling-poly-uku";
        case ObstructionTheorem::a2_via_satellite: return "A2-via-satellite";
        case ObstructionTheorem::cable_test: return "cable-test";
        default: return "none";
    }
}

ObstructionReport obstruct_concordance_to_unknot(const FrontWord& f, const ObstructOptions& opt) {
    if (front_invariants(f).components != 1) throw std::invalid_argument("obstruction tests need a knot front");
    ObstructionReport rep;
    rep.slice_asserted = opt.assert_slice;
    bool pending = false;
    auto fire = [&](ObstructionTheorem t, const std::string& name, const std::string& detail) {
        rep.verdict = Verdict::obstructed;
        rep.theorem = t;
        rep.stages.push_back({name, "fired", detail});
    };
    auto done = [&] { return rep.verdict == Verdict::obstructed; };

    std::vector<NormalRuling> two;
    if (exists_two_rulings(f, 1, &two)) {
        rep.rulings = two;
        fire(ObstructionTheorem::two_rulings, "two-rulings", "two distinct ungraded rulings");
        return rep;
    }
    rep.stages.push_back({"two-rulings", "passed", std::to_string(two.size()) + " ruling(s)"});

    try {
        LaurentPoly r1 = ruling_polynomial(f, 1, opt.state_limit).polynomial;
        rep.polynomial = r1;
        if (r1 != LaurentPoly(0) && r1 != LaurentPoly(1))
            fire(ObstructionTheorem::ruling_poly_uku, "ruling-poly-uku", "R1 = " + r1.to_string());
        else
            rep.stages.push_back({"ruling-poly-uku", "passed", "R1 = " + r1.to_string()});
    } catch (const StateLimitExceeded& e) {
        pending = true;
        rep.stages.push_back({"ruling-poly-uku", "inconclusive", e.what()});
    }
    if (done()) return rep;

    if (!opt.a2_stage) {
        rep.stages.push_back({"A2-via-satellite", "skipped", "disabled by caller"});
    } else {
        try {
            FrontWord s = satellite(f, pattern_delta2());
            LaurentPoly r = ruling_polynomial(s, 1, opt.state_limit).polynomial;
            if (!r.is_zero()) {
                std::vector<NormalRuling> w = enumerate_rulings(s, 1, 1);
                rep.a2_ruling = Delta2Ruling{s, w.at(0), -1};
                fire(ObstructionTheorem::a2_via_satellite, "A2-via-satellite", "S(f, delta2) has a normal ruling");
                return rep;
            }
            rep.stages.push_back({"A2-via-satellite", "passed", "S(f, delta2) has no normal ruling"});
        } catch (const StateLimitExceeded& e) {
            pending = true;
            rep.stages.push_back({"A2-via-satellite", "inconclusive", e.what()});
        }
    }

    for (int n = 2; n <= opt.max_cable; ++n) {
        std::string name = "cable-test(" + std::to_string(n) + ",1)";
        if (!opt.assert_slice) {
            rep.stages.push_back({name, "skipped", "requires the hypothesis U < f"});
            continue;
        }
        try {
            LaurentPoly p = ruling_polynomial(satellite(f, pattern_twist(n)), 1, opt.state_limit).polynomial.shifted(n - 1);
            if (p != LaurentPoly(1)) {
                rep.polynomial = p;
                rep.cable_n = n;
                fire(ObstructionTheorem::cable_test, name, "z^" + std::to_string(n - 1) + " R1 = " + p.to_string());
                return rep;
            }
            rep.stages.push_back({name, "passed", "z^" + std::to_string(n - 1) + " R1 = 1"});
        } catch (const StateLimitExceeded& e) {
            pending = true;
            rep.stages.push_back({name, "inconclusive", e.what()});
        }
    }
    rep.verdict = pending ? Verdict::inconclusive : Verdict::not_obstructed;
    return rep;
}

bool check_witness(const FrontWord& f, const ObstructionReport& r) {
    if (r.verdict != Verdict::obstructed) return true;
    switch (r.theorem) {
        case ObstructionTheorem::two_rulings:
            return r.rulings.size() == 2 && r.rulings[0] != r.rulings[1] && validate_ruling(f, r.rulings[0]) &&
                   validate_ruling(f, r.rulings[1]);
        case ObstructionTheorem::ruling_poly_uku: {
            LaurentPoly p = ruling_polynomial(f, 1).polynomial;
            return r.polynomial && *r.polynomial == p && p != LaurentPoly(0) && p != LaurentPoly(1);
        }
        case ObstructionTheorem::a2_via_satellite:
            return r.a2_ruling && r.a2_ruling->front == satellite(f, pattern_delta2()) &&
                   validate_ruling(r.a2_ruling->front, r.a2_ruling->ruling);
        case ObstructionTheorem::cable_test: {
            if (!r.slice_asserted || r.cable_n < 2 || !r.polynomial) return false;
            LaurentPoly p = ruling_polynomial(satellite(f, pattern_twist(r.cable_n)), 1).polynomial.shifted(r.cable_n - 1);
            return p == *r.polynomial && p != LaurentPoly(1);
        }
        default: return false;
    }
}

}  // namespace legcord
