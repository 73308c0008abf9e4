#include "legcord/skein.hpp"

#include <algorithm>
#include <climits>
#include <stdexcept>
#include <unordered_map>

namespace legcord {

namespace {

// Removes crossing c, joining its slots by the pairing; closed cycles become free loops.
PlanarDiagram splice(const PlanarDiagram& d, int c, const int pair[4]) {
    int n = d.crossings();
    auto inside = [&](int s) { return s / 4 == c; };
    auto partner = [&](int s) { return 4 * c + pair[s % 4]; };
    PlanarDiagram out;
    out.free_loops = d.free_loops;
    std::vector<int> nb = d.nb;
    std::vector<bool> touched(4, false);
    for (int s = 0; s < 4 * n; ++s) {
        if (inside(s) || !inside(d.nb[s])) continue;
        int t = d.nb[s];
        int y;
        while (true) {
            touched[t % 4] = true;
            int x = partner(t);
            touched[x % 4] = true;
            y = d.nb[x];
            if (!inside(y)) break;
            t = y;
        }
        nb[s] = y;
    }
    for (int i = 0; i < 4; ++i) {
        if (touched[i]) continue;
        int t = 4 * c + i;
        while (!touched[t % 4]) {
            touched[t % 4] = true;
            int x = partner(t);
            touched[x % 4] = true;
            t = d.nb[x];
        }
        ++out.free_loops;
    }
    auto shift = [&](int s) { return s / 4 > c ? s - 4 : s; };
    for (int s = 0; s < 4 * n; ++s)
        if (!inside(s)) out.nb.push_back(shift(nb[s]));
    for (int k = 0; k < n; ++k)
        if (k != c) out.signs.push_back(d.signs[k]);
    return out;
}

// Chooses an orientation by traversal and rotates crossings so slot 0 is the incoming under strand.
PlanarDiagram reorient(PlanarDiagram d) {
    int n = d.crossings();
    std::vector<int> entry(n * 4, 0);
    std::vector<bool> used(n * 4, false);
    for (int s = 0; s < 4 * n; ++s) {
        if (used[s]) continue;
        int cur = s;
        do {
            used[cur] = true;
            entry[cur] = 1;
            int ex = PlanarDiagram::exit_of(cur);
            used[ex] = true;
            cur = d.nb[ex];
        } while (cur != s);
    }
    std::vector<int> rot(n, 0);
    for (int c = 0; c < n; ++c) rot[c] = entry[4 * c] ? 0 : 2;
    auto relabel = [&](int s) { return 4 * (s / 4) + (s % 4 + rot[s / 4]) % 4; };
    std::vector<int> nb(4 * n);
    for (int s = 0; s < 4 * n; ++s) nb[relabel(s)] = relabel(d.nb[s]);
    for (int c = 0; c < n; ++c) {
        int over_entry = entry[4 * c + 3] ? 3 : 1;
        int after = (over_entry + rot[c]) % 4;
        d.signs[c] = int8_t(after == 3 ? 1 : -1);
    }
    d.nb = nb;
    return d;
}

// Crossings first met on the under strand, in traversal order.
std::vector<int> bad_crossings(const PlanarDiagram& d) {
    std::vector<bool> seen(d.crossings(), false);
    std::vector<int> bad;
    for (auto& comp : d.traversals())
        for (int s : comp) {
            int c = s / 4;
            if (seen[c]) continue;
            seen[c] = true;
            if (PlanarDiagram::is_under(s)) bad.push_back(c);
        }
    return bad;
}

int self_writhe(const PlanarDiagram& d) {
    std::vector<int> comp_of(4 * d.crossings(), -1);
    auto tr = d.traversals();
    for (size_t k = 0; k < tr.size(); ++k)
        for (int s : tr[k]) comp_of[s] = int(k);
    int w = 0;
    for (int c = 0; c < d.crossings(); ++c) {
        int a = comp_of[4 * c], b = comp_of[4 * c + (d.sign(c) > 0 ? 3 : 1)];
        if (a == b) w += d.sign(c);
    }
    return w;
}

LaurentPoly2 power(const LaurentPoly2& x, int k) {
    LaurentPoly2 r(1);
    for (int i = 0; i < k; ++i) r = r * x;
    return r;
}

LaurentPoly2 homfly_delta() { return LaurentPoly2::monomial(1, -1) - LaurentPoly2::monomial(-1, -1); }

class SkeinEngine {
public:
    LaurentPoly2 homfly(const PlanarDiagram& d) {
        std::string key = diagram_code(d);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        LaurentPoly2 result;
        LaurentPoly2 coef(1);
        PlanarDiagram cur = d;
        for (int x : bad_crossings(d)) {
            PlanarDiagram s = smooth(cur, x, true);
            if (cur.sign(x) > 0) {
                result += coef * LaurentPoly2::monomial(-1, 1) * homfly(s);
                coef = coef * LaurentPoly2::monomial(-2, 0);
            } else {
                result -= coef * LaurentPoly2::monomial(1, 1) * homfly(s);
                coef = coef * LaurentPoly2::monomial(2, 0);
            }
            cur = switch_crossing(cur, x);
        }
        result += coef * power(homfly_delta(), d.components() - 1);
        memo_.emplace(key, result);
        return result;
    }

    LaurentPoly2 lambda(const PlanarDiagram& d) {
        std::string key = diagram_code(d);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        LaurentPoly2 result;
        PlanarDiagram cur = d;
        for (int x : bad_crossings(d)) {
            LaurentPoly2 diff = lambda(smooth(cur, x, true)) - lambda(smooth(cur, x, false));
            LaurentPoly2 term = LaurentPoly2::monomial(0, 1) * diff;
            if (cur.sign(x) > 0)
                result += term;
            else
                result -= term;
            cur = switch_crossing(cur, x);
        }
        LaurentPoly2 delta = homfly_delta() + LaurentPoly2(1);
        result += LaurentPoly2::monomial(self_writhe(cur), 0) * power(delta, d.components() - 1);
        memo_.emplace(key, result);
        return result;
    }

private:
    std::unordered_map<std::string, LaurentPoly2> memo_;
};

void check_cap(const PlanarDiagram& d, int cap) {
    d.validate();
    if (d.crossings() > cap)
        throw std::invalid_argument("skein computation capped at " + std::to_string(cap) + " crossings, diagram has " +
                                    std::to_string(d.crossings()));
}

}  // namespace

PlanarDiagram smooth(const PlanarDiagram& d, int c, bool oriented) {
    if (c < 0 || c >= d.crossings()) throw std::invalid_argument("no such crossing");
    int oi = d.sign(c) > 0 ? 3 : 1, oo = d.sign(c) > 0 ? 1 : 3;
    int pair[4];
    if (oriented) {
        pair[0] = oo, pair[oo] = 0, pair[oi] = 2, pair[2] = oi;
        return splice(d, c, pair);
    }
    pair[0] = oi, pair[oi] = 0, pair[2] = oo, pair[oo] = 2;
    return reorient(splice(d, c, pair));
}

std::string diagram_code(const PlanarDiagram& d) {
    int n = d.crossings();
    std::string best;
    bool have = false;
    for (int s0 = 0; s0 < 4 * n; ++s0) {
        if (!d.is_incoming(s0)) continue;
        std::vector<int> label(n, -1);
        std::vector<bool> done(4 * n, false);
        int next = 0;
        std::string code;
        int start = s0;
        while (start >= 0) {
            int cur = start;
            do {
                done[cur] = true;
                int c = cur / 4;
                if (label[c] < 0) label[c] = next++;
                code.push_back(char(label[c]));
                code.push_back(PlanarDiagram::is_under(cur) ? 'u' : 'o');
                code.push_back(d.sign(c) > 0 ? '+' : '-');
                cur = d.nb[PlanarDiagram::exit_of(cur)];
            } while (cur != start);
            code.push_back('|');
            start = -1;
            long key = LONG_MAX;
            for (int s = 0; s < 4 * n; ++s) {
                if (done[s] || !d.is_incoming(s)) continue;
                int c = s / 4;
                long k = label[c] >= 0 ? long(label[c]) * 2 + (PlanarDiagram::is_under(s) ? 0 : 1) : long(4 * n) + s;
                if (k < key) key = k, start = s;
            }
        }
        if (!have || code < best) best = code, have = true;
    }
    return best + "#" + std::to_string(d.free_loops);
}

LaurentPoly2 homfly(const PlanarDiagram& d, int max_crossings) {
    check_cap(d, max_crossings);
    SkeinEngine e;
    return e.homfly(d);
}

LaurentPoly2 kauffman_dubrovnik(const PlanarDiagram& d, int max_crossings) {
    check_cap(d, max_crossings);
    SkeinEngine e;
    return LaurentPoly2::monomial(-d.writhe(), 0) * e.lambda(d);
}

}  // namespace legcord
