#include "legcord/planar.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <map>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

#include "legcord/front.hpp"
#include "legcord/grid.hpp"

namespace legcord {

bool PlanarDiagram::is_incoming(int slot) const {
    int i = slot % 4;
    if (i == 0) return true;
    if (i == 2) return false;
    return (i == 3) == (signs[slot / 4] > 0);
}

void PlanarDiagram::validate() const {
    int n = crossings();
    if (int(nb.size()) != 4 * n) throw std::invalid_argument("planar diagram needs four slots per crossing");
    if (free_loops < 0) throw std::invalid_argument("negative free loop count");
    for (int s = 0; s < 4 * n; ++s) {
        int t = nb[s];
        if (t < 0 || t >= 4 * n || nb[t] != s || t == s)
            throw std::invalid_argument("planar diagram slots are not paired");
        if (is_incoming(s) == is_incoming(t)) throw std::invalid_argument("planar edge joins two slots of the same direction");
    }
    for (auto v : signs)
        if (v != 1 && v != -1) throw std::invalid_argument("crossing sign must be +1 or -1");
}

std::vector<std::vector<int>> PlanarDiagram::traversals() const {
    int n = crossings();
    std::vector<bool> seen(4 * n, false);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < 4 * n; ++s) {
        if (!is_incoming(s) || seen[s]) continue;
        std::vector<int> comp;
        int cur = s;
        while (!seen[cur]) {
            seen[cur] = true;
            comp.push_back(cur);
            cur = nb[exit_of(cur)];
        }
        out.push_back(std::move(comp));
    }
    return out;
}

int PlanarDiagram::components() const { return int(traversals().size()) + free_loops; }

int PlanarDiagram::writhe() const { return std::accumulate(signs.begin(), signs.end(), 0); }

int PlanarDiagram::negative_crossings() const { return int(std::count(signs.begin(), signs.end(), int8_t(-1))); }

std::vector<int> PlanarDiagram::corner_faces(int* face_count) const {
    int n = crossings();
    std::vector<int> face(4 * n, -1);
    int faces = 0;
    // Following an edge to its far slot and turning counterclockwise walks the boundary of one face.
    for (int d = 0; d < 4 * n; ++d) {
        if (face[nb[d]] >= 0) continue;
        int cur = d;
        while (face[nb[cur]] < 0) {
            int far = nb[cur];
            face[far] = faces;
            cur = far - far % 4 + (far % 4 + 1) % 4;
        }
        ++faces;
    }
    if (face_count) *face_count = faces;
    return face;
}

bool PlanarDiagram::connected() const {
    int n = crossings();
    if (n == 0) return free_loops <= 1;
    if (free_loops > 0) return false;
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int s = 0; s < 4 * n; ++s) parent[find(s / 4)] = find(nb[s] / 4);
    for (int c = 0; c < n; ++c)
        if (find(c) != find(0)) return false;
    return true;
}

bool PlanarDiagram::is_alternating() const {
    for (auto& comp : traversals())
        for (size_t t = 0; t < comp.size(); ++t)
            if (is_under(comp[t]) == is_under(comp[(t + 1) % comp.size()])) return false;
    return true;
}

bool PlanarDiagram::is_reduced() const {
    std::vector<int> face = corner_faces();
    for (int c = 0; c < crossings(); ++c)
        if (face[4 * c] == face[4 * c + 2] || face[4 * c + 1] == face[4 * c + 3]) return false;
    return true;
}

std::string PlanarDiagram::to_string() const {
    std::ostringstream os;
    for (int c = 0; c < crossings(); ++c) {
        if (c) os << ' ';
        os << "X[";
        for (int i = 0; i < 4; ++i) os << (i ? "," : "") << nb[4 * c + i];
        os << (signs[c] > 0 ? "]+" : "]-");
    }
    if (free_loops) os << (crossings() ? " " : "") << "O^" << free_loops;
    return os.str();
}

PlanarDiagram planar_from_visits(const std::vector<std::vector<GaussVisit>>& comps, const std::vector<int>& signs) {
    PlanarDiagram d;
    int n = int(signs.size());
    d.signs.resize(n);
    for (int c = 0; c < n; ++c) d.signs[c] = int8_t(signs[c]);
    d.nb.assign(4 * n, -1);
    std::vector<int> under_seen(n, 0), over_seen(n, 0);
    auto in_slot = [&](const GaussVisit& v) {
        int base = 4 * v.crossing;
        if (!v.over) return base;
        return base + (signs[v.crossing] > 0 ? 3 : 1);
    };
    for (auto& comp : comps) {
        if (comp.empty()) {
            ++d.free_loops;
            continue;
        }
        for (auto& v : comp) {
            if (v.crossing < 0 || v.crossing >= n) throw std::invalid_argument("visit refers to a missing crossing");
            ++(v.over ? over_seen : under_seen)[v.crossing];
        }
        for (size_t t = 0; t < comp.size(); ++t) {
            int out = PlanarDiagram::exit_of(in_slot(comp[t]));
            int in = in_slot(comp[(t + 1) % comp.size()]);
            d.nb[out] = in;
            d.nb[in] = out;
        }
    }
    for (int c = 0; c < n; ++c)
        if (under_seen[c] != 1 || over_seen[c] != 1)
            throw std::invalid_argument("each crossing needs one over and one under visit");
    d.validate();
    return d;
}

PlanarDiagram front_to_planar(const FrontWord& f) {
    FrontTopology t = trace_front(f);
    std::map<int, int> id;
    std::vector<int> signs;
    for (size_t k = 0; k < f.size(); ++k)
        if (f.events[k].kind == 'X') {
            id[int(k)] = int(signs.size());
            signs.push_back(crossing_sign(f, t, k));
        }
    std::vector<std::vector<GaussVisit>> comps;
    for (auto& comp : crossing_visits(f)) {
        comps.emplace_back();
        for (auto& v : comp) comps.back().push_back({id.at(v.event), v.over});
    }
    return planar_from_visits(comps, signs);
}

PlanarDiagram grid_to_planar(const GridDiagram& g) {
    grid_validate(g);
    int n = g.size;
    std::vector<int> xcol(n + 1), ocol(n + 1);
    for (int c = 0; c < n; ++c) {
        xcol[g.xs[c]] = c;
        ocol[g.os[c]] = c;
    }
    auto inside = [](int v, int a, int b) { return std::min(a, b) < v && v < std::max(a, b); };
    // Vertical segments (column c, from X to O) pass over horizontal ones (row r, from O to X).
    std::map<std::pair<int, int>, int> id;
    std::vector<int> signs;
    for (int c = 0; c < n; ++c)
        for (int r = 1; r <= n; ++r)
            if (inside(r, g.xs[c], g.os[c]) && inside(c, ocol[r], xcol[r])) {
                id[{c, r}] = int(signs.size());
                int vo = g.os[c] > g.xs[c] ? 1 : -1;
                int uh = xcol[r] > ocol[r] ? 1 : -1;
                signs.push_back(-vo * uh);
            }
    std::vector<std::vector<GaussVisit>> comps;
    std::vector<bool> done(n, false);
    for (int c0 = 0; c0 < n; ++c0) {
        if (done[c0]) continue;
        comps.emplace_back();
        auto& comp = comps.back();
        int c = c0;
        while (!done[c]) {
            done[c] = true;
            int r0 = g.xs[c], r1 = g.os[c];
            int step = r1 > r0 ? 1 : -1;
            for (int r = r0 + step; r != r1; r += step)
                if (inside(c, ocol[r], xcol[r])) comp.push_back({id.at({c, r}), true});
            int c1 = xcol[r1];
            int cstep = c1 > c ? 1 : -1;
            for (int cc = c + cstep; cc != c1; cc += cstep)
                if (inside(r1, g.xs[cc], g.os[cc])) comp.push_back({id.at({cc, r1}), false});
            c = c1;
        }
    }
    return planar_from_visits(comps, signs);
}

namespace {

std::vector<int> component_of_slots(const PlanarDiagram& d) {
    std::vector<int> comp(4 * d.crossings(), -1);
    auto tr = d.traversals();
    for (size_t k = 0; k < tr.size(); ++k)
        for (int s : tr[k]) comp[s] = int(k);
    return comp;
}

bool mixed(const PlanarDiagram& d, const std::vector<int>& comp, int c) {
    return comp[4 * c] != comp[4 * c + (d.sign(c) > 0 ? 3 : 1)];
}

}  // namespace

std::vector<PlanarDiagram> component_diagrams(const PlanarDiagram& d) {
    std::vector<int> comp = component_of_slots(d);
    std::vector<PlanarDiagram> out;
    for (auto& tr : d.traversals()) {
        std::map<int, int> id;
        std::vector<int> signs;
        std::vector<GaussVisit> visits;
        for (int s : tr) {
            int c = s / 4;
            if (mixed(d, comp, c)) continue;
            auto [it, fresh] = id.emplace(c, int(signs.size()));
            if (fresh) signs.push_back(d.sign(c));
            visits.push_back({it->second, !PlanarDiagram::is_under(s)});
        }
        out.push_back(planar_from_visits({visits}, signs));
    }
    return out;
}

int linking_number(const PlanarDiagram& d) {
    std::vector<int> comp = component_of_slots(d);
    int total = 0;
    for (int c = 0; c < d.crossings(); ++c)
        if (mixed(d, comp, c)) total += d.sign(c);
    return total / 2;
}

PlanarDiagram switch_crossing(const PlanarDiagram& d, int c) {
    if (c < 0 || c >= d.crossings()) throw std::invalid_argument("no such crossing");
    PlanarDiagram out = d;
    int r = d.signs[c] > 0 ? 3 : 1;  // old over-in becomes the new slot 0
    auto relabel = [&](int s) { return s / 4 == c ? 4 * c + (s % 4 - r + 4) % 4 : s; };
    for (int s = 0; s < 4 * d.crossings(); ++s) out.nb[relabel(s)] = relabel(d.nb[s]);
    out.signs[c] = int8_t(-d.signs[c]);
    return out;
}

PlanarDiagram mirror(const PlanarDiagram& d) {
    PlanarDiagram out = d;
    for (int c = 0; c < d.crossings(); ++c) out = switch_crossing(out, c);
    return out;
}

PlanarDiagram planar_from_pd(const std::string& text) {
    static const std::regex cross(R"(X\[\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*\])");
    std::vector<std::array<int, 4>> xs;
    for (std::sregex_iterator it(text.begin(), text.end(), cross), end; it != end; ++it)
        xs.push_back({std::stoi((*it)[1]), std::stoi((*it)[2]), std::stoi((*it)[3]), std::stoi((*it)[4])});
    int n = int(xs.size());
    std::map<int, std::vector<int>> slots;
    for (int c = 0; c < n; ++c)
        for (int i = 0; i < 4; ++i) slots[xs[c][i]].push_back(4 * c + i);
    for (auto& [label, v] : slots)
        if (v.size() != 2) throw std::invalid_argument("PD edge " + std::to_string(label) + " must appear twice");
    // Direction of each slot: +1 incoming, -1 outgoing, 0 unknown.
    std::vector<int> dir(4 * n, 0);
    auto other = [&](int s) {
        auto& v = slots[xs[s / 4][s % 4]];
        return v[0] == s ? v[1] : v[0];
    };
    auto set = [&](int s, int d) {
        if (dir[s] == -d) throw std::invalid_argument("PD orientation is inconsistent");
        bool fresh = dir[s] == 0;
        dir[s] = d;
        return fresh;
    };
    for (int c = 0; c < n; ++c) {
        set(4 * c, 1);
        set(4 * c + 2, -1);
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (int s = 0; s < 4 * n; ++s) {
            if (dir[s] != 0) changed |= set(other(s), -dir[s]);
            int partner = s % 4 == 1 ? s + 2 : s % 4 == 3 ? s - 2 : -1;
            if (partner >= 0 && dir[s] != 0) changed |= set(partner, -dir[s]);
        }
        if (changed) continue;
        for (int c = 0; c < n && !changed; ++c) {
            if (dir[4 * c + 1] != 0) continue;
            int j = xs[c][1], l = xs[c][3];
            bool j_out = std::abs(j - l) == 1 ? j > l : j < l;
            set(4 * c + 1, j_out ? -1 : 1);
            changed = true;
        }
    }
    PlanarDiagram d;
    d.nb.resize(4 * n);
    for (int c = 0; c < n; ++c) d.signs.push_back(int8_t(dir[4 * c + 3] > 0 ? 1 : -1));
    for (int s = 0; s < 4 * n; ++s) d.nb[s] = other(s);
    d.validate();
    return d;
}

}  // namespace legcord
