#include "legcord/front.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <sstream>
#include <stdexcept>

namespace legcord {

FrontWord FrontWord::parse(const std::string& text) {
    static const std::regex tok(R"(([LXR])(\d+))");
    FrontWord f;
    std::istringstream is(text);
    std::string t;
    while (is >> t) {
        std::smatch m;
        if (!std::regex_match(t, m, tok)) throw std::invalid_argument("bad front token: " + t);
        f.events.push_back({m[1].str()[0], std::stoi(m[2].str())});
    }
    f.validate();
    return f;
}

std::string FrontWord::to_string() const {
    std::string s;
    for (auto& e : events) {
        if (!s.empty()) s += ' ';
        s += e.kind;
        s += std::to_string(e.pos);
    }
    return s;
}

std::vector<int> FrontWord::widths() const {
    std::vector<int> w{0};
    for (size_t k = 0; k < events.size(); ++k) {
        const Event& e = events[k];
        int cur = w.back();
        bool ok = e.pos >= 1;
        switch (e.kind) {
            case 'L': ok = ok && e.pos <= cur + 1; cur += 2; break;
            case 'X': ok = ok && e.pos + 1 <= cur; break;
            case 'R': ok = ok && e.pos + 1 <= cur; cur -= 2; break;
            default: ok = false;
        }
        if (!ok) throw std::invalid_argument("front event " + std::to_string(k) + " out of range");
        w.push_back(cur);
    }
    if (w.back() != 0) throw std::invalid_argument("front does not close up");
    return w;
}

namespace {

// Next segment when moving right from (k, p) through events[k]; cusp gives the partner at the same slice.
struct Step {
    bool cusp;
    int pos;
};

Step forward(const FrontWord& f, int k, int p) {
    const Event& e = f.events[k];
    int i = e.pos;
    switch (e.kind) {
        case 'L': return {false, p < i ? p : p + 2};
        case 'X': return {false, p == i ? i + 1 : p == i + 1 ? i : p};
        default:
            if (p == i) return {true, i + 1};
            if (p == i + 1) return {true, i};
            return {false, p < i ? p : p - 2};
    }
}

Step backward(const FrontWord& f, int k, int p) {
    const Event& e = f.events[k - 1];
    int i = e.pos;
    switch (e.kind) {
        case 'R': return {false, p < i ? p : p + 2};
        case 'X': return {false, p == i ? i + 1 : p == i + 1 ? i : p};
        default:
            if (p == i) return {true, i + 1};
            if (p == i + 1) return {true, i};
            return {false, p < i ? p : p - 2};
    }
}

// Walks one component starting rightward or leftward at (k, p); visit(k, p, dir, cusp_delta) per segment.
template <class Visit, class Cusp>
void walk(const FrontWord& f, int k0, int p0, int d0, Visit visit, Cusp cusp) {
    int k = k0, p = p0, d = d0;
    do {
        visit(k, p, d);
        Step s = d > 0 ? forward(f, k, p) : backward(f, k, p);
        if (s.cusp) {
            cusp(p < s.pos);  // true when moving downward
            p = s.pos;
            d = -d;
        } else {
            k += d;
            p = s.pos;
        }
    } while (!(k == k0 && p == p0 && d == d0));
}

}  // namespace

FrontTopology trace_front(const FrontWord& f) {
    std::vector<int> w = f.widths();
    FrontTopology t;
    size_t m = f.size();
    t.comp.resize(m + 1);
    t.dir.resize(m + 1);
    for (size_t k = 0; k <= m; ++k) {
        t.comp[k].assign(w[k], -1);
        t.dir[k].assign(w[k], 0);
    }
    for (size_t k = 1; k < m; ++k) {
        for (int p = 1; p <= w[k]; ++p) {
            if (t.comp[k][p - 1] >= 0) continue;
            int c = t.components++;
            t.down_cusps.push_back(0);
            t.up_cusps.push_back(0);
            walk(
                f, int(k), p, 1,
                [&](int kk, int pp, int d) {
                    t.comp[kk][pp - 1] = c;
                    t.dir[kk][pp - 1] = d;
                },
                [&](bool down) { ++(down ? t.down_cusps[c] : t.up_cusps[c]); });
        }
    }
    return t;
}

std::vector<std::vector<CrossingVisit>> crossing_visits(const FrontWord& f) {
    FrontTopology t = trace_front(f);
    std::vector<std::vector<CrossingVisit>> out(t.components);
    std::vector<bool> started(t.components, false);
    for (size_t k = 1; k < f.size(); ++k)
        for (int p = 1; p <= int(t.comp[k].size()); ++p) {
            int c = t.comp[k][p - 1];
            if (started[c] || t.dir[k][p - 1] < 0) continue;
            started[c] = true;
            walk(
                f, int(k), p, 1,
                [&](int kk, int pp, int d) {
                    int e = d > 0 ? kk : kk - 1;
                    if (e < 0 || e >= int(f.size()) || f.events[e].kind != 'X') return;
                    int i = f.events[e].pos;
                    if (pp != i && pp != i + 1) return;
                    out[c].push_back({e, d > 0 ? pp == i : pp == i + 1});
                },
                [](bool) {});
        }
    return out;
}

int crossing_sign(const FrontWord& f, const FrontTopology& t, size_t k) {
    int i = f.events[k].pos;
    return t.dir[k][i - 1] == t.dir[k][i] ? 1 : -1;
}

FrontInvariants front_invariants(const FrontWord& f) {
    FrontTopology t = trace_front(f);
    FrontInvariants inv;
    inv.components = t.components;
    inv.component_tb.assign(t.components, 0);
    inv.component_r.assign(t.components, 0);
    int down = 0, up = 0;
    for (size_t k = 0; k < f.size(); ++k) {
        const Event& e = f.events[k];
        if (e.kind == 'X') {
            ++inv.crossings;
            int s = crossing_sign(f, t, k);
            inv.writhe += s;
            int a = t.comp[k][e.pos - 1], b = t.comp[k][e.pos];
            if (a == b) inv.component_tb[a] += s;
        } else {
            ++inv.cusps;
            if (e.kind == 'R') {
                ++inv.right_cusps;
                --inv.component_tb[t.comp[k][e.pos - 1]];
            }
        }
    }
    for (int c = 0; c < t.components; ++c) {
        inv.component_r[c] = (t.down_cusps[c] - t.up_cusps[c]) / 2;
        down += t.down_cusps[c];
        up += t.up_cusps[c];
    }
    inv.tb = inv.writhe - inv.right_cusps;
    inv.r = (down - up) / 2;
    return inv;
}

MaslovPotential maslov_potential(const FrontWord& f) {
    FrontTopology t = trace_front(f);
    std::vector<int> w = f.widths();
    MaslovPotential mp;
    size_t m = f.size();
    mp.mu.resize(m + 1);
    for (size_t k = 0; k <= m; ++k) mp.mu[k].assign(w[k], 0);
    mp.monodromy.assign(t.components, 0);
    mp.anchored.assign(t.components, false);
    std::vector<bool> done(t.components, false);

    auto run = [&](int k, int p, int value) {
        int c = t.comp[k][p - 1];
        int val = value;
        walk(
            f, k, p, t.dir[k][p - 1], [&](int kk, int pp, int) { mp.mu[kk][pp - 1] = val; },
            [&](bool down) { val += down ? -1 : 1; });
        mp.monodromy[c] = val - value;
        done[c] = true;
    };
    for (auto& a : f.anchors) {
        if (a.slice < 1 || a.slice >= int(m) || a.pos < 1 || a.pos > w[a.slice])
            throw std::invalid_argument("Maslov anchor outside the front");
        int c = t.comp[a.slice][a.pos - 1];
        if (done[c]) continue;
        run(a.slice, a.pos, a.value);
        mp.anchored[c] = true;
    }
    for (size_t k = 1; k < m; ++k)
        for (int p = 1; p <= w[k]; ++p)
            if (!done[t.comp[k][p - 1]]) run(int(k), p, 0);
    return mp;
}

int crossing_degree(const FrontWord& f, const MaslovPotential& m, size_t k) {
    int i = f.events[k].pos;
    return m.mu[k][i - 1] - m.mu[k][i];
}

namespace {

void ncopy_event(const Event& e, int n, std::vector<Event>& out) {
    int b = n * (e.pos - 1);
    if (e.kind == 'L') {
        for (int j = 0; j < n; ++j) out.push_back({'L', b + 1 + 2 * j});
        // labels: upper copy j = j, lower copy j = n + j
        std::vector<int> lab;
        for (int j = 0; j < n; ++j) {
            lab.push_back(j);
            lab.push_back(n + j);
        }
        for (int t = 1; t < n; ++t)
            for (int j = t; j < n; ++j) {
                int a = int(std::find(lab.begin(), lab.end(), j) - lab.begin());
                out.push_back({'X', b + a});
                std::swap(lab[a], lab[a - 1]);
            }
    } else if (e.kind == 'R') {
        std::vector<int> lab;
        for (int j = 0; j < 2 * n; ++j) lab.push_back(j);
        for (int t = n - 1; t >= 1; --t)
            for (int j = t; j < n; ++j) {
                int a = int(std::find(lab.begin(), lab.end(), j) - lab.begin());
                out.push_back({'X', b + a + 1});
                std::swap(lab[a], lab[a + 1]);
            }
        for (int j = 0; j < n; ++j) out.push_back({'R', b + 1});
    } else {
        // upper bundle u_a = a, lower bundle v_c = n + c; crossings in diagonal order c - a
        std::vector<int> lab(2 * n);
        std::iota(lab.begin(), lab.end(), 0);
        for (int t = -(n - 1); t < n; ++t)
            for (int a = 0; a < n; ++a) {
                int c = a + t;
                if (c < 0 || c >= n) continue;
                int pa = int(std::find(lab.begin(), lab.end(), a) - lab.begin());
                out.push_back({'X', b + pa + 1});
                std::swap(lab[pa], lab[pa + 1]);
            }
    }
}

std::vector<Event> ncopy_events(const std::vector<Event>& ev, size_t from, size_t to, int n) {
    std::vector<Event> out;
    for (size_t k = from; k < to; ++k) ncopy_event(ev[k], n, out);
    return out;
}

void require_knot(const FrontWord& f, const char* what) {
    if (f.size() == 0) throw std::invalid_argument(std::string(what) + ": empty front");
    if (trace_front(f).components != 1) throw std::invalid_argument(std::string(what) + " needs a knot front");
}

}  // namespace

FrontWord ncopy(const FrontWord& f, int n) {
    if (n < 1) throw std::invalid_argument("ncopy needs n >= 1");
    require_knot(f, "ncopy");
    if (n == 1) return f;
    FrontWord out(ncopy_events(f.events, 0, f.size(), n));
    MaslovPotential mp = maslov_potential(f);
    FrontInvariants inv = front_invariants(f);
    std::vector<Event> first;
    ncopy_event(f.events[0], n, first);
    int b = n * (f.events[0].pos - 1);
    for (int j = 0; j < n; ++j)
        out.anchors.push_back({int(first.size()), b + 1 + j, mp.mu[1][f.events[0].pos - 1] + 2 * inv.r * j});
    return out;
}

void Pattern::validate() const {
    if (n < 1) throw std::invalid_argument("pattern needs at least one strand");
    int w = n;
    for (auto& e : events) {
        bool ok = e.pos >= 1;
        if (e.kind == 'L') ok = ok && e.pos <= w + 1, w += 2;
        else if (e.kind == 'X') ok = ok && e.pos + 1 <= w;
        else if (e.kind == 'R') ok = ok && e.pos + 1 <= w, w -= 2;
        else ok = false;
        if (!ok) throw std::invalid_argument("pattern " + name + " leaves its bundle");
    }
    if (w != n) throw std::invalid_argument("pattern " + name + " does not return to its boundary width");
}

int Pattern::boundary_cycles() const {
    FrontWord u({{'L', 1}, {'R', 1}});
    return trace_front(satellite(u, *this)).components;
}

int Pattern::winding_number() const {
    FrontWord u({{'L', 1}, {'R', 1}});
    FrontWord s = satellite(u, *this);
    FrontTopology t = trace_front(s);
    // the bundle sits at the first n positions right after the unknot's left cusp gadget
    std::vector<Event> first;
    ncopy_event(u.events[0], n, first);
    int k = int(first.size());
    int sum = 0;
    for (int j = 0; j < n; ++j) sum += t.dir[k][j];
    return sum;
}

Pattern pattern_delta2() { return {"delta2", 2, {{'X', 1}}}; }

Pattern pattern_twist(int n) {
    if (n < 1) throw std::invalid_argument("twist pattern needs n >= 1");
    Pattern p{"tw:" + std::to_string(n), n, {}};
    for (int r = 0; r < n; ++r)
        for (int j = 1; j < n; ++j) p.events.push_back({'X', j});
    return p;
}

const std::vector<Event>& clasp_gadget() {
    static const std::vector<Event> g{{'L', 2}, {'X', 1}, {'L', 2}, {'X', 3}, {'R', 4}, {'X', 3}, {'R', 2}};
    return g;
}

Pattern pattern_clasp(int n) {
    Pattern p = pattern_twist(n);
    p.name = "p:" + std::to_string(n);
    for (int c = 1; c < n; ++c)
        for (auto& e : clasp_gadget()) p.events.push_back({e.kind, e.pos + c - 1});
    return p;
}

Pattern pattern_whitehead() { return {"w", 2, {{'L', 2}, {'X', 1}, {'X', 3}, {'R', 2}}}; }

Pattern pattern_by_name(const std::string& name) {
    if (name == "delta2") return pattern_delta2();
    if (name == "w") return pattern_whitehead();
    auto num = [&](size_t at) {
        size_t used = 0;
        int n = std::stoi(name.substr(at), &used);
        if (at + used != name.size()) throw std::invalid_argument("bad pattern: " + name);
        return n;
    };
    if (name.rfind("tw:", 0) == 0) return pattern_twist(num(3));
    if (name.rfind("p:", 0) == 0) return pattern_clasp(num(2));
    throw std::invalid_argument("unknown pattern: " + name);
}

InsertionSite default_insertion(const FrontWord& f) {
    FrontTopology t = trace_front(f);
    for (size_t k = 1; k < f.size(); ++k)
        for (size_t p = 0; p < t.dir[k].size(); ++p)
            if (t.dir[k][p] > 0) return {int(k), int(p) + 1};
    throw std::invalid_argument("no admissible insertion slice");
}

FrontWord satellite(const FrontWord& f, const Pattern& p, std::optional<InsertionSite> site) {
    require_knot(f, "satellite");
    p.validate();
    InsertionSite s = site ? *site : default_insertion(f);
    FrontTopology t = trace_front(f);
    if (s.slice < 1 || s.slice >= int(f.size()) || s.pos < 1 || s.pos > int(t.dir[s.slice].size()))
        throw std::invalid_argument("insertion site outside the front");
    if (t.dir[s.slice][s.pos - 1] < 0) throw std::invalid_argument("insertion strand is not oriented rightward");

    int n = p.n;
    std::vector<Event> ev = ncopy_events(f.events, 0, s.slice, n);
    int at = int(ev.size());
    int b = n * (s.pos - 1);
    for (auto& e : p.events) ev.push_back({e.kind, e.pos + b});
    std::vector<Event> tail = ncopy_events(f.events, s.slice, f.size(), n);
    ev.insert(ev.end(), tail.begin(), tail.end());

    FrontWord out(std::move(ev));
    MaslovPotential mp = maslov_potential(f);
    FrontInvariants inv = front_invariants(f);
    int mu = mp.mu[s.slice][s.pos - 1];
    for (int j = 0; j < n; ++j) out.anchors.push_back({at, b + 1 + j, mu + 2 * inv.r * j});
    out.validate();
    return out;
}

std::vector<PinchSite> pinch_sites(const FrontWord& f) {
    FrontTopology t = trace_front(f);
    std::vector<PinchSite> out;
    for (size_t k = 1; k < f.size(); ++k)
        for (size_t p = 0; p + 1 < t.dir[k].size(); ++p)
            if (t.dir[k][p] != t.dir[k][p + 1]) out.push_back({int(k), int(p) + 1});
    return out;
}

FrontWord pinch(const FrontWord& f, const PinchSite& s) {
    FrontTopology t = trace_front(f);
    if (s.slice < 1 || s.slice >= int(f.size()) || s.pos < 1 || s.pos + 1 > int(t.dir[s.slice].size()))
        throw std::invalid_argument("pinch site outside the front");
    if (t.dir[s.slice][s.pos - 1] == t.dir[s.slice][s.pos])
        throw std::invalid_argument("pinch strands are co-oriented; no oriented saddle exists");
    FrontWord out = f;
    out.anchors.clear();
    out.events.insert(out.events.begin() + s.slice, {{'R', s.pos}, {'L', s.pos}});
    return out;
}

}  // namespace legcord
