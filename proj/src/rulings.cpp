#include "legcord/rulings.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>
#include <unordered_set>

#include "legcord/simd.hpp"

namespace legcord {

namespace {

struct Key {
    alignas(32) uint8_t b[simd::kLanes];
    friend bool operator==(const Key& x, const Key& y) { return std::memcmp(x.b, y.b, simd::kLanes) == 0; }
};

struct KeyHash {
    size_t operator()(const Key& k) const {
        uint64_t w[4];
        std::memcpy(w, k.b, sizeof w);
        uint64_t h = 0x9E3779B97F4A7C15ull;
        for (uint64_t x : w) {
            h ^= x + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
            h *= 0xBF58476D1CE4E5B9ull;
        }
        return size_t(h ^ (h >> 31));
    }
};

Key empty_key() {
    Key k;
    std::memset(k.b, simd::kEmpty, sizeof k.b);
    return k;
}

// Per-crossing data shared by all sweep modes.
struct Sweep {
    const FrontWord& f;
    std::vector<bool> graded_ok;  // per event
    int right_cusps = 0;

    Sweep(const FrontWord& front, int d) : f(front), graded_ok(front.size(), true) {
        std::vector<int> w = f.widths();
        if (*std::max_element(w.begin(), w.end()) > simd::kLanes)
            throw std::invalid_argument("front wider than " + std::to_string(simd::kLanes) + " strands");
        check_grading(f, d);
        MaslovPotential mp;
        if (d != 1) mp = maslov_potential(f);
        for (size_t k = 0; k < f.size(); ++k) {
            if (f.events[k].kind == 'R') ++right_cusps;
            if (f.events[k].kind != 'X' || d == 1) continue;
            int deg = crossing_degree(f, mp, k);
            graded_ok[k] = d == 0 ? deg == 0 : deg % d == 0;
        }
    }
};

bool normal_switch(const uint8_t* p, int a) {
    int j = p[a], k = p[a + 1];
    return (k < j && j < a) || (a + 1 < k && k < j) || (j < a && a + 1 < k);
}

// Pass-through transition; false when the event kills the state.
bool step_pass(const Event& e, const Key& in, Key& out) {
    int a = e.pos - 1;
    out = in;
    uint8_t* p = out.b;
    if (e.kind == 'L') {
        auto adj = [&](uint8_t v) { return v != simd::kEmpty && v >= a ? uint8_t(v + 2) : v; };
        std::memset(p, simd::kEmpty, simd::kLanes);
        for (int q = 0; q < a; ++q) p[q] = adj(in.b[q]);
        p[a] = uint8_t(a + 1);
        p[a + 1] = uint8_t(a);
        for (int q = a; q + 2 < simd::kLanes; ++q) p[q + 2] = adj(in.b[q]);
        return true;
    }
    if (e.kind == 'R') {
        if (p[a] != a + 1) return false;
        for (int q = a; q + 2 < simd::kLanes; ++q) p[q] = p[q + 2];
        p[simd::kLanes - 2] = p[simd::kLanes - 1] = simd::kEmpty;
        for (int q = 0; q < simd::kLanes; ++q)
            if (p[q] != simd::kEmpty && p[q] > a + 1) p[q] = uint8_t(p[q] - 2);
        return true;
    }
    if (p[a] == a + 1) return false;
    simd::conjugate_adjacent(p, a);
    return true;
}

bool switch_allowed(const Sweep& s, size_t k, const Key& in) {
    const Event& e = s.f.events[k];
    int a = e.pos - 1;
    return e.kind == 'X' && in.b[a] != a + 1 && s.graded_ok[k] && normal_switch(in.b, a);
}

// Weighted DP layer: states with polynomial weights in the switch count.
class Layer {
public:
    explicit Layer(size_t hint = 16) { rehash(std::bit_ceil(std::max<size_t>(16, hint * 2))); }

    size_t size() const { return keys_.size(); }
    const Key& key(size_t i) const { return keys_[i]; }
    int lo(size_t i) const { return lo_[i]; }
    const std::vector<int64_t>& weight(size_t i) const { return w_[i]; }

    void add(const Key& k, int lo, const std::vector<int64_t>& w) {
        size_t mask = slots_.size() - 1;
        size_t h = KeyHash{}(k) & mask;
        while (slots_[h] >= 0) {
            int32_t idx = slots_[h];
            if (keys_[idx] == k) {
                merge(idx, lo, w);
                return;
            }
            h = (h + 1) & mask;
        }
        slots_[h] = int32_t(keys_.size());
        keys_.push_back(k);
        lo_.push_back(lo);
        w_.push_back(w);
        if (keys_.size() * 2 > slots_.size()) rehash(slots_.size() * 2);
    }

private:
    void merge(int32_t idx, int lo, const std::vector<int64_t>& w) {
        std::vector<int64_t>& t = w_[idx];
        int tlo = lo_[idx];
        int nlo = std::min(tlo, lo);
        int nhi = std::max(tlo + int(t.size()), lo + int(w.size()));
        if (nlo != tlo || nhi != tlo + int(t.size())) {
            std::vector<int64_t> grown(nhi - nlo, 0);
            std::copy(t.begin(), t.end(), grown.begin() + (tlo - nlo));
            t.swap(grown);
            lo_[idx] = nlo;
        }
        simd::add_checked(t.data() + (lo - lo_[idx]), w.data(), w.size());
    }

    void rehash(size_t n) {
        slots_.assign(n, -1);
        size_t mask = n - 1;
        for (size_t i = 0; i < keys_.size(); ++i) {
            size_t h = KeyHash{}(keys_[i]) & mask;
            while (slots_[h] >= 0) h = (h + 1) & mask;
            slots_[h] = int32_t(i);
        }
    }

    std::vector<int32_t> slots_;
    std::vector<Key> keys_;
    std::vector<int> lo_;
    std::vector<std::vector<int64_t>> w_;
};

}  // namespace

void check_grading(const FrontWord& f, int d) {
    if (d < 0) throw std::invalid_argument("grading modulus must be nonnegative");
    if (d == 1) return;
    MaslovPotential mp = maslov_potential(f);
    size_t comps = mp.monodromy.size();
    for (size_t c = 0; c < comps; ++c) {
        if (comps > 1 && !mp.anchored[c])
            throw std::invalid_argument("graded rulings of a link need a Maslov potential on every component");
        int m = mp.monodromy[c];
        if (d == 0 ? m != 0 : m % d != 0)
            throw std::invalid_argument("grading modulus " + std::to_string(d) + " does not divide 2r");
    }
}

RulingCount ruling_polynomial(const FrontWord& f, int d, size_t state_limit) {
    Sweep s(f, d);
    RulingCount out;
    Layer cur;
    cur.add(empty_key(), 0, {1});
    for (size_t k = 0; k < f.size(); ++k) {
        Layer next(cur.size());
        const Event& e = f.events[k];
        Key nk;
        for (size_t i = 0; i < cur.size(); ++i) {
            const Key& key = cur.key(i);
            if (step_pass(e, key, nk)) next.add(nk, cur.lo(i), cur.weight(i));
            if (switch_allowed(s, k, key)) next.add(key, cur.lo(i) + 1, cur.weight(i));
        }
        out.max_states = std::max(out.max_states, next.size());
        if (next.size() > state_limit)
            throw StateLimitExceeded("ruling sweep exceeded " + std::to_string(state_limit) + " states");
        cur = std::move(next);
    }
    for (size_t i = 0; i < cur.size(); ++i) {
        const auto& w = cur.weight(i);
        for (size_t j = 0; j < w.size(); ++j) out.polynomial.add_term(cur.lo(i) + int(j) - s.right_cusps + 1, w[j]);
    }
    return out;
}

namespace {

struct Enumerator {
    const Sweep& s;
    int d;
    size_t limit;
    std::vector<NormalRuling> found;
    std::vector<int> chosen;
    std::vector<std::unordered_set<Key, KeyHash>> dead;
    size_t dead_total = 0;
    static constexpr size_t kDeadCap = size_t(1) << 21;

    // Returns true if some completion exists below (k, key).
    bool dfs(size_t k, const Key& key) {
        if (found.size() >= limit) return true;
        if (k == s.f.size()) {
            found.push_back({chosen, d});
            return true;
        }
        if (dead[k].count(key)) return false;
        bool any = false;
        Key nk;
        if (step_pass(s.f.events[k], key, nk)) any |= dfs(k + 1, nk);
        if (found.size() < limit && switch_allowed(s, k, key)) {
            chosen.push_back(int(k));
            any |= dfs(k + 1, key);
            chosen.pop_back();
        }
        if (!any && dead_total < kDeadCap) dead_total += dead[k].insert(key).second;
        return any;
    }
};

}  // namespace

std::vector<NormalRuling> enumerate_rulings(const FrontWord& f, int d, size_t limit) {
    Sweep s(f, d);
    Enumerator en{s, d, limit, {}, {}, std::vector<std::unordered_set<Key, KeyHash>>(f.size() + 1), 0};
    if (limit > 0) en.dfs(0, empty_key());
    return en.found;
}

bool exists_two_rulings(const FrontWord& f, int d, std::vector<NormalRuling>* witness) {
    std::vector<NormalRuling> r = enumerate_rulings(f, d, 2);
    if (witness) *witness = r;
    return r.size() == 2;
}

bool validate_ruling(const FrontWord& f, const NormalRuling& r, std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    try {
        f.validate();
        check_grading(f, r.d);
    } catch (const std::exception& e) {
        return fail(e.what());
    }
    MaslovPotential mp;
    if (r.d != 1) mp = maslov_potential(f);
    std::vector<bool> sw(f.size(), false);
    for (int k : r.switches) {
        if (k < 0 || k >= int(f.size()) || f.events[k].kind != 'X') return fail("switch at a non-crossing event");
        if (sw[k]) return fail("repeated switch");
        sw[k] = true;
    }
    std::vector<int> rho;  // 0-based partner per position
    for (size_t k = 0; k < f.size(); ++k) {
        const Event& e = f.events[k];
        int a = e.pos - 1;
        if (e.kind == 'L') {
            for (int& v : rho)
                if (v >= a) v += 2;
            rho.insert(rho.begin() + a, {a + 1, a});
        } else if (e.kind == 'R') {
            if (rho[a] != a + 1) return fail("right cusp at event " + std::to_string(k) + " joins unpaired strands");
            rho.erase(rho.begin() + a, rho.begin() + a + 2);
            for (int& v : rho)
                if (v > a + 1) v -= 2;
        } else {
            if (rho[a] == a + 1) return fail("crossing at event " + std::to_string(k) + " between paired strands");
            if (sw[k]) {
                int j = rho[a], l = rho[a + 1];
                bool normal = (l < j && j < a) || (a + 1 < l && l < j) || (j < a && a + 1 < l);
                if (!normal) return fail("switch at event " + std::to_string(k) + " is not normal");
                if (r.d != 1) {
                    int deg = crossing_degree(f, mp, k);
                    if (r.d == 0 ? deg != 0 : deg % r.d != 0)
                        return fail("switch at event " + std::to_string(k) + " violates the grading");
                }
            } else {
                auto sigma = [&](int v) { return v == a ? a + 1 : v == a + 1 ? a : v; };
                std::swap(rho[a], rho[a + 1]);
                for (int& v : rho) v = sigma(v);
            }
        }
    }
    return true;
}

int ruling_exponent(const FrontWord& f, const NormalRuling& r) {
    int c = 0;
    for (auto& e : f.events) c += e.kind == 'R';
    return int(r.switches.size()) - c + 1;
}

namespace {

size_t gadget_length(const Event& e, int n) {
    size_t half = size_t(n) * (n - 1) / 2;
    return e.kind == 'X' ? size_t(n) * n : half + n;
}

void require_ruling(const FrontWord& f, const NormalRuling& r) {
    std::string why;
    if (!validate_ruling(f, r, &why)) throw std::invalid_argument("not a ruling of the front: " + why);
}

}  // namespace

Delta2Ruling construct_delta2_ruling(const FrontWord& f, const NormalRuling& r1, const NormalRuling& r2) {
    if (trace_front(f).components != 1) throw std::invalid_argument("delta2 construction needs a knot front");
    NormalRuling a{r1.switches, 1}, b{r2.switches, 1};
    require_ruling(f, a);
    require_ruling(f, b);
    if (a == b) throw std::invalid_argument("delta2 construction needs two distinct rulings");
    std::vector<bool> sa(f.size(), false), sb(f.size(), false);
    for (int k : a.switches) sa[k] = true;
    for (int k : b.switches) sb[k] = true;
    int c = -1;
    for (int k = int(f.size()) - 1; k >= 0 && c < 0; --k)
        if (sa[k] != sb[k]) c = k;
    if (sa[c]) {
        std::swap(a, b);
        std::swap(sa, sb);
    }

    Delta2Ruling out;
    out.crossing = c;
    std::vector<Event>& ev = out.front.events;
    for (int k = 0; k < int(f.size()); ++k) {
        const Event& e = f.events[k];
        int base = 2 * (e.pos - 1);
        if (e.kind == 'L') {
            ev.insert(ev.end(), {{'L', base + 1}, {'L', base + 3}, {'X', base + 2}});
            continue;
        }
        if (e.kind == 'R') {
            ev.insert(ev.end(), {{'X', base + 2}, {'R', base + 1}, {'R', base + 1}});
            continue;
        }
        int w = int(ev.size());
        if (k == c) {
            // W, S, the half twist on the 2-copy of the under strand, N, E
            ev.insert(ev.end(), {{'X', base + 2}, {'X', base + 3}, {'X', base + 2}, {'X', base + 1}, {'X', base + 2}});
            out.ruling.switches.push_back(w);
            out.ruling.switches.push_back(w + 1);
            continue;
        }
        // W, N, S, E as in the plain 2-copy
        ev.insert(ev.end(), {{'X', base + 2}, {'X', base + 1}, {'X', base + 3}, {'X', base + 2}});
        if (sa[k]) out.ruling.switches.push_back(w + 1);
        if (sb[k]) out.ruling.switches.push_back(w + 2);
    }
    std::sort(out.ruling.switches.begin(), out.ruling.switches.end());
    out.front.validate();
    return out;
}

NormalRuling ncopy_ruling(const FrontWord& f, const NormalRuling& r, int n) {
    if (n < 1) throw std::invalid_argument("ncopy_ruling needs n >= 1");
    NormalRuling base{r.switches, 1};
    require_ruling(f, base);
    if (n == 1) return base;
    InsertionSite site = default_insertion(f);
    std::vector<bool> sw(f.size(), false);
    for (int k : base.switches) sw[k] = true;
    NormalRuling out;
    size_t at = 0;
    size_t half = size_t(n) * (n - 1) / 2;
    for (size_t k = 0; k < f.size(); ++k) {
        if (int(k) == site.slice) at += size_t(n) * (n - 1);  // the full twist
        if (sw[k])
            for (int a = 0; a < n; ++a) out.switches.push_back(int(at + half + a));
        at += gadget_length(f.events[k], n);
    }
    return out;
}

}  // namespace legcord
