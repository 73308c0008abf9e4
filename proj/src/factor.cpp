#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <random>
#include <stdexcept>

#include "legcord/algebra.hpp"

namespace legcord {

namespace {

using Big = boost::multiprecision::cpp_int;
using BigPoly = std::vector<Big>;

constexpr uint64_t kP = (uint64_t(1) << 61) - 1;

uint64_t mulmod(uint64_t a, uint64_t b) {
    unsigned __int128 r = (unsigned __int128)a * b;
    uint64_t lo = uint64_t(r & kP), hi = uint64_t(r >> 61);
    uint64_t s = lo + hi;
    return s >= kP ? s - kP : s;
}
uint64_t addmod(uint64_t a, uint64_t b) {
    uint64_t s = a + b;
    return s >= kP ? s - kP : s;
}
uint64_t submod(uint64_t a, uint64_t b) { return a >= b ? a - b : a + kP - b; }
uint64_t powmod(uint64_t a, uint64_t e) {
    uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a);
        a = mulmod(a, a);
        e >>= 1;
    }
    return r;
}
uint64_t invmod(uint64_t a) { return powmod(a, kP - 2); }
uint64_t tomod(int64_t x) {
    int64_t r = x % int64_t(kP);
    return r < 0 ? uint64_t(r + int64_t(kP)) : uint64_t(r);
}

// Polynomials over F_P, ascending, trimmed.
using MP = std::vector<uint64_t>;

void mtrim(MP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
MP mmul(const MP& a, const MP& b) {
    if (a.empty() || b.empty()) return {};
    MP r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = addmod(r[i + j], mulmod(a[i], b[j]));
    return r;
}
MP msub(MP a, const MP& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (size_t i = 0; i < b.size(); ++i) a[i] = submod(a[i], b[i]);
    mtrim(a);
    return a;
}
void mdivmod(const MP& a, const MP& b, MP* q, MP* r) {
    MP rem = a;
    MP quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    uint64_t inv = invmod(b.back());
    for (int i = int(rem.size()) - int(b.size()); i >= 0; --i) {
        uint64_t f = mulmod(rem[i + b.size() - 1], inv);
        quo[i] = f;
        if (!f) continue;
        for (size_t j = 0; j < b.size(); ++j) rem[i + j] = submod(rem[i + j], mulmod(f, b[j]));
    }
    mtrim(rem);
    mtrim(quo);
    if (q) *q = quo;
    if (r) *r = rem;
}
MP mmod(const MP& a, const MP& b) {
    MP r;
    mdivmod(a, b, nullptr, &r);
    return r;
}
MP monic(MP a) {
    uint64_t inv = invmod(a.back());
    for (auto& x : a) x = mulmod(x, inv);
    return a;
}
MP mgcd(MP a, MP b) {
    while (!b.empty()) {
        MP r = mmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.empty() ? a : monic(a);
}
MP mpowmod(MP base, uint64_t e, const MP& m) {
    MP r{1};
    base = mmod(base, m);
    while (e) {
        if (e & 1) r = mmod(mmul(r, base), m);
        base = mmod(mmul(base, base), m);
        e >>= 1;
    }
    return r;
}
MP mderiv(const MP& a) {
    MP r;
    for (size_t i = 1; i < a.size(); ++i) r.push_back(mulmod(a[i], i % kP));
    mtrim(r);
    return r;
}

// Distinct-degree then equal-degree factorization of a monic squarefree polynomial.
std::vector<MP> factor_mod(const MP& f, std::mt19937_64& rng) {
    std::vector<std::pair<MP, int>> ddf;
    MP rest = f;
    MP x{0, 1};
    MP h = x;
    for (int d = 1; 2 * d <= int(rest.size()) - 1; ++d) {
        h = mpowmod(h, kP, rest);
        MP g = mgcd(rest, msub(h, x));
        if (g.size() > 1) {
            ddf.push_back({g, d});
            MP q;
            mdivmod(rest, g, &q, nullptr);
            rest = q;
            h = mmod(h, rest);
        }
    }
    if (rest.size() > 1) ddf.push_back({rest, int(rest.size()) - 1});

    std::vector<MP> out;
    std::vector<std::pair<MP, int>> work = ddf;
    while (!work.empty()) {
        auto [g, d] = work.back();
        work.pop_back();
        if (int(g.size()) - 1 == d) {
            out.push_back(monic(g));
            continue;
        }
        while (true) {
            MP a(g.size() - 1);
            for (auto& c : a) c = rng() % kP;
            mtrim(a);
            if (a.empty()) continue;
            MP t = a;
            MP acc{1};
            for (int i = 0; i < d; ++i) {
                acc = mmod(mmul(acc, t), g);
                t = mpowmod(t, kP, g);
            }
            // a^{(P^d - 1) / 2} = (a^{1 + P + ... + P^{d-1}})^{(P - 1) / 2}
            MP b = mpowmod(acc, (kP - 1) / 2, g);
            MP s = msub(b, MP{1});
            MP c = mgcd(g, s);
            if (c.size() > 1 && c.size() < g.size()) {
                MP q;
                mdivmod(g, c, &q, nullptr);
                work.push_back({c, d});
                work.push_back({q, d});
                break;
            }
        }
    }
    return out;
}

Big big_abs(const Big& x) { return x < 0 ? Big(-x) : x; }

void btrim(BigPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
Big bcontent(const BigPoly& a) {
    Big g = 0;
    for (auto& x : a) g = boost::multiprecision::gcd(g, big_abs(x));
    return g;
}
BigPoly bprim(BigPoly a) {
    btrim(a);
    if (a.empty()) return a;
    Big g = bcontent(a);
    if (a.back() < 0) g = -g;
    for (auto& x : a) x /= g;
    return a;
}
// Pseudo-remainder of a by b.
BigPoly bprem(BigPoly a, const BigPoly& b) {
    Big lb = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        Big la = a.back();
        size_t sh = a.size() - b.size();
        for (auto& x : a) x *= lb;
        for (size_t j = 0; j < b.size(); ++j) a[sh + j] -= la * b[j];
        btrim(a);
    }
    return a;
}
BigPoly bgcd(BigPoly a, BigPoly b) {
    a = bprim(a);
    b = bprim(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        BigPoly r = bprim(bprem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigPoly to_big(const IntPoly& p) { return BigPoly(p.coeffs().begin(), p.coeffs().end()); }
IntPoly from_big(const BigPoly& p) {
    std::vector<int64_t> r;
    for (auto& x : p) {
        if (x > Big(INT64_MAX) || x < Big(INT64_MIN)) throw std::overflow_error("factor coefficient overflow");
        r.push_back(static_cast<int64_t>(x));
    }
    return IntPoly(std::move(r));
}

bool divides_safely(const IntPoly& b, const IntPoly& a, IntPoly* q) {
    try {
        return IntPoly::divides(b, a, q);
    } catch (const std::overflow_error&) {
        return false;
    }
}

// Factor a primitive squarefree polynomial with positive leading coefficient and degree >= 1.
std::vector<IntPoly> factor_squarefree(const IntPoly& f) {
    double norm = 0;
    for (int64_t c : f.coeffs()) norm += double(c) * double(c);
    double bound = std::ldexp(std::sqrt(norm), f.degree()) * double(std::abs(f.lead()));
    if (2 * bound >= double(kP) / 4) throw std::overflow_error("polynomial too large for modular factorization");
    if (f.degree() == 1) return {f};

    MP fm;
    for (int64_t c : f.coeffs()) fm.push_back(tomod(c));
    mtrim(fm);
    if (mgcd(fm, mderiv(fm)).size() > 1) throw std::runtime_error("unlucky modulus in factorization");
    std::mt19937_64 rng(12345);
    std::vector<MP> mods = factor_mod(monic(fm), rng);

    auto lift = [&](const MP& m) {
        std::vector<int64_t> c;
        for (uint64_t x : m) c.push_back(x > kP / 2 ? -int64_t(kP - x) : int64_t(x));
        return IntPoly(std::move(c));
    };

    std::vector<IntPoly> result;
    IntPoly rest = f;
    size_t k = 1;
    while (2 * k <= mods.size()) {
        bool found = false;
        std::vector<int> idx(k);
        for (size_t i = 0; i < k; ++i) idx[i] = int(i);
        while (true) {
            uint64_t lc = tomod(rest.lead());
            MP prod{lc};
            for (int i : idx) prod = mmul(prod, mods[i]);
            IntPoly cand = lift(prod).primitive();
            bool small = true;
            for (int64_t c : cand.coeffs()) small = small && double(c < 0 ? -c : c) <= bound;
            IntPoly q;
            if (small && divides_safely(cand, rest, &q)) {
                result.push_back(cand);
                rest = q;
                for (int i = int(k) - 1; i >= 0; --i) mods.erase(mods.begin() + idx[i]);
                found = true;
                break;
            }
            int i = int(k) - 1;
            while (i >= 0 && idx[i] == int(mods.size() - k + i)) --i;
            if (i < 0) break;
            ++idx[i];
            for (size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++k;
    }
    if (rest.degree() >= 1) result.push_back(rest.primitive());
    return result;
}

}  // namespace

Factorization factor(const IntPoly& p) {
    if (p.is_zero()) throw std::domain_error("cannot factor the zero polynomial");
    Factorization out;
    out.unit = p.lead() < 0 ? -p.content() : p.content();
    IntPoly f = p.primitive();
    if (f.degree() == 0) return out;

    BigPoly fb = to_big(f);
    BigPoly d = to_big(f.derivative());
    BigPoly g = bgcd(fb, d);
    IntPoly sqfree = f;
    if (g.size() > 1) {
        IntPoly q;
        if (!IntPoly::divides(from_big(g), f, &q)) throw std::logic_error("gcd does not divide");
        sqfree = q.primitive();
    }
    std::vector<IntPoly> irr = factor_squarefree(sqfree);
    std::sort(irr.begin(), irr.end());
    IntPoly rest = f;
    for (auto& h : irr) {
        int m = 0;
        IntPoly q;
        while (IntPoly::divides(h, rest, &q)) {
            rest = q;
            ++m;
        }
        out.factors.push_back({h, m});
    }
    if (rest.degree() != 0) throw std::logic_error("factorization incomplete");
    out.unit *= rest[0];
    return out;
}

}  // namespace legcord
