#include "legcord/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace legcord {

int64_t checked_add(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in polynomial addition");
    return r;
}

int64_t checked_mul(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in polynomial product");
    return r;
}

namespace {

void append_monomial(std::ostringstream& os, bool first, int64_t c, const std::string& body) {
    bool neg = c < 0;
    uint64_t mag = neg ? uint64_t(0) - uint64_t(c) : uint64_t(c);
    if (first) {
        if (neg) os << "-";
    } else {
        os << (neg ? " - " : " + ");
    }
    if (body.empty() || mag != 1) os << mag;
    os << body;
}

std::string power(char var, int e) {
    if (e == 0) return "";
    std::string s(1, var);
    if (e != 1) s += "^" + std::to_string(e);
    return s;
}

struct Lexer {
    const std::string& s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++i;
            return true;
        }
        return false;
    }
    bool digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
    int64_t number() {
        skip();
        size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw std::invalid_argument("expected number in polynomial: " + s);
        return std::stoll(s.substr(start, i - start));
    }
    int exponent() {
        if (!accept('^')) return 1;
        bool neg = false;
        if (accept('-')) neg = true;
        else accept('+');
        int64_t e = number();
        return static_cast<int>(neg ? -e : e);
    }
    [[noreturn]] void fail() { throw std::invalid_argument("malformed polynomial: " + s); }
};

// Parses "c v1^e1 v2^e2 ..." monomials joined by + and -, calling sink(coeff, exps).
template <class Sink>
void parse_terms(const std::string& text, const std::string& vars, Sink sink) {
    Lexer lx{text};
    if (lx.done()) lx.fail();
    bool first = true;
    while (!lx.done()) {
        int sign = 1;
        if (lx.accept('+')) {
            if (first) lx.fail();
        } else if (lx.accept('-')) {
            sign = -1;
        } else if (!first) {
            lx.fail();
        }
        first = false;
        int64_t c = 1;
        bool any = false;
        if (lx.digit()) {
            c = lx.number();
            any = true;
        }
        std::vector<int> exps(vars.size(), 0);
        while (true) {
            size_t k = vars.find(lx.peek());
            if (lx.peek() == '\0' || k == std::string::npos) break;
            ++lx.i;
            exps[k] += lx.exponent();
            any = true;
        }
        if (!any) lx.fail();
        sink(sign * c, exps);
    }
}

}  // namespace

LaurentPoly::LaurentPoly(int64_t c) {
    if (c != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(int exp, int64_t coeff) {
    LaurentPoly p;
    p.add_term(exp, coeff);
    return p;
}

int64_t LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exp, int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(exp, coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

int LaurentPoly::degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    return terms_.rbegin()->first;
}

int LaurentPoly::min_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    return terms_.begin()->first;
}

int64_t LaurentPoly::eval_at_one() const {
    int64_t s = 0;
    for (auto& [e, c] : terms_) s = checked_add(s, c);
    return s;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e + k, c);
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, checked_mul(c, -1));
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, checked_mul(c, -1));
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r;
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) r.add_term(ea + eb, checked_mul(ca, cb));
    return r;
}

std::string LaurentPoly::to_string(char var) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        append_monomial(os, first, it->second, power(var, it->first));
        first = false;
    }
    return os.str();
}

LaurentPoly LaurentPoly::parse(const std::string& text, char var) {
    LaurentPoly p;
    Lexer probe{text};
    if (!probe.done() && probe.peek() == '0' && text.find_first_not_of(" 0") == std::string::npos) return p;
    parse_terms(text, std::string(1, var), [&](int64_t c, const std::vector<int>& e) { p.add_term(e[0], c); });
    return p;
}

LaurentPoly2::LaurentPoly2(int64_t c) {
    if (c != 0) terms_[{0, 0}] = c;
}

LaurentPoly2 LaurentPoly2::monomial(int a_exp, int z_exp, int64_t coeff) {
    LaurentPoly2 p;
    p.add_term(a_exp, z_exp, coeff);
    return p;
}

LaurentPoly2 LaurentPoly2::from_z(const LaurentPoly& p, int a_exp) {
    LaurentPoly2 r;
    for (auto& [e, c] : p.terms()) r.add_term(a_exp, e, c);
    return r;
}

void LaurentPoly2::add_term(int a_exp, int z_exp, int64_t coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(std::make_pair(a_exp, z_exp), coeff);
    if (!inserted) {
        it->second = checked_add(it->second, coeff);
        if (it->second == 0) terms_.erase(it);
    }
}

int LaurentPoly2::max_a_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    return terms_.rbegin()->first.first;
}

int LaurentPoly2::min_a_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    return terms_.begin()->first.first;
}

LaurentPoly2 LaurentPoly2::operator-() const {
    LaurentPoly2 r;
    for (auto& [k, c] : terms_) r.terms_.emplace(k, checked_mul(c, -1));
    return r;
}

LaurentPoly2& LaurentPoly2::operator+=(const LaurentPoly2& o) {
    for (auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

LaurentPoly2& LaurentPoly2::operator-=(const LaurentPoly2& o) {
    for (auto& [k, c] : o.terms_) add_term(k.first, k.second, checked_mul(c, -1));
    return *this;
}

LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b) {
    LaurentPoly2 r;
    for (auto& [ka, ca] : a.terms_)
        for (auto& [kb, cb] : b.terms_) r.add_term(ka.first + kb.first, ka.second + kb.second, checked_mul(ca, cb));
    return r;
}

LaurentPoly2 LaurentPoly2::invert_a() const {
    LaurentPoly2 r;
    for (auto& [k, c] : terms_) r.terms_.emplace(std::make_pair(-k.first, k.second), c);
    return r;
}

std::string LaurentPoly2::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<std::pair<int, int>, int64_t>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](auto& x, auto& y) { return x.first > y.first; });
    std::ostringstream os;
    bool first = true;
    for (auto& [k, c] : v) {
        append_monomial(os, first, c, power('a', k.first) + power('z', k.second));
        first = false;
    }
    return os.str();
}

LaurentPoly2 LaurentPoly2::parse(const std::string& text) {
    LaurentPoly2 p;
    if (text.find_first_not_of(" 0") == std::string::npos && text.find('0') != std::string::npos) return p;
    parse_terms(text, "az", [&](int64_t c, const std::vector<int>& e) { p.add_term(e[0], e[1], c); });
    return p;
}

LaurentPoly coeff_of_a(const LaurentPoly2& p, int k) {
    LaurentPoly r;
    for (auto& [key, c] : p.terms())
        if (key.first == k) r.add_term(key.second, c);
    return r;
}

bool coeff_dominates(const LaurentPoly& f, const LaurentPoly& p) {
    for (auto& [e, c] : p.terms())
        if (c < 0) return false;
    LaurentPoly diff = f - p;
    for (auto& [e, c] : diff.terms())
        if (c < 0) return false;
    return true;
}

IntPoly::IntPoly(std::vector<int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int64_t IntPoly::content() const {
    int64_t g = 0;
    for (int64_t x : c_) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

IntPoly IntPoly::primitive() const {
    if (c_.empty()) return *this;
    int64_t g = content();
    if (lead() < 0) g = -g;
    std::vector<int64_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] / g;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::reciprocal() const {
    std::vector<int64_t> r(c_.rbegin(), c_.rend());
    size_t k = 0;
    while (k < r.size() && r[k] == 0) ++k;
    r.erase(r.begin(), r.begin() + k);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<int64_t> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = checked_mul(c_[i], static_cast<int64_t>(i));
    return IntPoly(std::move(r));
}

int64_t IntPoly::eval(int64_t t) const {
    int64_t v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = checked_add(checked_mul(v, t), *it);
    return v;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<int64_t> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < r.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<int64_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = checked_mul(c_[i], -1);
    return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<int64_t> r(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = checked_add(r[i + j], checked_mul(a.c_[i], b.c_[j]));
    return IntPoly(std::move(r));
}

bool operator<(const IntPoly& a, const IntPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

bool IntPoly::divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient) {
    if (b.is_zero()) throw std::domain_error("division by zero polynomial");
    if (a.is_zero()) {
        if (quotient) *quotient = IntPoly();
        return true;
    }
    if (a.degree() < b.degree()) return false;
    std::vector<int64_t> rem = a.c_;
    std::vector<int64_t> q(a.c_.size() - b.c_.size() + 1, 0);
    int64_t lb = b.lead();
    for (int i = static_cast<int>(q.size()) - 1; i >= 0; --i) {
        int64_t top = rem[i + b.degree()];
        if (top % lb != 0) return false;
        int64_t f = top / lb;
        q[i] = f;
        if (f == 0) continue;
        for (int j = 0; j <= b.degree(); ++j) rem[i + j] = checked_add(rem[i + j], checked_mul(-f, b.c_[j]));
    }
    for (int64_t x : rem)
        if (x != 0) return false;
    if (quotient) *quotient = IntPoly(std::move(q));
    return true;
}

LaurentPoly IntPoly::to_laurent(int shift) const {
    LaurentPoly p;
    for (size_t i = 0; i < c_.size(); ++i) p.add_term(static_cast<int>(i) + shift, c_[i]);
    return p;
}

std::string IntPoly::to_string(char var) const { return to_laurent().to_string(var); }

}  // namespace legcord
