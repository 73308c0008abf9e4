#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace legcord {

int64_t checked_add(int64_t a, int64_t b);
int64_t checked_mul(int64_t a, int64_t b);

// Integer Laurent polynomial in one variable, sparse.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(int64_t c);
    static LaurentPoly monomial(int exp, int64_t coeff = 1);

    const std::map<int, int64_t>& terms() const { return terms_; }
    int64_t coeff(int exp) const;
    void add_term(int exp, int64_t coeff);

    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    int min_degree() const;
    int64_t eval_at_one() const;

    LaurentPoly shifted(int k) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    // Canonical descending form, e.g. "z^12 + 12z^10 + 1".
    std::string to_string(char var = 'z') const;
    static LaurentPoly parse(const std::string& text, char var = 'z');

private:
    std::map<int, int64_t> terms_;
};

// Two-variable Laurent polynomial in a and z, keyed by (a-exponent, z-exponent).
class LaurentPoly2 {
public:
    LaurentPoly2() = default;
    LaurentPoly2(int64_t c);
    static LaurentPoly2 monomial(int a_exp, int z_exp, int64_t coeff = 1);
    static LaurentPoly2 from_z(const LaurentPoly& p, int a_exp = 0);

    const std::map<std::pair<int, int>, int64_t>& terms() const { return terms_; }
    void add_term(int a_exp, int z_exp, int64_t coeff);
    bool is_zero() const { return terms_.empty(); }
    int max_a_degree() const;
    int min_a_degree() const;

    LaurentPoly2 operator-() const;
    LaurentPoly2& operator+=(const LaurentPoly2& o);
    LaurentPoly2& operator-=(const LaurentPoly2& o);
    friend LaurentPoly2 operator+(LaurentPoly2 a, const LaurentPoly2& b) { return a += b; }
    friend LaurentPoly2 operator-(LaurentPoly2 a, const LaurentPoly2& b) { return a -= b; }
    friend LaurentPoly2 operator*(const LaurentPoly2& a, const LaurentPoly2& b);
    friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const LaurentPoly2& a, const LaurentPoly2& b) { return !(a == b); }

    // Substitute a -> a^-1.
    LaurentPoly2 invert_a() const;

    std::string to_string() const;
    static LaurentPoly2 parse(const std::string& text);

private:
    std::map<std::pair<int, int>, int64_t> terms_;
};

LaurentPoly coeff_of_a(const LaurentPoly2& p, int k);

// True iff every coefficient of f - p and of p is nonnegative.
bool coeff_dominates(const LaurentPoly& f, const LaurentPoly& p);

// Dense integer polynomial in t, ascending degree.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<int64_t> coeffs);
    static IntPoly constant(int64_t c) { return IntPoly(std::vector<int64_t>{c}); }

    const std::vector<int64_t>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    int64_t operator[](int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : 0; }
    int64_t lead() const { return c_.empty() ? 0 : c_.back(); }
    int64_t content() const;
    IntPoly primitive() const;
    IntPoly reciprocal() const;
    IntPoly derivative() const;
    int64_t eval(int64_t t) const;

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly operator-() const;
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const IntPoly& a, const IntPoly& b) { return !(a == b); }
    friend bool operator<(const IntPoly& a, const IntPoly& b);

    // Exact division over Z; returns false if b does not divide a.
    static bool divides(const IntPoly& b, const IntPoly& a, IntPoly* quotient);

    LaurentPoly to_laurent(int shift = 0) const;
    std::string to_string(char var = 't') const;

private:
    void trim();
    std::vector<int64_t> c_;
};

struct Factorization {
    int64_t unit = 1;
    std::vector<std::pair<IntPoly, int>> factors;  // primitive irreducibles, positive leading coeff
};

// Complete factorization over Z. Throws if coefficient bounds exceed the modular range.
Factorization factor(const IntPoly& p);

}  // namespace legcord
