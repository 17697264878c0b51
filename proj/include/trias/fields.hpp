#pragma once

#include <cstdint>
#include <string>

#include "rational.hpp"

namespace trias {

// ---------------------------------------------------------------- GaussRat

// Element of Q(i): re + im*i with exact rational components.
struct GaussRat {
    Rational re;
    Rational im;

    GaussRat() = default;
    GaussRat(Rational r) : re(std::move(r)) {}
    GaussRat(long r) : re(r) {}
    GaussRat(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

    static GaussRat i() { return GaussRat(Rational(0), Rational(1)); }

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool is_one() const { return re.is_one() && im.is_zero(); }
    bool is_real() const { return im.is_zero(); }

    GaussRat operator-() const { return {-re, -im}; }
    GaussRat operator+(const GaussRat& o) const { return {re + o.re, im + o.im}; }
    GaussRat operator-(const GaussRat& o) const { return {re - o.re, im - o.im}; }
    GaussRat operator*(const GaussRat& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussRat inv() const {
        if (is_zero()) throw DivisionByZeroError("zero has no inverse");
        Rational n = re * re + im * im;
        return {re / n, -(im / n)};
    }
    GaussRat operator/(const GaussRat& o) const { return *this * o.inv(); }

    bool operator==(const GaussRat& o) const { return re == o.re && im == o.im; }
    bool operator!=(const GaussRat& o) const { return !(*this == o); }

    // human-readable form ("0", "1/2", "i", "-2*i", "1+i", "1/2-3/4*i")
    std::string str() const {
        if (im.is_zero()) return re.str();
        std::string s;
        if (!re.is_zero()) s = re.str();
        std::string it;
        if (im.is_one()) it = "i";
        else if (im == Rational(-1)) it = "-i";
        else it = im.str() + "*i";
        if (s.empty()) return it;
        if (it[0] == '-') return s + it;
        return s + "+" + it;
    }
};

// ---------------------------------------------------------------- FpElem

inline bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Residue in F_p, p a prime < 2^16 so products stay in 32 bits.
struct FpElem {
    uint32_t v = 0;
    uint32_t p = 0;

    FpElem() = default;
    FpElem(uint32_t value, uint32_t prime) : v(value % prime), p(prime) {}

    static FpElem of(long value, uint32_t prime) {
        long r = value % (long)prime;
        if (r < 0) r += prime;
        return FpElem((uint32_t)r, prime);
    }

    bool is_zero() const { return v == 0; }
    bool is_one() const { return v == 1; }

    void check(const FpElem& o) const {
        if (p != o.p) throw FieldMismatchError("mixed moduli " + std::to_string(p) + " and " + std::to_string(o.p));
    }

    FpElem operator-() const { return FpElem(v == 0 ? 0 : p - v, p); }
    FpElem operator+(const FpElem& o) const { check(o); return FpElem(v + o.v >= p ? v + o.v - p : v + o.v, p); }
    FpElem operator-(const FpElem& o) const { check(o); return *this + (-o); }
    FpElem operator*(const FpElem& o) const { check(o); return FpElem((uint32_t)(((uint64_t)v * o.v) % p), p); }
    FpElem inv() const {
        if (v == 0) throw DivisionByZeroError("zero has no inverse");
        // extended Euclid
        int64_t a = v, m = p, x0 = 0, x1 = 1;
        int64_t b = m;
        while (a > 1) {
            int64_t q = a / b;
            int64_t t = b; b = a % b; a = t;
            t = x0; x0 = x1 - q * x0; x1 = t;
        }
        if (x1 < 0) x1 += m;
        return FpElem((uint32_t)x1, p);
    }
    FpElem operator/(const FpElem& o) const { check(o); return *this * o.inv(); }

    bool operator==(const FpElem& o) const { return v == o.v && p == o.p; }
    bool operator!=(const FpElem& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v); }
};

// ---------------------------------------------------------------- descriptor

enum class FieldKind { Qi, Fp };

struct FieldDescriptor {
    FieldKind kind = FieldKind::Qi;
    uint32_t p = 0; // present iff kind == Fp

    static FieldDescriptor qi() { return {FieldKind::Qi, 0}; }
    static FieldDescriptor fp(uint32_t prime) {
        if (prime < 2 || prime >= (1u << 16) || !is_prime_u32(prime))
            throw DomainError("modulus must be a prime in [2, 2^16): got " + std::to_string(prime));
        return {FieldKind::Fp, prime};
    }

    bool operator==(const FieldDescriptor& o) const { return kind == o.kind && p == o.p; }
    bool operator!=(const FieldDescriptor& o) const { return !(*this == o); }

    std::string str() const { return kind == FieldKind::Qi ? "Qi" : "Fp:" + std::to_string(p); }

    // "Qi" or "Fp:<p>"
    static FieldDescriptor parse(const std::string& s) {
        if (s == "Qi") return qi();
        if (s.rfind("Fp:", 0) == 0) {
            const std::string digits = s.substr(3);
            if (digits.empty()) throw ParseError("missing modulus after Fp:", 3);
            for (size_t i = 0; i < digits.size(); ++i)
                if (digits[i] < '0' || digits[i] > '9') throw ParseError("bad modulus digit", 3 + i);
            unsigned long val = std::stoul(digits);
            return fp((uint32_t)val);
        }
        throw ParseError("expected Qi or Fp:<p>, got '" + s + "'", 0);
    }
};

// ------------------------------------------------------- generic helpers

inline GaussRat zero_like(const GaussRat&) { return GaussRat(); }
inline GaussRat one_like(const GaussRat&) { return GaussRat(1); }
inline FpElem zero_like(const FpElem& x) { return FpElem(0, x.p); }
inline FpElem one_like(const FpElem& x) { return FpElem(1, x.p); }

// reduction of an exact rational into F_p; defined iff the denominator is a unit
inline FpElem fp_of(const Rational& r, uint32_t p) {
    BigInt n = r.num() % p, d = r.den() % p;
    if (n < 0) n += p;
    if (d == 0) throw DivisionByZeroError("denominator vanishes modulo " + std::to_string(p));
    FpElem num((uint32_t)(unsigned long)n, p), den((uint32_t)(unsigned long)d, p);
    return num * den.inv();
}

inline FpElem fp_of(const GaussRat& c, uint32_t p) {
    if (!c.is_real()) throw DomainError("coefficient with imaginary part has no image in F_p");
    return fp_of(c.re, p);
}

// component text grammar: "-?digits" or "-?digits/digits", stored reduced
inline std::string render_component(const Rational& r) { return r.str(); }

inline Rational parse_component(const std::string& text) {
    Rational r = Rational::parse(text);
    return r;
}

// scalar text for CLI parameter values: Qi = "re" or "re,im"; Fp = integer in [0,p)
inline GaussRat parse_qi_param(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) return GaussRat(parse_component(text));
    return GaussRat(parse_component(text.substr(0, comma)), parse_component(text.substr(comma + 1)));
}

inline FpElem parse_fp_param(const std::string& text, uint32_t p) {
    for (size_t i = 0; i < text.size(); ++i)
        if (text[i] < '0' || text[i] > '9') throw ParseError("expected integer in [0, p)", i);
    if (text.empty()) throw ParseError("empty scalar", 0);
    unsigned long v = std::stoul(text);
    if (v >= p) throw ParseError("value " + text + " out of range for F_" + std::to_string(p), 0);
    return FpElem((uint32_t)v, p);
}

} // namespace trias
