#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

#include "errors.hpp"

namespace trias {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always stored reduced with positive denominator.
// cpp_rational would do the arithmetic, but keeping an explicit num/den pair makes
// the canonical-form invariant visible and testable.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long n) : num_(n), den_(1) {}
    Rational(const BigInt& n) : num_(n), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_one() const { return num_ == 1 && den_ == 1; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const { return Rational(raw(), -num_, den_); }
    Rational operator+(const Rational& o) const {
        return Rational(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }
    Rational operator-(const Rational& o) const {
        return Rational(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }
    Rational operator*(const Rational& o) const {
        return Rational(num_ * o.num_, den_ * o.den_);
    }
    Rational operator/(const Rational& o) const {
        if (o.num_ == 0) throw DivisionByZeroError("rational division by zero");
        return Rational(num_ * o.den_, den_ * o.num_);
    }
    Rational inv() const {
        if (num_ == 0) throw DivisionByZeroError("zero has no inverse");
        return Rational(den_, num_);
    }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    // total order (true numeric order), used only for canonical sorting
    bool operator<(const Rational& o) const { return num_ * o.den_ < o.num_ * den_; }

    // "-?digits" or "-?digits/digits"; must be the stored reduced form
    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    static Rational parse(const std::string& text) {
        size_t i = 0;
        auto digits = [&](size_t from) {
            size_t j = from;
            while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
            return j;
        };
        bool neg = false;
        if (i < text.size() && text[i] == '-') { neg = true; ++i; }
        size_t e = digits(i);
        if (e == i) throw ParseError("expected digits in rational", i);
        BigInt n(text.substr(i, e - i));
        BigInt d(1);
        i = e;
        if (i < text.size() && text[i] == '/') {
            ++i;
            size_t e2 = digits(i);
            if (e2 == i) throw ParseError("expected denominator digits", i);
            d = BigInt(text.substr(i, e2 - i));
            i = e2;
            if (d == 0) throw ParseError("zero denominator", i);
        }
        if (i != text.size()) throw ParseError("trailing characters in rational", i);
        if (neg) n = -n;
        return Rational(n, d);
    }

private:
    struct raw {};
    Rational(raw, BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {}

    void normalize() {
        if (den_ == 0) throw DivisionByZeroError("zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        if (num_ == 0) { den_ = 1; return; }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    BigInt num_;
    BigInt den_;
};

} // namespace trias
