#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "fields.hpp"

namespace trias {

// sparse exponent vector, var index -> exponent (> 0)
struct Monomial {
    std::map<uint32_t, uint32_t> e;

    uint32_t degree() const {
        uint32_t d = 0;
        for (auto& [v, x] : e) d += x;
        return d;
    }
    bool operator==(const Monomial& o) const { return e == o.e; }
};

// graded order; ties broken by the exponent of the largest variable index,
// so higher-indexed variables dominate ("later variables are bigger")
struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const {
        uint32_t da = a.degree(), db = b.degree();
        if (da != db) return da < db;
        auto ia = a.e.rbegin(), ib = b.e.rbegin();
        while (ia != a.e.rend() && ib != b.e.rend()) {
            if (ia->first != ib->first) return ia->first < ib->first;
            if (ia->second != ib->second) return ia->second < ib->second;
            ++ia;
            ++ib;
        }
        return ib != b.e.rend();
    }
};

using VarNames = std::function<std::string(uint32_t)>;

// multivariate polynomial with Gaussian-rational coefficients
class Poly {
public:
    Poly() = default;

    static Poly constant(GaussRat c) {
        Poly p;
        if (!c.is_zero()) p.t_[Monomial{}] = std::move(c);
        return p;
    }
    static Poly constant(long n) { return constant(GaussRat(n)); }

    static Poly var(uint32_t idx, uint32_t exp = 1) {
        Poly p;
        if (exp == 0) return constant(1);
        Monomial m;
        m.e[idx] = exp;
        p.t_[m] = GaussRat(1);
        return p;
    }

    bool is_zero() const { return t_.empty(); }
    bool is_constant() const { return t_.empty() || (t_.size() == 1 && t_.begin()->first.e.empty()); }

    GaussRat constant_value() const {
        if (t_.empty()) return GaussRat();
        return t_.begin()->second;
    }

    uint32_t degree() const { return t_.empty() ? 0 : t_.rbegin()->first.degree(); }

    uint32_t degree_in(uint32_t v) const {
        uint32_t d = 0;
        for (auto& [m, c] : t_) {
            auto it = m.e.find(v);
            if (it != m.e.end()) d = std::max(d, it->second);
        }
        return d;
    }

    bool is_multilinear() const {
        for (auto& [m, c] : t_)
            for (auto& [v, x] : m.e)
                if (x > 1) return false;
        return true;
    }

    std::set<uint32_t> support() const {
        std::set<uint32_t> s;
        for (auto& [m, c] : t_)
            for (auto& [v, x] : m.e) s.insert(v);
        return s;
    }

    const std::map<Monomial, GaussRat, MonoLess>& terms() const { return t_; }

    Poly operator-() const {
        Poly r;
        for (auto& [m, c] : t_) r.t_[m] = -c;
        return r;
    }

    Poly operator+(const Poly& o) const {
        Poly r = *this;
        for (auto& [m, c] : o.t_) r.add_term(m, c);
        return r;
    }
    Poly operator-(const Poly& o) const {
        Poly r = *this;
        for (auto& [m, c] : o.t_) r.add_term(m, -c);
        return r;
    }
    Poly operator*(const Poly& o) const {
        Poly r;
        for (auto& [ma, ca] : t_)
            for (auto& [mb, cb] : o.t_) {
                Monomial m = ma;
                for (auto& [v, x] : mb.e) m.e[v] += x;
                r.add_term(m, ca * cb);
            }
        return r;
    }
    Poly scaled(const GaussRat& c) const {
        Poly r;
        if (c.is_zero()) return r;
        for (auto& [m, k] : t_) r.t_[m] = k * c;
        return r;
    }

    bool operator==(const Poly& o) const { return t_ == o.t_; }
    bool operator!=(const Poly& o) const { return !(t_ == o.t_); }

    GaussRat leading_coeff() const {
        if (t_.empty()) return GaussRat();
        return t_.rbegin()->second;
    }
    Monomial leading_monomial() const {
        if (t_.empty()) return Monomial{};
        return t_.rbegin()->first;
    }

    Poly monic() const {
        if (t_.empty()) return *this;
        return scaled(leading_coeff().inv());
    }

    // coefficient of v^k as a polynomial in the remaining variables
    Poly coeff_of(uint32_t v, uint32_t k) const {
        Poly r;
        for (auto& [m, c] : t_) {
            auto it = m.e.find(v);
            uint32_t x = it == m.e.end() ? 0 : it->second;
            if (x != k) continue;
            Monomial m2 = m;
            m2.e.erase(v);
            r.add_term(m2, c);
        }
        return r;
    }

    Poly substitute(uint32_t v, const Poly& repl) const {
        Poly r;
        for (auto& [m, c] : t_) {
            auto it = m.e.find(v);
            if (it == m.e.end()) {
                r.add_term(m, c);
                continue;
            }
            uint32_t x = it->second;
            Monomial m2 = m;
            m2.e.erase(v);
            Poly base;
            base.t_[m2] = c;
            Poly pw = constant(1);
            for (uint32_t i = 0; i < x; ++i) pw = pw * repl;
            r = r + base * pw;
        }
        return r;
    }

    Poly substitute_all(const std::map<uint32_t, Poly>& subs) const {
        Poly r = *this;
        for (auto& [v, repl] : subs) r = r.substitute(v, repl);
        return r;
    }

    // full evaluation; every support variable must be assigned
    template <class K>
    K evaluate(const std::map<uint32_t, K>& assign, const K& zero,
               const std::function<K(const GaussRat&)>& lift) const {
        K acc = zero;
        for (auto& [m, c] : t_) {
            K term = lift(c);
            for (auto& [v, x] : m.e) {
                auto it = assign.find(v);
                if (it == assign.end()) throw DomainError("unassigned variable in polynomial evaluation");
                for (uint32_t i = 0; i < x; ++i) term = term * it->second;
            }
            acc = acc + term;
        }
        return acc;
    }

    GaussRat eval_qi(const std::map<uint32_t, GaussRat>& assign) const {
        return evaluate<GaussRat>(assign, GaussRat(), [](const GaussRat& c) { return c; });
    }

    FpElem eval_fp(const std::map<uint32_t, FpElem>& assign, uint32_t p) const {
        return evaluate<FpElem>(assign, FpElem(0, p), [p](const GaussRat& c) { return fp_of(c, p); });
    }

    std::string render(const VarNames& names) const {
        if (t_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
            const Monomial& m = it->first;
            const GaussRat& c = it->second;
            std::string mono;
            for (auto& [v, x] : m.e) {
                if (!mono.empty()) mono += "*";
                mono += names(v);
                if (x > 1) mono += "^" + std::to_string(x);
            }
            bool neg = c.is_real() && c.re < Rational(0);
            GaussRat mag = neg ? -c : c;
            std::string cs;
            if (mono.empty()) cs = mag.str();
            else if (mag.is_one()) cs = "";
            else if (mag.is_real()) cs = mag.str() + "*";
            else cs = "(" + mag.str() + ")*";
            if (first) {
                if (neg) out += "-";
                first = false;
            } else {
                out += neg ? " - " : " + ";
            }
            out += cs + mono;
        }
        return out;
    }

    // stable content key for dedupe, independent of variable naming
    std::string key() const {
        std::string s;
        for (auto& [m, c] : t_) {
            for (auto& [v, x] : m.e) s += "v" + std::to_string(v) + "^" + std::to_string(x) + ".";
            s += "=" + c.str() + ";";
        }
        return s;
    }

private:
    void add_term(const Monomial& m, const GaussRat& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = t_.try_emplace(m, c);
        if (!inserted) {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    std::map<Monomial, GaussRat, MonoLess> t_;
};

} // namespace trias
