#pragma once

/**
 * Exact arithmetic in Q(q, u0, v0, ...): rational functions whose numerator and
 * denominator are sparse Laurent polynomials with big-integer coefficients over
 * the session symbols. q and the base coordinates are independent indeterminates,
 * so q is automatically not a root of unity and every identity checked here is a
 * Laurent-polynomial identity.
 *
 * Canonical form kept by every constructor and operator:
 *   - zero is 0/1;
 *   - the denominator has no monomial factor (its componentwise minimum exponent
 *     is zero; any Laurent shift is pushed into the numerator);
 *   - the common integer content of numerator and denominator is 1;
 *   - the denominator's leading coefficient is positive.
 * There is no multivariate GCD: equality is decided by cross-multiplication.
 */

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "qtorus/errors.hpp"
#include "qtorus/symbols.hpp"

namespace qtorus {

using Int = boost::multiprecision::cpp_int;

// Exponents per symbol id, trailing zeros trimmed so the width adapts as the
// symbol table grows. Negative entries are first-class (Laurent).
using Exponents = std::vector<int>;

namespace detail {

inline void trim(Exponents& e) {
    while (!e.empty() && e.back() == 0) e.pop_back();
}

inline Exponents mono_mul(const Exponents& a, const Exponents& b) {
    Exponents r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

inline Exponents mono_neg(const Exponents& a) {
    Exponents r(a);
    for (auto& e : r) e = -e;
    return r;
}

using Poly = std::map<Exponents, Int>;

inline bool poly_is_zero(const Poly& p) { return p.empty(); }

inline Poly poly_one() { return Poly{{Exponents{}, Int(1)}}; }

inline void poly_add_term(Poly& p, const Exponents& e, const Int& c) {
    if (c == 0) return;
    auto it = p.find(e);
    if (it == p.end()) {
        p.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) p.erase(it);
    }
}

inline Poly poly_add(const Poly& a, const Poly& b) {
    Poly r(a);
    for (const auto& [e, c] : b) poly_add_term(r, e, c);
    return r;
}

inline Poly poly_neg(const Poly& a) {
    Poly r(a);
    for (auto& [e, c] : r) c = -c;
    return r;
}

inline Poly poly_sub(const Poly& a, const Poly& b) { return poly_add(a, poly_neg(b)); }

inline Poly poly_mul(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) poly_add_term(r, mono_mul(ea, eb), ca * cb);
    return r;
}

// Componentwise minimum exponent over all monomials (the monomial content).
inline Exponents poly_content(const Poly& p) {
    std::size_t width = 0;
    for (const auto& [e, c] : p) width = std::max(width, e.size());
    Exponents content(width, 0);
    for (std::size_t i = 0; i < width; ++i) {
        bool first = true;
        for (const auto& [e, c] : p) {
            int ei = i < e.size() ? e[i] : 0;
            if (first || ei < content[i]) content[i] = ei;
            first = false;
        }
    }
    trim(content);
    return content;
}

inline Poly poly_shift(const Poly& p, const Exponents& delta) {
    if (delta.empty()) return p;
    Poly r;
    for (const auto& [e, c] : p) r.emplace(mono_mul(e, delta), c);
    return r;
}

} // namespace detail

class Scalar {
public:
    using Poly = detail::Poly;

    Scalar() : num_(), den_(detail::poly_one()) {}

    static Scalar integer(const Int& n) {
        Scalar s;
        if (n != 0) s.num_.emplace(Exponents{}, n);
        return s;
    }
    static Scalar integer(long long n) { return integer(Int(n)); }

    static Scalar rational(const Int& p, const Int& q) {
        if (q == 0) throw DomainError("rational with zero denominator");
        Scalar s;
        if (p != 0) s.num_.emplace(Exponents{}, p);
        s.den_ = Poly{{Exponents{}, q}};
        s.normalize();
        return s;
    }

    static Scalar monomial(const Int& coeff, Exponents exps) {
        detail::trim(exps);
        Scalar s;
        if (coeff != 0) s.num_.emplace(std::move(exps), coeff);
        return s;
    }

    static Scalar symbol(Symbol sym) {
        Exponents e(static_cast<std::size_t>(sym.id) + 1, 0);
        e.back() = 1;
        return monomial(Int(1), std::move(e));
    }

    // q^n; q is symbol id 0 in every session.
    static Scalar q_power(long long n) {
        if (n == 0) return integer(1);
        return monomial(Int(1), Exponents{static_cast<int>(n)});
    }

    bool is_zero() const { return num_.empty(); }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        Scalar r;
        r.num_ = detail::poly_add(detail::poly_mul(a.num_, b.den_),
                                  detail::poly_mul(b.num_, a.den_));
        r.den_ = detail::poly_mul(a.den_, b.den_);
        r.normalize();
        return r;
    }

    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        Scalar r;
        r.num_ = detail::poly_sub(detail::poly_mul(a.num_, b.den_),
                                  detail::poly_mul(b.num_, a.den_));
        r.den_ = detail::poly_mul(a.den_, b.den_);
        r.normalize();
        return r;
    }

    Scalar operator-() const {
        Scalar r;
        r.num_ = detail::poly_neg(num_);
        r.den_ = den_;
        return r;
    }

    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        Scalar r;
        r.num_ = detail::poly_mul(a.num_, b.num_);
        r.den_ = detail::poly_mul(a.den_, b.den_);
        r.normalize();
        return r;
    }

    Scalar inv() const {
        if (is_zero()) throw DomainError("inversion of zero");
        Scalar r;
        r.num_ = den_;
        r.den_ = num_;
        r.normalize();
        return r;
    }

    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    Scalar pow(long long n) const {
        if (n < 0) return inv().pow(-n);
        Scalar acc = integer(1);
        Scalar base = *this;
        while (n > 0) {
            if (n & 1) acc *= base;
            base *= base;
            n >>= 1;
        }
        return acc;
    }

    // Identity of rational functions, via num(a)*den(b) - num(b)*den(a) == 0.
    bool eq(const Scalar& o) const {
        return detail::poly_is_zero(detail::poly_sub(detail::poly_mul(num_, o.den_),
                                                     detail::poly_mul(o.num_, den_)));
    }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.eq(b); }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !a.eq(b); }

    // n such that the value is exactly the monomial q^n, with coefficient 1 and
    // no other symbols; empty otherwise (q is transcendental, so e.g. 2*q^5 is
    // never a power of q).
    std::optional<long long> gamma_power() const {
        if (num_.size() != 1 || den_ != detail::poly_one()) return std::nullopt;
        const auto& [e, c] = *num_.begin();
        if (c != 1 || e.size() > 1) return std::nullopt;
        return e.empty() ? 0 : e[0];
    }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    // Canonical text: monomials in descending lexicographic exponent order, no
    // spaces, q^-2*u0^3 style, a fraction bar only when the denominator is not 1.
    std::string str(const SymbolTable& table) const {
        if (is_zero()) return "0";
        std::string n = poly_str(num_, table);
        if (den_ == detail::poly_one()) return n;
        std::string d = poly_str(den_, table);
        if (num_.size() > 1) n = "(" + n + ")";
        if (den_.size() > 1) d = "(" + d + ")";
        return n + "/" + d;
    }

private:
    Poly num_, den_; // den_ is never zero

    void normalize() {
        if (detail::poly_is_zero(den_)) throw DomainError("division by zero");
        if (num_.empty()) {
            den_ = detail::poly_one();
            return;
        }
        Exponents content = detail::poly_content(den_);
        if (!content.empty()) {
            Exponents shift = detail::mono_neg(content);
            num_ = detail::poly_shift(num_, shift);
            den_ = detail::poly_shift(den_, shift);
        }
        Int g = 0;
        for (const auto& [e, c] : num_) g = boost::multiprecision::gcd(g, c);
        for (const auto& [e, c] : den_) g = boost::multiprecision::gcd(g, c);
        g = boost::multiprecision::abs(g);
        if (g > 1) {
            for (auto& [e, c] : num_) c /= g;
            for (auto& [e, c] : den_) c /= g;
        }
        if (den_.rbegin()->second < 0) {
            num_ = detail::poly_neg(num_);
            den_ = detail::poly_neg(den_);
        }
    }

    static std::string mono_str(const Exponents& e, const Int& coeff,
                                const SymbolTable& table) {
        Int c = boost::multiprecision::abs(coeff);
        std::string out;
        bool printed_coeff = false;
        if (c != 1 || e.empty()) {
            out += c.str();
            printed_coeff = true;
        }
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (printed_coeff || !out.empty()) out += "*";
            out += table.name(Symbol{static_cast<int>(i)});
            if (e[i] != 1) out += "^" + std::to_string(e[i]);
            printed_coeff = true;
        }
        return out;
    }

    static std::string poly_str(const Poly& p, const SymbolTable& table) {
        std::string out;
        for (auto it = p.rbegin(); it != p.rend(); ++it) {
            const auto& [e, c] = *it;
            if (out.empty()) {
                if (c < 0) out += "-";
            } else {
                out += c < 0 ? "-" : "+";
            }
            out += mono_str(e, c, table);
        }
        return out;
    }
};

// Replaces every occurrence of a symbol by a scalar value, in numerator and
// denominator alike. The value must be invertible when negative exponents of
// the symbol occur.
inline Scalar substitute(const Scalar& s, Symbol sym, const Scalar& value) {
    auto eval_poly = [&](const Scalar::Poly& p) {
        Scalar acc = Scalar::integer(0);
        for (const auto& [e, c] : p) {
            int ex = sym.id < static_cast<int>(e.size()) ? e[static_cast<std::size_t>(sym.id)] : 0;
            Exponents rest(e);
            if (sym.id < static_cast<int>(rest.size())) rest[static_cast<std::size_t>(sym.id)] = 0;
            Scalar term = Scalar::monomial(c, std::move(rest));
            if (ex != 0) term *= value.pow(ex);
            acc += term;
        }
        return acc;
    };
    return eval_poly(s.num()) / eval_poly(s.den());
}

} // namespace qtorus
