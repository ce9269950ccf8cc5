#pragma once

/**
 * The algebra generated by U, U^-1, V, V^-1 with VU = qUV and the inverse
 * cancellations. Every word has a unique normal form c * U^a * V^b with c a
 * power of q; sums of such monomials with scalar coefficients form the algebra
 * elements. The four derived swap rules are forced by VU = qUV and
 * invertibility:
 *   VU -> qUV,  VU^-1 -> q^-1 U^-1 V,  V^-1 U -> q^-1 U V^-1,  V^-1 U^-1 -> q U^-1 V^-1.
 */

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qtorus/scalar.hpp"

namespace qtorus {

enum class Gen { U, Uinv, V, Vinv };

inline Gen inverse(Gen g) {
    switch (g) {
    case Gen::U: return Gen::Uinv;
    case Gen::Uinv: return Gen::U;
    case Gen::V: return Gen::Vinv;
    case Gen::Vinv: return Gen::V;
    }
    return Gen::U;
}

inline const char* gen_str(Gen g) {
    switch (g) {
    case Gen::U: return "U";
    case Gen::Uinv: return "U^-1";
    case Gen::V: return "V";
    case Gen::Vinv: return "V^-1";
    }
    return "?";
}

// The empty word denotes I.
using Word = std::vector<Gen>;

struct QMonomial {
    Scalar coeff; // never zero
    int upow = 0;
    int vpow = 0;
};

// Unique normal form q^e U^a V^b of a word. Appending a letter to a normal
// form U^a V^b only has to swap it past V^b: V^b U = q^b U V^b and
// V^b U^-1 = q^-b U^-1 V^b.
inline QMonomial normalize_word(const Word& w) {
    long long qexp = 0;
    int a = 0, b = 0;
    for (Gen g : w) {
        switch (g) {
        case Gen::U: qexp += b; ++a; break;
        case Gen::Uinv: qexp -= b; --a; break;
        case Gen::V: ++b; break;
        case Gen::Vinv: --b; break;
        }
    }
    return QMonomial{Scalar::q_power(qexp), a, b};
}

class AlgebraElement {
public:
    // (U power, V power) -> coefficient; no zero coefficients stored.
    using Key = std::pair<int, int>;
    using Terms = std::map<Key, Scalar>;

    AlgebraElement() = default;

    static AlgebraElement zero() { return AlgebraElement{}; }

    static AlgebraElement identity() { return from_scalar(Scalar::integer(1)); }

    static AlgebraElement from_scalar(const Scalar& c) {
        AlgebraElement x;
        if (!c.is_zero()) x.terms_.emplace(Key{0, 0}, c);
        return x;
    }

    static AlgebraElement from_monomial(const QMonomial& m) {
        AlgebraElement x;
        if (!m.coeff.is_zero()) x.terms_.emplace(Key{m.upow, m.vpow}, m.coeff);
        return x;
    }

    static AlgebraElement generator(Gen g) {
        return from_monomial(normalize_word(Word{g}));
    }

    static AlgebraElement from_word(const Word& w) {
        return from_monomial(normalize_word(w));
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
        AlgebraElement r(x);
        for (const auto& [k, c] : y.terms_) r.add_term(k, c);
        return r;
    }

    friend AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
        AlgebraElement r(x);
        for (const auto& [k, c] : y.terms_) r.add_term(k, -c);
        return r;
    }

    // (c1 U^a1 V^b1)(c2 U^a2 V^b2) = c1 c2 q^(b1*a2) U^(a1+a2) V^(b1+b2)
    friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
        AlgebraElement r;
        for (const auto& [kx, cx] : x.terms_)
            for (const auto& [ky, cy] : y.terms_)
                r.add_term(Key{kx.first + ky.first, kx.second + ky.second},
                           cx * cy * Scalar::q_power(static_cast<long long>(kx.second) * ky.first));
        return r;
    }

    AlgebraElement scaled(const Scalar& c) const {
        AlgebraElement r;
        if (c.is_zero()) return r;
        for (const auto& [k, t] : terms_) r.add_term(k, c * t);
        return r;
    }

    bool eq(const AlgebraElement& o) const { return (*this - o).is_zero(); }
    friend bool operator==(const AlgebraElement& x, const AlgebraElement& y) { return x.eq(y); }
    friend bool operator!=(const AlgebraElement& x, const AlgebraElement& y) { return !x.eq(y); }

    // Terms in descending (a,b) order; U^2 + (q-1)*U*V - V^2 style.
    std::string str(const SymbolTable& table) const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            Scalar c = it->second;
            bool neg = leading_negative(c);
            if (neg) c = -c;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            out += term_str(it->first, c, table);
        }
        return out;
    }

private:
    Terms terms_;

    void add_term(const Key& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static bool leading_negative(const Scalar& c) {
        return !c.num().empty() && c.num().rbegin()->second < 0;
    }

    static std::string term_str(const Key& k, const Scalar& c, const SymbolTable& table) {
        std::string word;
        if (k.first != 0) {
            word += "U";
            if (k.first != 1) word += "^" + std::to_string(k.first);
        }
        if (k.second != 0) {
            if (!word.empty()) word += "*";
            word += "V";
            if (k.second != 1) word += "^" + std::to_string(k.second);
        }
        if (word.empty()) return c.str(table);
        bool one = c == Scalar::integer(1);
        if (one) return word;
        std::string cs = c.str(table);
        if (c.num().size() > 1) cs = "(" + cs + ")";
        return cs + "*" + word;
    }
};

} // namespace qtorus
