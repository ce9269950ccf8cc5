#pragma once

/**
 * Bundle points over representative base pairs and the operator actions.
 *
 * A base pair holds two fresh symbols (u_i, v_i); distinct pairs use disjoint
 * symbols and therefore lie in distinct multiplicative-group orbits. A point of
 * the U-sort bundle is q^outer * u(q^label * u, v) and dually for the V-sort.
 * Line-bundle points absorb the outer Gamma factor into an arbitrary nonzero
 * scalar x, which makes equality of classes a record comparison.
 *
 * Generator actions on U-sort points (label shift k, fiber value q^k*u):
 *   U    : x -> x * q^k * u          label k
 *   U^-1 : x -> x * q^-k * u^-1     label k
 *   V    : x -> x * v               label k-1
 *   V^-1 : x -> x * v^-1            label k+1
 * and on V-sort points (label shift m, fiber value q^m*v):
 *   U    : x -> x * u               label m+1
 *   U^-1 : x -> x * u^-1            label m-1
 *   V    : x -> x * q^m * v         label m
 *   V^-1 : x -> x * q^-m * v^-1    label m
 * The sort and base never change; the line bundle is closed under the actions.
 */

#include <cstdlib>
#include <map>
#include <string>
#include <utility>

#include "qtorus/qalgebra.hpp"
#include "qtorus/scalar.hpp"

namespace qtorus {

enum class Sort { U, V };

struct BasePoint {
    Symbol u, v;
    Sort sort = Sort::U;
    bool operator==(const BasePoint& o) const {
        return u == o.u && v == o.v && sort == o.sort;
    }
    bool operator!=(const BasePoint& o) const { return !(*this == o); }
};

// One representative pair and its two sorted views.
struct BasePair {
    Symbol u, v;
    BasePoint upoint() const { return BasePoint{u, v, Sort::U}; }
    BasePoint vpoint() const { return BasePoint{u, v, Sort::V}; }
    bool operator==(const BasePair& o) const { return u == o.u && v == o.v; }
};

// q^outer * u(q^label * u, v): the 4-tuple reading of a Gamma-bundle point.
struct GammaBundlePoint {
    int outer = 0;
    int label = 0;
    BasePoint base;
};

// Canonical class representative with the outer Gamma factor absorbed into x.
struct LineBundlePoint {
    Scalar x; // nonzero
    int label = 0;
    BasePoint base;
    friend bool operator==(const LineBundlePoint& a, const LineBundlePoint& b) {
        return a.label == b.label && a.base == b.base && a.x == b.x;
    }
    friend bool operator!=(const LineBundlePoint& a, const LineBundlePoint& b) {
        return !(a == b);
    }
};

// Image under the bundle projection: the fiber value and the class of the
// complementary coordinate (represented by its base symbol).
struct PiImage {
    Scalar fiber;
    Symbol coset_rep;
    friend bool operator==(const PiImage& a, const PiImage& b) {
        return a.coset_rep == b.coset_rep && a.fiber == b.fiber;
    }
    friend bool operator!=(const PiImage& a, const PiImage& b) { return !(a == b); }
};

// Forgets the outer exponent; U-sort points map to (q^label * u, [v]).
inline PiImage project_pi(const GammaBundlePoint& p) {
    Scalar q_shift = Scalar::q_power(p.label);
    if (p.base.sort == Sort::U)
        return PiImage{q_shift * Scalar::symbol(p.base.u), p.base.v};
    return PiImage{q_shift * Scalar::symbol(p.base.v), p.base.u};
}

// Canonical representative of the E-class of (x, q^outer * point(label)).
// Two 4-tuples are E-equivalent iff their outputs coincide.
inline LineBundlePoint e_normalize(const Scalar& x, int outer, int label, const BasePoint& base) {
    if (x.is_zero()) throw DomainError("line-bundle point with zero scalar");
    return LineBundlePoint{x * Scalar::q_power(outer), label, base};
}

inline LineBundlePoint to_line(const GammaBundlePoint& p) {
    return e_normalize(Scalar::integer(1), p.outer, p.label, p.base);
}

inline LineBundlePoint scalar_mul_line(const Scalar& s, const LineBundlePoint& p) {
    if (s.is_zero()) throw DomainError("scaling a line-bundle point by zero");
    return LineBundlePoint{s * p.x, p.label, p.base};
}

inline LineBundlePoint act(Gen g, const LineBundlePoint& p) {
    Scalar u = Scalar::symbol(p.base.u);
    Scalar v = Scalar::symbol(p.base.v);
    int k = p.label;
    if (p.base.sort == Sort::U) {
        switch (g) {
        case Gen::U: return {p.x * Scalar::q_power(k) * u, k, p.base};
        case Gen::Uinv: return {p.x * Scalar::q_power(-k) * u.inv(), k, p.base};
        case Gen::V: return {p.x * v, k - 1, p.base};
        case Gen::Vinv: return {p.x * v.inv(), k + 1, p.base};
        }
    } else {
        switch (g) {
        case Gen::U: return {p.x * u, k + 1, p.base};
        case Gen::Uinv: return {p.x * u.inv(), k - 1, p.base};
        case Gen::V: return {p.x * Scalar::q_power(k) * v, k, p.base};
        case Gen::Vinv: return {p.x * Scalar::q_power(-k) * v.inv(), k, p.base};
        }
    }
    throw ConfigError("unreachable generator");
}

inline LineBundlePoint act_word(const Word& w, LineBundlePoint p) {
    // Operators compose right-to-left: the last letter of the word acts first.
    for (auto it = w.rbegin(); it != w.rend(); ++it) p = act(*it, p);
    return p;
}

// The scalar factor and label reached by U^a V^b from a basis vector at the
// given label (V^b acts first).
inline std::pair<Scalar, int> monomial_action(int upow, int vpow, int label, const BasePoint& base) {
    LineBundlePoint p{Scalar::integer(1), label, base};
    Gen vstep = vpow >= 0 ? Gen::V : Gen::Vinv;
    for (int i = 0; i < std::abs(vpow); ++i) p = act(vstep, p);
    Gen ustep = upow >= 0 ? Gen::U : Gen::Uinv;
    for (int i = 0; i < std::abs(upow); ++i) p = act(ustep, p);
    return {p.x, p.label};
}

// Finite formal combination of basis labels over one base point.
struct ModuleVector {
    BasePoint base;
    std::map<int, Scalar> coeffs; // label -> nonzero coefficient

    static ModuleVector zero(const BasePoint& b) { return ModuleVector{b, {}}; }

    static ModuleVector basis(const BasePoint& b, int label) {
        ModuleVector m{b, {}};
        m.coeffs.emplace(label, Scalar::integer(1));
        return m;
    }

    static ModuleVector from_point(const LineBundlePoint& p) {
        ModuleVector m{p.base, {}};
        m.coeffs.emplace(p.label, p.x);
        return m;
    }

    bool is_zero() const { return coeffs.empty(); }

    void add_term(int label, const Scalar& c) {
        if (c.is_zero()) return;
        auto it = coeffs.find(label);
        if (it == coeffs.end()) {
            coeffs.emplace(label, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) coeffs.erase(it);
        }
    }

    friend ModuleVector operator+(const ModuleVector& a, const ModuleVector& b) {
        if (a.base != b.base) throw SortError("adding module vectors over different bases");
        ModuleVector r(a);
        for (const auto& [k, c] : b.coeffs) r.add_term(k, c);
        return r;
    }

    ModuleVector scaled(const Scalar& s) const {
        ModuleVector r{base, {}};
        for (const auto& [k, c] : coeffs) r.add_term(k, s * c);
        return r;
    }

    bool eq(const ModuleVector& o) const {
        if (base != o.base) return false;
        ModuleVector d(*this);
        for (const auto& [k, c] : o.coeffs) d.add_term(k, -c);
        return d.is_zero();
    }
    friend bool operator==(const ModuleVector& a, const ModuleVector& b) { return a.eq(b); }
    friend bool operator!=(const ModuleVector& a, const ModuleVector& b) { return !a.eq(b); }
};

// Single generator, extended linearly.
inline ModuleVector act_vector(Gen g, const ModuleVector& m) {
    ModuleVector out{m.base, {}};
    for (const auto& [k, c] : m.coeffs) {
        LineBundlePoint p = act(g, LineBundlePoint{c, k, m.base});
        out.add_term(p.label, p.x);
    }
    return out;
}

// Linear extension of the monomial actions to algebra elements.
inline ModuleVector act_module(const AlgebraElement& w, const ModuleVector& m) {
    ModuleVector out{m.base, {}};
    for (const auto& [key, c] : w.terms()) {
        for (const auto& [k, x] : m.coeffs) {
            auto [factor, label] = monomial_action(key.first, key.second, k, m.base);
            out.add_term(label, c * x * factor);
        }
    }
    return out;
}

} // namespace qtorus
