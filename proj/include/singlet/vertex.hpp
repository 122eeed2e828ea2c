#ifndef SINGLET_VERTEX_HPP
#define SINGLET_VERTEX_HPP

#include <limits>
#include <map>
#include <string>
#include <vector>

#include "singlet/errors.hpp"
#include "singlet/fock.hpp"

namespace singlet {

/* Lattice vertex operators with the trivial two-cocycle:
       Y(e_g, x) = E-(g,x) E+(g,x) e_g x^<g,mu>,
       E-(g,x) = exp( sum_{k>0} g(-k) x^k / k ),
       E+(g,x) = exp( -sum_{k>0} g(k) x^-k / k ),
   where g = (j_g/2p) alpha, mu = (j_mu/2p) alpha, <g,mu> = j_g j_mu / 2p.
   Exponents of x lie in <g,mu> + Z; a mode index j is supported iff
   -j-1 falls in that set.  Modes are extracted by weight bookkeeping:
       wt(e_g_j v) = wt(v) + wt(e_g) - j - 1. */

inline Rational momentum_pairing(long p, long j_g, long j_mu) {
    return Rational(j_g * j_mu) / (2 * p);
}

/* Laurent coefficients of a vertex-operator expression applied to a fixed
   vector: exponent = base + offset, offset integer. */
template <class V>
struct VSeries {
    Rational base = 0;
    std::map<long, V> terms;

    void add(long offset, const V& v) {
        if (v.is_zero()) return;
        auto it = terms.find(offset);
        if (it == terms.end()) {
            terms.emplace(offset, v);
        } else {
            it->second = it->second + v;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

/* exp( c * alpha(k) * x^{sk} / |k| )-type factor application.
   k > 0 annihilates (finite on each vector); k < 0 creates, truncated so the
   offset stays <= hi. */
template <class V>
void apply_exponential_mode(VSeries<V>& s, long k, const ExactScalar& coeff_over_k,
                            long x_step, long hi) {
    std::map<long, V> extra;
    for (const auto& [off, vec] : s.terms) {
        V w = vec;
        ExactScalar c(1);
        for (long j = 1;; ++j) {
            w = mode_act(k, w);
            if (w.is_zero()) break;
            long off2 = off + j * x_step;
            if (x_step > 0 && off2 > hi) break;
            c *= coeff_over_k / ExactScalar(Rational(j));
            V t = c * w;
            auto it = extra.find(off2);
            if (it == extra.end()) extra.emplace(off2, t);
            else it->second = it->second + t;
        }
    }
    for (auto& [off, vec] : extra) s.add(off, vec);
}

template <class V>
void apply_E_plus_factorized(VSeries<V>& s, long p, const Rational& g_scale) {
    /* E+(g,x): factors exp(-g(k) x^-k / k), k = 1..max degree present. */
    int dmax = 0;
    for (const auto& [off, vec] : s.terms) dmax = std::max(dmax, max_degree_of(vec));
    for (long k = 1; k <= dmax; ++k)
        apply_exponential_mode(s, k, ExactScalar(-g_scale / k), -k,
                               std::numeric_limits<long>::max());
}

template <class V>
void apply_E_minus_factorized(VSeries<V>& s, long p, const Rational& g_scale, long hi) {
    for (long k = 1;; ++k) {
        bool reachable = false;
        for (const auto& [off, vec] : s.terms)
            if (off + k <= hi) { reachable = true; break; }
        if (!reachable) break;
        apply_exponential_mode(s, -k, ExactScalar(g_scale / k), k, hi);
    }
}

/* Full lattice-operator series Y(e_g, x) v on the integer offset window
   [lo, hi] relative to base = <g, mu>.  All kept coefficients are exact. */
inline VSeries<FockVector> vertex_series(long j_g, const FockVector& v, long lo, long hi) {
    if (v.is_zero()) throw IndexOutOfRange("vertex_series: zero input vector");
    long p = v.p();
    VSeries<FockVector> s;
    s.base = momentum_pairing(p, j_g, v.sector());
    s.terms.emplace(0, v);
    Rational g_scale = Rational(j_g) / (2 * p);
    apply_E_plus_factorized(s, p, g_scale);
    /* translation e_g: sector shift by j_g (trivial cocycle, coefficient 1) */
    std::map<long, FockVector> shifted;
    for (const auto& [off, vec] : s.terms) {
        FockVector w(p, vec.sector() + j_g);
        for (const auto& [m, c] : vec.terms()) w.add_term(m, c);
        shifted.emplace(off, w);
    }
    s.terms = std::move(shifted);
    apply_E_minus_factorized(s, p, g_scale, hi);
    for (auto it = s.terms.begin(); it != s.terms.end();)
        it = (it->first < lo || it->first > hi) ? s.terms.erase(it) : std::next(it);
    return s;
}

/* Single mode e_g_j v.  The support condition is that -j-1-<g,mu> is an
   integer; modes outside the support lattice are rejected. */
inline FockVector vertex_mode(long j_g, const Rational& j, const FockVector& v) {
    if (v.is_zero()) return v;
    long p = v.p();
    Rational base = momentum_pairing(p, j_g, v.sector());
    Rational off = -j - 1 - base;
    if (!is_integer(off))
        throw UnsupportedMode("vertex_mode: index " + fraction_string(j) +
                              " unsupported on sector " + std::to_string(v.sector()));
    long K = to_long(off);
    VSeries<FockVector> s = vertex_series(j_g, v, K, K);
    auto it = s.terms.find(K);
    if (it == s.terms.end()) return FockVector(p, v.sector() + j_g);
    return it->second;
}

/* Normally ordered dressing for descendants:
       Y(alpha(-n1)...alpha(-nr) e_g, x) = :prod_i B_{n_i}(x) Y(e_g, x):
   with B_n(x) = (1/(n-1)!) d^{n-1} alpha(x), split as
       B_n^-(x)  = sum_{k>=n} binom(k-1, n-1) alpha(-k) x^{k-n}
       B_n^{+0}(x) = sum_{m>=0} (-1)^{n-1} binom(m+n-1, n-1) alpha(m) x^{-m-n}.
   The normal ordering distributes each factor to either side of the core:
   annihilation/zero parts act first (right), creation parts last (left). */

template <class V>
void apply_annihilation_dressing(VSeries<V>& s, long n) {
    std::map<long, V> out;
    for (const auto& [off, vec] : s.terms) {
        long mmax = max_degree_of(vec);
        for (long m = 0; m <= mmax; ++m) {
            V w = mode_act(m, vec);
            if (w.is_zero()) continue;
            Rational coeff = ((n - 1) % 2 == 0 ? 1 : -1) * binomial(Rational(m + n - 1), n - 1);
            V t = ExactScalar(coeff) * w;
            long off2 = off - m - n;
            auto it = out.find(off2);
            if (it == out.end()) out.emplace(off2, t);
            else it->second = it->second + t;
        }
    }
    s.terms = std::move(out);
}

template <class V>
void apply_creation_dressing(VSeries<V>& s, long n, long hi) {
    std::map<long, V> out;
    for (const auto& [off, vec] : s.terms) {
        for (long k = n; off + (k - n) <= hi; ++k) {
            V w = ExactScalar(binomial(Rational(k - 1), static_cast<long>(n - 1))) *
                  mode_act(-k, vec);
            long off2 = off + k - n;
            auto it = out.find(off2);
            if (it == out.end()) out.emplace(off2, w);
            else it->second = it->second + w;
        }
    }
    s.terms = std::move(out);
}

/* Series of Y(u, x) v over an offset window, u a single Fock monomial with
   coefficient.  Core = lattice operator of u's sector (identity core when V
   is not a plain Fock vector; then u must be momentum-zero). */
template <class V>
VSeries<V> monomial_field_series(long p, long j_g, const Partition& parts,
                                 const ExactScalar& coeff, const V& v, long lo, long hi);

template <class V>
struct FieldCore {
    static VSeries<V> make(long p, long j_g, const V& v, long /*hi*/) {
        if (j_g != 0)
            throw UnsupportedMode("field_mode: nonzero-momentum state on a non-Fock module");
        VSeries<V> s;
        s.terms.emplace(0, v);
        return s;
    }
};

template <>
struct FieldCore<FockVector> {
    static VSeries<FockVector> make(long p, long j_g, const FockVector& v, long hi) {
        if (j_g == 0) {
            VSeries<FockVector> s;
            s.terms.emplace(0, v);
            return s;
        }
        /* leave room below hi for later creation dressing */
        return vertex_series(j_g, v, std::numeric_limits<long>::min() / 4, hi);
    }
};

template <class V>
VSeries<V> monomial_field_series(long p, long j_g, const Partition& parts,
                                 const ExactScalar& coeff, const V& v, long lo, long hi) {
    VSeries<V> total;
    total.base = momentum_pairing(p, j_g, v.sector());
    size_t r = parts.size();
    long hi_core = hi;
    for (int n : parts) hi_core += n; // creation factors can later lower need; be generous
    for (size_t mask = 0; mask < (size_t(1) << r); ++mask) {
        VSeries<V> s;
        s.terms.emplace(0, v);
        /* annihilation/zero side first, in fixed order */
        for (size_t i = 0; i < r; ++i)
            if (mask & (size_t(1) << i)) {
                apply_annihilation_dressing(s, parts[i]);
                if (s.terms.empty()) break;
            }
        if (s.terms.empty()) continue;
        /* core applies to each annihilation-side term independently */
        VSeries<V> built;
        for (const auto& [off0, vec0] : s.terms) {
            VSeries<V> c = FieldCore<V>::make(p, j_g, vec0, hi_core - off0);
            for (const auto& [off1, vec1] : c.terms) built.add(off0 + off1, vec1);
        }
        for (size_t i = 0; i < r; ++i)
            if (!(mask & (size_t(1) << i))) {
                apply_creation_dressing(built, parts[i], hi);
                if (built.terms.empty()) break;
            }
        for (const auto& [off, vec] : built.terms)
            if (off >= lo && off <= hi) total.add(off, coeff * vec);
    }
    return total;
}

/* General mode u_j v for u any Fock vector (all monomials share u's sector). */
template <class V>
V field_mode(const FockVector& u, const Rational& j, const V& v) {
    if (u.is_zero() || v.is_zero()) return ExactScalar(0) * v;
    long p = v.p();
    if (u.p() != p) throw SectorMismatch("field_mode: lattice mismatch");
    long j_g = u.sector();
    Rational base = momentum_pairing(p, j_g, v.sector());
    Rational off = -j - 1 - base;
    if (!is_integer(off))
        throw UnsupportedMode("field_mode: index " + fraction_string(j) +
                              " unsupported on sector " + std::to_string(v.sector()));
    long K = to_long(off);
    V out = ExactScalar(0) * v;
    bool have = false;
    for (const auto& [m, c] : u.terms()) {
        VSeries<V> s = monomial_field_series(p, j_g, m.parts, c, v, K, K);
        auto it = s.terms.find(K);
        if (it != s.terms.end()) {
            out = have ? out + it->second : it->second;
            have = true;
        }
    }
    return out;
}

/* Screening operators.
     Q      = (e_alpha)_0        : defined on every sector;
     Qtilde = (e_{-alpha/p})_0   : defined on sectors j with p | j;
     A_i    = (e_alpha)_{p-1-i}  : the power-compatible variant on sector
                                   bottoms e_{gamma_i - n alpha}. */
enum class ScreeningKind { Q, Qtilde, A };

struct ScreeningOp {
    ScreeningKind kind = ScreeningKind::Q;
    long i = 0; // only for A

    long sector_step(long p) const { return kind == ScreeningKind::Qtilde ? -2 : 2 * p; }
    Rational mode(long p) const {
        if (kind == ScreeningKind::A) return Rational(p - 1 - i);
        return 0;
    }
    std::string name() const {
        switch (kind) {
            case ScreeningKind::Q: return "Q";
            case ScreeningKind::Qtilde: return "Qtilde";
            default: return "A" + std::to_string(i);
        }
    }
};

inline FockVector screening_apply(const ScreeningOp& op, const FockVector& v) {
    if (v.is_zero()) return v;
    long p = v.p();
    if (op.kind == ScreeningKind::Qtilde && v.sector() % p != 0)
        throw UnsupportedMode("Qtilde: sector " + std::to_string(v.sector()) +
                              " not divisible by p");
    return vertex_mode(op.sector_step(p), op.mode(p), v);
}

inline FockVector Q_apply(const FockVector& v) { return screening_apply({ScreeningKind::Q, 0}, v); }
inline FockVector Qtilde_apply(const FockVector& v) {
    return screening_apply({ScreeningKind::Qtilde, 0}, v);
}
inline FockVector A_apply(long i, const FockVector& v) {
    return screening_apply({ScreeningKind::A, i}, v);
}

inline FockVector power_apply(const ScreeningOp& op, long n, const FockVector& v) {
    if (n < 0) throw IndexOutOfRange("power_apply: negative power");
    FockVector w = v;
    for (long k = 0; k < n && !w.is_zero(); ++k) w = screening_apply(op, w);
    return w;
}

} // namespace singlet

#endif
