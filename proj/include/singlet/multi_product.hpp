#ifndef SINGLET_MULTI_PRODUCT_HPP
#define SINGLET_MULTI_PRODUCT_HPP

#include <map>
#include <vector>

#include "singlet/dyson.hpp"
#include "singlet/fock.hpp"
#include "singlet/vertex.hpp"

namespace singlet {

/* Iterated products Y(e_g, x_1) ... Y(e_g, x_m) v in m formal variables,
   tracked exactly on per-variable exponent windows, against the closed
   product form
       prod_{i<j} (x_i - x_j)^{<g,g>} [prod_i E-(g,x_i)] [prod_i E+(g,x_i)]
           (translation by m g) prod_i x_i^{<g,mu>} v.
   The exponent of x_i lies in a fixed rational coset of Z on both sides. */

struct AbsWindow {
    Rational lo, hi; /* absolute exponent bounds, inclusive */
};

struct MultiSeries {
    std::vector<Rational> base;                  /* per-variable coset representative */
    std::map<std::vector<long>, FockVector> terms; /* keyed by integer offsets */
};

inline std::map<std::vector<Rational>, FockVector> absolute_terms(const MultiSeries& s) {
    std::map<std::vector<Rational>, FockVector> out;
    for (const auto& [ev, vec] : s.terms) {
        if (vec.is_zero()) continue;
        std::vector<Rational> key(ev.size());
        for (std::size_t i = 0; i < ev.size(); ++i) key[i] = s.base[i] + ev[i];
        out.emplace(std::move(key), vec);
    }
    return out;
}

/* Left side: operators applied innermost (x_m) first. */
inline MultiSeries iterated_vertex_series(long j_g, const FockVector& v,
                                          const std::vector<AbsWindow>& w) {
    int m = static_cast<int>(w.size());
    long p = v.p();
    std::map<std::vector<long>, FockVector> cur;
    cur.emplace(std::vector<long>{}, v);
    std::vector<Rational> base(m);
    long sector = v.sector();
    for (int pos = m - 1; pos >= 0; --pos) {
        Rational b = momentum_pairing(p, j_g, sector);
        base[pos] = b;
        long lo = static_cast<long>(rational_ceil(w[pos].lo - b));
        long hi = static_cast<long>(rational_floor(w[pos].hi - b));
        std::map<std::vector<long>, FockVector> next;
        for (const auto& [ev, vec] : cur) {
            if (vec.is_zero()) continue;
            VSeries<FockVector> s = vertex_series(j_g, vec, lo, hi);
            for (const auto& [off, coef] : s.terms) {
                std::vector<long> ev2;
                ev2.reserve(ev.size() + 1);
                ev2.push_back(off);
                ev2.insert(ev2.end(), ev.begin(), ev.end());
                auto it = next.find(ev2);
                if (it == next.end()) {
                    next.emplace(std::move(ev2), coef);
                } else {
                    it->second = it->second + coef;
                    if (it->second.is_zero()) next.erase(it);
                }
            }
        }
        cur = std::move(next);
        sector += j_g;
    }
    return {std::move(base), std::move(cur)};
}

inline void multi_exponential(MultiSeries& s, int var, long k, const ExactScalar& coeff_over_k,
                              long x_step, long cap_hi) {
    std::map<std::vector<long>, FockVector> extra;
    for (const auto& [off, vec] : s.terms) {
        FockVector w = vec;
        ExactScalar c(1);
        for (long j = 1;; ++j) {
            w = mode_act(k, w);
            if (w.is_zero()) break;
            long o2 = off[static_cast<std::size_t>(var)] + j * x_step;
            if (x_step > 0 && o2 > cap_hi) break;
            c *= coeff_over_k / ExactScalar(Rational(j));
            std::vector<long> key = off;
            key[static_cast<std::size_t>(var)] = o2;
            FockVector t = c * w;
            auto it = extra.find(key);
            if (it == extra.end()) extra.emplace(std::move(key), t);
            else it->second = it->second + t;
        }
    }
    for (auto& [key, vec] : extra) {
        auto it = s.terms.find(key);
        if (it == s.terms.end()) {
            if (!vec.is_zero()) s.terms.emplace(key, vec);
        } else {
            it->second = it->second + vec;
            if (it->second.is_zero()) s.terms.erase(it);
        }
    }
}

/* Right side of the product identity. */
inline MultiSeries product_formula_rhs(long j_g, const FockVector& v,
                                       const std::vector<AbsWindow>& w,
                                       std::size_t budget = 2000000) {
    int m = static_cast<int>(w.size());
    long p = v.p();
    long mu = v.sector();
    Rational gg = Rational(j_g * j_g) / (2 * p);
    if (!is_integer(gg))
        throw UnsupportedMode("product_formula_rhs: <g,g> must be an integer");
    int e = static_cast<int>(to_long(gg));
    Rational scale = Rational(j_g) / (2 * p);

    MultiSeries s;
    s.base.assign(m, momentum_pairing(p, j_g, mu));
    std::vector<long> lo(m), hi(m);
    long hi_max = 0;
    for (int i = 0; i < m; ++i) {
        lo[i] = static_cast<long>(rational_ceil(w[i].lo - s.base[i]));
        hi[i] = static_cast<long>(rational_floor(w[i].hi - s.base[i]));
        hi_max = std::max(hi_max, hi[i]);
    }

    FockVector tv(p, mu + m * j_g);
    for (const auto& [mono, c] : v.terms()) tv.add_term(mono, c);
    int prune = static_cast<int>(hi_max) + max_degree_of(tv);
    if (prune < 0) return s;

    IntPoly pref = vandermonde_power(m, e, prune, budget);
    for (const auto& [ev, c] : pref) {
        std::vector<long> off(ev.begin(), ev.end());
        FockVector t = ExactScalar(Rational(c)) * tv;
        auto it = s.terms.find(off);
        if (it == s.terms.end()) s.terms.emplace(std::move(off), t);
        else it->second = it->second + t;
    }

    for (int i = 0; i < m; ++i) {
        int dmax = 0;
        for (const auto& [off, vec] : s.terms) dmax = std::max(dmax, max_degree_of(vec));
        for (long k = 1; k <= dmax; ++k)
            multi_exponential(s, i, k, ExactScalar(-scale / k), -k,
                              std::numeric_limits<long>::max());
    }
    for (int i = 0; i < m; ++i) {
        for (long k = 1;; ++k) {
            bool reachable = false;
            for (const auto& [off, vec] : s.terms)
                if (off[static_cast<std::size_t>(i)] + k <= hi[i]) { reachable = true; break; }
            if (!reachable) break;
            multi_exponential(s, i, -k, ExactScalar(scale / k), k, hi[i]);
        }
    }
    for (auto it = s.terms.begin(); it != s.terms.end();) {
        bool keep = true;
        for (int i = 0; i < m; ++i) {
            long o = it->first[static_cast<std::size_t>(i)];
            if (o < lo[i] || o > hi[i]) { keep = false; break; }
        }
        it = keep ? std::next(it) : s.terms.erase(it);
    }
    return s;
}

/* Exact windowed comparison of the two sides. */
inline bool product_formula_check(long j_g, const FockVector& v, const std::vector<AbsWindow>& w) {
    MultiSeries lhs = iterated_vertex_series(j_g, v, w);
    MultiSeries rhs = product_formula_rhs(j_g, v, w);
    return absolute_terms(lhs) == absolute_terms(rhs);
}

} // namespace singlet

#endif
