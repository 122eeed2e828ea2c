#ifndef SINGLET_INTERTWINER_HPP
#define SINGLET_INTERTWINER_HPP

#include <map>
#include <utility>

#include "singlet/jordan.hpp"
#include "singlet/vertex.hpp"
#include "singlet/virasoro.hpp"

namespace singlet {

/* Logarithmic intertwining operator between the rank-two module over the
   beta sector, the plain beta-sector Fock module, and the rank-two module
   over the doubled sector:

       Y(w1, x) v = E-(b,x) E+(b,x) (translate) x^{lam^2} v            (in W1)
       Y(w2, x) v = eps [ int-h(x) . Y(w1,x) v  +  Y(w1,x) (int+h(x) v) ]
                    + classical channel (in W2)

   with lam = (p-1)/sqrt(2p), h(m) = alpha(m)/sqrt(2p),
       int+h(x) = h(0) log x + sum_{m>0} h(m) x^{-m}/(-m),
       int-h(x) = sum_{k>0} h(-k) x^k / k.
   h(0) is read off the middle (plain Fock) module, where its nilpotent part
   vanishes; the h(0) log x term of int+h is the only log source.  log x is a
   formal symbol with d/dx log x = 1/x.  eps is the Jordan off-diagonal in
   h-units: 1 in the normalized basis, 0 for the semisimple degeneration. */

struct Window {
    Rational emin, emax; /* absolute exponent bounds, inclusive */
    long depth = 0;      /* max Fock degree kept in coefficients */
};

struct LogLaurentSeries {
    JordanModuleSpec target;
    std::map<std::pair<Rational, int>, JordanVector> terms;

    explicit LogLaurentSeries(const JordanModuleSpec& t) : target(t) {}

    void add(const Rational& e, int logdeg, const JordanVector& vec) {
        if (vec.is_zero()) return;
        auto key = std::make_pair(e, logdeg);
        auto it = terms.find(key);
        if (it == terms.end()) {
            terms.emplace(std::move(key), vec);
        } else {
            it->second = it->second + vec;
            if (it->second.is_zero()) terms.erase(it);
        }
    }
};

inline JordanVector jordan_component(const JordanModuleSpec& spec, int which,
                                     const FockVector& f) {
    FockVector g(spec.p, spec.eigen_j), z(spec.p, spec.eigen_j);
    for (const auto& [m, c] : f.terms()) g.add_term(m, c);
    return which == 1 ? JordanVector(spec, g, z) : JordanVector(spec, z, g);
}

/* The top-level transporter: identity matrix in the normalized bases; it
   shifts the semisimple h(0) eigenvalue by lam. */
struct TransporterT {
    long p = 2;
    Matrix matrix;
};

inline TransporterT transporter(long p) { return {p, mat_identity(2)}; }

inline bool transporter_intertwines(const TransporterT& T) {
    ExactScalar lam_src = ExactScalar(Rational(T.p - 1)) / sqrt_2p(T.p);
    ExactScalar lam_tgt = ExactScalar(Rational(2 * (T.p - 1))) / sqrt_2p(T.p);
    Matrix lhs = mat_scale(lam_tgt, T.matrix);
    Matrix rhs = mat_scale(lam_src + lambda_p(T.p), T.matrix);
    return mat_is_zero(mat_add(lhs, mat_scale(ExactScalar(-1), rhs)));
}

/* Channel attached to one top basis vector (which = 1 or 2) applied to a
   plain beta-sector vector; all cells with exponent in [emin, emax]. */
inline void eval_top_channel(LogLaurentSeries& out, int which, const ExactScalar& coeff,
                             const FockVector& v, const Rational& emin, const Rational& emax,
                             const ExactScalar& eps) {
    if (v.is_zero() || coeff.is_zero()) return;
    long p = v.p();
    Rational base = momentum_pairing(p, p - 1, v.sector());
    long lo = static_cast<long>(rational_ceil(emin - base));
    long hi = static_cast<long>(rational_floor(emax - base));
    if (hi >= lo) {
        VSeries<FockVector> S = vertex_series(p - 1, v, lo, hi);
        for (const auto& [off, vec] : S.terms)
            out.add(base + off, 0, coeff * jordan_component(out.target, which, vec));
    }
    if (which != 2 || eps.is_zero()) return;
    ExactScalar c2 = coeff * eps;
    ExactScalar inv_kappa = ExactScalar(1) / sqrt_2p(p);
    /* h(0) log x on the middle module: scalar lam */
    if (hi >= lo) {
        VSeries<FockVector> S = vertex_series(p - 1, v, lo, hi);
        for (const auto& [off, vec] : S.terms)
            out.add(base + off, 1, (c2 * lambda_p(p)) * jordan_component(out.target, 1, vec));
    }
    /* int-h after the channel: h(-k) x^k / k on the target */
    {
        long lo_w = -max_degree_of(v);
        long hi_w = hi - 1;
        if (hi_w >= lo_w) {
            VSeries<FockVector> S = vertex_series(p - 1, v, lo_w, hi_w);
            for (const auto& [off, vec] : S.terms) {
                for (long k = 1; off + k <= hi; ++k) {
                    Rational e = base + off + k;
                    if (e < emin) continue;
                    FockVector t =
                        (c2 * inv_kappa / ExactScalar(Rational(k))) * mode_act(-k, vec);
                    out.add(e, 0, jordan_component(out.target, 1, t));
                }
            }
        }
    }
    /* int+h before the channel: h(m) x^{-m}/(-m) on the middle module */
    for (long m = 1; m <= max_degree_of(v); ++m) {
        FockVector vm = mode_act(m, v);
        if (vm.is_zero()) continue;
        VSeries<FockVector> S = vertex_series(p - 1, vm, lo + m, hi + m);
        for (const auto& [off, vec] : S.terms) {
            Rational e = base + off - m;
            if (e < emin || e > emax) continue;
            FockVector t = (c2 * inv_kappa * ExactScalar(Rational(-1) / m)) * vec;
            out.add(e, 0, jordan_component(out.target, 1, t));
        }
    }
}

/* Full evaluation with normally ordered Heisenberg dressing of the left
   argument (any Fock-monomial descendants of the two top vectors).  Exact on
   the exponent window; no depth filtering here. */
inline LogLaurentSeries eval_Y_exact(const JordanVector& w, const FockVector& v,
                                     const Rational& emin, const Rational& emax,
                                     const ExactScalar& eps = ExactScalar(1)) {
    long p = v.p();
    if (w.p() != p) throw SectorMismatch("eval_Y: lattice mismatch");
    if (v.sector() != p - 1)
        throw SectorMismatch("eval_Y: right argument must lie in the beta sector");
    if (w.sector() != p - 1)
        throw SectorMismatch("eval_Y: left argument must lie over the beta sector");
    LogLaurentSeries out(omega1_spec(p));
    Rational base = momentum_pairing(p, p - 1, p - 1);
    for (int comp = 1; comp <= 2; ++comp) {
        const FockVector& cw = (comp == 1) ? w.w1() : w.w2();
        for (const auto& [mono, coeff] : cw.terms()) {
            const Partition& parts = mono.parts;
            std::size_t r = parts.size();
            for (std::size_t mask = 0; mask < (std::size_t(1) << r); ++mask) {
                /* annihilation/zero side on the right argument */
                std::map<long, FockVector> pre;
                pre.emplace(0, v);
                for (std::size_t idx = 0; idx < r && !pre.empty(); ++idx) {
                    if (!(mask >> idx & 1)) continue;
                    int n = parts[idx];
                    std::map<long, FockVector> nxt;
                    for (const auto& [sh, fv] : pre) {
                        for (long m = 0; m <= max_degree_of(fv); ++m) {
                            FockVector t = mode_act(m, fv);
                            if (t.is_zero()) continue;
                            Rational bc = ((n - 1) % 2 == 0 ? 1 : -1) *
                                          binomial(Rational(m + n - 1), n - 1);
                            FockVector scaled = ExactScalar(bc) * t;
                            auto it = nxt.find(sh - m - n);
                            if (it == nxt.end()) nxt.emplace(sh - m - n, scaled);
                            else it->second = it->second + scaled;
                        }
                    }
                    pre = std::move(nxt);
                }
                if (pre.empty()) continue;
                LogLaurentSeries acc(out.target);
                for (const auto& [sh, fv] : pre) {
                    if (fv.is_zero()) continue;
                    LogLaurentSeries tmp(out.target);
                    Rational floor_e = base - max_degree_of(fv);
                    eval_top_channel(tmp, comp, coeff, fv, floor_e, emax - sh, eps);
                    for (const auto& [key, vec] : tmp.terms)
                        acc.add(key.first + sh, key.second, vec);
                }
                /* creation side on the target */
                for (std::size_t idx = 0; idx < r; ++idx) {
                    if (mask >> idx & 1) continue;
                    int n = parts[idx];
                    LogLaurentSeries nxt(out.target);
                    for (const auto& [key, vec] : acc.terms) {
                        for (long k = n; key.first + (k - n) <= emax; ++k) {
                            ExactScalar bc{binomial(Rational(k - 1), static_cast<long>(n - 1))};
                            nxt.add(key.first + (k - n), key.second, bc * mode_act(-k, vec));
                        }
                    }
                    acc = std::move(nxt);
                }
                for (const auto& [key, vec] : acc.terms)
                    if (key.first >= emin && key.first <= emax)
                        out.add(key.first, key.second, vec);
            }
        }
    }
    return out;
}

/* Public evaluation: all three window bounds enforced. */
inline LogLaurentSeries eval_Y(const JordanVector& w, const FockVector& v, const Window& win,
                               const ExactScalar& eps = ExactScalar(1)) {
    if (win.depth < 0) throw IndexOutOfRange("eval_Y: window depth must be >= 0");
    LogLaurentSeries s = eval_Y_exact(w, v, win.emin, win.emax, eps);
    for (auto it = s.terms.begin(); it != s.terms.end();)
        it = (max_degree_of(it->second) > win.depth) ? s.terms.erase(it) : std::next(it);
    return s;
}

/* Standalone exponential operators exp(sum_{k>0} lam h(-+k) x^{+-k}/(+-k))
   on a rank-two module vector; lam h(m) = ((p-1)/2p) alpha(m). */
inline LogLaurentSeries E_minus_apply(const JordanVector& v, const Window& win) {
    LogLaurentSeries out(v.spec());
    long p = v.p();
    long hi = static_cast<long>(rational_floor(win.emax));
    std::map<long, JordanVector> cur;
    cur.emplace(0, v);
    for (long k = 1; k <= hi; ++k) {
        std::map<long, JordanVector> nxt(cur);
        Rational c((p - 1), 2 * p * k);
        for (const auto& [sh, vec] : cur) {
            JordanVector powv = vec;
            Rational fac = 1;
            for (long j = 1; sh + j * k <= hi; ++j) {
                powv = ExactScalar(c) * mode_act(-k, powv);
                fac *= j;
                JordanVector t = ExactScalar(Rational(1) / fac) * powv;
                auto it = nxt.find(sh + j * k);
                if (it == nxt.end()) nxt.emplace(sh + j * k, t);
                else it->second = it->second + t;
            }
        }
        cur = std::move(nxt);
    }
    for (const auto& [sh, vec] : cur) out.add(Rational(sh), 0, vec);
    for (auto it = out.terms.begin(); it != out.terms.end();) {
        bool keep = it->first.first >= win.emin && max_degree_of(it->second) <= win.depth;
        it = keep ? std::next(it) : out.terms.erase(it);
    }
    return out;
}

inline LogLaurentSeries E_plus_apply(const JordanVector& v, const Window& win) {
    LogLaurentSeries out(v.spec());
    long p = v.p();
    std::map<long, JordanVector> cur;
    cur.emplace(0, v);
    for (long k = 1; k <= max_degree_of(v); ++k) {
        std::map<long, JordanVector> nxt(cur);
        Rational c(-(p - 1), 2 * p * k);
        for (const auto& [sh, vec] : cur) {
            JordanVector powv = vec;
            Rational fac = 1;
            for (long j = 1; j * k <= max_degree_of(vec); ++j) {
                powv = ExactScalar(c) * mode_act(k, powv);
                if (powv.is_zero()) break;
                fac *= j;
                JordanVector t = ExactScalar(Rational(1) / fac) * powv;
                auto it = nxt.find(sh - j * k);
                if (it == nxt.end()) nxt.emplace(sh - j * k, t);
                else it->second = it->second + t;
            }
        }
        cur = std::move(nxt);
    }
    for (const auto& [sh, vec] : cur)
        if (!vec.is_zero()) out.add(Rational(sh), 0, vec);
    for (auto it = out.terms.begin(); it != out.terms.end();) {
        bool keep = it->first.first >= win.emin && it->first.first <= win.emax &&
                    max_degree_of(it->second) <= win.depth;
        it = keep ? std::next(it) : out.terms.erase(it);
    }
    return out;
}

/* Standalone antiderivative fields on a rank-two module vector. */
inline LogLaurentSeries int_h_apply(int sign, const JordanVector& v, const Window& win) {
    LogLaurentSeries out(v.spec());
    ExactScalar inv_kappa = ExactScalar(1) / sqrt_2p(v.p());
    if (sign > 0) {
        out.add(0, 1, inv_kappa * mode_act(0, v));
        for (long m = 1; m <= max_degree_of(v); ++m)
            out.add(-m, 0,
                    (inv_kappa * ExactScalar(Rational(-1) / m)) * mode_act(m, v));
    } else {
        for (long k = 1; Rational(k) <= win.emax; ++k)
            out.add(k, 0, (inv_kappa / ExactScalar(Rational(k))) * mode_act(-k, v));
    }
    for (auto it = out.terms.begin(); it != out.terms.end();) {
        bool keep = it->first.first >= win.emin && it->first.first <= win.emax &&
                    max_degree_of(it->second) <= win.depth;
        it = keep ? std::next(it) : out.terms.erase(it);
    }
    return out;
}

/* series calculus */
inline LogLaurentSeries d_dx(const LogLaurentSeries& s) {
    LogLaurentSeries out(s.target);
    for (const auto& [key, vec] : s.terms) {
        out.add(key.first - 1, key.second, ExactScalar(key.first) * vec);
        if (key.second > 0)
            out.add(key.first - 1, key.second - 1, ExactScalar(Rational(key.second)) * vec);
    }
    return out;
}

inline LogLaurentSeries virasoro_on_series(long m, const LogLaurentSeries& s) {
    LogLaurentSeries out(s.target);
    for (const auto& [key, vec] : s.terms) out.add(key.first, key.second, virasoro_act(m, vec));
    return out;
}

inline void accumulate_series(LogLaurentSeries& into, const LogLaurentSeries& src,
                              const Rational& xshift, const ExactScalar& scale) {
    for (const auto& [key, vec] : src.terms)
        into.add(key.first + xshift, key.second, scale * vec);
}

inline bool series_match(const LogLaurentSeries& a, const LogLaurentSeries& b,
                         const Rational& emin, const Rational& emax) {
    LogLaurentSeries diff(a.target);
    accumulate_series(diff, a, 0, ExactScalar(1));
    accumulate_series(diff, b, 0, ExactScalar(-1));
    for (const auto& [key, vec] : diff.terms)
        if (key.first >= emin && key.first <= emax && !vec.is_zero()) return false;
    return true;
}

/* d/dx Y(w,x) v = Y(L(-1)w, x) v, coefficientwise on the shrunk window */
inline bool check_L_minus1_derivative(const JordanVector& w, const FockVector& v,
                                      const Window& win, const ExactScalar& eps = ExactScalar(1)) {
    if (w.is_zero() || v.is_zero()) return true;
    LogLaurentSeries A = eval_Y_exact(w, v, win.emin, win.emax, eps);
    JordanVector lw = virasoro_act(-1, w);
    LogLaurentSeries B = lw.is_zero()
                             ? LogLaurentSeries(omega1_spec(v.p()))
                             : eval_Y_exact(lw, v, win.emin - 1, win.emax - 1, eps);
    return series_match(d_dx(A), B, win.emin - 1, win.emax - 1);
}

/* [L(m), Y(w,x)] = sum_{k>=0} binom(m+1,k) x^{m+1-k} Y(L(k-1)w, x), m in
   {-1,0,1}; checked coefficientwise inside the window. */
inline bool check_commutator(long m, const JordanVector& w, const FockVector& v,
                             const Window& win, const ExactScalar& eps = ExactScalar(1)) {
    if (m < -1 || m > 1) throw IndexOutOfRange("check_commutator: m must be in {-1,0,1}");
    if (w.is_zero() || v.is_zero()) return true;
    long p = v.p();
    LogLaurentSeries lhs(omega1_spec(p));
    accumulate_series(lhs, virasoro_on_series(m, eval_Y_exact(w, v, win.emin, win.emax, eps)), 0,
                      ExactScalar(1));
    FockVector lv = virasoro_act(m, v);
    if (!lv.is_zero())
        accumulate_series(lhs, eval_Y_exact(w, lv, win.emin, win.emax, eps), 0, ExactScalar(-1));
    LogLaurentSeries rhs(omega1_spec(p));
    for (long k = 0; k <= m + 1; ++k) {
        JordanVector lw = virasoro_act(k - 1, w);
        if (lw.is_zero()) continue;
        Rational shift = Rational(m + 1 - k);
        LogLaurentSeries S = eval_Y_exact(lw, v, win.emin - shift, win.emax - shift, eps);
        accumulate_series(rhs, S, shift, ExactScalar(binomial(Rational(m + 1), k)));
    }
    return series_match(lhs, rhs, win.emin, win.emax);
}

} // namespace singlet

#endif
