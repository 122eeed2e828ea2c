#ifndef SINGLET_QSERIES_HPP
#define SINGLET_QSERIES_HPP

#include <vector>

#include "singlet/jordan.hpp"
#include "singlet/screening.hpp"
#include "singlet/virasoro.hpp"

namespace singlet {

/* Truncated q-expansion sum_{k=0..N} c_k q^{offset+k} with exact rational
   coefficients.  Ring operations are defined only between compatible
   truncations; offsets add under multiplication.  Every graded trace folds
   the overall q^{-c/24} into the offset. */
struct QSeries {
    Rational offset;
    std::vector<Rational> coeffs;
};

inline long qs_truncation(const QSeries& s) {
    return static_cast<long>(s.coeffs.size()) - 1;
}

inline Rational qs_top(const QSeries& s) { return s.offset + qs_truncation(s); }

inline QSeries qs_zero(const Rational& offset, long N) {
    if (N < 0) throw IndexOutOfRange("qs_zero: negative truncation");
    return {offset, std::vector<Rational>(static_cast<std::size_t>(N) + 1, Rational(0))};
}

/* coefficient of q^e: exact below the truncation, error above it */
inline Rational qs_coefficient(const QSeries& s, const Rational& e) {
    if (e > qs_top(s)) throw IndexOutOfRange("qs_coefficient: beyond truncation");
    Rational gap = e - s.offset;
    if (gap < 0 || !is_integer(gap)) return 0;
    return s.coeffs[static_cast<std::size_t>(to_long(gap))];
}

inline QSeries qs_scale(const Rational& c, const QSeries& s) {
    QSeries out = s;
    for (auto& x : out.coeffs) x *= c;
    return out;
}

/* multiply by q^e */
inline QSeries qs_shift(const Rational& e, const QSeries& s) {
    QSeries out = s;
    out.offset += e;
    return out;
}

inline QSeries qs_add(const QSeries& a, const QSeries& b) {
    Rational gap = b.offset - a.offset;
    if (!is_integer(gap)) throw UnsupportedMode("qs_add: offsets differ by a non-integer");
    const QSeries& lo = (gap >= 0) ? a : b;
    const QSeries& hi = (gap >= 0) ? b : a;
    long d = to_long(gap >= 0 ? gap : -gap);
    Rational top = std::min(qs_top(a), qs_top(b));
    long N = to_long(top - lo.offset);
    if (N < 0) throw UnsupportedMode("qs_add: empty common truncation");
    QSeries out = qs_zero(lo.offset, N);
    for (long k = 0; k <= N; ++k) {
        Rational c = (k <= qs_truncation(lo)) ? lo.coeffs[k] : Rational(0);
        if (k >= d && k - d <= qs_truncation(hi)) c += hi.coeffs[k - d];
        out.coeffs[k] = c;
    }
    return out;
}

inline QSeries qs_sub(const QSeries& a, const QSeries& b) {
    return qs_add(a, qs_scale(Rational(-1), b));
}

inline QSeries qs_mul(const QSeries& a, const QSeries& b) {
    long N = std::min(qs_truncation(a), qs_truncation(b));
    if (N < 0) throw UnsupportedMode("qs_mul: empty truncation");
    QSeries out = qs_zero(a.offset + b.offset, N);
    for (long i = 0; i <= std::min(N, qs_truncation(a)); ++i) {
        if (a.coeffs[i] == 0) continue;
        for (long j = 0; i + j <= N && j <= qs_truncation(b); ++j)
            out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return out;
}

inline bool qs_equal(const QSeries& a, const QSeries& b) {
    Rational top = std::min(qs_top(a), qs_top(b));
    Rational lo = std::min(a.offset, b.offset);
    for (Rational e = lo; e <= top; e += 1)
        if (qs_coefficient(a, e) != qs_coefficient(b, e)) return false;
    return true;
}

/* 1/eta = q^{-1/24} prod_{n>=1} (1-q^n)^{-1}; coefficients are partition numbers */
inline QSeries eta_inverse(long p, long N) {
    if (p < 2) throw IndexOutOfRange("eta_inverse: p must be >= 2");
    QSeries out = qs_zero(Rational(-1, 24), N);
    for (long k = 0; k <= N; ++k) out.coeffs[k] = Rational(partition_count(k));
    return out;
}

/* prod_{n=1..N} (1-q^n), enough factors for exact truncation at N */
inline QSeries euler_product(long N) {
    QSeries out = qs_zero(0, N);
    out.coeffs[0] = 1;
    for (long n = 1; n <= N; ++n)
        for (long k = N; k >= n; --k) out.coeffs[k] -= out.coeffs[k - n];
    return out;
}

/* character of the kernel of one screening power on a lattice sector:
   numerator sum_n sgn(n) q^{((2n+1)p-i-1)^2/4p} over eta, sgn(0) = 1 */
inline QSeries ch_selfdual(long p, long i, long N) {
    if (i < 0 || i > p - 2) throw IndexOutOfRange("ch_selfdual: need 0 <= i <= p-2");
    Rational base = Rational((p - i - 1) * (p - i - 1), 4 * p);
    QSeries num = qs_zero(base, N);
    for (long n = 0;; ++n) {
        long a = (2 * n + 1) * p - i - 1;       /* index n */
        long b = -(2 * n + 1) * p - i - 1;      /* index -(n+1) */
        Rational ea = Rational(a * a, 4 * p) - base;
        Rational eb = Rational(b * b, 4 * p) - base;
        bool hit = false;
        if (ea <= N) { num.coeffs[to_long(ea)] += 1; hit = true; }
        if (eb <= N) { num.coeffs[to_long(eb)] -= 1; hit = true; }
        if (!hit) break;
    }
    return qs_mul(num, eta_inverse(p, N));
}

/* character of one irreducible summand: (q^{a_n} - q^{b_n}) / eta */
inline QSeries ch_irreducible(long p, long i, long n, long N) {
    if (i < 0 || i > p - 1) throw IndexOutOfRange("ch_irreducible: need 0 <= i <= p-1");
    if (n < 0) throw IndexOutOfRange("ch_irreducible: need n >= 0");
    long A = (2 * n + 1) * p - i - 1;
    long gap = (2 * n + 1) * (i + 1); /* b_n - a_n */
    QSeries num = qs_zero(Rational(A * A, 4 * p), N);
    num.coeffs[0] = 1;
    if (gap <= N) num.coeffs[gap] -= 1;
    return qs_mul(num, eta_inverse(p, N));
}

/* graded trace with the L(0)-nilpotent contribution split off */
struct LogCharacter {
    QSeries diag;
    QSeries tau_part;
};

inline Rational character_offset(long p, long j) {
    return sector_weight(p, j) - central_charge(p) / 24;
}

/* plain Fock sector: q^{wt - c/24} / prod (1-q^n) */
inline LogCharacter ch_trace_fock(long p, long j, long N) {
    QSeries diag = qs_zero(character_offset(p, j), N);
    for (long k = 0; k <= N; ++k) diag.coeffs[k] = Rational(partition_count(k));
    return {diag, qs_zero(diag.offset, N)};
}

/* rank-two module over one sector: literal graded trace of q^{L(0)-c/24};
   the tau series carries the trace of the nilpotent part per graded piece
   (identically zero for these modules). */
inline LogCharacter ch_trace_jordan(const JordanModuleSpec& spec, long N) {
    long p = spec.p;
    QSeries diag = qs_zero(character_offset(p, spec.eigen_j), N);
    QSeries tau = qs_zero(diag.offset, N);
    Rational wt = sector_weight(p, spec.eigen_j);
    for (long d = 0; d <= N; ++d) {
        auto basis = graded_basis(static_cast<int>(d));
        long dim = 2 * static_cast<long>(basis.size());
        diag.coeffs[d] = Rational(dim);
        ExactScalar trace(0);
        for (int which = 0; which < 2; ++which) {
            for (std::size_t b = 0; b < basis.size(); ++b) {
                FockVector f(p, spec.eigen_j), z(p, spec.eigen_j);
                f.add_term(basis[b], ExactScalar(1));
                JordanVector v = which == 0 ? JordanVector(spec, f, z)
                                            : JordanVector(spec, z, f);
                Row co = coordinates(virasoro_act(0, v), d);
                trace += co[b + which * basis.size()];
            }
        }
        ExactScalar nil = trace - ExactScalar((wt + d) * dim);
        if (!nil.is_rational()) throw NonHomogeneous("ch_trace_jordan: irrational trace");
        tau.coeffs[d] = nil.rat();
    }
    return {diag, tau};
}

/* kernel subspace of a screening power inside one sector */
inline LogCharacter ch_trace_kernel(long p, const KernelReport& report) {
    long N = static_cast<long>(report.rows.size()) - 1;
    if (N < 0) throw IndexOutOfRange("ch_trace_kernel: empty report");
    QSeries diag = qs_zero(character_offset(p, report.sector), N);
    for (long d = 0; d <= N; ++d) {
        if (report.rows[d].degree != d)
            throw IndexOutOfRange("ch_trace_kernel: rows must cover degrees 0..N");
        diag.coeffs[d] = Rational(report.rows[d].kernel);
    }
    return {diag, qs_zero(diag.offset, N)};
}

} // namespace singlet

#endif
