#ifndef SINGLET_SINGLET_ALGEBRA_HPP
#define SINGLET_SINGLET_ALGEBRA_HPP

#include <map>
#include <tuple>
#include <vector>

#include "singlet/pairing.hpp"
#include "singlet/screening.hpp"
#include "singlet/vertex.hpp"
#include "singlet/virasoro.hpp"

namespace singlet {

/* The weight-(2p-1) generator H = Q e^{-alpha}: momentum zero and singular;
   together with the conformal vector it generates the kernel of Qtilde. */
inline const FockVector& singlet_generator(long p) {
    static std::map<long, FockVector> cache;
    auto it = cache.find(p);
    if (it == cache.end()) it = cache.emplace(p, singular_vector_u(p, 1)).first;
    return it->second;
}

/* Laurent modes H_j (any module with a mode action), and the calibrated
   H(n) := H_{n + 2p - 2}, so that H(0) preserves weight. */
template <class V>
V H_laurent_mode(long j, const V& v) {
    return field_mode(singlet_generator(v.p()), Rational(j), v);
}

template <class V>
V H_mode(long n, const V& v) {
    return H_laurent_mode(n + 2 * v.p() - 2, v);
}

/* Lowest-weight constraint polynomial P(x,y) = y^2 - G(x), with
   G(x) = K (x + (p-1)^2/4p) prod_{i=0}^{p-2} (x + i(2p-2-i)/4p)^2 and
   K = (4p)^{2p-1} / ((2p-1)!)^2.  y-degree 2, x-degree 2p-1, monic in y. */
struct ZhuPolynomial {
    long p = 2;
    std::vector<Rational> g; /* ascending x-coefficients of G */
};

inline ZhuPolynomial zhu_polynomial(long p) {
    BigInt pw = 1;
    for (long k = 0; k < 2 * p - 1; ++k) pw *= 4 * p;
    Rational K = Rational(pw) / Rational(factorial(2 * p - 1) * factorial(2 * p - 1));
    std::vector<Rational> g{K};
    auto mul_linear = [&g](const Rational& c) {
        std::vector<Rational> h(g.size() + 1, Rational(0));
        for (std::size_t k = 0; k < g.size(); ++k) {
            h[k] += g[k] * c;
            h[k + 1] += g[k];
        }
        g = std::move(h);
    };
    mul_linear(Rational((p - 1) * (p - 1)) / (4 * p));
    for (long i = 0; i <= p - 2; ++i) {
        Rational c = Rational(i * (2 * p - 2 - i)) / (4 * p);
        mul_linear(c);
        mul_linear(c);
    }
    return {p, std::move(g)};
}

inline ExactScalar zhu_g_eval(const ZhuPolynomial& P, const ExactScalar& x) {
    ExactScalar acc(0);
    for (auto it = P.g.rbegin(); it != P.g.rend(); ++it) acc = acc * x + ExactScalar(*it);
    return acc;
}

inline ExactScalar zhu_g_derivative_eval(const ZhuPolynomial& P, const ExactScalar& x) {
    ExactScalar acc(0);
    for (std::size_t k = P.g.size(); k-- > 1;)
        acc = acc * x + ExactScalar(Rational(static_cast<long>(k)) * P.g[k]);
    return acc;
}

/* small exact matrix helpers for evaluating P at commuting pairs */
inline Matrix mat_identity(std::size_t n) {
    Matrix m(n, Row(n, ExactScalar(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = ExactScalar(1);
    return m;
}

inline Matrix mat_mul(const Matrix& a, const Matrix& b) {
    std::size_t n = a.size(), k = b.size(), c = b.empty() ? 0 : b[0].size();
    Matrix m(n, Row(c, ExactScalar(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero()) continue;
            for (std::size_t j = 0; j < c; ++j) m[i][j] += a[i][t] * b[t][j];
        }
    return m;
}

inline Matrix mat_add(const Matrix& a, const Matrix& b) {
    Matrix m = a;
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] += b[i][j];
    return m;
}

inline Matrix mat_scale(const ExactScalar& c, const Matrix& a) {
    Matrix m = a;
    for (auto& row : m)
        for (auto& x : row) x = c * x;
    return m;
}

inline bool mat_is_zero(const Matrix& a) {
    for (const auto& row : a)
        for (const auto& x : row)
            if (!x.is_zero()) return false;
    return true;
}

/* P(X, Y) = Y^2 - G(X) for commuting square matrices X, Y (scalars as 1x1). */
inline Matrix zhu_eval(const ZhuPolynomial& P, const Matrix& X, const Matrix& Y) {
    Matrix acc = mat_scale(ExactScalar(0), X);
    for (auto it = P.g.rbegin(); it != P.g.rend(); ++it) {
        acc = mat_mul(acc, X);
        Matrix cI = mat_scale(ExactScalar(*it), mat_identity(X.size()));
        acc = mat_add(acc, cI);
    }
    return mat_add(mat_mul(Y, Y), mat_scale(ExactScalar(-1), acc));
}

inline bool zhu_pair_holds(const ZhuPolynomial& P, const Matrix& X, const Matrix& Y) {
    return mat_is_zero(zhu_eval(P, X, Y));
}

/* H(0) eigenvalue on a one-dimensional sector bottom; the pair
   (weight, eigenvalue) must satisfy the constraint polynomial. */
inline ExactScalar top_H0_scalar(const FockVector& v) {
    if (v.is_zero() || degree(v) != 0)
        throw NotTopLevel("top_H0_scalar: input is not a bottom-level vector");
    FockVector w = H_mode(0, v);
    if (w.is_zero()) return ExactScalar(0);
    return w.terms().begin()->second / v.terms().begin()->second;
}

inline bool check_zhu_on_sector_bottom(long p, long j) {
    FockVector e = sector_bottom(p, j);
    ExactScalar y = top_H0_scalar(e);
    ExactScalar x(sector_weight(p, j));
    return y * y == zhu_g_eval(zhu_polynomial(p), x);
}

/* weight of the sector-(p-1) singular chain: h at step n */
inline Rational h_singular(long p, long n) {
    return Rational((2 * p * n) * (2 * p * n) - (p - 1) * (p - 1)) / (4 * p);
}

/* First i (descending from the weight-allowed maximum, i >= 0) with
   H_i u^(n) nonzero and Q^n (H_i u^(n)) = 0. */
struct SimplicityWitness {
    long i = 0;
    FockVector image;
};

inline SimplicityWitness simplicity_witness(long p, long n) {
    if (n < 1) throw IndexOutOfRange("simplicity_witness: n must be >= 1");
    FockVector u = singular_vector_u(p, n);
    long imax = degree(u) + 2 * p - 2;
    for (long i = imax; i >= 0; --i) {
        FockVector w = H_laurent_mode(i, u);
        if (w.is_zero()) continue;
        if (power_apply({ScreeningKind::Q, 0}, n, w).is_zero()) return {i, w};
    }
    throw NotFound("simplicity_witness: no index in [0, " + std::to_string(imax) + "]");
}

/* H_{j0} v^(n) with j0 = -2np + p - 2: escapes the n-th kernel filtration
   step and projects onto v^(n+1) with a nonzero constant, extracted by the
   twisted pairing.  The weight identity pins the target weight exactly. */
struct IrreducibilityWitness {
    long j0 = 0;
    FockVector image;
    ExactScalar C;
    bool escapes_kernel = false;
    bool weight_identity = false;
};

inline IrreducibilityWitness irreducibility_witness(long p, long n) {
    if (n < 0) throw IndexOutOfRange("irreducibility_witness: n must be >= 0");
    FockVector v = singular_vector_v(p, n);
    long j0 = -2 * n * p + p - 2;
    FockVector w = H_laurent_mode(j0, v);
    FockVector vnext = singular_vector_v(p, n + 1);
    IrreducibilityWitness out;
    out.j0 = j0;
    out.image = w;
    out.escapes_kernel = !power_apply({ScreeningKind::Q, 0}, n + 1, w).is_zero();
    out.weight_identity =
        !w.is_zero() && is_homogeneous(w) && weight(w) == h_singular(p, n + 1);
    ExactScalar norm = twisted_pairing(vnext, vnext);
    out.C = norm.is_zero() ? ExactScalar(0) : twisted_pairing(w, vnext) / norm;
    return out;
}

/* Graded dimensions of span{ a_j e_{p-1} : a in Ker Qtilde of weight <= D },
   degrees 0..D-2; cyclicity holds when these match the full Fock dimensions. */
inline std::vector<long> beta_cyclicity_dims(long p, long D) {
    if (D < 2) throw IndexOutOfRange("beta_cyclicity_dims: D must be >= 2");
    FockVector ebeta = sector_bottom(p, p - 1);
    std::vector<Matrix> rows(static_cast<std::size_t>(D - 1));
    for (long da = 0; da <= D; ++da) {
        for (const auto& a : kernel_basis({ScreeningKind::Qtilde, 0}, 1, p, 0, da)) {
            for (long d = 0; d <= D - 2; ++d) {
                long j = da - 1 - d; /* target degree d = da - j - 1 */
                FockVector w = field_mode(a, Rational(j), ebeta);
                if (!w.is_zero()) rows[static_cast<std::size_t>(d)].push_back(coordinates(w, d));
            }
        }
    }
    std::vector<long> dims(static_cast<std::size_t>(D - 1), 0);
    for (long d = 0; d <= D - 2; ++d) dims[static_cast<std::size_t>(d)] = exact_rank(rows[d]);
    return dims;
}

} // namespace singlet

#endif
