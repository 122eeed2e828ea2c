#ifndef SINGLET_JORDAN_HPP
#define SINGLET_JORDAN_HPP

#include <functional>
#include <string>
#include <vector>

#include "singlet/pairing.hpp"
#include "singlet/screening.hpp"
#include "singlet/singlet_algebra.hpp"
#include "singlet/vertex.hpp"
#include "singlet/virasoro.hpp"

namespace singlet {

/* Rank-two Jordan extensions of a Fock sector: ordered top basis (w1, w2)
   with alpha(0) = eigen_j Id + sqrt(2p) N, N w2 = w1, N w1 = 0.  In these
   coordinates h(0) = alpha(0)/sqrt(2p) has off-diagonal exactly 1 (the
   normalized basis); rescaling w2 by sqrt(2p) converts any reported
   off-diagonal constant to the alpha-normalized convention. */
struct JordanModuleSpec {
    long p = 2;
    long eigen_j = 1;
    bool operator==(const JordanModuleSpec& o) const { return p == o.p && eigen_j == o.eigen_j; }
};

inline JordanModuleSpec omega_spec(long p) { return {p, p - 1}; }
inline JordanModuleSpec omega0_spec(long p) { return {p, 0}; }
inline JordanModuleSpec omega1_spec(long p) { return {p, 2 * (p - 1)}; }

class JordanVector {
public:
    explicit JordanVector(const JordanModuleSpec& spec)
        : spec_(spec), w1_(spec.p, spec.eigen_j), w2_(spec.p, spec.eigen_j) {}

    JordanVector(const JordanModuleSpec& spec, FockVector c1, FockVector c2)
        : spec_(spec), w1_(std::move(c1)), w2_(std::move(c2)) {
        if (w1_.p() != spec_.p || w2_.p() != spec_.p || w1_.sector() != spec_.eigen_j ||
            w2_.sector() != spec_.eigen_j)
            throw SectorMismatch("JordanVector: components must live in the module's sector");
    }

    long p() const { return spec_.p; }
    long sector() const { return spec_.eigen_j; }
    const JordanModuleSpec& spec() const { return spec_; }
    const FockVector& w1() const { return w1_; }
    const FockVector& w2() const { return w2_; }
    bool is_zero() const { return w1_.is_zero() && w2_.is_zero(); }

    JordanVector operator+(const JordanVector& o) const {
        if (!(spec_ == o.spec_)) throw SectorMismatch("JordanVector: module mismatch");
        return JordanVector(spec_, w1_ + o.w1_, w2_ + o.w2_);
    }
    bool operator==(const JordanVector& o) const {
        return spec_ == o.spec_ && w1_ == o.w1_ && w2_ == o.w2_;
    }

private:
    JordanModuleSpec spec_;
    FockVector w1_, w2_;
};

inline JordanVector operator*(const ExactScalar& c, const JordanVector& v) {
    return JordanVector(v.spec(), c * v.w1(), c * v.w2());
}

/* alpha(n): n != 0 acts on the Fock factor; alpha(0) by the Jordan matrix. */
inline JordanVector mode_act(long n, const JordanVector& v) {
    if (n != 0) return JordanVector(v.spec(), mode_act(n, v.w1()), mode_act(n, v.w2()));
    ExactScalar j{Rational(v.sector())};
    ExactScalar kappa = sqrt_2p(v.p());
    return JordanVector(v.spec(), j * v.w1() + kappa * v.w2(), j * v.w2());
}

inline int max_degree_of(const JordanVector& v) {
    return std::max(max_degree_of(v.w1()), max_degree_of(v.w2()));
}

inline bool is_homogeneous(const JordanVector& v) {
    if (v.w1().is_zero()) return is_homogeneous(v.w2());
    if (v.w2().is_zero()) return is_homogeneous(v.w1());
    return is_homogeneous(v.w1()) && is_homogeneous(v.w2()) &&
           degree(v.w1()) == degree(v.w2());
}

inline long degree(const JordanVector& v) {
    if (v.is_zero() || !is_homogeneous(v)) throw NonHomogeneous("degree: Jordan vector");
    return v.w1().is_zero() ? degree(v.w2()) : degree(v.w1());
}

/* coordinates: w1 block then w2 block, each in canonical monomial order */
inline Row coordinates(const JordanVector& v, long d) {
    Row r = coordinates(v.w1(), d);
    Row r2 = coordinates(v.w2(), d);
    r.insert(r.end(), r2.begin(), r2.end());
    return r;
}

inline JordanVector jordan_w1_bottom(const JordanModuleSpec& spec) {
    return JordanVector(spec, sector_bottom(spec.p, spec.eigen_j),
                        FockVector(spec.p, spec.eigen_j));
}

inline JordanVector jordan_w2_bottom(const JordanModuleSpec& spec) {
    return JordanVector(spec, FockVector(spec.p, spec.eigen_j),
                        sector_bottom(spec.p, spec.eigen_j));
}

/* 2x2 matrix of a top-level-preserving operator; columns are the images of
   the w1 and w2 bottoms. */
template <class Op>
Matrix top_matrix(const JordanModuleSpec& spec, Op op) {
    auto scalar_of = [](const FockVector& f) -> ExactScalar {
        if (f.is_zero()) return ExactScalar(0);
        if (degree(f) != 0) throw NotTopLevel("top_matrix: image leaves the top level");
        return f.terms().begin()->second;
    };
    JordanVector i1 = op(jordan_w1_bottom(spec));
    JordanVector i2 = op(jordan_w2_bottom(spec));
    return {{scalar_of(i1.w1()), scalar_of(i2.w1())},
            {scalar_of(i1.w2()), scalar_of(i2.w2())}};
}

inline Matrix alpha0_top_matrix(const JordanModuleSpec& spec) {
    return top_matrix(spec, [](const JordanVector& v) { return mode_act(0, v); });
}

inline Matrix L0_top_matrix(const JordanModuleSpec& spec) {
    return top_matrix(spec, [](const JordanVector& v) { return virasoro_act(0, v); });
}

/* H(0) on the top level, two independent ways: by honest mode action of the
   generator, and by the falling-factorial formula
       H(0)|top = prod_{k=0}^{2p-2} (alpha(0) - k) / (2p-1)!. */
inline Matrix H0_matrix_by_modes(const JordanModuleSpec& spec) {
    return top_matrix(spec, [](const JordanVector& v) { return H_mode(0, v); });
}

inline Matrix H0_matrix_by_formula(const JordanModuleSpec& spec) {
    long p = spec.p;
    ExactScalar j{Rational(spec.eigen_j)};
    Matrix A = {{j, sqrt_2p(p)}, {ExactScalar(0), j}};
    Matrix acc = mat_identity(2);
    for (long k = 0; k <= 2 * p - 2; ++k) {
        Matrix shifted = mat_add(A, mat_scale(ExactScalar(Rational(-k)), mat_identity(2)));
        acc = mat_mul(acc, shifted);
    }
    return mat_scale(ExactScalar(Rational(1) / Rational(factorial(2 * p - 1))), acc);
}

/* off-diagonal H(0) entry on the weight -(p-1)^2/4p Jordan top; nonzero for
   the rank-two extension to be non-split.  Divide by sqrt(2p) for the
   alpha-normalized convention. */
inline ExactScalar nu_p(long p) { return H0_matrix_by_modes(omega_spec(p))[0][1]; }

inline ExactScalar nu_rescale_factor(long p) { return sqrt_2p(p); }

/* true iff nu_p != 0 and the w2 bottom generates the whole rank-two module
   under Virasoro and H modes, checked by span closure through degree 3. */
inline bool non_split_witness(long p) {
    if (nu_p(p).is_zero()) return false;
    JordanModuleSpec spec = omega_spec(p);
    std::vector<std::function<JordanVector(const JordanVector&)>> ops;
    for (long m = -3; m <= 3; ++m) {
        if (m == 0) continue;
        ops.push_back([m](const JordanVector& v) { return virasoro_act(m, v); });
    }
    for (long j = 2 * p - 5; j <= 2 * p + 1; ++j)
        ops.push_back([j](const JordanVector& v) { return H_laurent_mode(j, v); });
    auto dims = graded_closure_dims(
        std::vector<JordanVector>{jordan_w2_bottom(spec)}, ops, 3,
        [](const JordanVector& v) { return degree(v); },
        [](const JordanVector& v, long d) { return coordinates(v, d); });
    for (long d = 0; d <= 3; ++d)
        if (BigInt(dims[static_cast<std::size_t>(d)]) != 2 * partition_count(static_cast<int>(d)))
            return false;
    return true;
}

/* Obstruction against a rank-two L(0) block on the weight -(p-1)^2/4p top:
   the constraint polynomial's x-part has a simple zero there, so its
   derivative must cancel against H(0)^2, impossible for a 2x2 nilpotent.
   Returns that derivative (nonzero = obstruction). */
inline ExactScalar log_self_extension_obstruction(long p) {
    ZhuPolynomial P = zhu_polynomial(p);
    ExactScalar x0{-Rational((p - 1) * (p - 1)) / (4 * p)};
    return zhu_g_derivative_eval(P, x0);
}

/* Cosingular partners: solve (alpha(0) - (p-1)) v = v^(n) (tensored into the
   w1 copy) in the degree p n^2 component, then probe the diagram arrows. */
struct CosingularVertex {
    long n = 0;
    JordanVector vector;
    bool defining_relation = false; /* alpha(0) system solved exactly */
    bool up_membership = false;     /* n>=1: L(1),L(2) images in U(Vir) v^(n-1) */
    bool up_vanishes = false;       /* n=0: L(1),L(2) images are zero */
};

inline CosingularVertex cosingular_vector(long p, long n) {
    if (n < 0) throw IndexOutOfRange("cosingular_vector: n must be >= 0");
    JordanModuleSpec spec = omega_spec(p);
    FockVector vn = singular_vector_v(p, n);
    long d = degree(vn);
    auto basis = graded_basis(d);
    std::size_t N = basis.size();

    /* operator matrix of alpha(0) - (p-1) on the 2N-dimensional component */
    Matrix op(2 * N, Row(2 * N, ExactScalar(0)));
    ExactScalar kappa = sqrt_2p(p);
    for (std::size_t k = 0; k < N; ++k) op[k][N + k] = kappa; /* w2 column -> kappa * w1 */
    Row rhs(2 * N, ExactScalar(0));
    Row vn_coords = coordinates(vn, d);
    for (std::size_t k = 0; k < N; ++k) rhs[k] = vn_coords[k];
    Row x;
    bool ok = solve(op, rhs, x);
    if (!ok) throw NotFound("cosingular_vector: defining system inconsistent");

    FockVector a(p, p - 1), b(p, p - 1);
    for (std::size_t k = 0; k < N; ++k) {
        if (!x[k].is_zero()) a.add_term(basis[k], x[k]);
        if (!x[N + k].is_zero()) b.add_term(basis[k], x[N + k]);
    }
    CosingularVertex out{n, JordanVector(spec, a, b), true, false, false};

    bool up_member = true, up_zero = true;
    for (long m = 1; m <= 2; ++m) {
        JordanVector img = virasoro_act(m, out.vector);
        if (!img.w2().is_zero()) { up_member = false; up_zero = false; break; }
        if (img.w1().is_zero()) continue;
        up_zero = false;
        if (n >= 1) {
            Matrix rows = virasoro_descendant_rows(p, {singular_vector_v(p, n - 1)}, d - m);
            if (!in_span(rows, coordinates(img.w1(), d - m))) up_member = false;
        } else {
            up_member = false;
        }
    }
    out.up_membership = (n >= 1) && up_member;
    out.up_vanishes = (n == 0) && up_zero;
    return out;
}

/* Embedding diagram report over the rank-two module: singular vectors v^(n)
   in the w1 copy and their cosingular partners, with verified arrows. */
struct DiagramVertex {
    std::string kind;
    long n = 0;
    Rational weight;
};

struct DiagramArrow {
    std::size_t from = 0, to = 0;
    std::string label;
    bool verified = false;
};

struct EmbeddingDiagram {
    long p = 2, nmax = 0;
    std::vector<DiagramVertex> vertices;
    std::vector<DiagramArrow> arrows;
};

inline EmbeddingDiagram build_embedding_diagram(long p, long nmax) {
    EmbeddingDiagram diag;
    diag.p = p;
    diag.nmax = nmax;
    for (long n = 0; n <= nmax; ++n) {
        FockVector vn = singular_vector_v(p, n);
        diag.vertices.push_back({"singular", n, weight(vn)});
    }
    for (long n = 0; n <= nmax; ++n) {
        CosingularVertex cv = cosingular_vector(p, n);
        diag.vertices.push_back(
            {"cosingular", n, sector_weight(p, p - 1) + degree(cv.vector)});
        std::size_t from = diag.vertices.size() - 1;
        diag.arrows.push_back({from, static_cast<std::size_t>(n), "alpha0", cv.defining_relation});
        if (n >= 1)
            diag.arrows.push_back(
                {from, static_cast<std::size_t>(n - 1), "virasoro", cv.up_membership});
    }
    return diag;
}

/* Image-of-Qtilde probe: graded ranks plus the (weight, H(0)) lowest-weight
   data on both the image side and the complementary dual side. */
struct WModuleProbe {
    std::vector<long> dims;  /* rank of Qtilde per degree */
    Rational gen_weight;     /* weight of Qtilde(alpha(-1) vacuum) */
    ExactScalar gen_h0;      /* H(0) eigenvalue there */
    ExactScalar dual_gen_h0; /* H(0) eigenvalue on the sector-2p bottom */
};

inline WModuleProbe W_module_probe(long p, long dmax) {
    WModuleProbe r;
    for (long d = 0; d <= dmax; ++d) {
        Matrix m = screening_image_matrix({ScreeningKind::Qtilde, 0}, 1, p, 0, d);
        r.dims.push_back(m.empty() ? 0 : exact_rank(m));
    }
    FockVector g = Qtilde_apply(mode_act(-1, sector_bottom(p, 0)));
    if (g.is_zero() || !is_homogeneous(g))
        throw NotFound("W_module_probe: generator image vanished");
    r.gen_weight = weight(g);
    r.gen_h0 = top_H0_scalar(g);
    r.dual_gen_h0 = top_H0_scalar(sector_bottom(p, 2 * p));
    return r;
}

/* Pairing on the rank-two module: Gram [[0,1],[-1,0]] between (w1,w2) tops,
   tensored with the twisted pairing of the Fock factors.  Defined when the
   sector is self-complementary (eigen_j = p-1). */
inline ExactScalar jordan_pairing(const JordanVector& u, const JordanVector& v) {
    if (u.sector() != u.p() - 1 || v.sector() != v.p() - 1)
        throw SectorMismatch("jordan_pairing: sector must be self-complementary");
    return twisted_pairing(u.w1(), v.w2()) - twisted_pairing(u.w2(), v.w1());
}

} // namespace singlet

#endif
