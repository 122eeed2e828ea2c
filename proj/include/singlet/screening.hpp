#ifndef SINGLET_SCREENING_HPP
#define SINGLET_SCREENING_HPP

#include <string>
#include <vector>

#include "singlet/fock.hpp"
#include "singlet/linalg.hpp"
#include "singlet/partitions.hpp"
#include "singlet/vertex.hpp"
#include "singlet/virasoro.hpp"

namespace singlet {

/* Singular vectors from iterated zero-mode screenings.  The vector
   Q^n (bottom of sector j - 2pn) lands in sector j; for the standard
   families the result is nonzero and Virasoro-singular. */
inline FockVector repeated_screening_vector(long p, long n, long j_target) {
    FockVector v = sector_bottom(p, j_target - 2 * p * n);
    return power_apply({ScreeningKind::Q, 0}, n, v);
}

/* vacuum family, sector 0, weight n^2 p + n p - n */
inline FockVector singular_vector_u(long p, long n) { return repeated_screening_vector(p, n, 0); }

/* typical-bottom family, sector p-1, weight ((2pn)^2 - (p-1)^2) / 4p */
inline FockVector singular_vector_v(long p, long n) {
    return repeated_screening_vector(p, n, p - 1);
}

/* intermediate families, sector i = 0..p-1 */
inline FockVector singular_vector_family(long p, long i, long n) {
    return repeated_screening_vector(p, n, i);
}

/* Degree shift of a weight-preserving screening between graded sectors:
   source degree d maps to degree d + w(j) - w(j + step). */
inline long screening_degree_shift(long p, const ScreeningOp& op, long j_source) {
    long step = op.sector_step(p);
    /* operator weight is wt(e_step) - mode - 1; bottom weights absorb the rest */
    Rational d = sector_weight(p, j_source) + sector_weight(p, step) - op.mode(p) - 1 -
                 sector_weight(p, j_source + step);
    if (!is_integer(d)) throw UnsupportedMode("screening_degree_shift: non-integral shift");
    return to_long(d);
}

struct KernelRow {
    long degree = 0;
    long dim = 0;
    long rank = 0;
    long kernel = 0;
};

struct KernelReport {
    std::string op;
    long power = 1;
    long sector = 0;
    std::vector<KernelRow> rows;
};

/* Matrix of op^power on the degree-d component of sector j; rows are images
   of the canonical monomial basis in target-component coordinates. */
inline Matrix screening_image_matrix(const ScreeningOp& op, long power, long p, long j, long d) {
    long target_sector = j + power * op.sector_step(p);
    Rational td = sector_weight(p, j) + d - sector_weight(p, target_sector) +
                  power * (sector_weight(p, op.sector_step(p)) - op.mode(p) - 1);
    if (!is_integer(td))
        throw UnsupportedMode("screening_image_matrix: non-integral target degree");
    long target_degree = to_long(td);
    Matrix m;
    for (const auto& mono : graded_basis(d)) {
        FockVector v(p, j);
        v.add_term(mono, ExactScalar(1));
        FockVector img = power_apply(op, power, v);
        if (target_degree < 0) {
            if (!img.is_zero())
                throw IndexOutOfRange("screening_image_matrix: nonzero image below bottom degree");
            m.push_back(Row(1, ExactScalar(0)));
        } else {
            m.push_back(coordinates(img, target_degree));
        }
    }
    return m;
}

/* Graded kernel of op^power on sector j, degrees 0..dmax.  Exact ranks. */
inline KernelReport kernel_graded(const ScreeningOp& op, long power, long p, long j, long dmax) {
    KernelReport rep;
    rep.op = op.name();
    rep.power = power;
    rep.sector = j;
    for (long d = 0; d <= dmax; ++d) {
        Matrix m = screening_image_matrix(op, power, p, j, d);
        long dim = static_cast<long>(m.size());
        long rank = (dim == 0) ? 0 : exact_rank(m);
        rep.rows.push_back({d, dim, rank, dim - rank});
    }
    return rep;
}

/* Exact basis of the degree-d kernel of op^power on sector j, deterministic. */
inline std::vector<FockVector> kernel_basis(const ScreeningOp& op, long power, long p, long j,
                                            long d) {
    Matrix m = screening_image_matrix(op, power, p, j, d);
    auto basis = graded_basis(d);
    std::vector<FockVector> out;
    for (const auto& combo : left_nullspace(m)) {
        FockVector v(p, j);
        for (std::size_t k = 0; k < basis.size(); ++k)
            if (!combo[k].is_zero()) v.add_term(basis[k], combo[k]);
        if (!v.is_zero()) out.push_back(v);
    }
    return out;
}

inline bool is_in_kernel(const ScreeningOp& op, long power, const FockVector& v) {
    return power_apply(op, power, v).is_zero();
}

/* Coordinate rows spanning, at absolute degree d, the sum of Virasoro
   submodules generated by the given singular vectors (creation half suffices
   for singular generators; nonincreasing mode sequences span). */
inline Matrix virasoro_descendant_rows(long p, const std::vector<FockVector>& gens, long d) {
    Matrix rows;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (g.sector() != gens.front().sector())
            throw SectorMismatch("virasoro_descendant_rows: generators span several sectors");
        long dg = degree(g);
        if (dg > d) continue;
        for (const auto& part : partitions_of(static_cast<int>(d - dg))) {
            FockVector w = g;
            for (auto it = part.rbegin(); it != part.rend(); ++it)
                w = virasoro_act(-static_cast<long>(*it), w);
            if (!w.is_zero()) rows.push_back(coordinates(w, d));
        }
    }
    return rows;
}

inline long virasoro_span_dim(long p, const std::vector<FockVector>& gens, long d) {
    Matrix rows = virasoro_descendant_rows(p, gens, d);
    return rows.empty() ? 0 : exact_rank(rows);
}

} // namespace singlet

#endif
