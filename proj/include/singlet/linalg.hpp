#ifndef SINGLET_LINALG_HPP
#define SINGLET_LINALG_HPP

#include <functional>
#include <vector>

#include "singlet/exact_scalar.hpp"

namespace singlet {

/* Dense exact linear algebra over Q(sqrt(2p)).  Elimination is exact field
   arithmetic with deterministic first-nonzero pivoting, so every rank and
   membership answer is reproducible bit for bit. */
using Row    = std::vector<ExactScalar>;
using Matrix = std::vector<Row>;

/* In-place forward elimination; returns the rank. */
inline long eliminate(Matrix& m) {
    if (m.empty()) return 0;
    size_t rows = m.size(), cols = m[0].size();
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = rows;
        for (size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { pivot = i; break; }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            ExactScalar f = m[i][c] / m[r][c];
            for (size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return static_cast<long>(r);
}

inline long exact_rank(Matrix m) { return eliminate(m); }

/* Is target in the row span?  (rank does not grow when it is appended) */
inline bool in_span(const Matrix& spanning, const Row& target) {
    Matrix m = spanning;
    long r0 = eliminate(m);
    m.push_back(target);
    return eliminate(m) == r0;
}

/* Basis of { c : sum_i c_i row_i = 0 }, by elimination with tracked row
   operations.  Deterministic like eliminate(). */
inline std::vector<Row> left_nullspace(const Matrix& m_in) {
    size_t rows = m_in.size();
    if (rows == 0) return {};
    size_t cols = m_in[0].size();
    Matrix m = m_in;
    for (size_t i = 0; i < rows; ++i)
        for (size_t j = 0; j < rows; ++j) m[i].push_back(ExactScalar(j == i ? 1 : 0));
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = rows;
        for (size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { pivot = i; break; }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            ExactScalar f = m[i][c] / m[r][c];
            for (size_t k = c; k < cols + rows; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    std::vector<Row> out;
    for (size_t i = r; i < rows; ++i) out.emplace_back(m[i].begin() + cols, m[i].end());
    return out;
}

/* Solve M x = b exactly (M square or tall, any rank); returns true and fills
   x on consistency, false if the system is inconsistent.  Free variables are
   set to zero, so the solution is deterministic. */
inline bool solve(const Matrix& m_in, const Row& b, Row& x) {
    size_t rows = m_in.size(), cols = m_in.empty() ? 0 : m_in[0].size();
    Matrix m = m_in;
    for (size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
    size_t r = 0;
    std::vector<long> pivot_col;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pivot = rows;
        for (size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { pivot = i; break; }
        if (pivot == rows) continue;
        std::swap(m[r], m[pivot]);
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c].is_zero()) continue;
            ExactScalar f = m[i][c] / m[r][c];
            for (size_t k = c; k <= cols; ++k) m[i][k] -= f * m[r][k];
        }
        pivot_col.push_back(static_cast<long>(c));
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (!m[i][cols].is_zero()) return false;
    x.assign(cols, ExactScalar(0));
    for (size_t i = 0; i < r; ++i) {
        size_t c = static_cast<size_t>(pivot_col[i]);
        x[c] = m[i][cols] / m[i][c];
    }
    return true;
}

/* Saturate a graded span from homogeneous seeds under an operator set;
   returns dimensions per degree 0..D.  deg(v) gives a vector's degree,
   coords(v, d) its coordinate row in the degree-d component.  Every accepted
   vector is re-fed to all operators until nothing new appears. */
template <class V, class DegFn, class CoordFn>
std::vector<long> graded_closure_dims(const std::vector<V>& seeds,
                                      const std::vector<std::function<V(const V&)>>& ops,
                                      long D, DegFn deg, CoordFn coords) {
    std::vector<Matrix> span(static_cast<std::size_t>(D + 1));
    std::vector<long> dims(static_cast<std::size_t>(D + 1), 0);
    std::vector<V> todo;
    auto accept = [&](const V& v) {
        if (v.is_zero()) return;
        long d = deg(v);
        if (d < 0 || d > D) return;
        auto ud = static_cast<std::size_t>(d);
        Matrix m = span[ud];
        m.push_back(coords(v, d));
        long r = eliminate(m);
        if (r > dims[ud]) {
            dims[ud] = r;
            span[ud] = std::move(m);
            todo.push_back(v);
        }
    };
    for (const auto& s : seeds) accept(s);
    while (!todo.empty()) {
        V v = todo.back();
        todo.pop_back();
        for (const auto& op : ops) accept(op(v));
    }
    return dims;
}

} // namespace singlet

#endif
