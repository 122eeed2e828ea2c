#ifndef SINGLET_FOCK_HPP
#define SINGLET_FOCK_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "singlet/errors.hpp"
#include "singlet/exact_scalar.hpp"
#include "singlet/partitions.hpp"
#include "singlet/rational.hpp"

namespace singlet {

/* Rank-one lattice Z*alpha with <alpha,alpha> = 2p.  Momenta live in the dual
   lattice and are indexed by an integer j: sector j means momentum (j/2p)alpha,
   so alpha(0) acts on the sector bottom e_j by j.  Heisenberg modes obey
       [alpha(m), alpha(n)] = 2p * m * delta_{m+n,0}.
   Conformal weights use the deformed energy operator (see virasoro.hpp):
       wt(e_j) = (j^2 - 2 j (p-1)) / 4p,  wt(alpha(-n)) = n. */

inline Rational sector_weight(long p, long j) {
    return Rational(j * j - 2 * j * (p - 1)) / (4 * p);
}

/* Basis monomial alpha(-n1)...alpha(-nk) e_j, parts weakly decreasing. */
struct FockMonomial {
    Partition parts;

    int degree() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    bool operator<(const FockMonomial& o) const { return parts < o.parts; }
    bool operator==(const FockMonomial& o) const { return parts == o.parts; }
};

class FockVector {
public:
    FockVector() : p_(0), sector_(0) {}
    FockVector(long p, long sector) : p_(p), sector_(sector) {
        if (p < 2) throw IndexOutOfRange("FockVector: p must be >= 2");
    }

    long p() const { return p_; }
    long sector() const { return sector_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<FockMonomial, ExactScalar>& terms() const { return terms_; }

    void add_term(const FockMonomial& m, const ExactScalar& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend FockVector operator+(const FockVector& a, const FockVector& b) {
        if (b.is_zero()) return a;
        if (a.is_zero()) return b;
        a.require_same_space(b);
        FockVector r = a;
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        return r;
    }
    friend FockVector operator-(const FockVector& a, const FockVector& b) {
        return a + (ExactScalar(-1) * b);
    }
    friend FockVector operator*(const ExactScalar& c, const FockVector& v) {
        if (c.is_zero()) return FockVector(v.p_ == 0 ? 2 : v.p_, v.sector_);
        FockVector r(v.p_ == 0 ? 2 : v.p_, v.sector_);
        for (const auto& [m, coeff] : v.terms_) r.terms_.emplace(m, c * coeff);
        return r;
    }
    friend bool operator==(const FockVector& a, const FockVector& b) {
        if (a.is_zero() && b.is_zero()) return true;
        a.require_same_space(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const FockVector& a, const FockVector& b) { return !(a == b); }

    void require_same_space(const FockVector& o) const {
        if (is_zero() || o.is_zero()) return;
        if (p_ != o.p_ || sector_ != o.sector_)
            throw SectorMismatch("FockVector: sector/lattice mismatch (" +
                                 std::to_string(sector_) + " vs " + std::to_string(o.sector_) + ")");
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += "  +  ";
            s += "(" + c.str() + ")";
            for (int part : m.parts) s += " a(-" + std::to_string(part) + ")";
            s += " e[" + std::to_string(sector_) + "]";
        }
        return s;
    }

private:
    long p_;
    long sector_;
    std::map<FockMonomial, ExactScalar> terms_;
};

/* The sector bottom e_j (empty partition, coefficient 1). */
inline FockVector sector_bottom(long p, long j) {
    FockVector v(p, j);
    v.add_term(FockMonomial{}, ExactScalar(1));
    return v;
}

/* alpha(n) on a basis monomial.
   n < 0 appends a part; n > 0 contracts against matching parts with the
   commutator value 2p*n per occurrence; n = 0 multiplies by the sector. */
inline FockVector mode_act(long n, const FockVector& v) {
    if (v.is_zero()) return v;
    long p = v.p(), j = v.sector();
    FockVector out(p, j);
    if (n == 0) {
        return ExactScalar(Rational(j)) * v;
    }
    if (n < 0) {
        int part = static_cast<int>(-n);
        for (const auto& [m, c] : v.terms()) {
            FockMonomial m2 = m;
            m2.parts.insert(std::upper_bound(m2.parts.begin(), m2.parts.end(), part,
                                             std::greater<int>()),
                            part);
            out.add_term(m2, c);
        }
        return out;
    }
    int part = static_cast<int>(n);
    for (const auto& [m, c] : v.terms()) {
        long mult = std::count(m.parts.begin(), m.parts.end(), part);
        if (mult == 0) continue;
        FockMonomial m2 = m;
        m2.parts.erase(std::find(m2.parts.begin(), m2.parts.end(), part));
        out.add_term(m2, ExactScalar(Rational(mult) * 2 * p * n) * c);
    }
    return out;
}

inline Rational monomial_weight(long p, long sector, const FockMonomial& m) {
    return sector_weight(p, sector) + m.degree();
}

inline bool is_homogeneous(const FockVector& v) {
    if (v.is_zero()) return true;
    int d = v.terms().begin()->first.degree();
    for (const auto& [m, c] : v.terms())
        if (m.degree() != d) return false;
    return true;
}

/* Conformal weight of a homogeneous vector. */
inline Rational weight(const FockVector& v) {
    if (v.is_zero()) throw NonHomogeneous("weight: zero vector has no weight");
    if (!is_homogeneous(v)) throw NonHomogeneous("weight: vector mixes degrees");
    return monomial_weight(v.p(), v.sector(), v.terms().begin()->first);
}

/* Heisenberg degree (levels above the sector bottom) of a homogeneous vector. */
inline int degree(const FockVector& v) {
    if (v.is_zero()) throw NonHomogeneous("degree: zero vector has no degree");
    if (!is_homogeneous(v)) throw NonHomogeneous("degree: vector mixes degrees");
    return v.terms().begin()->first.degree();
}

/* Projection onto the Heisenberg degree-d layer. */
inline FockVector component(const FockVector& v, int d) {
    FockVector out(v.p() == 0 ? 2 : v.p(), v.sector());
    for (const auto& [m, c] : v.terms())
        if (m.degree() == d) out.add_term(m, c);
    return out;
}

inline int max_degree_of(const FockVector& v) {
    int d = 0;
    for (const auto& [m, c] : v.terms()) d = std::max(d, m.degree());
    return d;
}

/* Canonical ordered basis of the degree-d layer of a sector. */
inline std::vector<FockMonomial> graded_basis(int d) {
    std::vector<FockMonomial> out;
    for (auto& parts : partitions_of(d)) out.push_back(FockMonomial{parts});
    return out;
}

inline BigInt graded_dim(int d) { return partition_count(d); }

/* Coefficient vector of v's degree-d layer in the canonical basis order. */
inline std::vector<ExactScalar> coordinates(const FockVector& v, int d) {
    std::vector<FockMonomial> basis = graded_basis(d);
    std::vector<ExactScalar> out(basis.size(), ExactScalar(0));
    for (const auto& [m, c] : v.terms()) {
        if (m.degree() != d) continue;
        auto it = std::find(basis.begin(), basis.end(), m);
        out[static_cast<size_t>(it - basis.begin())] = c;
    }
    return out;
}

} // namespace singlet

#endif
