#ifndef SINGLET_PAIRING_HPP
#define SINGLET_PAIRING_HPP

#include "singlet/errors.hpp"
#include "singlet/fock.hpp"

namespace singlet {

/* Twisted contragredient pairing < , > : F_{j} x F_{2(p-1)-j} -> scalars,
   normalized by <e_j, e_{2(p-1)-j}> = 1, with adjoint rule
       <alpha(n) u, w> = -<u, alpha(-n) w> + 2(p-1) delta_{n,0} <u, w>.
   Under it L(n) and L(-n) are mutually adjoint.  Vectors of different
   degree pair to zero. */

inline ExactScalar twisted_pairing(const FockVector& u, const FockVector& w) {
    long p = u.p();
    if (w.p() != p) throw SectorMismatch("twisted_pairing: lattice mismatch");
    if (u.sector() + w.sector() != 2 * (p - 1))
        throw SectorMismatch("twisted_pairing: sectors " + std::to_string(u.sector()) +
                             " and " + std::to_string(w.sector()) + " are not complementary");
    ExactScalar total(0);
    for (const auto& [m, c] : w.terms()) {
        if (m.parts.empty()) {
            auto it = u.terms().find(m.parts.empty() ? FockMonomial{} : m);
            if (it != u.terms().end()) total += c * it->second;
            continue;
        }
        /* peel the largest creation mode off the right argument */
        int n = m.parts.front();
        FockMonomial rest{Partition(m.parts.begin() + 1, m.parts.end())};
        FockVector wrest(p, w.sector());
        wrest.add_term(rest, c);
        FockVector u2 = ExactScalar(-1) * mode_act(n, u);
        if (!u2.is_zero()) total += twisted_pairing(u2, wrest);
    }
    return total;
}

} // namespace singlet

#endif
