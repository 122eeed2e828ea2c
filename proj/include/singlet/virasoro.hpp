#ifndef SINGLET_VIRASORO_HPP
#define SINGLET_VIRASORO_HPP

#include <string>
#include <vector>

#include "singlet/errors.hpp"
#include "singlet/fock.hpp"

namespace singlet {

/* Virasoro action built from Heisenberg modes, deformed by a = (p-1)/sqrt(2p):
       L(n) = (1/4p) sum_k :alpha(k) alpha(n-k):  -  ((n+1)(p-1)/2p) alpha(n),
       c    = 1 - 6 (p-1)^2 / p.
   The templates below act on any module type V providing mode_act(k, v),
   vector addition, ExactScalar scaling, v.p() and max_degree_of(v); Fock
   sectors and Jordan tensor modules both qualify. */

inline Rational central_charge(long p) {
    return 1 - Rational(6 * (p - 1) * (p - 1)) / p;
}

template <class V>
V virasoro_act(long n, const V& v) {
    if (v.is_zero()) return v;
    long p = v.p();
    int D = max_degree_of(v) + 1;
    V out = ExactScalar(0) * v;
    Rational quarter_p = Rational(1) / (4 * p);
    /* :alpha(k) alpha(n-k): applies the larger (annihilating) index first.
       Terms with an annihilator above degree D vanish, so k ranges [n-D, D]. */
    for (long k = n - D; k <= D; ++k) {
        long a = k, b = n - k;
        if (a > b) std::swap(a, b);
        V w = mode_act(a, mode_act(b, v));
        if (w.is_zero()) continue;
        out = out + ExactScalar(quarter_p) * w;
    }
    Rational a_coeff = -Rational((n + 1) * (p - 1)) / (2 * p);
    if (a_coeff != 0) out = out + ExactScalar(a_coeff) * mode_act(n, v);
    return out;
}

/* Singular vector test: homogeneous, nonzero, killed by L(1) and L(2)
   (which generate the raising half of the algebra). */
template <class V>
bool is_singular(const V& v) {
    if (v.is_zero()) return false;
    if (!is_homogeneous(v)) throw NonHomogeneous("is_singular: vector mixes degrees");
    return virasoro_act(1, v).is_zero() && virasoro_act(2, v).is_zero();
}

/* Lowest weights h_{m,n} = ((m - n p)^2 - (p-1)^2) / 4p of the reducible
   Verma family at c = c_{p,1}. */
inline Rational h_mn(long p, long m, long n) {
    long t = m - n * p;
    return Rational(t * t - (p - 1) * (p - 1)) / (4 * p);
}

/* Embedding chain of Verma modules below V(c, h_{m,1}).
   For p | m the chain is linear:   m, m+2p, m+4p, ...
   Otherwise it is braided:         m0, m0+2p, -m0+4p, m0+4p, -m0+6p, m0+6p, ...
   with m0 the representative of m in 1..p-1 under m -> m mod 2p, m -> 2p-m
   (these reflections fix h_{m,1}). */
struct ChainDescriptor {
    long p = 0;
    bool braided = false;
    std::vector<long> ms;          // first index of each chain entry
    std::vector<Rational> weights; // h_{m,1} down the chain, strictly increasing
};

inline ChainDescriptor verma_chain(long p, long m, int count) {
    if (p < 2) throw IndexOutOfRange("verma_chain: p must be >= 2");
    if (m <= 0) throw IndexOutOfRange("verma_chain: m must be positive");
    if (count < 1) throw IndexOutOfRange("verma_chain: count must be >= 1");
    ChainDescriptor chain;
    chain.p = p;
    if (m % p == 0) {
        chain.braided = false;
        for (int k = 0; k < count; ++k) chain.ms.push_back(m + 2 * p * k);
    } else {
        chain.braided = true;
        long m0 = m % (2 * p);
        if (m0 > p) m0 = 2 * p - m0;
        chain.ms.push_back(m0);
        /* entries pair up as (-m0, +m0) around successive even multiples of p */
        for (long k = 1; static_cast<int>(chain.ms.size()) < count; ++k) {
            chain.ms.push_back(m0 + 2 * p * k);
            if (static_cast<int>(chain.ms.size()) < count)
                chain.ms.push_back(-m0 + 2 * p * (k + 1));
        }
    }
    for (long mi : chain.ms) chain.weights.push_back(h_mn(p, mi, 1));
    return chain;
}

} // namespace singlet

#endif
