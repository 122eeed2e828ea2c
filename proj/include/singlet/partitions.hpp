#ifndef SINGLET_PARTITIONS_HPP
#define SINGLET_PARTITIONS_HPP

#include <vector>

#include "singlet/errors.hpp"
#include "singlet/rational.hpp"

namespace singlet {

using Partition = std::vector<int>; // weakly decreasing positive parts

/* All partitions of d in reverse-lexicographic order ([d] first, [1,...,1]
   last).  This order is the canonical basis order for every graded
   component, so matrices and kernel computations are reproducible. */
inline void partitions_of(int d, int max_part, std::vector<Partition>& out, Partition& prefix) {
    if (d == 0) {
        out.push_back(prefix);
        return;
    }
    for (int k = (d < max_part ? d : max_part); k >= 1; --k) {
        prefix.push_back(k);
        partitions_of(d - k, k, out, prefix);
        prefix.pop_back();
    }
}

inline std::vector<Partition> partitions_of(int d) {
    if (d < 0) throw IndexOutOfRange("partitions_of: negative degree");
    std::vector<Partition> out;
    Partition prefix;
    partitions_of(d, d, out, prefix);
    return out;
}

/* p(n) by the pentagonal-number recurrence; independent of the enumeration
   above, so the two can cross-check each other. */
inline const BigInt& partition_count(int n) {
    static std::vector<BigInt> cache{1};
    if (n < 0) { static const BigInt zero = 0; return zero; }
    while (static_cast<int>(cache.size()) <= n) {
        int m = static_cast<int>(cache.size());
        BigInt total = 0;
        for (int k = 1;; ++k) {
            long g1 = static_cast<long>(k) * (3 * k - 1) / 2;
            long g2 = static_cast<long>(k) * (3 * k + 1) / 2;
            if (g1 > m && g2 > m) break;
            BigInt term = 0;
            if (g1 <= m) term += cache[m - g1];
            if (g2 <= m) term += cache[m - g2];
            if (k % 2 == 1) total += term; else total -= term;
        }
        cache.push_back(total);
    }
    return cache[n];
}

} // namespace singlet

#endif
