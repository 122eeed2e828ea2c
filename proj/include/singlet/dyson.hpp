#ifndef SINGLET_DYSON_HPP
#define SINGLET_DYSON_HPP

#include <map>
#include <vector>

#include "singlet/errors.hpp"
#include "singlet/rational.hpp"

namespace singlet {

/* Integer Laurent polynomials in several variables: exponent vector -> coeff. */
using ExponentVector = std::vector<int>;
using IntPoly = std::map<ExponentVector, BigInt>;

/* Expand prod_{i<j} (x_i - x_j)^e over nvars variables.  Exponents above
   prune_max in any variable are dropped (valid when the caller only reads
   coefficients at or below that exponent and all factors raise exponents).
   budget bounds the number of simultaneously stored monomials. */
inline IntPoly vandermonde_power(int nvars, int e, int prune_max, std::size_t budget) {
    IntPoly poly;
    poly.emplace(ExponentVector(nvars, 0), BigInt(1));
    std::vector<BigInt> binom_row(e + 1);
    for (int t = 0; t <= e; ++t) binom_row[t] = factorial(e) / (factorial(t) * factorial(e - t));
    for (int i = 0; i < nvars; ++i) {
        for (int j = i + 1; j < nvars; ++j) {
            IntPoly next;
            for (const auto& [ev, c] : poly) {
                for (int t = 0; t <= e; ++t) {
                    ExponentVector ev2 = ev;
                    ev2[i] += t;
                    ev2[j] += e - t;
                    if (prune_max >= 0 && (ev2[i] > prune_max || ev2[j] > prune_max)) continue;
                    BigInt term = c * binom_row[t];
                    if ((e - t) % 2 != 0) term = -term;
                    auto it = next.find(ev2);
                    if (it == next.end()) {
                        next.emplace(std::move(ev2), term);
                        if (next.size() > budget)
                            throw BudgetExceeded("vandermonde_power: monomial budget exceeded");
                    } else {
                        it->second += term;
                        if (it->second == 0) next.erase(it);
                    }
                }
            }
            poly = std::move(next);
        }
    }
    return poly;
}

/* Constant term of prod_{i<j}(x_i - x_j)^{2p} (x_1...x_{2n})^{-(2n-1)p},
   computed by brute-force expansion. */
inline BigInt dyson_constant_brute(long n, long p, std::size_t budget = 2000000) {
    if (n < 1 || p < 1) throw IndexOutOfRange("dyson_constant_brute: n, p must be positive");
    int nvars = static_cast<int>(2 * n);
    int target = static_cast<int>((2 * n - 1) * p);
    IntPoly poly = vandermonde_power(nvars, static_cast<int>(2 * p), target, budget);
    auto it = poly.find(ExponentVector(nvars, target));
    return it == poly.end() ? BigInt(0) : it->second;
}

/* Closed form (-1)^{np} (2np)! / (p!)^{2n}. */
inline BigInt dyson_constant_closed(long n, long p) {
    if (n < 1 || p < 1) throw IndexOutOfRange("dyson_constant_closed: n, p must be positive");
    BigInt v = factorial(2 * n * p);
    BigInt d = 1;
    for (long k = 0; k < 2 * n; ++k) d *= factorial(p);
    v /= d;
    if ((n * p) % 2 != 0) v = -v;
    return v;
}

} // namespace singlet

#endif
