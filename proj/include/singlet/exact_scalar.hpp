#ifndef SINGLET_EXACT_SCALAR_HPP
#define SINGLET_EXACT_SCALAR_HPP

#include <string>
#include <utility>

#include "singlet/errors.hpp"
#include "singlet/rational.hpp"

namespace singlet {

inline long integer_sqrt(long n) {
    long r = 0;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

/* Element of the quadratic field Q(sqrt(D)), D = 2p: value = rat + surd*sqrt(D).
   Invariants:
     - if D is a perfect square the surd is folded into rat (surd == 0), so
       equality is plain componentwise comparison;
     - radicand 0 marks a pure rational compatible with every field; mixing
       two distinct nonzero radicands is a usage error and throws. */
class ExactScalar {
public:
    ExactScalar() : rat_(0), surd_(0), radicand_(0) {}
    ExactScalar(long v) : rat_(v), surd_(0), radicand_(0) {}
    ExactScalar(Rational v) : rat_(std::move(v)), surd_(0), radicand_(0) {}
    ExactScalar(Rational rat, Rational surd, long radicand)
        : rat_(std::move(rat)), surd_(std::move(surd)), radicand_(radicand) {
        if (radicand_ < 0) throw IndexOutOfRange("ExactScalar: negative radicand");
        normalize();
    }

    const Rational& rat() const { return rat_; }
    const Rational& surd() const { return surd_; }
    long radicand() const { return radicand_; }

    bool is_zero() const { return rat_ == 0 && surd_ == 0; }
    bool is_rational() const { return surd_ == 0; }

    friend ExactScalar operator+(const ExactScalar& a, const ExactScalar& b) {
        long d = join(a, b);
        return raw(a.rat_ + b.rat_, a.surd_ + b.surd_, d);
    }
    friend ExactScalar operator-(const ExactScalar& a, const ExactScalar& b) {
        long d = join(a, b);
        return raw(a.rat_ - b.rat_, a.surd_ - b.surd_, d);
    }
    ExactScalar operator-() const { return raw(-rat_, -surd_, radicand_); }
    friend ExactScalar operator*(const ExactScalar& a, const ExactScalar& b) {
        long d = join(a, b);
        return raw(a.rat_ * b.rat_ + a.surd_ * b.surd_ * d,
                   a.rat_ * b.surd_ + a.surd_ * b.rat_, d);
    }
    friend ExactScalar operator/(const ExactScalar& a, const ExactScalar& b) {
        if (b.is_zero()) throw IndexOutOfRange("ExactScalar: division by zero");
        long d = join(a, b);
        /* 1/(c + d*sqrt(D)) = (c - d*sqrt(D)) / (c^2 - d^2 D); the norm is
           nonzero because sqrt(D) is irrational once squares are folded. */
        Rational nrm = b.rat_ * b.rat_ - b.surd_ * b.surd_ * d;
        return a * raw(b.rat_ / nrm, -b.surd_ / nrm, d);
    }
    ExactScalar& operator+=(const ExactScalar& b) { return *this = *this + b; }
    ExactScalar& operator-=(const ExactScalar& b) { return *this = *this - b; }
    ExactScalar& operator*=(const ExactScalar& b) { return *this = *this * b; }
    ExactScalar& operator/=(const ExactScalar& b) { return *this = *this / b; }

    friend bool operator==(const ExactScalar& a, const ExactScalar& b) {
        if (!a.is_rational() && !b.is_rational()) join(a, b);
        return a.rat_ == b.rat_ && a.surd_ == b.surd_;
    }
    friend bool operator!=(const ExactScalar& a, const ExactScalar& b) { return !(a == b); }

    std::string str() const {
        if (is_rational()) return fraction_string(rat_);
        return fraction_string(rat_) + " + " + fraction_string(surd_) +
               "*sqrt(" + std::to_string(radicand_) + ")";
    }

private:
    static ExactScalar raw(Rational r, Rational s, long d) {
        ExactScalar x;
        x.rat_ = std::move(r);
        x.surd_ = std::move(s);
        x.radicand_ = d;
        x.normalize();
        return x;
    }
    void normalize() {
        if (radicand_ > 0 && surd_ != 0) {
            long r = integer_sqrt(radicand_);
            if (r * r == radicand_) {
                rat_ += surd_ * r;
                surd_ = 0;
            }
        }
        if (surd_ == 0 && radicand_ != 0) radicand_ = 0;
    }
    static long join(const ExactScalar& a, const ExactScalar& b) {
        if (a.radicand_ == 0) return b.radicand_;
        if (b.radicand_ == 0 || a.radicand_ == b.radicand_) return a.radicand_;
        throw SectorMismatch("ExactScalar: mixing sqrt(" + std::to_string(a.radicand_) +
                             ") with sqrt(" + std::to_string(b.radicand_) + ")");
    }

    Rational rat_, surd_;
    long radicand_;
};

/* sqrt(2p) as a field element. */
inline ExactScalar sqrt_2p(long p) { return ExactScalar(0, 1, 2 * p); }

/* The deformation parameter a = lambda_p = (p-1)/sqrt(2p); c = 1 - 12 a^2. */
inline ExactScalar lambda_p(long p) {
    return ExactScalar(0, Rational(p - 1) / (2 * p), 2 * p);
}

} // namespace singlet

#endif
