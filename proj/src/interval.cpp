#include "hb/interval.hpp"

#include <algorithm>

#include "hb/errors.hpp"

namespace hb {

namespace {

int join_bits(const Interval& a, const Interval& b) {
    return std::max(a.bits(), b.bits());
}

}  // namespace

Interval::Interval(Dyadic lo, Dyadic hi, int bits)
    : lo_(std::move(lo)), hi_(std::move(hi)), bits_(bits) {
    if (lo_ > hi_) throw Error("Interval: lo > hi");
}

Interval Interval::from_rational(const Rational& r, int bits) {
    return Interval(Dyadic::from_rational(r, bits, Round::down),
                    Dyadic::from_rational(r, bits, Round::up), bits);
}

Interval Interval::hull(const Rational& rlo, const Rational& rhi, int bits) {
    if (rlo > rhi) throw Error("Interval::hull: lo > hi");
    return Interval(Dyadic::from_rational(rlo, bits, Round::down),
                    Dyadic::from_rational(rhi, bits, Round::up), bits);
}

Interval Interval::add(const Interval& a, const Interval& b, int bits) {
    return Interval((a.lo_ + b.lo_).rounded(bits, Round::down),
                    (a.hi_ + b.hi_).rounded(bits, Round::up), bits);
}

Interval Interval::sub(const Interval& a, const Interval& b, int bits) {
    return Interval((a.lo_ - b.hi_).rounded(bits, Round::down),
                    (a.hi_ - b.lo_).rounded(bits, Round::up), bits);
}

Interval Interval::mul(const Interval& a, const Interval& b, int bits) {
    // Products of dyadics are exact, so min/max over the four corners is the
    // exact range; only the final rounding is outward.
    const Dyadic c[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    const Dyadic* lo = &c[0];
    const Dyadic* hi = &c[0];
    for (int i = 1; i < 4; ++i) {
        if (c[i] < *lo) lo = &c[i];
        if (c[i] > *hi) hi = &c[i];
    }
    return Interval(lo->rounded(bits, Round::down), hi->rounded(bits, Round::up), bits);
}

Interval Interval::neg(const Interval& a) {
    return Interval(-a.hi_, -a.lo_, a.bits_);
}

Interval Interval::recip(const Interval& a, int bits) {
    if (a.contains_zero())
        throw IntervalDivisionByZero("interval reciprocal: divisor encloses zero");
    const Dyadic one(1);
    return Interval(Dyadic::div(one, a.hi_, bits, Round::down),
                    Dyadic::div(one, a.lo_, bits, Round::up), bits);
}

Interval Interval::div(const Interval& a, const Interval& b, int bits) {
    return mul(a, recip(b, bits + 4), bits);
}

Interval Interval::mul_int(const Interval& a, long k, int bits) {
    const Dyadic f(k);
    if (k >= 0)
        return Interval((a.lo_ * f).rounded(bits, Round::down),
                        (a.hi_ * f).rounded(bits, Round::up), bits);
    return Interval((a.hi_ * f).rounded(bits, Round::down),
                    (a.lo_ * f).rounded(bits, Round::up), bits);
}

Interval Interval::div_uint(const Interval& a, unsigned long k, int bits) {
    if (k == 0) throw IntervalDivisionByZero("interval div_uint: zero divisor");
    const Dyadic d(static_cast<long>(k));
    return Interval(Dyadic::div(a.lo_, d, bits, Round::down),
                    Dyadic::div(a.hi_, d, bits, Round::up), bits);
}

Interval Interval::widened(const Rational& delta, int bits) const {
    if (delta.sign() < 0) throw DomainError("Interval::widened: negative delta");
    const Dyadic d = Dyadic::from_rational(delta, bits, Round::up);
    return Interval((lo_ - d).rounded(bits, Round::down),
                    (hi_ + d).rounded(bits, Round::up), bits);
}

Interval Interval::rounded(int bits) const {
    return Interval(lo_.rounded(bits, Round::down), hi_.rounded(bits, Round::up), bits);
}

Interval operator+(const Interval& a, const Interval& b) { return Interval::add(a, b, join_bits(a, b)); }
Interval operator-(const Interval& a, const Interval& b) { return Interval::sub(a, b, join_bits(a, b)); }
Interval operator*(const Interval& a, const Interval& b) { return Interval::mul(a, b, join_bits(a, b)); }

Interval interval_arith(const Interval& a, const Interval& b, IntervalOp op, int bits) {
    switch (op) {
        case IntervalOp::add: return Interval::add(a, b, bits);
        case IntervalOp::sub: return Interval::sub(a, b, bits);
        case IntervalOp::mul: return Interval::mul(a, b, bits);
        case IntervalOp::div: return Interval::div(a, b, bits);
        case IntervalOp::neg: return Interval::neg(a);
        case IntervalOp::recip: return Interval::recip(a, bits);
    }
    throw Error("interval_arith: bad op");
}

}  // namespace hb
