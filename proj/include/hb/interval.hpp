#ifndef HB_INTERVAL_HPP
#define HB_INTERVAL_HPP

#include "hb/dyadic.hpp"
#include "hb/rational.hpp"

namespace hb {

/// Outward-rounded enclosure [lo, hi]: every operation returns an interval
/// guaranteed to contain the exact image of its operand intervals, with
/// endpoints rounded away from the true value at `bits` mantissa bits.
class Interval {
public:
    Interval() : lo_(), hi_(), bits_(0) {}
    Interval(Dyadic lo, Dyadic hi, int bits);

    static Interval from_int(long v, int bits) { return Interval(Dyadic(v), Dyadic(v), bits); }
    static Interval from_rational(const Rational& r, int bits);
    /// Outward hull of the exact rational interval [rlo, rhi].
    static Interval hull(const Rational& rlo, const Rational& rhi, int bits);

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }
    int bits() const { return bits_; }

    bool is_point() const { return lo_ == hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool contains(const Rational& r) const { return lo_.cmp(r) <= 0 && hi_.cmp(r) >= 0; }
    bool contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool intersects(const Interval& o) const { return lo_ <= o.hi_ && o.lo_ <= hi_; }
    /// hi < other.lo: every point of *this is below every point of other.
    bool strictly_below(const Interval& o) const { return hi_ < o.lo_; }
    bool strictly_below(const Rational& r) const { return hi_.cmp(r) < 0; }
    bool strictly_above(const Rational& r) const { return lo_.cmp(r) > 0; }

    /// Upper bound on hi - lo (exact dyadic).
    Dyadic width() const { return hi_ - lo_; }
    bool width_at_most(const Rational& w) const { return width().cmp(w) <= 0; }

    static Interval add(const Interval& a, const Interval& b, int bits);
    static Interval sub(const Interval& a, const Interval& b, int bits);
    static Interval mul(const Interval& a, const Interval& b, int bits);
    static Interval neg(const Interval& a);
    /// Requires 0 strictly outside [a]; throws IntervalDivisionByZero otherwise.
    static Interval recip(const Interval& a, int bits);
    static Interval div(const Interval& a, const Interval& b, int bits);

    /// Exact scaling by a machine integer (then outward rounding).
    static Interval mul_int(const Interval& a, long k, int bits);
    /// Directed division by a positive machine integer.
    static Interval div_uint(const Interval& a, unsigned long k, int bits);
    /// Widen outward by the exact rational delta >= 0 on both sides.
    Interval widened(const Rational& delta, int bits) const;

    Interval rounded(int bits) const;

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator*(const Interval& a, const Interval& b);
    Interval operator-() const { return neg(*this); }

private:
    Dyadic lo_, hi_;
    int bits_;
};

enum class IntervalOp { add, sub, mul, div, neg, recip };

/// Uniform dispatcher over the interval operation set. For the unary ops
/// (neg, recip) the second operand is ignored.
Interval interval_arith(const Interval& a, const Interval& b, IntervalOp op, int bits);

}  // namespace hb

#endif
