#include "hb/ln.hpp"

#include <map>
#include <mutex>

#include "hb/errors.hpp"

namespace hb {

namespace {

// 2 * atanh(t) = 2 * sum_{j>=0} t^{2j+1}/(2j+1) as an interval at `wp`
// working bits. Requires t^2 <= 1/8 so the geometric tail factor 1/(1-t^2)
// stays below 8/7; both call sites guarantee |t| <= 1/3.
Interval two_atanh_enclosure(const Rational& t, int wp) {
    if (t.is_zero()) return Interval::from_int(0, wp);
    const Interval tI = Interval::from_rational(t, wp);
    const Interval t2I = Interval::mul(tI, tI, wp);
    Interval pow = tI;
    Interval sum = Interval::from_int(0, wp);
    const long tail_mag = -(wp - 8);  // stop once |t|^{2j+1} < 2^tail_mag
    unsigned long j = 0;
    while (true) {
        sum = Interval::add(sum, Interval::div_uint(pow, 2 * j + 1, wp), wp);
        pow = Interval::mul(pow, t2I, wp);
        ++j;
        const long m = std::max(pow.lo().mag2(), pow.hi().mag2());
        if (m < tail_mag) break;
        if (j > 100000) throw Error("two_atanh_enclosure: series failed to converge");
    }
    // tail <= |t|^{2j+1} / ((2j+1)(1-t^2)) <= 2^tail_mag * 8/7 < 2^{tail_mag+1}
    const Dyadic tail_bound(mpz_class(1), tail_mag + 1);
    Interval res(sum.lo() - tail_bound, sum.hi() + tail_bound, wp);
    return Interval::mul_int(res, 2, wp);
}

}  // namespace

Interval ln2_enclosure(int bits) {
    static std::map<int, Interval> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(bits);
    if (it != cache.end()) return it->second;
    const Interval v = two_atanh_enclosure(Rational(1, 3), bits);
    cache.emplace(bits, v);
    return v;
}

Interval ln_enclosure(const Rational& x, int bits) {
    if (x.sign() <= 0) throw DomainError("ln_enclosure: x must be positive");
    if (x == Rational(1)) return Interval::from_int(0, bits);

    const int wp = bits + 16;

    // Find k with m = x / 2^k in [2/3, 4/3].
    long k = static_cast<long>(mpz_sizeinbase(x.num().get_mpz_t(), 2)) -
             static_cast<long>(mpz_sizeinbase(x.den().get_mpz_t(), 2));
    const Rational two_thirds(2, 3), four_thirds(4, 3);
    Rational m = x * Rational(1, 2).pow_int(k);
    while (m > four_thirds) {
        m = m * Rational(1, 2);
        ++k;
    }
    while (m < two_thirds) {
        m = m * Rational(2);
        --k;
    }

    Interval acc = Interval::from_int(0, wp);
    if (m != Rational(1)) {
        const Rational t = (m - Rational(1)) / (m + Rational(1));  // |t| <= 1/5
        acc = two_atanh_enclosure(t, wp);
    }
    if (k != 0) acc = Interval::add(acc, Interval::mul_int(ln2_enclosure(wp), k, wp), wp);
    return acc.rounded(bits);
}

}  // namespace hb
