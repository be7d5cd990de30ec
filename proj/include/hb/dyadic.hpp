#ifndef HB_DYADIC_HPP
#define HB_DYADIC_HPP

#include <string>

#include <gmpxx.h>

#include "hb/rational.hpp"

namespace hb {

enum class Round { down, up };  // toward -inf / toward +inf

/// Arbitrary-precision dyadic number m * 2^e with odd (or zero) mantissa.
/// Add/sub/mul are exact; rounding happens only where requested, with an
/// explicit direction. This is the endpoint type for Interval.
class Dyadic {
public:
    Dyadic() : m_(0), e_(0) {}
    explicit Dyadic(long v) : m_(v), e_(0) { normalize(); }
    Dyadic(mpz_class m, long e) : m_(std::move(m)), e_(e) { normalize(); }

    bool is_zero() const { return sgn(m_) == 0; }
    int sign() const { return sgn(m_); }
    const mpz_class& mantissa() const { return m_; }
    long exponent() const { return e_; }

    /// Smallest p with |value| < 2^p (so 2^{p-1} <= |value| < 2^p for
    /// nonzero values). Zero reports a very small sentinel.
    long mag2() const;

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b) { return a + (-b); }
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    Dyadic operator-() const { return Dyadic(-m_, e_); }

    /// Directed rounding to at most prec mantissa bits.
    Dyadic rounded(int prec, Round dir) const;

    /// Directed a/b correct to prec bits (b != 0).
    static Dyadic div(const Dyadic& a, const Dyadic& b, int prec, Round dir);

    /// Directed conversion of an exact rational, prec mantissa bits.
    /// Exact (both directions agree) whenever r is dyadic and fits.
    static Dyadic from_rational(const Rational& r, int prec, Round dir);

    Rational to_rational() const;
    double to_double() const;  // diagnostics only, not certified

    int cmp(const Dyadic& o) const;
    int cmp(const Rational& r) const;
    friend bool operator==(const Dyadic& a, const Dyadic& b) { return a.cmp(b) == 0; }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return a.cmp(b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return a.cmp(b) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return a.cmp(b) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return a.cmp(b) >= 0; }

    std::string str() const;  // "m*2^e" debug form

private:
    void normalize();

    mpz_class m_;
    long e_;
};

}  // namespace hb

#endif
