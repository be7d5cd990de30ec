#ifndef HB_RATIONAL_HPP
#define HB_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "hb/errors.hpp"

namespace hb {

/// Exact arbitrary-precision fraction, always canonical: gcd(|num|, den) = 1,
/// den > 0. Backed by GMP's mpq.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}              // NOLINT: implicit by design
    Rational(long n, long d);
    Rational(const mpz_class& n, const mpz_class& d);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "p/q", or a decimal string with optional exponent
    /// ("1e-20", "-3.25", "0.5e+7"). Exact; never goes through floating point.
    static Rational from_string(std::string_view s);

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return sgn(v_) == 0; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }
    /// True iff the value is a non-negative integer that fits uint64.
    bool fits_uint64() const;
    std::uint64_t to_uint64() const;

    Rational abs() const;
    Rational reciprocal() const;
    /// x^e for any integer e (e < 0 requires x != 0).
    Rational pow_int(long e) const;

    std::string str() const;  // "p" or "p/q"

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_)); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_)); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_)); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_;
};

mpz_class binomial(unsigned long n, unsigned long k);

/// H_n = sum_{i=1..n} 1/i, exact. Balanced split keeps gcd work subquadratic;
/// identical in value to the left fold.
Rational harmonic_exact(std::uint64_t n);

/// sum_{i=a..b} 1/i, exact (a >= 1, a <= b).
Rational harmonic_range_exact(std::uint64_t a, std::uint64_t b);

/// sum_{j=1..k} 1/(x+j), exact, for rational x > 0. k = 0 gives 0.
Rational shifted_harmonic_sum(const Rational& x, std::uint64_t k);

/// sum_{j=1..k} 1/(x+j)^2, exact.
Rational shifted_harmonic_sq_sum(const Rational& x, std::uint64_t k);

/// Bernoulli number B_m under the B_1 = -1/2 convention, memoized recurrence
/// sum_{k=0..m} C(m+1,k) B_k = 0. Accepts any m >= 0; odd m >= 3 give 0.
const Rational& bernoulli_number(unsigned m);

/// B_m(x) = sum_{k=0..m} C(m,k) B_k x^{m-k}.
Rational bernoulli_polynomial(unsigned m, const Rational& x);

}  // namespace hb

#endif
