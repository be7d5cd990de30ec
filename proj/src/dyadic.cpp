#include "hb/dyadic.hpp"

#include <climits>
#include <cmath>

namespace hb {

namespace {

long bitlen(const mpz_class& z) {
    if (sgn(z) == 0) return 0;
    return static_cast<long>(mpz_sizeinbase(z.get_mpz_t(), 2));
}

}  // namespace

void Dyadic::normalize() {
    if (sgn(m_) == 0) {
        e_ = 0;
        return;
    }
    const auto tz = mpz_scan1(m_.get_mpz_t(), 0);
    if (tz > 0) {
        mpz_fdiv_q_2exp(m_.get_mpz_t(), m_.get_mpz_t(), tz);  // exact: trailing zeros
        e_ += static_cast<long>(tz);
    }
}

long Dyadic::mag2() const {
    if (is_zero()) return LONG_MIN / 2;
    return bitlen(m_) + e_;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const long e = a.e_ < b.e_ ? a.e_ : b.e_;
    mpz_class ma = a.m_, mb = b.m_;
    if (a.e_ > e) mpz_mul_2exp(ma.get_mpz_t(), ma.get_mpz_t(), static_cast<mp_bitcnt_t>(a.e_ - e));
    if (b.e_ > e) mpz_mul_2exp(mb.get_mpz_t(), mb.get_mpz_t(), static_cast<mp_bitcnt_t>(b.e_ - e));
    return Dyadic(ma + mb, e);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero() || b.is_zero()) return Dyadic();
    return Dyadic(a.m_ * b.m_, a.e_ + b.e_);
}

Dyadic Dyadic::rounded(int prec, Round dir) const {
    if (is_zero()) return *this;
    const long bl = bitlen(m_);
    if (bl <= prec) return *this;
    const long shift = bl - prec;
    mpz_class q;
    if (dir == Round::down)
        mpz_fdiv_q_2exp(q.get_mpz_t(), m_.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    else
        mpz_cdiv_q_2exp(q.get_mpz_t(), m_.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    return Dyadic(q, e_ + shift);
}

Dyadic Dyadic::div(const Dyadic& a, const Dyadic& b, int prec, Round dir) {
    if (b.is_zero()) throw DomainError("Dyadic::div: division by zero");
    if (a.is_zero()) return Dyadic();
    long s = prec + 2 + bitlen(b.m_) - bitlen(a.m_);
    if (s < 0) s = 0;
    mpz_class num = a.m_;
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
    mpz_class q;
    if (dir == Round::down)
        mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.m_.get_mpz_t());
    else
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), b.m_.get_mpz_t());
    return Dyadic(q, a.e_ - b.e_ - s).rounded(prec, dir);
}

Dyadic Dyadic::from_rational(const Rational& r, int prec, Round dir) {
    if (r.is_zero()) return Dyadic();
    const mpz_class& p = r.num();
    const mpz_class& q = r.den();
    long s = prec + 2 + bitlen(q) - bitlen(p);
    if (s < 0) s = 0;
    mpz_class num = p;
    mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
    mpz_class quot;
    if (dir == Round::down)
        mpz_fdiv_q(quot.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
    else
        mpz_cdiv_q(quot.get_mpz_t(), num.get_mpz_t(), q.get_mpz_t());
    return Dyadic(quot, -s).rounded(prec, dir);
}

Rational Dyadic::to_rational() const {
    if (is_zero()) return Rational(0);
    mpz_class p = m_;
    mpz_class q(1);
    if (e_ >= 0)
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e_));
    else
        mpz_mul_2exp(q.get_mpz_t(), q.get_mpz_t(), static_cast<mp_bitcnt_t>(-e_));
    return Rational(p, q);
}

double Dyadic::to_double() const {
    return mpz_get_d(m_.get_mpz_t()) * std::pow(2.0, static_cast<double>(e_));
}

int Dyadic::cmp(const Dyadic& o) const {
    const int sa = sign(), sb = o.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    const Dyadic d = *this - o;
    return d.sign();
}

int Dyadic::cmp(const Rational& r) const {
    // m*2^e vs p/q  <=>  m*q*2^e vs p
    mpz_class lhs = m_ * r.den();
    mpz_class rhs = r.num();
    if (e_ >= 0)
        mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), static_cast<mp_bitcnt_t>(e_));
    else
        mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), static_cast<mp_bitcnt_t>(-e_));
    return ::cmp(lhs, rhs) < 0 ? -1 : (lhs == rhs ? 0 : 1);
}

std::string Dyadic::str() const {
    return m_.get_str() + "*2^" + std::to_string(e_);
}

}  // namespace hb
