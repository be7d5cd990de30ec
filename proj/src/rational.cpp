#include "hb/rational.hpp"

#include <mutex>
#include <vector>

namespace hb {

Rational::Rational(long n, long d) {
    if (d == 0) throw DomainError("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& n, const mpz_class& d) {
    if (d == 0) throw DomainError("Rational: zero denominator");
    v_ = mpq_class(n, d);
    v_.canonicalize();
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw DomainError("Rational: reciprocal of zero");
    return Rational(den(), num());
}

Rational Rational::pow_int(long e) const {
    if (e == 0) return Rational(1);
    const Rational base = e < 0 ? reciprocal() : *this;
    const unsigned long k =
        e < 0 ? -static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    mpz_class pn, pd;
    mpz_pow_ui(pn.get_mpz_t(), base.num().get_mpz_t(), k);
    mpz_pow_ui(pd.get_mpz_t(), base.den().get_mpz_t(), k);
    return Rational(pn, pd);
}

bool Rational::fits_uint64() const {
    return is_integer() && sign() >= 0 && mpz_fits_ulong_p(num().get_mpz_t()) != 0;
}

std::uint64_t Rational::to_uint64() const {
    if (!fits_uint64()) throw DomainError("Rational: not a uint64");
    return mpz_get_ui(num().get_mpz_t());
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

Rational Rational::from_string(std::string_view s) {
    if (s.empty()) throw DomainError("Rational: empty string");
    const std::string str(s);
    if (str.find('/') != std::string::npos) {
        const auto pos = str.find('/');
        const std::string ns = str.substr(0, pos);
        const std::string ds = str.substr(pos + 1);
        mpz_class n, d;
        if (n.set_str(ns, 10) != 0 || d.set_str(ds, 10) != 0)
            throw DomainError("Rational: malformed fraction '" + str + "'");
        return Rational(n, d);
    }
    // decimal with optional fraction part and exponent
    std::size_t i = 0;
    bool neg = false;
    if (i < str.size() && (str[i] == '+' || str[i] == '-')) {
        neg = str[i] == '-';
        ++i;
    }
    std::string digits;
    long frac_digits = 0;
    bool seen_digit = false, seen_point = false;
    for (; i < str.size(); ++i) {
        const char c = str[i];
        if (c >= '0' && c <= '9') {
            digits += c;
            seen_digit = true;
            if (seen_point) ++frac_digits;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else if (c == 'e' || c == 'E') {
            break;
        } else {
            throw DomainError("Rational: malformed number '" + str + "'");
        }
    }
    if (!seen_digit) throw DomainError("Rational: malformed number '" + str + "'");
    long expo = 0;
    if (i < str.size()) {  // at 'e'
        ++i;
        bool eneg = false;
        if (i < str.size() && (str[i] == '+' || str[i] == '-')) {
            eneg = str[i] == '-';
            ++i;
        }
        if (i >= str.size()) throw DomainError("Rational: malformed exponent '" + str + "'");
        for (; i < str.size(); ++i) {
            if (str[i] < '0' || str[i] > '9') throw DomainError("Rational: malformed exponent '" + str + "'");
            expo = expo * 10 + (str[i] - '0');
            if (expo > 1000000) throw DomainError("Rational: exponent out of range");
        }
        if (eneg) expo = -expo;
    }
    mpz_class mant;
    mant.set_str(digits.empty() ? "0" : digits, 10);
    if (neg) mant = -mant;
    const long p10 = expo - frac_digits;
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(p10 < 0 ? -p10 : p10));
    if (p10 >= 0) return Rational(mant * scale, mpz_class(1));
    return Rational(mant, scale);
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

namespace {

Rational harmonic_split(std::uint64_t a, std::uint64_t b) {
    if (b - a < 16) {
        Rational s(0);
        for (std::uint64_t i = a; i <= b; ++i) s += Rational(mpz_class(1), mpz_class(i));
        return s;
    }
    const std::uint64_t mid = a + (b - a) / 2;
    return harmonic_split(a, mid) + harmonic_split(mid + 1, b);
}

}  // namespace

Rational harmonic_exact(std::uint64_t n) {
    if (n == 0) throw DomainError("harmonic_exact: n must be >= 1");
    return harmonic_split(1, n);
}

Rational harmonic_range_exact(std::uint64_t a, std::uint64_t b) {
    if (a == 0 || a > b) throw DomainError("harmonic_range_exact: need 1 <= a <= b");
    return harmonic_split(a, b);
}

namespace {

Rational shifted_sum_split(const Rational& x, std::uint64_t a, std::uint64_t b, int power) {
    if (b - a < 16) {
        Rational s(0);
        for (std::uint64_t j = a; j <= b; ++j) {
            Rational term = (x + Rational(mpz_class(j), mpz_class(1))).reciprocal();
            if (power == 2) term = term * term;
            s += term;
        }
        return s;
    }
    const std::uint64_t mid = a + (b - a) / 2;
    return shifted_sum_split(x, a, mid, power) + shifted_sum_split(x, mid + 1, b, power);
}

}  // namespace

Rational shifted_harmonic_sum(const Rational& x, std::uint64_t k) {
    if (k == 0) return Rational(0);
    return shifted_sum_split(x, 1, k, 1);
}

Rational shifted_harmonic_sq_sum(const Rational& x, std::uint64_t k) {
    if (k == 0) return Rational(0);
    return shifted_sum_split(x, 1, k, 2);
}

const Rational& bernoulli_number(unsigned m) {
    static std::vector<Rational> table{Rational(1), Rational(-1, 2)};
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    while (table.size() <= m) {
        const unsigned n = static_cast<unsigned>(table.size());
        // B_n = -1/(n+1) * sum_{k=0..n-1} C(n+1,k) B_k
        Rational acc(0);
        for (unsigned k = 0; k < n; ++k)
            acc += Rational(binomial(n + 1, k), mpz_class(1)) * table[k];
        table.push_back(-acc / Rational(mpz_class(n + 1), mpz_class(1)));
    }
    return table[m];
}

Rational bernoulli_polynomial(unsigned m, const Rational& x) {
    Rational acc(0);
    for (unsigned k = 0; k <= m; ++k) {
        acc += Rational(binomial(m, k), mpz_class(1)) * bernoulli_number(k) *
               x.pow_int(static_cast<long>(m - k));
    }
    return acc;
}

}  // namespace hb
