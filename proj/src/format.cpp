#include "hb/format.hpp"

#include <algorithm>

#include "hb/errors.hpp"

namespace hb {

namespace {

// floor(log10 |r|) for r != 0, exact.
long floor_log10_abs(const Rational& r) {
    const mpz_class& p = r.num();
    const mpz_class& q = r.den();
    const double est = (static_cast<double>(mpz_sizeinbase(p.get_mpz_t(), 2)) -
                        static_cast<double>(mpz_sizeinbase(q.get_mpz_t(), 2))) *
                       0.30102999566398119;
    long d = static_cast<long>(est);
    const Rational a = r.abs();
    const auto pow10 = [](long k) {
        mpz_class t;
        mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(k < 0 ? -k : k));
        return k >= 0 ? Rational(t, mpz_class(1)) : Rational(mpz_class(1), t);
    };
    while (a < pow10(d)) --d;
    while (a >= pow10(d + 1)) ++d;
    return d;
}

void trim_fraction(std::string& s) {
    if (s.find('.') == std::string::npos) return;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
}

std::string render(const mpz_class& digits_value, long dec_exp, int digits) {
    // digits_value has exactly `digits` decimal digits (or is zero);
    // value = digits_value * 10^(dec_exp - digits + 1).
    std::string ds = digits_value.get_str();
    bool neg = false;
    if (!ds.empty() && ds[0] == '-') {
        neg = true;
        ds = ds.substr(1);
    }
    std::string out;
    if (dec_exp >= -5 && dec_exp < digits + 6) {
        if (dec_exp >= 0) {
            if (static_cast<long>(ds.size()) <= dec_exp) {
                ds.append(static_cast<std::size_t>(dec_exp + 1 - static_cast<long>(ds.size())),
                          '0');
                out = ds;
            } else {
                out = ds.substr(0, static_cast<std::size_t>(dec_exp + 1));
                const std::string frac = ds.substr(static_cast<std::size_t>(dec_exp + 1));
                if (!frac.empty()) out += "." + frac;
                trim_fraction(out);
            }
        } else {
            out = "0." + std::string(static_cast<std::size_t>(-dec_exp - 1), '0') + ds;
            trim_fraction(out);
        }
    } else {
        out = ds.substr(0, 1);
        if (ds.size() > 1) out += "." + ds.substr(1);
        trim_fraction(out);
        out += "e" + std::to_string(dec_exp);
    }
    return neg ? "-" + out : out;
}

}  // namespace

std::string decimal_string(const Rational& r, int digits, Round dir) {
    if (digits < 1) throw DomainError("decimal_string: digits must be >= 1");
    if (r.is_zero()) return "0";
    const long d = floor_log10_abs(r);
    const long shift = digits - 1 - d;
    // I = round_dir(r * 10^shift), |I| in [10^(digits-1), 10^digits]
    mpz_class num = r.num();
    mpz_class den = r.den();
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0)
        num *= p10;
    else
        den *= p10;
    mpz_class scaled;
    if (dir == Round::down)
        mpz_fdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    else
        mpz_cdiv_q(scaled.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    // Rounding toward the larger magnitude can carry into one extra digit
    // (e.g. 999.. -> 1000..); renormalize.
    mpz_class limit;
    mpz_ui_pow_ui(limit.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    long dec_exp = d;
    if (scaled >= limit || scaled <= -limit) {
        // exact division by 10: the overflowed value is +-10^digits
        scaled /= 10;
        dec_exp += 1;
    }
    if (scaled == 0) return "0";
    return render(scaled, dec_exp, digits);
}

std::string decimal_lo(const Interval& v, int digits) {
    return decimal_string(v.lo().to_rational(), digits, Round::down);
}

std::string decimal_hi(const Interval& v, int digits) {
    return decimal_string(v.hi().to_rational(), digits, Round::up);
}

std::string width_string(const Interval& v) {
    const Dyadic w = v.width();
    if (w.is_zero()) return "0";
    return decimal_string(w.to_rational(), 2, Round::up);
}

}  // namespace hb
