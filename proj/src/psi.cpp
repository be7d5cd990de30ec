#include "hb/psi.hpp"

#include <algorithm>

#include "hb/errors.hpp"

namespace hb {

namespace {

void require_positive(const Rational& x, const char* who) {
    if (x.sign() <= 0) throw DomainError(std::string(who) + ": x must be positive");
}

void require_width(const Rational& w, const char* who) {
    if (w.sign() <= 0) throw DomainError(std::string(who) + ": target width must be positive");
}

// Smallest integer X >= x with coeff / X^power <= w, i.e. X^power >= coeff/w.
// Returns the shift k = X - ceil-adjusted x (0 if the bracket at x already fits).
std::uint64_t pick_shift(const Rational& x, const Rational& coeff, unsigned power,
                         const Rational& w, const char* who) {
    if (coeff.sign() <= 0) return 0;  // degenerate (mutated) bracket: no widening to beat
    const Rational need = coeff / w;  // want X^power >= need
    mpz_class ceil_need;
    mpz_cdiv_q(ceil_need.get_mpz_t(), need.num().get_mpz_t(), need.den().get_mpz_t());
    mpz_class root;
    mpz_root(root.get_mpz_t(), ceil_need.get_mpz_t(), power);
    Rational X(root, mpz_class(1));
    while (X.pow_int(power) < need) X += Rational(1);
    if (X <= x) return 0;
    const Rational diff = X - x;
    mpz_class kz;
    mpz_cdiv_q(kz.get_mpz_t(), diff.num().get_mpz_t(), diff.den().get_mpz_t());
    const Rational kr(kz, mpz_class(1));
    if (!kr.fits_uint64())
        throw DomainError(std::string(who) + ": required shift does not fit");
    std::uint64_t k = kr.to_uint64();
    const auto fits = [&](std::uint64_t kk) {
        return (x + Rational(mpz_class(kk), mpz_class(1))).pow_int(power) * w >= coeff;
    };
    while (!fits(k)) ++k;
    while (k > 0 && fits(k - 1)) --k;
    return k;
}

// Enforces the contract that outward rounding eats at most 10% of the
// requested width: achieved must stay within 1.1 * target.
void check_width(const Interval& v, const Rational& target, const char* who) {
    if (!v.width_at_most(target * Rational(11, 10)))
        throw PrecisionError(std::string(who) +
                             ": precision_bits too small for the requested target width");
}

}  // namespace

std::pair<Rational, Rational> digamma_bracket_exact(const Rational& x,
                                                    const LemmaCoefficients& c) {
    require_positive(x, "digamma_bracket_exact");
    const Rational upper = c.digamma_half / x;
    return {upper - c.digamma_quad / (x * x), upper};
}

std::pair<Rational, Rational> trigamma_bracket_exact(const Rational& x,
                                                     const LemmaCoefficients& c) {
    require_positive(x, "trigamma_bracket_exact");
    const Rational x2 = x * x;
    const Rational lower = c.trigamma_half / x2 - c.trigamma_cube / (x2 * x);
    return {lower, lower + c.trigamma_quint / (x2 * x2 * x)};
}

Interval digamma_raw_bracket(const Rational& x, int bits, const LemmaCoefficients& c) {
    const auto [lo, hi] = digamma_bracket_exact(x, c);
    return Interval::hull(lo, hi, bits);
}

Interval trigamma_raw_bracket(const Rational& x, int bits, const LemmaCoefficients& c) {
    const auto [lo, hi] = trigamma_bracket_exact(x, c);
    return Interval::hull(lo, hi, bits);
}

PsiEnclosure digamma_lemma_enclosure(const Rational& x, std::uint64_t k, int bits,
                                     const LemmaCoefficients& c) {
    require_positive(x, "digamma_lemma_enclosure");
    const Rational X = x + Rational(mpz_class(k), mpz_class(1));
    const auto [blo, bhi] = digamma_bracket_exact(X, c);
    const Rational tail = shifted_harmonic_sum(x, k);
    Interval v = Interval::hull(blo - tail, bhi - tail, bits + 8);
    if (k > 0) v = Interval::add(v, ln_enclosure(X / x, bits + 8), bits + 8);
    return {v.rounded(bits), k, PsiMethod::lemma_bracket, std::nullopt};
}

PsiEnclosure trigamma_lemma_enclosure(const Rational& x, std::uint64_t k, int bits,
                                      const LemmaCoefficients& c) {
    require_positive(x, "trigamma_lemma_enclosure");
    const Rational X = x + Rational(mpz_class(k), mpz_class(1));
    const auto [blo, bhi] = trigamma_bracket_exact(X, c);
    const Rational shift = x.reciprocal() - X.reciprocal() - shifted_harmonic_sq_sum(x, k);
    return {Interval::hull(blo + shift, bhi + shift, bits), k,
            PsiMethod::lemma_bracket, std::nullopt};
}

PsiEnclosure digamma_residual_enclosure(const Rational& x, const Rational& target_width,
                                        int bits, const LemmaCoefficients& c) {
    require_positive(x, "digamma_residual_enclosure");
    require_width(target_width, "digamma_residual_enclosure");
    const std::uint64_t k =
        pick_shift(x, c.digamma_quad, 2, target_width, "digamma_residual_enclosure");
    if (x.is_integer() && x.fits_uint64() && k > 64) {
        // psi(n+1) - ln n = H_n - gamma - ln n; Euler-Maclaurin carries the
        // tight widths the lemma shift cannot reach.
        const std::uint64_t n = x.to_uint64();
        const Rational quarter = target_width * Rational(1, 4);
        const PsiEnclosure g = euler_gamma_auto(quarter, bits);
        const Interval h = Interval::from_rational(harmonic_exact(n), bits);
        Interval v = Interval::sub(h, ln_enclosure(x, bits), bits);
        v = Interval::sub(v, g.value, bits);
        check_width(v, target_width, "digamma_residual_enclosure");
        return {v, 0, PsiMethod::euler_maclaurin, g.order_q};
    }
    if (k > kMaxLemmaShift)
        throw DomainError(
            "digamma_residual_enclosure: target width needs an impractical shift; "
            "use an integer argument or a looser width");
    PsiEnclosure e = digamma_lemma_enclosure(x, k, bits, c);
    check_width(e.value, target_width, "digamma_residual_enclosure");
    return e;
}

PsiEnclosure trigamma_residual_enclosure(const Rational& x, const Rational& target_width,
                                         int bits, const LemmaCoefficients& c) {
    require_positive(x, "trigamma_residual_enclosure");
    require_width(target_width, "trigamma_residual_enclosure");
    const std::uint64_t k =
        pick_shift(x, c.trigamma_quint, 5, target_width, "trigamma_residual_enclosure");
    if (k > kMaxLemmaShift)
        throw DomainError("trigamma_residual_enclosure: target width needs an impractical shift");
    PsiEnclosure e = trigamma_lemma_enclosure(x, k, bits, c);
    check_width(e.value, target_width, "trigamma_residual_enclosure");
    return e;
}

PsiEnclosure euler_gamma_enclosure(std::uint64_t n, unsigned q, int bits) {
    if (n == 0) throw DomainError("euler_gamma_enclosure: n must be >= 1");
    if (q == 0) throw DomainError("euler_gamma_enclosure: q must be >= 1");
    const Rational nr(mpz_class(n), mpz_class(1));
    Rational exact = harmonic_exact(n) - Rational(1, 2) / nr;
    for (unsigned i = 1; i < q; ++i) {
        exact += bernoulli_number(2 * i) /
                 (Rational(2 * static_cast<long>(i)) * nr.pow_int(2 * static_cast<long>(i)));
    }
    const Rational rem =
        bernoulli_number(2 * q).abs() /
        (Rational(2 * static_cast<long>(q)) * nr.pow_int(2 * static_cast<long>(q)));
    const int wp = bits + 8;
    Interval v = Interval::hull(exact - rem, exact + rem, wp);
    v = Interval::sub(v, ln_enclosure(nr, wp), wp);
    return {v.rounded(bits), 0, PsiMethod::euler_maclaurin, q};
}

PsiEnclosure euler_gamma_auto(const Rational& max_width, int bits) {
    require_width(max_width, "euler_gamma_auto");
    // Half the budget goes to the Euler-Maclaurin remainder, the rest covers
    // ln n rounding; precision is raised internally if the caller's bits
    // cannot represent the requested width (auto mode has no bits contract).
    const Rational half = max_width * Rational(1, 2);
    long need_bits = 64;
    {
        const Rational inv = half.reciprocal();
        need_bits += static_cast<long>(mpz_sizeinbase(inv.num().get_mpz_t(), 2)) -
                     static_cast<long>(mpz_sizeinbase(inv.den().get_mpz_t(), 2));
    }
    const int eff_bits = static_cast<int>(std::max<long>(bits, need_bits));
    for (std::uint64_t n : {std::uint64_t{100}, std::uint64_t{1000}, std::uint64_t{10000}}) {
        const Rational nr(mpz_class(n), mpz_class(1));
        for (unsigned q = 1; q <= 96; ++q) {
            const Rational full_width =
                bernoulli_number(2 * q).abs() /
                (Rational(static_cast<long>(q)) * nr.pow_int(2 * static_cast<long>(q)));
            if (full_width <= half) {
                PsiEnclosure g = euler_gamma_enclosure(n, q, eff_bits);
                if (g.value.width_at_most(max_width)) return g;
                break;  // rounding dominated: try a larger n
            }
        }
    }
    throw PrecisionError("euler_gamma_auto: cannot meet requested width");
}

}  // namespace hb
