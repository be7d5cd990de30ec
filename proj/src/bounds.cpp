#include "hb/bounds.hpp"

#include <algorithm>

#include "hb/errors.hpp"
#include "hb/ln.hpp"

namespace hb {

namespace {

void require_n(std::uint64_t n, const char* who) {
    if (n == 0) throw DomainError(std::string(who) + ": n must be >= 1");
}

Rational rat_u64(std::uint64_t n) { return Rational(mpz_class(n), mpz_class(1)); }

}  // namespace

Rational franel_lower_exact(std::uint64_t n) {
    require_n(n, "franel_lower_exact");
    const Rational nr = rat_u64(n);
    return Rational(1, 2) / nr - Rational(1, 8) / (nr * nr);
}

Rational franel_upper_exact(std::uint64_t n) {
    require_n(n, "franel_upper_exact");
    return Rational(1, 2) / rat_u64(n);
}

Rational toth_mare_lower_exact(std::uint64_t n) {
    require_n(n, "toth_mare_lower_exact");
    return (Rational(2) * rat_u64(n) + Rational(2, 5)).reciprocal();
}

Rational toth_mare_upper_exact(std::uint64_t n) {
    require_n(n, "toth_mare_upper_exact");
    return (Rational(2) * rat_u64(n) + Rational(1, 3)).reciprocal();
}

Rational sharp_upper_exact(std::uint64_t n) { return toth_mare_upper_exact(n); }

BoundPair franel_bounds(std::uint64_t n, int bits) {
    return {BoundFamily::franel, n, Interval::from_rational(franel_lower_exact(n), bits),
            Interval::from_rational(franel_upper_exact(n), bits), true, true};
}

BoundPair toth_mare_bounds(std::uint64_t n, int bits) {
    return {BoundFamily::toth_mare, n, Interval::from_rational(toth_mare_lower_exact(n), bits),
            Interval::from_rational(toth_mare_upper_exact(n), bits), true, true};
}

Interval sharp_lower_constant(const Interval& gamma, int bits) {
    if (gamma.hi().cmp(Rational(1)) >= 0)
        throw DomainError("sharp bounds: gamma enclosure must stay below 1");
    if (!gamma.width_at_most(Rational(1, 1000)))
        throw DomainError("sharp bounds: gamma enclosure wider than 1e-3");
    const Interval one_minus = Interval::sub(Interval::from_int(1, bits), gamma, bits);
    return Interval::sub(Interval::recip(one_minus, bits), Interval::from_int(2, bits), bits);
}

Interval sharp_lower_interval(std::uint64_t n, const Interval& gamma, int bits) {
    require_n(n, "sharp_lower_interval");
    const Interval c = sharp_lower_constant(gamma, bits);
    const Interval denom =
        Interval::add(Interval::from_rational(Rational(2) * rat_u64(n), bits), c, bits);
    return Interval::recip(denom, bits);
}

BoundPair sharp_bounds(std::uint64_t n, const Interval& gamma, int bits) {
    require_n(n, "sharp_bounds");
    return {BoundFamily::sharp, n, sharp_lower_interval(n, gamma, bits),
            Interval::from_rational(sharp_upper_exact(n), bits),
            /*lower_strict=*/false, /*upper_strict=*/true};
}

Interval residual_with_gamma(std::uint64_t n, const Interval& gamma,
                             const Rational& target_width, int bits) {
    require_n(n, "residual");
    const Interval h = Interval::from_rational(harmonic_exact(n), bits);
    Interval r = Interval::sub(h, ln_enclosure(rat_u64(n), bits), bits);
    r = Interval::sub(r, gamma, bits);
    if (!r.width_at_most(target_width))
        throw PrecisionError("residual: precision_bits too small for the target width");
    return r;
}

Interval residual(std::uint64_t n, const Rational& target_width, int bits) {
    if (target_width.sign() <= 0) throw DomainError("residual: target width must be positive");
    const PsiEnclosure g = euler_gamma_auto(target_width * Rational(1, 2), bits);
    // Composition happens at the caller's bits; if those cannot honor the
    // width the contract check below fails rather than silently widening.
    return residual_with_gamma(n, g.value, target_width, bits);
}

Interval phi(const Rational& x, const Rational& target_width, int bits,
             const LemmaCoefficients& c) {
    if (x.sign() <= 0) throw DomainError("phi: x must be positive");
    if (target_width.sign() <= 0) throw DomainError("phi: target width must be positive");

    // Reciprocal sensitivity: to get phi within w we need the digamma
    // residual d within w' = w * d_lo^2 / 2, with d_lo a positive a priori
    // lower bound on d.
    Rational d_lo_est;
    if (x.is_integer() && x.fits_uint64()) {
        d_lo_est = toth_mare_lower_exact(x.to_uint64());
    } else {
        // Cheap first pass to locate d away from zero.
        Rational probe_width(1, 1000);
        PsiEnclosure d0 = digamma_residual_enclosure(x, probe_width, std::max(bits, 96), c);
        while (d0.value.lo().sign() <= 0) {
            probe_width = probe_width * Rational(1, 16);
            d0 = digamma_residual_enclosure(x, probe_width, std::max(bits, 96), c);
        }
        d_lo_est = d0.value.lo().to_rational();
    }
    const Rational w_inner = target_width * d_lo_est * d_lo_est * Rational(1, 2);

    const PsiEnclosure d = digamma_residual_enclosure(x, w_inner, bits, c);
    if (d.value.lo().sign() <= 0)
        throw Error("phi: digamma residual enclosure not strictly positive");
    const Interval inv = Interval::recip(d.value, bits);
    const Interval two_x = Interval::from_rational(Rational(2) * x, bits);
    const Interval result = Interval::sub(inv, two_x, bits);
    if (!result.width_at_most(target_width))
        throw PrecisionError("phi: precision_bits too small for the target width");
    return result;
}

}  // namespace hb
