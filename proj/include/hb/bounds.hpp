#ifndef HB_BOUNDS_HPP
#define HB_BOUNDS_HPP

#include <cstdint>

#include "hb/interval.hpp"
#include "hb/psi.hpp"
#include "hb/rational.hpp"

namespace hb {

enum class BoundFamily { franel, toth_mare, sharp };

/// One bound family instantiated at n. `lower`/`upper` bound the residual
/// H_n - ln n - gamma; the strictness flags say whether the family claims
/// strict inequality on that side.
struct BoundPair {
    BoundFamily family;
    std::uint64_t n;
    Interval lower;
    Interval upper;
    bool lower_strict;
    bool upper_strict;
};

// Exact rational endpoints of the two fully rational families.
Rational franel_lower_exact(std::uint64_t n);     // 1/(2n) - 1/(8n^2)
Rational franel_upper_exact(std::uint64_t n);     // 1/(2n)
Rational toth_mare_lower_exact(std::uint64_t n);  // 1/(2n + 2/5)
Rational toth_mare_upper_exact(std::uint64_t n);  // 1/(2n + 1/3)
Rational sharp_upper_exact(std::uint64_t n);      // same as toth_mare upper

BoundPair franel_bounds(std::uint64_t n, int bits);
BoundPair toth_mare_bounds(std::uint64_t n, int bits);

/// Sharp family: lower 1/(2n + 1/(1-gamma) - 2) with the gamma enclosure
/// propagated outward, upper 1/(2n + 1/3) exact. Rejects gamma enclosures
/// touching 1 or wider than 1e-3.
BoundPair sharp_bounds(std::uint64_t n, const Interval& gamma, int bits);

/// The constant 1/(1-gamma) - 2, from a live gamma enclosure.
Interval sharp_lower_constant(const Interval& gamma, int bits);
Interval sharp_lower_interval(std::uint64_t n, const Interval& gamma, int bits);

/// Enclosure of H_n - ln n - gamma with width <= target_width.
Interval residual(std::uint64_t n, const Rational& target_width, int bits);
/// Same, reusing a precomputed gamma enclosure (must carry width <= target/2).
Interval residual_with_gamma(std::uint64_t n, const Interval& gamma,
                             const Rational& target_width, int bits);

/// phi(x) = 1/(psi(x+1) - ln x) - 2x, the sharpness witness. Integer x goes
/// through the Euler-Maclaurin residual; other rationals use the lemma
/// bracket and are limited to the widths the shift cap allows.
Interval phi(const Rational& x, const Rational& target_width, int bits,
             const LemmaCoefficients& c = {});

}  // namespace hb

#endif
