#ifndef HB_LN_HPP
#define HB_LN_HPP

#include "hb/interval.hpp"
#include "hb/rational.hpp"

namespace hb {

/// Certified enclosure of ln x for rational x > 0, width at most
/// 4 * 2^-bits * max(1, |ln x|).
///
/// Reduction: x = 2^k * m with m in [2/3, 4/3], then
/// ln m = 2 * atanh((m-1)/(m+1)) summed as an interval series with a
/// geometric tail bound (|t| <= 1/5 after reduction), plus k times a cached
/// enclosure of ln 2 = 2 * atanh(1/3).
Interval ln_enclosure(const Rational& x, int bits);

/// Cached enclosure of ln 2 at the requested precision.
Interval ln2_enclosure(int bits);

}  // namespace hb

#endif
