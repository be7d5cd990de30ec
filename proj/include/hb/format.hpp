#ifndef HB_FORMAT_HPP
#define HB_FORMAT_HPP

#include <string>

#include "hb/dyadic.hpp"
#include "hb/interval.hpp"
#include "hb/rational.hpp"

namespace hb {

/// Decimal rendering with directed rounding: the printed value is <= the
/// true value for Round::down and >= for Round::up, to `digits` significant
/// digits. Output parses back exactly (fixed or scientific form).
std::string decimal_string(const Rational& r, int digits, Round dir);

/// Outward decimal endpoints of an interval: lo rounded down, hi rounded up.
std::string decimal_lo(const Interval& v, int digits);
std::string decimal_hi(const Interval& v, int digits);

/// Two-digit upper bound on the interval width, for human-facing output.
std::string width_string(const Interval& v);

}  // namespace hb

#endif
