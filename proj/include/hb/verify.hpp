#ifndef HB_VERIFY_HPP
#define HB_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "hb/bounds.hpp"
#include "hb/psi.hpp"
#include "hb/rational.hpp"

namespace hb {

struct VerifyFailure {
    std::string where;     // "n=17", "x=13/5", ...
    std::string relation;  // the inequality or identity that failed
    std::string witness;   // offending intervals/rationals
};

/// Result of one verification sweep. `certified` distinguishes exact or
/// interval proofs from sampled floating-point sanity checks. Inconclusive
/// entries (precision cap hit before separation) are kept apart from
/// failures: inconclusive != fail.
struct VerifyReport {
    std::string suite;
    std::uint64_t from = 0, to = 0;
    std::uint64_t checked = 0;
    std::vector<VerifyFailure> failures;
    std::vector<std::string> inconclusive;
    bool certified = true;

    bool pass() const { return failures.empty() && inconclusive.empty(); }
    /// 0 pass, 1 failures, 2 inconclusive-only.
    int exit_code() const;
    void absorb(VerifyReport&& leaf);  // associative, order-preserving merge
    std::string to_json() const;
    std::string summary() const;
};

struct VerifyOptions {
    Rational target_width = Rational(1, 10).pow_int(20);
    int bits = 128;
    unsigned jobs = 1;
    LemmaCoefficients coeffs{};
};

/// Certifies, for every n in [from, to]:
///   franel_lower < residual(n) < franel_upper        (strict, exact rationals)
///   toth_mare_lower < residual(n) < toth_mare_upper  (strict)
///   sharp_lower <= residual(n) < sharp_upper, with the n = 1 lower bound
///     proven as an algebraic identity on the rational-function level and
///     strict inequality observed for n >= 2
///   sharp_lower > franel_lower and > toth_mare_lower, sharp_upper < franel_upper
///   phi(n) > 1/3 and phi(n) <= phi(1)
VerifyReport verify_theorem(std::uint64_t from, std::uint64_t to, const VerifyOptions& opts = {});

/// Certifies strict decrease phi(n+1) < phi(n) with interval separation for
/// each consecutive pair in [from, to]. Near ties tighten widths by 1/16 up
/// to 6 times, then report inconclusive rather than pass.
VerifyReport verify_phi_monotone(std::uint64_t from, std::uint64_t to,
                                 const VerifyOptions& opts = {});

/// Certifies, per sample x > 12/5, the assembled derivative-sign inequality
///   1/x - psi'(x+1) - 2 (psi(x+1) - ln x)^2 < 0
/// by enclosures, and the closed form (12 - 5x)/(360 x^5) < 0 exactly.
VerifyReport verify_phi_derivative_sign(const std::vector<Rational>& samples,
                                        const VerifyOptions& opts = {});

/// Exact rational certification, no floating point:
///   (n-3)(n-4)/n! >= 0 for n >= 3 (zero exactly at n = 3, 4)
///   (n-2)/n! > 0 for n >= 3
///   720/n! - 360/(n-1)! + 60/(n-2)! - 1/(n-4)! =
///     -(120 + 218 m + 119 m^2 + 22 m^3 + m^4)/n!, m = n-7, and is < 0,
///     for n >= 7 (identity checked for all n, literal factorial form spot
///     checked on the low range).
VerifyReport verify_series_coefficients(std::uint64_t n_max);

/// Sampled floating-point sanity checks of the proof integrands
/// (certified = false): f1 >= 0, f2 <= 0, f3 >= 0, f4 <= 0 on (0, 50],
/// series evaluation near 0 to dodge cancellation.
VerifyReport verify_integrand_signs(const std::vector<double>& t_samples);
std::vector<double> default_integrand_samples();

/// Bracket containment suite: for `count` seeded random rational
/// x in (0, 100], the raw digamma/trigamma brackets must contain the
/// refined shift-k enclosures, and the refined enclosures must also sit
/// inside the literal bracket formulas with the canonical constants.
/// Running it with mutated LemmaCoefficients must fail; that is the
/// corrupted-bracket detector.
VerifyReport verify_lemma_brackets(std::size_t count, std::uint64_t seed, std::uint64_t k,
                                   const VerifyOptions& opts = {});

/// Closed form (12 - 5x)/(360 x^5) from the derivative-sign chain.
Rational phi_derivative_closed_form(const Rational& x);

}  // namespace hb

#endif
