#ifndef HB_PSI_HPP
#define HB_PSI_HPP

#include <cstdint>
#include <optional>
#include <utility>

#include "hb/interval.hpp"
#include "hb/ln.hpp"
#include "hb/rational.hpp"

namespace hb {

/// Constants of the bracketing inequalities
///   1/(2x) - 1/(12x^2) < psi(x+1) - ln x < 1/(2x)
///   1/(2x^2) - 1/(6x^3) < 1/x - psi'(x+1) < 1/(2x^2) - 1/(6x^3) + 1/(30x^5)
/// kept injectable so the verification suites can prove they detect a
/// corrupted bracket. Production code always uses the defaults.
struct LemmaCoefficients {
    Rational digamma_half{1, 2};
    Rational digamma_quad{1, 12};
    Rational trigamma_half{1, 2};
    Rational trigamma_cube{1, 6};
    Rational trigamma_quint{1, 30};
};

enum class PsiMethod { lemma_bracket, euler_maclaurin };

struct PsiEnclosure {
    Interval value;
    std::uint64_t shift_k = 0;
    PsiMethod method = PsiMethod::lemma_bracket;
    std::optional<unsigned> order_q;
};

/// Exact rational endpoints of the psi(x+1) - ln x bracket at x (no shift).
std::pair<Rational, Rational> digamma_bracket_exact(const Rational& x,
                                                    const LemmaCoefficients& c = {});
/// Exact rational endpoints of the 1/x - psi'(x+1) bracket at x.
std::pair<Rational, Rational> trigamma_bracket_exact(const Rational& x,
                                                     const LemmaCoefficients& c = {});

Interval digamma_raw_bracket(const Rational& x, int bits, const LemmaCoefficients& c = {});
Interval trigamma_raw_bracket(const Rational& x, int bits, const LemmaCoefficients& c = {});

/// Enclosure of psi(x+1) - ln x from the bracket at X = x+k pulled back
/// through psi(x+1) = psi(x) + 1/x:
///   psi(x+1) - ln x = [bracket at X] + ln(X/x) - sum_{j=1..k} 1/(x+j).
PsiEnclosure digamma_lemma_enclosure(const Rational& x, std::uint64_t k, int bits,
                                     const LemmaCoefficients& c = {});

/// Enclosure of 1/x - psi'(x+1) from the bracket at X = x+k and
/// psi'(x+1) = psi'(x+k+1) + sum_{j=1..k} 1/(x+j)^2:
///   1/x - psi'(x+1) = [bracket at X] + (1/x - 1/X) - sum_{j=1..k} 1/(x+j)^2.
/// Fully rational apart from the final outward lift.
PsiEnclosure trigamma_lemma_enclosure(const Rational& x, std::uint64_t k, int bits,
                                      const LemmaCoefficients& c = {});

/// Width-driven enclosure of psi(x+1) - ln x. Picks the smallest shift k with
/// bracket width c_quad/(x+k)^2 <= target_width; integer x with a tight target
/// is routed through the Euler-Maclaurin identity instead (the lemma shift
/// would be Theta(target_width^-1/2)). The method actually used is recorded.
PsiEnclosure digamma_residual_enclosure(const Rational& x, const Rational& target_width,
                                        int bits, const LemmaCoefficients& c = {});

/// Width-driven enclosure of 1/x - psi'(x+1), shift from
/// c_quint/(x+k)^5 <= target_width.
PsiEnclosure trigamma_residual_enclosure(const Rational& x, const Rational& target_width,
                                         int bits, const LemmaCoefficients& c = {});

/// Enclosure of Euler's constant from
///   gamma = H_n - ln n - 1/(2n) + sum_{i=1..q-1} B_{2i}/(2i n^{2i}) + R,
///   |R| <= |B_{2q}| / (2q n^{2q}).
PsiEnclosure euler_gamma_enclosure(std::uint64_t n, unsigned q, int bits);

/// Smallest-cost (n, q) meeting max_width, then euler_gamma_enclosure.
PsiEnclosure euler_gamma_auto(const Rational& max_width, int bits);

/// Largest admissible lemma shift before the exact tail sums get too big.
inline constexpr std::uint64_t kMaxLemmaShift = std::uint64_t{1} << 17;

}  // namespace hb

#endif
