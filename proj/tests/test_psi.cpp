#include <doctest.h>

#include <random>

#include "hb/errors.hpp"
#include "hb/ln.hpp"
#include "hb/psi.hpp"
#include "oracles.hpp"

using hb::Interval;
using hb::LemmaCoefficients;
using hb::PsiEnclosure;
using hb::PsiMethod;
using hb::Rational;

TEST_CASE("raw digamma bracket at x = 10") {
    const auto [lo, hi] = hb::digamma_bracket_exact(Rational(10));
    CHECK(lo == Rational(1, 20) - Rational(1, 1200));
    CHECK(hi == Rational(1, 20));
    const Interval iv = hb::digamma_raw_bracket(Rational(10), 128);
    CHECK(iv.contains(lo));
    CHECK(iv.contains(hi));
}

TEST_CASE("raw trigamma bracket at x = 10") {
    const auto [lo, hi] = hb::trigamma_bracket_exact(Rational(10));
    CHECK(lo == Rational(1, 200) - Rational(1, 6000));
    CHECK(hi == Rational(1, 200) - Rational(1, 6000) + Rational(1, 3000000));
}

TEST_CASE("trigamma shifted bracket width formula at x = 1, k = 10") {
    const PsiEnclosure e = hb::trigamma_lemma_enclosure(Rational(1), 10, 256);
    CHECK(e.shift_k == 10);
    // mathematical width 1/(30 * 11^5) plus a whisker of outward rounding
    const Rational w = Rational(1, 30) / Rational(11).pow_int(5);
    CHECK(e.value.width().cmp(w * Rational(1001, 1000)) <= 0);
    CHECK(e.value.width().cmp(w * Rational(999, 1000)) >= 0);
}

TEST_CASE("digamma residual at x = 1 encloses 1 - gamma") {
    const PsiEnclosure e =
        hb::digamma_residual_enclosure(Rational(1), Rational::from_string("1e-10"), 192);
    CHECK(e.method == PsiMethod::euler_maclaurin);  // lemma shift would be ~9e4
    CHECK(e.value.contains(oracles::one_minus_gamma_ref()));
    CHECK(e.value.width_at_most(Rational::from_string("1.1e-10")));
}

TEST_CASE("digamma residual via lemma bracket at rational x") {
    // psi(5/2) - ln(3/2) = 8/3 - gamma - ln 6, via psi(x+1) = psi(x) + 1/x
    // from psi(1/2) = -gamma - 2 ln 2.
    const PsiEnclosure e =
        hb::digamma_residual_enclosure(Rational(3, 2), Rational::from_string("1e-8"), 128);
    CHECK(e.method == PsiMethod::lemma_bracket);
    CHECK(e.value.width_at_most(Rational::from_string("1.1e-8")));
    const auto [l2lo, l2hi] = oracles::ln2_bracket(150);
    const auto [l3lo, l3hi] = oracles::ln3_bracket(100);
    const Rational vlo = Rational(8, 3) - oracles::gamma_ref() - l2hi - l3hi -
                         Rational::from_string("1e-28");
    const Rational vhi = Rational(8, 3) - oracles::gamma_ref() - l2lo - l3lo +
                         Rational::from_string("1e-28");
    CHECK(e.value.lo().cmp(vhi) <= 0);
    CHECK(e.value.hi().cmp(vlo) >= 0);
}

TEST_CASE("digamma residual: minimal shift and width honored") {
    const Rational w = Rational::from_string("1e-4");
    const PsiEnclosure e = hb::digamma_residual_enclosure(Rational(5, 2), w, 128);
    CHECK(e.method == PsiMethod::lemma_bracket);
    // smallest k with 1/(12 (x+k)^2) <= w
    const Rational X = Rational(5, 2) + Rational(mpz_class(e.shift_k), mpz_class(1));
    CHECK(Rational(1, 12) / (X * X) <= w);
    if (e.shift_k > 0) {
        const Rational Xm = X - Rational(1);
        CHECK(Rational(1, 12) / (Xm * Xm) > w);
    }
    CHECK(e.value.width_at_most(w * Rational(11, 10)));
}

TEST_CASE("trigamma residual at x = 1 encloses 2 - zeta(2)") {
    const PsiEnclosure e =
        hb::trigamma_residual_enclosure(Rational(1), Rational::from_string("1e-10"), 192);
    const auto [zlo, zhi] = oracles::zeta2_bracket(100000);
    // 1/1 - psi'(2) = 2 - zeta(2)
    CHECK(e.value.lo().cmp(Rational(2) - zlo) <= 0);
    CHECK(e.value.hi().cmp(Rational(2) - zhi) >= 0);
    CHECK(e.value.width_at_most(Rational::from_string("1.1e-10")));
}

TEST_CASE("euler gamma enclosure: n = 1, q = 1 gives [5/12, 7/12]") {
    const PsiEnclosure e = hb::euler_gamma_enclosure(1, 1, 128);
    CHECK(e.method == PsiMethod::euler_maclaurin);
    CHECK(e.order_q == 1u);
    CHECK(e.value.contains(Rational(5, 12)));
    CHECK(e.value.contains(Rational(7, 12)));
    CHECK(e.value.contains(oracles::gamma_ref()));
    // endpoints within a few ulps of the exact rationals
    CHECK(e.value.width().cmp(Rational(1, 6) + Rational::from_string("1e-30")) <= 0);
}

TEST_CASE("euler gamma enclosure: width bound and published digits at n=100, q=8") {
    const PsiEnclosure e = hb::euler_gamma_enclosure(100, 8, 256);
    const Rational bound = hb::bernoulli_number(16).abs() /
                           (Rational(8) * Rational(100).pow_int(16));
    CHECK(e.value.width().cmp(bound * Rational(101, 100)) <= 0);
    CHECK(e.value.contains(oracles::gamma_ref()));
    const Rational d17 = Rational::from_string("0.57721566490153286");
    CHECK(e.value.lo().cmp(d17) >= 0);
    CHECK(e.value.hi().cmp(d17 + Rational::from_string("1e-17")) <= 0);
}

TEST_CASE("euler gamma enclosure: parameter choices intersect and tighten") {
    const PsiEnclosure a = hb::euler_gamma_enclosure(10, 3, 160);
    const PsiEnclosure b = hb::euler_gamma_enclosure(50, 5, 160);
    CHECK(a.value.intersects(b.value));
    CHECK(a.value.contains(oracles::gamma_ref()));
    CHECK(b.value.contains(oracles::gamma_ref()));

    Rational prev(-1);
    for (std::uint64_t n : {10, 20, 40, 80}) {
        const Rational w = hb::euler_gamma_enclosure(n, 3, 160).value.width().to_rational();
        if (prev.sign() > 0) CHECK(w < prev);
        prev = w;
    }
}

TEST_CASE("euler gamma auto meets requested widths") {
    for (const char* ws : {"1e-6", "1e-21", "1e-40"}) {
        const Rational w = Rational::from_string(ws);
        const PsiEnclosure g = hb::euler_gamma_auto(w, 128);
        CHECK(g.value.width_at_most(w));
        CHECK(g.value.contains(oracles::gamma_ref()));
    }
}

TEST_CASE("cross-route: lemma enclosure at integer x intersects Euler-Maclaurin route") {
    const PsiEnclosure lemma = hb::digamma_lemma_enclosure(Rational(3), 2900, 192);
    const PsiEnclosure em =
        hb::digamma_residual_enclosure(Rational(3), Rational::from_string("1e-20"), 192);
    CHECK(em.method == PsiMethod::euler_maclaurin);
    CHECK(lemma.value.intersects(em.value));
    // both contain H_3 - gamma - ln 3 by construction; pin with the oracles
    const auto [l3lo, l3hi] = oracles::ln3_bracket(100);
    const Rational vlo = Rational(11, 6) - oracles::gamma_ref() - l3hi -
                         Rational::from_string("1e-28");
    const Rational vhi = Rational(11, 6) - oracles::gamma_ref() - l3lo +
                         Rational::from_string("1e-28");
    CHECK(em.value.lo().cmp(vhi) <= 0);
    CHECK(em.value.hi().cmp(vlo) >= 0);
}

TEST_CASE("psi domain and precision errors") {
    CHECK_THROWS_AS(hb::digamma_residual_enclosure(Rational(0), Rational(1, 10), 64),
                    hb::DomainError);
    CHECK_THROWS_AS(hb::digamma_residual_enclosure(Rational(1), Rational(0), 64),
                    hb::DomainError);
    CHECK_THROWS_AS(hb::trigamma_residual_enclosure(Rational(-1), Rational(1, 10), 64),
                    hb::DomainError);
    CHECK_THROWS_AS(hb::euler_gamma_enclosure(0, 1, 64), hb::DomainError);
    CHECK_THROWS_AS(hb::euler_gamma_enclosure(1, 0, 64), hb::DomainError);
    // 16 bits cannot carry a 1e-10 wide digamma enclosure
    CHECK_THROWS_AS(
        hb::digamma_residual_enclosure(Rational(1), Rational::from_string("1e-10"), 16),
        hb::PrecisionError);
    // non-integer x with an unreachable width: the shift cap trips
    CHECK_THROWS_AS(
        hb::digamma_residual_enclosure(Rational(3, 2), Rational::from_string("1e-14"), 256),
        hb::DomainError);
}

TEST_CASE("nested enclosures: shifted brackets sit inside the raw brackets") {
    std::mt19937_64 rng(2024);
    for (int it = 0; it < 60; ++it) {
        const unsigned long q = 1 + static_cast<unsigned long>(rng() % 50);
        const unsigned long p = 1 + static_cast<unsigned long>(rng() % (100 * q));
        const Rational x{mpz_class(p), mpz_class(q)};
        const Interval raw_d = hb::digamma_raw_bracket(x, 256);
        const Interval ref_d = hb::digamma_lemma_enclosure(x, 20, 256).value;
        CHECK(raw_d.contains(ref_d));
        const Interval raw_t = hb::trigamma_raw_bracket(x, 256);
        const Interval ref_t = hb::trigamma_lemma_enclosure(x, 20, 256).value;
        CHECK(raw_t.contains(ref_t));
    }
}

TEST_CASE("consistency with exact harmonic numbers: H_n = gamma + ln n + residual") {
    const Interval g = hb::euler_gamma_auto(Rational::from_string("1e-25"), 160).value;
    for (std::uint64_t n = 1; n <= 200; ++n) {
        const Rational nr(mpz_class(n), mpz_class(1));
        const PsiEnclosure d =
            hb::digamma_residual_enclosure(nr, Rational::from_string("1e-6"), 160);
        Interval h = Interval::add(g, hb::ln_enclosure(nr, 160), 160);
        h = Interval::add(h, d.value, 160);
        CHECK(h.contains(hb::harmonic_exact(n)));
    }
}

TEST_CASE("shift width shrinks as k grows") {
    const Rational x(7, 5);
    Rational prev(-1);
    for (std::uint64_t k : {0, 5, 10, 20, 40}) {
        const Rational w =
            hb::digamma_lemma_enclosure(x, k, 256).value.width().to_rational();
        if (prev.sign() > 0) CHECK(w < prev);
        prev = w;
    }
}
