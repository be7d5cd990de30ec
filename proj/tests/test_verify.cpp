#include <doctest.h>

#include <cmath>

#include <json.hpp>

#include "hb/errors.hpp"
#include "hb/verify.hpp"
#include "oracles.hpp"

using hb::Rational;
using hb::VerifyOptions;
using hb::VerifyReport;

TEST_CASE("theorem sweep: equality case alone") {
    const VerifyReport rep = hb::verify_theorem(1, 1, {});
    CHECK(rep.pass());
    CHECK(rep.certified);
    CHECK(rep.exit_code() == 0);
}

TEST_CASE("theorem sweep: first 200 integers") {
    const VerifyReport rep = hb::verify_theorem(1, 200, {});
    CHECK(rep.pass());
    CHECK(rep.checked >= 200);
}

TEST_CASE("theorem sweep: bit-identical reports regardless of jobs") {
    VerifyOptions one;
    one.jobs = 1;
    VerifyOptions two;
    two.jobs = 2;
    const VerifyReport a = hb::verify_theorem(1, 5000, one);
    const VerifyReport b = hb::verify_theorem(1, 5000, two);
    CHECK(a.pass());
    CHECK(a.to_json() == b.to_json());
}

TEST_CASE("theorem sweep: subranges and input validation") {
    CHECK(hb::verify_theorem(500, 700, {}).pass());
    CHECK_THROWS_AS(hb::verify_theorem(0, 5, {}), hb::DomainError);
    CHECK_THROWS_AS(hb::verify_theorem(7, 3, {}), hb::DomainError);
}

TEST_CASE("phi monotone: the three printed values and their first gap") {
    const VerifyReport rep = hb::verify_phi_monotone(1, 3, {});
    CHECK(rep.pass());
    CHECK(rep.checked == 2);

    const Rational w = Rational::from_string("1e-18");
    const auto p1 = hb::phi(Rational(1), w, 160);
    const auto p2 = hb::phi(Rational(2), w, 160);
    const auto gap = hb::Interval::sub(p1, p2, 160);
    // difference of the two printed constants
    const Rational glo = Rational::from_string("0.01057611131078402");
    const Rational ghi = Rational::from_string("0.01057611131078403");
    CHECK(gap.lo().cmp(glo) >= 0);
    CHECK(gap.hi().cmp(ghi) <= 0);
}

TEST_CASE("phi monotone: two thousand integers") {
    const VerifyReport rep = hb::verify_phi_monotone(1, 2000, {});
    CHECK(rep.pass());
    CHECK(rep.checked == 1999);
    CHECK(rep.certified);
}

TEST_CASE("phi monotone: jobs determinism across leaf boundaries") {
    VerifyOptions one;
    one.jobs = 1;
    VerifyOptions two;
    two.jobs = 2;
    const VerifyReport a = hb::verify_phi_monotone(2040, 2060, one);
    const VerifyReport b = hb::verify_phi_monotone(2040, 2060, two);
    CHECK(a.pass());
    CHECK(a.to_json() == b.to_json());
    CHECK(a.checked == 20);
}

TEST_CASE("phi derivative sign: closed form anchors") {
    CHECK(hb::phi_derivative_closed_form(Rational(12, 5)) == Rational(0));
    CHECK(hb::phi_derivative_closed_form(Rational(3)) == Rational(-1, 29160));
    CHECK(hb::phi_derivative_closed_form(Rational(3)) == Rational(-3, 87480));
    CHECK(hb::phi_derivative_closed_form(Rational(2)) > Rational(0));
}

TEST_CASE("phi derivative sign: certified negative at the default samples") {
    std::vector<Rational> xs;
    for (const char* s : {"13/5", "3", "7/2", "5", "10"}) xs.push_back(Rational::from_string(s));
    const VerifyReport rep = hb::verify_phi_derivative_sign(xs, {});
    CHECK(rep.pass());
    CHECK(rep.certified);
    CHECK(rep.checked == 2 * xs.size());
}

TEST_CASE("phi derivative sign: samples at or below 12/5 are rejected") {
    CHECK_THROWS_AS(hb::verify_phi_derivative_sign({Rational(12, 5)}, {}), hb::DomainError);
    CHECK_THROWS_AS(hb::verify_phi_derivative_sign({Rational(2)}, {}), hb::DomainError);
}

TEST_CASE("series coefficients: frozen anchors") {
    // n = 7: 720/5040 - 360/720 + 60/120 - 1/6 = -1/42 = -120/7!
    const Rational lit = Rational(720, 5040) - Rational(360, 720) + Rational(60, 120) -
                         Rational(1, 6);
    CHECK(lit == Rational(-1, 42));
    CHECK(lit == Rational(-120, 5040));
    // n = 8: quartic at m = 1 is 480, so -480/8! = -1/84
    CHECK(Rational(-480, 40320) == Rational(-1, 84));
    // n = 5 sign case: 2/120 = 1/60 > 0
    CHECK(Rational((5 - 3) * (5 - 4), 120) == Rational(1, 60));
}

TEST_CASE("series coefficients: exact suite to 2000") {
    const VerifyReport rep = hb::verify_series_coefficients(2000);
    CHECK(rep.pass());
    CHECK(rep.certified);
    CHECK_THROWS_AS(hb::verify_series_coefficients(6), hb::DomainError);
}

TEST_CASE("integrand signs: sampled sanity") {
    const VerifyReport rep = hb::verify_integrand_signs(hb::default_integrand_samples());
    CHECK(rep.pass());
    CHECK_FALSE(rep.certified);

    // f2(1) = 1 - 1/(e - 1) - 1/2
    const double f2 = 1.0 - 1.0 / std::expm1(1.0) - 0.5;
    CHECK(f2 < 0);
    CHECK(std::abs(f2 - (-0.08197670686932642)) < 1e-12);
    CHECK_THROWS_AS(hb::verify_integrand_signs({0.0}), hb::DomainError);
    CHECK_THROWS_AS(hb::verify_integrand_signs({51.0}), hb::DomainError);
}

TEST_CASE("lemma brackets: canonical coefficients pass") {
    const VerifyReport rep = hb::verify_lemma_brackets(200, 20250809, 20, {});
    CHECK(rep.pass());
    CHECK(rep.checked == 800);
}

TEST_CASE("lemma brackets: mutations are detected") {
    VerifyOptions removed;
    removed.coeffs.digamma_quad = Rational(0);  // drop the 1/(12x^2) term
    CHECK_FALSE(hb::verify_lemma_brackets(100, 20250809, 20, removed).pass());

    VerifyOptions widened;
    widened.coeffs.digamma_quad = Rational(1, 10);  // still a true bound, but not the paper's
    CHECK_FALSE(hb::verify_lemma_brackets(100, 20250809, 20, widened).pass());

    VerifyOptions narrowed;
    narrowed.coeffs.digamma_quad = Rational(1, 13);  // false bound
    CHECK_FALSE(hb::verify_lemma_brackets(100, 20250809, 20, narrowed).pass());

    VerifyOptions trig;
    trig.coeffs.trigamma_quint = Rational(1, 20);
    CHECK_FALSE(hb::verify_lemma_brackets(100, 20250809, 20, trig).pass());
}

TEST_CASE("report mechanics: merge, exit codes, json shape") {
    VerifyReport a;
    a.suite = "demo";
    a.checked = 3;
    VerifyReport b;
    b.checked = 2;
    b.failures.push_back({"n=5", "x < y", "w"});
    a.absorb(std::move(b));
    CHECK(a.checked == 5);
    CHECK(a.exit_code() == 1);
    VerifyReport c;
    c.inconclusive.push_back("n=9");
    CHECK(c.exit_code() == 2);

    const auto j = nlohmann::json::parse(a.to_json());
    CHECK(j["suite"] == "demo");
    CHECK(j["checked"] == 5);
    CHECK(j["pass"] == false);
    CHECK(j["failures"].size() == 1);
    CHECK(j["failures"][0]["where"] == "n=5");
}
