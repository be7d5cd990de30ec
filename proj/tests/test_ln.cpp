#include <doctest.h>

#include <random>

#include "hb/errors.hpp"
#include "hb/ln.hpp"
#include "oracles.hpp"

using hb::Interval;
using hb::Rational;

namespace {

bool overlaps(const Interval& a, const Interval& b) { return a.intersects(b); }

Rational rand_positive_rational(std::mt19937_64& rng) {
    const long num = 1 + static_cast<long>(rng() % 1000);
    const long den = 1 + static_cast<long>(rng() % 100);
    return Rational(num, den);
}

}  // namespace

TEST_CASE("ln(1) is an exact zero enclosure") {
    const Interval v = hb::ln_enclosure(Rational(1), 128);
    CHECK(v.contains(Rational(0)));
    CHECK(v.width().cmp(Rational(1) / Rational(2).pow_int(128)) <= 0);
}

TEST_CASE("ln 2 against the independent 1/(k 2^k) series") {
    const Interval v = hb::ln_enclosure(Rational(2), 128);
    const auto [olo, ohi] = oracles::ln2_bracket(200);
    // both enclose ln 2
    CHECK(v.lo().cmp(ohi) <= 0);
    CHECK(v.hi().cmp(olo) >= 0);
    // and both sit inside the published digit window
    const Rational dlo = Rational::from_string("0.6931471805599453094172321214");
    const Rational dhi = dlo + Rational::from_string("1e-28");
    CHECK(olo >= dlo);
    CHECK(ohi <= dhi);
    CHECK(v.lo().cmp(dlo) >= 0);
    CHECK(v.hi().cmp(dhi) <= 0);
}

TEST_CASE("ln 3 against the independent 2 atanh(1/2) series") {
    const Interval v = hb::ln_enclosure(Rational(3), 128);
    const auto [olo, ohi] = oracles::ln3_bracket(120);
    CHECK(v.lo().cmp(ohi) <= 0);
    CHECK(v.hi().cmp(olo) >= 0);
    const Rational dlo = Rational::from_string("1.0986122886681096913952452369");
    const Rational dhi = dlo + Rational::from_string("1e-28");
    CHECK(olo >= dlo);
    CHECK(ohi <= dhi);
    CHECK(v.lo().cmp(dlo) >= 0);
    CHECK(v.hi().cmp(dhi) <= 0);
}

TEST_CASE("ln width contract") {
    for (const char* xs : {"2", "3", "10", "137/60", "1/7", "1000000", "1/1000000"}) {
        const Rational x = Rational::from_string(xs);
        for (int bits : {64, 128, 256}) {
            const Interval v = hb::ln_enclosure(x, bits);
            // |ln x| < 2^mag where mag bounds the enclosure magnitude
            const long mag = std::max(v.lo().mag2(), v.hi().mag2());
            Rational cap = Rational(4) / Rational(2).pow_int(bits);
            if (mag > 0) cap = cap * Rational(2).pow_int(mag);
            CHECK(v.width().cmp(cap) <= 0);
        }
    }
}

TEST_CASE("ln: enclosures never widen as precision rises") {
    for (const char* xs : {"2", "3", "99/7", "1/3"}) {
        const Rational x = Rational::from_string(xs);
        Rational prev_width(-1);
        for (int bits : {32, 48, 64, 96, 128, 192, 256}) {
            const Interval v = hb::ln_enclosure(x, bits);
            const Rational w = v.width().to_rational();
            if (prev_width.sign() >= 0) CHECK(w <= prev_width);
            prev_width = w;
        }
    }
}

TEST_CASE("ln: multiplicativity as interval overlap") {
    std::mt19937_64 rng(99);
    for (int it = 0; it < 60; ++it) {
        const Rational p = rand_positive_rational(rng);
        const Rational q = rand_positive_rational(rng);
        const Interval lhs = hb::ln_enclosure(p * q, 128);
        const Interval rhs =
            Interval::add(hb::ln_enclosure(p, 128), hb::ln_enclosure(q, 128), 128);
        CHECK(overlaps(lhs, rhs));
    }
}

TEST_CASE("ln(1/x) vs -ln(x)") {
    std::mt19937_64 rng(123);
    for (int it = 0; it < 40; ++it) {
        const Rational x = rand_positive_rational(rng);
        const Interval a = hb::ln_enclosure(x.reciprocal(), 128);
        const Interval b = Interval::neg(hb::ln_enclosure(x, 128));
        CHECK(overlaps(a, b));
    }
}

TEST_CASE("ln domain errors") {
    CHECK_THROWS_AS(hb::ln_enclosure(Rational(0), 64), hb::DomainError);
    CHECK_THROWS_AS(hb::ln_enclosure(Rational(-3, 2), 64), hb::DomainError);
}

TEST_CASE("ln2 cache consistency") {
    const Interval a = hb::ln2_enclosure(144);
    const Interval b = hb::ln2_enclosure(144);
    CHECK(a.lo() == b.lo());
    CHECK(a.hi() == b.hi());
    const auto [olo, ohi] = oracles::ln2_bracket(200);
    CHECK(a.lo().cmp(ohi) <= 0);
    CHECK(a.hi().cmp(olo) >= 0);
}
