#include "hb/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "hb/errors.hpp"
#include "hb/format.hpp"
#include "hb/ln.hpp"

namespace hb {

int VerifyReport::exit_code() const {
    if (!failures.empty()) return 1;
    if (!inconclusive.empty()) return 2;
    return 0;
}

void VerifyReport::absorb(VerifyReport&& leaf) {
    checked += leaf.checked;
    for (auto& f : leaf.failures) failures.push_back(std::move(f));
    for (auto& s : leaf.inconclusive) inconclusive.push_back(std::move(s));
    certified = certified && leaf.certified;
}

std::string VerifyReport::to_json() const {
    nlohmann::json j;
    j["suite"] = suite;
    j["from"] = from;
    j["to"] = to;
    j["checked"] = checked;
    j["certified"] = certified;
    j["pass"] = pass();
    j["failures"] = nlohmann::json::array();
    for (const auto& f : failures)
        j["failures"].push_back({{"where", f.where}, {"relation", f.relation}, {"witness", f.witness}});
    j["inconclusive"] = inconclusive;
    return j.dump();
}

std::string VerifyReport::summary() const {
    std::ostringstream os;
    os << suite << ": " << (pass() ? "PASS" : (failures.empty() ? "INCONCLUSIVE" : "FAIL"))
       << " (checked " << checked << ", failures " << failures.size() << ", inconclusive "
       << inconclusive.size() << (certified ? ", certified" : ", sampled") << ")";
    return os.str();
}

namespace {

Rational rat_u64(std::uint64_t n) { return Rational(mpz_class(n), mpz_class(1)); }

std::string iv_str(const Interval& v) {
    return "[" + decimal_lo(v, 25) + ", " + decimal_hi(v, 25) + "]";
}

void fail(VerifyReport& rep, std::string where, std::string relation, std::string witness) {
    rep.failures.push_back({std::move(where), std::move(relation), std::move(witness)});
}

// A bound check on an enclosure has three outcomes: certified, certified
// violation (the whole interval is on the wrong side), or straddling the
// boundary, which means the width was too loose to decide and is reported
// as inconclusive rather than as a failure.
enum class Outcome { pass, straddle, violation };

Outcome check_above(const Interval& v, const Rational& bound) {
    if (v.strictly_above(bound)) return Outcome::pass;
    if (v.hi().cmp(bound) < 0) return Outcome::violation;
    return Outcome::straddle;
}

Outcome check_below(const Interval& v, const Rational& bound) {
    if (v.strictly_below(bound)) return Outcome::pass;
    if (v.lo().cmp(bound) > 0) return Outcome::violation;
    return Outcome::straddle;
}

void record(VerifyReport& rep, Outcome oc, const std::string& where,
            const std::string& relation, const std::string& witness) {
    if (oc == Outcome::pass) return;
    if (oc == Outcome::violation)
        fail(rep, where, relation, witness);
    else
        rep.inconclusive.push_back(where + ": " + relation + " undecided at this width");
}

// ---------------------------------------------------------------------------
// Residual sweep: certified enclosures of H_n - ln n - gamma for a whole
// range of n at once. The range is cut into fixed-size leaves; each leaf
// seeds from an outward prefix of exact leaf sums, then walks its n's with
// an exact rational partial sum on top of the seed. Leaf layout is fixed, so
// results are bit-identical regardless of the number of worker threads.
// ---------------------------------------------------------------------------

constexpr std::uint64_t kLeafSize = 2048;

class ResidualSweep {
public:
    // visitor(n, residual, overlap, leaf_report): `overlap` marks the extra
    // leaf-seed point n0 = leaf_start - 1 emitted so visitors that look at
    // consecutive pairs can prime themselves; it must not be counted.
    // Each leaf gets a fresh visitor from the factory, so visitors may keep
    // per-leaf state without any cross-thread sharing.
    using Visitor =
        std::function<void(std::uint64_t, const Interval&, bool, VerifyReport&)>;
    using VisitorFactory = std::function<Visitor()>;

    ResidualSweep(std::uint64_t to, int bits, Interval gamma)
        : to_(to), bits_(bits), gamma_(std::move(gamma)) {
        const std::uint64_t leaves = (to_ + kLeafSize - 1) / kLeafSize;
        std::vector<Rational> sums(leaves);
        for (std::uint64_t l = 0; l < leaves; ++l) {
            const std::uint64_t a = l * kLeafSize + 1;
            const std::uint64_t b = std::min((l + 1) * kLeafSize, to_);
            sums[l] = harmonic_range_exact(a, b);
        }
        prefix_.reserve(leaves + 1);
        prefix_.push_back(Interval::from_int(0, bits_));
        for (std::uint64_t l = 0; l < leaves; ++l)
            prefix_.push_back(
                Interval::add(prefix_.back(), Interval::from_rational(sums[l], bits_), bits_));
    }

    void visit(std::uint64_t from, std::uint64_t to, unsigned jobs, bool overlap,
               const VisitorFactory& make_visitor, VerifyReport& out) const {
        const std::uint64_t l_lo = (from - 1) / kLeafSize;
        const std::uint64_t l_hi = (to - 1) / kLeafSize;
        std::vector<VerifyReport> leaf_reports(l_hi - l_lo + 1);
        std::atomic<std::uint64_t> next{l_lo};
        auto work = [&] {
            while (true) {
                const std::uint64_t l = next.fetch_add(1);
                if (l > l_hi) return;
                Visitor visitor = make_visitor();
                run_leaf(l, from, to, overlap, visitor, leaf_reports[l - l_lo]);
            }
        };
        if (jobs <= 1) {
            work();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(work);
            for (auto& th : pool) th.join();
        }
        for (auto& r : leaf_reports) out.absorb(std::move(r));
    }

    Interval residual_at_seed(std::uint64_t n0) const {  // n0 = l * kLeafSize
        Interval r = Interval::sub(prefix_[n0 / kLeafSize], ln_enclosure(rat_u64(n0), bits_),
                                   bits_);
        return Interval::sub(r, gamma_, bits_);
    }

private:
    void run_leaf(std::uint64_t l, std::uint64_t emit_from, std::uint64_t to, bool overlap,
                  const Visitor& visitor, VerifyReport& rep) const {
        const std::uint64_t first = l * kLeafSize + 1;
        const std::uint64_t last = std::min((l + 1) * kLeafSize, to);
        // the seed point primes pair-wise visitors across the leaf boundary
        if (overlap && first > 1 && first - 1 >= emit_from && first <= to)
            visitor(first - 1, residual_at_seed(first - 1), true, rep);
        Rational partial(0);
        for (std::uint64_t i = first; i <= last; ++i) {
            partial += Rational(mpz_class(1), mpz_class(i));
            if (i < emit_from) continue;
            Interval h = Interval::add(prefix_[l], Interval::from_rational(partial, bits_), bits_);
            Interval r = Interval::sub(h, ln_enclosure(rat_u64(i), bits_), bits_);
            r = Interval::sub(r, gamma_, bits_);
            visitor(i, r, false, rep);
        }
    }

    std::uint64_t to_;
    int bits_;
    Interval gamma_;
    std::vector<Interval> prefix_;
};

// ---------------------------------------------------------------------------
// Linear fractional forms (a + b g)/(c + d g) in a symbol g: enough algebra
// to replay the n = 1 equality case of the Theorem on the rational-function
// level, where it is an identity rather than a numerical coincidence.
// ---------------------------------------------------------------------------

struct LinFrac {
    Rational a, b, c, d;

    static LinFrac constant(const Rational& v) { return {v, Rational(0), Rational(1), Rational(0)}; }
    static LinFrac symbol() { return {Rational(0), Rational(1), Rational(1), Rational(0)}; }

    LinFrac negated() const { return {-a, -b, c, d}; }
    LinFrac plus_const(const Rational& k) const { return {a + k * c, b + k * d, c, d}; }
    LinFrac reciprocal() const { return {c, d, a, b}; }

    bool equivalent(const LinFrac& o) const {
        return a * o.c == o.a * c && b * o.d == o.b * d &&
               a * o.d + b * o.c == o.a * d + o.b * c;
    }
};

// 1/(2n + 1/(1-g) - 2) == 1 - g at n = 1, as rational functions of g.
bool sharp_lower_identity_at_one() {
    const LinFrac g = LinFrac::symbol();
    const LinFrac one_minus_g = g.negated().plus_const(Rational(1));
    const LinFrac constant = one_minus_g.reciprocal().plus_const(Rational(-2));
    const LinFrac lower = constant.plus_const(Rational(2)).reciprocal();  // 2n = 2
    const LinFrac residual_sym = g.negated().plus_const(Rational(1));    // H_1 - ln 1 - g
    return lower.equivalent(residual_sym);
}

}  // namespace

Rational phi_derivative_closed_form(const Rational& x) {
    if (x.sign() <= 0) throw DomainError("phi_derivative_closed_form: x must be positive");
    return (Rational(12) - Rational(5) * x) / (Rational(360) * x.pow_int(5));
}

VerifyReport verify_theorem(std::uint64_t from, std::uint64_t to, const VerifyOptions& opts) {
    if (from == 0 || from > to) throw DomainError("verify_theorem: need 1 <= from <= to");
    VerifyReport rep;
    rep.suite = "theorem";
    rep.from = from;
    rep.to = to;

    const Rational tw = opts.target_width;
    const PsiEnclosure g = euler_gamma_auto(tw * Rational(1, 8), opts.bits);
    const Interval gamma = g.value;
    const Interval c = sharp_lower_constant(gamma, opts.bits);
    const Rational third(1, 3), two_fifths(2, 5);

    // Uniform facts about the sharp constant: 1/3 < c < 2/5, so the sharp
    // lower bound beats the Toth-Mare lower bound at every n at once.
    ++rep.checked;
    if (!(c.strictly_above(third) && c.strictly_below(two_fifths)))
        fail(rep, "constant", "1/3 < 1/(1-gamma) - 2 < 2/5", iv_str(c));

    ++rep.checked;
    if (!sharp_lower_identity_at_one())
        fail(rep, "n=1", "1/(2 + 1/(1-gamma) - 2) == 1 - gamma (rational functions)", "");

    const Interval phi1 = phi(Rational(1), Rational(1, 10).pow_int(18), std::max(opts.bits, 128));

    ResidualSweep sweep(to, opts.bits, gamma);
    const auto per_n = [&](std::uint64_t n, const Interval& r, bool, VerifyReport& lr) {
        const std::string where = "n=" + std::to_string(n);
        ++lr.checked;
        if (!r.width_at_most(tw)) {
            lr.inconclusive.push_back(where + ": residual width exceeds target");
            return;
        }
        const Rational fl = franel_lower_exact(n), fu = franel_upper_exact(n);
        const Rational tl = toth_mare_lower_exact(n), tu = toth_mare_upper_exact(n);
        record(lr, check_above(r, fl), where, "franel lower < residual", iv_str(r));
        record(lr, check_below(r, fu), where, "residual < franel upper", iv_str(r));
        record(lr, check_above(r, tl), where, "toth-mare lower < residual", iv_str(r));
        record(lr, check_below(r, tu), where, "residual < sharp/toth-mare upper", iv_str(r));

        const Interval sl = sharp_lower_interval(n, gamma, opts.bits);
        if (n == 1) {
            // equality case: the identity above is the proof; numerically the
            // two enclosures must overlap.
            if (!sl.intersects(r))
                fail(lr, "n=1", "sharp lower and residual enclosures overlap", iv_str(sl));
        } else if (!sl.strictly_below(r)) {
            if (r.strictly_below(sl))
                fail(lr, where, "sharp lower < residual (n >= 2)",
                     iv_str(sl) + " vs " + iv_str(r));
            else
                lr.inconclusive.push_back(where + ": sharp lower vs residual undecided");
        }
        // Family ordering at this n.
        record(lr, check_above(sl, fl), where, "sharp lower > franel lower", iv_str(sl));
        record(lr, check_above(sl, tl), where, "sharp lower > toth-mare lower", iv_str(sl));
        if (!(tu < fu)) fail(lr, where, "sharp upper < franel upper", "");

        if (r.lo().sign() <= 0) {
            lr.inconclusive.push_back(where + ": residual enclosure touches zero");
            return;
        }
        const Interval ph = Interval::sub(Interval::recip(r, opts.bits),
                                          Interval::from_rational(Rational(2) * rat_u64(n),
                                                                  opts.bits),
                                          opts.bits);
        record(lr, check_above(ph, third), where, "phi(n) > 1/3", iv_str(ph));
        if (n >= 2) {
            if (ph.strictly_below(phi1)) {
                // certified
            } else if (phi1.strictly_below(ph)) {
                fail(lr, where, "phi(n) < phi(1)", iv_str(ph) + " vs " + iv_str(phi1));
            } else {
                lr.inconclusive.push_back(where + ": phi(n) vs phi(1) undecided");
            }
        }
    };
    sweep.visit(from, to, opts.jobs, /*overlap=*/false,
                [&]() -> ResidualSweep::Visitor { return per_n; }, rep);
    return rep;
}

VerifyReport verify_phi_monotone(std::uint64_t from, std::uint64_t to,
                                 const VerifyOptions& opts) {
    if (from == 0 || from > to) throw DomainError("verify_phi_monotone: need 1 <= from <= to");
    VerifyReport rep;
    rep.suite = "phi-monotone";
    rep.from = from;
    rep.to = to;
    if (from == to) return rep;

    // Residual width that keeps phi(n) within the target for every n in
    // range (reciprocal sensitivity grows like (2n)^2, so size for n = to).
    const Rational dmin = toth_mare_lower_exact(to);
    const Rational inner = opts.target_width * dmin * dmin * Rational(1, 2);
    const PsiEnclosure g = euler_gamma_auto(inner * Rational(1, 4), opts.bits);
    const Interval gamma = g.value;

    ResidualSweep sweep(to, opts.bits, gamma);
    struct Prev {
        bool have = false;
        std::uint64_t n = 0;
        Interval phi;
    };

    const auto make_visitor = [&]() -> ResidualSweep::Visitor {
        return [&, prev = Prev{}](std::uint64_t n, const Interval& r, bool overlap,
                                  VerifyReport& lr) mutable {
            if (r.lo().sign() <= 0) {
                fail(lr, "n=" + std::to_string(n), "residual > 0", iv_str(r));
                return;
            }
            Interval ph = Interval::sub(Interval::recip(r, opts.bits),
                                        Interval::from_rational(Rational(2) * rat_u64(n),
                                                                opts.bits),
                                        opts.bits);
            if (!overlap && prev.have && prev.n + 1 == n) {
                ++lr.checked;
                bool separated = ph.strictly_below(prev.phi);
                if (!separated) {
                    // near tie: tighten both points geometrically, 6 tries max
                    Rational w = opts.target_width;
                    Interval a = prev.phi, b = ph;
                    for (int attempt = 0; attempt < 6 && !separated; ++attempt) {
                        w = w * Rational(1, 16);
                        try {
                            a = phi(rat_u64(prev.n), w, opts.bits + 64 * (attempt + 1));
                            b = phi(rat_u64(n), w, opts.bits + 64 * (attempt + 1));
                        } catch (const Error&) {
                            break;
                        }
                        separated = b.strictly_below(a);
                    }
                    if (!separated)
                        lr.inconclusive.push_back("n=" + std::to_string(prev.n) + ": phi(" +
                                                  std::to_string(n) + ") < phi(" +
                                                  std::to_string(prev.n) +
                                                  ") not separated at precision cap");
                }
            }
            prev = {true, n, ph};
        };
    };
    sweep.visit(from, to, opts.jobs, /*overlap=*/true, make_visitor, rep);
    return rep;
}

VerifyReport verify_phi_derivative_sign(const std::vector<Rational>& samples,
                                        const VerifyOptions& opts) {
    VerifyReport rep;
    rep.suite = "phi-derivative-sign";
    const Rational twelve_fifths(12, 5);
    for (const auto& x : samples) {
        if (!(x > twelve_fifths))
            throw DomainError("verify_phi_derivative_sign: samples must exceed 12/5");
        const std::string where = "x=" + x.str();

        const Rational closed = phi_derivative_closed_form(x);
        ++rep.checked;
        if (!(closed.sign() < 0))
            fail(rep, where, "(12-5x)/(360 x^5) < 0", closed.str());

        ++rep.checked;
        Rational w = closed.abs();
        if (w > Rational(1, 1000)) w = Rational(1, 1000);
        bool done = false;
        for (int attempt = 0; attempt <= 6 && !done; ++attempt) {
            const Rational piece = w * Rational(1, 4);
            PsiEnclosure trig, dig;
            try {
                trig = trigamma_residual_enclosure(x, piece, opts.bits, opts.coeffs);
                dig = digamma_residual_enclosure(x, piece, opts.bits, opts.coeffs);
            } catch (const Error& e) {
                rep.inconclusive.push_back(where + ": " + e.what());
                done = true;
                break;
            }
            const Interval d2 = Interval::mul(dig.value, dig.value, opts.bits);
            const Interval assembled =
                Interval::sub(trig.value, Interval::mul_int(d2, 2, opts.bits), opts.bits);
            if (assembled.hi().sign() < 0) {
                done = true;  // certified negative
            } else if (assembled.lo().sign() > 0) {
                fail(rep, where, "1/x - psi'(x+1) - 2(psi(x+1) - ln x)^2 < 0",
                     iv_str(assembled));
                done = true;
            } else if (attempt == 6) {
                rep.inconclusive.push_back(where + ": enclosure straddles 0 at precision cap");
            } else {
                w = w * Rational(1, 16);
            }
        }
    }
    return rep;
}

VerifyReport verify_series_coefficients(std::uint64_t n_max) {
    if (n_max < 7) throw DomainError("verify_series_coefficients: n_max must be >= 7");
    VerifyReport rep;
    rep.suite = "series-coefficients";
    rep.from = 3;
    rep.to = n_max;

    mpz_class factorial = 2;  // 3! built below; literal factorial forms for small n
    for (std::uint64_t n = 3; n <= n_max; ++n) {
        factorial *= static_cast<unsigned long>(n);
        const mpz_class nz(static_cast<unsigned long>(n));

        ++rep.checked;
        const mpz_class a = (nz - 3) * (nz - 4);
        const bool zero_ok = (n == 3 || n == 4) ? a == 0 : a > 0;
        if (!zero_ok)
            fail(rep, "n=" + std::to_string(n), "(n-3)(n-4)/n! >= 0, zero iff n in {3,4}",
                 a.get_str());

        ++rep.checked;
        if (!(nz - 2 > 0))
            fail(rep, "n=" + std::to_string(n), "(n-2)/n! > 0", "");

        if (n < 7) continue;

        // identity multiplied through by n! > 0
        const mpz_class lhs = 720 - 360 * nz + 60 * nz * (nz - 1) -
                              nz * (nz - 1) * (nz - 2) * (nz - 3);
        const mpz_class m(static_cast<unsigned long>(n - 7));
        const mpz_class quartic = 120 + 218 * m + 119 * m * m + 22 * m * m * m + m * m * m * m;
        ++rep.checked;
        if (lhs != -quartic)
            fail(rep, "n=" + std::to_string(n), "quartic factorization identity",
                 lhs.get_str() + " vs -" + quartic.get_str());
        ++rep.checked;
        if (!(lhs < 0))
            fail(rep, "n=" + std::to_string(n), "720/n! - 360/(n-1)! + 60/(n-2)! - 1/(n-4)! < 0",
                 lhs.get_str());

        if (n <= 64) {
            // literal factorial form, exact rationals
            const Rational nf(factorial, mpz_class(1));
            const Rational lit = Rational(720) / nf -
                                 Rational(360) / Rational(factorial / nz, mpz_class(1)) +
                                 Rational(60) / Rational(factorial / (nz * (nz - 1)), mpz_class(1)) -
                                 Rational(1) / Rational(factorial / (nz * (nz - 1) * (nz - 2) * (nz - 3)),
                                                        mpz_class(1));
            ++rep.checked;
            if (lit != Rational(-quartic, factorial))
                fail(rep, "n=" + std::to_string(n), "literal factorial form equals -quartic/n!",
                     lit.str());
        }
    }
    return rep;
}

std::vector<double> default_integrand_samples() {
    return {1e-6, 1e-4, 1e-3, 0.01, 0.1, 0.25, 0.49, 0.5, 0.75, 1, 2, 5, 10, 20, 35, 50};
}

VerifyReport verify_integrand_signs(const std::vector<double>& t_samples) {
    VerifyReport rep;
    rep.suite = "integrand-signs";
    rep.certified = false;

    // f1 = 1/t - 1/(e^t - 1) - 1/2 + t/12, and f2 = f1 - t/12,
    // f3 = t*f1, f4 = f3 - t^4/720. Near zero, 1/(e^t-1) cancels against 1/t,
    // so switch to the Bernoulli series f1 = t^3/720 - t^5/30240 + ...
    const auto f1 = [](double t) {
        if (t < 0.5) {
            const double t2 = t * t;
            return t * t2 *
                   (1.0 / 720 +
                    t2 * (-1.0 / 30240 +
                          t2 * (1.0 / 1209600 +
                                t2 * (-1.0 / 47900160 + t2 * (691.0 / 1307674368000)))));
        }
        return 1.0 / t - 1.0 / std::expm1(t) - 0.5 + t / 12.0;
    };

    for (const double t : t_samples) {
        if (!(t > 0) || t > 50) throw DomainError("verify_integrand_signs: need t in (0, 50]");
        std::ostringstream ws;
        ws << "t=" << t;
        const std::string where = ws.str();
        const double v1 = f1(t);
        const double v2 = v1 - t / 12.0;
        const double v3 = t * v1;
        const double v4 = v3 - t * t * t * t / 720.0;
        ++rep.checked;
        if (!(v1 >= 0)) fail(rep, where, "1/t - 1/(e^t-1) - 1/2 + t/12 >= 0", std::to_string(v1));
        ++rep.checked;
        if (!(v2 <= 0)) fail(rep, where, "1/t - 1/(e^t-1) - 1/2 <= 0", std::to_string(v2));
        ++rep.checked;
        if (!(v3 >= 0)) fail(rep, where, "1 - t/(e^t-1) - t/2 + t^2/12 >= 0", std::to_string(v3));
        ++rep.checked;
        if (!(v4 <= 0)) fail(rep, where, "1 - t/(e^t-1) - t/2 + t^2/12 - t^4/720 <= 0",
                             std::to_string(v4));
    }
    return rep;
}

VerifyReport verify_lemma_brackets(std::size_t count, std::uint64_t seed, std::uint64_t k,
                                   const VerifyOptions& opts) {
    VerifyReport rep;
    rep.suite = "lemma-brackets";
    const int bits = std::max(opts.bits, 192);
    const LemmaCoefficients canonical{};  // the literal bracket constants
    std::mt19937_64 rng(seed);

    for (std::size_t i = 0; i < count; ++i) {
        const unsigned long q = 1 + static_cast<unsigned long>(rng() % 1000);
        const unsigned long p = 1 + static_cast<unsigned long>(rng() % (100 * q));
        const Rational x{mpz_class(p), mpz_class(q)};  // in (0, 100]
        const std::string where = "x=" + x.str();

        const Interval raw_d = digamma_raw_bracket(x, bits, opts.coeffs);
        const Interval ref_d = digamma_lemma_enclosure(x, k, bits, opts.coeffs).value;
        const auto [plo_d, phi_d] = digamma_bracket_exact(x, canonical);
        ++rep.checked;
        if (!raw_d.contains(ref_d))
            fail(rep, where, "digamma raw bracket contains shifted enclosure",
                 iv_str(ref_d) + " not in " + iv_str(raw_d));
        ++rep.checked;
        if (!(ref_d.lo().cmp(plo_d) >= 0 && ref_d.hi().cmp(phi_d) <= 0))
            fail(rep, where, "shifted digamma enclosure inside literal bracket",
                 iv_str(ref_d));

        const Interval raw_t = trigamma_raw_bracket(x, bits, opts.coeffs);
        const Interval ref_t = trigamma_lemma_enclosure(x, k, bits, opts.coeffs).value;
        const auto [plo_t, phi_t] = trigamma_bracket_exact(x, canonical);
        ++rep.checked;
        if (!raw_t.contains(ref_t))
            fail(rep, where, "trigamma raw bracket contains shifted enclosure",
                 iv_str(ref_t) + " not in " + iv_str(raw_t));
        ++rep.checked;
        if (!(ref_t.lo().cmp(plo_t) >= 0 && ref_t.hi().cmp(phi_t) <= 0))
            fail(rep, where, "shifted trigamma enclosure inside literal bracket",
                 iv_str(ref_t));
    }
    return rep;
}

}  // namespace hb
