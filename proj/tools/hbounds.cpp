// hbounds: certified enclosures and machine-checked bounds for the
// harmonic-sequence residual H_n - ln n - gamma.
//
// Subcommands: gamma, bounds, phi, residual, table, verify.
// Exit codes: 0 success / all checks pass, 1 verification failure,
// 2 verification inconclusive, 64 usage or domain error, 70 internal error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hb/bounds.hpp"
#include "hb/errors.hpp"
#include "hb/format.hpp"
#include "hb/ln.hpp"
#include "hb/psi.hpp"
#include "hb/verify.hpp"

namespace {

using nlohmann::json;

struct GlobalOpts {
    int bits = 128;
    std::string width = "1e-20";
    std::string format = "text";
    std::string out;
    unsigned jobs = 1;
    int digits = 25;

    hb::Rational width_rational() const { return hb::Rational::from_string(width); }
};

void emit(const GlobalOpts& g, const std::string& payload) {
    if (g.out.empty()) {
        std::cout << payload << "\n";
        return;
    }
    std::ofstream f(g.out);
    if (!f) throw hb::Error("cannot open output file: " + g.out);
    f << payload << "\n";
}

json interval_json(const hb::Interval& v, int digits) {
    return json{{"lo", hb::decimal_lo(v, digits)}, {"hi", hb::decimal_hi(v, digits)}};
}

std::string family_name(hb::BoundFamily f) {
    switch (f) {
        case hb::BoundFamily::franel: return "franel";
        case hb::BoundFamily::toth_mare: return "toth_mare";
        case hb::BoundFamily::sharp: return "sharp";
    }
    return "?";
}

int run_gamma(const GlobalOpts& g, std::uint64_t n, unsigned q) {
    const hb::PsiEnclosure e = hb::euler_gamma_enclosure(n, q, g.bits);
    if (g.format == "json") {
        json j{{"gamma",
                {{"lo", hb::decimal_lo(e.value, g.digits)},
                 {"hi", hb::decimal_hi(e.value, g.digits)},
                 {"bits", e.value.bits()}}},
               {"n", n},
               {"q", q},
               {"method", "euler_maclaurin"}};
        emit(g, j.dump());
    } else if (g.format == "csv") {
        std::ostringstream os;
        os << "n,q,gamma_lo,gamma_hi\n"
           << n << "," << q << "," << hb::decimal_lo(e.value, g.digits) << ","
           << hb::decimal_hi(e.value, g.digits);
        emit(g, os.str());
    } else {
        std::ostringstream os;
        os << "gamma in [" << hb::decimal_lo(e.value, g.digits) << ", "
           << hb::decimal_hi(e.value, g.digits) << "]  (n=" << n << " q=" << q
           << " width <= " << hb::width_string(e.value) << ")";
        emit(g, os.str());
    }
    return 0;
}

hb::Interval gamma_for_width(const GlobalOpts& g) {
    hb::Rational w = g.width_rational() * hb::Rational(1, 2);
    const hb::Rational cap(1, 1000000);
    if (w > cap) w = cap;  // sharp bounds need a tight constant regardless
    return hb::euler_gamma_auto(w, g.bits).value;
}

int run_bounds(const GlobalOpts& g, std::uint64_t n, const std::string& family) {
    std::optional<hb::BoundPair> bp;
    if (family == "franel") {
        bp = hb::franel_bounds(n, g.bits);
    } else if (family == "toth_mare") {
        bp = hb::toth_mare_bounds(n, g.bits);
    } else if (family == "sharp") {
        bp = hb::sharp_bounds(n, gamma_for_width(g), g.bits);
    } else {
        throw hb::DomainError("unknown family: " + family + " (franel|toth_mare|sharp)");
    }
    if (g.format == "json") {
        json j{{"family", family_name(bp->family)},
               {"n", bp->n},
               {"lower", interval_json(bp->lower, g.digits)},
               {"upper", interval_json(bp->upper, g.digits)},
               {"lower_strict", bp->lower_strict},
               {"upper_strict", bp->upper_strict}};
        emit(g, j.dump());
    } else if (g.format == "csv") {
        std::ostringstream os;
        os << "family,n,lower_lo,lower_hi,upper_lo,upper_hi\n"
           << family_name(bp->family) << "," << bp->n << ","
           << hb::decimal_lo(bp->lower, g.digits) << "," << hb::decimal_hi(bp->lower, g.digits)
           << "," << hb::decimal_lo(bp->upper, g.digits) << ","
           << hb::decimal_hi(bp->upper, g.digits);
        emit(g, os.str());
    } else {
        std::ostringstream os;
        os << family_name(bp->family) << "(" << bp->n << "): lower in ["
           << hb::decimal_lo(bp->lower, g.digits) << ", " << hb::decimal_hi(bp->lower, g.digits)
           << "] " << (bp->lower_strict ? "(strict)" : "(attained at n=1)") << ", upper in ["
           << hb::decimal_lo(bp->upper, g.digits) << ", " << hb::decimal_hi(bp->upper, g.digits)
           << "] " << (bp->upper_strict ? "(strict)" : "");
        emit(g, os.str());
    }
    return 0;
}

int run_phi(const GlobalOpts& g, const std::string& xs) {
    const hb::Rational x = hb::Rational::from_string(xs);
    const hb::Interval v = hb::phi(x, g.width_rational(), g.bits);
    if (g.format == "json") {
        json j{{"x", x.str()}, {"phi", interval_json(v, g.digits)}, {"bits", v.bits()}};
        emit(g, j.dump());
    } else if (g.format == "csv") {
        std::ostringstream os;
        os << "x,phi_lo,phi_hi\n"
           << x.str() << "," << hb::decimal_lo(v, g.digits) << "," << hb::decimal_hi(v, g.digits);
        emit(g, os.str());
    } else {
        std::ostringstream os;
        os << "phi(" << x.str() << ") in [" << hb::decimal_lo(v, g.digits) << ", "
           << hb::decimal_hi(v, g.digits) << "]  (width <= " << hb::width_string(v) << ")";
        emit(g, os.str());
    }
    return 0;
}

int run_residual(const GlobalOpts& g, std::uint64_t n) {
    const hb::Interval v = hb::residual(n, g.width_rational(), g.bits);
    if (g.format == "json") {
        json j{{"n", n}, {"residual", interval_json(v, g.digits)}, {"bits", v.bits()}};
        emit(g, j.dump());
    } else if (g.format == "csv") {
        std::ostringstream os;
        os << "n,residual_lo,residual_hi\n"
           << n << "," << hb::decimal_lo(v, g.digits) << "," << hb::decimal_hi(v, g.digits);
        emit(g, os.str());
    } else {
        std::ostringstream os;
        os << "H_n - ln n - gamma at n=" << n << " in [" << hb::decimal_lo(v, g.digits) << ", "
           << hb::decimal_hi(v, g.digits) << "]  (width <= " << hb::width_string(v) << ")";
        emit(g, os.str());
    }
    return 0;
}

int run_table(const GlobalOpts& g, std::uint64_t from, std::uint64_t to) {
    if (from == 0 || from > to) throw hb::DomainError("table: need 1 <= from <= to");
    const hb::Rational w = g.width_rational();
    const hb::Interval gamma = hb::euler_gamma_auto(w * hb::Rational(1, 2), g.bits).value;
    // exact harmonic prefix, advanced incrementally
    hb::Rational h = from > 1 ? hb::harmonic_exact(from - 1) : hb::Rational(0);

    json rows = json::array();
    std::ostringstream csv;
    csv << "n,residual_lo,residual_hi,franel_lo,franel_hi,tm_lo,tm_hi,"
           "sharp_lo_lo,sharp_lo_hi,sharp_hi,phi_lo,phi_hi";

    for (std::uint64_t n = from; n <= to; ++n) {
        h += hb::Rational(mpz_class(1), mpz_class(n));
        const hb::Rational nr(mpz_class(n), mpz_class(1));
        hb::Interval r = hb::Interval::sub(hb::Interval::from_rational(h, g.bits),
                                           hb::ln_enclosure(nr, g.bits), g.bits);
        r = hb::Interval::sub(r, gamma, g.bits);
        const hb::Interval ph = hb::Interval::sub(
            hb::Interval::recip(r, g.bits),
            hb::Interval::from_rational(hb::Rational(2) * nr, g.bits), g.bits);
        const hb::Interval fr = hb::Interval::hull(hb::franel_lower_exact(n),
                                                   hb::franel_upper_exact(n), g.bits);
        const hb::Interval tm = hb::Interval::hull(hb::toth_mare_lower_exact(n),
                                                   hb::toth_mare_upper_exact(n), g.bits);
        const hb::Interval sl = hb::sharp_lower_interval(n, gamma, g.bits);
        const hb::Interval su = hb::Interval::from_rational(hb::sharp_upper_exact(n), g.bits);

        if (g.format == "json") {
            rows.push_back(json{{"n", n},
                                {"residual", interval_json(r, g.digits)},
                                {"franel",
                                 json::array({hb::decimal_lo(fr, g.digits),
                                              hb::decimal_hi(fr, g.digits)})},
                                {"toth_mare",
                                 json::array({hb::decimal_lo(tm, g.digits),
                                              hb::decimal_hi(tm, g.digits)})},
                                {"sharp",
                                 json::array({interval_json(sl, g.digits),
                                              interval_json(su, g.digits)})},
                                {"phi", interval_json(ph, g.digits)}});
        } else {
            std::ostringstream& os = csv;
            os << "\n";
            os << n << "," << hb::decimal_lo(r, g.digits) << "," << hb::decimal_hi(r, g.digits)
               << "," << hb::decimal_lo(fr, g.digits) << "," << hb::decimal_hi(fr, g.digits)
               << "," << hb::decimal_lo(tm, g.digits) << "," << hb::decimal_hi(tm, g.digits)
               << "," << hb::decimal_lo(sl, g.digits) << "," << hb::decimal_hi(sl, g.digits)
               << "," << hb::decimal_hi(su, g.digits) << "," << hb::decimal_lo(ph, g.digits)
               << "," << hb::decimal_hi(ph, g.digits);
        }
    }
    if (g.format == "json")
        emit(g, rows.dump());
    else if (g.format == "csv")
        emit(g, csv.str());
    else
        emit(g, csv.str());  // text table uses the csv layout
    return 0;
}

int run_verify(const GlobalOpts& g, const std::string& suite, std::uint64_t from,
               std::uint64_t to, std::uint64_t nmax, std::size_t count, std::uint64_t seed,
               std::uint64_t shift, const std::vector<std::string>& samples) {
    hb::VerifyOptions opts;
    opts.target_width = g.width_rational();
    opts.bits = g.bits;
    opts.jobs = g.jobs;

    hb::VerifyReport rep;
    if (suite == "theorem") {
        rep = hb::verify_theorem(from, to, opts);
    } else if (suite == "phi-monotone") {
        rep = hb::verify_phi_monotone(from, to, opts);
    } else if (suite == "phi-derivative") {
        std::vector<hb::Rational> xs;
        if (samples.empty()) {
            for (const char* s : {"13/5", "3", "7/2", "5", "10", "25"})
                xs.push_back(hb::Rational::from_string(s));
        } else {
            for (const auto& s : samples) xs.push_back(hb::Rational::from_string(s));
        }
        rep = hb::verify_phi_derivative_sign(xs, opts);
    } else if (suite == "series") {
        rep = hb::verify_series_coefficients(nmax);
    } else if (suite == "integrands") {
        std::vector<double> ts;
        for (const auto& s : samples) ts.push_back(std::stod(s));
        rep = hb::verify_integrand_signs(ts.empty() ? hb::default_integrand_samples() : ts);
    } else if (suite == "brackets") {
        rep = hb::verify_lemma_brackets(count, seed, shift, opts);
    } else {
        throw hb::DomainError(
            "unknown suite: " + suite +
            " (theorem|phi-monotone|phi-derivative|series|integrands|brackets)");
    }

    if (g.format == "json") {
        emit(g, rep.to_json());
    } else {
        std::ostringstream os;
        os << rep.summary();
        for (const auto& f : rep.failures)
            os << "\n  FAIL " << f.where << ": " << f.relation
               << (f.witness.empty() ? "" : " -- " + f.witness);
        for (const auto& s : rep.inconclusive) os << "\n  INCONCLUSIVE " << s;
        emit(g, os.str());
    }
    return rep.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"certified bounds for the harmonic-sequence residual H_n - ln n - gamma"};
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--bits", g.bits, "working precision in bits (>= 16)")
        ->check(CLI::Range(16, 1 << 20))
        ->capture_default_str();
    app.add_option("--width", g.width, "target enclosure width, exact decimal string")
        ->capture_default_str();
    app.add_option("--format", g.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--out", g.out, "write output to file instead of stdout");
    app.add_option("--jobs", g.jobs, "worker threads for verification sweeps")
        ->check(CLI::Range(1u, 256u))
        ->capture_default_str();
    app.add_option("--digits", g.digits, "significant digits in printed decimals")
        ->check(CLI::Range(2, 1000))
        ->capture_default_str();

    std::uint64_t n = 1, from = 1, to = 10, nmax = 10000, seed = 20250809, shift = 20;
    std::size_t count = 1000;
    unsigned q = 8;
    std::string family = "sharp", xs = "1", suite;
    std::vector<std::string> samples;

    auto* cmd_gamma = app.add_subcommand("gamma", "Euler-Maclaurin enclosure of Euler's constant");
    cmd_gamma->fallthrough();
    cmd_gamma->add_option("--n", n, "expansion anchor")->check(CLI::PositiveNumber);
    cmd_gamma->add_option("--q", q, "expansion order")->check(CLI::PositiveNumber);

    auto* cmd_bounds = app.add_subcommand("bounds", "bound pair of one family at n");
    cmd_bounds->fallthrough();
    cmd_bounds->add_option("--n", n)->check(CLI::PositiveNumber);
    cmd_bounds->add_option("--family", family, "franel|toth_mare|sharp");

    auto* cmd_phi = app.add_subcommand("phi", "sharpness witness phi(x) = 1/(psi(x+1)-ln x) - 2x");
    cmd_phi->fallthrough();
    cmd_phi->add_option("--x", xs, "positive rational, 'p/q' or decimal");

    auto* cmd_res = app.add_subcommand("residual", "enclosure of H_n - ln n - gamma");
    cmd_res->fallthrough();
    cmd_res->add_option("--n", n)->check(CLI::PositiveNumber);

    auto* cmd_table = app.add_subcommand("table", "per-n table of residual, bounds and phi");
    cmd_table->fallthrough();
    cmd_table->add_option("--from", from)->check(CLI::PositiveNumber);
    cmd_table->add_option("--to", to)->check(CLI::PositiveNumber);

    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->fallthrough();
    cmd_verify->add_option("suite", suite,
                           "theorem|phi-monotone|phi-derivative|series|integrands|brackets")
        ->required();
    cmd_verify->add_option("--from", from)->check(CLI::PositiveNumber);
    cmd_verify->add_option("--to", to)->check(CLI::PositiveNumber);
    cmd_verify->add_option("--nmax", nmax)->check(CLI::PositiveNumber);
    cmd_verify->add_option("--count", count)->check(CLI::PositiveNumber);
    cmd_verify->add_option("--seed", seed);
    cmd_verify->add_option("--shift", shift, "lemma shift k for the bracket suite");
    cmd_verify->add_option("--samples", samples, "comma separated sample points")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 64;
    }

    try {
        if (cmd_gamma->parsed()) return run_gamma(g, n, q);
        if (cmd_bounds->parsed()) return run_bounds(g, n, family);
        if (cmd_phi->parsed()) return run_phi(g, xs);
        if (cmd_res->parsed()) return run_residual(g, n);
        if (cmd_table->parsed()) return run_table(g, from, to);
        if (cmd_verify->parsed())
            return run_verify(g, suite, from, to, nmax, count, seed, shift, samples);
    } catch (const hb::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const hb::PrecisionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 70;
}
