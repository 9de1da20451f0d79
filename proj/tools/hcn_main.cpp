// hcn: exact Hurwitz class numbers, q-series operators, identity
// verification at Sturm-style bounds, and prime conjecture tables.
//
// Exit codes: 0 all checks passed, 1 mathematical mismatch found,
// 2 usage or I/O error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hcn/class_numbers.hpp"
#include "hcn/emit.hpp"
#include "hcn/errors.hpp"

namespace {

using namespace hcn;

struct GlobalOpts {
    std::string format = "plain";
    std::optional<std::string> cache;
    bool no_cache = false;

    Format fmt() const { return parse_format(format); }
    ClassNumberTable table(long needed_max) const {
        return ensure_table(needed_max, cache, no_cache);
    }
};

struct SeriesSpec {
    std::string kind;
    long x = 0;
    long y = 0;
};

long parse_long(const std::string& s) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("not an integer: " + s);
    }
    if (pos != s.size()) throw UsageError("not an integer: " + s);
    return v;
}

SeriesSpec parse_series_id(const std::string& id) {
    if (id == "H" || id == "D" || id == "g7") return {id, 0, 0};
    const auto colon = id.find(':');
    const std::string kind = id.substr(0, colon);
    if (colon != std::string::npos && (kind == "theta" || kind == "G" || kind == "lhs")) {
        const std::string args = id.substr(colon + 1);
        const auto comma = args.find(',');
        if (comma != std::string::npos) {
            return {kind, parse_long(args.substr(0, comma)), parse_long(args.substr(comma + 1))};
        }
    }
    throw UsageError("unknown series id: " + id +
                     " (expected H, D, g7, theta:a,N, G:N,r or lhs:a,p)");
}

QSeries build_series(const GlobalOpts& g, const SeriesSpec& spec, long prec) {
    if (prec < 0) throw UsageError("series: precision must be non-negative");
    if (spec.kind == "H") return hurwitz_series(g.table(prec - 1), prec);
    if (spec.kind == "D") return sigma_series(prec);
    if (spec.kind == "g7") return g7_series(prec);
    if (spec.kind == "theta") return theta_series(spec.x, spec.y, prec);
    if (spec.kind == "G") return g_series(spec.x, spec.y, prec);
    return class_sum_series(g.table(4 * prec - 1), spec.x, spec.y, prec);
}

// "classsums_a<A>_p<P>" -> (A, P)
std::optional<std::pair<long, long>> parse_classsums_id(const std::string& id) {
    const std::string prefix = "classsums_a";
    if (id.rfind(prefix, 0) != 0) return std::nullopt;
    const auto p_pos = id.find("_p", prefix.size());
    if (p_pos == std::string::npos) return std::nullopt;
    return std::make_pair(parse_long(id.substr(prefix.size(), p_pos - prefix.size())),
                          parse_long(id.substr(p_pos + 2)));
}

int run(int argc, char** argv) {
    CLI::App app{"exact Hurwitz class number and q-series identity toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--format", g.format, "output format: plain, json or csv")
        ->default_val("plain");
    app.add_option("--cache", g.cache, "class-number cache file (auto-extended on demand)");
    app.add_flag("--no-cache", g.no_cache, "ignore any cache and recompute");

    int status = 0;

    // hurwitz <n>
    long hw_n = 0;
    CLI::App* hw = app.add_subcommand("hurwitz", "print the Hurwitz class number H(n)");
    hw->add_option("n", hw_n, "index n >= 0")->required();
    hw->callback([&] {
        const Rational h = hurwitz(hw_n);
        std::cout << emit_rational(h, g.fmt()) << '\n';
    });

    // table --max N [--cache PATH]
    long tb_max = 0;
    CLI::App* tb = app.add_subcommand("table", "emit 12*H(n) for 0 <= n <= N");
    tb->add_option("--max", tb_max, "largest n")->required();
    tb->callback([&] {
        if (tb_max < 0) throw UsageError("table: --max must be non-negative");
        std::cout << emit_table(g.table(tb_max), tb_max, g.fmt());
    });

    // classsum --a A --p P --n N
    long cs_a = 0, cs_p = 0, cs_n = 0;
    CLI::App* cs = app.add_subcommand("classsum", "print the class-number sum H_{a,p}(n)");
    cs->add_option("--a", cs_a, "residue a")->required();
    cs->add_option("--p", cs_p, "odd prime p")->required();
    cs->add_option("--n", cs_n, "index n >= 1")->required();
    cs->callback([&] {
        const Rational v = class_number_sum(g.table(4 * cs_n), cs_a, cs_p, cs_n);
        std::cout << emit_rational(v, g.fmt()) << '\n';
    });

    // series <id> --prec K
    std::string se_id;
    long se_prec = 5000;
    CLI::App* se = app.add_subcommand(
        "series", "dump a catalog series (H, D, g7, theta:a,N, G:N,r, lhs:a,p)");
    se->add_option("id", se_id, "series id")->required();
    se->add_option("--prec", se_prec, "number of coefficients")->default_val(5000);
    se->callback([&] {
        std::cout << emit_series(build_series(g, parse_series_id(se_id), se_prec), g.fmt());
    });

    // verify <identity_id> [--bound B]
    std::string vf_id;
    std::optional<long> vf_bound;
    CLI::App* vf = app.add_subcommand("verify",
                                      "verify a cataloged identity (p3, p5_a0, p5_a1, p7_a0, "
                                      "p7_a{1,2,3}_r*, classsums_a<A>_p<P>, or all)");
    vf->add_option("id", vf_id, "identity id")->required();
    vf->add_option("--bound", vf_bound, "number of coefficients to compare");
    vf->callback([&] {
        std::vector<IdentityReport> reports;
        if (vf_id == "all") {
            for (const IdentityCase& c : identity_cases()) {
                const long b = vf_bound.value_or(
                    c.restricted_residue >= 0 ? kDefaultExtendedBound : sturm_bound(c.p, false));
                reports.push_back(verify_identity(g.table(4 * b), c.id, b));
            }
        } else if (auto ap = parse_classsums_id(vf_id)) {
            const long prec = vf_bound.value_or(500);
            if (prec < 1) throw UsageError("verify: bound must be positive");
            reports.push_back(
                verify_class_sum_consistency(g.table(4 * prec), ap->first, ap->second, prec));
        } else {
            const IdentityCase* c = find_identity(vf_id);
            if (c == nullptr) throw UsageError("unknown identity id: " + vf_id);
            const long b = vf_bound.value_or(
                c->restricted_residue >= 0 ? kDefaultExtendedBound : sturm_bound(c->p, false));
            if (b < 1) throw UsageError("verify: bound must be positive");
            reports.push_back(verify_identity(g.table(4 * b), vf_id, b));
        }
        for (const IdentityReport& rep : reports)
            if (!rep.certified) status = 1;
        std::cout << (reports.size() == 1 ? emit_report(reports[0], g.fmt())
                                          : emit_reports(reports, g.fmt()));
    });

    // conjectures --p P --max-prime M
    long cj_p = 0, cj_max = 0;
    CLI::App* cj = app.add_subcommand("conjectures",
                                      "check the tabulated prime formulas for H_{a,p}(ell)");
    cj->add_option("--p", cj_p, "3, 5 or 7")->required();
    cj->add_option("--max-prime", cj_max, "check all primes up to this bound")->required();
    cj->callback([&] {
        const ConjectureRun run = check_conjectures(g.table(4 * cj_max), cj_p, cj_max);
        if (!run.all_passed()) status = 1;
        std::cout << emit_conjectures(run, g.fmt());
    });

    // eichler --max-prime M
    long ei_max = 0;
    CLI::App* ei = app.add_subcommand("eichler",
                                      "check sum_{m^2<=4l} H(4l-m^2) = 2l for odd primes l");
    ei->add_option("--max-prime", ei_max, "check all odd primes up to this bound")->required();
    ei->callback([&] {
        const ClassNumberTable t = g.table(4 * ei_max);
        std::vector<EichlerLine> lines;
        for (long ell : primes_upto(ei_max)) {
            if (ell == 2) continue;
            lines.push_back({ell, eichler_sum(t, ell)});
            if (lines.back().sum != Rational(2 * ell)) status = 1;
        }
        std::cout << emit_eichler(lines, g.fmt());
    });

    // dmz --prec K
    long dz_prec = 5000;
    CLI::App* dz = app.add_subcommand(
        "dmz", "check (H theta_{0,1})|U(4) = 2D - G_{1,0} - 1/12 coefficientwise");
    dz->add_option("--prec", dz_prec, "number of coefficients")->default_val(5000);
    dz->callback([&] {
        if (dz_prec < 1) throw UsageError("dmz: --prec must be positive");
        const IdentityReport rep = verify_dmz(g.table(4 * dz_prec), dz_prec);
        if (!rep.certified) status = 1;
        std::cout << emit_report(rep, g.fmt());
    });

    // scan --a A --p P --L L --max-prime M
    long sc_a = 0, sc_p = 0, sc_L = 0, sc_max = 0;
    CLI::App* sc = app.add_subcommand(
        "scan", "fit H_{a,p}(ell) = c1*ell + c2 over primes ell = L (mod p)");
    sc->add_option("--a", sc_a, "residue a")->required();
    sc->add_option("--p", sc_p, "odd prime p")->required();
    sc->add_option("--L", sc_L, "prime residue class mod p")->required();
    sc->add_option("--max-prime", sc_max, "sample primes up to this bound")->required();
    sc->callback([&] {
        std::cout << emit_scan(empirical_scan(g.table(4 * sc_max), sc_a, sc_p, sc_L, sc_max),
                               g.fmt());
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n' << app.help();
        return 2;
    }
    return status;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const hcn::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const hcn::PrecisionError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const hcn::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
