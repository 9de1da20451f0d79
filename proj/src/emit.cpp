#include "hcn/emit.hpp"

#include <sstream>

#include <json.hpp>

#include "hcn/errors.hpp"

namespace hcn {

using ordered_json = nlohmann::ordered_json;

Format parse_format(const std::string& name) {
    if (name == "plain") return Format::plain;
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw UsageError("unknown format: " + name + " (expected json, csv or plain)");
}

std::string emit_rational(const Rational& r, Format fmt) {
    if (fmt == Format::json) return "\"" + r.to_string() + "\"";
    return r.to_string();
}

std::string emit_series(const QSeries& s, Format fmt) {
    std::ostringstream out;
    switch (fmt) {
        case Format::json: {
            ordered_json arr = ordered_json::array();
            for (const Rational& c : s.coeffs()) arr.push_back(c.to_string());
            out << arr.dump() << '\n';
            break;
        }
        case Format::csv:
            for (long n = 0; n < s.precision(); ++n) {
                const Rational& c = s.coeffs()[n];
                out << n << ',' << c.numerator().get_str() << ','
                    << c.denominator().get_str() << '\n';
            }
            break;
        case Format::plain:
            for (long n = 0; n < s.precision(); ++n)
                out << n << ": " << s.coeffs()[n] << '\n';
            break;
    }
    return out.str();
}

std::string emit_table(const ClassNumberTable& t, long upto, Format fmt) {
    std::ostringstream out;
    switch (fmt) {
        case Format::json: {
            ordered_json j;
            j["max"] = upto;
            ordered_json arr = ordered_json::array();
            for (long n = 0; n <= upto; ++n) arr.push_back(t.twelve_h(n));
            j["twelve_h"] = std::move(arr);
            out << j.dump() << '\n';
            break;
        }
        case Format::csv:
            for (long n = 0; n <= upto; ++n) out << n << ',' << t.twelve_h(n) << '\n';
            break;
        case Format::plain:
            for (long n = 0; n <= upto; ++n)
                out << "H(" << n << ") = " << t.hurwitz(n) << '\n';
            break;
    }
    return out.str();
}

namespace {

ordered_json report_json(const IdentityReport& rep) {
    ordered_json j;
    j["identity_id"] = rep.identity_id;
    j["bound_used"] = rep.bound_used;
    j["certified"] = rep.certified;
    if (rep.first_mismatch) {
        ordered_json m;
        m["n"] = rep.first_mismatch->exponent;
        m["lhs"] = rep.first_mismatch->lhs.to_string();
        m["rhs"] = rep.first_mismatch->rhs.to_string();
        j["first_mismatch"] = std::move(m);
    } else {
        j["first_mismatch"] = nullptr;
    }
    j["coefficients_checked"] = rep.coefficients_checked;
    return j;
}

void report_plain(std::ostringstream& out, const IdentityReport& rep) {
    out << rep.identity_id << ": ";
    if (rep.first_mismatch) {
        out << "FAILED at q^" << rep.first_mismatch->exponent << ": lhs "
            << rep.first_mismatch->lhs << ", rhs " << rep.first_mismatch->rhs;
    } else {
        out << (rep.sturm_backed ? "certified" : "extended-verified");
    }
    out << " (bound " << rep.bound_used << ", " << rep.coefficients_checked
        << " coefficients checked)\n";
}

void report_csv(std::ostringstream& out, const IdentityReport& rep) {
    out << rep.identity_id << ',' << rep.bound_used << ','
        << (rep.certified ? "true" : "false") << ',' << rep.coefficients_checked << ',';
    if (rep.first_mismatch)
        out << rep.first_mismatch->exponent << ',' << rep.first_mismatch->lhs << ','
            << rep.first_mismatch->rhs;
    else
        out << ",,";
    out << '\n';
}

} // namespace

std::string emit_report(const IdentityReport& rep, Format fmt) {
    std::ostringstream out;
    switch (fmt) {
        case Format::json: out << report_json(rep).dump() << '\n'; break;
        case Format::csv: report_csv(out, rep); break;
        case Format::plain: report_plain(out, rep); break;
    }
    return out.str();
}

std::string emit_reports(const std::vector<IdentityReport>& reps, Format fmt) {
    std::ostringstream out;
    if (fmt == Format::json) {
        ordered_json arr = ordered_json::array();
        for (const IdentityReport& rep : reps) arr.push_back(report_json(rep));
        out << arr.dump() << '\n';
    } else {
        for (const IdentityReport& rep : reps)
            (fmt == Format::csv) ? report_csv(out, rep) : report_plain(out, rep);
    }
    return out.str();
}

namespace {

std::string a_class_label(long a) {
    return a == 0 ? "0" : "+-" + std::to_string(a);
}

} // namespace

std::string emit_conjectures(const ConjectureRun& run, Format fmt) {
    std::ostringstream out;
    switch (fmt) {
        case Format::json: {
            ordered_json j;
            j["p"] = run.p;
            j["max_prime"] = run.max_prime;
            ordered_json rows = ordered_json::array();
            for (const ConjectureReport& rep : run.reports) {
                ordered_json r;
                r["a"] = rep.a_class;
                r["L"] = rep.L_class;
                r["c1"] = rep.c1.to_string();
                r["c2"] = rep.c2.to_string();
                r["primes_checked"] = rep.primes_checked;
                ordered_json fails = ordered_json::array();
                for (const ConjectureFailure& f : rep.failures) {
                    ordered_json fj;
                    fj["ell"] = f.ell;
                    fj["expected"] = f.expected.to_string();
                    fj["got"] = f.got.to_string();
                    fails.push_back(std::move(fj));
                }
                r["failures"] = std::move(fails);
                rows.push_back(std::move(r));
            }
            j["rows"] = std::move(rows);
            ordered_json skipped = ordered_json::array();
            for (const auto& [a, L] : run.skipped) skipped.push_back({a, L});
            j["skipped"] = std::move(skipped);
            out << j.dump() << '\n';
            break;
        }
        case Format::csv:
            for (const ConjectureReport& rep : run.reports)
                out << run.p << ',' << rep.a_class << ',' << rep.L_class << ','
                    << rep.c1 << ',' << rep.c2 << ',' << rep.primes_checked << ','
                    << rep.failures.size() << '\n';
            break;
        case Format::plain:
            for (const ConjectureReport& rep : run.reports) {
                out << "a=" << a_class_label(rep.a_class) << " L=" << rep.L_class
                    << ": c1=" << rep.c1 << " c2=" << rep.c2 << ", "
                    << rep.primes_checked << " primes";
                if (rep.passed()) {
                    out << " OK\n";
                } else {
                    const ConjectureFailure& f = rep.failures.front();
                    out << " FAILED first at ell=" << f.ell << " (expected " << f.expected
                        << ", got " << f.got << ")\n";
                }
            }
            for (const auto& [a, L] : run.skipped)
                out << "a=" << a_class_label(a) << " L=" << L << ": no formula\n";
            break;
    }
    return out.str();
}

std::string emit_scan(const ScanResult& res, Format fmt) {
    std::ostringstream out;
    switch (fmt) {
        case Format::json: {
            ordered_json j;
            j["a"] = res.a;
            j["p"] = res.p;
            j["L"] = res.L;
            j["primes_used"] = res.primes_used;
            j["c1"] = res.c1.to_string();
            j["c2"] = res.c2.to_string();
            j["affine"] = res.affine;
            if (res.first_break)
                j["first_break"] = *res.first_break;
            else
                j["first_break"] = nullptr;
            out << j.dump() << '\n';
            break;
        }
        case Format::csv:
            out << res.a << ',' << res.p << ',' << res.L << ',' << res.c1 << ',' << res.c2
                << ',' << (res.affine ? "true" : "false") << ',' << res.primes_used << ',';
            if (res.first_break) out << *res.first_break;
            out << '\n';
            break;
        case Format::plain:
            out << "a=" << res.a << " p=" << res.p << " L=" << res.L << ": ";
            if (res.affine)
                out << "c1=" << res.c1 << " c2=" << res.c2 << " affine over "
                    << res.primes_used << " primes\n";
            else
                out << "not affine (fit c1=" << res.c1 << " c2=" << res.c2
                    << " breaks at ell=" << *res.first_break << ")\n";
            break;
    }
    return out.str();
}

std::string emit_eichler(const std::vector<EichlerLine>& lines, Format fmt) {
    std::ostringstream out;
    switch (fmt) {
        case Format::json: {
            long failures = 0;
            ordered_json fails = ordered_json::array();
            for (const EichlerLine& l : lines) {
                if (l.sum != Rational(2 * l.ell)) {
                    ++failures;
                    ordered_json f;
                    f["ell"] = l.ell;
                    f["got"] = l.sum.to_string();
                    f["expected"] = Rational(2 * l.ell).to_string();
                    fails.push_back(std::move(f));
                }
            }
            ordered_json j;
            j["checked"] = lines.size();
            j["failures"] = std::move(fails);
            out << j.dump() << '\n';
            break;
        }
        case Format::csv:
            for (const EichlerLine& l : lines)
                out << l.ell << ',' << l.sum << ',' << 2 * l.ell << ','
                    << (l.sum == Rational(2 * l.ell) ? "true" : "false") << '\n';
            break;
        case Format::plain:
            for (const EichlerLine& l : lines)
                out << l.ell << ": " << l.sum << " == " << 2 * l.ell
                    << (l.sum == Rational(2 * l.ell) ? " OK" : " MISMATCH") << '\n';
            break;
    }
    return out.str();
}

} // namespace hcn
