#include "hcn/qseries.hpp"

#include <algorithm>
#include <atomic>
#include <string>

namespace hcn {

namespace {

std::atomic<long> g_precision_cap{1L << 22};

long norm_mod(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

long nonzero_count(const QSeries& f, long upto) {
    long k = 0;
    for (long n = 0; n < upto; ++n)
        if (!f.coeffs()[n].is_zero()) ++k;
    return k;
}

} // namespace

long precision_cap() { return g_precision_cap.load(); }

void set_precision_cap(long cap) {
    if (cap < 0) throw UsageError("precision cap must be non-negative");
    g_precision_cap.store(cap);
}

ResidueWeight::ResidueWeight(long modulus, std::vector<Rational> values)
    : m_(modulus), values_(std::move(values)) {
    if (m_ < 1) throw UsageError("ResidueWeight: modulus must be positive");
    if (static_cast<long>(values_.size()) != m_)
        throw UsageError("ResidueWeight: need exactly one value per residue class");
}

ResidueWeight ResidueWeight::all_ones(long modulus) {
    return ResidueWeight(modulus, std::vector<Rational>(modulus, Rational(1)));
}

QSeries QSeries::zero(long precision) {
    if (precision < 0) throw UsageError("QSeries: negative precision");
    return QSeries(std::vector<Rational>(precision));
}

QSeries QSeries::constant(const Rational& c0, long precision) {
    QSeries s = zero(precision);
    if (precision > 0) s.c_[0] = c0;
    return s;
}

const Rational& QSeries::coeff(long n) const {
    if (n < 0 || n >= precision())
        throw PrecisionError("QSeries: coefficient q^" + std::to_string(n) +
                             " is outside precision " + std::to_string(precision()));
    return c_[n];
}

QSeries combine(std::span<const Term> terms) {
    if (terms.empty()) throw UsageError("combine: empty term list");
    long p = terms[0].series->precision();
    for (const Term& t : terms) p = std::min(p, t.series->precision());
    std::vector<Rational> out(p);
    for (const Term& t : terms) {
        if (t.scalar.is_zero()) continue;
        for (long n = 0; n < p; ++n)
            out[n].addmul(t.scalar, t.series->coeffs()[n]);
    }
    return QSeries(std::move(out));
}

QSeries combine(std::initializer_list<Term> terms) {
    return combine(std::span<const Term>(terms.begin(), terms.size()));
}

QSeries mul(const QSeries& f, const QSeries& g) {
    const long p = std::min(f.precision(), g.precision());
    // Skipping exact zeros of the sparser factor changes nothing
    // mathematically; it makes products against theta series cheap.
    const bool g_outer = nonzero_count(g, p) <= nonzero_count(f, p);
    const QSeries& outer = g_outer ? g : f;
    const QSeries& inner = g_outer ? f : g;
    std::vector<Rational> out(p);
    for (long j = 0; j < p; ++j) {
        const Rational& cj = outer.coeffs()[j];
        if (cj.is_zero()) continue;
        for (long i = 0; i + j < p; ++i) {
            const Rational& ci = inner.coeffs()[i];
            if (!ci.is_zero()) out[i + j].addmul(ci, cj);
        }
    }
    return QSeries(std::move(out));
}

QSeries u_operator(const QSeries& f, long d) {
    if (d < 1) throw UsageError("U(d): d must be >= 1");
    const long p = f.precision() / d;
    std::vector<Rational> out(p);
    for (long n = 0; n < p; ++n) out[n] = f.coeffs()[n * d];
    return QSeries(std::move(out));
}

QSeries v_operator(const QSeries& f, long d) {
    if (d < 1) throw UsageError("V(d): d must be >= 1");
    const long cap = precision_cap();
    const long p = (f.precision() > cap / d) ? cap : f.precision() * d;
    std::vector<Rational> out(p);
    for (long n = 0; n * d < p; ++n) out[n * d] = f.coeffs()[n];
    return QSeries(std::move(out));
}

QSeries twist(const QSeries& f, const ResidueWeight& w) {
    std::vector<Rational> out(f.precision());
    for (long n = 0; n < f.precision(); ++n) {
        const Rational& wn = w.at(n);
        if (!wn.is_zero()) out[n] = f.coeffs()[n] * wn;
    }
    return QSeries(std::move(out));
}

QSeries sieve(const QSeries& f, long modulus, long residue) {
    if (modulus < 1) throw UsageError("sieve: modulus must be positive");
    const long r = norm_mod(residue, modulus);
    std::vector<Rational> out(f.precision());
    for (long n = r; n < f.precision(); n += modulus) out[n] = f.coeffs()[n];
    return QSeries(std::move(out));
}

QSeries operator+(const QSeries& f, const QSeries& g) {
    return combine({Term{Rational(1), &f}, Term{Rational(1), &g}});
}

QSeries operator-(const QSeries& f, const QSeries& g) {
    return combine({Term{Rational(1), &f}, Term{Rational(-1), &g}});
}

QSeries operator*(const Rational& s, const QSeries& f) {
    std::vector<Rational> out(f.precision());
    for (long n = 0; n < f.precision(); ++n) out[n] = s * f.coeffs()[n];
    return QSeries(std::move(out));
}

CompareResult compare_upto(const QSeries& f, const QSeries& g, long bound) {
    if (bound < 1) throw UsageError("compare_upto: bound must be positive");
    if (bound > f.precision() || bound > g.precision())
        throw PrecisionError("compare_upto: bound " + std::to_string(bound) +
                             " exceeds series precision");
    CompareResult res;
    for (long n = 0; n < bound; ++n) {
        if (f.coeffs()[n] != g.coeffs()[n]) {
            res.checked = n;
            res.mismatch = Mismatch{n, f.coeffs()[n], g.coeffs()[n]};
            return res;
        }
    }
    res.checked = bound;
    return res;
}

} // namespace hcn
