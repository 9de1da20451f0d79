#pragma once

#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "hcn/rational.hpp"

namespace hcn {

// Arithmetic weight function on residue classes mod m. Generalizes Dirichlet
// characters: any rational-valued function of n mod m, e.g. the Legendre
// symbol chi_p, the trivial character chi_p^2, or products like chi_p*(chi_p-1).
class ResidueWeight {
public:
    ResidueWeight(long modulus, std::vector<Rational> values);

    long modulus() const { return m_; }
    const Rational& at(long n) const { return values_[((n % m_) + m_) % m_]; }
    const std::vector<Rational>& values() const { return values_; }

    static ResidueWeight all_ones(long modulus);

private:
    long m_;
    std::vector<Rational> values_;
};

// Truncated formal power series sum_{n<P} c_n q^n with exact rational
// coefficients. precision() == P means coefficients are known exactly for
// exponents 0..P-1 and unknown beyond; operations propagate precision
// pessimistically (min rule) and never fabricate unknown coefficients.
// Immutable after construction.
class QSeries {
public:
    QSeries() = default;
    explicit QSeries(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {}

    static QSeries zero(long precision);
    static QSeries constant(const Rational& c0, long precision);

    long precision() const { return static_cast<long>(c_.size()); }

    // Reading past the precision is a hard error, never a silent zero.
    const Rational& coeff(long n) const;

    const std::vector<Rational>& coeffs() const { return c_; }

private:
    std::vector<Rational> c_;
};

struct Term {
    Rational scalar;
    const QSeries* series;
};

// Coefficientwise linear combination; result precision is the min over the
// inputs. Empty term list is a usage error.
QSeries combine(std::span<const Term> terms);
QSeries combine(std::initializer_list<Term> terms);

// Cauchy product truncated to min(P_f, P_g).
QSeries mul(const QSeries& f, const QSeries& g);

// U(d): a(n) <- a(nd). Result precision floor(P/d).
QSeries u_operator(const QSeries& f, long d);

// V(d): f(q) -> f(q^d). Result precision min(P*d, precision_cap()).
QSeries v_operator(const QSeries& f, long d);

// f (x) w: multiply the n-th coefficient by w(n mod m).
QSeries twist(const QSeries& f, const ResidueWeight& w);

// S_{N,r}: keep coefficients with exponent = r (mod N), zero the rest.
// r is reduced mod N internally.
QSeries sieve(const QSeries& f, long modulus, long residue);

QSeries operator+(const QSeries& f, const QSeries& g);
QSeries operator-(const QSeries& f, const QSeries& g);
QSeries operator*(const Rational& s, const QSeries& f);

struct Mismatch {
    long exponent;
    Rational lhs;
    Rational rhs;
};

struct CompareResult {
    long checked = 0;
    std::optional<Mismatch> mismatch;
    bool agree() const { return !mismatch.has_value(); }
};

// Compare coefficients 0..bound-1. bound must be >= 1 and within both
// precisions (beyond-precision comparison is an error, never assumed zero).
CompareResult compare_upto(const QSeries& f, const QSeries& g, long bound);

// Upper cap applied to v_operator output precision, so a dilation cannot
// allocate unboundedly. Configurable at runtime.
long precision_cap();
void set_precision_cap(long cap);

} // namespace hcn
