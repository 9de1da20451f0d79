#pragma once

#include <cstdint>

#include "hcn/class_numbers.hpp"
#include "hcn/qseries.hpp"

namespace hcn {

// H(q) = sum_{n>=0} H(n) q^n from a class-number table.
QSeries hurwitz_series(const ClassNumberTable& t, long prec);

// theta_{a,N} = sum over integers m = a (mod N) of q^{m^2}.
QSeries theta_series(long a, long modulus, long prec);

// D(q) = sum_{n>=1} sigma(n) q^n, sigma(n) the sum of divisors.
QSeries sigma_series(long prec);

// G_{N,r}: divisor-sum generating function with residue condition,
//   sum_{n>=1} ( sum_{d d' = n, d' > d, d = +-r (mod N)} d ) q^n
//     + sum_{m>=1, m = -r (mod N)} m q^{m^2}.
// The +-r condition counts d twice when r = -r (mod N); the square term
// depends only on r mod N.
QSeries g_series(long modulus, long r, long prec);

// Legendre symbol (n|p) in {-1, 0, 1}, p an odd prime.
int legendre_symbol(long n, long p);

enum class WeightKind {
    chi,                     // Legendre symbol mod p
    chi_squared,             // trivial character mod p (0 at multiples of p)
    chi_times_chi_minus_one, // chi*(chi-1): 2 on non-residues, else 0
    chi_times_one_plus_chi,  // chi*(1+chi): 2 on residues, else 0
};

ResidueWeight character_weight(WeightKind kind, long p);

// Point count of y^2 + xy = x^3 - x^2 - 2x - 1 over F_ell (projective,
// i.e. including the point at infinity), by exhaustive (x, y) scan.
long ec_point_count(long ell);

// Trace of Frobenius a_ell for the same curve (conductor 49, CM by
// Q(sqrt(-7))); a_7 = 0 since 7^2 divides the conductor.
long ec_ap(long ell);

// n-th coefficient of the weight-2 newform g7 of level 49 attached to the
// curve above: a(1) = 1, prime values from point counting, prime powers via
// a(l^k) = a(l) a(l^{k-1}) - l a(l^{k-2}), extended multiplicatively.
std::int64_t g7_coefficient(long n);

QSeries g7_series(long prec);

// Generating function of the class-number sums H_{a,p}(n) restricted to
// p not dividing n, computed along the operator route:
//   (H(q) theta_{a,p}) | U(4) twisted by the trivial character mod p.
// Needs the table out to 4*prec - 1.
QSeries class_sum_series(const ClassNumberTable& t, long a, long p, long prec);

} // namespace hcn
