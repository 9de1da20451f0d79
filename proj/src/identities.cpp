#include "hcn/identities.hpp"

#include <algorithm>
#include <array>

#include "hcn/errors.hpp"

namespace hcn {

namespace {

long norm_mod(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

constexpr std::array<IdentityCase, 11> kCases{{
    {"p3", 0, 3, -1},
    {"p5_a0", 0, 5, -1},
    {"p5_a1", 1, 5, -1},
    {"p7_a0", 0, 7, -1},
    {"p7_a1_r1", 1, 7, 1},
    {"p7_a1_r3", 1, 7, 3},
    {"p7_a1_r6", 1, 7, 6},
    {"p7_a2_r3", 2, 7, 3},
    {"p7_a2_r5", 2, 7, 5},
    {"p7_a3_r5", 3, 7, 5},
    {"p7_a3_r6", 3, 7, 6},
}};

} // namespace

std::span<const IdentityCase> identity_cases() { return kCases; }

const IdentityCase* find_identity(const std::string& id) {
    for (const IdentityCase& c : kCases)
        if (id == c.id) return &c;
    return nullptr;
}

long sturm_bound(long p, bool a_is_zero) {
    if (!is_odd_prime(p)) throw UsageError("sturm_bound: p must be an odd prime");
    const long num = a_is_zero ? p * (p + 1) : p * (p * p - 1);
    return (num + 5) / 6;
}

QSeries modular_combination(const ClassNumberTable& t, long a, long p, long prec) {
    if (!is_odd_prime(p)) throw UsageError("modular_combination: p must be an odd prime");
    // The combination depends on a only through its +- class mod p (the b = 0
    // square term is sensitive to the representative), so normalize first.
    long ar = norm_mod(a, p);
    if (ar > p - ar) ar = p - ar;
    QSeries lhs = class_sum_series(t, ar, p, prec);
    for (long b = 0; b < p; ++b) {
        if (b == ar || b == norm_mod(-ar, p)) continue;
        lhs = lhs + sieve(g_series(p, ar + b, prec), p, ar * ar - b * b);
    }
    return lhs;
}

QSeries identity_rhs(const std::string& id, long prec) {
    const IdentityCase* c = find_identity(id);
    if (c == nullptr) throw UsageError("unknown identity id: " + id);
    const QSeries d = sigma_series(prec);

    if (id == "p3") {
        // -2 G_{3,1}|S_{3,2} + D (x) chi3^2 - 1/4 D (x) chi3(1 + chi3)
        const QSeries g31 = sieve(g_series(3, 1, prec), 3, 2);
        const QSeries d_triv = twist(d, character_weight(WeightKind::chi_squared, 3));
        const QSeries d_plus = twist(d, character_weight(WeightKind::chi_times_one_plus_chi, 3));
        return combine({Term{Rational(-2), &g31}, Term{Rational(1), &d_triv},
                        Term{Rational(-1, 4), &d_plus}});
    }
    if (id == "p5_a0") {
        // 1/2 D (x) chi5^2 - 1/12 D (x) chi5(chi5 - 1) - 2 G_{5,1}|S_{5,4} - 2 G_{5,2}|S_{5,1}
        const QSeries d_triv = twist(d, character_weight(WeightKind::chi_squared, 5));
        const QSeries d_minus = twist(d, character_weight(WeightKind::chi_times_chi_minus_one, 5));
        const QSeries g1 = sieve(g_series(5, 1, prec), 5, 4);
        const QSeries g2 = sieve(g_series(5, 2, prec), 5, 1);
        return combine({Term{Rational(1, 2), &d_triv}, Term{Rational(-1, 12), &d_minus},
                        Term{Rational(-2), &g1}, Term{Rational(-2), &g2}});
    }
    if (id == "p5_a1") {
        // 1/3 D (x) chi5^2 + (1/6 D - G_{5,1} - G_{5,2})|S_{5,3}
        //                  + (1/12 D - 1/2 G_{5,2} - 1/2 G_{5,3})|S_{5,4}
        const QSeries d_triv = twist(d, character_weight(WeightKind::chi_squared, 5));
        const QSeries g1 = g_series(5, 1, prec);
        const QSeries g2 = g_series(5, 2, prec);
        const QSeries g3 = g_series(5, 3, prec);
        const QSeries s3 = sieve(combine({Term{Rational(1, 6), &d}, Term{Rational(-1), &g1},
                                          Term{Rational(-1), &g2}}),
                                 5, 3);
        const QSeries s4 = sieve(combine({Term{Rational(1, 12), &d}, Term{Rational(-1, 2), &g2},
                                          Term{Rational(-1, 2), &g3}}),
                                 5, 4);
        return combine({Term{Rational(1, 3), &d_triv}, Term{Rational(1), &s3},
                        Term{Rational(1), &s4}});
    }
    if (id == "p7_a0") {
        // 1/4 D (x) chi7^2 + 1/24 D (x) chi7(chi7 - 1)
        //   - 2 G_{7,2}|S_{7,3} - 2 G_{7,4}|S_{7,5} - 2 G_{7,1}|S_{7,6} + 1/4 g7
        const QSeries d_triv = twist(d, character_weight(WeightKind::chi_squared, 7));
        const QSeries d_minus = twist(d, character_weight(WeightKind::chi_times_chi_minus_one, 7));
        const QSeries g2 = sieve(g_series(7, 2, prec), 7, 3);
        const QSeries g4 = sieve(g_series(7, 4, prec), 7, -2);
        const QSeries g1 = sieve(g_series(7, 1, prec), 7, -1);
        const QSeries g7 = g7_series(prec);
        return combine({Term{Rational(1, 4), &d_triv}, Term{Rational(1, 24), &d_minus},
                        Term{Rational(-2), &g2}, Term{Rational(-2), &g4},
                        Term{Rational(-2), &g1}, Term{Rational(1, 4), &g7}});
    }

    // Restricted p = 7 identities: 1/4 D plus, on the r = 1 class for a = 1,
    // the extra 1/12 D - G_{7,2} - G_{7,3}; everything sieved to S_{7,r}.
    QSeries body = Rational(1, 4) * d;
    if (id == "p7_a1_r1") {
        const QSeries g2 = g_series(7, 2, prec);
        const QSeries g3 = g_series(7, 3, prec);
        body = combine({Term{Rational(1, 4), &d}, Term{Rational(1, 12), &d},
                        Term{Rational(-1), &g2}, Term{Rational(-1), &g3}});
    }
    return sieve(body, 7, c->restricted_residue);
}

namespace {

IdentityReport report_from(const std::string& id, long bound, const CompareResult& res,
                           bool sturm_backed) {
    IdentityReport rep;
    rep.identity_id = id;
    rep.bound_used = bound;
    rep.first_mismatch = res.mismatch;
    rep.coefficients_checked = res.checked;
    rep.certified = res.agree() && res.checked >= bound;
    rep.sturm_backed = sturm_backed && rep.certified;
    return rep;
}

} // namespace

IdentityReport verify_identity(const ClassNumberTable& t, const std::string& id,
                               std::optional<long> bound) {
    const IdentityCase* c = find_identity(id);
    if (c == nullptr) throw UsageError("unknown identity id: " + id);
    const bool restricted = c->restricted_residue >= 0;
    const long b = bound.value_or(restricted ? kDefaultExtendedBound : sturm_bound(c->p, false));
    if (b < 1) throw UsageError("verify_identity: bound must be positive");

    QSeries lhs = class_sum_series(t, c->a, c->p, b);
    if (restricted) lhs = sieve(lhs, c->p, c->restricted_residue);
    const QSeries rhs = identity_rhs(id, b);
    const CompareResult res = compare_upto(lhs, rhs, b);
    return report_from(id, b, res, !restricted && b >= sturm_bound(c->p, false));
}

IdentityReport verify_dmz(const ClassNumberTable& t, long prec) {
    if (prec < 1) throw UsageError("verify_dmz: precision must be positive");
    const QSeries lhs =
        u_operator(mul(hurwitz_series(t, 4 * prec), theta_series(0, 1, 4 * prec)), 4);
    const QSeries d = sigma_series(prec);
    const QSeries g = g_series(1, 0, prec);
    const QSeries one = QSeries::constant(Rational(1), prec);
    const QSeries rhs = combine(
        {Term{Rational(2), &d}, Term{Rational(-1), &g}, Term{Rational(-1, 12), &one}});
    return report_from("dmz", prec, compare_upto(lhs, rhs, prec), false);
}

IdentityReport verify_class_sum_consistency(const ClassNumberTable& t, long a, long p,
                                            long prec) {
    if (!is_odd_prime(p)) throw UsageError("verify_class_sum_consistency: p must be an odd prime");
    if (prec < 1) throw UsageError("verify_class_sum_consistency: precision must be positive");
    const QSeries lhs = class_sum_series(t, a, p, prec);
    std::vector<Rational> direct(prec);
    for (long n = 1; n < prec; ++n)
        if (n % p != 0) direct[n] = class_number_sum(t, a, p, n);
    const QSeries rhs = QSeries(std::move(direct));
    const std::string id =
        "classsums_a" + std::to_string(norm_mod(a, p)) + "_p" + std::to_string(p);
    return report_from(id, prec, compare_upto(lhs, rhs, prec), false);
}

} // namespace hcn
