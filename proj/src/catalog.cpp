#include "hcn/catalog.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <thread>

#include "hcn/errors.hpp"

namespace hcn {

namespace {

long norm_mod(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

long powmod(long base, long exp, long mod) {
    long r = 1 % mod;
    base = norm_mod(base, mod);
    while (exp > 0) {
        if (exp & 1) r = r * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return r;
}

} // namespace

QSeries hurwitz_series(const ClassNumberTable& t, long prec) {
    if (prec - 1 > t.max_n())
        throw PrecisionError("hurwitz_series: table covers n <= " + std::to_string(t.max_n()) +
                             ", need " + std::to_string(prec - 1));
    std::vector<Rational> c(prec);
    for (long n = 0; n < prec; ++n) c[n] = Rational(t.twelve_h(n), 12);
    return QSeries(std::move(c));
}

QSeries theta_series(long a, long modulus, long prec) {
    if (modulus < 1) throw UsageError("theta_series: modulus must be positive");
    std::vector<Rational> c(prec);
    const long r = norm_mod(a, modulus);
    for (long m = r; m * m < prec; m += modulus) c[m * m] += Rational(1);
    for (long m = r - modulus; m * m < prec; m -= modulus) c[m * m] += Rational(1);
    return QSeries(std::move(c));
}

QSeries sigma_series(long prec) {
    std::vector<std::int64_t> s(std::max(prec, 0L), 0);
    for (long d = 1; d < prec; ++d)
        for (long n = d; n < prec; n += d) s[n] += d;
    std::vector<Rational> c(s.size());
    for (long n = 0; n < prec; ++n) c[n] = Rational(s[n]);
    return QSeries(std::move(c));
}

QSeries g_series(long modulus, long r, long prec) {
    if (modulus < 1) throw UsageError("g_series: modulus must be positive");
    const long rr = norm_mod(r, modulus);
    const long rneg = norm_mod(-r, modulus);
    std::vector<std::int64_t> acc(std::max(prec, 0L), 0);
    for (long d = 1; d * (d + 1) < prec; ++d) {
        const long mult = (d % modulus == rr ? 1 : 0) + (d % modulus == rneg ? 1 : 0);
        if (mult == 0) continue;
        for (long dp = d + 1; d * dp < prec; ++dp) acc[d * dp] += mult * d;
    }
    long m0 = rneg == 0 ? modulus : rneg;
    for (long m = m0; m * m < prec; m += modulus) acc[m * m] += m;
    std::vector<Rational> c(acc.size());
    for (long n = 0; n < prec; ++n) c[n] = Rational(acc[n]);
    return QSeries(std::move(c));
}

int legendre_symbol(long n, long p) {
    if (!is_odd_prime(p)) throw UsageError("legendre_symbol: p must be an odd prime");
    const long r = norm_mod(n, p);
    if (r == 0) return 0;
    return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

ResidueWeight character_weight(WeightKind kind, long p) {
    if (!is_odd_prime(p)) throw UsageError("character_weight: p must be an odd prime");
    std::vector<Rational> v(p);
    for (long r = 1; r < p; ++r) {
        const long chi = legendre_symbol(r, p);
        switch (kind) {
            case WeightKind::chi: v[r] = Rational(chi); break;
            case WeightKind::chi_squared: v[r] = Rational(1); break;
            case WeightKind::chi_times_chi_minus_one: v[r] = Rational(chi * (chi - 1)); break;
            case WeightKind::chi_times_one_plus_chi: v[r] = Rational(chi * (1 + chi)); break;
        }
    }
    return ResidueWeight(p, std::move(v));
}

long ec_point_count(long ell) {
    if (!is_prime(ell)) throw UsageError("ec_point_count: ell must be prime");
    long count = 1; // point at infinity
    for (long x = 0; x < ell; ++x) {
        const long x2 = x * x % ell;
        const long x3 = x2 * x % ell;
        const long rhs = norm_mod(x3 - x2 - 2 * x - 1, ell);
        // scan every y, keeping y^2 and x*y reduced mod ell incrementally
        long y2 = 0;
        long xy = 0;
        for (long y = 0; y < ell; ++y) {
            long lhs = y2 + xy;
            if (lhs >= ell) lhs -= ell;
            if (lhs == rhs) ++count;
            y2 += 2 * y + 1;
            while (y2 >= ell) y2 -= ell;
            xy += x;
            if (xy >= ell) xy -= ell;
        }
    }
    return count;
}

long ec_ap(long ell) {
    if (!is_prime(ell)) throw UsageError("ec_ap: ell must be prime");
    if (ell == 7) return 0;
    return ell + 1 - ec_point_count(ell);
}

namespace {

std::map<long, long>& ap_cache() {
    static std::map<long, long> cache;
    return cache;
}

std::mutex& ap_mutex() {
    static std::mutex mu;
    return mu;
}

long cached_ap(long ell) {
    {
        std::lock_guard<std::mutex> lock(ap_mutex());
        auto it = ap_cache().find(ell);
        if (it != ap_cache().end()) return it->second;
    }
    const long ap = ec_ap(ell); // computed outside the lock
    std::lock_guard<std::mutex> lock(ap_mutex());
    return ap_cache().emplace(ell, ap).first->second;
}

// The scans for distinct primes are independent; warm the cache with a
// handful of worker threads before a long sequential fill.
void warm_ap_cache(long prec) {
    std::vector<long> ells;
    for (long ell = 2; ell < prec; ++ell)
        if (is_prime(ell) && ell != 7) ells.push_back(ell);
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()), 8);
    if (workers < 2 || ells.size() < 64) return;
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned t = 0; t < workers; ++t) {
        pool.emplace_back([&ells, &next] {
            for (std::size_t i = next++; i < ells.size(); i = next++) cached_ap(ells[i]);
        });
    }
    for (std::thread& th : pool) th.join();
}

std::int64_t prime_power_coefficient(long ell, int e) {
    if (ell == 7) return 0; // e >= 1
    const std::int64_t ap = cached_ap(ell);
    std::int64_t prev = 1, cur = ap;
    for (int k = 2; k <= e; ++k) {
        const std::int64_t next = ap * cur - ell * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

} // namespace

std::int64_t g7_coefficient(long n) {
    if (n < 0) throw UsageError("g7_coefficient: n must be non-negative");
    if (n == 0) return 0;
    std::int64_t a = 1;
    long m = n;
    for (long d = 2; d * d <= m && a != 0; d == 2 ? d = 3 : d += 2) {
        if (m % d != 0) continue;
        int e = 0;
        while (m % d == 0) {
            m /= d;
            ++e;
        }
        a *= prime_power_coefficient(d, e);
    }
    if (m > 1 && a != 0) a *= prime_power_coefficient(m, 1);
    return a;
}

QSeries g7_series(long prec) {
    warm_ap_cache(prec);
    std::vector<Rational> c(std::max(prec, 0L));
    for (long n = 1; n < prec; ++n) c[n] = Rational(g7_coefficient(n));
    return QSeries(std::move(c));
}

QSeries class_sum_series(const ClassNumberTable& t, long a, long p, long prec) {
    if (!is_odd_prime(p)) throw UsageError("class_sum_series: p must be an odd prime");
    if (prec < 0) throw UsageError("class_sum_series: negative precision");
    const QSeries h = hurwitz_series(t, 4 * prec);
    const QSeries th = theta_series(a, p, 4 * prec);
    const QSeries u4 = u_operator(mul(h, th), 4);
    return twist(u4, character_weight(WeightKind::chi_squared, p));
}

} // namespace hcn
