#include "hcn/conjectures.hpp"

#include <algorithm>
#include <array>

#include "hcn/errors.hpp"

namespace hcn {

namespace {

// H_{0,3}(ell): (ell+1)/2 for ell = 1 (mod 3), ell - 1 for ell = 2 (mod 3).
const std::array<FormulaRow, 2> kRows3{{
    {0, 1, Rational(1, 2), Rational(1, 2)},
    {0, 2, Rational(1), Rational(-1)},
}};

// p = 5: full coverage of a-class x prime-class.
const std::array<FormulaRow, 12> kRows5{{
    {0, 1, Rational(1, 2), Rational(1, 2)},   // (ell+1)/2
    {0, 2, Rational(1, 3), Rational(1, 3)},   // (ell+1)/3
    {0, 3, Rational(1, 3), Rational(1, 3)},   // (ell+1)/3
    {0, 4, Rational(1, 2), Rational(-3, 2)},  // (ell-3)/2
    {1, 1, Rational(1, 3), Rational(1, 3)},   // (ell+1)/3
    {1, 2, Rational(1, 3), Rational(1, 3)},   // (ell+1)/3
    {1, 3, Rational(1, 2), Rational(-1, 2)},  // (ell-1)/2
    {1, 4, Rational(5, 12), Rational(5, 12)}, // (5ell+5)/12
    {2, 1, Rational(5, 12), Rational(-7, 12)},// (5ell-7)/12
    {2, 2, Rational(1, 2), Rational(-1, 2)},  // (ell-1)/2
    {2, 3, Rational(1, 3), Rational(1, 3)},   // (ell+1)/3
    {2, 4, Rational(1, 3), Rational(1, 3)},   // (ell+1)/3
}};

// p = 7: only the tabulated pairs; the rest have no published formula.
const std::array<FormulaRow, 7> kRows7{{
    {1, 1, Rational(1, 3), Rational(1, 3)}, // (ell+1)/3
    {1, 3, Rational(1, 4), Rational(1, 4)}, // (ell+1)/4
    {1, 6, Rational(1, 4), Rational(1, 4)}, // (ell+1)/4
    {2, 3, Rational(1, 4), Rational(1, 4)}, // (ell+1)/4
    {2, 5, Rational(1, 4), Rational(1, 4)}, // (ell+1)/4
    {3, 5, Rational(1, 4), Rational(1, 4)}, // (ell+1)/4
    {3, 6, Rational(1, 4), Rational(1, 4)}, // (ell+1)/4
}};

long norm_mod(long x, long m) {
    long r = x % m;
    return r < 0 ? r + m : r;
}

long plus_minus_class(long a, long p) {
    const long r = norm_mod(a, p);
    return r == 0 ? 0 : std::min(r, p - r);
}

const FormulaRow* find_row(long p, long a_class, long L_class) {
    for (const FormulaRow& row : formula_rows(p))
        if (row.a_class == a_class && row.L_class == L_class) return &row;
    return nullptr;
}

} // namespace

std::span<const FormulaRow> formula_rows(long p) {
    switch (p) {
        case 3: return kRows3;
        case 5: return kRows5;
        case 7: return kRows7;
        default: throw UsageError("formula tables exist for p = 3, 5, 7 only");
    }
}

std::optional<Rational> conjecture_value(long a, long p, long ell) {
    formula_rows(p); // validates p
    if (!is_prime(ell)) throw UsageError("conjecture_value: ell must be prime");
    const long L = ell % p;
    if (L == 0) return std::nullopt;
    const FormulaRow* row = find_row(p, plus_minus_class(a, p), L);
    if (row == nullptr) return std::nullopt;
    return row->c1 * Rational(ell) + row->c2;
}

std::vector<long> primes_upto(long n) {
    std::vector<long> primes;
    if (n < 2) return primes;
    std::vector<bool> composite(n + 1, false);
    for (long i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        primes.push_back(i);
        for (long j = i * i; j >= 0 && j <= n; j += i) composite[j] = true;
    }
    return primes;
}

ConjectureRun check_conjectures(const ClassNumberTable& t, long p, long max_prime) {
    const std::span<const FormulaRow> rows = formula_rows(p);
    if (max_prime < 2) throw UsageError("check_conjectures: max_prime must be >= 2");
    if (4 * max_prime > t.max_n())
        throw PrecisionError("check_conjectures: table too short for max_prime = " +
                             std::to_string(max_prime));
    const std::vector<long> primes = primes_upto(max_prime);

    ConjectureRun run;
    run.p = p;
    run.max_prime = max_prime;
    for (long a = 0; a <= (p - 1) / 2; ++a) {
        for (long L = 1; L < p; ++L) {
            const FormulaRow* row = find_row(p, a, L);
            if (row == nullptr) {
                run.skipped.emplace_back(a, L);
                continue;
            }
            ConjectureReport rep;
            rep.p = p;
            rep.a_class = a;
            rep.L_class = L;
            rep.c1 = row->c1;
            rep.c2 = row->c2;
            for (long ell : primes) {
                if (ell % p != L) continue;
                const Rational expected = row->c1 * Rational(ell) + row->c2;
                ++rep.primes_checked;
                for (long rep_a : {a, p - a}) {
                    const Rational got = class_number_sum(t, rep_a, p, ell);
                    if (got != expected) {
                        rep.failures.push_back({ell, expected, got});
                        break;
                    }
                    if (a == 0) break; // single representative
                }
            }
            run.reports.push_back(std::move(rep));
        }
    }
    return run;
}

ScanResult empirical_scan(const ClassNumberTable& t, long a, long p, long L, long max_prime) {
    if (!is_odd_prime(p)) throw UsageError("empirical_scan: p must be an odd prime");
    const long Lr = norm_mod(L, p);
    std::vector<long> sample;
    for (long ell : primes_upto(max_prime))
        if (ell % p == Lr && ell != p) sample.push_back(ell);
    if (sample.size() < 3)
        throw UsageError("empirical_scan: need at least 3 primes = L (mod p) below the bound");

    ScanResult res;
    res.a = norm_mod(a, p);
    res.p = p;
    res.L = Lr;
    res.primes_used = static_cast<long>(sample.size());
    const Rational v0 = class_number_sum(t, a, p, sample[0]);
    const Rational v1 = class_number_sum(t, a, p, sample[1]);
    res.c1 = (v1 - v0) / Rational(sample[1] - sample[0]);
    res.c2 = v0 - res.c1 * Rational(sample[0]);
    res.affine = true;
    for (std::size_t i = 2; i < sample.size(); ++i) {
        const Rational got = class_number_sum(t, a, p, sample[i]);
        if (got != res.c1 * Rational(sample[i]) + res.c2) {
            res.affine = false;
            res.first_break = sample[i];
            break;
        }
    }
    return res;
}

} // namespace hcn
