#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hcn/rational.hpp"

namespace hcn {

bool is_prime(long n);
bool is_odd_prime(long n);

// One reduced positive definite binary quadratic form a x^2 + b xy + c y^2
// of discriminant b^2 - 4ac = -n, in the convention 0 <= b <= a <= c.
// multiplicity is 2 exactly when 0 < b < a < c (the form and its +-b mirror
// are inequivalent); weight is 1/3 for (a,a,a), 1/2 for (a,0,a), else 1.
struct ReducedForm {
    long a;
    long b;
    long c;
    int multiplicity;
    Rational weight;
};

// All reduced forms of discriminant -n, ordered by b ascending then a
// ascending. n must be positive with n = 0 or 3 (mod 4); other residues
// admit no forms and are rejected.
std::vector<ReducedForm> reduced_forms(long n);

// Hurwitz class number H(n): -1/12 for n = 0, zero for n = 1,2 (mod 4),
// otherwise the weighted count of reduced forms. Table-free.
Rational hurwitz(long n);

// Memoized table of 12*H(n) for 0 <= n <= max_n (12*H(n) is always an
// integer). Immutable once built; safe to share across threads.
class ClassNumberTable {
public:
    static ClassNumberTable build(long max_n);

    // Text cache format: "HURWITZ-12H v1 max=<N>" then one integer per line,
    // ASCII, LF endings, no trailing whitespace.
    static ClassNumberTable load(const std::string& path);
    void save(const std::string& path) const;

    long max_n() const { return max_; }
    std::int64_t twelve_h(long n) const;
    Rational hurwitz(long n) const;
    const std::vector<std::int64_t>& entries() const { return t_; }

private:
    long max_ = -1;
    std::vector<std::int64_t> t_;
};

// Returns a table covering 0..needed_max, loading/refreshing the cache file
// when one is given. Cache writes are atomic (write temp, rename).
ClassNumberTable ensure_table(long needed_max,
                              const std::optional<std::string>& cache_path,
                              bool no_cache = false);

// H_{a,p}(n) = sum of H(4n - m^2) over all integers m = a (mod p) with
// m^2 <= 4n; the boundary m^2 = 4n contributes H(0) = -1/12.
Rational class_number_sum(const ClassNumberTable& t, long a, long p, long n);

// sum_{m^2 <= 4 ell} H(4 ell - m^2) for an odd prime ell; equals 2 ell.
Rational eichler_sum(const ClassNumberTable& t, long ell);

} // namespace hcn
