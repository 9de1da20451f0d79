#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hcn/class_numbers.hpp"

namespace hcn {

// One affine formula row: H_{a,p}(ell) = c1*ell + c2 for primes
// ell = L (mod p), where a runs over the +- residue class {a, p-a}.
struct FormulaRow {
    long a_class; // 0 .. (p-1)/2
    long L_class; // 1 .. p-1
    Rational c1;
    Rational c2;
};

struct ConjectureFailure {
    long ell;
    Rational expected;
    Rational got;
};

// Per-row ledger: every prime ell = L (mod p) up to the bound, compared by
// exact rational equality against c1*ell + c2 (both residue representatives
// of the a-class are evaluated).
struct ConjectureReport {
    long p = 0;
    long a_class = 0;
    long L_class = 0;
    Rational c1;
    Rational c2;
    long primes_checked = 0;
    std::vector<ConjectureFailure> failures;
    bool passed() const { return failures.empty(); }
};

struct ConjectureRun {
    long p = 0;
    long max_prime = 0;
    std::vector<ConjectureReport> reports;
    std::vector<std::pair<long, long>> skipped; // (a_class, L_class) with no formula
    bool all_passed() const {
        for (const ConjectureReport& r : reports)
            if (!r.passed()) return false;
        return true;
    }
};

// The tabulated value for (a mod p, ell mod p), or nullopt when the tables
// give no formula (including ell = 0 (mod p)). p must be 3, 5 or 7.
std::optional<Rational> conjecture_value(long a, long p, long ell);

std::span<const FormulaRow> formula_rows(long p);

// Checks every tabulated residue pair against exact class sums for all
// primes up to max_prime. Needs the table out to 4*max_prime.
ConjectureRun check_conjectures(const ClassNumberTable& t, long p, long max_prime);

// Fits H_{a,p}(ell) = c1*ell + c2 through the first two primes = L (mod p)
// and reports whether every remaining sample satisfies the fit exactly.
// Exploratory: makes no claim about pairs the tables omit.
struct ScanResult {
    long a = 0;
    long p = 0;
    long L = 0;
    long primes_used = 0;
    Rational c1;
    Rational c2;
    bool affine = false;
    std::optional<long> first_break;
};

ScanResult empirical_scan(const ClassNumberTable& t, long a, long p, long L, long max_prime);

std::vector<long> primes_upto(long n);

} // namespace hcn
