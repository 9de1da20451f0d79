#include <doctest.h>

#include "hcn/conjectures.hpp"
#include "oracles.hpp"

using namespace hcn;

namespace {

const ClassNumberTable& table() {
    static const ClassNumberTable t = ClassNumberTable::build(12000);
    return t;
}

} // namespace

TEST_CASE("conjecture_value") {
    SUBCASE("tabulated rows") {
        CHECK(conjecture_value(0, 5, 11) == Rational(6));   // (11+1)/2
        CHECK(conjecture_value(1, 7, 29) == Rational(10));  // (29+1)/3
        CHECK(conjecture_value(1, 5, 19) == Rational(25, 3)); // (5*19+5)/12
        CHECK(conjecture_value(2, 5, 11) == Rational(4));   // (5*11-7)/12
        CHECK(conjecture_value(0, 3, 2) == Rational(1));    // ell - 1
        CHECK(conjecture_value(0, 5, 19) == Rational(8));   // (19-3)/2
    }
    SUBCASE("pairs without a formula") {
        CHECK_FALSE(conjecture_value(0, 7, 29).has_value());  // no a=0 row for p=7
        CHECK_FALSE(conjecture_value(1, 7, 2).has_value());   // L=2 not tabulated
        CHECK_FALSE(conjecture_value(1, 3, 7).has_value());   // p=3 has a=0 only
        CHECK_FALSE(conjecture_value(0, 5, 5).has_value());   // ell = 0 (mod p)
    }
    SUBCASE("a enters through its +- class") {
        CHECK(conjecture_value(4, 5, 11) == conjecture_value(1, 5, 11));
        CHECK(conjecture_value(-2, 7, 17) == conjecture_value(2, 7, 17));
        for (long p : {3L, 5L, 7L})
            for (long a = 0; a < p; ++a)
                CHECK(conjecture_value(a, p, 13) == conjecture_value(-a, p, 13));
    }
    SUBCASE("domain errors") {
        CHECK_THROWS_AS(conjecture_value(0, 11, 13), UsageError);
        CHECK_THROWS_AS(conjecture_value(0, 5, 15), UsageError);
    }
}

TEST_CASE("formula rows match exact class sums for small primes") {
    for (long p : {3L, 5L, 7L}) {
        for (long ell : primes_upto(300)) {
            if (ell == p) continue;
            for (long a = 0; a < p; ++a) {
                const auto v = conjecture_value(a, p, ell);
                if (v) CHECK(class_number_sum(table(), a, p, ell) == *v);
            }
        }
    }
}

TEST_CASE("check_conjectures") {
    SUBCASE("p = 5 covers every residue pair and passes") {
        const ConjectureRun run = check_conjectures(table(), 5, 3000);
        CHECK(run.reports.size() == 12);
        CHECK(run.skipped.empty());
        CHECK(run.all_passed());
        for (const ConjectureReport& rep : run.reports) CHECK(rep.primes_checked > 0);
    }
    SUBCASE("p = 7 checks the seven tabulated rows and skips the rest") {
        const ConjectureRun run = check_conjectures(table(), 7, 3000);
        CHECK(run.reports.size() == 7);
        CHECK(run.skipped.size() == 17); // 4 a-classes x 6 prime classes minus 7 rows
        CHECK(run.all_passed());
    }
    SUBCASE("p = 3") {
        const ConjectureRun run = check_conjectures(table(), 3, 3000);
        CHECK(run.reports.size() == 2);
        CHECK(run.skipped.size() == 2); // (+-1, 1) and (+-1, 2)
        CHECK(run.all_passed());
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(check_conjectures(table(), 11, 100), UsageError);
        CHECK_THROWS_AS(check_conjectures(table(), 5, 100000), PrecisionError);
    }
}

TEST_CASE("empirical_scan") {
    SUBCASE("recovers the known p = 5 rows") {
        const ScanResult r1 = empirical_scan(table(), 0, 5, 1, 3000);
        CHECK(r1.affine);
        CHECK(r1.c1 == Rational(1, 2));
        CHECK(r1.c2 == Rational(1, 2));
        const ScanResult r2 = empirical_scan(table(), 1, 5, 4, 3000);
        CHECK(r2.affine);
        CHECK(r2.c1 == Rational(5, 12));
        CHECK(r2.c2 == Rational(5, 12));
    }
    SUBCASE("an uncovered p = 7 pair is not affine") {
        const ScanResult r = empirical_scan(table(), 0, 7, 2, 3000);
        CHECK_FALSE(r.affine);
        REQUIRE(r.first_break.has_value());
        CHECK(*r.first_break == 37);
    }
    SUBCASE("needs at least three sample primes") {
        CHECK_THROWS_AS(empirical_scan(table(), 0, 5, 1, 12), UsageError);
    }
}
