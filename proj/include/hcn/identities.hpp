#pragma once

#include <optional>
#include <span>
#include <string>

#include "hcn/catalog.hpp"

namespace hcn {

// Outcome of comparing two series coefficientwise up to a bound.
// certified is the mechanical check result: no mismatch and at least
// bound_used coefficients compared. sturm_backed records whether the bound
// is large enough that agreement proves equality of the underlying weight-2
// forms (plain output labels such reports "certified", the rest
// "extended-verified").
struct IdentityReport {
    std::string identity_id;
    long bound_used = 0;
    bool certified = false;
    std::optional<Mismatch> first_mismatch;
    long coefficients_checked = 0;
    bool sturm_backed = false;
};

// Number of initial coefficients whose agreement forces equality of two
// weight-2 forms at the relevant level: ceil(p(p^2-1)/6) in general,
// ceil(p(p+1)/6) when a = 0 (mod p).
long sturm_bound(long p, bool a_is_zero);

// Identity catalog. Full identities compare the class-sum series against a
// closed combination of divisor-sum series (and g7 for p = 7); restricted
// identities compare only on exponents in one residue class mod 7, where
// the cusp-form contribution vanishes.
struct IdentityCase {
    const char* id;
    long a;
    long p;
    long restricted_residue; // -1 for a full identity
};

std::span<const IdentityCase> identity_cases();
const IdentityCase* find_identity(const std::string& id);

// Extended-check default for identities the Sturm argument does not cover.
inline constexpr long kDefaultExtendedBound = 2000;

// The weight-2 combination: class-sum series plus the sieved G-series over
// residues b != +-a (mod p). Depends on a only through its +- class.
QSeries modular_combination(const ClassNumberTable& t, long a, long p, long prec);

// Right side of a cataloged identity as an exact linear combination of
// catalog series.
QSeries identity_rhs(const std::string& id, long prec);

IdentityReport verify_identity(const ClassNumberTable& t, const std::string& id,
                               std::optional<long> bound = std::nullopt);

// The classical identity (H theta_{0,1})|U(4) = 2 D - G_{1,0} - 1/12,
// checked coefficientwise up to prec.
IdentityReport verify_dmz(const ClassNumberTable& t, long prec);

// Consistency of the two computation routes for H_{a,p}(n): the operator
// route (class_sum_series) against the direct double sum (class_number_sum),
// for every n < prec.
IdentityReport verify_class_sum_consistency(const ClassNumberTable& t, long a, long p,
                                            long prec);

} // namespace hcn
