#pragma once

#include <string>
#include <vector>

#include "hcn/conjectures.hpp"
#include "hcn/identities.hpp"

namespace hcn {

enum class Format { plain, json, csv };

Format parse_format(const std::string& name);

// All emitters are deterministic and byte-stable; rationals render as
// "num/den" with integers written without the "/1".

std::string emit_rational(const Rational& r, Format fmt);
std::string emit_series(const QSeries& s, Format fmt);
std::string emit_table(const ClassNumberTable& t, long upto, Format fmt);
std::string emit_report(const IdentityReport& rep, Format fmt);
std::string emit_reports(const std::vector<IdentityReport>& reps, Format fmt);
std::string emit_conjectures(const ConjectureRun& run, Format fmt);
std::string emit_scan(const ScanResult& res, Format fmt);

struct EichlerLine {
    long ell;
    Rational sum;
};

std::string emit_eichler(const std::vector<EichlerLine>& lines, Format fmt);

} // namespace hcn
