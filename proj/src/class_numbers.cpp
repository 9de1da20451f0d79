#include "hcn/class_numbers.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <system_error>

#include <unistd.h>

#include "hcn/errors.hpp"

namespace hcn {

namespace {

// 12 * multiplicity * weight for a reduced triple (a, b, c).
std::int64_t twelfths(long a, long b, long c) {
    if (a == b && b == c) return 4;  // x^2 + xy + y^2 class, weight 1/3
    if (b == 0 && a == c) return 6;  // x^2 + y^2 class, weight 1/2
    if (b == a || b == 0 || a == c) return 12;
    return 24; // 0 < b < a < c: the form and its mirror count separately
}

} // namespace

bool is_prime(long n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    if (n % 3 == 0) return n == 3;
    for (long d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

bool is_odd_prime(long n) { return n != 2 && is_prime(n); }

std::vector<ReducedForm> reduced_forms(long n) {
    if (n <= 0) throw UsageError("reduced_forms: n must be positive");
    const long res = n % 4;
    if (res == 1 || res == 2)
        throw UsageError("reduced_forms: no forms of discriminant -n for n = 1,2 (mod 4)");
    std::vector<ReducedForm> forms;
    for (long b = (n % 2 == 0) ? 0 : 1; 3 * b * b <= n; b += 2) {
        const long m = (n + b * b) / 4;
        for (long a = std::max(b, 1L); a * a <= m; ++a) {
            if (m % a != 0) continue;
            const long c = m / a;
            ReducedForm f;
            f.a = a;
            f.b = b;
            f.c = c;
            f.multiplicity = (0 < b && b < a && a < c) ? 2 : 1;
            if (a == b && b == c)
                f.weight = Rational(1, 3);
            else if (b == 0 && a == c)
                f.weight = Rational(1, 2);
            else
                f.weight = Rational(1);
            forms.push_back(std::move(f));
        }
    }
    return forms;
}

Rational hurwitz(long n) {
    if (n < 0) throw UsageError("hurwitz: n must be non-negative");
    if (n == 0) return Rational(-1, 12);
    if (n % 4 == 1 || n % 4 == 2) return Rational(0);
    Rational h;
    for (const ReducedForm& f : reduced_forms(n))
        h += Rational(f.multiplicity) * f.weight;
    return h;
}

ClassNumberTable ClassNumberTable::build(long max_n) {
    if (max_n < 0) throw UsageError("ClassNumberTable: max_n must be non-negative");
    ClassNumberTable t;
    t.max_ = max_n;
    t.t_.assign(max_n + 1, 0);
    t.t_[0] = -1; // 12 * H(0) = -1
    // Walk every reduced triple 0 <= b <= a <= c with 4ac - b^2 <= max_n
    // once; O(max_n^{3/2}) total, no per-n divisor search.
    for (long a = 1; 3 * a * a <= max_n; ++a) {
        for (long b = 0; b <= a; ++b) {
            const long bb = b * b;
            for (long c = a; 4 * a * c - bb <= max_n; ++c)
                t.t_[4 * a * c - bb] += twelfths(a, b, c);
        }
    }
    return t;
}

std::int64_t ClassNumberTable::twelve_h(long n) const {
    if (n < 0) throw UsageError("ClassNumberTable: n must be non-negative");
    if (n > max_)
        throw PrecisionError("ClassNumberTable: H(" + std::to_string(n) +
                             ") beyond table max " + std::to_string(max_));
    return t_[n];
}

Rational ClassNumberTable::hurwitz(long n) const { return Rational(twelve_h(n), 12); }

void ClassNumberTable::save(const std::string& path) const {
    const std::string tmp = path + ".tmp." + std::to_string(::getpid());
    {
        std::ofstream out(tmp, std::ios::binary);
        if (!out) throw std::runtime_error("cannot write " + tmp);
        out << "HURWITZ-12H v1 max=" << max_ << '\n';
        for (std::int64_t v : t_) out << v << '\n';
        out.flush();
        if (!out) throw std::runtime_error("write failed: " + tmp);
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot replace " + path + ": " + ec.message());
    }
}

namespace {

std::int64_t parse_entry(const std::string& line, long lineno) {
    std::int64_t v = 0;
    const char* first = line.data();
    const char* last = line.data() + line.size();
    auto [ptr, err] = std::from_chars(first, last, v);
    if (err != std::errc() || ptr != last || line.empty())
        throw ParseError("class-number cache line " + std::to_string(lineno) +
                         ": not an integer: \"" + line + "\"");
    return v;
}

} // namespace

ClassNumberTable ClassNumberTable::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open class-number cache " + path);
    std::string line;
    if (!std::getline(in, line))
        throw ParseError("class-number cache line 1: empty file");
    const std::string magic = "HURWITZ-12H v1 max=";
    if (line.rfind(magic, 0) != 0)
        throw ParseError("class-number cache line 1: bad magic \"" + line + "\"");
    const long max_n = parse_entry(line.substr(magic.size()), 1);
    if (max_n < 0) throw ParseError("class-number cache line 1: negative max");

    ClassNumberTable t;
    t.max_ = max_n;
    t.t_.reserve(max_n + 1);
    for (long n = 0; n <= max_n; ++n) {
        if (!std::getline(in, line))
            throw ParseError("class-number cache line " + std::to_string(n + 2) +
                             ": unexpected end of file");
        t.t_.push_back(parse_entry(line, n + 2));
    }
    if (std::getline(in, line) && !line.empty())
        throw ParseError("class-number cache line " + std::to_string(max_n + 3) +
                         ": trailing data");
    return t;
}

ClassNumberTable ensure_table(long needed_max,
                              const std::optional<std::string>& cache_path,
                              bool no_cache) {
    if (needed_max < 0) needed_max = 0;
    if (!no_cache && cache_path && std::filesystem::exists(*cache_path)) {
        ClassNumberTable t = ClassNumberTable::load(*cache_path);
        if (t.max_n() >= needed_max) return t;
    }
    ClassNumberTable t = ClassNumberTable::build(needed_max);
    if (!no_cache && cache_path) t.save(*cache_path);
    return t;
}

Rational class_number_sum(const ClassNumberTable& t, long a, long p, long n) {
    if (!is_odd_prime(p)) throw UsageError("class_number_sum: p must be an odd prime");
    if (n < 1) throw UsageError("class_number_sum: n must be positive");
    if (4 * n > t.max_n())
        throw PrecisionError("class_number_sum: table too short for n = " + std::to_string(n));
    const long r = ((a % p) + p) % p;
    std::int64_t acc = 0; // in twelfths
    for (long m = r; m * m <= 4 * n; m += p) acc += t.twelve_h(4 * n - m * m);
    for (long m = r - p; m * m <= 4 * n; m -= p) acc += t.twelve_h(4 * n - m * m);
    return Rational(acc, 12);
}

Rational eichler_sum(const ClassNumberTable& t, long ell) {
    if (!is_odd_prime(ell)) throw UsageError("eichler_sum: ell must be an odd prime");
    if (4 * ell > t.max_n())
        throw PrecisionError("eichler_sum: table too short for ell = " + std::to_string(ell));
    std::int64_t acc = t.twelve_h(4 * ell);
    for (long m = 1; m * m <= 4 * ell; ++m) acc += 2 * t.twelve_h(4 * ell - m * m);
    return Rational(acc, 12);
}

} // namespace hcn
