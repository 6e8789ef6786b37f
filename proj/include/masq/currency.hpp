// Fixed-point currency with 4 fractional digits.
//
// All wealth, token costs and MEV values in the round engine are held as
// int64 multiples of 0.0001 so that runs are reproducible byte-for-byte
// across platforms. The analysis module works in double instead (its
// quantities grow geometrically past any fixed-point range).
#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace masq {

using Money = std::int64_t;  // 1 unit == 0.0001 currency

constexpr Money kMoneyScale = 10'000;

constexpr Money money_from_int(std::int64_t units) { return units * kMoneyScale; }

inline Money money_from_double(double v) {
    return static_cast<Money>(std::llround(v * static_cast<double>(kMoneyScale)));
}

inline double money_to_double(Money m) {
    return static_cast<double>(m) / static_cast<double>(kMoneyScale);
}

// Largest k with k*y <= amount (how many tokens `amount` affords).
inline std::int64_t money_div(Money amount, Money y) {
    if (y <= 0) throw std::invalid_argument("money_div: non-positive divisor");
    if (amount < 0) return 0;
    return amount / y;
}

// Canonical text form: minus sign, integer part, '.', exactly four digits.
inline std::string money_to_string(Money m) {
    char buf[40];
    const char* sign = m < 0 ? "-" : "";
    std::uint64_t a = m < 0 ? static_cast<std::uint64_t>(-(m + 1)) + 1 : static_cast<std::uint64_t>(m);
    std::snprintf(buf, sizeof(buf), "%s%llu.%04llu", sign,
                  static_cast<unsigned long long>(a / kMoneyScale),
                  static_cast<unsigned long long>(a % kMoneyScale));
    return buf;
}

// Parses the canonical form (also accepts plain integers and shorter or
// longer fractional parts, truncating beyond four digits).
inline Money money_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("money: empty string");
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '-' || s[i] == '+') { neg = s[i] == '-'; ++i; }
    if (i >= s.size()) throw std::invalid_argument("money: sign only");
    std::int64_t ip = 0;
    bool any = false;
    for (; i < s.size() && s[i] != '.'; ++i) {
        if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("money: bad digit in '" + s + "'");
        ip = ip * 10 + (s[i] - '0');
        any = true;
    }
    std::int64_t fp = 0, scale = kMoneyScale / 10;
    if (i < s.size() && s[i] == '.') {
        ++i;
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("money: bad digit in '" + s + "'");
            if (scale > 0) { fp += (s[i] - '0') * scale; scale /= 10; }
            any = true;
        }
    }
    if (!any) throw std::invalid_argument("money: no digits in '" + s + "'");
    Money v = ip * kMoneyScale + fp;
    return neg ? -v : v;
}

}  // namespace masq
