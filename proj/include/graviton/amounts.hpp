#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

#include "graviton/errors.hpp"

namespace graviton {

// All token quantities are unsigned integers in minimal units with 6 fixed
// decimal places. Arithmetic is exact; overflow throws, never wraps.
using Amount = std::uint64_t;
using u128 = unsigned __int128;

inline constexpr Amount AMOUNT_ONE = 1'000'000; // 1.000000 token
inline constexpr int AMOUNT_DECIMALS = 6;

// Basis points denominator, shared by fees, reward splits and vote rules.
inline constexpr std::uint32_t BPS_DENOM = 10'000;

using Tick = std::int64_t;

inline Amount checked_add(Amount a, Amount b) {
    Amount r;
    check(!__builtin_add_overflow(a, b, &r), Errc::Overflow, "amount addition overflow");
    return r;
}

inline Amount checked_sub(Amount a, Amount b) {
    check(a >= b, Errc::InsufficientBalance, "amount subtraction underflow");
    return a - b;
}

inline u128 checked_add_u128(u128 a, u128 b) {
    u128 r = a + b;
    check(r >= a, Errc::Overflow, "u128 addition overflow");
    return r;
}

inline u128 checked_mul_u128(u128 a, u128 b) {
    if (a == 0 || b == 0) return 0;
    u128 r = a * b;
    check(r / a == b, Errc::Overflow, "u128 multiplication overflow");
    return r;
}

inline Amount narrow_to_amount(u128 v) {
    check(v <= std::numeric_limits<Amount>::max(), Errc::Overflow, "value exceeds 64-bit amount");
    return static_cast<Amount>(v);
}

// floor(a * b / d); the u64*u64 product always fits in 128 bits.
inline Amount mul_div_floor(Amount a, Amount b, Amount d) {
    check(d != 0, Errc::Overflow, "division by zero");
    return narrow_to_amount(u128(a) * u128(b) / d);
}

// ceil(a * b / d)
inline Amount mul_div_ceil(Amount a, Amount b, Amount d) {
    check(d != 0, Errc::Overflow, "division by zero");
    u128 p = u128(a) * u128(b);
    return narrow_to_amount(p / d + (p % d != 0 ? 1 : 0));
}

inline u128 ceil_div_u128(u128 a, u128 b) {
    check(b != 0, Errc::Overflow, "division by zero");
    return a / b + (a % b != 0 ? 1 : 0);
}

// floor(sqrt(v)), digit-by-digit in pure integers so every platform agrees.
inline u128 isqrt_u128(u128 v) {
    if (v < 2) return v;
    u128 x = v;
    u128 bit = u128(1) << 126;
    while (bit > x) bit >>= 2;
    u128 res = 0;
    while (bit != 0) {
        if (x >= res + bit) {
            x -= res + bit;
            res = (res >> 1) + bit;
        } else {
            res >>= 1;
        }
        bit >>= 2;
    }
    return res;
}

// Parses a non-negative decimal token quantity ("250", "0.5", "1.000001")
// into minimal units. At most 6 fractional digits; anything else is rejected.
std::optional<Amount> parse_amount(std::string_view text);

// "1500000" -> "1.5"; used for human-facing summaries only.
std::string format_amount(Amount v);

// u128 -> decimal string (no locale, deterministic).
std::string u128_to_string(u128 v);

} // namespace graviton
