#pragma once

#include <compare>
#include <cstdint>

namespace graviton {

// Dense handles assigned at registration; stable for the lifetime of a run.
struct ChainId {
    std::uint32_t value = 0;
    auto operator<=>(const ChainId&) const = default;
};

struct TokenId {
    std::uint32_t value = 0;
    auto operator<=>(const TokenId&) const = default;
};

struct AccountId {
    std::uint32_t value = 0;
    auto operator<=>(const AccountId&) const = default;
};

struct PoolId {
    std::uint32_t value = 0;
    auto operator<=>(const PoolId&) const = default;
};

struct GatewayId {
    std::uint32_t value = 0;
    auto operator<=>(const GatewayId&) const = default;
};

} // namespace graviton
