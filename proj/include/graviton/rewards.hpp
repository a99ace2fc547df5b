#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "graviton/amm.hpp"
#include "graviton/gateway.hpp"
#include "graviton/ledger.hpp"
#include "graviton/rational.hpp"

namespace graviton {

// Scale factor for the per-share accumulator. All internal bookkeeping is
// kept in these scaled units so conservation is an exact integer identity
// rather than "exact up to flooring dust".
inline constexpr u128 REWARD_PRECISION = 1'000'000'000'000ULL; // 10^12

// Per-tick RGU emission: rate starts at e0 and is multiplied by
// decay_num/decay_den (floored) at every period boundary. Pure integers;
// the rate for period n is n successive floor-multiplies, never a float pow.
struct EmissionSchedule {
    Amount e0 = 0;
    std::uint64_t decay_num = 1;
    std::uint64_t decay_den = 1;
    std::uint64_t period_ticks = 1;

    void validate() const {
        check(period_ticks >= 1, Errc::ValidationError, "emission period must be >= 1");
        check(decay_den >= 1, Errc::ValidationError, "emission decay denominator must be >= 1");
        check(decay_num <= decay_den, Errc::ValidationError, "emission must be non-increasing");
    }

    // O(n) from scratch; the engine advances incrementally instead.
    Amount rate_for_period(std::uint64_t n) const;
    Amount rate_at(Tick t) const { return rate_for_period(static_cast<std::uint64_t>(t) / period_ticks); }

    bool operator==(const EmissionSchedule&) const = default;
};

// Everything the conservation identity needs, in exact integers:
//   emitted * PRECISION ==
//       (claimed_lp + claimed_gateway + gateway_unclaimed) * PRECISION
//     + lp_entitled_scaled + residual_scaled
// Dividing by PRECISION gives the whole-unit identity with the sub-unit
// entitlements and residue folded into one integral remainder.
struct ConservationReport {
    bigint emitted;
    bigint claimed_lp;
    bigint claimed_gateway;
    bigint gateway_unclaimed;
    bigint lp_entitled_scaled;
    bigint residual_scaled;

    bigint lhs() const { return emitted * to_bigint(REWARD_PRECISION); }
    bigint rhs() const {
        return (claimed_lp + claimed_gateway + gateway_unclaimed) * to_bigint(REWARD_PRECISION) +
               lp_entitled_scaled + residual_scaled;
    }
    bool exact() const { return lhs() == rhs(); }
};

// Emission + distribution engine. Accrues once per tick: emission is split
// across pools by weight, each pool's slice is split LP-side / gateway-side
// by lp_fraction_bps, the LP side feeds a per-share accumulator and the
// gateway side is divided across the wrapped token's gateways pro-rata to
// outstanding supply. Every flooring remainder lands in residual_scaled.
class RewardEngine final : public SharesObserver {
public:
    void set_emission(const EmissionSchedule& s);
    void set_lp_fraction_bps(std::uint32_t bps);
    const EmissionSchedule& emission_schedule() const { return schedule_; }
    std::uint32_t lp_fraction_bps() const { return lp_fraction_bps_; }
    Tick last_accrued() const { return last_accrued_; }

    // Emission rate in force at tick `now`; advances the cached decay state.
    Amount emission_rate(Tick now);

    void accrue(const PoolBook& pools, const GatewayBook& gateways, Tick now);

    Amount pending_lp(const PoolBook& pools, PoolId pool, AccountId account) const;
    Amount claim_lp(Ledger& ledger, const PoolBook& pools, PoolId pool, AccountId account);
    Amount pending_gateway(const GatewayBook& gateways, GatewayId gw) const;
    Amount claim_gateway(Ledger& ledger, const GatewayBook& gateways, GatewayId gw);

    void on_shares_changed(PoolId pool, AccountId account, std::uint64_t old_shares,
                           std::uint64_t new_shares) override;

    ConservationReport conservation(const PoolBook& pools) const;

    u128 acc_per_share(PoolId pool) const;
    u128 residual_scaled() const { return residual_scaled_; }
    u128 emitted_total() const { return emitted_; }
    u128 claimed_lp_total() const { return claimed_lp_; }
    u128 claimed_gateway_total() const { return claimed_gw_; }
    Amount gateway_claimed(GatewayId gw) const;

private:
    struct LpPosition {
        bigint debt_scaled;  // shares * acc at last settlement
        bigint carry_scaled; // settled but unclaimed entitlement (any size)
    };
    struct PoolRewards {
        u128 acc_per_share = 0;
        std::map<std::uint32_t, LpPosition> accounts;
    };
    struct GatewayRewards {
        Amount accrued = 0;
        Amount claimed = 0;
    };

    PoolRewards& at_pool(PoolId id);
    GatewayRewards& at_gateway(GatewayId id);
    // Entitlement in scaled units for (pool state, live share count).
    static bigint entitled_scaled(const PoolRewards& pr, const LpPosition* pos, std::uint64_t shares);
    Amount mint_rgu(Ledger& ledger, AccountId to, Amount amount) const;

    EmissionSchedule schedule_{};
    std::uint32_t lp_fraction_bps_ = 10'000;
    Tick last_accrued_ = -1;

    // incremental decay cache
    bool rate_valid_ = false;
    std::uint64_t cur_period_ = 0;
    Amount cur_rate_ = 0;

    std::vector<PoolRewards> pools_;
    std::vector<GatewayRewards> gateways_;
    u128 residual_scaled_ = 0;
    u128 emitted_ = 0;
    u128 claimed_lp_ = 0;
    u128 claimed_gw_ = 0;
};

} // namespace graviton
