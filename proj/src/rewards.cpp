#include "graviton/rewards.hpp"

#include <algorithm>

namespace graviton {

Amount EmissionSchedule::rate_for_period(std::uint64_t n) const {
    if (decay_num == decay_den) return e0;
    Amount r = e0;
    for (std::uint64_t i = 0; i < n && r > 0; ++i) {
        r = static_cast<Amount>(u128(r) * decay_num / decay_den);
    }
    return r;
}

void RewardEngine::set_emission(const EmissionSchedule& s) {
    s.validate();
    schedule_ = s;
    rate_valid_ = false; // re-derive the decay cache from period 0
}

void RewardEngine::set_lp_fraction_bps(std::uint32_t bps) {
    check(bps <= BPS_DENOM, Errc::ValidationError, "lp_fraction_bps above 10000");
    lp_fraction_bps_ = bps;
}

Amount RewardEngine::emission_rate(Tick now) {
    check(now >= 0, Errc::NonMonotonicTick, "negative tick");
    const std::uint64_t target = static_cast<std::uint64_t>(now) / schedule_.period_ticks;
    if (!rate_valid_ || cur_period_ > target) {
        cur_period_ = 0;
        cur_rate_ = schedule_.e0;
        rate_valid_ = true;
    }
    while (cur_period_ < target && cur_rate_ > 0) {
        cur_rate_ = static_cast<Amount>(u128(cur_rate_) * schedule_.decay_num / schedule_.decay_den);
        ++cur_period_;
    }
    if (cur_period_ < target) cur_period_ = target; // rate bottomed out at 0
    return cur_rate_;
}

RewardEngine::PoolRewards& RewardEngine::at_pool(PoolId id) {
    if (pools_.size() <= id.value) pools_.resize(id.value + 1);
    return pools_[id.value];
}

RewardEngine::GatewayRewards& RewardEngine::at_gateway(GatewayId id) {
    if (gateways_.size() <= id.value) gateways_.resize(id.value + 1);
    return gateways_[id.value];
}

bigint RewardEngine::entitled_scaled(const PoolRewards& pr, const LpPosition* pos,
                                     std::uint64_t shares) {
    bigint gross = to_bigint(pr.acc_per_share) * shares;
    if (pos) gross += pos->carry_scaled - pos->debt_scaled;
    return gross;
}

void RewardEngine::accrue(const PoolBook& pools, const GatewayBook& gateways, Tick now) {
    check(now > last_accrued_, Errc::NonMonotonicTick, "accrue ticks must strictly increase");
    last_accrued_ = now;

    const Amount e = emission_rate(now);
    if (e == 0) return;
    emitted_ = checked_add_u128(emitted_, e);

    u128 total_weight = 0;
    for (std::size_t i = 0; i < pools.size(); ++i) {
        total_weight = checked_add_u128(total_weight, pools.pool(PoolId{std::uint32_t(i)}).weight);
    }
    if (total_weight == 0) {
        residual_scaled_ = checked_add_u128(residual_scaled_, u128(e) * REWARD_PRECISION);
        return;
    }

    Amount distributed = 0;
    for (std::size_t i = 0; i < pools.size(); ++i) {
        const Pool& p = pools.pool(PoolId{std::uint32_t(i)});
        if (p.weight == 0) continue;
        const Amount e_p = narrow_to_amount(checked_mul_u128(e, p.weight) / total_weight);
        distributed += e_p; // sums back to <= e
        if (e_p == 0) continue;

        Amount l_p = mul_div_floor(e_p, lp_fraction_bps_, BPS_DENOM);
        Amount g_p = e_p - l_p;

        if (g_p > 0) {
            // Gateway side: pro-rata over outstanding wrapped supply. Keyed
            // only on amounts, never on transfer activity, so churn that
            // leaves supplies unchanged earns nothing extra.
            const auto gws = gateways.gateways_for_token(p.token_w);
            u128 total_out = 0;
            for (GatewayId g : gws) total_out += gateways.outstanding(g);
            if (gws.empty() || total_out == 0) {
                // Nothing bridged this token: the whole slice goes LP-side.
                l_p += g_p;
            } else {
                Amount rem = g_p;
                for (GatewayId g : gws) {
                    const Amount gi =
                        narrow_to_amount(checked_mul_u128(g_p, gateways.outstanding(g)) / total_out);
                    auto& rs = at_gateway(g);
                    rs.accrued = checked_add(rs.accrued, gi);
                    rem -= gi;
                }
                residual_scaled_ = checked_add_u128(residual_scaled_, u128(rem) * REWARD_PRECISION);
            }
        }

        if (l_p > 0) {
            const std::uint64_t s = p.total_shares;
            const u128 l_scaled = u128(l_p) * REWARD_PRECISION;
            if (s == 0) {
                residual_scaled_ = checked_add_u128(residual_scaled_, l_scaled);
            } else {
                const u128 delta = l_scaled / s;
                auto& pr = at_pool(p.id);
                pr.acc_per_share = checked_add_u128(pr.acc_per_share, delta);
                residual_scaled_ = checked_add_u128(residual_scaled_, l_scaled - delta * s);
            }
        }
    }
    residual_scaled_ = checked_add_u128(residual_scaled_, u128(e - distributed) * REWARD_PRECISION);
}

Amount RewardEngine::pending_lp(const PoolBook& pools, PoolId pool, AccountId account) const {
    const Pool& p = pools.pool(pool); // validates the id
    if (pools_.size() <= pool.value) return 0;
    const PoolRewards& pr = pools_[pool.value];
    const LpPosition* pos = nullptr;
    if (auto it = pr.accounts.find(account.value); it != pr.accounts.end()) pos = &it->second;
    bigint whole = entitled_scaled(pr, pos, p.shares_of(account)) / to_bigint(REWARD_PRECISION);
    check(whole <= std::numeric_limits<Amount>::max(), Errc::Overflow, "pending exceeds 64 bits");
    return whole.convert_to<Amount>();
}

Amount RewardEngine::mint_rgu(Ledger& ledger, AccountId to, Amount amount) const {
    auto rgu = ledger.rgu_token();
    check(rgu.has_value(), Errc::UnknownEntity, "no RGU token registered");
    ledger.mint(ledger.token(*rgu).chain, *rgu, to, amount);
    return amount;
}

Amount RewardEngine::claim_lp(Ledger& ledger, const PoolBook& pools, PoolId pool,
                              AccountId account) {
    const Pool& p = pools.pool(pool);
    const std::uint64_t shares = p.shares_of(account);
    PoolRewards& pr = at_pool(pool);
    const LpPosition* existing = nullptr;
    if (auto it = pr.accounts.find(account.value); it != pr.accounts.end()) existing = &it->second;

    const bigint gross = to_bigint(pr.acc_per_share) * shares;
    const bigint ent = entitled_scaled(pr, existing, shares);
    const bigint whole = ent / to_bigint(REWARD_PRECISION);
    check(whole <= std::numeric_limits<Amount>::max(), Errc::Overflow, "claim exceeds 64 bits");
    const Amount m = whole.convert_to<Amount>();

    if (m > 0) mint_rgu(ledger, account, m); // may throw; nothing mutated yet

    LpPosition& pos = pr.accounts[account.value];
    pos.debt_scaled = gross;
    pos.carry_scaled = ent - whole * to_bigint(REWARD_PRECISION);
    if (shares == 0 && pos.carry_scaled == 0) pr.accounts.erase(account.value);
    claimed_lp_ = checked_add_u128(claimed_lp_, m);
    return m;
}

Amount RewardEngine::pending_gateway(const GatewayBook& gateways, GatewayId gw) const {
    (void)gateways.gateway(gw); // validates the id
    return gateways_.size() <= gw.value ? 0 : gateways_[gw.value].accrued;
}

Amount RewardEngine::claim_gateway(Ledger& ledger, const GatewayBook& gateways, GatewayId gw) {
    const Gateway& g = gateways.gateway(gw);
    GatewayRewards& rs = at_gateway(gw);
    const Amount m = rs.accrued;
    if (m == 0) return 0;
    mint_rgu(ledger, g.provider, m);
    rs.accrued = 0;
    rs.claimed = checked_add(rs.claimed, m);
    claimed_gw_ = checked_add_u128(claimed_gw_, m);
    return m;
}

void RewardEngine::on_shares_changed(PoolId pool, AccountId account, std::uint64_t old_shares,
                                     std::uint64_t new_shares) {
    PoolRewards& pr = at_pool(pool);
    LpPosition& pos = pr.accounts[account.value];
    // Settle at the old share count, then restart the debt at the new one;
    // accrual already booked can never be altered by a later share change.
    pos.carry_scaled += to_bigint(pr.acc_per_share) * old_shares - pos.debt_scaled;
    pos.debt_scaled = to_bigint(pr.acc_per_share) * new_shares;
    if (new_shares == 0 && pos.carry_scaled == 0 && pos.debt_scaled == 0) {
        pr.accounts.erase(account.value);
    }
}

ConservationReport RewardEngine::conservation(const PoolBook& pools) const {
    ConservationReport r;
    r.emitted = to_bigint(emitted_);
    r.claimed_lp = to_bigint(claimed_lp_);
    r.claimed_gateway = to_bigint(claimed_gw_);
    r.residual_scaled = to_bigint(residual_scaled_);
    for (const auto& rs : gateways_) r.gateway_unclaimed += rs.accrued;

    for (std::size_t i = 0; i < pools.size(); ++i) {
        const Pool& p = pools.pool(PoolId{std::uint32_t(i)});
        const PoolRewards* pr = i < pools_.size() ? &pools_[i] : nullptr;
        if (!pr) continue;
        // Union of live shareholders and accounts with settled dust.
        for (const auto& [acct, shares] : p.shares) {
            const LpPosition* pos = nullptr;
            if (auto it = pr->accounts.find(acct); it != pr->accounts.end()) pos = &it->second;
            r.lp_entitled_scaled += entitled_scaled(*pr, pos, shares);
        }
        for (const auto& [acct, pos] : pr->accounts) {
            if (p.shares.count(acct)) continue; // already counted above
            r.lp_entitled_scaled += entitled_scaled(*pr, &pos, 0);
        }
    }
    return r;
}

u128 RewardEngine::acc_per_share(PoolId pool) const {
    return pools_.size() <= pool.value ? 0 : pools_[pool.value].acc_per_share;
}

Amount RewardEngine::gateway_claimed(GatewayId gw) const {
    return gateways_.size() <= gw.value ? 0 : gateways_[gw.value].claimed;
}

} // namespace graviton
