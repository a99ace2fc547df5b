#include "graviton/protocol.hpp"

#include <map>

namespace graviton {

namespace {

void violated(const std::string& name, const std::string& detail) {
    throw Error(Errc::InvariantViolation, name + ": " + detail);
}

} // namespace

void audit_ledger_sums(const Ledger& ledger) {
    for (std::uint32_t i = 0; i < ledger.token_count(); ++i) {
        const TokenId t{i};
        const ChainId chain = ledger.token(t).chain;
        const Amount sum = ledger.sum_balances(chain, t);
        const Amount supply = ledger.total_supply(chain, t);
        if (sum != supply) {
            violated("ledger-sum", "token " + ledger.token(t).symbol + ": balances sum to " +
                                       std::to_string(sum) + " but supply is " +
                                       std::to_string(supply));
        }
    }
}

void audit_gateway_escrow(const Ledger& ledger, const GatewayBook& gateways) {
    std::map<std::uint32_t, u128> outstanding_by_token;
    for (std::uint32_t i = 0; i < gateways.size(); ++i) {
        const Gateway& g = gateways.gateway(GatewayId{i});

        u128 mints = 0, unlocks = 0;
        for (const auto& p : g.pending) {
            (p.kind == PendingTransfer::Kind::Mint ? mints : unlocks) += p.amount;
        }
        if (mints != g.pending_mint_total || unlocks != g.pending_unlock_total) {
            violated("gateway-pending", "gateway " + std::to_string(i) +
                                            " queue totals drifted from counters");
        }

        const u128 escrow = gateways.escrow(ledger, GatewayId{i});
        const u128 backed = u128(g.outstanding_wt) + g.pending_mint_total + g.pending_unlock_total;
        if (escrow != backed) {
            violated("gateway-escrow", "gateway " + std::to_string(i) + ": escrow " +
                                           u128_to_string(escrow) + " != outstanding+pending " +
                                           u128_to_string(backed));
        }
        outstanding_by_token[g.token_wt.value] += g.outstanding_wt;
    }
    for (const auto& [token, total_out] : outstanding_by_token) {
        const TokenInfo& info = ledger.token(TokenId{token});
        const Amount supply = ledger.total_supply(info.chain, TokenId{token});
        if (total_out != supply) {
            violated("gateway-outstanding", "wrapped token " + info.symbol + ": supply " +
                                                std::to_string(supply) +
                                                " != gateways' outstanding " +
                                                u128_to_string(total_out));
        }
    }
}

void audit_pool_consistency(const Ledger& ledger, const PoolBook& pools) {
    for (std::uint32_t i = 0; i < pools.size(); ++i) {
        const Pool& p = pools.pool(PoolId{i});
        const Amount bal_w = ledger.balance_of(p.chain, p.token_w, p.account);
        const Amount bal_o = ledger.balance_of(p.chain, p.token_o, p.account);
        if (bal_w != p.reserve_w || bal_o != p.reserve_o) {
            violated("pool-reserves", "pool " + std::to_string(i) +
                                          ": ledger balances diverge from recorded reserves");
        }
        u128 share_sum = 0;
        for (const auto& [acct, s] : p.shares) {
            if (s == 0) violated("pool-shares", "pool " + std::to_string(i) + " holds a zero entry");
            share_sum += s;
        }
        if (share_sum != p.total_shares) {
            violated("pool-shares", "pool " + std::to_string(i) +
                                        ": share entries do not sum to total_shares");
        }
        const bool zero_reserves = p.reserve_w == 0 && p.reserve_o == 0;
        if (p.empty() != zero_reserves) {
            violated("pool-empty", "pool " + std::to_string(i) +
                                       ": empty-state fields are inconsistent");
        }
    }
}

void audit_reward_conservation(const RewardEngine& rewards, const PoolBook& pools) {
    const ConservationReport r = rewards.conservation(pools);
    if (!r.exact()) {
        violated("reward-conservation", "emitted*1e12 " + r.lhs().str() +
                                            " != claims+entitlements+residual " + r.rhs().str());
    }
}

void audit_governance_escrow(const Ledger& ledger, const Governance& governance) {
    if (!governance.escrow_initialized()) return;
    auto rgu = ledger.rgu_token();
    if (!rgu) return; // nothing can have been deposited
    const ChainId chain = ledger.token(*rgu).chain;
    const Amount held = ledger.balance_of(chain, *rgu, governance.escrow_account());
    const Amount owed = governance.active_deposit_total();
    if (held != owed) {
        violated("governance-escrow", "escrow holds " + std::to_string(held) +
                                          " RGU but active deposits total " + std::to_string(owed));
    }
}

void audit_all(const Protocol& p) {
    audit_ledger_sums(p.ledger);
    audit_gateway_escrow(p.ledger, p.gateways);
    audit_pool_consistency(p.ledger, p.pools);
    audit_reward_conservation(p.rewards, p.pools);
    audit_governance_escrow(p.ledger, p.governance);
}

} // namespace graviton
