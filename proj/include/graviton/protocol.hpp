#pragma once

#include "graviton/amm.hpp"
#include "graviton/gateway.hpp"
#include "graviton/governance.hpp"
#include "graviton/ledger.hpp"
#include "graviton/rewards.hpp"

namespace graviton {

// The full protocol state, wired together: pools report share changes to the
// reward engine from the moment of construction. Not copyable — the observer
// link must never dangle.
struct Protocol {
    Ledger ledger;
    GatewayBook gateways;
    PoolBook pools;
    RewardEngine rewards;
    Governance governance;

    Protocol() { pools.set_observer(&rewards); }
    Protocol(const Protocol&) = delete;
    Protocol& operator=(const Protocol&) = delete;

    // Total RGU burned so far (unwrap fees + failed-proposal deposits).
    Amount rgu_burned_total() const {
        Amount total = governance.deposit_burned_total();
        for (std::size_t i = 0; i < gateways.size(); ++i) {
            total = checked_add(total, gateways.gateway(GatewayId{std::uint32_t(i)}).fee_burned_total);
        }
        return total;
    }
};

// Engine-wide invariant sweep. Each audit throws Error(InvariantViolation)
// with a message naming the broken invariant; audit_all runs them all.
void audit_ledger_sums(const Ledger& ledger);
void audit_gateway_escrow(const Ledger& ledger, const GatewayBook& gateways);
void audit_pool_consistency(const Ledger& ledger, const PoolBook& pools);
void audit_reward_conservation(const RewardEngine& rewards, const PoolBook& pools);
void audit_governance_escrow(const Ledger& ledger, const Governance& governance);
void audit_all(const Protocol& p);

} // namespace graviton
