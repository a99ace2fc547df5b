#pragma once

#include <deque>
#include <vector>

#include "graviton/ledger.hpp"

namespace graviton {

struct PendingTransfer {
    enum class Kind { Mint, Unlock };
    Kind kind = Kind::Mint;
    AccountId beneficiary;
    Amount amount = 0; // always > 0
    Tick mature_at = 0;

    bool operator==(const PendingTransfer&) const = default;
};

// One cross-chain transfer lane: LU-Port escrow on the origin chain paired
// with an IB-Port issue/burn on the destination chain. The collateral
// identity escrow == outstanding_wt + pending mints + pending unlocks holds
// after every operation; with a single gateway per wrapped token,
// outstanding_wt equals the token's total supply.
struct Gateway {
    GatewayId id;
    ChainId origin_chain;
    ChainId dest_chain;
    TokenId token_t;  // Origin kind, on origin_chain
    TokenId token_wt; // Wrapped kind, underlying == token_t
    AccountId provider;
    AccountId escrow_account; // holds locked T on the origin chain
    std::uint32_t latency_ticks = 0;
    Amount unwrap_fee_rgu = 0; // flat RGU fee burned per unwrap
    std::deque<PendingTransfer> pending; // maturity-ordered, FIFO within a tick
    Amount pending_mint_total = 0;
    Amount pending_unlock_total = 0;
    Amount outstanding_wt = 0;    // wT issued by this gateway and not yet burned
    Amount fee_burned_total = 0;  // cumulative RGU burned by unwrap fees

    bool operator==(const Gateway&) const = default;
};

class GatewayBook {
public:
    GatewayId register_gateway(Ledger& ledger, ChainId origin, ChainId dest, TokenId token_t,
                               TokenId token_wt, AccountId provider, std::uint32_t latency_ticks,
                               Amount unwrap_fee_rgu);

    // Moves T from the user into escrow now and queues the wT mint.
    void lock(Ledger& ledger, GatewayId gw, AccountId user, Amount amount, Tick now);

    // Burns the user's wT and the flat RGU fee now and queues the T unlock.
    void unwrap(Ledger& ledger, GatewayId gw, AccountId user, Amount amount, Tick now);

    // Executes every pending transfer with mature_at <= now, in queue order.
    // Matured transfers cannot fail: the escrow identity guarantees funds.
    std::size_t process_pending(Ledger& ledger, GatewayId gw, Tick now);

    // Mints wT against freshly minted escrow collateral; used only when a
    // scenario grants initial wrapped balances, so the collateral identity
    // holds from tick 0.
    void genesis_wrap(Ledger& ledger, GatewayId gw, AccountId account, Amount amount);

    Amount escrow(const Ledger& ledger, GatewayId gw) const;
    Amount outstanding(GatewayId gw) const { return gateway(gw).outstanding_wt; }

    const Gateway& gateway(GatewayId id) const;
    std::size_t size() const { return gateways_.size(); }
    std::vector<GatewayId> gateways_for_token(TokenId token_wt) const;
    void set_unwrap_fee(GatewayId id, Amount fee) { gateway_mut(id).unwrap_fee_rgu = fee; }
    void set_multi_gateway(bool allowed) { multi_gateway_ = allowed; }

    bool operator==(const GatewayBook& o) const { return gateways_ == o.gateways_; }

private:
    Gateway& gateway_mut(GatewayId id);

    std::vector<Gateway> gateways_;
    bool multi_gateway_ = false;
};

} // namespace graviton
