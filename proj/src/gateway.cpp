#include "graviton/gateway.hpp"

namespace graviton {

GatewayId GatewayBook::register_gateway(Ledger& ledger, ChainId origin, ChainId dest,
                                        TokenId token_t, TokenId token_wt, AccountId provider,
                                        std::uint32_t latency_ticks, Amount unwrap_fee_rgu) {
    const TokenInfo& t = ledger.token(token_t);
    const TokenInfo& wt = ledger.token(token_wt);
    check(t.kind == TokenKind::Origin && t.chain == origin, Errc::InconsistentTokenPair,
          "token_t must be an Origin token on the origin chain");
    check(wt.kind == TokenKind::Wrapped && wt.chain == dest, Errc::InconsistentTokenPair,
          "token_wt must be a Wrapped token on the destination chain");
    check(wt.underlying == token_t, Errc::InconsistentTokenPair,
          "token_wt does not wrap token_t");
    ledger.account_name(provider); // UnknownEntity if missing
    if (!multi_gateway_)
        for (const auto& g : gateways_)
            check(g.token_wt != token_wt, Errc::DuplicateGateway,
                  "a gateway for " + wt.symbol + " already exists (multi_gateway disabled)");

    GatewayId id{static_cast<std::uint32_t>(gateways_.size())};
    Gateway g;
    g.id = id;
    g.origin_chain = origin;
    g.dest_chain = dest;
    g.token_t = token_t;
    g.token_wt = token_wt;
    g.provider = provider;
    g.escrow_account = ledger.register_account("@gateway:" + std::to_string(id.value));
    g.latency_ticks = latency_ticks;
    g.unwrap_fee_rgu = unwrap_fee_rgu;
    gateways_.push_back(std::move(g));
    return id;
}

void GatewayBook::lock(Ledger& ledger, GatewayId id, AccountId user, Amount amount, Tick now) {
    Gateway& g = gateway_mut(id);
    check(amount > 0, Errc::ZeroAmount, "lock of zero");
    check(ledger.balance_of(g.origin_chain, g.token_t, user) >= amount, Errc::InsufficientBalance,
          "insufficient T balance to lock");
    Amount new_pending = checked_add(g.pending_mint_total, amount);

    ledger.transfer(g.origin_chain, g.token_t, user, g.escrow_account, amount);
    g.pending.push_back({PendingTransfer::Kind::Mint, user, amount, now + g.latency_ticks});
    g.pending_mint_total = new_pending;
}

void GatewayBook::unwrap(Ledger& ledger, GatewayId id, AccountId user, Amount amount, Tick now) {
    Gateway& g = gateway_mut(id);
    check(amount > 0, Errc::ZeroAmount, "unwrap of zero");
    check(ledger.balance_of(g.dest_chain, g.token_wt, user) >= amount, Errc::InsufficientBalance,
          "insufficient wT balance to unwrap");
    // a gateway only redeems what it issued; matters when several gateways
    // serve one wrapped token, each with its own escrow
    check(amount <= g.outstanding_wt, Errc::InsufficientBalance,
          "unwrap exceeds this gateway's outstanding supply");
    std::optional<TokenId> rgu = ledger.rgu_token();
    if (g.unwrap_fee_rgu > 0) {
        check(rgu.has_value(), Errc::InsufficientRguForFee, "no RGU token registered");
        check(ledger.balance_of(ledger.token(*rgu).chain, *rgu, user) >= g.unwrap_fee_rgu,
              Errc::InsufficientRguForFee, "insufficient RGU for the unwrap fee");
    }
    Amount new_pending = checked_add(g.pending_unlock_total, amount);

    ledger.burn(g.dest_chain, g.token_wt, user, amount);
    if (g.unwrap_fee_rgu > 0) {
        // the fee sink: burned at initiation, shrinking RGU supply
        ledger.burn(ledger.token(*rgu).chain, *rgu, user, g.unwrap_fee_rgu);
        g.fee_burned_total = checked_add(g.fee_burned_total, g.unwrap_fee_rgu);
    }
    g.outstanding_wt -= amount;
    g.pending.push_back({PendingTransfer::Kind::Unlock, user, amount, now + g.latency_ticks});
    g.pending_unlock_total = new_pending;
}

std::size_t GatewayBook::process_pending(Ledger& ledger, GatewayId id, Tick now) {
    Gateway& g = gateway_mut(id);
    std::size_t matured = 0;
    while (!g.pending.empty() && g.pending.front().mature_at <= now) {
        PendingTransfer pt = g.pending.front();
        g.pending.pop_front();
        if (pt.kind == PendingTransfer::Kind::Mint) {
            ledger.mint(g.dest_chain, g.token_wt, pt.beneficiary, pt.amount);
            g.outstanding_wt = checked_add(g.outstanding_wt, pt.amount);
            g.pending_mint_total -= pt.amount;
        } else {
            ledger.transfer(g.origin_chain, g.token_t, g.escrow_account, pt.beneficiary, pt.amount);
            g.pending_unlock_total -= pt.amount;
        }
        ++matured;
    }
    return matured;
}

void GatewayBook::genesis_wrap(Ledger& ledger, GatewayId id, AccountId account, Amount amount) {
    Gateway& g = gateway_mut(id);
    if (amount == 0) return;
    ledger.mint(g.origin_chain, g.token_t, g.escrow_account, amount);
    ledger.mint(g.dest_chain, g.token_wt, account, amount);
    g.outstanding_wt = checked_add(g.outstanding_wt, amount);
}

Amount GatewayBook::escrow(const Ledger& ledger, GatewayId id) const {
    const Gateway& g = gateway(id);
    return ledger.balance_of(g.origin_chain, g.token_t, g.escrow_account);
}

const Gateway& GatewayBook::gateway(GatewayId id) const {
    check(id.value < gateways_.size(), Errc::UnknownEntity, "unknown gateway id");
    return gateways_[id.value];
}

std::vector<GatewayId> GatewayBook::gateways_for_token(TokenId token_wt) const {
    std::vector<GatewayId> out;
    for (const auto& g : gateways_)
        if (g.token_wt == token_wt) out.push_back(g.id);
    return out;
}

Gateway& GatewayBook::gateway_mut(GatewayId id) {
    check(id.value < gateways_.size(), Errc::UnknownEntity, "unknown gateway id");
    return gateways_[id.value];
}

} // namespace graviton
