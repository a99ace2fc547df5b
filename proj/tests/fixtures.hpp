#pragma once

#include "graviton/protocol.hpp"

namespace graviton::test {

// Two chains, an ETH -> wETH gateway, a USDN quote token and RGU, three
// accounts. The standard starting point for module tests.
struct BaseFixture {
    Protocol p;
    ChainId origin;
    ChainId dest;
    TokenId eth, weth, usdn, rgu;
    AccountId provider, alice, bob;
    GatewayId gw;

    explicit BaseFixture(std::uint32_t latency = 0, Amount unwrap_fee = 0) {
        Ledger& l = p.ledger;
        origin = l.register_chain("ethereum");
        dest = l.register_chain("waves");
        provider = l.register_account("provider");
        alice = l.register_account("alice");
        bob = l.register_account("bob");
        eth = l.register_token(origin, "ETH", TokenKind::Origin);
        weth = l.register_token(dest, "wETH", TokenKind::Wrapped, eth);
        usdn = l.register_token(dest, "USDN", TokenKind::Origin);
        rgu = l.register_token(dest, "RGU", TokenKind::Rgu);
        gw = p.gateways.register_gateway(l, origin, dest, eth, weth, provider, latency,
                                         unwrap_fee);
    }

    // Wrapped balances come in through the gateway so collateral exists.
    void fund_weth(AccountId a, Amount amt) { p.gateways.genesis_wrap(p.ledger, gw, a, amt); }
    void fund(TokenId t, AccountId a, Amount amt) {
        p.ledger.mint(p.ledger.token(t).chain, t, a, amt);
    }

    PoolId make_pool(std::uint32_t fee_bps, std::uint64_t weight, AccountId seeder, Amount w,
                     Amount o) {
        PoolId id = p.pools.create_pool(p.ledger, dest, weth, usdn, fee_bps, weight);
        if (w > 0) {
            fund_weth(seeder, w);
            fund(usdn, seeder, o);
            p.pools.add_liquidity(p.ledger, id, seeder, w, o);
        }
        return id;
    }
};

} // namespace graviton::test
