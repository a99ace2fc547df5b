#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace graviton;
using test::BaseFixture;

namespace {

void expect_escrow_identity(const BaseFixture& f) {
    const Gateway& g = f.p.gateways.gateway(f.gw);
    CHECK(f.p.gateways.escrow(f.p.ledger, f.gw) ==
          g.outstanding_wt + g.pending_mint_total + g.pending_unlock_total);
}

} // namespace

TEST_CASE("gateway registration validates the token pair") {
    BaseFixture f;
    Ledger& l = f.p.ledger;
    // token_t must be Origin on the origin chain
    CHECK_THROWS_AS(f.p.gateways.register_gateway(l, f.dest, f.dest, f.usdn, f.weth,
                                                  f.provider, 0, 0), Error);
    // token_wt must wrap token_t
    const TokenId btc = l.register_token(f.origin, "BTC", TokenKind::Origin);
    CHECK_THROWS_AS(f.p.gateways.register_gateway(l, f.origin, f.dest, btc, f.weth,
                                                  f.provider, 0, 0), Error);
    // second gateway for the same wrapped token needs multi_gateway
    CHECK_THROWS_AS(f.p.gateways.register_gateway(l, f.origin, f.dest, f.eth, f.weth,
                                                  f.provider, 0, 0), Error);
    f.p.gateways.set_multi_gateway(true);
    const GatewayId second = f.p.gateways.register_gateway(l, f.origin, f.dest, f.eth, f.weth,
                                                           f.provider, 3, 0);
    CHECK(second.value == 1);
}

TEST_CASE("lock escrows now and mints after the latency") {
    BaseFixture f(/*latency=*/2);
    f.fund(f.eth, f.alice, 100);

    f.p.gateways.lock(f.p.ledger, f.gw, f.alice, 60, /*now=*/5);
    CHECK(f.p.gateways.escrow(f.p.ledger, f.gw) == 60);
    CHECK(f.p.ledger.balance_of(f.dest, f.weth, f.alice) == 0);
    CHECK(f.p.gateways.outstanding(f.gw) == 0);
    expect_escrow_identity(f);

    CHECK(f.p.gateways.process_pending(f.p.ledger, f.gw, 6) == 0); // not mature yet
    CHECK(f.p.gateways.process_pending(f.p.ledger, f.gw, 7) == 1);
    CHECK(f.p.ledger.balance_of(f.dest, f.weth, f.alice) == 60);
    CHECK(f.p.gateways.outstanding(f.gw) == 60);
    expect_escrow_identity(f);

    CHECK_THROWS_AS(f.p.gateways.lock(f.p.ledger, f.gw, f.alice, 0, 8), Error);
    CHECK_THROWS_AS(f.p.gateways.lock(f.p.ledger, f.gw, f.alice, 41, 8), Error);
}

TEST_CASE("same-tick transfers mature in FIFO order") {
    BaseFixture f(/*latency=*/1);
    f.fund(f.eth, f.alice, 10);
    f.fund(f.eth, f.bob, 10);
    f.p.gateways.lock(f.p.ledger, f.gw, f.alice, 3, 0);
    f.p.gateways.lock(f.p.ledger, f.gw, f.bob, 4, 0);
    const auto& pending = f.p.gateways.gateway(f.gw).pending;
    REQUIRE(pending.size() == 2);
    CHECK(pending[0].beneficiary == f.alice);
    CHECK(pending[1].beneficiary == f.bob);
    CHECK(f.p.gateways.process_pending(f.p.ledger, f.gw, 1) == 2);
}

TEST_CASE("unwrap burns wT and the flat RGU fee immediately") {
    BaseFixture f(/*latency=*/1, /*unwrap_fee=*/5);
    f.fund_weth(f.alice, 100);
    expect_escrow_identity(f);

    // no RGU balance: the fee gate rejects before anything moves
    CHECK_THROWS_AS(f.p.gateways.unwrap(f.p.ledger, f.gw, f.alice, 40, 0), Error);
    f.fund(f.rgu, f.alice, 12);

    f.p.gateways.unwrap(f.p.ledger, f.gw, f.alice, 40, 0);
    CHECK(f.p.ledger.balance_of(f.dest, f.weth, f.alice) == 60);
    CHECK(f.p.ledger.balance_of(f.dest, f.rgu, f.alice) == 7);
    CHECK(f.p.ledger.total_supply(f.dest, f.rgu) == 7); // fee burned, not moved
    CHECK(f.p.gateways.gateway(f.gw).fee_burned_total == 5);
    CHECK(f.p.gateways.outstanding(f.gw) == 60);
    CHECK(f.p.gateways.escrow(f.p.ledger, f.gw) == 100); // unlock still pending
    expect_escrow_identity(f);

    f.p.gateways.process_pending(f.p.ledger, f.gw, 1);
    CHECK(f.p.gateways.escrow(f.p.ledger, f.gw) == 60);
    CHECK(f.p.ledger.balance_of(f.origin, f.eth, f.alice) == 40);
    expect_escrow_identity(f);

    // fee affordability is checked before any burn
    f.p.gateways.unwrap(f.p.ledger, f.gw, f.alice, 30, 1); // fee 5, balance 7 -> ok
    CHECK_THROWS_AS(f.p.gateways.unwrap(f.p.ledger, f.gw, f.alice, 10, 1), Error);
    CHECK(f.p.ledger.balance_of(f.dest, f.weth, f.alice) == 30);
}

TEST_CASE("a gateway never redeems more than it issued") {
    BaseFixture f;
    f.p.gateways.set_multi_gateway(true);
    const GatewayId gw2 = f.p.gateways.register_gateway(f.p.ledger, f.origin, f.dest, f.eth,
                                                        f.weth, f.provider, 0, 0);
    f.fund_weth(f.alice, 50); // issued by gateway 0
    CHECK(f.p.gateways.outstanding(f.gw) == 50);
    CHECK(f.p.gateways.outstanding(gw2) == 0);
    // alice holds 50 wETH but gateway 2 has no collateral for them
    CHECK_THROWS_AS(f.p.gateways.unwrap(f.p.ledger, gw2, f.alice, 10, 0), Error);
    f.p.gateways.unwrap(f.p.ledger, f.gw, f.alice, 50, 0); // the issuer redeems fine
}

TEST_CASE("random lock/unwrap storm keeps the escrow identity at every tick") {
    BaseFixture f(/*latency=*/3, /*unwrap_fee=*/1);
    f.fund(f.eth, f.alice, 1'000'000);
    f.fund(f.rgu, f.alice, 1'000'000);

    std::mt19937_64 rng(41);
    for (Tick t = 0; t < 400; ++t) {
        f.p.gateways.process_pending(f.p.ledger, f.gw, t);
        for (int op = 0; op < 3; ++op) {
            const Amount amt = 1 + rng() % 500;
            try {
                if (rng() % 2 == 0) {
                    f.p.gateways.lock(f.p.ledger, f.gw, f.alice, amt, t);
                } else {
                    f.p.gateways.unwrap(f.p.ledger, f.gw, f.alice, amt, t);
                }
            } catch (const Error& e) {
                const bool expected = e.code() == Errc::InsufficientBalance ||
                                      e.code() == Errc::InsufficientRguForFee;
                CHECK(expected);
            }
            expect_escrow_identity(f);
        }
        CHECK_NOTHROW(audit_gateway_escrow(f.p.ledger, f.p.gateways));
        CHECK_NOTHROW(audit_ledger_sums(f.p.ledger));
    }
}

TEST_CASE("genesis_wrap mints collateral and wrapped supply together") {
    BaseFixture f;
    f.p.gateways.genesis_wrap(f.p.ledger, f.gw, f.alice, 77);
    CHECK(f.p.gateways.escrow(f.p.ledger, f.gw) == 77);
    CHECK(f.p.ledger.balance_of(f.dest, f.weth, f.alice) == 77);
    CHECK(f.p.gateways.outstanding(f.gw) == 77);
    CHECK(f.p.ledger.total_supply(f.origin, f.eth) == 77);
    expect_escrow_identity(f);
    CHECK_NOTHROW(audit_gateway_escrow(f.p.ledger, f.p.gateways));
}
