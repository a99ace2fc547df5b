#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace graviton;
using test::BaseFixture;

namespace {

EmissionSchedule flat(Amount e0) { return {e0, 1, 1, 1}; }

} // namespace

TEST_CASE("five ticks at 10/tick with an 80/20 split: 40 to the LP, 10 to the gateway") {
    BaseFixture f;
    // shares = isqrt(4e6 * 1e6) = 2e6, which divides the LP stream's scale
    f.make_pool(30, 100, f.alice, 4 * AMOUNT_ONE, AMOUNT_ONE);
    f.p.rewards.set_emission(flat(10));
    f.p.rewards.set_lp_fraction_bps(8'000);

    for (Tick t = 0; t < 5; ++t) f.p.rewards.accrue(f.p.pools, f.p.gateways, t);

    CHECK(f.p.rewards.pending_lp(f.p.pools, PoolId{0}, f.alice) == 40);
    CHECK(f.p.rewards.pending_gateway(f.p.gateways, f.gw) == 10);
    CHECK(f.p.rewards.residual_scaled() == 0);

    CHECK(f.p.rewards.claim_lp(f.p.ledger, f.p.pools, PoolId{0}, f.alice) == 40);
    CHECK(f.p.ledger.balance_of(f.dest, f.rgu, f.alice) == 40);
    CHECK(f.p.rewards.claim_lp(f.p.ledger, f.p.pools, PoolId{0}, f.alice) == 0); // idempotent
    CHECK(f.p.rewards.claim_gateway(f.p.ledger, f.p.gateways, f.gw) == 10);
    CHECK(f.p.ledger.balance_of(f.dest, f.rgu, f.provider) == 10);
    CHECK(f.p.ledger.total_supply(f.dest, f.rgu) == 50);

    CHECK(f.p.rewards.conservation(f.p.pools).exact());
    CHECK_NOTHROW(audit_reward_conservation(f.p.rewards, f.p.pools));
}

TEST_CASE("two LPs split the stream pro-rata: 300/100 shares at 8/tick give 6 and 2") {
    BaseFixture f;
    f.make_pool(30, 100, f.alice, 900, 100); // shares(alice) = isqrt(90000) = 300
    f.fund_weth(f.bob, 300);
    f.fund(f.usdn, f.bob, 34);
    const auto res = f.p.pools.add_liquidity(f.p.ledger, PoolId{0}, f.bob, 300);
    REQUIRE(res.shares_minted == 100);

    f.p.rewards.set_emission(flat(10));
    f.p.rewards.set_lp_fraction_bps(8'000);
    f.p.rewards.accrue(f.p.pools, f.p.gateways, 0);

    CHECK(f.p.rewards.pending_lp(f.p.pools, PoolId{0}, f.alice) == 6);
    CHECK(f.p.rewards.pending_lp(f.p.pools, PoolId{0}, f.bob) == 2);

    // one account claiming must never move another's pending
    f.p.rewards.claim_lp(f.p.ledger, f.p.pools, PoolId{0}, f.bob);
    CHECK(f.p.rewards.pending_lp(f.p.pools, PoolId{0}, f.alice) == 6);
    CHECK(f.p.rewards.conservation(f.p.pools).exact());
}

TEST_CASE("empty pool routes its whole slice to the residual") {
    BaseFixture f;
    f.p.pools.create_pool(f.p.ledger, f.dest, f.weth, f.usdn, 30, 100);
    f.p.rewards.set_emission(flat(10));
    f.p.rewards.set_lp_fraction_bps(8'000);
    f.p.rewards.accrue(f.p.pools, f.p.gateways, 0);
    CHECK(f.p.rewards.acc_per_share(PoolId{0}) == 0);
    CHECK(f.p.rewards.residual_scaled() == u128(10) * REWARD_PRECISION);
    CHECK(f.p.rewards.conservation(f.p.pools).exact());
}

TEST_CASE("accrue rejects non-monotonic ticks") {
    BaseFixture f;
    f.make_pool(30, 100, f.alice, 4 * AMOUNT_ONE, AMOUNT_ONE);
    f.p.rewards.set_emission(flat(10));
    f.p.rewards.accrue(f.p.pools, f.p.gateways, 3);
    CHECK_THROWS_AS(f.p.rewards.accrue(f.p.pools, f.p.gateways, 3), Error);
    CHECK_THROWS_AS(f.p.rewards.accrue(f.p.pools, f.p.gateways, 2), Error);
    f.p.rewards.accrue(f.p.pools, f.p.gateways, 4);
}

TEST_CASE("mid-stream share change settles first, never retroactively") {
    BaseFixture f;
    f.make_pool(30, 100, f.alice, 900, 100); // alice 300 shares
    f.fund_weth(f.bob, 600);
    f.fund(f.usdn, f.bob, 80);
    f.p.pools.add_liquidity(f.p.ledger, PoolId{0}, f.bob, 300); // bob 100, total 400

    f.p.rewards.set_emission(flat(10));
    f.p.rewards.set_lp_fraction_bps(8'000);
    f.p.rewards.accrue(f.p.pools, f.p.gateways, 0); // A +6, B +2

    // bob doubles up: 100 -> 200 shares, total 500
    const auto res = f.p.pools.add_liquidity(f.p.ledger, PoolId{0}, f.bob, 300);
    REQUIRE(res.shares_minted == 100);
    CHECK(f.p.rewards.pending_lp(f.p.pools, PoolId{0}, f.bob) == 2); // settled, not lost

    f.p.rewards.accrue(f.p.pools, f.p.gateways, 1); // A +4.8, B +3.2
    CHECK(f.p.rewards.pending_lp(f.p.pools, PoolId{0}, f.alice) == 10);
    CHECK(f.p.rewards.pending_lp(f.p.pools, PoolId{0}, f.bob) == 5); // 5.2 floors

    // full exit still pays everything accrued up to the exit
    f.p.pools.remove_liquidity(f.p.ledger, PoolId{0}, f.bob, 200);
    f.p.rewards.accrue(f.p.pools, f.p.gateways, 2);
    CHECK(f.p.rewards.pending_lp(f.p.pools, PoolId{0}, f.bob) == 5); // no longer accruing
    CHECK(f.p.rewards.claim_lp(f.p.ledger, f.p.pools, PoolId{0}, f.bob) == 5);
    CHECK(f.p.rewards.pending_lp(f.p.pools, PoolId{0}, f.bob) == 0);
    CHECK(f.p.rewards.conservation(f.p.pools).exact());
}

TEST_CASE("gateway slice splits pro-rata to outstanding supply, remainder to residual") {
    BaseFixture f;
    f.p.gateways.set_multi_gateway(true);
    const GatewayId gw2 = f.p.gateways.register_gateway(f.p.ledger, f.origin, f.dest, f.eth,
                                                        f.weth, f.bob, 0, 0);
    f.make_pool(30, 100, f.alice, 900, 100); // outstanding(gw0) = 900 via genesis wrap
    f.p.gateways.genesis_wrap(f.p.ledger, gw2, f.bob, 300); // outstanding(gw2) = 300

    f.p.rewards.set_emission(flat(10));
    f.p.rewards.set_lp_fraction_bps(8'000);
    f.p.rewards.accrue(f.p.pools, f.p.gateways, 0);

    // G_p = 2: floor(2*900/1200) = 1 and floor(2*300/1200) = 0; 1 leaks to residual
    CHECK(f.p.rewards.pending_gateway(f.p.gateways, f.gw) == 1);
    CHECK(f.p.rewards.pending_gateway(f.p.gateways, gw2) == 0);
    // LP side: floor(8e12/300)*300 leaves 200 scaled units behind
    CHECK(f.p.rewards.residual_scaled() == u128(1) * REWARD_PRECISION + 200);
    CHECK(f.p.rewards.conservation(f.p.pools).exact());
}

TEST_CASE("pool whose token_w is not wrapped sends the gateway slice to its LPs") {
    BaseFixture f;
    // USDN/RGU pool: no gateway serves USDN, so the 20% reroutes to LPs
    f.fund(f.usdn, f.alice, 400);
    f.fund(f.rgu, f.alice, 100);
    const PoolId id = f.p.pools.create_pool(f.p.ledger, f.dest, f.usdn, f.rgu, 30, 100);
    f.p.pools.add_liquidity(f.p.ledger, id, f.alice, 400, 100); // 200 shares

    f.p.rewards.set_emission(flat(10));
    f.p.rewards.set_lp_fraction_bps(8'000);
    f.p.rewards.accrue(f.p.pools, f.p.gateways, 0);
    CHECK(f.p.rewards.pending_lp(f.p.pools, id, f.alice) == 10); // full slice
    CHECK(f.p.rewards.pending_gateway(f.p.gateways, f.gw) == 0);
    CHECK(f.p.rewards.conservation(f.p.pools).exact());
}

TEST_CASE("lock/unwrap churn that preserves outstanding leaves gateway rewards unchanged") {
    auto build = [] {
        auto f = std::make_unique<BaseFixture>();
        f->make_pool(30, 100, f->alice, 4 * AMOUNT_ONE, AMOUNT_ONE);
        f->fund_weth(f->bob, 1'000);
        f->fund(f->eth, f->bob, 1'000);
        f->p.rewards.set_emission(flat(10));
        f->p.rewards.set_lp_fraction_bps(8'000);
        return f;
    };
    auto calm = build();
    auto busy = build();
    for (Tick t = 0; t < 50; ++t) {
        busy->p.gateways.process_pending(busy->p.ledger, busy->gw, t);
        calm->p.gateways.process_pending(calm->p.ledger, calm->gw, t);
        // zero-latency round trip: outstanding is back where it started
        busy->p.gateways.lock(busy->p.ledger, busy->gw, busy->bob, 500, t);
        busy->p.gateways.process_pending(busy->p.ledger, busy->gw, t);
        busy->p.gateways.unwrap(busy->p.ledger, busy->gw, busy->bob, 500, t);
        busy->p.gateways.process_pending(busy->p.ledger, busy->gw, t);
        CHECK(busy->p.gateways.outstanding(busy->gw) == calm->p.gateways.outstanding(calm->gw));
        busy->p.rewards.accrue(busy->p.pools, busy->p.gateways, t);
        calm->p.rewards.accrue(calm->p.pools, calm->p.gateways, t);
    }
    CHECK(busy->p.rewards.pending_gateway(busy->p.gateways, busy->gw) ==
          calm->p.rewards.pending_gateway(calm->p.gateways, calm->gw));
}

TEST_CASE("emission decay floor-multiplies at period boundaries") {
    EmissionSchedule s{1'000, 97, 100, 10};
    s.validate();
    bigint rate = 1'000;
    for (std::uint64_t n = 0; n < 200; ++n) {
        CHECK(bigint(s.rate_for_period(n)) == rate);
        rate = rate * 97 / 100;
    }
    CHECK(s.rate_at(0) == 1'000);
    CHECK(s.rate_at(9) == 1'000);
    CHECK(s.rate_at(10) == 970);
    CHECK(s.rate_at(25) == 940); // floor(970 * 97/100)

    // a decaying rate eventually hits zero and stays there
    EmissionSchedule fast{5, 1, 2, 1};
    CHECK(fast.rate_for_period(0) == 5);
    CHECK(fast.rate_for_period(1) == 2);
    CHECK(fast.rate_for_period(2) == 1);
    CHECK(fast.rate_for_period(3) == 0);
    CHECK(fast.rate_for_period(1'000'000) == 0);

    CHECK_THROWS_AS((EmissionSchedule{1, 2, 1, 1}).validate(), Error); // increasing
    CHECK_THROWS_AS((EmissionSchedule{1, 1, 0, 1}).validate(), Error);
    CHECK_THROWS_AS((EmissionSchedule{1, 1, 1, 0}).validate(), Error);
}

TEST_CASE("incremental emission rate matches the from-scratch schedule") {
    BaseFixture f;
    const EmissionSchedule s{123'456, 9, 10, 7};
    f.p.rewards.set_emission(s);
    for (Tick t = 0; t < 300; t += (t % 3) + 1) {
        CHECK(f.p.rewards.emission_rate(t) == s.rate_at(t));
    }
    // replacing the schedule resets the cache even for earlier ticks
    f.p.rewards.set_emission(flat(42));
    CHECK(f.p.rewards.emission_rate(5) == 42);
}

TEST_CASE("conservation is exact through a random operation storm") {
    BaseFixture f;
    const PoolId id = f.make_pool(30, 100, f.alice, 123'457, 987'653);
    f.fund_weth(f.bob, 1'000'000);
    f.fund(f.usdn, f.bob, 1'000'000);
    f.p.rewards.set_emission(EmissionSchedule{997, 99, 100, 13});
    f.p.rewards.set_lp_fraction_bps(7'321);

    std::mt19937_64 rng(51);
    for (Tick t = 0; t < 400; ++t) {
        switch (rng() % 5) {
            case 0:
                try {
                    f.p.pools.add_liquidity(f.p.ledger, id, f.bob, 1 + rng() % 50'000);
                } catch (const Error&) {
                }
                break;
            case 1: {
                const std::uint64_t held = f.p.pools.pool(id).shares_of(f.bob);
                if (held > 0) f.p.pools.remove_liquidity(f.p.ledger, id, f.bob, 1 + rng() % held);
                break;
            }
            case 2:
                f.p.rewards.claim_lp(f.p.ledger, f.p.pools, id, f.bob);
                break;
            case 3:
                f.p.rewards.claim_gateway(f.p.ledger, f.p.gateways, f.gw);
                break;
            default:
                break;
        }
        f.p.rewards.accrue(f.p.pools, f.p.gateways, t);
        const auto report = f.p.rewards.conservation(f.p.pools);
        REQUIRE(report.exact());
    }
    f.p.rewards.claim_lp(f.p.ledger, f.p.pools, id, f.alice);
    f.p.rewards.claim_lp(f.p.ledger, f.p.pools, id, f.bob);
    f.p.rewards.claim_gateway(f.p.ledger, f.p.gateways, f.gw);
    CHECK(f.p.rewards.conservation(f.p.pools).exact());
    CHECK_NOTHROW(audit_all(f.p));
}
