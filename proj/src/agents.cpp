#include "graviton/agents.hpp"

#include "graviton/arb.hpp"
#include "graviton/rng.hpp"

namespace graviton {

namespace {

void act_arbitrageur(Protocol& p, std::vector<FeedCursor>& feeds, RuntimeAgent& a, Tick now) {
    const Pool& pool = p.pools.pool(a.pool);
    if (pool.empty()) return;
    const Rational px = feeds[a.feed].value(now);
    const ArbPlan plan = optimal_arb_input(pool.reserve_w, pool.reserve_o, pool.fee_bps, px);
    if (plan.direction == ArbDirection::None) return;
    if (plan.profit < Rational(static_cast<std::int64_t>(a.min_profit))) return;

    const TokenId token_in = plan.direction == ArbDirection::BuyW ? pool.token_o : pool.token_w;
    if (p.ledger.balance_of(pool.chain, token_in, a.account) < plan.amount_in) return;
    p.pools.swap_exact_in(p.ledger, a.pool, a.account, token_in, plan.amount_in, 0);
}

void act_trader(Protocol& p, RuntimeAgent& a, Tick) {
    if (a.intensity_num == 0) return;
    if (uniform_below(a.rng, a.intensity_den) >= a.intensity_num) return;
    const bool sell_w = uniform_below(a.rng, 2) == 1;
    const Amount size = 1 + uniform_below(a.rng, a.max_size);

    const Pool& pool = p.pools.pool(a.pool);
    if (pool.empty()) return;
    const TokenId token_in = sell_w ? pool.token_w : pool.token_o;
    if (p.ledger.balance_of(pool.chain, token_in, a.account) < size) return;
    p.pools.swap_exact_in(p.ledger, a.pool, a.account, token_in, size, 0);
}

void act_lp(Protocol& p, RuntimeAgent& a, Tick now) {
    if (now == a.enter_tick) {
        // Scripted: failures (empty pool, missing funds) abort the run.
        p.pools.add_liquidity(p.ledger, a.pool, a.account, a.amount_w);
    }
    if (now == a.exit_tick) {
        const std::uint64_t s = p.pools.pool(a.pool).shares_of(a.account);
        if (s > 0) p.pools.remove_liquidity(p.ledger, a.pool, a.account, s);
    }
}

void act_bridger(Protocol& p, RuntimeAgent& a, Tick now) {
    const Gateway& g = p.gateways.gateway(a.gateway);
    const Amount x = a.per_tick;

    auto can_lock = [&] { return p.ledger.balance_of(g.origin_chain, g.token_t, a.account) >= x; };
    auto can_unwrap = [&] {
        if (p.ledger.balance_of(g.dest_chain, g.token_wt, a.account) < x) return false;
        if (g.outstanding_wt < x) return false;
        if (g.unwrap_fee_rgu > 0) {
            auto rgu = p.ledger.rgu_token();
            if (!rgu) return false;
            if (p.ledger.balance_of(p.ledger.token(*rgu).chain, *rgu, a.account) < g.unwrap_fee_rgu)
                return false;
        }
        return true;
    };

    switch (a.policy) {
        case BridgePolicy::Lock:
            if (can_lock()) p.gateways.lock(p.ledger, a.gateway, a.account, x, now);
            break;
        case BridgePolicy::Unwrap:
            if (can_unwrap()) p.gateways.unwrap(p.ledger, a.gateway, a.account, x, now);
            break;
        case BridgePolicy::Alternate:
            if (now % 2 == 0) {
                if (can_lock()) p.gateways.lock(p.ledger, a.gateway, a.account, x, now);
            } else {
                if (can_unwrap()) p.gateways.unwrap(p.ledger, a.gateway, a.account, x, now);
            }
            break;
        case BridgePolicy::RoundTrip:
            // Unwrap whatever matured from last tick's lock, then lock again:
            // pure churn that leaves outstanding supply at each tick boundary
            // exactly where it started.
            if (can_unwrap()) p.gateways.unwrap(p.ledger, a.gateway, a.account, x, now);
            if (can_lock()) p.gateways.lock(p.ledger, a.gateway, a.account, x, now);
            break;
    }
}

} // namespace

void agent_act(Protocol& p, std::vector<FeedCursor>& feeds, RuntimeAgent& agent, Tick now) {
    switch (agent.kind) {
        case AgentKind::Arbitrageur: act_arbitrageur(p, feeds, agent, now); break;
        case AgentKind::RandomTrader: act_trader(p, agent, now); break;
        case AgentKind::LiquidityProvider: act_lp(p, agent, now); break;
        case AgentKind::Bridger: act_bridger(p, agent, now); break;
    }
}

} // namespace graviton
