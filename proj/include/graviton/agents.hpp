#pragma once

#include <random>
#include <vector>

#include "graviton/feeds.hpp"
#include "graviton/protocol.hpp"
#include "graviton/scenario.hpp"

namespace graviton {

// An AgentDecl with names resolved to ids plus the agent's own RNG stream.
struct RuntimeAgent {
    std::uint32_t id = 0; // position in the scenario's agent list
    AgentKind kind = AgentKind::Arbitrageur;
    AccountId account;
    PoolId pool;
    std::uint32_t feed = 0;
    Amount min_profit = 0;
    std::uint64_t intensity_num = 0;
    std::uint64_t intensity_den = 1;
    Amount max_size = 0;
    Tick enter_tick = 0;
    Tick exit_tick = -1;
    Amount amount_w = 0;
    GatewayId gateway;
    Amount per_tick = 0;
    BridgePolicy policy = BridgePolicy::RoundTrip;
    std::mt19937_64 rng;
};

// One tick of behavior. Opportunistic agents (arbitrageur, trader, bridger)
// skip silently when a precondition fails; the scripted liquidity provider
// lets errors escape, which the engine reports as an agent error.
void agent_act(Protocol& p, std::vector<FeedCursor>& feeds, RuntimeAgent& agent, Tick now);

} // namespace graviton
