#pragma once

#include <string>
#include <vector>

#include "graviton/feeds.hpp"
#include "graviton/governance.hpp"
#include "graviton/rewards.hpp"

namespace graviton {

// Scenario declarations reference entities by name; ids are assigned when a
// run is built, in declaration order. Parsing is strict: unknown sections,
// unknown keys and malformed rows are rejected with line context.

struct TokenDecl {
    std::string chain;
    std::string symbol;
    TokenKind kind = TokenKind::Origin;
    std::string underlying_chain;  // Wrapped only
    std::string underlying_symbol; // Wrapped only
};

struct GatewayDecl {
    std::string origin_chain;
    std::string origin_symbol;
    std::string dest_chain;
    std::string wrapped_symbol;
    std::string provider;
    std::uint32_t latency_ticks = 0;
    Amount unwrap_fee_rgu = 0;
};

struct PoolDecl {
    std::string chain;
    std::string token_w;
    std::string token_o;
    std::uint32_t fee_bps = 30;
    std::uint64_t weight = 0;
    std::string seed_account; // empty: the pool starts empty
    Amount seed_w = 0;
    Amount seed_o = 0;
};

struct BalanceDecl {
    std::string account;
    std::string chain;
    std::string token;
    Amount amount = 0;
};

enum class AgentKind { Arbitrageur, RandomTrader, LiquidityProvider, Bridger };
enum class BridgePolicy { Lock, Unwrap, Alternate, RoundTrip };

struct AgentDecl {
    AgentKind kind = AgentKind::Arbitrageur;
    std::string account;
    // arbitrageur / trader / lp
    std::uint32_t pool = 0;
    // arbitrageur
    std::uint32_t feed = 0;
    Amount min_profit = 0;
    // trader: trades with probability intensity_num/intensity_den per tick
    std::uint64_t intensity_num = 0;
    std::uint64_t intensity_den = 1;
    Amount max_size = 0;
    // lp
    Tick enter_tick = 0;
    Tick exit_tick = -1; // -1: never exits
    Amount amount_w = 0;
    // bridger
    std::uint32_t gateway = 0;
    Amount per_tick = 0;
    BridgePolicy policy = BridgePolicy::RoundTrip;
};

struct ActionDecl {
    enum class Type { Submit, Vote, ClaimLp, ClaimGw };
    Tick tick = 0;
    Type type = Type::Submit;
    std::string actor;
    // submit
    Amount deposit = 0;
    std::string kind;              // param | text | add_pool | add_token | add_gateway
    std::vector<std::string> args; // kind-specific; names resolved when executed
    // vote
    std::uint32_t proposal = 0;
    bool support = false;
    // claim_lp (pool id) / claim_gw (gateway id)
    std::uint32_t target = 0;
};

struct RunConfig {
    Tick ticks = 0;
    std::uint64_t seed = 0;
    std::uint64_t audit_every = 1;
    Amount slippage_ref = AMOUNT_ONE; // trade size used for the slippage metric
};

struct Scenario {
    std::vector<std::string> chains;
    std::vector<TokenDecl> tokens;
    std::vector<GatewayDecl> gateways;
    std::vector<PoolDecl> pools;
    std::vector<BalanceDecl> balances;
    EmissionSchedule emission{};
    std::uint32_t lp_fraction_bps = 10'000;
    GovParams gov{};
    std::vector<AgentDecl> agents;
    std::vector<FeedSpec> feeds;
    std::vector<ActionDecl> schedule;
    RunConfig run{};
};

// Parses scenario text; throws Error(ValidationError) with line context.
Scenario parse_scenario(const std::string& text);

// Reads and parses a file; throws Error(IoError) when unreadable.
Scenario load_scenario(const std::string& path);

// Cross-reference and range validation over the declarations. parse_scenario
// already calls this; it is exposed for programmatically built scenarios.
void validate_scenario(const Scenario& sc);

} // namespace graviton
