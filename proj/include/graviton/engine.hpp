#pragma once

#include <map>
#include <string>
#include <vector>

#include "graviton/agents.hpp"
#include "graviton/metrics.hpp"
#include "graviton/protocol.hpp"
#include "graviton/scenario.hpp"

namespace graviton {

struct RunSummary {
    Tick ticks_run = 0;
    std::size_t audits = 0;
    Amount rgu_supply = 0;
    std::string emitted;
    std::string claimed;
    Amount burned = 0;
};

// Deterministic scenario engine. Construction performs genesis (registers
// every declared entity, funds balances, seeds pools); each step runs the
// fixed phase order:
//   (1) gateway queue processing, gateway-id order
//   (2) agents, ascending agent id, each on its own RNG stream
//   (3) reward accrual
//   (4) governance finalize, then apply, proposal-id order
//   (5) scheduled actions, file order within the tick
//   (6) metrics row
class Engine {
public:
    explicit Engine(Scenario sc);

    void step(MetricsWriter* sink);
    RunSummary run(MetricsWriter& sink);

    Protocol& protocol() { return protocol_; }
    const Protocol& protocol() const { return protocol_; }
    const Scenario& scenario() const { return sc_; }
    Tick now() const { return now_; }
    const std::vector<std::string>& columns() const { return columns_; }

    // Marked at feed prices (unpriced tokens count at 1); exact.
    Rational agent_wealth(std::uint32_t agent_index, Tick t);

private:
    void genesis();
    void build_columns();
    void audit_checked(const std::string& when);
    void execute_action(const ActionDecl& act, Tick now);
    std::vector<std::string> metrics_row(Tick t);
    Rational token_price(TokenId token, Tick t);

    Scenario sc_;
    Protocol protocol_;
    std::vector<RuntimeAgent> agents_;
    std::vector<FeedCursor> feeds_;
    std::vector<std::size_t> schedule_order_; // stable-sorted by tick
    std::size_t schedule_next_ = 0;
    std::map<std::uint32_t, std::uint32_t> feed_by_token_; // token id -> feed index
    std::vector<std::string> columns_;
    std::size_t metric_pools_ = 0;    // column counts are frozen at genesis
    std::size_t metric_gateways_ = 0;
    Tick now_ = 0;
};

} // namespace graviton
