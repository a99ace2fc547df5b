#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "graviton/amounts.hpp"
#include "graviton/rational.hpp"
#include "graviton/rng.hpp"

namespace graviton {

enum class FeedKind { Constant, Piecewise, GeometricWalk };

// External market price series for a pool's wrapped token, in oT per wT.
// Prices are micro-quantized (6 decimals) so every series stays in small
// exact integers; the walk multiplies by (10000 +- step_bps)/10000 per tick
// with a fair coin from the feed's own stream.
struct FeedSpec {
    FeedKind kind = FeedKind::Constant;
    Amount p0 = AMOUNT_ONE;                       // Constant / GeometricWalk start
    std::vector<std::pair<Tick, Amount>> points;  // Piecewise steps (tick, micro price)
    std::uint32_t step_bps = 0;                   // GeometricWalk
    std::optional<std::uint32_t> pool;            // pool whose token_w this feed prices

    void validate() const;
};

// Sequential reader; micro_value must be called with non-decreasing ticks.
class FeedCursor {
public:
    FeedCursor(const FeedSpec& spec, std::uint64_t master_seed, std::uint32_t feed_index);

    Amount micro_value(Tick t);
    Rational value(Tick t) { return Rational(bigint(micro_value(t)), bigint(AMOUNT_ONE)); }
    const FeedSpec& spec() const { return spec_; }

private:
    FeedSpec spec_;
    std::mt19937_64 rng_;
    Tick cur_tick_ = 0;
    Amount cur_value_ = 0;
    std::size_t next_point_ = 0;
};

} // namespace graviton
