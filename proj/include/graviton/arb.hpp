#pragma once

#include "graviton/amm.hpp"
#include "graviton/rational.hpp"

namespace graviton {

enum class ArbDirection { None, BuyW, SellW };

struct ArbPlan {
    ArbDirection direction = ArbDirection::None;
    Amount amount_in = 0;  // oT when buying wT, wT when selling
    Amount amount_out = 0; // what the swap would return right now
    Rational profit;       // in oT minimal units, marked at the external price
};

// Profit-maximizing swap against a pool at external price p_ext (oT per wT).
// Closed form sized to move the post-trade marginal price onto p_ext, then
// nudged ±1 and re-priced exactly so integer rounding never leaves a better
// neighbor on the table. Inside the fee band the answer is "don't trade".
ArbPlan optimal_arb_input(Amount reserve_w, Amount reserve_o, std::uint32_t fee_bps,
                          const Rational& p_ext);

} // namespace graviton
