#include "graviton/arb.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace graviton {

namespace {

// Exact swap profit times the price denominator (sign-carrying): for BuyW,
// out_wT*pn - in_oT*pd; for SellW, out_oT*pd - in_wT*pn.
bigint profit_times_pd(ArbDirection dir, Amount amount_in, Amount reserve_w, Amount reserve_o,
                       std::uint32_t fee_bps, const bigint& pn, const bigint& pd) {
    if (dir == ArbDirection::BuyW) {
        const Amount out = swap_output(reserve_o, reserve_w, amount_in, fee_bps);
        return bigint(out) * pn - bigint(amount_in) * pd;
    }
    const Amount out = swap_output(reserve_w, reserve_o, amount_in, fee_bps);
    return bigint(out) * pd - bigint(amount_in) * pn;
}

Amount clamp_to_amount(const bigint& v) {
    if (v <= 0) return 0;
    static const bigint max_amount = bigint(std::numeric_limits<Amount>::max());
    return v > max_amount ? std::numeric_limits<Amount>::max() : v.convert_to<Amount>();
}

} // namespace

ArbPlan optimal_arb_input(Amount reserve_w, Amount reserve_o, std::uint32_t fee_bps,
                          const Rational& p_ext) {
    check(reserve_w > 0 && reserve_o > 0, Errc::EmptyPool, "cannot arbitrage an empty pool");
    check(p_ext.is_positive(), Errc::ValidationError, "external price must be positive");
    check(fee_bps <= MAX_POOL_FEE_BPS, Errc::FeeTooHigh, "fee_bps above cap");

    const bigint pn = p_ext.num();
    const bigint pd = p_ext.den();
    const bigint fn = BPS_DENOM - fee_bps;
    const bigint bw = reserve_w;
    const bigint bo = reserve_o;

    // Real-valued optimum for each direction; at most one is positive.
    // BuyW (spend oT):  in* = (sqrt(x*y*(1-phi)*p) - y) / (1-phi)
    // SellW (spend wT): in* = (sqrt(x*y*(1-phi)/p) - x) / (1-phi)
    ArbDirection dir = ArbDirection::None;
    bigint base = 0;
    const bigint buy_arg = bw * bo * fn * pn / (BPS_DENOM * pd);
    const bigint sell_arg = bw * bo * fn * pd / (BPS_DENOM * pn);
    const bigint s_buy = boost::multiprecision::sqrt(buy_arg);
    const bigint s_sell = boost::multiprecision::sqrt(sell_arg);
    if (s_buy > bo) {
        dir = ArbDirection::BuyW;
        base = (s_buy - bo) * BPS_DENOM / fn;
    } else if (s_sell > bw) {
        dir = ArbDirection::SellW;
        base = (s_sell - bw) * BPS_DENOM / fn;
    }
    if (dir == ArbDirection::None) return {};

    // The flooring above can land one off the integer optimum; check the
    // neighbors exactly and keep the most profitable (smallest input on ties).
    const Amount center = clamp_to_amount(base);
    Amount best_in = 0;
    bigint best_profit = 0;
    for (Amount cand : {center > 0 ? center - 1 : 0, center,
                        center < std::numeric_limits<Amount>::max() ? center + 1 : center}) {
        if (cand == 0) continue;
        const bigint pr = profit_times_pd(dir, cand, reserve_w, reserve_o, fee_bps, pn, pd);
        if (pr > best_profit) { // ties keep the earlier, smaller input
            best_profit = pr;
            best_in = cand;
        }
    }
    if (best_in == 0 || best_profit <= 0) return {};

    ArbPlan plan;
    plan.direction = dir;
    plan.amount_in = best_in;
    plan.amount_out = dir == ArbDirection::BuyW
                          ? swap_output(reserve_o, reserve_w, best_in, fee_bps)
                          : swap_output(reserve_w, reserve_o, best_in, fee_bps);
    plan.profit = Rational(best_profit, pd);
    return plan;
}

} // namespace graviton
