#include "graviton/amm.hpp"

namespace graviton {

Amount swap_output(Amount reserve_in, Amount reserve_out, Amount amount_in, std::uint32_t fee_bps) {
    check(reserve_in > 0 && reserve_out > 0, Errc::EmptyPool, "swap against empty reserves");
    check(amount_in > 0, Errc::ZeroAmount, "swap input must be positive");
    check(fee_bps < BPS_DENOM, Errc::FeeTooHigh, "fee must be below 100%");
    Amount in_eff = mul_div_floor(amount_in, BPS_DENOM - fee_bps, BPS_DENOM);
    u128 k = u128(reserve_in) * u128(reserve_out);
    u128 new_in = u128(reserve_in) + in_eff;
    u128 kept_out = ceil_div_u128(k, new_in);
    if (kept_out >= reserve_out) return 0;
    return reserve_out - static_cast<Amount>(kept_out);
}

PoolId PoolBook::create_pool(Ledger& ledger, ChainId chain, TokenId token_w, TokenId token_o,
                             std::uint32_t fee_bps, std::uint64_t weight) {
    check(token_w != token_o, Errc::DuplicatePair, "pool tokens must be distinct");
    check(fee_bps <= MAX_POOL_FEE_BPS, Errc::FeeTooHigh,
          "fee_bps " + std::to_string(fee_bps) + " above cap " + std::to_string(MAX_POOL_FEE_BPS));
    const TokenInfo& w = ledger.token(token_w);
    const TokenInfo& o = ledger.token(token_o);
    check(w.chain == chain && o.chain == chain, Errc::UnknownEntity,
          "pool tokens must live on the pool's chain");
    for (const auto& p : pools_) {
        bool same = p.chain == chain &&
                    ((p.token_w == token_w && p.token_o == token_o) ||
                     (p.token_w == token_o && p.token_o == token_w));
        check(!same, Errc::DuplicatePair,
              "pool for pair " + w.symbol + "/" + o.symbol + " already exists");
    }
    PoolId id{static_cast<std::uint32_t>(pools_.size())};
    Pool p;
    p.id = id;
    p.chain = chain;
    p.token_w = token_w;
    p.token_o = token_o;
    p.account = ledger.register_account("@pool:" + std::to_string(id.value));
    p.fee_bps = fee_bps;
    p.weight = weight;
    pools_.push_back(std::move(p));
    return id;
}

AddLiquidityResult PoolBook::add_liquidity(Ledger& ledger, PoolId id, AccountId account,
                                           Amount amount_w, Amount amount_o_if_empty) {
    Pool& p = pool_mut(id);
    AddLiquidityResult res;
    std::uint64_t minted = 0;
    Amount take_o = 0;
    if (p.empty()) {
        minted = narrow_to_amount(isqrt_u128(u128(amount_w) * u128(amount_o_if_empty)));
        take_o = amount_o_if_empty;
    } else {
        // price the deposit at current reserves; rounding favors the pool
        take_o = mul_div_ceil(amount_w, p.reserve_o, p.reserve_w);
        minted = mul_div_floor(amount_w, p.total_shares, p.reserve_w);
    }
    check(minted > 0, Errc::ZeroShares, "deposit too small to mint a share");
    check(ledger.balance_of(p.chain, p.token_w, account) >= amount_w, Errc::InsufficientBalance,
          "insufficient token_w for deposit");
    check(ledger.balance_of(p.chain, p.token_o, account) >= take_o, Errc::InsufficientBalance,
          "insufficient token_o for deposit");
    Amount new_rw = checked_add(p.reserve_w, amount_w);
    Amount new_ro = checked_add(p.reserve_o, take_o);
    std::uint64_t old_shares = p.shares_of(account);
    std::uint64_t new_shares = old_shares + minted;
    check(new_shares >= old_shares, Errc::Overflow, "share balance overflow");
    std::uint64_t new_total = p.total_shares + minted;
    check(new_total >= p.total_shares, Errc::Overflow, "total shares overflow");

    notify(id, account, old_shares, new_shares);
    ledger.transfer(p.chain, p.token_w, account, p.account, amount_w);
    ledger.transfer(p.chain, p.token_o, account, p.account, take_o);
    p.reserve_w = new_rw;
    p.reserve_o = new_ro;
    p.shares[account.value] = new_shares;
    p.total_shares = new_total;
    res.shares_minted = minted;
    res.amount_o_taken = take_o;
    return res;
}

RemoveLiquidityResult PoolBook::remove_liquidity(Ledger& ledger, PoolId id, AccountId account,
                                                 std::uint64_t shares) {
    Pool& p = pool_mut(id);
    std::uint64_t held = p.shares_of(account);
    check(shares <= held, Errc::InsufficientShares,
          "removing " + std::to_string(shares) + " shares, holds " + std::to_string(held));
    RemoveLiquidityResult res;
    if (shares == 0) return res;
    res.amount_w = mul_div_floor(shares, p.reserve_w, p.total_shares);
    res.amount_o = mul_div_floor(shares, p.reserve_o, p.total_shares);

    notify(id, account, held, held - shares);
    ledger.transfer(p.chain, p.token_w, p.account, account, res.amount_w);
    ledger.transfer(p.chain, p.token_o, p.account, account, res.amount_o);
    p.reserve_w -= res.amount_w;
    p.reserve_o -= res.amount_o;
    p.total_shares -= shares;
    if (held == shares)
        p.shares.erase(account.value);
    else
        p.shares[account.value] = held - shares;
    return res;
}

Amount PoolBook::swap_exact_in(Ledger& ledger, PoolId id, AccountId account, TokenId token_in,
                               Amount amount_in, Amount min_out) {
    Pool& p = pool_mut(id);
    check(token_in == p.token_w || token_in == p.token_o, Errc::UnknownEntity,
          "token not part of this pool");
    check(!p.empty(), Errc::EmptyPool, "swap against empty pool");
    check(amount_in > 0, Errc::ZeroAmount, "swap input must be positive");
    bool w_in = token_in == p.token_w;
    TokenId token_out = w_in ? p.token_o : p.token_w;
    Amount reserve_in = w_in ? p.reserve_w : p.reserve_o;
    Amount reserve_out = w_in ? p.reserve_o : p.reserve_w;
    Amount out = swap_output(reserve_in, reserve_out, amount_in, p.fee_bps);
    check(out >= min_out, Errc::SlippageExceeded,
          "output " + std::to_string(out) + " below min_out " + std::to_string(min_out));
    check(ledger.balance_of(p.chain, token_in, account) >= amount_in, Errc::InsufficientBalance,
          "insufficient input token for swap");
    Amount new_in_reserve = checked_add(reserve_in, amount_in);

    // the full input, fee included, enters reserves; fees accrue to LPs as k growth
    ledger.transfer(p.chain, token_in, account, p.account, amount_in);
    ledger.transfer(p.chain, token_out, p.account, account, out);
    if (w_in) {
        p.reserve_w = new_in_reserve;
        p.reserve_o = reserve_out - out;
    } else {
        p.reserve_o = new_in_reserve;
        p.reserve_w = reserve_out - out;
    }
    return out;
}

Amount PoolBook::quote_swap_out(PoolId id, TokenId token_in, Amount amount_in) const {
    const Pool& p = pool(id);
    check(token_in == p.token_w || token_in == p.token_o, Errc::UnknownEntity,
          "token not part of this pool");
    bool w_in = token_in == p.token_w;
    return swap_output(w_in ? p.reserve_w : p.reserve_o, w_in ? p.reserve_o : p.reserve_w,
                       amount_in, p.fee_bps);
}

Rational PoolBook::spot_price(PoolId id) const {
    const Pool& p = pool(id);
    check(!p.empty(), Errc::EmptyPool, "spot price of empty pool");
    return Rational(bigint(p.reserve_o), bigint(p.reserve_w));
}

Rational PoolBook::quote_slippage(PoolId id, Amount amount_in) const {
    const Pool& p = pool(id);
    check(!p.empty(), Errc::EmptyPool, "slippage quote on empty pool");
    check(amount_in > 0, Errc::ZeroAmount, "slippage quote needs a positive size");
    Amount out0 = swap_output(p.reserve_w, p.reserve_o, amount_in, 0);
    // 1 - out0 / (in * ro/rw)  ==  1 - out0*rw / (in*ro)
    return Rational(1) - Rational::from_u128(u128(out0) * p.reserve_w, u128(amount_in) * p.reserve_o);
}

const Pool& PoolBook::pool(PoolId id) const {
    check(id.value < pools_.size(), Errc::UnknownEntity, "unknown pool id");
    return pools_[id.value];
}

void PoolBook::set_fee_bps(PoolId id, std::uint32_t fee_bps) {
    check(fee_bps <= MAX_POOL_FEE_BPS, Errc::FeeTooHigh, "fee_bps above cap");
    pool_mut(id).fee_bps = fee_bps;
}

void PoolBook::set_weight(PoolId id, std::uint64_t weight) {
    pool_mut(id).weight = weight;
}

Pool& PoolBook::pool_mut(PoolId id) {
    check(id.value < pools_.size(), Errc::UnknownEntity, "unknown pool id");
    return pools_[id.value];
}

void PoolBook::notify(PoolId id, AccountId account, std::uint64_t old_s, std::uint64_t new_s) {
    if (observer_ != nullptr && old_s != new_s)
        observer_->on_shares_changed(id, account, old_s, new_s);
}

} // namespace graviton
