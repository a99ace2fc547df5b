#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "graviton/ledger.hpp"
#include "graviton/rational.hpp"

namespace graviton {

inline constexpr std::uint32_t MAX_POOL_FEE_BPS = 1'000;

// Constant-product pair (token_w, token_o). Reserves are mirrored 1:1 by the
// pool account's ledger balances; Sum(shares) == total_shares; a pool is
// either empty (all three zero) or fully initialized.
struct Pool {
    PoolId id;
    ChainId chain;
    TokenId token_w; // wrapped side (Origin kind allowed, e.g. an RGU/oT pool)
    TokenId token_o;
    AccountId account; // holds the reserves on the ledger
    Amount reserve_w = 0;
    Amount reserve_o = 0;
    std::uint64_t total_shares = 0;
    std::map<std::uint32_t, std::uint64_t> shares; // account -> LP shares
    std::uint32_t fee_bps = 30;
    std::uint64_t weight = 0; // reward weight

    bool empty() const { return total_shares == 0; }
    std::uint64_t shares_of(AccountId a) const {
        auto it = shares.find(a.value);
        return it == shares.end() ? 0 : it->second;
    }

    bool operator==(const Pool&) const = default;
};

// Reward accounting observes share changes through this hook; it fires
// before the share registry is touched so settlement sees the old amount.
class SharesObserver {
public:
    virtual ~SharesObserver() = default;
    virtual void on_shares_changed(PoolId pool, AccountId account,
                                   std::uint64_t old_shares, std::uint64_t new_shares) = 0;
};

struct AddLiquidityResult {
    std::uint64_t shares_minted = 0;
    Amount amount_o_taken = 0;
};

struct RemoveLiquidityResult {
    Amount amount_w = 0;
    Amount amount_o = 0;
};

class PoolBook {
public:
    PoolId create_pool(Ledger& ledger, ChainId chain, TokenId token_w, TokenId token_o,
                       std::uint32_t fee_bps, std::uint64_t weight);

    // Non-empty pool: deposits amount_w plus the implied amount of token_o at
    // the current pool price (rounded in the pool's favor); amount_o_if_empty
    // is ignored. Empty pool: both deposit legs are taken as given and shares
    // start at floor(isqrt(w*o)).
    AddLiquidityResult add_liquidity(Ledger& ledger, PoolId pool, AccountId account,
                                     Amount amount_w, Amount amount_o_if_empty = 0);

    RemoveLiquidityResult remove_liquidity(Ledger& ledger, PoolId pool, AccountId account,
                                           std::uint64_t shares);

    Amount swap_exact_in(Ledger& ledger, PoolId pool, AccountId account, TokenId token_in,
                         Amount amount_in, Amount min_out);

    // Pure preview of swap_exact_in's output for the current reserves.
    Amount quote_swap_out(PoolId pool, TokenId token_in, Amount amount_in) const;

    // oT per wT, exact.
    Rational spot_price(PoolId pool) const;

    // 1 - out_at_fee_0 / (amount_in * spot); isolates price impact from fee.
    Rational quote_slippage(PoolId pool, Amount amount_in) const;

    const Pool& pool(PoolId id) const;
    std::size_t size() const { return pools_.size(); }
    void set_observer(SharesObserver* obs) { observer_ = obs; }
    void set_fee_bps(PoolId id, std::uint32_t fee_bps);
    void set_weight(PoolId id, std::uint64_t weight);

    bool operator==(const PoolBook& o) const { return pools_ == o.pools_; }

private:
    Pool& pool_mut(PoolId id);
    void notify(PoolId id, AccountId account, std::uint64_t old_s, std::uint64_t new_s);

    std::vector<Pool> pools_;
    SharesObserver* observer_ = nullptr;
};

// Raw constant-product output: y - ceil(x*y / (x + floor(in*(10000-fee)/10000))).
// Exposed for direct use by the arbitrage sizing code and tests.
Amount swap_output(Amount reserve_in, Amount reserve_out, Amount amount_in, std::uint32_t fee_bps);

} // namespace graviton
