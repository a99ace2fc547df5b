#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "graviton/amm.hpp"
#include "graviton/gateway.hpp"
#include "graviton/ledger.hpp"
#include "graviton/rewards.hpp"

namespace graviton {

// Whitelisted live-tunable parameters. Each key has a static validity range
// checked at submission; cross-field constraints (e.g. decay_num <= decay_den)
// are re-checked at application against the state in force then.
enum class ParamKey {
    EmissionE0,
    EmissionDecayNum,
    EmissionDecayDen,
    EmissionPeriodTicks,
    LpFractionBps,
    PoolWeight,          // target = pool id
    PoolFeeBps,          // target = pool id
    GatewayUnwrapFeeRgu, // target = gateway id
    GovDepositMin,
    GovVotingPeriodTicks,
    GovQuorumBps,
    GovThresholdBps,
};

std::string_view param_key_name(ParamKey k);
std::optional<ParamKey> parse_param_key(std::string_view name);

// Reward weights feed multiplications against the per-tick emission; keeping
// them modest makes that arithmetic provably overflow-free.
inline constexpr std::uint64_t MAX_POOL_WEIGHT = 1'000'000'000;

struct ParamChange {
    ParamKey key = ParamKey::LpFractionBps;
    std::uint32_t target = 0; // pool / gateway id where the key needs one
    std::uint64_t value = 0;
};

struct AddTokenSpec {
    ChainId chain;
    std::string symbol;
    TokenKind kind = TokenKind::Origin;
    std::optional<TokenId> underlying;
};

struct AddPoolSpec {
    ChainId chain;
    TokenId token_w;
    TokenId token_o;
    std::uint32_t fee_bps = 30;
    std::uint64_t weight = 0;
};

struct AddGatewaySpec {
    ChainId origin_chain;
    ChainId dest_chain;
    TokenId token_t;
    TokenId token_wt;
    AccountId provider;
    std::uint32_t latency_ticks = 0;
    Amount unwrap_fee_rgu = 0;
};

struct TextSpec {
    std::string hash;
};

using ProposalPayload = std::variant<ParamChange, AddPoolSpec, AddTokenSpec, AddGatewaySpec, TextSpec>;

struct GovParams {
    Amount deposit_min = 0;
    std::uint64_t voting_period = 1; // ticks
    std::uint32_t quorum_bps = 0;
    std::uint32_t threshold_bps = 5'000;

    void validate() const {
        check(voting_period >= 1, Errc::ValidationError, "voting_period must be >= 1");
        check(quorum_bps <= BPS_DENOM, Errc::ValidationError, "quorum_bps above 10000");
        check(threshold_bps <= BPS_DENOM, Errc::ValidationError, "threshold_bps above 10000");
    }

    bool operator==(const GovParams&) const = default;
};

enum class ProposalStatus { Active, Passed, Failed, Applied };

std::string_view proposal_status_name(ProposalStatus s);

struct Proposal {
    std::uint32_t id = 0;
    AccountId proposer;
    ProposalPayload payload;
    Amount deposit = 0;
    Tick start_tick = 0;
    Tick end_tick = 0; // exclusive: voting allowed while now < end_tick
    Amount yes = 0;
    Amount no = 0;
    std::set<std::uint32_t> voters;
    ProposalStatus status = ProposalStatus::Active;
    Tick apply_at = -1;      // set when Passed
    std::string apply_error; // non-empty once an application attempt failed
};

// GIP lifecycle: RGU-paid submission, balance-weighted one-shot voting,
// quorum/threshold finalization with exact rational comparisons, burn of
// failed deposits, and deferred application of passed payloads.
class Governance {
public:
    explicit Governance(GovParams params = {}) {
        params.validate();
        params_ = params;
    }

    // Registers the escrow account once; must run before the first submit.
    void init_escrow(Ledger& ledger);
    AccountId escrow_account() const;
    bool escrow_initialized() const { return escrow_.has_value(); }

    const GovParams& params() const { return params_; }
    void set_params(GovParams p) {
        p.validate();
        params_ = p;
    }

    std::uint32_t submit(Ledger& ledger, const PoolBook& pools, const GatewayBook& gateways,
                         AccountId proposer, ProposalPayload payload, Amount deposit, Tick now);

    void vote(const Ledger& ledger, std::uint32_t id, AccountId voter, bool support, Tick now);

    ProposalStatus finalize(Ledger& ledger, std::uint32_t id, Tick now);

    // Applies one Passed proposal whose application tick has been reached.
    // A failure is recorded on the proposal, never thrown: the run goes on.
    void apply_one(Ledger& ledger, PoolBook& pools, GatewayBook& gateways, RewardEngine& rewards,
                   std::uint32_t id, Tick now);

    // Engine phase hook: finalize every Active proposal past its window,
    // then apply every due Passed proposal, both in proposal-id order.
    void on_governance_phase(Ledger& ledger, PoolBook& pools, GatewayBook& gateways,
                             RewardEngine& rewards, Tick now);

    // Static payload validation (ranges, target existence, well-formedness).
    void validate_payload(const Ledger& ledger, const PoolBook& pools,
                          const GatewayBook& gateways, const ProposalPayload& payload) const;

    const Proposal& proposal(std::uint32_t id) const;
    std::size_t size() const { return proposals_.size(); }
    Amount deposit_burned_total() const { return deposit_burned_; }
    Amount active_deposit_total() const;

private:
    Proposal& proposal_mut(std::uint32_t id);

    GovParams params_;
    std::optional<AccountId> escrow_;
    std::vector<Proposal> proposals_;
    Amount deposit_burned_ = 0;
};

} // namespace graviton
