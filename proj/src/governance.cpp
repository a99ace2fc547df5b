#include "graviton/governance.hpp"

namespace graviton {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

struct RguRef {
    TokenId token;
    ChainId chain;
};

RguRef rgu_ref(const Ledger& ledger) {
    auto rgu = ledger.rgu_token();
    check(rgu.has_value(), Errc::UnknownEntity, "no RGU token registered");
    return {*rgu, ledger.token(*rgu).chain};
}

} // namespace

std::string_view param_key_name(ParamKey k) {
    switch (k) {
        case ParamKey::EmissionE0: return "emission.e0";
        case ParamKey::EmissionDecayNum: return "emission.decay_num";
        case ParamKey::EmissionDecayDen: return "emission.decay_den";
        case ParamKey::EmissionPeriodTicks: return "emission.period_ticks";
        case ParamKey::LpFractionBps: return "rewards.lp_fraction_bps";
        case ParamKey::PoolWeight: return "pool.weight";
        case ParamKey::PoolFeeBps: return "pool.fee_bps";
        case ParamKey::GatewayUnwrapFeeRgu: return "gateway.unwrap_fee_rgu";
        case ParamKey::GovDepositMin: return "gov.deposit_min";
        case ParamKey::GovVotingPeriodTicks: return "gov.voting_period";
        case ParamKey::GovQuorumBps: return "gov.quorum_bps";
        case ParamKey::GovThresholdBps: return "gov.threshold_bps";
    }
    return "?";
}

std::optional<ParamKey> parse_param_key(std::string_view name) {
    for (int i = 0; i <= static_cast<int>(ParamKey::GovThresholdBps); ++i) {
        auto k = static_cast<ParamKey>(i);
        if (param_key_name(k) == name) return k;
    }
    return std::nullopt;
}

std::string_view proposal_status_name(ProposalStatus s) {
    switch (s) {
        case ProposalStatus::Active: return "active";
        case ProposalStatus::Passed: return "passed";
        case ProposalStatus::Failed: return "failed";
        case ProposalStatus::Applied: return "applied";
    }
    return "?";
}

void Governance::init_escrow(Ledger& ledger) {
    if (escrow_.has_value()) return;
    if (auto existing = ledger.find_account("@gov")) {
        escrow_ = *existing;
    } else {
        escrow_ = ledger.register_account("@gov");
    }
}

AccountId Governance::escrow_account() const {
    check(escrow_.has_value(), Errc::UnknownEntity, "governance escrow not initialized");
    return *escrow_;
}

void Governance::validate_payload(const Ledger& ledger, const PoolBook& pools,
                                  const GatewayBook& gateways,
                                  const ProposalPayload& payload) const {
    auto chain_ok = [&](ChainId c) { return c.value < ledger.chain_count(); };
    auto token_ok = [&](TokenId t) { return t.value < ledger.token_count(); };
    auto account_ok = [&](AccountId a) { return a.value < ledger.account_count(); };

    std::visit(
        overloaded{
            [&](const ParamChange& pc) {
                switch (pc.key) {
                    case ParamKey::EmissionE0:
                    case ParamKey::EmissionDecayNum:
                    case ParamKey::GovDepositMin:
                        break; // cross-field limits are enforced at application
                    case ParamKey::EmissionDecayDen:
                    case ParamKey::EmissionPeriodTicks:
                    case ParamKey::GovVotingPeriodTicks:
                        check(pc.value >= 1, Errc::InvalidPayload,
                              std::string(param_key_name(pc.key)) + " must be >= 1");
                        break;
                    case ParamKey::LpFractionBps:
                    case ParamKey::GovQuorumBps:
                    case ParamKey::GovThresholdBps:
                        check(pc.value <= BPS_DENOM, Errc::InvalidPayload,
                              std::string(param_key_name(pc.key)) + " above 10000");
                        break;
                    case ParamKey::PoolWeight:
                        check(pc.target < pools.size(), Errc::InvalidPayload, "unknown pool target");
                        check(pc.value <= MAX_POOL_WEIGHT, Errc::InvalidPayload,
                              "pool weight above cap");
                        break;
                    case ParamKey::PoolFeeBps:
                        check(pc.target < pools.size(), Errc::InvalidPayload, "unknown pool target");
                        check(pc.value <= MAX_POOL_FEE_BPS, Errc::InvalidPayload,
                              "pool fee above cap");
                        break;
                    case ParamKey::GatewayUnwrapFeeRgu:
                        check(pc.target < gateways.size(), Errc::InvalidPayload,
                              "unknown gateway target");
                        break;
                }
            },
            [&](const AddPoolSpec& s) {
                check(chain_ok(s.chain) && token_ok(s.token_w) && token_ok(s.token_o),
                      Errc::InvalidPayload, "pool spec references unknown entities");
                check(s.fee_bps <= MAX_POOL_FEE_BPS, Errc::InvalidPayload, "pool fee above cap");
                check(s.weight <= MAX_POOL_WEIGHT, Errc::InvalidPayload, "pool weight above cap");
            },
            [&](const AddTokenSpec& s) {
                check(chain_ok(s.chain), Errc::InvalidPayload, "token spec references unknown chain");
                check(!s.symbol.empty(), Errc::InvalidPayload, "token symbol empty");
                if (s.kind == TokenKind::Wrapped) {
                    check(s.underlying.has_value() && token_ok(*s.underlying), Errc::InvalidPayload,
                          "wrapped token needs a known underlying");
                }
            },
            [&](const AddGatewaySpec& s) {
                check(chain_ok(s.origin_chain) && chain_ok(s.dest_chain) && token_ok(s.token_t) &&
                          token_ok(s.token_wt) && account_ok(s.provider),
                      Errc::InvalidPayload, "gateway spec references unknown entities");
            },
            [&](const TextSpec& s) {
                check(!s.hash.empty(), Errc::InvalidPayload, "text proposal needs a hash");
            },
        },
        payload);
}

std::uint32_t Governance::submit(Ledger& ledger, const PoolBook& pools,
                                 const GatewayBook& gateways, AccountId proposer,
                                 ProposalPayload payload, Amount deposit, Tick now) {
    const AccountId escrow = escrow_account();
    validate_payload(ledger, pools, gateways, payload);
    check(deposit >= params_.deposit_min, Errc::DepositTooSmall, "deposit below minimum");
    const RguRef rgu = rgu_ref(ledger);
    check(ledger.balance_of(rgu.chain, rgu.token, proposer) >= deposit, Errc::InsufficientBalance,
          "proposer cannot cover the deposit");

    ledger.transfer(rgu.chain, rgu.token, proposer, escrow, deposit);
    Proposal p;
    p.id = static_cast<std::uint32_t>(proposals_.size());
    p.proposer = proposer;
    p.payload = std::move(payload);
    p.deposit = deposit;
    p.start_tick = now;
    p.end_tick = now + static_cast<Tick>(params_.voting_period);
    proposals_.push_back(std::move(p));
    return proposals_.back().id;
}

void Governance::vote(const Ledger& ledger, std::uint32_t id, AccountId voter, bool support,
                      Tick now) {
    Proposal& p = proposal_mut(id);
    check(p.status == ProposalStatus::Active && now < p.end_tick, Errc::NotActive,
          "proposal is not open for voting");
    check(!p.voters.count(voter.value), Errc::AlreadyVoted, "account already voted");
    const RguRef rgu = rgu_ref(ledger);
    const Amount weight = ledger.balance_of(rgu.chain, rgu.token, voter);
    check(weight > 0, Errc::ZeroWeight, "voter holds no RGU");

    if (support) {
        p.yes = checked_add(p.yes, weight);
    } else {
        p.no = checked_add(p.no, weight);
    }
    p.voters.insert(voter.value);
}

ProposalStatus Governance::finalize(Ledger& ledger, std::uint32_t id, Tick now) {
    Proposal& p = proposal_mut(id);
    check(p.status == ProposalStatus::Active, Errc::AlreadyFinalized, "proposal already finalized");
    check(now >= p.end_tick, Errc::TooEarly, "voting window still open");

    const RguRef rgu = rgu_ref(ledger);
    const Amount votes = checked_add(p.yes, p.no);
    const Amount supply = ledger.total_supply(rgu.chain, rgu.token);
    // turnout >= quorum  <=>  votes * 10000 >= quorum_bps * supply (exact)
    const bool quorum = votes > 0 && u128(votes) * BPS_DENOM >= u128(params_.quorum_bps) * supply;
    const bool threshold = votes > 0 && u128(p.yes) * BPS_DENOM >= u128(params_.threshold_bps) * votes;

    if (quorum && threshold) {
        ledger.transfer(rgu.chain, rgu.token, escrow_account(), p.proposer, p.deposit);
        p.status = ProposalStatus::Passed;
        p.apply_at = now + 1; // next tick's governance phase
    } else {
        ledger.burn(rgu.chain, rgu.token, escrow_account(), p.deposit);
        deposit_burned_ = checked_add(deposit_burned_, p.deposit);
        p.status = ProposalStatus::Failed;
    }
    return p.status;
}

void Governance::apply_one(Ledger& ledger, PoolBook& pools, GatewayBook& gateways,
                           RewardEngine& rewards, std::uint32_t id, Tick now) {
    Proposal& p = proposal_mut(id);
    check(p.status == ProposalStatus::Passed, Errc::NotActive, "proposal is not awaiting application");
    check(now >= p.apply_at, Errc::TooEarly, "application tick not reached");
    if (!p.apply_error.empty()) return; // terminally failed; never retried

    try {
        std::visit(
            overloaded{
                [&](const ParamChange& pc) {
                    EmissionSchedule s = rewards.emission_schedule();
                    GovParams gp = params_;
                    switch (pc.key) {
                        case ParamKey::EmissionE0:
                            s.e0 = pc.value;
                            rewards.set_emission(s);
                            break;
                        case ParamKey::EmissionDecayNum:
                            s.decay_num = pc.value;
                            rewards.set_emission(s);
                            break;
                        case ParamKey::EmissionDecayDen:
                            s.decay_den = pc.value;
                            rewards.set_emission(s);
                            break;
                        case ParamKey::EmissionPeriodTicks:
                            s.period_ticks = pc.value;
                            rewards.set_emission(s);
                            break;
                        case ParamKey::LpFractionBps:
                            rewards.set_lp_fraction_bps(static_cast<std::uint32_t>(pc.value));
                            break;
                        case ParamKey::PoolWeight:
                            pools.set_weight(PoolId{pc.target}, pc.value);
                            break;
                        case ParamKey::PoolFeeBps:
                            pools.set_fee_bps(PoolId{pc.target}, static_cast<std::uint32_t>(pc.value));
                            break;
                        case ParamKey::GatewayUnwrapFeeRgu:
                            gateways.set_unwrap_fee(GatewayId{pc.target}, pc.value);
                            break;
                        case ParamKey::GovDepositMin:
                            gp.deposit_min = pc.value;
                            set_params(gp);
                            break;
                        case ParamKey::GovVotingPeriodTicks:
                            gp.voting_period = pc.value;
                            set_params(gp);
                            break;
                        case ParamKey::GovQuorumBps:
                            gp.quorum_bps = static_cast<std::uint32_t>(pc.value);
                            set_params(gp);
                            break;
                        case ParamKey::GovThresholdBps:
                            gp.threshold_bps = static_cast<std::uint32_t>(pc.value);
                            set_params(gp);
                            break;
                    }
                },
                [&](const AddPoolSpec& s) {
                    pools.create_pool(ledger, s.chain, s.token_w, s.token_o, s.fee_bps, s.weight);
                },
                [&](const AddTokenSpec& s) {
                    ledger.register_token(s.chain, s.symbol, s.kind, s.underlying);
                },
                [&](const AddGatewaySpec& s) {
                    gateways.register_gateway(ledger, s.origin_chain, s.dest_chain, s.token_t,
                                              s.token_wt, s.provider, s.latency_ticks,
                                              s.unwrap_fee_rgu);
                },
                [&](const TextSpec&) {}, // marker only
            },
            p.payload);
        p.status = ProposalStatus::Applied;
    } catch (const Error& e) {
        // Recorded, not thrown: a bad payload must not halt the run.
        p.apply_error = e.what();
    }
}

void Governance::on_governance_phase(Ledger& ledger, PoolBook& pools, GatewayBook& gateways,
                                     RewardEngine& rewards, Tick now) {
    for (auto& p : proposals_) {
        if (p.status == ProposalStatus::Active && now >= p.end_tick) finalize(ledger, p.id, now);
    }
    for (auto& p : proposals_) {
        if (p.status == ProposalStatus::Passed && now >= p.apply_at && p.apply_error.empty()) {
            apply_one(ledger, pools, gateways, rewards, p.id, now);
        }
    }
}

const Proposal& Governance::proposal(std::uint32_t id) const {
    check(id < proposals_.size(), Errc::UnknownEntity, "unknown proposal id");
    return proposals_[id];
}

Proposal& Governance::proposal_mut(std::uint32_t id) {
    check(id < proposals_.size(), Errc::UnknownEntity, "unknown proposal id");
    return proposals_[id];
}

Amount Governance::active_deposit_total() const {
    Amount total = 0;
    for (const auto& p : proposals_) {
        if (p.status == ProposalStatus::Active) total = checked_add(total, p.deposit);
    }
    return total;
}

} // namespace graviton
