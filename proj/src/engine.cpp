#include "graviton/engine.hpp"

#include <algorithm>
#include <charconv>

#include "graviton/rng.hpp"

namespace graviton {

namespace {

[[noreturn]] void genesis_fail(const std::string& msg) {
    throw Error(Errc::ValidationError, "genesis: " + msg);
}

std::uint64_t action_u64(const std::string& s, const std::string& what) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    check(ec == std::errc() && p == s.data() + s.size(), Errc::AgentError,
          what + ": bad integer '" + s + "'");
    return v;
}

Amount action_amount(const std::string& s, const std::string& what) {
    auto v = parse_amount(s);
    check(v.has_value(), Errc::AgentError, what + ": bad amount '" + s + "'");
    return *v;
}

} // namespace

Engine::Engine(Scenario sc) : sc_(std::move(sc)) {
    validate_scenario(sc_);
    try {
        genesis();
    } catch (const Error& e) {
        if (e.code() == Errc::ValidationError || e.code() == Errc::IoError) throw;
        genesis_fail(e.what());
    }
    build_columns();
}

void Engine::genesis() {
    Ledger& ledger = protocol_.ledger;

    for (const auto& name : sc_.chains) ledger.register_chain(name);

    auto rchain = [&](const std::string& name) {
        auto c = ledger.find_chain(name);
        if (!c) genesis_fail("unknown chain '" + name + "'");
        return *c;
    };
    auto rtoken = [&](const std::string& chain, const std::string& symbol) {
        auto t = ledger.find_token(rchain(chain), symbol);
        if (!t) genesis_fail("unknown token " + chain + "/" + symbol);
        return *t;
    };
    auto ensure_account = [&](const std::string& name) {
        auto a = ledger.find_account(name);
        return a ? *a : ledger.register_account(name);
    };

    // Agents and actors are ordinary accounts, registered in a fixed order:
    // providers, pool seeders, balance holders, agents, schedule actors.
    for (const auto& g : sc_.gateways) ensure_account(g.provider);
    for (const auto& p : sc_.pools)
        if (!p.seed_account.empty()) ensure_account(p.seed_account);
    for (const auto& b : sc_.balances) ensure_account(b.account);
    for (const auto& a : sc_.agents) ensure_account(a.account);
    for (const auto& act : sc_.schedule) ensure_account(act.actor);

    for (const auto& t : sc_.tokens) {
        std::optional<TokenId> underlying;
        if (t.kind == TokenKind::Wrapped) underlying = rtoken(t.underlying_chain, t.underlying_symbol);
        ledger.register_token(rchain(t.chain), t.symbol, t.kind, underlying);
    }

    protocol_.governance.set_params(sc_.gov);
    protocol_.governance.init_escrow(ledger);

    // Several gateways may serve one wrapped token only when the scenario
    // says so explicitly.
    std::map<std::string, int> wrapped_uses;
    for (const auto& g : sc_.gateways)
        if (++wrapped_uses[g.dest_chain + "/" + g.wrapped_symbol] > 1)
            protocol_.gateways.set_multi_gateway(true);
    for (const auto& g : sc_.gateways) {
        protocol_.gateways.register_gateway(ledger, rchain(g.origin_chain), rchain(g.dest_chain),
                                            rtoken(g.origin_chain, g.origin_symbol),
                                            rtoken(g.dest_chain, g.wrapped_symbol),
                                            *ledger.find_account(g.provider), g.latency_ticks,
                                            g.unwrap_fee_rgu);
    }

    for (const auto& b : sc_.balances) {
        if (b.amount == 0) continue;
        const TokenId token = rtoken(b.chain, b.token);
        const AccountId account = *ledger.find_account(b.account);
        if (ledger.token(token).kind == TokenKind::Wrapped) {
            // Wrapped balances enter through a gateway so collateral exists.
            const auto gws = protocol_.gateways.gateways_for_token(token);
            if (gws.empty()) genesis_fail("no gateway collateralizes " + b.token);
            protocol_.gateways.genesis_wrap(ledger, gws.front(), account, b.amount);
        } else {
            ledger.mint(ledger.token(token).chain, token, account, b.amount);
        }
    }

    for (const auto& p : sc_.pools) {
        const PoolId id = protocol_.pools.create_pool(ledger, rchain(p.chain),
                                                      rtoken(p.chain, p.token_w),
                                                      rtoken(p.chain, p.token_o), p.fee_bps, p.weight);
        if (!p.seed_account.empty()) {
            protocol_.pools.add_liquidity(ledger, id, *ledger.find_account(p.seed_account), p.seed_w,
                                          p.seed_o);
        }
    }

    protocol_.rewards.set_emission(sc_.emission);
    protocol_.rewards.set_lp_fraction_bps(sc_.lp_fraction_bps);

    for (std::uint32_t i = 0; i < sc_.feeds.size(); ++i) {
        feeds_.emplace_back(sc_.feeds[i], sc_.run.seed, i);
        if (sc_.feeds[i].pool) {
            const Pool& pool = protocol_.pools.pool(PoolId{*sc_.feeds[i].pool});
            feed_by_token_.emplace(pool.token_w.value, i);
        }
    }
    // An origin token inherits the price of a wrapped token backed by it.
    for (std::uint32_t i = 0; i < ledger.token_count(); ++i) {
        const TokenInfo& info = ledger.token(TokenId{i});
        if (info.kind != TokenKind::Wrapped) continue;
        auto it = feed_by_token_.find(i);
        if (it != feed_by_token_.end()) feed_by_token_.emplace(info.underlying.value, it->second);
    }

    for (std::uint32_t i = 0; i < sc_.agents.size(); ++i) {
        const AgentDecl& d = sc_.agents[i];
        RuntimeAgent a;
        a.id = i;
        a.kind = d.kind;
        a.account = *ledger.find_account(d.account);
        a.pool = PoolId{d.pool};
        a.feed = d.feed;
        a.min_profit = d.min_profit;
        a.intensity_num = d.intensity_num;
        a.intensity_den = d.intensity_den;
        a.max_size = d.max_size;
        a.enter_tick = d.enter_tick;
        a.exit_tick = d.exit_tick;
        a.amount_w = d.amount_w;
        a.gateway = GatewayId{d.gateway};
        a.per_tick = d.per_tick;
        a.policy = d.policy;
        a.rng = make_stream(sc_.run.seed, StreamDomain::Agent, i);
        agents_.push_back(std::move(a));
    }

    schedule_order_.resize(sc_.schedule.size());
    for (std::size_t i = 0; i < schedule_order_.size(); ++i) schedule_order_[i] = i;
    std::stable_sort(schedule_order_.begin(), schedule_order_.end(),
                     [&](std::size_t a, std::size_t b) {
                         return sc_.schedule[a].tick < sc_.schedule[b].tick;
                     });

    metric_pools_ = protocol_.pools.size();
    metric_gateways_ = protocol_.gateways.size();
}

void Engine::build_columns() {
    columns_.clear();
    columns_.push_back("tick");
    for (std::size_t i = 0; i < metric_pools_; ++i) {
        const std::string p = "pool" + std::to_string(i);
        columns_.push_back(p + "_reserve_w");
        columns_.push_back(p + "_reserve_o");
        columns_.push_back(p + "_spot");
        columns_.push_back(p + "_slippage");
    }
    for (std::size_t i = 0; i < metric_gateways_; ++i) {
        const std::string g = "gw" + std::to_string(i);
        columns_.push_back(g + "_escrow");
        columns_.push_back(g + "_outstanding");
    }
    columns_.push_back("rgu_supply");
    columns_.push_back("rgu_emitted");
    columns_.push_back("rgu_claimed");
    columns_.push_back("rgu_burned");
    for (std::size_t i = 0; i < agents_.size(); ++i) {
        columns_.push_back("agent" + std::to_string(i) + "_wealth");
    }
}

Rational Engine::token_price(TokenId token, Tick t) {
    auto it = feed_by_token_.find(token.value);
    if (it == feed_by_token_.end()) return Rational(1);
    return feeds_[it->second].value(t);
}

Rational Engine::agent_wealth(std::uint32_t agent_index, Tick t) {
    check(agent_index < agents_.size(), Errc::UnknownEntity, "unknown agent index");
    const AccountId account = agents_[agent_index].account;
    const Ledger& ledger = protocol_.ledger;

    Rational wealth(0);
    for (std::uint32_t i = 0; i < ledger.token_count(); ++i) {
        const TokenInfo& info = ledger.token(TokenId{i});
        const Amount bal = ledger.balance_of(info.chain, TokenId{i}, account);
        if (bal > 0) wealth = wealth + Rational(bigint(bal), 1) * token_price(TokenId{i}, t);
    }
    for (std::uint32_t i = 0; i < protocol_.pools.size(); ++i) {
        const Pool& p = protocol_.pools.pool(PoolId{i});
        const std::uint64_t s = p.shares_of(account);
        if (s == 0) continue;
        const Rational reserves = Rational(bigint(p.reserve_w), 1) * token_price(p.token_w, t) +
                                  Rational(bigint(p.reserve_o), 1) * token_price(p.token_o, t);
        wealth = wealth + reserves * Rational(bigint(s), bigint(p.total_shares));
    }
    return wealth;
}

std::vector<std::string> Engine::metrics_row(Tick t) {
    std::vector<std::string> cells;
    cells.reserve(columns_.size());
    cells.push_back(std::to_string(t));

    for (std::size_t i = 0; i < metric_pools_; ++i) {
        const Pool& p = protocol_.pools.pool(PoolId{std::uint32_t(i)});
        cells.push_back(std::to_string(p.reserve_w));
        cells.push_back(std::to_string(p.reserve_o));
        if (p.empty()) {
            cells.push_back("0/1");
            cells.push_back("0/1");
        } else {
            cells.push_back(protocol_.pools.spot_price(p.id).str());
            cells.push_back(protocol_.pools.quote_slippage(p.id, sc_.run.slippage_ref).str());
        }
    }
    for (std::size_t i = 0; i < metric_gateways_; ++i) {
        const GatewayId id{std::uint32_t(i)};
        cells.push_back(std::to_string(protocol_.gateways.escrow(protocol_.ledger, id)));
        cells.push_back(std::to_string(protocol_.gateways.outstanding(id)));
    }

    const auto rgu = protocol_.ledger.rgu_token();
    const Amount supply =
        rgu ? protocol_.ledger.total_supply(protocol_.ledger.token(*rgu).chain, *rgu) : 0;
    cells.push_back(std::to_string(supply));
    cells.push_back(u128_to_string(protocol_.rewards.emitted_total()));
    cells.push_back(u128_to_string(protocol_.rewards.claimed_lp_total() +
                                   protocol_.rewards.claimed_gateway_total()));
    cells.push_back(std::to_string(protocol_.rgu_burned_total()));

    for (std::uint32_t i = 0; i < agents_.size(); ++i) {
        cells.push_back(agent_wealth(i, t).str());
    }
    return cells;
}

void Engine::execute_action(const ActionDecl& act, Tick now) {
    Ledger& ledger = protocol_.ledger;
    auto rchain = [&](const std::string& name) {
        auto c = ledger.find_chain(name);
        check(c.has_value(), Errc::AgentError, "unknown chain '" + name + "'");
        return *c;
    };
    auto rtoken = [&](const std::string& chain, const std::string& symbol) {
        auto t = ledger.find_token(rchain(chain), symbol);
        check(t.has_value(), Errc::AgentError, "unknown token " + chain + "/" + symbol);
        return *t;
    };
    auto raccount = [&](const std::string& name) {
        auto a = ledger.find_account(name);
        check(a.has_value(), Errc::AgentError, "unknown account '" + name + "'");
        return *a;
    };

    if (act.type == ActionDecl::Type::Vote) {
        protocol_.governance.vote(ledger, act.proposal, raccount(act.actor), act.support, now);
        return;
    }
    if (act.type == ActionDecl::Type::ClaimLp) {
        protocol_.rewards.claim_lp(ledger, protocol_.pools, PoolId{act.target}, raccount(act.actor));
        return;
    }
    if (act.type == ActionDecl::Type::ClaimGw) {
        // gateway rewards always go to the provider; the row must name it
        const Gateway& g = protocol_.gateways.gateway(GatewayId{act.target});
        check(raccount(act.actor) == g.provider, Errc::AgentError,
              "claim_gw actor is not the gateway provider");
        protocol_.rewards.claim_gateway(ledger, protocol_.gateways, GatewayId{act.target});
        return;
    }

    ProposalPayload payload;
    if (act.kind == "param") {
        ParamChange pc;
        pc.key = *parse_param_key(act.args[0]);
        pc.target = static_cast<std::uint32_t>(action_u64(act.args[1], "param target"));
        const bool amount_valued = pc.key == ParamKey::EmissionE0 ||
                                   pc.key == ParamKey::GovDepositMin ||
                                   pc.key == ParamKey::GatewayUnwrapFeeRgu;
        pc.value = amount_valued ? action_amount(act.args[2], "param value")
                                 : action_u64(act.args[2], "param value");
        payload = pc;
    } else if (act.kind == "text") {
        payload = TextSpec{act.args[0]};
    } else if (act.kind == "add_pool") {
        AddPoolSpec s;
        s.chain = rchain(act.args[0]);
        s.token_w = rtoken(act.args[0], act.args[1]);
        s.token_o = rtoken(act.args[0], act.args[2]);
        s.fee_bps = static_cast<std::uint32_t>(action_u64(act.args[3], "fee_bps"));
        s.weight = action_u64(act.args[4], "weight");
        payload = s;
    } else if (act.kind == "add_token") {
        AddTokenSpec s;
        s.chain = rchain(act.args[0]);
        s.symbol = act.args[1];
        if (act.args[2] == "origin") s.kind = TokenKind::Origin;
        else if (act.args[2] == "wrapped") s.kind = TokenKind::Wrapped;
        else if (act.args[2] == "rgu") s.kind = TokenKind::Rgu;
        else throw Error(Errc::AgentError, "bad token kind '" + act.args[2] + "'");
        if (s.kind == TokenKind::Wrapped) {
            check(act.args.size() == 5, Errc::AgentError, "wrapped token needs an underlying");
            s.underlying = rtoken(act.args[3], act.args[4]);
        }
        payload = s;
    } else { // add_gateway
        AddGatewaySpec s;
        s.origin_chain = rchain(act.args[0]);
        s.token_t = rtoken(act.args[0], act.args[1]);
        s.dest_chain = rchain(act.args[2]);
        s.token_wt = rtoken(act.args[2], act.args[3]);
        s.provider = raccount(act.args[4]);
        s.latency_ticks = static_cast<std::uint32_t>(action_u64(act.args[5], "latency"));
        s.unwrap_fee_rgu = action_amount(act.args[6], "unwrap fee");
        payload = s;
    }

    protocol_.governance.submit(ledger, protocol_.pools, protocol_.gateways, raccount(act.actor),
                                std::move(payload), act.deposit, now);
}

void Engine::step(MetricsWriter* sink) {
    const Tick t = now_;
    check(t < sc_.run.ticks, Errc::ValidationError, "stepping past the configured run length");

    for (std::uint32_t i = 0; i < protocol_.gateways.size(); ++i) {
        protocol_.gateways.process_pending(protocol_.ledger, GatewayId{i}, t);
    }

    for (auto& a : agents_) {
        try {
            agent_act(protocol_, feeds_, a, t);
        } catch (const Error& e) {
            throw Error(Errc::AgentError, "agent " + std::to_string(a.id) + " ('" +
                                              protocol_.ledger.account_name(a.account) +
                                              "') at tick " + std::to_string(t) + ": " + e.what());
        }
    }

    protocol_.rewards.accrue(protocol_.pools, protocol_.gateways, t);

    protocol_.governance.on_governance_phase(protocol_.ledger, protocol_.pools, protocol_.gateways,
                                             protocol_.rewards, t);

    while (schedule_next_ < schedule_order_.size()) {
        const ActionDecl& act = sc_.schedule[schedule_order_[schedule_next_]];
        if (act.tick != t) break;
        ++schedule_next_;
        try {
            execute_action(act, t);
        } catch (const Error& e) {
            throw Error(Errc::AgentError,
                        "scheduled action at tick " + std::to_string(t) + ": " + e.what());
        }
    }

    if (sink) sink->row(metrics_row(t));
    ++now_;
}

void Engine::audit_checked(const std::string& when) {
    try {
        audit_all(protocol_);
    } catch (const Error& e) {
        if (e.code() == Errc::InvariantViolation) {
            throw Error(Errc::InvariantViolation, when + ": " + e.what());
        }
        throw;
    }
}

RunSummary Engine::run(MetricsWriter& sink) {
    sink.header(columns_);
    audit_checked("at genesis");
    RunSummary summary;
    summary.audits = 1;

    while (now_ < sc_.run.ticks) {
        step(&sink);
        const Tick done = now_; // ticks completed so far
        if (done % static_cast<Tick>(sc_.run.audit_every) == 0 || now_ == sc_.run.ticks) {
            audit_checked("after tick " + std::to_string(done - 1));
            ++summary.audits;
        }
    }

    summary.ticks_run = now_;
    const auto rgu = protocol_.ledger.rgu_token();
    summary.rgu_supply =
        rgu ? protocol_.ledger.total_supply(protocol_.ledger.token(*rgu).chain, *rgu) : 0;
    summary.emitted = u128_to_string(protocol_.rewards.emitted_total());
    summary.claimed = u128_to_string(protocol_.rewards.claimed_lp_total() +
                                     protocol_.rewards.claimed_gateway_total());
    summary.burned = protocol_.rgu_burned_total();
    return summary;
}

} // namespace graviton
