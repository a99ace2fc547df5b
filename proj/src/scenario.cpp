#include "graviton/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace graviton {

namespace {

[[noreturn]] void fail(std::size_t line, const std::string& msg) {
    throw Error(Errc::ValidationError, "line " + std::to_string(line) + ": " + msg);
}

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::uint64_t parse_u64(const std::string& s, std::size_t line, const std::string& what) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail(line, what + ": bad integer '" + s + "'");
    return v;
}

Tick parse_tick(const std::string& s, std::size_t line, const std::string& what) {
    Tick v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) fail(line, what + ": bad tick '" + s + "'");
    return v;
}

Amount parse_amt(const std::string& s, std::size_t line, const std::string& what) {
    auto v = parse_amount(s);
    if (!v) fail(line, what + ": bad amount '" + s + "' (up to 6 decimals)");
    return *v;
}

std::string name_token(const std::string& s, std::size_t line, const std::string& what) {
    if (s.empty() || s[0] == '@') fail(line, what + ": names may not start with '@'");
    return s;
}

TokenKind parse_kind(const std::string& s, std::size_t line) {
    if (s == "origin") return TokenKind::Origin;
    if (s == "wrapped") return TokenKind::Wrapped;
    if (s == "rgu") return TokenKind::Rgu;
    fail(line, "token kind must be origin|wrapped|rgu, got '" + s + "'");
}

BridgePolicy parse_policy(const std::string& s, std::size_t line) {
    if (s == "lock") return BridgePolicy::Lock;
    if (s == "unwrap") return BridgePolicy::Unwrap;
    if (s == "alternate") return BridgePolicy::Alternate;
    if (s == "roundtrip") return BridgePolicy::RoundTrip;
    fail(line, "bridger policy must be lock|unwrap|alternate|roundtrip, got '" + s + "'");
}

// "0:1,100:4.5" -> [(0, 1000000), (100, 4500000)]
std::vector<std::pair<Tick, Amount>> parse_points(const std::string& s, std::size_t line) {
    std::vector<std::pair<Tick, Amount>> out;
    std::istringstream in(s);
    std::string part;
    while (std::getline(in, part, ',')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos) fail(line, "piecewise point must be tick:price");
        out.emplace_back(parse_tick(part.substr(0, colon), line, "piecewise tick"),
                         parse_amt(part.substr(colon + 1), line, "piecewise price"));
    }
    if (out.empty()) fail(line, "piecewise feed needs at least one point");
    return out;
}

struct KeyValue {
    std::string key;
    std::string value;
};

KeyValue parse_kv(const std::string& s, std::size_t line) {
    const auto eq = s.find('=');
    if (eq == std::string::npos) fail(line, "expected key = value");
    KeyValue kv{trim(s.substr(0, eq)), trim(s.substr(eq + 1))};
    if (kv.key.empty() || kv.value.empty()) fail(line, "expected key = value");
    return kv;
}

} // namespace

Scenario parse_scenario(const std::string& text) {
    Scenario sc;
    std::string section;
    std::set<std::string> seen_sections;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    bool have_run = false;

    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail(line_no, "unterminated section header");
            section = line.substr(1, line.size() - 2);
            static const std::set<std::string> known = {
                "chains", "tokens", "gateways", "pools",  "balances", "emission",
                "rewards", "governance", "agents", "feeds", "schedule", "run"};
            if (!known.count(section)) fail(line_no, "unknown section [" + section + "]");
            if (!seen_sections.insert(section).second)
                fail(line_no, "duplicate section [" + section + "]");
            if (section == "run") have_run = true;
            continue;
        }
        if (section.empty()) fail(line_no, "content before the first section header");

        const auto f = split_ws(line);

        if (section == "chains") {
            if (f.size() != 1) fail(line_no, "[chains] rows are a single name");
            sc.chains.push_back(name_token(f[0], line_no, "chain"));
        } else if (section == "tokens") {
            // chain symbol kind [underlying_chain underlying_symbol]
            if (f.size() != 3 && f.size() != 5)
                fail(line_no, "[tokens] row: chain symbol origin|wrapped|rgu [u_chain u_symbol]");
            TokenDecl t;
            t.chain = f[0];
            t.symbol = name_token(f[1], line_no, "token symbol");
            t.kind = parse_kind(f[2], line_no);
            if (t.kind == TokenKind::Wrapped) {
                if (f.size() != 5) fail(line_no, "wrapped token needs u_chain u_symbol");
                t.underlying_chain = f[3];
                t.underlying_symbol = f[4];
            } else if (f.size() != 3) {
                fail(line_no, "only wrapped tokens take an underlying");
            }
            sc.tokens.push_back(std::move(t));
        } else if (section == "gateways") {
            // origin_chain origin_symbol dest_chain wrapped_symbol provider latency fee
            if (f.size() != 7)
                fail(line_no,
                     "[gateways] row: origin_chain origin_symbol dest_chain wrapped_symbol "
                     "provider latency_ticks unwrap_fee_rgu");
            GatewayDecl g;
            g.origin_chain = f[0];
            g.origin_symbol = f[1];
            g.dest_chain = f[2];
            g.wrapped_symbol = f[3];
            g.provider = name_token(f[4], line_no, "provider");
            g.latency_ticks = static_cast<std::uint32_t>(parse_u64(f[5], line_no, "latency"));
            g.unwrap_fee_rgu = parse_amt(f[6], line_no, "unwrap fee");
            sc.gateways.push_back(std::move(g));
        } else if (section == "pools") {
            // chain token_w token_o fee_bps weight [seed_account seed_w seed_o]
            if (f.size() != 5 && f.size() != 8)
                fail(line_no,
                     "[pools] row: chain token_w token_o fee_bps weight [seed_account seed_w seed_o]");
            PoolDecl p;
            p.chain = f[0];
            p.token_w = f[1];
            p.token_o = f[2];
            p.fee_bps = static_cast<std::uint32_t>(parse_u64(f[3], line_no, "fee_bps"));
            p.weight = parse_u64(f[4], line_no, "weight");
            if (f.size() == 8) {
                p.seed_account = name_token(f[5], line_no, "seed account");
                p.seed_w = parse_amt(f[6], line_no, "seed_w");
                p.seed_o = parse_amt(f[7], line_no, "seed_o");
                if (p.seed_w == 0 || p.seed_o == 0) fail(line_no, "pool seed amounts must be > 0");
            }
            sc.pools.push_back(std::move(p));
        } else if (section == "balances") {
            if (f.size() != 4) fail(line_no, "[balances] row: account chain token amount");
            BalanceDecl b;
            b.account = name_token(f[0], line_no, "account");
            b.chain = f[1];
            b.token = f[2];
            b.amount = parse_amt(f[3], line_no, "amount");
            sc.balances.push_back(std::move(b));
        } else if (section == "emission") {
            const auto kv = parse_kv(line, line_no);
            if (kv.key == "e0") sc.emission.e0 = parse_amt(kv.value, line_no, "e0");
            else if (kv.key == "decay_num") sc.emission.decay_num = parse_u64(kv.value, line_no, "decay_num");
            else if (kv.key == "decay_den") sc.emission.decay_den = parse_u64(kv.value, line_no, "decay_den");
            else if (kv.key == "period_ticks") sc.emission.period_ticks = parse_u64(kv.value, line_no, "period_ticks");
            else fail(line_no, "[emission] unknown key '" + kv.key + "'");
        } else if (section == "rewards") {
            const auto kv = parse_kv(line, line_no);
            if (kv.key == "lp_fraction_bps")
                sc.lp_fraction_bps = static_cast<std::uint32_t>(parse_u64(kv.value, line_no, kv.key));
            else fail(line_no, "[rewards] unknown key '" + kv.key + "'");
        } else if (section == "governance") {
            const auto kv = parse_kv(line, line_no);
            if (kv.key == "deposit_min") sc.gov.deposit_min = parse_amt(kv.value, line_no, kv.key);
            else if (kv.key == "voting_period") sc.gov.voting_period = parse_u64(kv.value, line_no, kv.key);
            else if (kv.key == "quorum_bps") sc.gov.quorum_bps = static_cast<std::uint32_t>(parse_u64(kv.value, line_no, kv.key));
            else if (kv.key == "threshold_bps") sc.gov.threshold_bps = static_cast<std::uint32_t>(parse_u64(kv.value, line_no, kv.key));
            else fail(line_no, "[governance] unknown key '" + kv.key + "'");
        } else if (section == "agents") {
            if (f.empty()) fail(line_no, "empty agent row");
            AgentDecl a;
            if (f[0] == "arb") {
                if (f.size() != 5) fail(line_no, "arb row: arb account pool feed min_profit");
                a.kind = AgentKind::Arbitrageur;
                a.account = name_token(f[1], line_no, "account");
                a.pool = static_cast<std::uint32_t>(parse_u64(f[2], line_no, "pool index"));
                a.feed = static_cast<std::uint32_t>(parse_u64(f[3], line_no, "feed index"));
                a.min_profit = parse_amt(f[4], line_no, "min_profit");
            } else if (f[0] == "trader") {
                if (f.size() != 6)
                    fail(line_no, "trader row: trader account pool intensity_num intensity_den max_size");
                a.kind = AgentKind::RandomTrader;
                a.account = name_token(f[1], line_no, "account");
                a.pool = static_cast<std::uint32_t>(parse_u64(f[2], line_no, "pool index"));
                a.intensity_num = parse_u64(f[3], line_no, "intensity_num");
                a.intensity_den = parse_u64(f[4], line_no, "intensity_den");
                a.max_size = parse_amt(f[5], line_no, "max_size");
            } else if (f[0] == "lp") {
                if (f.size() != 6) fail(line_no, "lp row: lp account pool enter_tick exit_tick amount_w");
                a.kind = AgentKind::LiquidityProvider;
                a.account = name_token(f[1], line_no, "account");
                a.pool = static_cast<std::uint32_t>(parse_u64(f[2], line_no, "pool index"));
                a.enter_tick = parse_tick(f[3], line_no, "enter_tick");
                a.exit_tick = parse_tick(f[4], line_no, "exit_tick");
                a.amount_w = parse_amt(f[5], line_no, "amount_w");
            } else if (f[0] == "bridger") {
                if (f.size() != 5) fail(line_no, "bridger row: bridger account gateway amount policy");
                a.kind = AgentKind::Bridger;
                a.account = name_token(f[1], line_no, "account");
                a.gateway = static_cast<std::uint32_t>(parse_u64(f[2], line_no, "gateway index"));
                a.per_tick = parse_amt(f[3], line_no, "amount");
                a.policy = parse_policy(f[4], line_no);
            } else {
                fail(line_no, "agent kind must be arb|trader|lp|bridger, got '" + f[0] + "'");
            }
            sc.agents.push_back(std::move(a));
        } else if (section == "feeds") {
            if (f.empty()) fail(line_no, "empty feed row");
            FeedSpec fs;
            std::size_t args_end = f.size();
            if (f.back().rfind("pool=", 0) == 0) {
                fs.pool = static_cast<std::uint32_t>(
                    parse_u64(f.back().substr(5), line_no, "feed pool index"));
                --args_end;
            }
            if (f[0] == "constant" && args_end == 2) {
                fs.kind = FeedKind::Constant;
                fs.p0 = parse_amt(f[1], line_no, "price");
            } else if (f[0] == "piecewise" && args_end == 2) {
                fs.kind = FeedKind::Piecewise;
                fs.points = parse_points(f[1], line_no);
            } else if (f[0] == "walk" && args_end == 3) {
                fs.kind = FeedKind::GeometricWalk;
                fs.p0 = parse_amt(f[1], line_no, "price");
                fs.step_bps = static_cast<std::uint32_t>(parse_u64(f[2], line_no, "step_bps"));
            } else {
                fail(line_no,
                     "[feeds] row: constant <p> | piecewise <t:p,...> | walk <p0> <step_bps>, "
                     "optionally followed by pool=<index>");
            }
            try {
                fs.validate();
            } catch (const Error& e) {
                fail(line_no, e.what());
            }
            sc.feeds.push_back(std::move(fs));
        } else if (section == "schedule") {
            // <tick> submit <proposer> <deposit> <kind> <args...>
            // <tick> vote <account> <proposal> yes|no
            if (f.size() < 2) fail(line_no, "schedule row needs a tick and an action");
            ActionDecl act;
            act.tick = parse_tick(f[0], line_no, "tick");
            if (act.tick < 0) fail(line_no, "schedule tick must be >= 0");
            if (f[1] == "submit") {
                if (f.size() < 5) fail(line_no, "submit row: tick submit proposer deposit kind args...");
                act.type = ActionDecl::Type::Submit;
                act.actor = name_token(f[2], line_no, "proposer");
                act.deposit = parse_amt(f[3], line_no, "deposit");
                act.kind = f[4];
                act.args.assign(f.begin() + 5, f.end());
                static const std::set<std::string> kinds = {"param", "text", "add_pool",
                                                            "add_token", "add_gateway"};
                if (!kinds.count(act.kind)) fail(line_no, "unknown proposal kind '" + act.kind + "'");
                const std::size_t n = act.args.size();
                if (act.kind == "param" && n != 3)
                    fail(line_no, "param args: <key> <target> <value>");
                if (act.kind == "text" && n != 1) fail(line_no, "text args: <hash>");
                if (act.kind == "add_pool" && n != 5)
                    fail(line_no, "add_pool args: <chain> <token_w> <token_o> <fee_bps> <weight>");
                if (act.kind == "add_token" && n != 3 && n != 5)
                    fail(line_no, "add_token args: <chain> <symbol> <kind> [<u_chain> <u_symbol>]");
                if (act.kind == "add_gateway" && n != 7)
                    fail(line_no,
                         "add_gateway args: <origin_chain> <origin_symbol> <dest_chain> "
                         "<wrapped_symbol> <provider> <latency> <fee>");
                if (act.kind == "param" && !parse_param_key(act.args[0]))
                    fail(line_no, "unknown parameter key '" + act.args[0] + "'");
            } else if (f[1] == "vote") {
                if (f.size() != 5) fail(line_no, "vote row: tick vote account proposal yes|no");
                act.type = ActionDecl::Type::Vote;
                act.actor = name_token(f[2], line_no, "voter");
                act.proposal = static_cast<std::uint32_t>(parse_u64(f[3], line_no, "proposal"));
                if (f[4] == "yes") act.support = true;
                else if (f[4] == "no") act.support = false;
                else fail(line_no, "vote must be yes or no");
            } else if (f[1] == "claim_lp" || f[1] == "claim_gw") {
                if (f.size() != 4)
                    fail(line_no, "claim row: tick claim_lp account pool | tick claim_gw account gateway");
                act.type = f[1] == "claim_lp" ? ActionDecl::Type::ClaimLp : ActionDecl::Type::ClaimGw;
                act.actor = name_token(f[2], line_no, "claimer");
                act.target = static_cast<std::uint32_t>(parse_u64(f[3], line_no, "claim target"));
            } else {
                fail(line_no, "schedule action must be submit, vote, claim_lp or claim_gw");
            }
            sc.schedule.push_back(std::move(act));
        } else if (section == "run") {
            const auto kv = parse_kv(line, line_no);
            if (kv.key == "ticks") sc.run.ticks = parse_tick(kv.value, line_no, "ticks");
            else if (kv.key == "seed") sc.run.seed = parse_u64(kv.value, line_no, "seed");
            else if (kv.key == "audit_every") sc.run.audit_every = parse_u64(kv.value, line_no, "audit_every");
            else if (kv.key == "slippage_ref") sc.run.slippage_ref = parse_amt(kv.value, line_no, "slippage_ref");
            else fail(line_no, "[run] unknown key '" + kv.key + "'");
        }
    }

    if (!have_run) throw Error(Errc::ValidationError, "missing required [run] section");
    validate_scenario(sc);
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IoError, "cannot read scenario file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw Error(Errc::IoError, "read failure on '" + path + "'");
    return parse_scenario(buf.str());
}

namespace {

[[noreturn]] void invalid(const std::string& where, const std::string& msg) {
    throw Error(Errc::ValidationError, "[" + where + "] " + msg);
}

} // namespace

void validate_scenario(const Scenario& sc) {
    std::set<std::string> chain_names(sc.chains.begin(), sc.chains.end());
    if (chain_names.size() != sc.chains.size()) invalid("chains", "duplicate chain name");

    auto has_chain = [&](const std::string& c) { return chain_names.count(c) > 0; };
    auto find_token = [&](const std::string& chain, const std::string& sym) -> const TokenDecl* {
        for (const auto& t : sc.tokens)
            if (t.chain == chain && t.symbol == sym) return &t;
        return nullptr;
    };

    std::size_t rgu_count = 0;
    std::set<std::pair<std::string, std::string>> token_keys;
    for (const auto& t : sc.tokens) {
        if (!has_chain(t.chain)) invalid("tokens", "unknown chain '" + t.chain + "'");
        if (!token_keys.insert({t.chain, t.symbol}).second)
            invalid("tokens", "duplicate token " + t.chain + "/" + t.symbol);
        if (t.kind == TokenKind::Rgu) ++rgu_count;
        if (t.kind == TokenKind::Wrapped) {
            const TokenDecl* u = find_token(t.underlying_chain, t.underlying_symbol);
            if (!u || u->kind != TokenKind::Origin)
                invalid("tokens", "wrapped " + t.symbol + " needs a declared origin underlying");
            if (t.underlying_chain == t.chain)
                invalid("tokens", "wrapped " + t.symbol + " must live on a different chain");
        }
    }
    if (rgu_count > 1) invalid("tokens", "at most one rgu token");
    const bool has_rgu = rgu_count == 1;

    auto wrapped_has_gateway = [&](const std::string& chain, const std::string& sym) {
        for (const auto& g : sc.gateways)
            if (g.dest_chain == chain && g.wrapped_symbol == sym) return true;
        return false;
    };

    for (const auto& g : sc.gateways) {
        const TokenDecl* t = find_token(g.origin_chain, g.origin_symbol);
        const TokenDecl* wt = find_token(g.dest_chain, g.wrapped_symbol);
        if (!t || t->kind != TokenKind::Origin)
            invalid("gateways", "origin token " + g.origin_symbol + " not a declared origin token");
        if (!wt || wt->kind != TokenKind::Wrapped)
            invalid("gateways", "wrapped token " + g.wrapped_symbol + " not a declared wrapped token");
        if (wt->underlying_chain != g.origin_chain || wt->underlying_symbol != g.origin_symbol)
            invalid("gateways", g.wrapped_symbol + " does not wrap " + g.origin_symbol);
        if (g.unwrap_fee_rgu > 0 && !has_rgu)
            invalid("gateways", "unwrap fee needs an rgu token declared");
    }

    for (const auto& p : sc.pools) {
        const TokenDecl* w = find_token(p.chain, p.token_w);
        const TokenDecl* o = find_token(p.chain, p.token_o);
        if (!w) invalid("pools", "token " + p.token_w + " not declared on " + p.chain);
        if (!o) invalid("pools", "token " + p.token_o + " not declared on " + p.chain);
        if (p.token_w == p.token_o) invalid("pools", "pool tokens must differ");
        if (p.fee_bps > MAX_POOL_FEE_BPS) invalid("pools", "fee_bps above 1000");
        if (p.weight > MAX_POOL_WEIGHT) invalid("pools", "weight above cap");
        if (!p.seed_account.empty()) {
            // the seed account needs declared balances covering both legs
            for (const auto* leg : {&p.token_w, &p.token_o}) {
                bool found = false;
                for (const auto& b : sc.balances)
                    if (b.account == p.seed_account && b.chain == p.chain && b.token == *leg)
                        found = true;
                if (!found)
                    invalid("pools", "seed account " + p.seed_account + " has no declared " + *leg +
                                         " balance on " + p.chain);
            }
        }
    }

    for (const auto& b : sc.balances) {
        const TokenDecl* t = find_token(b.chain, b.token);
        if (!t) invalid("balances", "token " + b.token + " not declared on " + b.chain);
        if (t->kind == TokenKind::Wrapped && !wrapped_has_gateway(b.chain, b.token))
            invalid("balances",
                    "initial balance of wrapped " + b.token + " needs a gateway to collateralize it");
    }

    sc.emission.validate();
    if (sc.lp_fraction_bps > BPS_DENOM) invalid("rewards", "lp_fraction_bps above 10000");
    sc.gov.validate();

    if (sc.emission.e0 > 0) {
        if (!has_rgu) invalid("emission", "emission needs an rgu token declared");
        bool any_weight = false;
        for (const auto& p : sc.pools) any_weight = any_weight || p.weight > 0;
        if (!any_weight) invalid("emission", "emission needs at least one pool with weight > 0");
    }

    std::set<std::uint32_t> feed_pools;
    for (std::size_t i = 0; i < sc.feeds.size(); ++i) {
        const FeedSpec& fs = sc.feeds[i];
        fs.validate();
        if (fs.pool) {
            if (*fs.pool >= sc.pools.size())
                invalid("feeds", "feed " + std::to_string(i) + " references unknown pool");
            if (!feed_pools.insert(*fs.pool).second)
                invalid("feeds", "pool " + std::to_string(*fs.pool) + " has two feeds");
        }
    }

    for (std::size_t i = 0; i < sc.agents.size(); ++i) {
        const AgentDecl& a = sc.agents[i];
        const std::string where = "agents";
        auto need_pool = [&](std::uint32_t pid) {
            if (pid >= sc.pools.size())
                invalid(where, "agent " + std::to_string(i) + " references unknown pool");
        };
        switch (a.kind) {
            case AgentKind::Arbitrageur:
                need_pool(a.pool);
                if (a.feed >= sc.feeds.size())
                    invalid(where, "agent " + std::to_string(i) + " references unknown feed");
                break;
            case AgentKind::RandomTrader:
                need_pool(a.pool);
                if (a.intensity_den == 0) invalid(where, "intensity_den must be >= 1");
                if (a.intensity_num > a.intensity_den)
                    invalid(where, "intensity must be <= 1 (num <= den)");
                if (a.max_size == 0) invalid(where, "max_size must be > 0");
                break;
            case AgentKind::LiquidityProvider:
                need_pool(a.pool);
                if (a.amount_w == 0) invalid(where, "lp amount_w must be > 0");
                if (a.enter_tick < 0) invalid(where, "enter_tick must be >= 0");
                if (a.exit_tick != -1 && a.exit_tick <= a.enter_tick)
                    invalid(where, "exit_tick must be after enter_tick (or -1)");
                break;
            case AgentKind::Bridger:
                if (a.gateway >= sc.gateways.size())
                    invalid(where, "agent " + std::to_string(i) + " references unknown gateway");
                if (a.per_tick == 0) invalid(where, "bridger amount must be > 0");
                break;
        }
    }

    if (!sc.schedule.empty() && !has_rgu)
        invalid("schedule", "scheduled actions need an rgu token declared");
    for (const auto& act : sc.schedule) {
        if (act.tick >= sc.run.ticks)
            invalid("schedule", "action at tick " + std::to_string(act.tick) +
                                    " is outside the run (ticks = " + std::to_string(sc.run.ticks) + ")");
        if (act.type == ActionDecl::Type::ClaimLp && act.target >= sc.pools.size())
            invalid("schedule", "claim_lp references unknown pool " + std::to_string(act.target));
        if (act.type == ActionDecl::Type::ClaimGw && act.target >= sc.gateways.size())
            invalid("schedule", "claim_gw references unknown gateway " + std::to_string(act.target));
    }

    if (sc.run.ticks < 0) invalid("run", "ticks must be >= 0");
    if (sc.run.audit_every == 0) invalid("run", "audit_every must be >= 1");
    if (sc.run.slippage_ref == 0) invalid("run", "slippage_ref must be > 0");
}

} // namespace graviton
