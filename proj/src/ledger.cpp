#include "graviton/ledger.hpp"

namespace graviton {

ChainId Ledger::register_chain(const std::string& name) {
    check(!name.empty(), Errc::ValidationError, "chain name must be nonempty");
    for (const auto& c : chains_)
        check(c != name, Errc::DuplicateChainName, "chain '" + name + "' already registered");
    chains_.push_back(name);
    return ChainId{static_cast<std::uint32_t>(chains_.size() - 1)};
}

TokenId Ledger::register_token(ChainId chain, const std::string& symbol, TokenKind kind,
                               std::optional<TokenId> underlying) {
    require_chain(chain);
    check(!symbol.empty(), Errc::ValidationError, "token symbol must be nonempty");
    check(!find_token(chain, symbol), Errc::DuplicateSymbolOnChain,
          "symbol '" + symbol + "' already registered on chain " + chains_[chain.value]);

    TokenInfo info;
    info.symbol = symbol;
    info.chain = chain;
    info.kind = kind;
    if (kind == TokenKind::Wrapped) {
        check(underlying.has_value(), Errc::BadUnderlying, "wrapped token needs an underlying");
        check(underlying->value < tokens_.size(), Errc::BadUnderlying, "unknown underlying token");
        const TokenInfo& u = tokens_[underlying->value];
        check(u.kind == TokenKind::Origin, Errc::BadUnderlying,
              "underlying of a wrapped token must have Origin kind");
        info.underlying = *underlying;
        info.origin_chain = u.chain;
    } else {
        check(!underlying.has_value(), Errc::BadUnderlying,
              "underlying only valid for wrapped tokens");
        if (kind == TokenKind::Rgu)
            check(!rgu_.has_value(), Errc::SecondRguToken, "an Rgu token already exists");
    }

    info.id = TokenId{static_cast<std::uint32_t>(tokens_.size())};
    tokens_.push_back(info);
    supply_.push_back(0);
    balances_.emplace_back();
    if (kind == TokenKind::Rgu) rgu_ = info.id;
    return info.id;
}

AccountId Ledger::register_account(const std::string& name) {
    check(!name.empty(), Errc::ValidationError, "account name must be nonempty");
    if (auto existing = find_account(name)) return *existing;
    accounts_.push_back(name);
    return AccountId{static_cast<std::uint32_t>(accounts_.size() - 1)};
}

void Ledger::mint(ChainId chain, TokenId token, AccountId account, Amount amount) {
    require_token_on(chain, token);
    require_account(account);
    if (amount == 0) return;
    Amount new_supply = checked_add(supply_[token.value], amount);
    Amount new_bal = checked_add(read_balance(token, account), amount);
    supply_[token.value] = new_supply;
    write_balance(token, account, new_bal);
}

void Ledger::burn(ChainId chain, TokenId token, AccountId account, Amount amount) {
    require_token_on(chain, token);
    require_account(account);
    if (amount == 0) return;
    Amount bal = read_balance(token, account);
    check(bal >= amount, Errc::InsufficientBalance,
          "burn of " + std::to_string(amount) + " exceeds balance " + std::to_string(bal));
    supply_[token.value] -= amount;
    write_balance(token, account, bal - amount);
}

void Ledger::transfer(ChainId chain, TokenId token, AccountId from, AccountId to, Amount amount) {
    require_token_on(chain, token);
    require_account(from);
    require_account(to);
    Amount src = read_balance(token, from);
    check(src >= amount, Errc::InsufficientBalance,
          "transfer of " + std::to_string(amount) + " exceeds balance " + std::to_string(src));
    if (amount == 0 || from == to) return;
    Amount new_dst = checked_add(read_balance(token, to), amount);
    write_balance(token, from, src - amount);
    write_balance(token, to, new_dst);
}

Amount Ledger::balance_of(ChainId chain, TokenId token, AccountId account) const {
    require_token_on(chain, token);
    require_account(account);
    return read_balance(token, account);
}

Amount Ledger::total_supply(ChainId chain, TokenId token) const {
    require_token_on(chain, token);
    return supply_[token.value];
}

const std::string& Ledger::chain_name(ChainId c) const {
    require_chain(c);
    return chains_[c.value];
}

const std::string& Ledger::account_name(AccountId a) const {
    require_account(a);
    return accounts_[a.value];
}

const TokenInfo& Ledger::token(TokenId t) const {
    check(t.value < tokens_.size(), Errc::UnknownEntity, "unknown token id");
    return tokens_[t.value];
}

std::optional<ChainId> Ledger::find_chain(const std::string& name) const {
    for (std::uint32_t i = 0; i < chains_.size(); ++i)
        if (chains_[i] == name) return ChainId{i};
    return std::nullopt;
}

std::optional<AccountId> Ledger::find_account(const std::string& name) const {
    for (std::uint32_t i = 0; i < accounts_.size(); ++i)
        if (accounts_[i] == name) return AccountId{i};
    return std::nullopt;
}

std::optional<TokenId> Ledger::find_token(ChainId chain, const std::string& symbol) const {
    for (const auto& t : tokens_)
        if (t.chain == chain && t.symbol == symbol) return t.id;
    return std::nullopt;
}

Amount Ledger::sum_balances(ChainId chain, TokenId token) const {
    require_token_on(chain, token);
    Amount sum = 0;
    for (const auto& [acct, bal] : balances_[token.value]) sum = checked_add(sum, bal);
    return sum;
}

void Ledger::require_chain(ChainId c) const {
    check(c.value < chains_.size(), Errc::UnknownChain, "unknown chain id");
}

void Ledger::require_account(AccountId a) const {
    check(a.value < accounts_.size(), Errc::UnknownEntity, "unknown account id");
}

const TokenInfo& Ledger::require_token_on(ChainId chain, TokenId token) const {
    require_chain(chain);
    check(token.value < tokens_.size(), Errc::UnknownEntity, "unknown token id");
    const TokenInfo& info = tokens_[token.value];
    check(info.chain == chain, Errc::UnknownEntity,
          "token '" + info.symbol + "' does not live on chain " + chains_[chain.value]);
    return info;
}

Amount Ledger::read_balance(TokenId token, AccountId account) const {
    const auto& m = balances_[token.value];
    auto it = m.find(account.value);
    return it == m.end() ? 0 : it->second;
}

// Zero balances are erased rather than stored, so state comparison is
// insensitive to the history that produced a balance.
void Ledger::write_balance(TokenId token, AccountId account, Amount value) {
    auto& m = balances_[token.value];
    if (value == 0)
        m.erase(account.value);
    else
        m[account.value] = value;
}

} // namespace graviton
