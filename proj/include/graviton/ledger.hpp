#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graviton/amounts.hpp"
#include "graviton/errors.hpp"
#include "graviton/ids.hpp"

namespace graviton {

enum class TokenKind { Origin, Wrapped, Rgu };

struct TokenInfo {
    TokenId id;
    std::string symbol;
    ChainId chain;        // the chain this token lives on
    TokenKind kind = TokenKind::Origin;
    TokenId underlying;   // Wrapped only: the Origin token it represents
    ChainId origin_chain; // Wrapped only: the underlying's chain

    bool operator==(const TokenInfo&) const = default;
};

// Multi-chain token ledger: the single source of truth for balances and
// supplies. Every operation validates fully before its one mutation point,
// so a throw leaves the ledger bit-identical to its pre-state.
//
// mint/burn are privileged by construction, not by account identity: only
// code holding a mutable Ledger& (gateway, rewards, governance, genesis
// setup) can reach them; agents go through module operations.
class Ledger {
public:
    ChainId register_chain(const std::string& name);
    TokenId register_token(ChainId chain, const std::string& symbol, TokenKind kind,
                           std::optional<TokenId> underlying = std::nullopt);
    AccountId register_account(const std::string& name);

    void mint(ChainId chain, TokenId token, AccountId account, Amount amount);
    void burn(ChainId chain, TokenId token, AccountId account, Amount amount);
    void transfer(ChainId chain, TokenId token, AccountId from, AccountId to, Amount amount);

    Amount balance_of(ChainId chain, TokenId token, AccountId account) const;
    Amount total_supply(ChainId chain, TokenId token) const;

    std::size_t chain_count() const { return chains_.size(); }
    std::size_t token_count() const { return tokens_.size(); }
    std::size_t account_count() const { return accounts_.size(); }

    const std::string& chain_name(ChainId c) const;
    const std::string& account_name(AccountId a) const;
    const TokenInfo& token(TokenId t) const;

    std::optional<ChainId> find_chain(const std::string& name) const;
    std::optional<AccountId> find_account(const std::string& name) const;
    std::optional<TokenId> find_token(ChainId chain, const std::string& symbol) const;

    // The unique Rgu token, if one has been registered.
    std::optional<TokenId> rgu_token() const { return rgu_; }

    // Sum of all account balances for (chain, token); the conservation sweep
    // compares this against total_supply.
    Amount sum_balances(ChainId chain, TokenId token) const;

    bool operator==(const Ledger&) const = default;

private:
    void require_chain(ChainId c) const;
    void require_account(AccountId a) const;
    const TokenInfo& require_token_on(ChainId chain, TokenId token) const;
    Amount read_balance(TokenId token, AccountId account) const;
    void write_balance(TokenId token, AccountId account, Amount value);

    std::vector<std::string> chains_;
    std::vector<TokenInfo> tokens_;
    std::vector<std::string> accounts_;
    std::vector<Amount> supply_;                          // by token id
    std::vector<std::map<std::uint32_t, Amount>> balances_; // token id -> account -> amount
    std::optional<TokenId> rgu_;
};

} // namespace graviton
