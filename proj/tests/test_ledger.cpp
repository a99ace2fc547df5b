#include <doctest.h>

#include <random>

#include "fixtures.hpp"

using namespace graviton;

TEST_CASE("registration rejects duplicates and bad wiring") {
    Ledger l;
    const ChainId c1 = l.register_chain("ethereum");
    const ChainId c2 = l.register_chain("waves");
    CHECK_THROWS_AS(l.register_chain("ethereum"), Error);

    const TokenId eth = l.register_token(c1, "ETH", TokenKind::Origin);
    CHECK_THROWS_AS(l.register_token(c1, "ETH", TokenKind::Origin), Error);
    l.register_token(c2, "ETH", TokenKind::Origin); // same symbol, other chain: fine

    // wrapped tokens need an Origin underlying
    CHECK_THROWS_AS(l.register_token(c2, "wETH", TokenKind::Wrapped), Error);
    const TokenId weth = l.register_token(c2, "wETH", TokenKind::Wrapped, eth);
    CHECK(l.token(weth).underlying == eth);
    CHECK_THROWS_AS(l.register_token(c2, "wwETH", TokenKind::Wrapped, weth), Error);
    // non-wrapped tokens must not name one
    CHECK_THROWS_AS(l.register_token(c2, "X", TokenKind::Origin, eth), Error);

    l.register_token(c2, "RGU", TokenKind::Rgu);
    CHECK_THROWS_AS(l.register_token(c1, "RGU2", TokenKind::Rgu), Error);
    CHECK(l.rgu_token().has_value());

    // re-registering an account is idempotent, empty names are not names
    const AccountId alice = l.register_account("alice");
    CHECK(l.register_account("alice") == alice);
    CHECK_THROWS_AS(l.register_account(""), Error);
}

TEST_CASE("mint, burn and transfer move exactly what they say") {
    Ledger l;
    const ChainId c = l.register_chain("waves");
    const TokenId t = l.register_token(c, "USDN", TokenKind::Origin);
    const AccountId a = l.register_account("alice");
    const AccountId b = l.register_account("bob");

    l.mint(c, t, a, 100);
    CHECK(l.balance_of(c, t, a) == 100);
    CHECK(l.total_supply(c, t) == 100);

    l.transfer(c, t, a, b, 40);
    CHECK(l.balance_of(c, t, a) == 60);
    CHECK(l.balance_of(c, t, b) == 40);
    CHECK(l.total_supply(c, t) == 100);

    l.transfer(c, t, a, a, 60); // self transfer is a no-op
    CHECK(l.balance_of(c, t, a) == 60);

    l.burn(c, t, b, 15);
    CHECK(l.balance_of(c, t, b) == 25);
    CHECK(l.total_supply(c, t) == 85);

    CHECK_THROWS_AS(l.burn(c, t, b, 26), Error);
    CHECK_THROWS_AS(l.transfer(c, t, b, a, 26), Error);
}

TEST_CASE("a failed operation leaves the ledger bit-identical") {
    Ledger l;
    const ChainId c = l.register_chain("waves");
    const ChainId other = l.register_chain("ethereum");
    const TokenId t = l.register_token(c, "USDN", TokenKind::Origin);
    const AccountId a = l.register_account("alice");
    const AccountId b = l.register_account("bob");
    l.mint(c, t, a, 10);

    const Ledger snapshot = l;
    CHECK_THROWS_AS(l.transfer(c, t, a, b, 11), Error);
    CHECK_THROWS_AS(l.burn(c, t, a, 11), Error);
    CHECK_THROWS_AS(l.transfer(other, t, a, b, 1), Error); // token lives on c
    CHECK_THROWS_AS(l.mint(other, t, a, 1), Error);
    CHECK(l == snapshot);
}

TEST_CASE("random operation storm preserves supply == sum of balances") {
    Ledger l;
    const ChainId c = l.register_chain("waves");
    std::vector<TokenId> tokens = {l.register_token(c, "A", TokenKind::Origin),
                                   l.register_token(c, "B", TokenKind::Origin),
                                   l.register_token(c, "RGU", TokenKind::Rgu)};
    std::vector<AccountId> accts;
    for (int i = 0; i < 6; ++i) accts.push_back(l.register_account("acct" + std::to_string(i)));

    std::mt19937_64 rng(21);
    int executed = 0;
    for (int i = 0; i < 5'000; ++i) {
        const TokenId t = tokens[rng() % tokens.size()];
        const AccountId from = accts[rng() % accts.size()];
        const AccountId to = accts[rng() % accts.size()];
        const Amount amt = rng() % 1'000;
        try {
            switch (rng() % 3) {
                case 0: l.mint(c, t, to, amt); break;
                case 1: l.burn(c, t, from, amt); break;
                default: l.transfer(c, t, from, to, amt); break;
            }
            ++executed;
        } catch (const Error& e) {
            CHECK(e.code() == Errc::InsufficientBalance);
        }
    }
    CHECK(executed > 1'000);
    for (TokenId t : tokens) CHECK(l.sum_balances(c, t) == l.total_supply(c, t));
}
