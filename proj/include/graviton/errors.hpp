#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace graviton {

enum class Errc {
    // ledger
    DuplicateChainName,
    UnknownChain,
    DuplicateSymbolOnChain,
    SecondRguToken,
    BadUnderlying,
    InsufficientBalance,
    Overflow,
    UnknownEntity,
    // gateway
    InconsistentTokenPair,
    DuplicateGateway,
    ZeroAmount,
    InsufficientRguForFee,
    // amm
    DuplicatePair,
    FeeTooHigh,
    ZeroShares,
    InsufficientShares,
    SlippageExceeded,
    EmptyPool,
    // rewards
    NonMonotonicTick,
    // governance
    DepositTooSmall,
    InvalidPayload,
    NotActive,
    AlreadyVoted,
    ZeroWeight,
    TooEarly,
    AlreadyFinalized,
    ApplicationFailed,
    // sim / cli
    ValidationError,
    InvariantViolation,
    AgentError,
    IoError,
};

std::string_view errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

// Precondition guard. Ops validate everything through these before the
// first mutation, so a throw always leaves state untouched.
inline void check(bool cond, Errc code, const std::string& msg) {
    if (!cond) throw Error(code, msg);
}

} // namespace graviton
