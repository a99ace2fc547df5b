#include "graviton/amounts.hpp"

#include <algorithm>
#include <cctype>

namespace graviton {

std::optional<Amount> parse_amount(std::string_view text) {
    if (text.empty()) return std::nullopt;
    std::string_view whole = text;
    std::string_view frac;
    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        whole = text.substr(0, dot);
        frac = text.substr(dot + 1);
        if (frac.empty() || frac.size() > AMOUNT_DECIMALS) return std::nullopt;
        if (whole.empty()) whole = "0";
    }
    auto all_digits = [](std::string_view s) {
        return !s.empty() && std::all_of(s.begin(), s.end(),
                                         [](unsigned char c) { return std::isdigit(c); });
    };
    if (!all_digits(whole) || (!frac.empty() && !all_digits(frac))) return std::nullopt;

    u128 units = 0;
    for (char c : whole) {
        units = units * 10 + static_cast<unsigned>(c - '0');
        if (units > std::numeric_limits<Amount>::max()) return std::nullopt;
    }
    units *= AMOUNT_ONE;
    u128 f = 0;
    for (char c : frac) f = f * 10 + static_cast<unsigned>(c - '0');
    for (std::size_t i = frac.size(); i < AMOUNT_DECIMALS; ++i) f *= 10;
    units += f;
    if (units > std::numeric_limits<Amount>::max()) return std::nullopt;
    return static_cast<Amount>(units);
}

std::string format_amount(Amount v) {
    std::string whole = std::to_string(v / AMOUNT_ONE);
    Amount frac = v % AMOUNT_ONE;
    if (frac == 0) return whole;
    std::string f = std::to_string(frac);
    f.insert(f.begin(), AMOUNT_DECIMALS - f.size(), '0');
    while (f.back() == '0') f.pop_back();
    return whole + "." + f;
}

std::string u128_to_string(u128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v != 0) {
        out.push_back(static_cast<char>('0' + static_cast<unsigned>(v % 10)));
        v /= 10;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::string_view errc_name(Errc c) {
    switch (c) {
        case Errc::DuplicateChainName: return "DuplicateChainName";
        case Errc::UnknownChain: return "UnknownChain";
        case Errc::DuplicateSymbolOnChain: return "DuplicateSymbolOnChain";
        case Errc::SecondRguToken: return "SecondRguToken";
        case Errc::BadUnderlying: return "BadUnderlying";
        case Errc::InsufficientBalance: return "InsufficientBalance";
        case Errc::Overflow: return "Overflow";
        case Errc::UnknownEntity: return "UnknownEntity";
        case Errc::InconsistentTokenPair: return "InconsistentTokenPair";
        case Errc::DuplicateGateway: return "DuplicateGateway";
        case Errc::ZeroAmount: return "ZeroAmount";
        case Errc::InsufficientRguForFee: return "InsufficientRguForFee";
        case Errc::DuplicatePair: return "DuplicatePair";
        case Errc::FeeTooHigh: return "FeeTooHigh";
        case Errc::ZeroShares: return "ZeroShares";
        case Errc::InsufficientShares: return "InsufficientShares";
        case Errc::SlippageExceeded: return "SlippageExceeded";
        case Errc::EmptyPool: return "EmptyPool";
        case Errc::NonMonotonicTick: return "NonMonotonicTick";
        case Errc::DepositTooSmall: return "DepositTooSmall";
        case Errc::InvalidPayload: return "InvalidPayload";
        case Errc::NotActive: return "NotActive";
        case Errc::AlreadyVoted: return "AlreadyVoted";
        case Errc::ZeroWeight: return "ZeroWeight";
        case Errc::TooEarly: return "TooEarly";
        case Errc::AlreadyFinalized: return "AlreadyFinalized";
        case Errc::ApplicationFailed: return "ApplicationFailed";
        case Errc::ValidationError: return "ValidationError";
        case Errc::InvariantViolation: return "InvariantViolation";
        case Errc::AgentError: return "AgentError";
        case Errc::IoError: return "IoError";
    }
    return "UnknownError";
}

} // namespace graviton
