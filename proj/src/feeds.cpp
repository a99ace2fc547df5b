#include "graviton/feeds.hpp"

namespace graviton {

void FeedSpec::validate() const {
    switch (kind) {
        case FeedKind::Constant:
            check(p0 > 0, Errc::ValidationError, "feed price must be positive");
            break;
        case FeedKind::Piecewise: {
            check(!points.empty(), Errc::ValidationError, "piecewise feed needs points");
            check(points.front().first == 0, Errc::ValidationError,
                  "piecewise feed must start at tick 0");
            Tick prev = -1;
            for (const auto& [t, p] : points) {
                check(t > prev, Errc::ValidationError, "piecewise ticks must strictly increase");
                check(p > 0, Errc::ValidationError, "feed price must be positive");
                prev = t;
            }
            break;
        }
        case FeedKind::GeometricWalk:
            check(p0 > 0, Errc::ValidationError, "feed price must be positive");
            check(step_bps < BPS_DENOM, Errc::ValidationError, "walk step must be < 10000 bps");
            break;
    }
}

FeedCursor::FeedCursor(const FeedSpec& spec, std::uint64_t master_seed, std::uint32_t feed_index)
    : spec_(spec), rng_(make_stream(master_seed, StreamDomain::Feed, feed_index)) {
    spec_.validate();
    switch (spec_.kind) {
        case FeedKind::Constant:
        case FeedKind::GeometricWalk:
            cur_value_ = spec_.p0;
            break;
        case FeedKind::Piecewise:
            cur_value_ = spec_.points.front().second;
            next_point_ = 1;
            break;
    }
}

Amount FeedCursor::micro_value(Tick t) {
    check(t >= cur_tick_, Errc::NonMonotonicTick, "feed read out of order");
    switch (spec_.kind) {
        case FeedKind::Constant:
            cur_tick_ = t;
            break;
        case FeedKind::Piecewise:
            while (next_point_ < spec_.points.size() && spec_.points[next_point_].first <= t) {
                cur_value_ = spec_.points[next_point_].second;
                ++next_point_;
            }
            cur_tick_ = t;
            break;
        case FeedKind::GeometricWalk:
            while (cur_tick_ < t) {
                const bool up = uniform_below(rng_, 2) == 1;
                const std::uint32_t factor = up ? BPS_DENOM + spec_.step_bps : BPS_DENOM - spec_.step_bps;
                cur_value_ = narrow_to_amount(u128(cur_value_) * factor / BPS_DENOM);
                if (cur_value_ == 0) cur_value_ = 1; // stays strictly positive
                ++cur_tick_;
            }
            break;
    }
    return cur_value_;
}

} // namespace graviton
