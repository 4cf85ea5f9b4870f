#pragma once

// The matchmaking walk-through profiles, mirroring tests/fixtures/
// example2_store.json. Keep the two in sync.

#include <matchdeg/profile.hpp>

namespace example {

inline matchdeg::Profile alice_search() {
    return {matchdeg::OwnerId{"Alice"},
            {{"age", matchdeg::NumericRange::closed(20.0, 40.0)}},
            {},
            {{"tennis", matchdeg::InterestLevel{1.0}},
             {"chess", matchdeg::InterestLevel{0.5}}}};
}

inline matchdeg::Profile carl_search() {
    return {matchdeg::OwnerId{"Carl"},
            {{"age", matchdeg::NumericRange::closed(20.0, 30.0)},
             {"height", matchdeg::NumericRange::at_least(180.0)}},
            {},
            {{"basketball", matchdeg::InterestLevel{1.0}}}};
}

inline matchdeg::Profile alice_advert() {
    return {matchdeg::OwnerId{"Alice"},
            {{"age", matchdeg::NumericRange::singleton(25.0)},
             {"height", matchdeg::NumericRange::singleton(165.0)}},
            {},
            {{"tennis", matchdeg::InterestLevel{1.0}},
             {"chess", matchdeg::InterestLevel{0.5}},
             {"basketball", matchdeg::InterestLevel{0.5}}}};
}

inline matchdeg::Profile bob_advert() {
    return {matchdeg::OwnerId{"Bob"},
            {{"age", matchdeg::NumericRange::singleton(26.0)},
             {"height", matchdeg::NumericRange::singleton(182.0)}},
            {},
            {{"tennis", matchdeg::InterestLevel{0.5}},
             {"basketball", matchdeg::InterestLevel{-1.0}}}};
}

inline matchdeg::Profile carl_advert() {
    return {matchdeg::OwnerId{"Carl"},
            {{"age", matchdeg::NumericRange::singleton(31.0)},
             {"height", matchdeg::NumericRange::singleton(195.0)}},
            {},
            {{"basketball", matchdeg::InterestLevel{1.0}}}};
}

// Frozen values for the worked examples, accurate to every printed digit.
namespace expected {
inline constexpr double alice_bob_total = 0.7314655729936135;
inline constexpr double alice_carl_total = 0.5435971979432483;
inline constexpr double carl_bob_total = 0.6666666666666666;
inline constexpr double carl_alice_total = 0.5767572639392542;
inline constexpr double tennis_partial = 0.5636051251510957;   // levels 1 vs 0.5
inline constexpr double chess_partial = 0.630791593829745;     // levels 0.5 vs 0
inline constexpr double alice_bob_weighted = 0.7985991797452101;  // age weight 2
}  // namespace expected

}  // namespace example
