#pragma once

// Seeded random profiles for property tests. Everything produced here is
// valid for its role; degenerate inputs get their own directed tests.

#include <matchdeg/profile.hpp>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace generators {

inline double uniform(std::mt19937& rng, double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline int pick(std::mt19937& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline bool coin(std::mt19937& rng, double probability) {
    return uniform(rng, 0.0, 1.0) < probability;
}

inline matchdeg::NumericRange random_range(std::mt19937& rng) {
    switch (pick(rng, 0, 3)) {
        case 0: {
            const double lo = uniform(rng, -100.0, 100.0);
            return matchdeg::NumericRange::closed(lo, lo + uniform(rng, 0.0, 50.0));
        }
        case 1:
            return matchdeg::NumericRange::singleton(uniform(rng, -100.0, 100.0));
        case 2:
            return matchdeg::NumericRange::at_least(uniform(rng, -100.0, 100.0));
        default:
            return matchdeg::NumericRange::at_most(uniform(rng, -100.0, 100.0));
    }
}

inline const std::vector<std::string>& discrete_pool() {
    static const std::vector<std::string> pool = {"red",  "green", "blue",
                                                  "gold", "teal",  "gray"};
    return pool;
}

inline std::string random_token(std::mt19937& rng) {
    const auto& pool = discrete_pool();
    return pool[static_cast<size_t>(pick(rng, 0, static_cast<int>(pool.size()) - 1))];
}

inline matchdeg::DiscreteSet random_set(std::mt19937& rng, int max_size) {
    std::set<std::string> values;
    const int target = pick(rng, 1, max_size);
    while (static_cast<int>(values.size()) < target) values.insert(random_token(rng));
    return matchdeg::DiscreteSet(std::move(values));
}

inline matchdeg::InterestLevel random_level(std::mt19937& rng) {
    return matchdeg::InterestLevel{uniform(rng, -1.0, 1.0)};
}

// A search profile with 1..5 items spread over the three kinds; names are
// distinct across kinds, as validation requires.
inline matchdeg::Profile random_search(std::mt19937& rng, std::string owner) {
    enum class Kind { numeric, discrete, interest };
    static const std::vector<std::pair<Kind, std::string>> candidates = {
        {Kind::numeric, "age"},      {Kind::numeric, "height"},
        {Kind::numeric, "income"},   {Kind::numeric, "distance"},
        {Kind::numeric, "rooms"},    {Kind::discrete, "city"},
        {Kind::discrete, "team"},    {Kind::discrete, "language"},
        {Kind::discrete, "genre"},   {Kind::discrete, "grade"},
        {Kind::interest, "tennis"},  {Kind::interest, "chess"},
        {Kind::interest, "hiking"},  {Kind::interest, "jazz"},
        {Kind::interest, "cooking"}};

    auto order = candidates;
    std::shuffle(order.begin(), order.end(), rng);

    matchdeg::Profile profile{matchdeg::OwnerId{std::move(owner)}, {}, {}, {}};
    const int items = pick(rng, 1, 5);
    for (int i = 0; i < items; ++i) {
        const auto& [kind, name] = order[static_cast<size_t>(i)];
        switch (kind) {
            case Kind::numeric:
                profile.numeric.emplace(name, random_range(rng));
                break;
            case Kind::discrete:
                profile.discrete.emplace(name, random_set(rng, 3));
                break;
            case Kind::interest:
                profile.interests.emplace(name, random_level(rng));
                break;
        }
    }
    return profile;
}

// An advert shaped around the given search: most items answered in kind,
// some omitted, some answered with a different kind, plus occasional items
// the search never asked about.
inline matchdeg::Profile random_advert(std::mt19937& rng,
                                       const matchdeg::Profile& search,
                                       std::string owner) {
    matchdeg::Profile advert{matchdeg::OwnerId{std::move(owner)}, {}, {}, {}};

    for (const auto& [name, range] : search.numeric) {
        const int fate = pick(rng, 0, 9);
        if (fate < 7) {
            if (coin(rng, 0.5)) {
                const double lo = range.lower();
                const double hi = range.upper();
                double center = 0.0;
                if (!std::isinf(lo) && !std::isinf(hi)) center = 0.5 * (lo + hi);
                else if (!std::isinf(lo)) center = lo;
                else if (!std::isinf(hi)) center = hi;
                advert.numeric.emplace(
                    name, matchdeg::NumericRange::singleton(center + uniform(rng, -30.0, 30.0)));
            } else {
                advert.numeric.emplace(name, random_range(rng));
            }
        } else if (fate == 7) {
            if (coin(rng, 0.5))
                advert.discrete.emplace(name, matchdeg::DiscreteSet{random_token(rng)});
            else
                advert.interests.emplace(name, random_level(rng));
        }
    }

    for (const auto& [name, set] : search.discrete) {
        const int fate = pick(rng, 0, 9);
        if (fate < 7) {
            std::string value = random_token(rng);
            if (coin(rng, 0.5)) {
                auto it = set.values().begin();
                std::advance(it, pick(rng, 0, static_cast<int>(set.size()) - 1));
                value = *it;
            }
            advert.discrete.emplace(name, matchdeg::DiscreteSet{std::move(value)});
        } else if (fate == 7) {
            if (coin(rng, 0.5))
                advert.numeric.emplace(name, random_range(rng));
            else
                advert.interests.emplace(name, random_level(rng));
        }
    }

    for (const auto& [name, level] : search.interests) {
        (void)level;
        const int fate = pick(rng, 0, 9);
        if (fate < 7) {
            advert.interests.emplace(name, random_level(rng));
        } else if (fate == 7) {
            if (coin(rng, 0.5))
                advert.numeric.emplace(name, random_range(rng));
            else
                advert.discrete.emplace(name, matchdeg::DiscreteSet{random_token(rng)});
        }
    }

    if (coin(rng, 0.4)) advert.numeric.emplace("extra_dial", random_range(rng));
    if (coin(rng, 0.3)) advert.interests.emplace("extra_topic", random_level(rng));
    return advert;
}

}  // namespace generators
