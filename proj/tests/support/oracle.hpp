#pragma once

// Straight-line transcription of the scoring math, written independently of
// the library internals so the two can be checked against each other. Keep
// this file naive: no shared helpers, no clever refactoring.

#include <matchdeg/profile.hpp>
#include <matchdeg/scoring.hpp>

#include <cmath>
#include <string>

namespace oracle {

// Plateau 1 over (a, b], linear shoulders of relative width e on each side.
inline double step(double x, double a, double b, double e) {
    if (std::isinf(x)) {
        if (x < 0.0) return (std::isinf(a) && a < 0.0) ? 1.0 : 0.0;
        return (std::isinf(b) && b > 0.0) ? 1.0 : 0.0;
    }
    if (a < x && x <= b) return 1.0;
    if (x <= a) {
        if (std::isinf(a)) return 0.0;
        const double width = e * (a < 0.0 ? -a : a);
        if (!(width > 0.0)) return 0.0;
        const double shortfall = (a - x) / width;
        return shortfall < 1.0 ? 1.0 - shortfall : 0.0;
    }
    if (std::isinf(b)) return 0.0;
    const double width = e * (b < 0.0 ? -b : b);
    if (!(width > 0.0)) return 0.0;
    const double excess = (x - b) / width;
    return excess < 1.0 ? 1.0 - excess : 0.0;
}

// Either the advertised upper end reaches into the searched range or the
// searched upper end reaches into the advertised one.
inline double numeric(const matchdeg::NumericRange& search,
                      const matchdeg::NumericRange& advert, double e) {
    const double one = step(advert.upper(), search.lower(), search.upper(), e);
    const double two = step(search.upper(), advert.lower(), advert.upper(), e);
    return one > two ? one : two;
}

inline double discrete(const matchdeg::DiscreteSet& search,
                       const std::string& advertised) {
    for (const auto& candidate : search.values())
        if (candidate == advertised) return 1.0;
    return 0.0;
}

inline double interest(double searched, double advertised) {
    const double c = 0.5 * (1.0 + std::sqrt(7.0));
    const double numerator = (c * c - 1.0) * (searched - advertised) * (searched - advertised);
    const double denominator = (c * c - 2.0) + (searched - c * advertised) * (searched - c * advertised);
    const double value = 1.0 - numerator / denominator;
    return value > 0.0 ? value : 0.0;
}

inline double weight_of(const std::map<std::string, double>& table,
                        const std::string& name) {
    auto it = table.find(name);
    return it == table.end() ? 1.0 : it->second;
}

// Weighted mean of the per-item degrees over the items the search names.
inline double total(const matchdeg::Profile& search,
                    const matchdeg::Profile& advert,
                    const matchdeg::MatchConfig& config) {
    const double e = config.fuzzy.value();
    double sum = 0.0;
    double weights = 0.0;

    for (const auto& [name, range] : search.numeric) {
        const double w = weight_of(config.weights.numeric, name);
        double part = 0.0;
        auto it = advert.numeric.find(name);
        if (it != advert.numeric.end() && !range.is_empty() && !it->second.is_empty())
            part = numeric(range, it->second, e);
        sum += w * part;
        weights += w;
    }
    for (const auto& [name, set] : search.discrete) {
        const double w = weight_of(config.weights.discrete, name);
        double part = 0.0;
        auto it = advert.discrete.find(name);
        if (it != advert.discrete.end() && it->second.size() == 1)
            part = discrete(set, *it->second.values().begin());
        sum += w * part;
        weights += w;
    }
    for (const auto& [name, level] : search.interests) {
        const double w = weight_of(config.weights.interest, name);
        double part = 0.0;
        auto it = advert.interests.find(name);
        if (it != advert.interests.end()) {
            part = interest(level.value(), it->second.value());
        } else if (!advert.numeric.count(name) && !advert.discrete.count(name)) {
            // Not advertised at all: matched as indifference, not skipped.
            part = interest(level.value(), 0.0);
        }
        sum += w * part;
        weights += w;
    }

    double result = sum / weights;
    if (result > 1.0) result = 1.0;
    return result;
}

}  // namespace oracle
