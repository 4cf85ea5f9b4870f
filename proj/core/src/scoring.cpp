#include <matchdeg/scoring.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace matchdeg {

FuzzyLevel::FuzzyLevel(double e) : e_(e) {
    if (!(e > 0.0 && e < 1.0))
        throw std::invalid_argument("fuzzy level must be in (0,1)");
}

std::string to_string(ItemKind kind) {
    switch (kind) {
        case ItemKind::numeric: return "numeric";
        case ItemKind::discrete: return "discrete";
        default: return "interest";
    }
}

double fuzzy_step(double x, double lower, double upper, FuzzyLevel e) {
    if (std::isnan(x) || std::isnan(lower) || std::isnan(upper))
        throw std::invalid_argument("fuzzy_step arguments must not be NaN");
    if (lower > upper)
        throw std::invalid_argument("range lower endpoint exceeds upper");

    // An infinite x is in the range only when that side is itself unbounded.
    if (std::isinf(x)) return (x > 0 ? upper == x : lower == x) ? 1.0 : 0.0;
    if (lower < x && x <= upper) return 1.0;

    if (x <= lower) {
        if (std::isinf(lower)) return 0.0;  // degenerate [+inf, +inf]
        const double foot = lower - e.value() * std::fabs(lower);
        // foot == lower collapses the ramp to a hard edge at 0.
        return foot < x ? (x - foot) / (lower - foot) : 0.0;
    }

    if (std::isinf(upper)) return 0.0;  // degenerate [-inf, -inf]
    const double head = upper + e.value() * std::fabs(upper);
    return x <= head ? (head - x) / (head - upper) : 0.0;
}

double match_numeric(const NumericRange& search, const NumericRange& advert,
                     FuzzyLevel e) {
    if (search.is_empty() || advert.is_empty())
        throw std::invalid_argument("match_numeric requires non-empty ranges");
    return std::max(fuzzy_step(advert.upper(), search.lower(), search.upper(), e),
                    fuzzy_step(search.upper(), advert.lower(), advert.upper(), e));
}

double match_discrete(const DiscreteSet& search, const std::string& advert_value) {
    return search.contains(advert_value) ? 1.0 : 0.0;
}

double phi(double x, double y) {
    static const double c = (1.0 + std::sqrt(7.0)) / 2.0;
    static const double c_sq = c * c;
    const double diff = x - y;
    const double skew = x - c * y;
    return 1.0 - (c_sq - 1.0) * (diff * diff) / ((c_sq - 2.0) + skew * skew);
}

double match_interest(InterestLevel search, InterestLevel advertised) {
    return std::max(phi(search.value(), advertised.value()), 0.0);
}

namespace {

double weight_for(const std::map<std::string, double>& weights,
                  const std::string& name) {
    auto it = weights.find(name);
    if (it == weights.end()) return 1.0;
    if (!(it->second > 0.0) || std::isinf(it->second))
        throw std::invalid_argument("weight for \"" + name +
                                    "\" must be a positive finite number");
    return it->second;
}

}  // namespace

ScoreBreakdown total_degree(const Profile& search, const Profile& advert,
                            const MatchConfig& config) {
    if (search.item_count() == 0)
        throw std::invalid_argument("empty search profile");

    ScoreBreakdown out;
    double weighted_sum = 0.0;
    double weight_total = 0.0;

    auto add = [&](const std::string& name, ItemKind kind, double partial,
                   double weight) {
        out.per_item.emplace(name, ItemScore{kind, partial, weight});
        weighted_sum += weight * partial;
        weight_total += weight;
    };
    auto cross_kind = [&](const std::string& name, const char* searched_kind) {
        out.diagnostics.push_back("item \"" + name + "\" is " + searched_kind +
                                  " in the search but a different kind in the "
                                  "advert; scored 0");
    };

    for (const auto& [name, range] : search.numeric) {
        const double weight = weight_for(config.weights.numeric, name);
        double partial = 0.0;
        if (auto it = advert.numeric.find(name); it != advert.numeric.end()) {
            if (!range.is_empty() && !it->second.is_empty())
                partial = match_numeric(range, it->second, config.fuzzy);
        } else if (advert.discrete.count(name) || advert.interests.count(name)) {
            cross_kind(name, "numeric");
        }
        add(name, ItemKind::numeric, partial, weight);
    }

    for (const auto& [name, set] : search.discrete) {
        const double weight = weight_for(config.weights.discrete, name);
        double partial = 0.0;
        if (auto it = advert.discrete.find(name); it != advert.discrete.end()) {
            if (auto value = it->second.single_value())
                partial = match_discrete(set, *value);
            else if (!it->second.empty())
                out.diagnostics.push_back(
                    "advertised discrete attribute \"" + name + "\" holds " +
                    std::to_string(it->second.size()) +
                    " values, expected one; scored 0");
        } else if (advert.numeric.count(name) || advert.interests.count(name)) {
            cross_kind(name, "discrete");
        }
        add(name, ItemKind::discrete, partial, weight);
    }

    for (const auto& [name, level] : search.interests) {
        const double weight = weight_for(config.weights.interest, name);
        auto it = advert.interests.find(name);
        if (it == advert.interests.end() &&
            (advert.numeric.count(name) || advert.discrete.count(name))) {
            cross_kind(name, "interest");
            add(name, ItemKind::interest, 0.0, weight);
            continue;
        }
        // A field the advert does not carry is matched at level 0.
        const InterestLevel advertised =
            it != advert.interests.end() ? it->second : InterestLevel{};
        add(name, ItemKind::interest, match_interest(level, advertised), weight);
    }

    out.total = weighted_sum / weight_total;
    // Summation roundoff must not push a mean of [0,1] values past 1.
    if (out.total > 1.0) out.total = 1.0;
    return out;
}

}  // namespace matchdeg
