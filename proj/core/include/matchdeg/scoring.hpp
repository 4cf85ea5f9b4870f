#pragma once

#include <matchdeg/profile.hpp>

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace matchdeg {

// Relative width of the transition region at each edge of a numeric range.
// Strictly inside (0, 1); smaller values mean stricter matching.
class FuzzyLevel {
public:
    FuzzyLevel() noexcept : e_(0.1) {}
    explicit FuzzyLevel(double e);

    double value() const noexcept { return e_; }

    friend auto operator<=>(const FuzzyLevel&, const FuzzyLevel&) = default;

private:
    double e_;
};

// Per-item positive weights by kind. A name absent from its map weighs 1.
struct Weights {
    std::map<std::string, double> numeric;
    std::map<std::string, double> discrete;
    std::map<std::string, double> interest;

    bool empty() const noexcept {
        return numeric.empty() && discrete.empty() && interest.empty();
    }

    friend bool operator==(const Weights&, const Weights&) = default;
};

struct MatchConfig {
    FuzzyLevel fuzzy{};
    Weights weights{};
};

enum class ItemKind { numeric, discrete, interest };

std::string to_string(ItemKind kind);

struct ItemScore {
    ItemKind kind;
    double partial;  // in [0, 1]
    double weight;   // > 0

    friend bool operator==(const ItemScore&, const ItemScore&) = default;
};

// Per-item partial scores plus the weighted total. Diagnostics report
// conditions that scored 0 by decision rather than by the formulas, such as
// an item searched and advertised under different kinds.
struct ScoreBreakdown {
    std::map<std::string, ItemScore> per_item;
    double total = 0.0;
    std::vector<std::string> diagnostics;
};

// Fuzzy membership of x in (a, b]: 1 on the plateau, a linear ramp rising
// from 0 at a - e*|a| to 1 at a, a linear ramp falling from 1 at b to 0 at
// b + e*|b|, and 0 beyond the ramps. An endpoint of 0 keeps a hard edge; an
// infinite endpoint has no ramp on its side. An infinite x belongs only to a
// range unbounded on that side. Throws std::invalid_argument when any
// argument is NaN or lower > upper.
double fuzzy_step(double x, double lower, double upper, FuzzyLevel e);

// Matching degree of two numeric ranges: the better of each range's upper
// endpoint measured against the other range. Both ranges must be non-empty;
// callers score an empty range as 0 themselves.
double match_numeric(const NumericRange& search, const NumericRange& advert,
                     FuzzyLevel e);

// 1 when the advertised value is in the searched set, else 0.
double match_discrete(const DiscreteSet& search, const std::string& advert_value);

// Rational affinity kernel over [-1, 1] x [-1, 1]. Equal arguments give 1,
// (0, +-1) gives 0.5, (+-1, 0) gives 0; the value may go negative between.
// The constant c = (1 + sqrt 7)/2 pins those anchor points.
double phi(double x, double y);

// Interest matching degree: phi clamped up to 0, so the result is in [0, 1].
double match_interest(InterestLevel search, InterestLevel advertised);

// Weighted mean of per-item partial scores over the search profile's items.
// A numeric or discrete item the advert lacks scores 0; an interest the
// advert lacks is compared against level 0. An item advertised under a
// different kind scores 0 with a diagnostic, as does an advertised discrete
// entry that is not a single value. Empty ranges and empty sets score 0.
// Throws std::invalid_argument when the search profile has no items or an
// applicable weight is not positive and finite.
ScoreBreakdown total_degree(const Profile& search, const Profile& advert,
                            const MatchConfig& config = {});

}  // namespace matchdeg
