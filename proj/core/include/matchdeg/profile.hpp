#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace matchdeg {

// Identifier of a profile owner. Trimmed at construction, never empty,
// compared by exact case-sensitive text equality.
class OwnerId {
public:
    explicit OwnerId(std::string id);

    const std::string& value() const noexcept { return id_; }

    friend auto operator<=>(const OwnerId&, const OwnerId&) = default;

private:
    std::string id_;
};

// Closed interval over the extended reals, or the distinguished empty range.
// Endpoints may be infinite, NaN is rejected, and lower() <= upper() holds
// whenever the range is not empty.
class NumericRange {
public:
    NumericRange() noexcept;  // the empty range

    static NumericRange closed(double lower, double upper);
    static NumericRange singleton(double value);
    static NumericRange at_least(double lower);  // [lower, +inf]
    static NumericRange at_most(double upper);   // [-inf, upper]
    static NumericRange all();                   // [-inf, +inf]
    static NumericRange empty() noexcept;

    bool is_empty() const noexcept { return empty_; }
    double lower() const;  // throws std::logic_error on the empty range
    double upper() const;

    // Closed containment; the empty range contains nothing.
    bool contains(double x) const noexcept;

    friend bool operator==(const NumericRange&, const NumericRange&) = default;

private:
    NumericRange(double lower, double upper, bool empty) noexcept;

    double lower_;
    double upper_;
    bool empty_;
};

// Immutable set of non-empty text values with exact-equality membership.
class DiscreteSet {
public:
    DiscreteSet() = default;
    DiscreteSet(std::initializer_list<std::string> values);
    explicit DiscreteSet(std::vector<std::string> values);
    explicit DiscreteSet(std::set<std::string> values);

    const std::set<std::string>& values() const noexcept { return values_; }
    bool contains(const std::string& value) const;
    std::size_t size() const noexcept { return values_.size(); }
    bool empty() const noexcept { return values_.empty(); }

    // The sole element when the set is a singleton, otherwise nullopt.
    std::optional<std::string> single_value() const;

    friend bool operator==(const DiscreteSet&, const DiscreteSet&) = default;

private:
    std::set<std::string> values_;
};

// Interest strength in [-1, 1]: -1 aversion, 0 indifference, 1 enthusiasm.
// Out-of-range values are rejected, not clamped.
class InterestLevel {
public:
    InterestLevel() noexcept : level_(0.0) {}
    explicit InterestLevel(double level);

    double value() const noexcept { return level_; }

    friend auto operator<=>(const InterestLevel&, const InterestLevel&) = default;

private:
    double level_;
};

enum class Role { search, advertising };

std::string to_string(Role role);
std::optional<Role> role_from_string(std::string_view text);

// An owner plus named items of three kinds. In the search role the items
// state requirements; in the advertising role they state what is offered.
struct Profile {
    OwnerId owner;
    std::map<std::string, NumericRange> numeric;
    std::map<std::string, DiscreteSet> discrete;
    std::map<std::string, InterestLevel> interests;

    std::size_t item_count() const noexcept {
        return numeric.size() + discrete.size() + interests.size();
    }

    friend bool operator==(const Profile&, const Profile&) = default;
};

struct ValidationIssue {
    std::string path;  // dotted field path, e.g. "interests.tennis"; may be empty
    std::string message;

    friend bool operator==(const ValidationIssue&, const ValidationIssue&) = default;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const noexcept { return issues.empty(); }
};

// Checks the invariants the types cannot enforce on their own: item names are
// non-empty and trimmed, a name appears in at most one of the three maps, and
// in the advertising role every discrete set holds at most one value. With no
// role, only the role-independent checks run.
ValidationReport validate_profile(const Profile& profile,
                                  std::optional<Role> role = std::nullopt);

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(ValidationReport report);

    const ValidationReport& report() const noexcept { return report_; }

private:
    ValidationReport report_;
};

class StencilParseError : public std::runtime_error {
public:
    StencilParseError(const std::string& message, std::size_t position);

    // Byte offset into the input where parsing failed.
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// One parsed shorthand item: the attribute name plus either a numeric range
// or a discrete set.
struct StencilItem {
    std::string name;
    std::variant<NumericRange, DiscreteSet> value;
};

// Shorthand notation for single profile items:
//   "age = 25"                    -> numeric [25, 25]
//   "name = Tailor"               -> discrete {Tailor}
//   "height > 180", ">= 180"      -> numeric [180, +inf]  (">" is inclusive)
//   "age < 40", "<= 40"           -> numeric [-inf, 40]
//   "age in [20, 40]"             -> numeric [20, 40]
//   "eye_color in {blue, green}"  -> discrete {blue, green}
// Throws StencilParseError carrying the byte offset of the problem.
StencilItem parse_stencil_shorthand(std::string_view text);

}  // namespace matchdeg
